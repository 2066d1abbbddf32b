#pragma once

#include "arcpda/cayley.hpp"
#include "arcpda/coloring.hpp"
#include "arcpda/digraph.hpp"
#include "arcpda/errors.hpp"
#include "arcpda/families.hpp"
#include "arcpda/gf65536.hpp"
#include "arcpda/graph.hpp"
#include "arcpda/hamming.hpp"
#include "arcpda/mds.hpp"
#include "arcpda/pda.hpp"
#include "arcpda/pda_io.hpp"
#include "arcpda/radix.hpp"
#include "arcpda/rational.hpp"
#include "arcpda/simulator.hpp"
#include "arcpda/tables.hpp"
