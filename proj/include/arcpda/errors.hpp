#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arcpda {

// Raised when a construction would exceed the desk-scale vertex budget and
// the caller did not opt in to large builds.
class GuardrailError : public std::runtime_error {
public:
    explicit GuardrailError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input fails a verification oracle (e.g. a coloring handed to
// the array builder that is not injective).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kMaxBuildVertices = 1 << 20;

}  // namespace arcpda
