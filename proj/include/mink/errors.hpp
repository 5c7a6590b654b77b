#pragma once

#include <stdexcept>
#include <string>

namespace mink {

// Raised when a request is mathematically undefined for the given data:
// degenerate spans, lightlike normalization, opposite time orientations,
// parameters outside a formula's validity window, vanishing curvature.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed input: unreadable files, bad CSV layout, mismatched
// array lengths, non-monotone parameter grids, unknown enum spellings.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mink
