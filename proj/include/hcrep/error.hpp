#pragma once

#include <stdexcept>
#include <string>

namespace hcrep {

/// Malformed or contract-violating input (bad Cartan matrix, non-root, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured safety bound (Weyl group order, enumeration depth) was hit.
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(const std::string& what, std::size_t partial_count)
        : std::runtime_error(what), partial_count_(partial_count) {}
    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t partial_count_;
};

/// An internal invariant failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hcrep
