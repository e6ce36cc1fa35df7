#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optisr {

/// Malformed input: bad file syntax, unknown vertex, invalid instance.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state-space search visited more states than allowed.
class StateBudgetExceeded : public std::runtime_error {
public:
    explicit StateBudgetExceeded(std::size_t budget)
        : std::runtime_error("state budget exceeded (" + std::to_string(budget) + " states)")
        , budget_(budget)
    {
    }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// An exact solver refused an input above its size guard.
class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The chordal solver was handed a graph without a perfect elimination ordering.
class NotChordal : public InvalidInput {
public:
    NotChordal()
        : InvalidInput("graph is not chordal; use the bfs solver instead")
    {
    }
};

/// Broken internal invariant. Never expected; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace optisr
