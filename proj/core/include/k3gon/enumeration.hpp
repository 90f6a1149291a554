#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "k3gon/lattice.hpp"

namespace k3gon {

/// Closed integer interval; a missing end is unbounded.
struct IntRange {
    std::optional<Int> lo;
    std::optional<Int> hi;

    static IntRange exactly(Int v) { return {v, v}; }
    static IntRange between(Int a, Int b) { return {a, b}; }
    static IntRange at_least(Int a) { return {a, std::nullopt}; }
    static IntRange at_most(Int b) { return {std::nullopt, b}; }
    static IntRange all() { return {}; }

    bool contains(Int v) const { return (!lo || v >= *lo) && (!hi || v <= *hi); }
    bool bounded() const { return lo.has_value() && hi.has_value(); }
    bool empty() const { return lo && hi && *lo > *hi; }
};

/// {x : x.reference in degree, x^2 in square, x primitive if requested}.
struct EnumQuery {
    DivClass reference;
    IntRange degree;
    IntRange square;
    bool primitive_only = false;
};

struct EnumLimits {
    /// Cap on lattice points visited by the search tree, summed over slices.
    std::uint64_t candidate_budget = 10'000'000;
};

struct EnumStats {
    std::uint64_t visited = 0;
    std::uint64_t slices = 0;
};

/// Every class satisfying the query, sorted lexicographically.
///
/// For each degree t the solutions lie on the affine slice x.R = t. Writing
/// x = (t/R^2) R + x', the component x' lives in the negative definite
/// complement of R and satisfies -x'^2 = t^2/R^2 - x^2 <= t^2/R^2 - square.lo,
/// so each slice is a short-vector problem on an integral basis of R-perp,
/// solved by a depth-first Fincke-Pohst search over an exact LDL factor.
///
/// Throws InvalidQuery when R^2 <= 0 or a range is empty, UnboundedQuery when
/// the degree range or the lower square bound is missing, and BudgetExceeded
/// when the candidate budget is hit.
std::vector<DivClass> classes_matching(const EnumQuery& q, const Lattice& lat,
                                       const EnumLimits& limits = {},
                                       EnumStats* stats = nullptr);

/// Roots (x^2 = -2) with 1 <= x.A <= max_degree.
std::vector<DivClass> roots_positive(const Lattice& lat, const DivClass& A, Int max_degree,
                                     const EnumLimits& limits = {});

/// Primitive isotropic classes with 1 <= x.A <= max_degree.
std::vector<DivClass> elliptic_classes(const Lattice& lat, const DivClass& A, Int max_degree,
                                       const EnumLimits& limits = {});

/// Membership predicate of a query, evaluated directly.
bool satisfies(const EnumQuery& q, const Lattice& lat, const DivClass& x);

}  // namespace k3gon
