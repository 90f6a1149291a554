#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "k3gon/classifier.hpp"

namespace k3gon {

// Brute-force references. Nothing here prunes beyond the coordinate box, so
// each routine can be audited by reading it.

struct BoxQuery {
    Int radius = 1;
    EnumQuery predicate;
};

/// Every class with all |x_i| <= radius satisfying the predicate, in
/// lexicographic order. Throws BudgetExceeded if the box has more points than
/// the candidate budget.
std::vector<DivClass> box_classes(const Lattice& lat, const BoxQuery& q, const EnumLimits& limits = {});

/// Inequality chain behind a certified radius.
///
/// With R the reference and P(x) = 2 (x.R)^2 - R^2 x^2, P is positive definite
/// on a hyperbolic lattice. A solution has P(x) <= bound, where
/// bound = 2 max(t_lo^2, t_hi^2) - R^2 s_lo, and |x_i|^2 <= bound * (P^-1)_ii.
struct RadiusCertificate {
    Int radius = 1;
    Int reference_square = 0;
    Int max_degree_square = 0;
    Int square_lo = 0;
    Rational bound;
    std::vector<Rational> inverse_diagonal;
    std::vector<Int> axis_radius;

    std::string describe() const;
};

/// Throws UnboundedQuery for a missing degree end or square lower end and
/// InvalidQuery when reference^2 <= 0.
RadiusCertificate certified_radius(const Lattice& lat, const EnumQuery& q);

struct CliffordOracleResult {
    Int c = 0;
    std::vector<DivClass> witnesses;
};

CliffordOracleResult clifford_oracle(const PolarizedDatum& datum);

struct RandomDatumOptions {
    std::size_t min_rank = 2;
    std::size_t max_rank = 3;
    Int max_entry = 8;
    Int max_L_square = 60;
    Int max_class_entry = 3;
    Budget budget{2'000, 2'000'000};
    int max_attempts = 100'000;
};

/// Rejection sampler for valid data. Returns nullopt if no datum was accepted
/// within max_attempts.
std::optional<PolarizedDatum> random_datum(std::mt19937_64& rng, const RandomDatumOptions& opts = {});

/// Random symmetric even matrix of hyperbolic signature.
IntMatrix random_hyperbolic_gram(std::mt19937_64& rng, std::size_t rank, Int max_entry);

/// Random matrix of determinant +-1, a product of elementary moves.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t rank, int moves = 6);

}  // namespace k3gon
