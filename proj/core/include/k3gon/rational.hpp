#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace k3gon {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Renders an integer as "p" and a proper fraction as "p/q".
std::string to_string(const Rational& q);

mpz_class floor(const Rational& q);
mpz_class ceil(const Rational& q);

/// floor(sqrt(q)) for q >= 0.
mpz_class floor_sqrt(const Rational& q);

/// Counts of positive, negative and zero entries in a diagonalization by
/// congruence (Sylvester's law of inertia).
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Exact inertia of a symmetric rational matrix.
///
/// Symmetric Gaussian elimination with congruence moves: when every remaining
/// diagonal entry vanishes but an off-diagonal entry a_ij does not, row/column j
/// is added to row/column i, producing the pivot 2 a_ij.
Inertia inertia(RatMatrix m);

/// q(z) = sum_i diag[i] * (z_i + sum_{j>i} upper[i][j] z_j)^2.
struct LdlFactor {
    RatVector diag;
    RatMatrix upper;
};

/// LDL^T of a positive definite matrix. Throws InternalInconsistency on a
/// non-positive pivot.
LdlFactor ldl_positive_definite(const RatMatrix& m);

/// Solves m x = b for a nonsingular m by Gauss-Jordan elimination.
RatVector solve(RatMatrix m, RatVector b);

/// Inverse of a nonsingular matrix by Gauss-Jordan elimination.
RatMatrix inverse(RatMatrix m);

bool fits_int64(const mpz_class& z);
std::int64_t to_int64(const mpz_class& z);

}  // namespace k3gon
