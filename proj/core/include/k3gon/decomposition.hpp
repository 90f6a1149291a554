#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3gon/linear_system.hpp"

namespace k3gon {

/// L = M + N with h0(M) >= 2, h0(N) >= 2 and k = M.N.
struct Decomposition {
    DivClass M;
    DivClass N;
    Int k = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Order used to pick the representative of an unordered pair {N, L - N}:
/// smaller L-degree first, then smaller A-degree, then lexicographic.
bool precedes(const DivClass& x, const DivClass& y, const PolarizedDatum& datum);

/// Every canonical split L = M + N with N^2 >= 0, h0(N) >= 2, h0(M) >= 2 and
/// M.N <= k_max, sorted by (k, precedes on N).
///
/// N is the representative of {N, M}: if M^2 >= 0 as well, N precedes M.
std::vector<Decomposition> admissible_splits(const PolarizedDatum& datum, Int k_max);

/// floor((g + 3)/2) + 1; no gonality exceeds floor((g + 3)/2).
Int default_k_max(Int genus);

struct MinimalDecompositions {
    Int k_max = 0;
    std::optional<Int> k_min;
    std::vector<Decomposition> minimizers;
};

MinimalDecompositions minimal_decompositions(const PolarizedDatum& datum,
                                             std::optional<Int> k_max = std::nullopt);

/// Outcome (a): the curves in |L| carry a pencil of degree <= k.
struct CaseA {
    enum class Kind {
        EllipticPencil,        // E^2 = 0 with E.L <= k
        IsotropicPencil,       // N'^2 = 0 and N'.L = k
        SmallerDecomposition,  // contradicts minimality of k
        CanonicalPencil,       // M ~ N bpf, R' = 0
    };
    Kind kind;
    std::optional<DivClass> pencil;
    std::optional<Decomposition> smaller;
};

/// Both parts satisfy the normalized properties and O_D(M') is base point free.
struct Normalized {
    DivClass M;
    DivClass N;
};

/// Outcome (b): M' = N' + Gamma with Gamma a (-2)-curve, Gamma.N' = 1, L^2 = 4k - 2.
struct CaseB {
    DivClass gamma;
};

const char* case_a_kind_name(CaseA::Kind kind);

struct NormalizationOutcome {
    std::variant<CaseA, Normalized, CaseB> result;
    Decomposition start;  // (M0, N0) after orienting M0.L >= N0.L, h0(N0 - M0) = 0
    std::vector<DivClass> moved_roots;
    DivClass M_final;
    DivClass N_final;

    const char* tag() const;
};

/// Runs the normalization loop on a minimal decomposition.
///
/// Throws PreconditionViolated if (M0, N0) is not a decomposition of L and
/// NotMinimal if a decomposition with smaller k exists.
NormalizationOutcome normalize(const PolarizedDatum& datum, const DivClass& M0, const DivClass& N0);

/// The five properties a normalized pair (M', N') must have.
struct NormalizedChecklist {
    bool dominates_start = false;     // M' - M0 = N0 - N' is a sum of moved roots, M'.N' = k0
    bool squares_ordered = false;     // M'^2 >= N'^2 > 0
    bool n_globally_generated = false;  // N' bpf with h0(N') >= 2
    bool h1_vanishes = false;         // h1(M') = h1(N') = 0 and the root test passes for both
    bool base_divisor_on_L = false;   // every effective root Gamma with Gamma.M' < 0 has Gamma.L = 0

    bool all() const {
        return dominates_start && squares_ordered && n_globally_generated && h1_vanishes &&
               base_divisor_on_L;
    }
};

NormalizedChecklist check_normalized(const PolarizedDatum& datum, const NormalizationOutcome& outcome);

struct Prop23Checklist {
    bool m_equals_n = false;
    // c6: M.L >= N.L and h0(N - M) = 0 (skipped when M = N)
    bool c6 = false;
    Int m_dot_L = 0;
    Int n_dot_L = 0;
    Int h0_n_minus_m = 0;
    // c7: M is not N + Delta with Delta an effective root, Delta.N = 1
    bool c7 = false;
    std::optional<DivClass> c7_witness;
    // c10: L^2 >= 4d - 2 and h0(M - N) > 0
    bool c10 = false;
    Int h0_m_minus_n = 0;
    // c11: M^2 > 0 and N^2 > 0
    bool c11 = false;
    // c8 and c9 concern the curves themselves and are not computed
    bool c8_implied_by_c7 = false;
    bool c9_not_computed = true;
};

Prop23Checklist prop23_conditions(const PolarizedDatum& datum, const DivClass& M, const DivClass& N,
                                  Int d);

struct IncidenceReport {
    Int genus = 0;
    Int dim_L = 0;              // dim |L| = g
    Int dim_L_minus_Z = 0;      // dim |L (x) I_Z| = g - d + 1
    Int dim_incidence = 0;      // dim I_{L,N,d} = dim |L| + 1
    Int dim_N = 0;              // N^2/2 + 1
    Int dim_fibre = 0;          // dim |O_D(M)| = d - N^2/2 - 1
    Int dim_incidence_N = 0;    // dim |N| + dim |O_D(M)| = d
    bool positive_residual = false;  // dim |L (x) I_Z| > 0
};

IncidenceReport incidence_dimension_report(const PolarizedDatum& datum, const DivClass& N, Int d);

}  // namespace k3gon
