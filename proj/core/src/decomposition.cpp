#include "k3gon/decomposition.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace k3gon {

namespace {

std::tuple<Int, Int, const std::vector<Int>&> order_key(const DivClass& x,
                                                       const PolarizedDatum& datum) {
    return {datum.lattice().pair(x, datum.polarization()), datum.degree(x), x.coords};
}

void require_split(const PolarizedDatum& datum, const DivClass& M, const DivClass& N) {
    if (M + N != datum.polarization())
        throw PreconditionViolated("M + N = " + to_string(M + N) + " is not L = " +
                                   to_string(datum.polarization()));
}

}  // namespace

bool precedes(const DivClass& x, const DivClass& y, const PolarizedDatum& datum) {
    return order_key(x, datum) < order_key(y, datum);
}

const char* case_a_kind_name(CaseA::Kind kind) {
    switch (kind) {
        case CaseA::Kind::EllipticPencil: return "EllipticPencil";
        case CaseA::Kind::IsotropicPencil: return "IsotropicPencil";
        case CaseA::Kind::SmallerDecomposition: return "SmallerDecomposition";
        case CaseA::Kind::CanonicalPencil: return "CanonicalPencil";
    }
    return "?";
}

const char* NormalizationOutcome::tag() const {
    if (std::holds_alternative<CaseA>(result)) return "CaseA";
    if (std::holds_alternative<CaseB>(result)) return "CaseB";
    return "Normalized";
}

Int default_k_max(Int genus) { return (genus + 3) / 2 + 1; }

std::vector<Decomposition> admissible_splits(const PolarizedDatum& datum, Int k_max) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    const Int L2 = lat.square(L);

    std::map<DivClass, Decomposition> found;
    // h0(N) >= 2 and h0(L - N) >= 2 force 0 <= N.L <= L^2 since L is nef;
    // Hodge index gives N^2 <= (N.L)^2 / L^2.
    for (Int t = 0; t <= L2; ++t) {
        Int s_hi = to_int64(floor(Rational(mpz_class(static_cast<long>(t)) * t,
                                           mpz_class(static_cast<long>(L2)))));
        Int s_lo = std::max<Int>(0, t - k_max);
        if (s_lo > s_hi) continue;
        auto xs = classes_matching({L, IntRange::exactly(t), IntRange::between(s_lo, s_hi), false},
                                   lat, datum.budget().limits());
        for (auto& X : xs) {
            DivClass M = L - X;
            if (datum.degree(X) <= 0 || datum.degree(M) <= 0) continue;
            if (h0(X, datum) < 2 || h0(M, datum) < 2) continue;
            Int k = lat.pair(X, M);
            if (lat.square(M) >= 0 && precedes(M, X, datum))
                found.insert_or_assign(M, Decomposition{X, M, k});
            else
                found.insert_or_assign(X, Decomposition{M, X, k});
        }
    }
    std::vector<Decomposition> out;
    out.reserve(found.size());
    for (auto& [n, d] : found) out.push_back(std::move(d));
    std::sort(out.begin(), out.end(), [&](const Decomposition& a, const Decomposition& b) {
        if (a.k != b.k) return a.k < b.k;
        return precedes(a.N, b.N, datum);
    });
    return out;
}

MinimalDecompositions minimal_decompositions(const PolarizedDatum& datum, std::optional<Int> k_max) {
    MinimalDecompositions out;
    out.k_max = k_max ? *k_max : default_k_max(genus_of(datum.polarization(), datum.lattice()));
    if (out.k_max < 2) throw PreconditionViolated("k_max must be at least 2");
    auto splits = admissible_splits(datum, out.k_max);
    if (splits.empty()) return out;
    out.k_min = splits.front().k;
    for (auto& s : splits)
        if (s.k == *out.k_min) out.minimizers.push_back(std::move(s));
    return out;
}

NormalizationOutcome normalize(const PolarizedDatum& datum, const DivClass& M0, const DivClass& N0) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    require_split(datum, M0, N0);
    if (h0(M0, datum) < 2 || h0(N0, datum) < 2)
        throw PreconditionViolated("both parts of a decomposition need h0 >= 2");
    const Int k = lat.pair(M0, N0);
    auto mins = minimal_decompositions(datum, std::max<Int>(k, 2));
    if (mins.k_min && *mins.k_min < k)
        throw NotMinimal("k = " + std::to_string(k) + " but a decomposition with k = " +
                         std::to_string(*mins.k_min) + " exists");

    DivClass M = M0, N = N0;
    if (M != N) {
        Int ml = lat.pair(M, L), nl = lat.pair(N, L);
        if (ml < nl || (ml == nl && h0(N - M, datum) > 0)) std::swap(M, N);
    }
    NormalizationOutcome out{CaseA{CaseA::Kind::CanonicalPencil, {}, {}}, {M, N, k}, {}, M, N};

    auto finish = [&](auto result) {
        out.result = std::move(result);
        out.M_final = M;
        out.N_final = N;
        return out;
    };

    if (M == N) {
        Witnessed bpf = is_base_point_free(N, datum);
        if (!bpf) return finish(CaseA{CaseA::Kind::EllipticPencil, bpf.witness, {}});
        return finish(CaseA{CaseA::Kind::CanonicalPencil, {}, {}});
    }

    // Move (-2)-curves Gamma with Gamma.N < 0 from N to M; at minimal k each
    // satisfies Gamma.N = -1, Gamma.M = 1 and the product M.N stays k.
    while (true) {
        Witnessed nef = is_nef(N, datum);
        if (nef) break;
        if (!nef.witness) throw InternalInconsistency("non-nef effective class without a root witness");
        const DivClass gamma = *nef.witness;
        if (lat.pair(gamma, N) != -1 || lat.pair(gamma, M) != 1) {
            Decomposition smaller{M + gamma, N - gamma, lat.pair(M + gamma, N - gamma)};
            if (smaller.k >= k) throw InternalInconsistency("root move did not lower k");
            return finish(CaseA{CaseA::Kind::SmallerDecomposition, {}, smaller});
        }
        M += gamma;
        N -= gamma;
        out.moved_roots.push_back(gamma);
    }

    if (lat.square(N) == 0) return finish(CaseA{CaseA::Kind::IsotropicPencil, N, {}});
    Witnessed bpf = is_base_point_free(N, datum);
    if (!bpf) return finish(CaseA{CaseA::Kind::EllipticPencil, bpf.witness, {}});

    // Base divisor of |M'| must be orthogonal to L.
    WeylReduction red = weyl_reduce(M, datum);
    DivClass base = M - red.reduced;
    if (lat.pair(base, L) > 0) {
        const DivClass& moving = red.reduced;
        if (lat.square(moving) == 0) {
            Int l = content(moving);
            DivClass e = moving;
            for (auto& c : e.coords) c /= l;
            return finish(CaseA{CaseA::Kind::EllipticPencil, e, {}});
        }
        Decomposition smaller{moving, N + base, lat.pair(moving, N + base)};
        if (smaller.k >= k) throw InternalInconsistency("base divisor meets L but k did not drop");
        return finish(CaseA{CaseA::Kind::SmallerDecomposition, {}, smaller});
    }

    DivClass R = M - N;
    if (lat.square(R) == -2 && lat.pair(R, N) == 1 && datum.degree(R) > 0) {
        if (lat.square(L) != 4 * k - 2)
            throw InternalInconsistency("case (b) reached with L^2 != 4k - 2");
        return finish(CaseB{R});
    }
    return finish(Normalized{M, N});
}

NormalizedChecklist check_normalized(const PolarizedDatum& datum, const NormalizationOutcome& outcome) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    const DivClass& M = outcome.M_final;
    const DivClass& N = outcome.N_final;
    NormalizedChecklist c;

    DivClass moved = DivClass::zero(lat.rank());
    for (const auto& r : outcome.moved_roots) moved += r;
    c.dominates_start = (M - outcome.start.M == moved) && (outcome.start.N - N == moved) &&
                        lat.pair(M, N) == outcome.start.k;

    Int m2 = lat.square(M), n2 = lat.square(N);
    c.squares_ordered = m2 >= n2 && n2 > 0;
    c.n_globally_generated = bool(is_base_point_free(N, datum)) && h0(N, datum) >= 2;
    if (m2 >= 0 && n2 >= 0)
        c.h1_vanishes = h1(M, datum) == 0 && h1(N, datum) == 0 &&
                        bool(h1_vanishing_root_test(M, datum)) &&
                        bool(h1_vanishing_root_test(N, datum));

    c.base_divisor_on_L = true;
    if (m2 > 0) {
        Int bound = wall_degree_bound(M, datum);
        for (const auto& r : datum.effective_roots(bound))
            if (lat.pair(r, M) < 0 && lat.pair(r, L) != 0) c.base_divisor_on_L = false;
    } else {
        c.base_divisor_on_L = false;
    }
    return c;
}

Prop23Checklist prop23_conditions(const PolarizedDatum& datum, const DivClass& M, const DivClass& N,
                                  Int d) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    require_split(datum, M, N);
    if (lat.pair(M, N) != d)
        throw PreconditionViolated("M.N = " + std::to_string(lat.pair(M, N)) + " is not d = " +
                                   std::to_string(d));
    Prop23Checklist c;
    c.m_equals_n = M == N;
    c.m_dot_L = lat.pair(M, L);
    c.n_dot_L = lat.pair(N, L);
    c.h0_n_minus_m = h0(N - M, datum);
    c.c6 = c.m_equals_n || (c.m_dot_L >= c.n_dot_L && c.h0_n_minus_m == 0);

    DivClass delta = M - N;
    bool c7_violated = lat.square(delta) == -2 && datum.degree(delta) > 0 && lat.pair(delta, N) == 1;
    c.c7 = !c7_violated;
    if (c7_violated) c.c7_witness = delta;

    c.h0_m_minus_n = h0(M - N, datum);
    c.c10 = lat.square(L) >= 4 * d - 2 && c.h0_m_minus_n > 0;
    c.c11 = lat.square(M) > 0 && lat.square(N) > 0;
    c.c8_implied_by_c7 = c.c7;
    return c;
}

IncidenceReport incidence_dimension_report(const PolarizedDatum& datum, const DivClass& N, Int d) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    Int n2 = lat.square(N);
    if (n2 < 0) throw PreconditionViolated("incidence report needs N^2 >= 0");
    if (lat.pair(L - N, N) != d)
        throw PreconditionViolated("(L - N).N = " + std::to_string(lat.pair(L - N, N)) +
                                   " is not d = " + std::to_string(d));
    IncidenceReport r;
    r.genus = genus_of(L, lat);
    r.dim_L = h0(L, datum) - 1;
    r.dim_L_minus_Z = r.dim_L - d + 1;
    r.dim_incidence = r.dim_L + 1;
    r.dim_N = n2 / 2 + 1;
    r.dim_fibre = d - n2 / 2 - 1;
    r.dim_incidence_N = r.dim_N + r.dim_fibre;
    r.positive_residual = r.dim_L_minus_Z > 0;
    return r;
}

}  // namespace k3gon
