#include "k3gon/linear_system.hpp"

#include <algorithm>

namespace k3gon {

namespace {

void require_degree_budget(Int bound, const Budget& budget, const char* what) {
    if (bound > budget.max_degree)
        throw BudgetExceeded(std::string(what) + " needs A-degree up to " + std::to_string(bound) +
                             ", above max_degree_budget " + std::to_string(budget.max_degree));
}

// Sort by (key, coords).
template <class Key>
void sort_by_key(std::vector<DivClass>& xs, Key key) {
    std::vector<std::pair<Int, DivClass>> tagged;
    tagged.reserve(xs.size());
    for (auto& x : xs) tagged.emplace_back(key(x), std::move(x));
    std::sort(tagged.begin(), tagged.end());
    xs.clear();
    for (auto& [k, x] : tagged) xs.push_back(std::move(x));
}

}  // namespace

const char* kind_name(DatumError::Kind kind) {
    switch (kind) {
        case DatumError::Kind::AmpleNotPositive: return "AmpleNotPositive";
        case DatumError::Kind::RootOrthogonalToAmple: return "RootOrthogonalToAmple";
        case DatumError::Kind::PolarizationNotBig: return "PolarizationNotBig";
        case DatumError::Kind::PolarizationNotNef: return "PolarizationNotNef";
        case DatumError::Kind::PolarizationNotBpf: return "PolarizationNotBpf";
    }
    return "?";
}

DatumError::DatumError(Kind kind, const std::string& detail, std::optional<DivClass> witness)
    : Error(std::string(kind_name(kind)) + ": " + detail +
            (witness ? " (witness " + to_string(*witness) + ")" : std::string())),
      kind_(kind),
      witness_(std::move(witness)) {}

std::optional<Int> hodge_wall_bound(const Lattice& lat, const DivClass& A, const DivClass& x) {
    Int x2 = lat.square(x);
    Int xa = lat.pair(x, A);
    Int a2 = lat.square(A);
    if (x2 <= 0 || xa <= 0 || a2 <= 0) return std::nullopt;
    mpz_class rhs = 2 * (mpz_class(static_cast<long>(xa)) * xa -
                         mpz_class(static_cast<long>(x2)) * a2);
    if (rhs <= 0) return Int{0};
    // largest a with a^2 * x2 < rhs
    Rational v(rhs, mpz_class(static_cast<long>(x2)));
    v.canonicalize();
    mpz_class a = floor_sqrt(v);
    if (Rational(a * a) >= v) a -= 1;
    if (a < 0) a = 0;
    return to_int64(a);
}

PolarizedDatum::PolarizedDatum(std::shared_ptr<const Lattice> lat, DivClass ample, DivClass L,
                               Budget budget)
    : lat_(std::move(lat)), ample_(std::move(ample)), L_(std::move(L)), budget_(budget) {}

PolarizedDatum PolarizedDatum::validate(Lattice lat, DivClass ample, DivClass L, Budget budget) {
    if (ample.rank() != lat.rank()) throw DimensionMismatch(lat.rank(), ample.rank());
    if (L.rank() != lat.rank()) throw DimensionMismatch(lat.rank(), L.rank());
    using K = DatumError::Kind;

    Int a2 = lat.square(ample);
    if (a2 <= 0)
        throw DatumError(K::AmpleNotPositive, "A^2 = " + std::to_string(a2) + " is not positive");

    auto orth = classes_matching({ample, IntRange::exactly(0), IntRange::exactly(-2), false}, lat,
                                 budget.limits());
    if (!orth.empty())
        throw DatumError(K::RootOrthogonalToAmple, "a root is orthogonal to A", orth.front());

    Int l2 = lat.square(L);
    if (l2 <= 0)
        throw DatumError(K::PolarizationNotBig, "L^2 = " + std::to_string(l2) + " is not positive");
    Int la = lat.pair(L, ample);
    if (la <= 0)
        throw DatumError(K::PolarizationNotNef,
                         "L.A = " + std::to_string(la) + " places L outside the positive cone");

    Int cache = std::max<Int>(la, *hodge_wall_bound(lat, ample, L));
    require_degree_budget(cache, budget, "root table");

    PolarizedDatum datum(std::make_shared<const Lattice>(std::move(lat)), std::move(ample),
                         std::move(L), budget);
    auto roots = roots_positive(datum.lattice(), datum.ample(), cache, budget.limits());
    sort_by_key(roots, [&](const DivClass& r) { return datum.degree(r); });
    datum.cached_degree_ = cache;
    datum.root_cache_ = std::make_shared<const std::vector<DivClass>>(std::move(roots));

    Witnessed nef = is_nef(datum.polarization(), datum);
    if (!nef) throw DatumError(K::PolarizationNotNef, "a root has negative degree on L", nef.witness);
    Witnessed bpf = is_base_point_free(datum.polarization(), datum);
    if (!bpf)
        throw DatumError(K::PolarizationNotBpf, "an elliptic pencil has degree 1 on L", bpf.witness);
    return datum;
}

PolarizedDatum::RootView PolarizedDatum::effective_roots(Int max_degree) const {
    if (max_degree <= cached_degree_) {
        auto end = std::find_if(root_cache_->begin(), root_cache_->end(),
                                [&](const DivClass& r) { return degree(r) > max_degree; });
        return RootView(root_cache_, static_cast<std::size_t>(end - root_cache_->begin()));
    }
    require_degree_budget(max_degree, budget_, "root search");
    auto roots = roots_positive(*lat_, ample_, max_degree, budget_.limits());
    sort_by_key(roots, [&](const DivClass& r) { return degree(r); });
    std::size_t n = roots.size();
    return RootView(std::make_shared<const std::vector<DivClass>>(std::move(roots)), n);
}

Int wall_degree_bound(const DivClass& x, const PolarizedDatum& datum) {
    Int xa = datum.degree(x);
    if (xa <= 0) return 0;
    Int x2 = datum.lattice().square(x);
    if (x2 > 0) return *hodge_wall_bound(datum.lattice(), datum.ample(), x);
    return xa;
}

std::optional<DivClass> first_negative_root(const DivClass& x, const PolarizedDatum& datum,
                                            Int max_degree) {
    for (const auto& r : datum.effective_roots(max_degree))
        if (datum.lattice().pair(r, x) < 0) return r;
    return std::nullopt;
}

Witnessed is_nef(const DivClass& x, const PolarizedDatum& datum) {
    if (x.is_zero()) return {};
    Int xa = datum.degree(x);
    if (xa <= 0) return {false, std::nullopt};
    Int x2 = datum.lattice().square(x);
    Int bound = x2 < 0 ? xa : wall_degree_bound(x, datum);
    auto w = first_negative_root(x, datum, bound);
    if (w) return {false, w};
    if (x2 < 0) return {false, std::nullopt};
    return {};
}

Witnessed is_base_point_free(const DivClass& x, const PolarizedDatum& datum) {
    if (!is_nef(x, datum)) return {false, std::nullopt};
    if (datum.lattice().square(x) == 0) return {};
    auto cands = classes_matching({x, IntRange::exactly(1), IntRange::exactly(0), false},
                                  datum.lattice(), datum.budget().limits());
    std::erase_if(cands, [&](const DivClass& e) { return datum.degree(e) <= 0; });
    if (cands.empty()) return {};
    sort_by_key(cands, [&](const DivClass& e) { return datum.degree(e); });
    return {false, cands.front()};
}

Witnessed is_ample(const DivClass& x, const PolarizedDatum& datum) {
    Witnessed nef = is_nef(x, datum);
    if (!nef) return nef;
    if (datum.lattice().square(x) <= 0) return {false, std::nullopt};
    auto cands = classes_matching({x, IntRange::exactly(0), IntRange::exactly(-2), false},
                                  datum.lattice(), datum.budget().limits());
    std::erase_if(cands, [&](const DivClass& r) { return datum.degree(r) <= 0; });
    if (cands.empty()) return {};
    sort_by_key(cands, [&](const DivClass& r) { return datum.degree(r); });
    return {false, cands.front()};
}

WeylReduction weyl_reduce(const DivClass& x, const PolarizedDatum& datum) {
    WeylReduction out{x, {}, true};
    DivClass& cur = out.reduced;
    while (true) {
        if (cur.is_zero()) return out;
        Int d = datum.degree(cur);
        if (d <= 0) {
            out.effective = false;
            return out;
        }
        // An effective class that is not nef has a (-2)-curve component of
        // smaller A-degree; the first negative root in degree order is one.
        auto r = first_negative_root(cur, datum, d);
        if (!r) break;
        cur -= *r;
        out.removed.push_back(std::move(*r));
    }
    if (datum.lattice().square(cur) < 0) out.effective = false;
    return out;
}

Int h0(const DivClass& x, const PolarizedDatum& datum) {
    WeylReduction r = weyl_reduce(x, datum);
    if (!r.effective) return 0;
    if (r.reduced.is_zero()) return 1;
    Int sq = datum.lattice().square(r.reduced);
    if (sq > 0) return sq / 2 + 2;
    return content(r.reduced) + 1;
}

Int h1(const DivClass& x, const PolarizedDatum& datum) {
    Int chi = datum.lattice().square(x) / 2 + 2;
    return h0(x, datum) + h0(-x, datum) - chi;
}

Witnessed h1_vanishing_root_test(const DivClass& x, const PolarizedDatum& datum) {
    if (x.is_zero()) return {};
    // x^2 < 0 is accepted for effective x; wall_degree_bound is then x.A
    if (datum.lattice().square(x) < 0 && datum.degree(x) <= 0)
        throw PreconditionViolated("h1 root test needs an effective class");
    Int bound = wall_degree_bound(x, datum);
    require_degree_budget(bound, datum.budget(), "h1 root test");
    for (const auto& r : datum.effective_roots(bound))
        if (datum.lattice().pair(r, x) <= -2) return {false, r};
    return {};
}

}  // namespace k3gon
