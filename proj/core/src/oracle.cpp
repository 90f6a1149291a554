#include "k3gon/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace k3gon {

namespace {

// Deliberately independent of Lattice::pair.
mpz_class naive_pair(const IntMatrix& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            s += mpz_class(static_cast<long>(g[i][j])) * static_cast<long>(x[i]) * static_cast<long>(y[j]);
    return s;
}

bool in_range(const IntRange& r, const mpz_class& v) {
    if (r.lo && v < static_cast<long>(*r.lo)) return false;
    if (r.hi && v > static_cast<long>(*r.hi)) return false;
    return true;
}

bool naive_predicate(const IntMatrix& g, const EnumQuery& q, const std::vector<Int>& x) {
    if (!in_range(q.degree, naive_pair(g, x, q.reference.coords))) return false;
    if (!in_range(q.square, naive_pair(g, x, x))) return false;
    if (q.primitive_only) {
        Int gcd = 0;
        for (Int c : x) gcd = std::gcd(gcd, c);
        if (gcd != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<DivClass> box_classes(const Lattice& lat, const BoxQuery& q, const EnumLimits& limits) {
    if (q.radius < 0) throw InvalidQuery("box radius must be nonnegative");
    const std::size_t n = lat.rank();
    if (q.predicate.reference.coords.size() != n) throw DimensionMismatch(n, q.predicate.reference.coords.size());
    mpz_class points = 1;
    for (std::size_t i = 0; i < n; ++i) points *= 2 * q.radius + 1;
    if (points > static_cast<unsigned long>(limits.candidate_budget))
        throw BudgetExceeded("box of radius " + std::to_string(q.radius) + " has " + points.get_str() +
                             " points, budget " + std::to_string(limits.candidate_budget));

    std::vector<DivClass> out;
    std::vector<Int> x(n, -q.radius);
    // odometer, last coordinate fastest: lexicographic order
    while (true) {
        if (naive_predicate(lat.gram(), q.predicate, x)) out.push_back(DivClass{x});
        std::size_t i = n;
        while (i > 0 && x[i - 1] == q.radius) x[--i] = -q.radius;
        if (i == 0) break;
        ++x[i - 1];
    }
    return out;
}

std::string RadiusCertificate::describe() const {
    std::ostringstream os;
    os << "P(x) = 2(x.R)^2 - " << reference_square << " x^2 <= 2*" << max_degree_square << " - "
       << reference_square << "*(" << square_lo << ") = " << to_string(bound) << "; ";
    for (std::size_t i = 0; i < axis_radius.size(); ++i)
        os << (i ? ", " : "") << "|x" << i << "| <= floor(sqrt(" << to_string(bound) << " * "
           << to_string(inverse_diagonal[i]) << ")) = " << axis_radius[i];
    os << "; radius " << radius;
    return os.str();
}

RadiusCertificate certified_radius(const Lattice& lat, const EnumQuery& q) {
    const std::size_t n = lat.rank();
    if (q.reference.coords.size() != n) throw DimensionMismatch(n, q.reference.coords.size());
    if (!q.degree.bounded() || !q.square.lo)
        throw UnboundedQuery("certified radius needs a bounded degree range and a square lower bound");
    const IntMatrix& g = lat.gram();
    const auto& R = q.reference.coords;
    mpz_class r2 = naive_pair(g, R, R);
    if (r2 <= 0) throw InvalidQuery("reference class must have positive square");

    std::vector<mpz_class> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += mpz_class(static_cast<long>(g[i][j])) * static_cast<long>(R[j]);
    RatMatrix P(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            P[i][j] = Rational(2 * w[i] * w[j] - r2 * static_cast<long>(g[i][j]));
    RatMatrix Pinv = inverse(P);

    mpz_class lo = static_cast<long>(*q.degree.lo), hi = static_cast<long>(*q.degree.hi);
    mpz_class tmax = std::max(lo * lo, hi * hi);
    Rational bound = Rational(2 * tmax - r2 * static_cast<long>(*q.square.lo));
    if (bound < 0) bound = 0;

    RadiusCertificate cert;
    cert.reference_square = to_int64(r2);
    cert.max_degree_square = to_int64(tmax);
    cert.square_lo = *q.square.lo;
    cert.bound = bound;
    Int radius = 1;
    for (std::size_t i = 0; i < n; ++i) {
        cert.inverse_diagonal.push_back(Pinv[i][i]);
        Int ri = to_int64(floor_sqrt(bound * Pinv[i][i]));
        cert.axis_radius.push_back(ri);
        radius = std::max(radius, ri);
    }
    cert.radius = radius;
    return cert;
}

CliffordOracleResult clifford_oracle(const PolarizedDatum& datum) {
    const Lattice& lat = datum.lattice();
    const IntMatrix& g = lat.gram();
    const DivClass& L = datum.polarization();
    const DivClass& A = datum.ample();
    Int L2 = to_int64(naive_pair(g, L.coords, L.coords));
    Int genus = L2 / 2 + 1;
    Int cap = (genus - 1) / 2;

    EnumQuery pred{L, IntRange::between(0, L2), IntRange::between(0, L2), false};
    BoxQuery box{certified_radius(lat, pred).radius, pred};

    auto eligible = [&](const DivClass& x) { return naive_pair(g, x.coords, x.coords) >= 0; };
    // canonical choice between N and L - N: smaller L-degree, then A-degree, then coordinates
    auto earlier = [&](const DivClass& x, const DivClass& y) {
        mpz_class xl = naive_pair(g, x.coords, L.coords), yl = naive_pair(g, y.coords, L.coords);
        if (xl != yl) return xl < yl;
        mpz_class xa = naive_pair(g, x.coords, A.coords), ya = naive_pair(g, y.coords, A.coords);
        if (xa != ya) return xa < ya;
        return x.coords < y.coords;
    };

    std::optional<mpz_class> best;
    std::vector<DivClass> minimizers;
    for (const auto& N : box_classes(lat, box, datum.budget().limits())) {
        DivClass M = L - N;
        if (h0(N, datum) < 2 || h0(M, datum) < 2) continue;
        DivClass rep = N;
        if (eligible(M) && earlier(M, N)) rep = M;
        mpz_class k = naive_pair(g, N.coords, M.coords);
        if (!best || k < *best) {
            best = k;
            minimizers.clear();
        }
        if (k == *best && std::find(minimizers.begin(), minimizers.end(), rep) == minimizers.end())
            minimizers.push_back(rep);
    }

    CliffordOracleResult out;
    out.c = cap;
    if (best && *best - 2 < cap) {
        out.c = to_int64(*best) - 2;
        std::sort(minimizers.begin(), minimizers.end(),
                  [&](const DivClass& x, const DivClass& y) { return earlier(x, y); });
        out.witnesses = std::move(minimizers);
    }
    return out;
}

IntMatrix random_hyperbolic_gram(std::mt19937_64& rng, std::size_t rank, Int max_entry) {
    std::uniform_int_distribution<Int> entry(-max_entry, max_entry);
    std::uniform_int_distribution<Int> half(-max_entry / 2, max_entry / 2);
    while (true) {
        IntMatrix g(rank, std::vector<Int>(rank));
        for (std::size_t i = 0; i < rank; ++i) {
            g[i][i] = 2 * half(rng);
            for (std::size_t j = i + 1; j < rank; ++j) g[i][j] = g[j][i] = entry(rng);
        }
        Signature s = signature_of(g);
        if (s.positive == 1 && s.zero == 0 && s.negative == static_cast<int>(rank) - 1) return g;
    }
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t rank, int moves) {
    IntMatrix u(rank, std::vector<Int>(rank, 0));
    for (std::size_t i = 0; i < rank; ++i) u[i][i] = 1;
    if (rank < 2) {
        if (rng() & 1) u[0][0] = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> idx(0, rank - 1);
    std::uniform_int_distribution<Int> coef(-1, 1);
    for (int m = 0; m < moves; ++m) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (auto& row : u) row[i] = -row[i];
            continue;
        }
        Int c = coef(rng);
        for (auto& row : u) row[i] += c * row[j];
    }
    return u;
}

std::optional<PolarizedDatum> random_datum(std::mt19937_64& rng, const RandomDatumOptions& opts) {
    std::uniform_int_distribution<std::size_t> rank_dist(opts.min_rank, opts.max_rank);
    std::uniform_int_distribution<Int> coord(-opts.max_class_entry, opts.max_class_entry);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        std::size_t n = rank_dist(rng);
        Lattice lat = Lattice::validate(random_hyperbolic_gram(rng, n, opts.max_entry));
        DivClass A{std::vector<Int>(n)}, L{std::vector<Int>(n)};
        for (auto& c : A.coords) c = coord(rng);
        for (auto& c : L.coords) c = coord(rng);
        Int a2 = lat.square(A), l2 = lat.square(L);
        if (a2 <= 0 || l2 <= 0 || l2 > opts.max_L_square || lat.pair(A, L) <= 0) continue;
        try {
            return PolarizedDatum::validate(lat, A, L, opts.budget);
        } catch (const DatumError&) {
        } catch (const BudgetExceeded&) {
        }
    }
    return std::nullopt;
}

}  // namespace k3gon
