#include "k3gon/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace k3gon {

namespace {

mpz_class to_mpz(Int v) { return mpz_class(static_cast<long>(v)); }
Rational to_q(Int v) { return Rational(static_cast<long>(v)); }

// Unimodular U with w^T U = (g, 0, ..., 0), g = gcd(w) > 0. Columns of U.
struct ColumnReduction {
    Int gcd = 0;
    std::vector<std::vector<mpz_class>> columns;
};

ColumnReduction reduce_linear_form(const std::vector<Int>& w) {
    std::size_t n = w.size();
    std::vector<mpz_class> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = to_mpz(w[i]);
    std::vector<std::vector<mpz_class>> cols(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;

    while (true) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0 && (best == n || abs(v[i]) < abs(v[best]))) best = i;
        if (best == n) throw InvalidQuery("reference class pairs to zero with every class");
        if (best != 0) {
            std::swap(v[0], v[best]);
            std::swap(cols[0], cols[best]);
        }
        bool others_zero = true;
        for (std::size_t j = 1; j < n; ++j) {
            if (v[j] == 0) continue;
            mpz_class qt;
            mpz_fdiv_q(qt.get_mpz_t(), v[j].get_mpz_t(), v[0].get_mpz_t());
            v[j] -= qt * v[0];
            for (std::size_t k = 0; k < n; ++k) cols[j][k] -= qt * cols[0][k];
            if (v[j] != 0) others_zero = false;
        }
        if (others_zero) break;
    }
    if (v[0] < 0) {
        v[0] = -v[0];
        for (auto& c : cols[0]) c = -c;
    }
    return {to_int64(v[0]), std::move(cols)};
}

// Integer interval {y : d (y - c)^2 <= r}, possibly empty (lo > hi).
std::pair<mpz_class, mpz_class> axis_interval(const Rational& c, const Rational& d,
                                              const Rational& r) {
    if (sgn(r) < 0) return {1, 0};
    Rational rr = r / d;
    mpz_class e = floor_sqrt(rr);
    auto fits = [&](const mpz_class& y) {
        Rational diff = Rational(y) - c;
        return diff * diff <= rr;
    };
    mpz_class hi = floor(c + Rational(e));
    if (fits(hi + 1)) hi += 1;
    mpz_class lo = ceil(c - Rational(e));
    if (fits(lo - 1)) lo -= 1;
    return {lo, hi};
}

class SliceSearch {
public:
    SliceSearch(const Lattice& lat, const EnumQuery& q, const EnumLimits& limits, EnumStats& stats)
        : lat_(lat), q_(q), limits_(limits), stats_(stats) {
        n_ = lat.rank();
        ref_sq_ = lat.square(q.reference);
        w_ = lat.dual(q.reference);
        red_ = reduce_linear_form(w_);
        m_ = n_ - 1;
        // H = -K^T G K on the kernel basis K = columns 1..n-1.
        if (m_ > 0) {
            RatMatrix H(m_, RatVector(m_));
            for (std::size_t a = 0; a < m_; ++a)
                for (std::size_t b = 0; b < m_; ++b)
                    H[a][b] = -Rational(form(red_.columns[a + 1], red_.columns[b + 1]));
            H_ = H;
            ldl_ = ldl_positive_definite(H);
        }
    }

    void run_slice(Int t, std::vector<DivClass>& out) {
        ++stats_.slices;
        tick();
        if (t % red_.gcd != 0) return;
        mpz_class scale = to_mpz(t / red_.gcd);
        std::vector<mpz_class> c(n_);
        for (std::size_t k = 0; k < n_; ++k) c[k] = scale * red_.columns[0][k];

        if (m_ == 0) {
            emit(c, out);
            return;
        }
        // h = K^T G c, y0 = H^-1 h, max x^2 on the slice = c.c + y0.h
        RatVector h(m_);
        for (std::size_t a = 0; a < m_; ++a) h[a] = Rational(form(red_.columns[a + 1], c));
        RatVector y0 = solve(H_, h);
        Rational top = Rational(form(c, c));
        for (std::size_t a = 0; a < m_; ++a) top += y0[a] * h[a];
        Rational bound = top - to_q(*q_.square.lo);
        if (sgn(bound) < 0) return;

        base_ = std::move(c);
        center_ = std::move(y0);
        y_.assign(m_, 0);
        descend(m_ - 1, bound, out);
    }

private:
    mpz_class form(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) const {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            mpz_class row = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (lat_.gram()[i][j] != 0) row += to_mpz(lat_.gram()[i][j]) * y[j];
            acc += x[i] * row;
        }
        return acc;
    }

    void tick() {
        if (++stats_.visited > limits_.candidate_budget)
            throw BudgetExceeded("enumeration visited more than " +
                                 std::to_string(limits_.candidate_budget) + " lattice points");
    }

    void descend(std::size_t level, const Rational& remaining, std::vector<DivClass>& out) {
        // centre of coordinate `level` given the already fixed higher coordinates
        Rational shift = 0;
        for (std::size_t j = level + 1; j < m_; ++j)
            shift += ldl_.upper[level][j] * (Rational(y_[j]) - center_[j]);
        Rational c = center_[level] - shift;
        auto [lo, hi] = axis_interval(c, ldl_.diag[level], remaining);
        for (mpz_class y = lo; y <= hi; ++y) {
            tick();
            y_[level] = y;
            Rational diff = Rational(y) - c;
            Rational rest = remaining - ldl_.diag[level] * diff * diff;
            if (level == 0) {
                std::vector<mpz_class> x = base_;
                for (std::size_t a = 0; a < m_; ++a)
                    if (y_[a] != 0)
                        for (std::size_t k = 0; k < n_; ++k) x[k] += y_[a] * red_.columns[a + 1][k];
                emit(x, out);
            } else {
                descend(level - 1, rest, out);
            }
        }
    }

    void emit(const std::vector<mpz_class>& x, std::vector<DivClass>& out) {
        DivClass cls{std::vector<Int>(n_)};
        for (std::size_t k = 0; k < n_; ++k) cls.coords[k] = to_int64(x[k]);
        if (satisfies(q_, lat_, cls)) out.push_back(std::move(cls));
    }

    const Lattice& lat_;
    const EnumQuery& q_;
    const EnumLimits& limits_;
    EnumStats& stats_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    Int ref_sq_ = 0;
    std::vector<Int> w_;
    ColumnReduction red_;
    RatMatrix H_;
    LdlFactor ldl_;
    std::vector<mpz_class> base_;
    RatVector center_;
    std::vector<mpz_class> y_;
};

void check_query(const EnumQuery& q, const Lattice& lat) {
    if (q.reference.rank() != lat.rank()) throw DimensionMismatch(lat.rank(), q.reference.rank());
    if (lat.square(q.reference) <= 0)
        throw InvalidQuery("reference class must have positive square");
    if (q.degree.empty() || q.square.empty()) throw InvalidQuery("empty range in query");
    if (!q.degree.bounded())
        throw UnboundedQuery("degree range against the reference class must be bounded");
    if (!q.square.lo) throw UnboundedQuery("square range needs a finite lower bound");
}

}  // namespace

bool satisfies(const EnumQuery& q, const Lattice& lat, const DivClass& x) {
    if (!q.degree.contains(lat.pair(x, q.reference))) return false;
    if (!q.square.contains(lat.square(x))) return false;
    if (q.primitive_only && !is_primitive(x)) return false;
    return true;
}

std::vector<DivClass> classes_matching(const EnumQuery& q, const Lattice& lat,
                                       const EnumLimits& limits, EnumStats* stats) {
    check_query(q, lat);
    EnumStats local;
    EnumStats& st = stats ? *stats : local;
    SliceSearch search(lat, q, limits, st);
    std::vector<DivClass> out;
    for (Int t = *q.degree.lo;; ++t) {
        search.run_slice(t, out);
        if (t == *q.degree.hi) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivClass> roots_positive(const Lattice& lat, const DivClass& A, Int max_degree,
                                     const EnumLimits& limits) {
    if (max_degree < 1) return {};
    return classes_matching({A, IntRange::between(1, max_degree), IntRange::exactly(-2), false},
                            lat, limits);
}

std::vector<DivClass> elliptic_classes(const Lattice& lat, const DivClass& A, Int max_degree,
                                       const EnumLimits& limits) {
    if (max_degree < 1) return {};
    return classes_matching({A, IntRange::between(1, max_degree), IntRange::exactly(0), true},
                            lat, limits);
}

}  // namespace k3gon
