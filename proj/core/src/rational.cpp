#include "k3gon/rational.hpp"

#include <utility>

#include "k3gon/error.hpp"

namespace k3gon {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class floor(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class ceil(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class floor_sqrt(const Rational& q) {
    if (sgn(q) < 0) throw InternalInconsistency("floor_sqrt of a negative rational");
    // floor(sqrt(p/d)) = floor(floor(sqrt(p*d)) / d)
    mpz_class pd = q.get_num() * q.get_den();
    mpz_class s = sqrt(pd);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
    return r;
}

Inertia inertia(RatMatrix m) {
    Inertia out;
    std::size_t n = m.size();
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (!done[i] && sgn(m[i][i]) != 0) piv = i;
        if (piv == n) {
            // all remaining diagonal entries vanish; look for a_ij != 0
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != i && !done[j] && sgn(m[i][j]) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++out.zero;
                return out;
            }
            // row_i += row_j, col_i += col_j
            for (std::size_t k = 0; k < n; ++k) m[pi][k] += m[pj][k];
            for (std::size_t k = 0; k < n; ++k) m[k][pi] += m[k][pj];
            piv = pi;
        }
        const Rational p = m[piv][piv];
        if (sgn(p) > 0) ++out.positive; else ++out.negative;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || sgn(m[i][piv]) == 0) continue;
            Rational f = m[i][piv] / p;
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j]) continue;
                m[i][j] -= f * m[piv][j];
            }
        }
    }
    return out;
}

LdlFactor ldl_positive_definite(const RatMatrix& m) {
    std::size_t n = m.size();
    LdlFactor f;
    f.diag.assign(n, Rational(0));
    f.upper.assign(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = m[i][i];
        for (std::size_t k = 0; k < i; ++k) d -= f.diag[k] * f.upper[k][i] * f.upper[k][i];
        if (sgn(d) <= 0) throw InternalInconsistency("LDL pivot is not positive");
        f.diag[i] = d;
        f.upper[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational s = m[i][j];
            for (std::size_t k = 0; k < i; ++k) s -= f.diag[k] * f.upper[k][i] * f.upper[k][j];
            f.upper[i][j] = s / d;
        }
    }
    return f;
}

namespace {

// Reduces [m | rhs] to [I | m^-1 rhs] in place.
void gauss_jordan(RatMatrix& m, RatMatrix& rhs) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) throw InternalInconsistency("singular matrix in Gauss-Jordan elimination");
        std::swap(m[c], m[piv]);
        std::swap(rhs[c], rhs[piv]);
        Rational inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (auto& v : rhs[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[c][k];
            for (std::size_t k = 0; k < rhs[r].size(); ++k) rhs[r][k] -= f * rhs[c][k];
        }
    }
}

}  // namespace

RatVector solve(RatMatrix m, RatVector b) {
    RatMatrix rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
    gauss_jordan(m, rhs);
    RatVector x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
    return x;
}

RatMatrix inverse(RatMatrix m) {
    std::size_t n = m.size();
    RatMatrix rhs(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
    gauss_jordan(m, rhs);
    return rhs;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

bool fits_int64(const mpz_class& z) { return z.fits_slong_p(); }

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw ArithmeticOverflow("rational-to-integer conversion");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace k3gon
