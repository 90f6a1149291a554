#include "k3gon/lattice.hpp"

#include <numeric>
#include <sstream>

namespace k3gon {

namespace {

__extension__ typedef __int128 Wide;

Int checked(Wide v, const char* where) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow(where);
    return static_cast<Int>(v);
}

}  // namespace

bool DivClass::is_zero() const {
    for (Int c : coords)
        if (c != 0) return false;
    return true;
}

DivClass& DivClass::operator+=(const DivClass& o) {
    if (o.rank() != rank()) throw DimensionMismatch(rank(), o.rank());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = checked(static_cast<Wide>(coords[i]) + o.coords[i], "class addition");
    return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
    if (o.rank() != rank()) throw DimensionMismatch(rank(), o.rank());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = checked(static_cast<Wide>(coords[i]) - o.coords[i], "class subtraction");
    return *this;
}

DivClass operator-(DivClass a) {
    for (auto& c : a.coords) c = checked(-static_cast<Wide>(c), "class negation");
    return a;
}

DivClass operator*(Int s, DivClass a) {
    for (auto& c : a.coords) c = checked(static_cast<Wide>(s) * c, "class scaling");
    return a;
}

Int content(const DivClass& x) {
    Int g = 0;
    for (Int c : x.coords) g = std::gcd(g, c);
    return g;
}

bool is_primitive(const DivClass& x) { return content(x) == 1; }

std::string to_string(const DivClass& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) os << ',';
        os << x.coords[i];
    }
    os << ')';
    return os.str();
}

RatClass::RatClass(const DivClass& x) {
    coords.reserve(x.rank());
    for (Int c : x.coords) coords.emplace_back(static_cast<long>(c));
}

RatClass& RatClass::operator+=(const RatClass& o) {
    if (o.rank() != rank()) throw DimensionMismatch(rank(), o.rank());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

RatClass operator*(const Rational& s, RatClass a) {
    for (auto& c : a.coords) c *= s;
    return a;
}

std::string to_string(const RatClass& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) out += ',';
        out += to_string(x.coords[i]);
    }
    return out + ")";
}

const char* kind_name(LatticeError::Kind kind) {
    switch (kind) {
        case LatticeError::Kind::NotSquare: return "NotSquare";
        case LatticeError::Kind::NotSymmetric: return "NotSymmetric";
        case LatticeError::Kind::NotEven: return "NotEven";
        case LatticeError::Kind::WrongSignature: return "WrongSignature";
    }
    return "?";
}

LatticeError::LatticeError(Kind kind, const std::string& detail)
    : Error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

Signature signature_of(const IntMatrix& gram) {
    RatMatrix m(gram.size());
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (Int v : gram[i]) m[i].emplace_back(static_cast<long>(v));
    Inertia in = inertia(std::move(m));
    return {in.positive, in.negative, in.zero};
}

Lattice Lattice::validate(IntMatrix gram, std::vector<std::string> basis_names) {
    std::size_t n = gram.size();
    if (n == 0) throw LatticeError(LatticeError::Kind::NotSquare, "empty Gram matrix");
    for (const auto& row : gram)
        if (row.size() != n)
            throw LatticeError(LatticeError::Kind::NotSquare, "Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw LatticeError(LatticeError::Kind::NotSymmetric,
                                   "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") differs from its transpose");
    for (std::size_t i = 0; i < n; ++i)
        if (gram[i][i] % 2 != 0)
            throw LatticeError(LatticeError::Kind::NotEven,
                               "diagonal entry " + std::to_string(i) + " is odd");
    Signature sig = signature_of(gram);
    if (sig.positive != 1 || sig.zero != 0 || sig.negative != static_cast<int>(n) - 1)
        throw LatticeError(LatticeError::Kind::WrongSignature,
                           "signature is (" + std::to_string(sig.positive) + "," +
                               std::to_string(sig.negative) + ") with " +
                               std::to_string(sig.zero) + " null directions, expected (1," +
                               std::to_string(n - 1) + ")");
    if (!basis_names.empty() && basis_names.size() != n)
        throw DimensionMismatch(n, basis_names.size());
    return Lattice(std::move(gram), std::move(basis_names), sig);
}

void Lattice::check_rank(std::size_t r) const {
    if (r != rank()) throw DimensionMismatch(rank(), r);
}

Int Lattice::pair(const DivClass& x, const DivClass& y) const {
    check_rank(x.rank());
    check_rank(y.rank());
    Wide acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x.coords[i] == 0) continue;
        Wide row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            row += static_cast<Wide>(gram_[i][j]) * y.coords[j];
        acc += row * x.coords[i];
    }
    return checked(acc, "intersection pairing");
}

Rational Lattice::pair(const RatClass& x, const RatClass& y) const {
    check_rank(x.rank());
    check_rank(y.rank());
    Rational acc = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (gram_[i][j] != 0) acc += x.coords[i] * Rational(static_cast<long>(gram_[i][j])) * y.coords[j];
    return acc;
}

Rational Lattice::pair(const RatClass& x, const DivClass& y) const { return pair(x, RatClass(y)); }

std::vector<Int> Lattice::dual(const DivClass& x) const {
    check_rank(x.rank());
    std::vector<Int> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        Wide acc = 0;
        for (std::size_t j = 0; j < rank(); ++j) acc += static_cast<Wide>(gram_[i][j]) * x.coords[j];
        out[i] = checked(acc, "dual vector");
    }
    return out;
}

Int genus_of(const DivClass& L, const Lattice& lat) {
    Int sq = lat.square(L);
    if (sq < 0) throw NegativeSquare(sq);
    return sq / 2 + 1;
}

GammaCandidate gamma_candidate(const DivClass& N, const DivClass& L, Int d, const Lattice& lat) {
    Int L2 = lat.square(L);
    if (L2 <= 0) throw ZeroPolarizationSquare();
    Int N2 = lat.square(N);
    Rational coeff(2 * (mpz_class(static_cast<long>(d)) + static_cast<long>(N2)),
                   mpz_class(static_cast<long>(L2)));
    coeff.canonicalize();
    RatClass gamma = Rational(-2) * RatClass(N) + coeff * RatClass(L);
    GammaCandidate out{gamma, lat.pair(gamma, gamma), lat.pair(gamma, L), lat.pair(gamma, N)};
    return out;
}

}  // namespace k3gon
