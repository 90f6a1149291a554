#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "k3gon/error.hpp"
#include "k3gon/rational.hpp"

namespace k3gon {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// Integer coordinates of a divisor class in the lattice basis.
struct DivClass {
    std::vector<Int> coords;

    DivClass() = default;
    explicit DivClass(std::vector<Int> c) : coords(std::move(c)) {}
    DivClass(std::initializer_list<Int> c) : coords(c) {}

    static DivClass zero(std::size_t rank) { return DivClass(std::vector<Int>(rank, 0)); }

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const;
    Int operator[](std::size_t i) const { return coords[i]; }

    DivClass& operator+=(const DivClass& o);
    DivClass& operator-=(const DivClass& o);
    friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
    friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
    friend DivClass operator-(DivClass a);
    friend DivClass operator*(Int s, DivClass a);

    // Lexicographic on coordinates.
    friend auto operator<=>(const DivClass&, const DivClass&) = default;
    friend bool operator==(const DivClass&, const DivClass&) = default;
};

/// gcd of the coordinates (0 for the zero class).
Int content(const DivClass& x);
bool is_primitive(const DivClass& x);
std::string to_string(const DivClass& x);

/// Rational coordinates; mpq_class keeps every entry reduced with positive denominator.
struct RatClass {
    RatVector coords;

    RatClass() = default;
    explicit RatClass(RatVector c) : coords(std::move(c)) {}
    explicit RatClass(const DivClass& x);

    std::size_t rank() const { return coords.size(); }
    RatClass& operator+=(const RatClass& o);
    friend RatClass operator+(RatClass a, const RatClass& b) { return a += b; }
    friend RatClass operator*(const Rational& s, RatClass a);
    friend bool operator==(const RatClass&, const RatClass&) = default;
};

std::string to_string(const RatClass& x);

/// Counts from an exact diagonalization of the Gram matrix.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

class LatticeError : public Error {
public:
    enum class Kind { NotSquare, NotSymmetric, NotEven, WrongSignature };

    LatticeError(Kind kind, const std::string& detail);
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* kind_name(LatticeError::Kind kind);

/// An even integral lattice of signature (1, rank-1): the Picard lattice of a
/// projective K3 surface in a fixed basis. Immutable once validated.
class Lattice {
public:
    /// Validates symmetry, evenness and hyperbolic signature.
    static Lattice validate(IntMatrix gram, std::vector<std::string> basis_names = {});

    std::size_t rank() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    Signature signature() const { return signature_; }

    Int pair(const DivClass& x, const DivClass& y) const;
    Rational pair(const RatClass& x, const RatClass& y) const;
    Rational pair(const RatClass& x, const DivClass& y) const;
    Int square(const DivClass& x) const { return pair(x, x); }

    /// gram * x, i.e. the linear form y -> x.y in coordinates.
    std::vector<Int> dual(const DivClass& x) const;

private:
    Lattice(IntMatrix gram, std::vector<std::string> names, Signature sig)
        : gram_(std::move(gram)), names_(std::move(names)), signature_(sig) {}

    void check_rank(std::size_t r) const;

    IntMatrix gram_;
    std::vector<std::string> names_;
    Signature signature_;
};

/// Exact signature of an integer symmetric matrix.
Signature signature_of(const IntMatrix& gram);

inline Lattice validate_lattice(IntMatrix gram, std::vector<std::string> names = {}) {
    return Lattice::validate(std::move(gram), std::move(names));
}

/// Arithmetic genus L^2/2 + 1 of the curves in |L|.
Int genus_of(const DivClass& L, const Lattice& lat);

/// rho(g, d, 1) = 2d - 2 - g.
constexpr Int brill_noether_rho(Int g, Int d) { return 2 * d - 2 - g; }

/// The rational class -2N + (2(d + N^2)/L^2) L and its intersection numbers.
struct GammaCandidate {
    RatClass gamma;
    Rational square;
    Rational dot_L;
    Rational dot_N;
};

GammaCandidate gamma_candidate(const DivClass& N, const DivClass& L, Int d, const Lattice& lat);

}  // namespace k3gon
