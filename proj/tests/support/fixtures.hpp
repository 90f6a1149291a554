#pragma once

#include <k3gon/classifier.hpp>

namespace k3gon::fixtures {

// Rank one, L = 3B with B^2 = 2: the double plane.
inline PolarizedDatum double_plane() {
    return validate_datum(validate_lattice({{2}}), DivClass{{1}}, DivClass{{3}});
}

inline PolarizedDatum rank_one(Int l) {
    return validate_datum(validate_lattice({{2}}), DivClass{{1}}, DivClass{{l}});
}

// Pic = Z D + Z Gamma, D^2 = 2n, D.Gamma = 1, Gamma^2 = -2, L = 2D + Gamma.
inline Lattice elms_lattice(Int n) { return validate_lattice({{2 * n, 1}, {1, -2}}); }

inline PolarizedDatum elms(Int n) {
    return validate_datum(elms_lattice(n), DivClass{{1, 0}}, DivClass{{2, 1}});
}

inline DivClass v(std::initializer_list<Int> c) { return DivClass{std::vector<Int>(c)}; }

}  // namespace k3gon::fixtures
