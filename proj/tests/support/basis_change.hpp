#pragma once

#include <k3gon/oracle.hpp>

namespace k3gon::fixtures {

// New basis vectors are the columns of U: gram' = U^T G U and x' = U^-1 x.
struct BasisChange {
    IntMatrix U;
    IntMatrix U_inv;

    explicit BasisChange(IntMatrix u) : U(std::move(u)) {
        std::size_t n = U.size();
        RatMatrix m(n, RatVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(U[i][j]));
        RatMatrix inv = inverse(m);
        U_inv.assign(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) U_inv[i][j] = to_int64(inv[i][j].get_num());
    }

    static DivClass apply(const IntMatrix& m, const DivClass& x) {
        DivClass out{std::vector<Int>(x.coords.size(), 0)};
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out.coords[i] += m[i][j] * x.coords[j];
        return out;
    }

    DivClass to_new(const DivClass& x) const { return apply(U_inv, x); }
    DivClass to_old(const DivClass& x) const { return apply(U, x); }

    IntMatrix gram(const IntMatrix& g) const {
        std::size_t n = g.size();
        IntMatrix out(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) out[i][j] += U[a][i] * g[a][b] * U[b][j];
        return out;
    }

    PolarizedDatum datum(const PolarizedDatum& d) const {
        return validate_datum(validate_lattice(gram(d.lattice().gram())), to_new(d.ample()),
                              to_new(d.polarization()), d.budget());
    }
};

// Reports agree up to the coordinates of witnesses.
inline bool same_report(const ClassificationReport& a, const ClassificationReport& b, const BasisChange& bc) {
    if (a.genus != b.genus || a.clifford_index != b.clifford_index ||
        a.gonality_general != b.gonality_general || a.gonality_min != b.gonality_min ||
        a.gonality_constant != b.gonality_constant || a.case_tag != b.case_tag ||
        a.exceptional_members != b.exceptional_members || a.clifford_dimension != b.clifford_dimension ||
        a.brill_noether_rho != b.brill_noether_rho || a.w1d_dimension_note != b.w1d_dimension_note)
        return false;
    if (a.clifford_witnesses.size() != b.clifford_witnesses.size()) return false;
    for (std::size_t i = 0; i < a.clifford_witnesses.size(); ++i)
        if (bc.to_new(a.clifford_witnesses[i]) != b.clifford_witnesses[i]) return false;
    if (a.dm_class.has_value() != b.dm_class.has_value()) return false;
    if (a.dm_class && bc.to_new(*a.dm_class) != *b.dm_class) return false;
    if (a.elms_witness.has_value() != b.elms_witness.has_value()) return false;
    if (a.elms_witness && (bc.to_new(a.elms_witness->D) != b.elms_witness->D ||
                           bc.to_new(a.elms_witness->Gamma) != b.elms_witness->Gamma))
        return false;
    return true;
}

}  // namespace k3gon::fixtures
