#include "k3gon/classifier.hpp"

#include <algorithm>

namespace k3gon {

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::DonagiMorrison: return "DonagiMorrison";
        case CaseTag::GeneralizedELMS: return "GeneralizedELMS";
        case CaseTag::Ordinary: return "Ordinary";
    }
    return "?";
}

const char* to_string(ExceptionalMembers e) {
    switch (e) {
        case ExceptionalMembers::None: return "None";
        case ExceptionalMembers::GeneralMembers: return "GeneralMembers";
        case ExceptionalMembers::AllMembers: return "AllMembers";
    }
    return "?";
}

const char* to_string(W1dNote n) {
    switch (n) {
        case W1dNote::Zero: return "0";
        case W1dNote::One: return "1";
        case W1dNote::NotApplicable: return "not-applicable";
    }
    return "?";
}

CliffordResult clifford_index(const PolarizedDatum& datum) {
    Int g = genus_of(datum.polarization(), datum.lattice());
    CliffordResult out;
    out.generic_cap = (g - 1) / 2;
    out.c = out.generic_cap;
    auto splits = admissible_splits(datum, out.generic_cap + 2);
    if (splits.empty() || splits.front().k - 2 >= out.generic_cap) return out;
    out.c = splits.front().k - 2;
    for (const auto& s : splits)
        if (s.k == splits.front().k) out.witnesses.push_back(s.N);
    return out;
}

std::optional<DivClass> detect_donagi_morrison(const PolarizedDatum& datum) {
    const DivClass& L = datum.polarization();
    DivClass B = L;
    for (auto& c : B.coords) {
        if (c % 3 != 0) return std::nullopt;
        c /= 3;
    }
    if (datum.lattice().square(B) != 2) return std::nullopt;
    // |B| must map S two-to-one onto P^2.
    if (!is_base_point_free(B, datum)) return std::nullopt;
    return B;
}

namespace {

// An effective root is irreducible iff no effective root of smaller A-degree
// meets it negatively.
bool is_irreducible_root(const DivClass& gamma, const PolarizedDatum& datum) {
    for (const auto& r : datum.effective_roots(datum.degree(gamma) - 1))
        if (datum.lattice().pair(r, gamma) < 0) return false;
    return true;
}

BSearchTranscript search_small_b(const PolarizedDatum& datum, Int d2) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    BSearchTranscript t;
    t.square_lo = 0;
    t.square_hi = d2 - 1;
    // 0 <= B^2 <= D^2 - 1 and 0 < B.L - B^2 <= D^2 give 1 <= B.L <= 2 D^2 - 1
    t.degree_lo = 1;
    t.degree_hi = 2 * d2 - 1;
    EnumStats stats;
    auto box = classes_matching(
        {L, IntRange::between(t.degree_lo, t.degree_hi), IntRange::between(t.square_lo, t.square_hi),
         false},
        lat, datum.budget().limits(), &stats);
    t.visited = stats.visited;
    t.in_box = box.size();
    for (auto& b : box) {
        Int excess = lat.pair(b, L) - lat.square(b);
        if (excess > 0 && excess <= d2) t.found.push_back(std::move(b));
    }
    return t;
}

}  // namespace

std::optional<ElmsWitness> detect_generalized_elms(const PolarizedDatum& datum) {
    const Lattice& lat = datum.lattice();
    const DivClass& L = datum.polarization();
    // Gamma.L = 2 D.Gamma + Gamma^2 = 0
    auto gammas = classes_matching({L, IntRange::exactly(0), IntRange::exactly(-2), false}, lat,
                                   datum.budget().limits());
    std::erase_if(gammas, [&](const DivClass& r) { return datum.degree(r) <= 0; });
    std::sort(gammas.begin(), gammas.end(), [&](const DivClass& a, const DivClass& b) {
        return precedes(a, b, datum);
    });
    for (const auto& gamma : gammas) {
        DivClass twoD = L - gamma;
        bool even = std::all_of(twoD.coords.begin(), twoD.coords.end(),
                                [](Int c) { return c % 2 == 0; });
        if (!even) continue;
        DivClass D = twoD;
        for (auto& c : D.coords) c /= 2;
        Int d2 = lat.square(D);
        if (d2 < 2 || lat.pair(D, gamma) != 1) continue;
        if (!is_irreducible_root(gamma, datum)) continue;
        if (!is_base_point_free(D, datum)) continue;
        BSearchTranscript t = search_small_b(datum, d2);
        if (!t.empty()) continue;
        return ElmsWitness{D, gamma, std::move(t)};
    }
    return std::nullopt;
}

ElmsChecklist elms_conjecture_check(Int r, Int g, Int c, Int d) {
    if (r < 2) throw PreconditionViolated("conjecture checklist needs Clifford dimension r >= 2");
    ElmsChecklist k;
    k.r = r;
    k.g = g;
    k.c = c;
    k.d = d;
    k.genus_matches = g == 4 * r - 2;
    k.clifford_matches = c == 2 * r - 3;
    k.gonality_matches = d == 2 * r;
    k.in_conjecture_scope = r >= 3;
    return k;
}

void check_report_invariants(const ClassificationReport& r) {
    Int c = r.clifford_index;
    if (r.gonality_general < c + 2 || r.gonality_general > c + 3)
        throw InternalInconsistency("gonality " + std::to_string(r.gonality_general) +
                                    " outside [c+2, c+3] for c = " + std::to_string(c));
    if (c > (r.genus - 1) / 2)
        throw InternalInconsistency("Clifford index exceeds floor((g-1)/2)");
    if (r.gonality_constant == (r.case_tag == CaseTag::DonagiMorrison))
        throw InternalInconsistency("nonconstant gonality must coincide with the DonagiMorrison case");
}

ClassificationReport classify(const PolarizedDatum& datum) {
    ClassificationReport r;
    r.genus = genus_of(datum.polarization(), datum.lattice());
    CliffordResult cliff = clifford_index(datum);
    r.clifford_index = cliff.c;
    r.clifford_witnesses = cliff.witnesses;

    if (auto B = detect_donagi_morrison(datum)) {
        // general member is a smooth plane sextic, a codimension-one family is bielliptic
        r.case_tag = CaseTag::DonagiMorrison;
        r.dm_class = *B;
        r.gonality_min = 4;
        r.gonality_general = 5;
        r.gonality_constant = false;
        r.exceptional_members = ExceptionalMembers::GeneralMembers;
        r.clifford_dimension = 2;
    } else if (auto W = detect_generalized_elms(datum)) {
        Int d2 = datum.lattice().square(W->D);
        if (r.clifford_index != d2 - 1)
            throw InternalInconsistency("generalized ELMS datum with Clifford index " +
                                        std::to_string(r.clifford_index) + " != D^2 - 1 = " +
                                        std::to_string(d2 - 1));
        r.case_tag = CaseTag::GeneralizedELMS;
        r.gonality_min = r.gonality_general = r.clifford_index + 3;
        r.gonality_constant = true;
        r.exceptional_members = ExceptionalMembers::AllMembers;
        r.clifford_dimension = d2 / 2 + 1;
        r.elms_witness = std::move(*W);
    } else {
        r.case_tag = CaseTag::Ordinary;
        r.gonality_min = r.gonality_general = r.clifford_index + 2;
        r.gonality_constant = true;
        r.exceptional_members = ExceptionalMembers::None;
        if (r.clifford_index < cliff.generic_cap) r.clifford_dimension = 1;
    }

    r.brill_noether_rho = brill_noether_rho(r.genus, r.gonality_min);
    if (r.case_tag == CaseTag::GeneralizedELMS)
        r.w1d_dimension_note = W1dNote::One;
    else if (r.case_tag != CaseTag::DonagiMorrison && r.brill_noether_rho < 0)
        r.w1d_dimension_note = W1dNote::Zero;

    if (r.clifford_dimension && *r.clifford_dimension >= 2)
        r.elms_checklist = elms_conjecture_check(*r.clifford_dimension, r.genus, r.clifford_index,
                                                 r.gonality_general);
    check_report_invariants(r);
    return r;
}

}  // namespace k3gon
