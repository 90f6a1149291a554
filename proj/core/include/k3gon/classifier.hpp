#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3gon/decomposition.hpp"

namespace k3gon {

struct CliffordResult {
    Int c = 0;
    /// Canonical minimizing N; empty when the generic value floor((g-1)/2) is attained.
    std::vector<DivClass> witnesses;
    Int generic_cap = 0;

    friend bool operator==(const CliffordResult&, const CliffordResult&) = default;
};

/// c = min(floor((g-1)/2), min N.(L-N) - 2) over N with N^2 >= 0, h0(N) >= 2,
/// h0(L-N) >= 2.
CliffordResult clifford_index(const PolarizedDatum& datum);

/// B with L = 3B, B^2 = 2 and B base point free.
std::optional<DivClass> detect_donagi_morrison(const PolarizedDatum& datum);

/// Record of the search for a class B with 0 <= B^2 <= D^2 - 1 and
/// 0 < B.L - B^2 <= D^2.
struct BSearchTranscript {
    Int square_lo = 0;
    Int square_hi = 0;
    Int degree_lo = 0;
    Int degree_hi = 0;
    std::uint64_t visited = 0;
    std::uint64_t in_box = 0;  // classes in the square/degree window before the B.L - B^2 filter
    std::vector<DivClass> found;

    bool empty() const { return found.empty(); }
    friend bool operator==(const BSearchTranscript&, const BSearchTranscript&) = default;
};

struct ElmsWitness {
    DivClass D;
    DivClass Gamma;
    BSearchTranscript transcript;
    friend bool operator==(const ElmsWitness&, const ElmsWitness&) = default;
};

/// L = 2D + Gamma with Gamma an irreducible (-2)-curve, D nef and base point
/// free, D^2 >= 2, D.Gamma = 1, and no class B in the window above.
std::optional<ElmsWitness> detect_generalized_elms(const PolarizedDatum& datum);

/// Arithmetic items (a) and (d) of the conjecture on curves of Clifford dimension r.
struct ElmsChecklist {
    Int r = 0, g = 0, c = 0, d = 0;
    bool genus_matches = false;     // g = 4r - 2
    bool clifford_matches = false;  // c = 2r - 3
    bool gonality_matches = false;  // d = 2r
    bool in_conjecture_scope = false;  // r >= 3

    bool arithmetic_holds() const { return genus_matches && clifford_matches && gonality_matches; }
    friend bool operator==(const ElmsChecklist&, const ElmsChecklist&) = default;
};

/// Throws PreconditionViolated for r < 2.
ElmsChecklist elms_conjecture_check(Int r, Int g, Int c, Int d);

enum class CaseTag { DonagiMorrison, GeneralizedELMS, Ordinary };
enum class ExceptionalMembers { None, GeneralMembers, AllMembers };
enum class W1dNote { Zero, One, NotApplicable };

const char* to_string(CaseTag t);
const char* to_string(ExceptionalMembers e);
const char* to_string(W1dNote n);

inline constexpr const char* kSearchRestrictions =
    "Clifford index minimized over classes N with N^2 >= 0, h0(N) >= 2, h0(L-N) >= 2 and "
    "N.(L-N) <= floor((g-1)/2) + 2; classes with N^2 < 0 are not searched.";

struct ClassificationReport {
    Int genus = 0;
    Int clifford_index = 0;
    std::vector<DivClass> clifford_witnesses;
    Int gonality_general = 0;
    Int gonality_min = 0;
    bool gonality_constant = true;
    CaseTag case_tag = CaseTag::Ordinary;
    ExceptionalMembers exceptional_members = ExceptionalMembers::None;
    /// Clifford dimension; empty means "generic" (not determined by the lattice).
    std::optional<Int> clifford_dimension;
    Int brill_noether_rho = 0;  // rho(g, gonality_min, 1)
    W1dNote w1d_dimension_note = W1dNote::NotApplicable;
    std::optional<ElmsChecklist> elms_checklist;
    std::optional<DivClass> dm_class;
    std::optional<ElmsWitness> elms_witness;
    std::string search_restrictions = kSearchRestrictions;
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const PolarizedDatum& datum);

/// Throws InternalInconsistency when a report breaks c + 2 <= gon <= c + 3,
/// c <= floor((g-1)/2) or (nonconstant iff DonagiMorrison).
void check_report_invariants(const ClassificationReport& r);

}  // namespace k3gon
