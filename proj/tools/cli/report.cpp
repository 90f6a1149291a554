#include "report.hpp"

#include <sstream>

namespace k3gon::cli {

ojson to_json(const DivClass& x) { return ojson(x.coords); }

ojson to_json(const Rational& q) { return to_string(q); }

ojson to_json(const RatClass& x) {
    ojson a = ojson::array();
    for (const auto& q : x.coords) a.push_back(to_string(q));
    return a;
}

namespace {

ojson classes(const std::vector<DivClass>& xs) {
    ojson a = ojson::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

template <class T>
ojson or_null(const std::optional<T>& v) {
    return v ? to_json(*v) : ojson(nullptr);
}

const char* require_string(const ojson& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw Error(std::string("report field '") + key + "' missing");
    return j[key].get_ref<const std::string&>().c_str();
}

template <class E>
E enum_from(const ojson& j, const char* key, std::initializer_list<E> values) {
    std::string s = require_string(j, key);
    for (E e : values)
        if (s == to_string(e)) return e;
    throw Error(std::string("report field '") + key + "' has unknown value '" + s + "'");
}

}  // namespace

ojson to_json(const BSearchTranscript& t) {
    return ojson{{"square_range", {t.square_lo, t.square_hi}},
                 {"degree_range_against_L", {t.degree_lo, t.degree_hi}},
                 {"excess_range", {1, t.square_hi + 1}},
                 {"lattice_points_visited", t.visited},
                 {"classes_in_window", t.in_box},
                 {"found", classes(t.found)},
                 {"empty", t.empty()}};
}

ojson to_json(const ElmsWitness& w) {
    return ojson{{"D", to_json(w.D)}, {"Gamma", to_json(w.Gamma)}, {"b_search", to_json(w.transcript)}};
}

ojson to_json(const ElmsChecklist& c) {
    return ojson{{"r", c.r},
                 {"g", c.g},
                 {"c", c.c},
                 {"d", c.d},
                 {"genus_is_4r_minus_2", c.genus_matches},
                 {"clifford_is_2r_minus_3", c.clifford_matches},
                 {"gonality_is_2r", c.gonality_matches},
                 {"arithmetic_holds", c.arithmetic_holds()},
                 {"in_conjecture_scope", c.in_conjecture_scope},
                 {"not_checked", {"unique line bundle computing c", "square of the pencil bundle and projective normality"}}};
}

ojson to_json(const ClassificationReport& r) {
    ojson j;
    j["case"] = to_string(r.case_tag);
    j["genus"] = r.genus;
    j["clifford_index"] = r.clifford_index;
    j["clifford_witnesses"] = classes(r.clifford_witnesses);
    j["gonality_general"] = r.gonality_general;
    j["gonality_min"] = r.gonality_min;
    j["gonality_constant"] = r.gonality_constant;
    j["exceptional_members"] = to_string(r.exceptional_members);
    j["clifford_dimension"] = r.clifford_dimension ? ojson(*r.clifford_dimension) : ojson("generic");
    j["brill_noether_rho"] = r.brill_noether_rho;
    j["w1d_dimension_note"] = to_string(r.w1d_dimension_note);
    j["donagi_morrison_class"] = or_null(r.dm_class);
    j["elms_witness"] = or_null(r.elms_witness);
    j["elms_checklist"] = or_null(r.elms_checklist);
    j["search_restrictions"] = r.search_restrictions;
    return j;
}

DivClass div_class_from_json(const ojson& j) {
    if (!j.is_array()) throw Error("class must be an array of integers");
    DivClass x;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw Error("class must be an array of integers");
        x.coords.push_back(e.get<Int>());
    }
    return x;
}

BSearchTranscript transcript_from_json(const ojson& j) {
    BSearchTranscript t;
    t.square_lo = j.at("square_range").at(0).get<Int>();
    t.square_hi = j.at("square_range").at(1).get<Int>();
    t.degree_lo = j.at("degree_range_against_L").at(0).get<Int>();
    t.degree_hi = j.at("degree_range_against_L").at(1).get<Int>();
    t.visited = j.at("lattice_points_visited").get<std::uint64_t>();
    t.in_box = j.at("classes_in_window").get<std::uint64_t>();
    for (const auto& x : j.at("found")) t.found.push_back(div_class_from_json(x));
    return t;
}

ElmsChecklist checklist_from_json(const ojson& j) {
    ElmsChecklist c;
    c.r = j.at("r").get<Int>();
    c.g = j.at("g").get<Int>();
    c.c = j.at("c").get<Int>();
    c.d = j.at("d").get<Int>();
    c.genus_matches = j.at("genus_is_4r_minus_2").get<bool>();
    c.clifford_matches = j.at("clifford_is_2r_minus_3").get<bool>();
    c.gonality_matches = j.at("gonality_is_2r").get<bool>();
    c.in_conjecture_scope = j.at("in_conjecture_scope").get<bool>();
    return c;
}

ClassificationReport classification_from_json(const ojson& j) {
    ClassificationReport r;
    r.case_tag = enum_from(j, "case", {CaseTag::DonagiMorrison, CaseTag::GeneralizedELMS, CaseTag::Ordinary});
    r.genus = j.at("genus").get<Int>();
    r.clifford_index = j.at("clifford_index").get<Int>();
    for (const auto& x : j.at("clifford_witnesses")) r.clifford_witnesses.push_back(div_class_from_json(x));
    r.gonality_general = j.at("gonality_general").get<Int>();
    r.gonality_min = j.at("gonality_min").get<Int>();
    r.gonality_constant = j.at("gonality_constant").get<bool>();
    r.exceptional_members = enum_from(
        j, "exceptional_members",
        {ExceptionalMembers::None, ExceptionalMembers::GeneralMembers, ExceptionalMembers::AllMembers});
    const ojson& cd = j.at("clifford_dimension");
    if (cd.is_number_integer()) r.clifford_dimension = cd.get<Int>();
    r.brill_noether_rho = j.at("brill_noether_rho").get<Int>();
    r.w1d_dimension_note =
        enum_from(j, "w1d_dimension_note", {W1dNote::Zero, W1dNote::One, W1dNote::NotApplicable});
    if (!j.at("donagi_morrison_class").is_null()) r.dm_class = div_class_from_json(j["donagi_morrison_class"]);
    if (const ojson& w = j.at("elms_witness"); !w.is_null())
        r.elms_witness = ElmsWitness{div_class_from_json(w.at("D")), div_class_from_json(w.at("Gamma")),
                                     transcript_from_json(w.at("b_search"))};
    if (!j.at("elms_checklist").is_null()) r.elms_checklist = checklist_from_json(j["elms_checklist"]);
    r.search_restrictions = require_string(j, "search_restrictions");
    return r;
}

ojson to_json(const Decomposition& d) {
    return ojson{{"M", to_json(d.M)}, {"N", to_json(d.N)}, {"k", d.k}};
}

ojson to_json(const MinimalDecompositions& m) {
    ojson mins = ojson::array();
    for (const auto& d : m.minimizers) mins.push_back(to_json(d));
    return ojson{{"k_max", m.k_max}, {"k_min", m.k_min ? ojson(*m.k_min) : ojson(nullptr)}, {"minimizers", mins}};
}

ojson to_json(const NormalizationOutcome& o, const PolarizedDatum& datum) {
    ojson j;
    j["tag"] = o.tag();
    j["start"] = to_json(o.start);
    j["moved_roots"] = classes(o.moved_roots);
    j["M_final"] = to_json(o.M_final);
    j["N_final"] = to_json(o.N_final);
    if (const auto* a = std::get_if<CaseA>(&o.result)) {
        j["case_a_kind"] = case_a_kind_name(a->kind);
        j["pencil"] = or_null(a->pencil);
        j["smaller"] = or_null(a->smaller);
    } else if (const auto* b = std::get_if<CaseB>(&o.result)) {
        Int l2 = datum.lattice().square(datum.polarization());
        j["gamma"] = to_json(b->gamma);
        j["gamma_dot_N"] = datum.lattice().pair(b->gamma, o.N_final);
        j["L_square"] = l2;
        j["four_k_minus_2"] = 4 * o.start.k - 2;
        j["note"] = "L^2 = 4k-2";
    }
    return j;
}

ojson to_json(const NormalizedChecklist& c) {
    return ojson{{"dominates_start", c.dominates_start},
                 {"squares_ordered", c.squares_ordered},
                 {"n_globally_generated", c.n_globally_generated},
                 {"h1_vanishes", c.h1_vanishes},
                 {"base_divisor_on_L", c.base_divisor_on_L},
                 {"all", c.all()}};
}

ojson to_json(const Prop23Checklist& c) {
    return ojson{{"m_equals_n", c.m_equals_n},
                 {"c6", c.c6},
                 {"M_dot_L", c.m_dot_L},
                 {"N_dot_L", c.n_dot_L},
                 {"h0_N_minus_M", c.h0_n_minus_m},
                 {"c7", c.c7},
                 {"c7_witness", or_null(c.c7_witness)},
                 {"c8", c.c8_implied_by_c7 ? "implied by c7" : "not implied"},
                 {"c9", "not computed"},
                 {"c10", c.c10},
                 {"h0_M_minus_N", c.h0_m_minus_n},
                 {"c11", c.c11}};
}

ojson to_json(const IncidenceReport& r) {
    return ojson{{"genus", r.genus},
                 {"dim_L", r.dim_L},
                 {"dim_L_tensor_I_Z", r.dim_L_minus_Z},
                 {"dim_incidence", r.dim_incidence},
                 {"dim_N", r.dim_N},
                 {"dim_fibre", r.dim_fibre},
                 {"dim_incidence_N", r.dim_incidence_N},
                 {"positive_residual", r.positive_residual}};
}

ojson to_json(const GammaCandidate& g) {
    return ojson{{"class", to_json(g.gamma)},
                 {"square", to_json(g.square)},
                 {"dot_L", to_json(g.dot_L)},
                 {"dot_N", to_json(g.dot_N)}};
}

FullReport build_report(const DatumFile& input, const PolarizedDatum& datum) {
    FullReport r;
    r.input = input;
    r.classification = classify(datum);
    r.decompositions = minimal_decompositions(datum);
    if (!r.decompositions.minimizers.empty()) {
        const Decomposition& first = r.decompositions.minimizers.front();
        r.normalization = normalize(datum, first.M, first.N);
        if (std::holds_alternative<Normalized>(r.normalization->result))
            r.normalized_properties = check_normalized(datum, *r.normalization);
        r.prop23 = prop23_conditions(datum, first.M, first.N, first.k);
        r.incidence = incidence_dimension_report(datum, first.N, first.k);
        r.gamma = gamma_candidate(first.N, datum.polarization(), first.k, datum.lattice());
    }
    return r;
}

ojson to_json(const FullReport& r, const PolarizedDatum& datum) {
    ojson j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input"] = r.input.to_json();
    j["classification"] = to_json(r.classification);
    ojson dec = to_json(r.decompositions);
    dec["normalization"] = r.normalization ? to_json(*r.normalization, datum) : ojson(nullptr);
    dec["normalized_properties"] = or_null(r.normalized_properties);
    dec["gamma_candidate"] = or_null(r.gamma);
    j["decomposition"] = dec;
    j["prop23"] = or_null(r.prop23);
    j["incidence"] = or_null(r.incidence);
    ojson tr = ojson::object();
    tr["b_search"] = r.classification.elms_witness ? to_json(r.classification.elms_witness->transcript)
                                                   : ojson(nullptr);
    tr["effective_roots_cached_to_degree"] = datum.cached_root_degree();
    j["transcripts"] = tr;
    return j;
}

namespace {

std::string list(const std::vector<DivClass>& xs) {
    if (xs.empty()) return "none";
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + to_string(x);
    return s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const FullReport& r, const PolarizedDatum& datum) {
    const ClassificationReport& c = r.classification;
    std::ostringstream os;
    os << "case: " << to_string(c.case_tag) << "\n";
    if (c.dm_class) os << "B: " << to_string(*c.dm_class) << " (L = 3B)\n";
    if (c.elms_witness)
        os << "D: " << to_string(c.elms_witness->D) << "  Gamma: " << to_string(c.elms_witness->Gamma)
           << " (L = 2D + Gamma, B-search " << (c.elms_witness->transcript.empty() ? "empty" : "nonempty") << ")\n";
    os << "Clifford witnesses: " << list(c.clifford_witnesses) << "\n";
    os << "genus: " << c.genus << "\n";
    os << "Clifford index: " << c.clifford_index << "\n";
    os << "gonality: general " << c.gonality_general << ", minimal " << c.gonality_min
       << (c.gonality_constant ? " (constant)" : " (not constant)") << "\n";
    os << "exceptional members: " << to_string(c.exceptional_members) << "\n";
    os << "Clifford dimension: "
       << (c.clifford_dimension ? std::to_string(*c.clifford_dimension) : std::string("generic")) << "\n";
    os << "rho(g, gon_min, 1): " << c.brill_noether_rho << "\n";
    os << "dim W^1_d: " << to_string(c.w1d_dimension_note) << "\n";
    if (c.elms_checklist) {
        const ElmsChecklist& k = *c.elms_checklist;
        os << "conjecture arithmetic (r = " << k.r << "): g = 4r-2 " << yes(k.genus_matches) << ", c = 2r-3 "
           << yes(k.clifford_matches) << ", gon = 2r " << yes(k.gonality_matches)
           << (k.in_conjecture_scope ? "" : " (r = 2, outside conjecture scope)") << "\n";
    }
    if (r.decompositions.k_min) {
        os << "minimal decompositions (k = " << *r.decompositions.k_min << "):";
        for (const auto& d : r.decompositions.minimizers) os << " M=" << to_string(d.M) << " N=" << to_string(d.N);
        os << "\n";
    } else {
        os << "minimal decompositions: none with k <= " << r.decompositions.k_max << "\n";
    }
    if (r.normalization) {
        os << "normalization: " << r.normalization->tag();
        if (const auto* b = std::get_if<CaseB>(&r.normalization->result))
            os << " Gamma=" << to_string(b->gamma) << " (L^2 = "
               << datum.lattice().square(datum.polarization()) << " = 4k-2)";
        if (const auto* a = std::get_if<CaseA>(&r.normalization->result)) os << " " << case_a_kind_name(a->kind);
        if (r.normalized_properties) os << " (normalized properties " << (r.normalized_properties->all() ? "all hold" : "fail") << ")";
        os << "\n";
    }
    return os.str();
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace k3gon::cli
