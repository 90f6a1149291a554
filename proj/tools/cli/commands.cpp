#include "commands.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace k3gon::cli {

namespace {

ojson header() { return ojson{{"tool", kToolName}, {"version", kToolVersion}}; }

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        return {kUsage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const BudgetExceeded& e) {
        return {kBudgetExceeded, "", std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const InternalInconsistency& e) {
        return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {kInvalidDatum, "", std::string("invalid datum: ") + e.what() + "\n"};
    }
}


}  // namespace

CommandResult cmd_classify(const std::string& path, Format format) {
    return guarded([&] {
        DatumFile file = read_datum_file(path);
        PolarizedDatum datum = file.datum();
        FullReport report = build_report(file, datum);
        if (format == Format::Text) return CommandResult{kOk, render_text(report, datum), ""};
        return CommandResult{kOk, dump(to_json(report, datum)), ""};
    });
}

ElmsCertificate elms_certificate(Int n) {
    PolarizedDatum datum = validate_datum(validate_lattice({{2 * n, 1}, {1, -2}}), DivClass{{1, 0}},
                                          DivClass{{2, 1}});
    ElmsCertificate cert;
    cert.n = n;
    cert.report = classify(datum);
    cert.holds = cert.report.case_tag == CaseTag::GeneralizedELMS;
    return cert;
}

CommandResult cmd_scan_elms(Int n_min, Int n_max, Format format) {
    return guarded([&] {
        if (n_min < 1) throw UsageError("--min must be at least 1");
        if (n_min > n_max) throw UsageError("--min " + std::to_string(n_min) + " exceeds --max " + std::to_string(n_max));
        ojson certs = ojson::array();
        std::ostringstream text;
        bool all = true;
        for (Int n = n_min; n <= n_max; ++n) {
            ElmsCertificate c = elms_certificate(n);
            const ClassificationReport& r = c.report;
            all = all && c.holds;
            ojson j;
            j["n"] = n;
            j["gram"] = IntMatrix{{2 * n, 1}, {1, -2}};
            j["holds"] = c.holds;
            j["g"] = r.genus;
            j["c"] = r.clifford_index;
            j["r"] = r.clifford_dimension ? ojson(*r.clifford_dimension) : ojson("generic");
            j["gonality"] = r.gonality_general;
            j["D"] = r.elms_witness ? to_json(r.elms_witness->D) : ojson(nullptr);
            j["Gamma"] = r.elms_witness ? to_json(r.elms_witness->Gamma) : ojson(nullptr);
            j["elms_checklist"] = r.elms_checklist ? to_json(*r.elms_checklist) : ojson(nullptr);
            j["transcript"] = r.elms_witness ? to_json(r.elms_witness->transcript) : ojson(nullptr);
            certs.push_back(std::move(j));
            text << "n=" << n << " holds=" << (c.holds ? "true" : "false") << " g=" << r.genus
                 << " c=" << r.clifford_index << " r="
                 << (r.clifford_dimension ? std::to_string(*r.clifford_dimension) : std::string("generic"))
                 << " gonality=" << r.gonality_general << "\n";
        }
        if (format == Format::Text) return CommandResult{kOk, text.str(), ""};
        ojson out = header();
        out["scan"] = "generalized-elms";
        out["range"] = {n_min, n_max};
        out["all_hold"] = all;
        out["certificates"] = std::move(certs);
        return CommandResult{kOk, dump(out), ""};
    });
}

CommandResult cmd_enumerate(const std::string& path, const EnumerateFlags& flags, Format format) {
    return guarded([&] {
        if (flags.against != "L" && flags.against != "A") throw UsageError("--against must be L or A");
        if (flags.degree_min > flags.degree_max) throw UsageError("--degree-min exceeds --degree-max");
        DatumFile file = read_datum_file(path);
        PolarizedDatum datum = file.datum();
        DivClass ref = flags.against == "L" ? datum.polarization() : datum.ample();
        EnumQuery q{ref, IntRange::between(flags.degree_min, flags.degree_max), IntRange::exactly(flags.square),
                    flags.primitive};
        EnumStats stats;
        auto found = classes_matching(q, datum.lattice(), datum.budget().limits(), &stats);
        if (format == Format::Text) {
            std::string s;
            for (const auto& x : found) s += to_string(x) + "\n";
            return CommandResult{kOk, s, ""};
        }
        ojson out = header();
        out["query"] = {{"against", flags.against},
                        {"reference", to_json(ref)},
                        {"degree_range", {flags.degree_min, flags.degree_max}},
                        {"square", flags.square},
                        {"primitive_only", flags.primitive}};
        out["count"] = found.size();
        ojson cls = ojson::array();
        for (const auto& x : found) cls.push_back(to_json(x));
        out["classes"] = cls;
        out["lattice_points_visited"] = stats.visited;
        return CommandResult{kOk, dump(out), ""};
    });
}

namespace {

ojson oracle_compare(const PolarizedDatum& d, std::mt19937_64& rng, const std::string& source, bool& ok) {
    std::uniform_int_distribution<Int> lo(-6, 6), width(0, 10), sq(-8, 4), sqw(0, 8);
    const Lattice& lat = d.lattice();
    bool enum_equal = true;
    for (int i = 0; i < 3; ++i) {
        Int t = lo(rng), s = sq(rng);
        EnumQuery q{i % 2 ? d.ample() : d.polarization(), IntRange::between(t, t + width(rng)),
                    IntRange::between(s, s + sqw(rng)), i == 2};
        Int radius = certified_radius(lat, q).radius;
        if (classes_matching(q, lat, d.budget().limits()) != box_classes(lat, {radius, q}, EnumLimits{50'000'000}))
            enum_equal = false;
    }
    CliffordResult fast = clifford_index(d);
    CliffordOracleResult slow = clifford_oracle(d);
    bool cliff_equal = fast.c == slow.c && fast.witnesses == slow.witnesses;
    ok = ok && enum_equal && cliff_equal;
    return ojson{{"source", source},
                 {"gram", lat.gram()},
                 {"ample", to_json(d.ample())},
                 {"L", to_json(d.polarization())},
                 {"enumeration_equal", enum_equal},
                 {"clifford_equal", cliff_equal},
                 {"clifford_index", fast.c}};
}

}  // namespace

CommandResult cmd_oracle_check(const std::optional<std::string>& path, std::uint64_t seed, int trials,
                               Format format) {
    return guarded([&] {
        if (trials < 0) throw UsageError("--trials must be nonnegative");
        std::mt19937_64 rng(seed);
        bool ok = true;
        ojson checks = ojson::array();
        if (path) {
            PolarizedDatum d = read_datum_file(*path).datum();
            checks.push_back(oracle_compare(d, rng, "file", ok));
        }
        for (int i = 0; i < trials; ++i) {
            auto d = random_datum(rng);
            if (!d) throw InternalInconsistency("random datum sampler gave up");
            checks.push_back(oracle_compare(*d, rng, "random " + std::to_string(i), ok));
        }
        std::string verdict = ok ? "all equal" : "mismatch";
        int code = ok ? kOk : kCheckFailed;
        if (format == Format::Text)
            return CommandResult{code, verdict + " (" + std::to_string(checks.size()) + " data)\n", ""};
        ojson out = header();
        out["seed"] = seed;
        out["trials"] = trials;
        out["checks"] = std::move(checks);
        out["verdict"] = verdict;
        return CommandResult{code, dump(out), ""};
    });
}

CommandResult cmd_decompose(const std::string& path, const std::optional<std::string>& M,
                            const std::optional<std::string>& N, Format format) {
    return guarded([&] {
        if (M.has_value() != N.has_value()) throw UsageError("--M and --N must be given together");
        DatumFile file = read_datum_file(path);
        PolarizedDatum datum = file.datum();
        MinimalDecompositions md = minimal_decompositions(datum);
        Decomposition start;
        if (M) {
            start.M = DivClass{parse_vector(*M)};
            start.N = DivClass{parse_vector(*N)};
            if (start.M.coords.size() != datum.lattice().rank() || start.N.coords.size() != datum.lattice().rank())
                throw UsageError("--M and --N must have " + std::to_string(datum.lattice().rank()) + " coordinates");
            start.k = datum.lattice().pair(start.M, start.N);
        } else if (!md.minimizers.empty()) {
            start = md.minimizers.front();
        } else {
            throw PreconditionViolated("L has no decomposition with k <= " + std::to_string(md.k_max));
        }
        NormalizationOutcome outcome = normalize(datum, start.M, start.N);
        std::optional<NormalizedChecklist> normalized_props;
        if (std::holds_alternative<Normalized>(outcome.result)) normalized_props = check_normalized(datum, outcome);
        Prop23Checklist p23 = prop23_conditions(datum, start.M, start.N, start.k);

        if (format == Format::Text) {
            std::ostringstream os;
            os << "start: M=" << to_string(outcome.start.M) << " N=" << to_string(outcome.start.N)
               << " k=" << outcome.start.k << "\n";
            os << "outcome: " << outcome.tag();
            if (const auto* b = std::get_if<CaseB>(&outcome.result))
                os << " Gamma=" << to_string(b->gamma) << " (L^2 = "
                   << datum.lattice().square(datum.polarization()) << " = 4k-2)";
            if (const auto* a = std::get_if<CaseA>(&outcome.result)) os << " " << case_a_kind_name(a->kind);
            os << "\n";
            os << "final: M'=" << to_string(outcome.M_final) << " N'=" << to_string(outcome.N_final) << "\n";
            if (normalized_props) os << "normalized properties: " << (normalized_props->all() ? "all hold" : "fail") << "\n";
            return CommandResult{kOk, os.str(), ""};
        }
        ojson out = header();
        out["input"] = file.to_json();
        out["minimal"] = to_json(md);
        out["start"] = to_json(start);
        out["normalization"] = to_json(outcome, datum);
        out["normalized_properties"] = normalized_props ? to_json(*normalized_props) : ojson(nullptr);
        out["prop23"] = to_json(p23);
        if (datum.lattice().square(start.N) >= 0)
            out["incidence"] = to_json(incidence_dimension_report(datum, start.N, start.k));
        else
            out["incidence"] = nullptr;
        out["gamma_candidate"] = to_json(gamma_candidate(start.N, datum.polarization(), start.k, datum.lattice()));
        return CommandResult{kOk, dump(out), ""};
    });
}

}  // namespace k3gon::cli
