#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include <k3gon/oracle.hpp>

#include "datum_file.hpp"

namespace k3gon::cli {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolName = "k3gon";
inline constexpr const char* kToolVersion = "0.1.0";

ojson to_json(const DivClass& x);
ojson to_json(const RatClass& x);
ojson to_json(const Rational& q);
ojson to_json(const BSearchTranscript& t);
ojson to_json(const ElmsWitness& w);
ojson to_json(const ElmsChecklist& c);
ojson to_json(const ClassificationReport& r);
ojson to_json(const Decomposition& d);
ojson to_json(const MinimalDecompositions& m);
ojson to_json(const NormalizationOutcome& o, const PolarizedDatum& datum);
ojson to_json(const NormalizedChecklist& c);
ojson to_json(const Prop23Checklist& c);
ojson to_json(const IncidenceReport& r);
ojson to_json(const GammaCandidate& g);

DivClass div_class_from_json(const ojson& j);
BSearchTranscript transcript_from_json(const ojson& j);
ElmsChecklist checklist_from_json(const ojson& j);
ClassificationReport classification_from_json(const ojson& j);

/// Everything the classify command reports about one datum.
struct FullReport {
    DatumFile input;
    ClassificationReport classification;
    MinimalDecompositions decompositions;
    std::optional<NormalizationOutcome> normalization;
    std::optional<NormalizedChecklist> normalized_properties;
    std::optional<Prop23Checklist> prop23;
    std::optional<IncidenceReport> incidence;
    std::optional<GammaCandidate> gamma;
};

FullReport build_report(const DatumFile& input, const PolarizedDatum& datum);
ojson to_json(const FullReport& r, const PolarizedDatum& datum);
std::string render_text(const FullReport& r, const PolarizedDatum& datum);

/// Pretty-printed with a trailing newline.
std::string dump(const ojson& j);

}  // namespace k3gon::cli
