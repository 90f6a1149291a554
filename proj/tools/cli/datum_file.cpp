#include "datum_file.hpp"

#include <fstream>
#include <sstream>

namespace k3gon::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw FileFormatError(where + ": expected an integer");
    return j.get<Int>();
}

std::vector<Int> as_vector(const json& j, const std::string& where) {
    if (!j.is_array()) throw FileFormatError(where + ": expected an array of integers");
    std::vector<Int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

PolarizedDatum DatumFile::datum() const {
    Lattice lat = Lattice::validate(gram, basis);
    if (ample.size() != lat.rank()) throw DimensionMismatch(lat.rank(), ample.size());
    if (L.size() != lat.rank()) throw DimensionMismatch(lat.rank(), L.size());
    return PolarizedDatum::validate(std::move(lat), DivClass{ample}, DivClass{L}, budget);
}

ordered_json DatumFile::to_json() const {
    ordered_json j;
    j["gram"] = gram;
    j["basis"] = basis;
    j["ample"] = ample;
    j["L"] = L;
    j["options"] = {{"max_degree_budget", budget.max_degree}, {"candidate_budget", budget.candidate_budget}};
    return j;
}

DatumFile parse_datum(const json& j) {
    if (!j.is_object()) throw FileFormatError("datum file must hold an object");
    for (const char* key : {"gram", "ample", "L"})
        if (!j.contains(key)) throw FileFormatError(std::string("missing field '") + key + "'");
    for (const auto& [key, _] : j.items())
        if (key != "gram" && key != "basis" && key != "ample" && key != "L" && key != "options")
            throw FileFormatError("unknown field '" + key + "'");

    DatumFile d;
    const json& g = j["gram"];
    if (!g.is_array()) throw FileFormatError("gram: expected an array of rows");
    for (std::size_t i = 0; i < g.size(); ++i) d.gram.push_back(as_vector(g[i], "gram[" + std::to_string(i) + "]"));
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) throw FileFormatError("basis: expected an array of strings");
        for (const auto& name : j["basis"]) {
            if (!name.is_string()) throw FileFormatError("basis: expected an array of strings");
            d.basis.push_back(name.get<std::string>());
        }
    }
    d.ample = as_vector(j["ample"], "ample");
    d.L = as_vector(j["L"], "L");
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw FileFormatError("options: expected an object");
        for (const auto& [key, val] : o.items()) {
            if (key == "max_degree_budget") {
                d.budget.max_degree = as_int(val, "options.max_degree_budget");
                if (d.budget.max_degree < 1) throw FileFormatError("options.max_degree_budget must be positive");
            } else if (key == "candidate_budget") {
                Int c = as_int(val, "options.candidate_budget");
                if (c < 1) throw FileFormatError("options.candidate_budget must be positive");
                d.budget.candidate_budget = static_cast<std::uint64_t>(c);
            } else {
                throw FileFormatError("unknown option '" + key + "'");
            }
        }
    }
    return d;
}

DatumFile parse_datum_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FileFormatError(std::string("not valid JSON: ") + e.what());
    }
    return parse_datum(j);
}

DatumFile read_datum_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_datum_text(buf.str());
}

std::vector<Int> parse_vector(const std::string& text) {
    std::string cleaned;
    for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == '(' || ch == ')') ? ' ' : ch;
    std::vector<Int> out;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw FileFormatError("bad integer '" + item + "' in vector '" + text + "'");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw FileFormatError("bad integer '" + item + "' in vector '" + text + "'");
        out.push_back(value);
    }
    if (out.empty()) throw FileFormatError("empty vector '" + text + "'");
    return out;
}

}  // namespace k3gon::cli
