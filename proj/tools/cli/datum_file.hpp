#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include <k3gon/linear_system.hpp>

namespace k3gon::cli {

/// Malformed file: missing fields, wrong shapes, non-integers.
class FileFormatError : public Error {
public:
    using Error::Error;
};

struct DatumFile {
    IntMatrix gram;
    std::vector<std::string> basis;
    std::vector<Int> ample;
    std::vector<Int> L;
    Budget budget;

    /// Validates lattice and datum; throws LatticeError or DatumError.
    PolarizedDatum datum() const;
    nlohmann::ordered_json to_json() const;
};

DatumFile parse_datum(const nlohmann::json& j);
DatumFile parse_datum_text(const std::string& text);
DatumFile read_datum_file(const std::filesystem::path& path);

/// Parses "1,-2,0" (brackets and spaces tolerated).
std::vector<Int> parse_vector(const std::string& text);

}  // namespace k3gon::cli
