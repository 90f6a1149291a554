#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace k3gon::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidDatum = 1,
    kBudgetExceeded = 2,
    kCheckFailed = 3,
    kInternalError = 70,
    kUsage = 64,
};

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { Json, Text };

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

CommandResult cmd_classify(const std::string& path, Format format);

/// Certificates for the family gram [[2n,1],[1,-2]], A = (1,0), L = (2,1).
CommandResult cmd_scan_elms(Int n_min, Int n_max, Format format);

struct EnumerateFlags {
    Int square = 0;
    Int degree_min = 0;
    Int degree_max = 0;
    bool primitive = false;
    std::string against = "L";  // "L" or "A"
};

CommandResult cmd_enumerate(const std::string& path, const EnumerateFlags& flags, Format format);

/// Compares the optimized routines with the brute-force oracle on the given
/// datum (if any) and on `trials` seeded random data.
CommandResult cmd_oracle_check(const std::optional<std::string>& path, std::uint64_t seed, int trials,
                               Format format);

/// Normalizes (M, N), or the first minimal decomposition when both are absent.
CommandResult cmd_decompose(const std::string& path, const std::optional<std::string>& M,
                            const std::optional<std::string>& N, Format format);

/// One certificate of the ELMS scan, exposed for tests.
struct ElmsCertificate {
    Int n = 0;
    bool holds = false;
    ClassificationReport report;
};

ElmsCertificate elms_certificate(Int n);

}  // namespace k3gon::cli
