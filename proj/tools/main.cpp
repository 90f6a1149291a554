#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace k3gon::cli;

int main(int argc, char** argv) {
    CLI::App app{"Gonality and Clifford index of curves on K3 surfaces from Picard lattice data", "k3gon"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string format_name = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::string path;
    auto* classify = app.add_subcommand("classify", "Classify the curves in |L|");
    classify->add_option("file", path, "Datum file")->required();
    add_format(classify);

    k3gon::Int n_min = 1, n_max = 1;
    auto* scan = app.add_subcommand("scan-elms", "Certify the generalized ELMS family for a range of n");
    scan->add_option("--min", n_min, "First n")->required();
    scan->add_option("--max", n_max, "Last n")->required();
    add_format(scan);

    EnumerateFlags eflags;
    auto* enumerate = app.add_subcommand("enumerate", "List classes with given square and degree");
    enumerate->add_option("file", path, "Datum file")->required();
    enumerate->add_option("--square", eflags.square, "Self-intersection")->required();
    enumerate->add_option("--degree-min", eflags.degree_min, "Smallest degree")->required();
    enumerate->add_option("--degree-max", eflags.degree_max, "Largest degree")->required();
    enumerate->add_flag("--primitive", eflags.primitive, "Primitive classes only");
    enumerate->add_option("--against", eflags.against, "Degree against L or A")->check(CLI::IsMember({"L", "A"}));
    add_format(enumerate);

    std::optional<std::string> oracle_path;
    std::uint64_t seed = 1;
    int trials = 20;
    auto* oracle = app.add_subcommand("oracle-check", "Compare fast routines with brute force");
    oracle->add_option("file", oracle_path, "Datum file (optional)");
    oracle->add_option("--seed", seed, "Random seed");
    oracle->add_option("--trials", trials, "Number of random data");
    add_format(oracle);

    std::optional<std::string> M, N;
    auto* decompose = app.add_subcommand("decompose", "Run the normalization of a decomposition L = M + N");
    decompose->add_option("file", path, "Datum file")->required();
    decompose->add_option("--M", M, "Class M, e.g. 1,1");
    decompose->add_option("--N", N, "Class N, e.g. 1,0");
    add_format(decompose);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Format format = format_name == "text" ? Format::Text : Format::Json;
    CommandResult result;
    if (*classify)
        result = cmd_classify(path, format);
    else if (*scan)
        result = cmd_scan_elms(n_min, n_max, format);
    else if (*enumerate)
        result = cmd_enumerate(path, eflags, format);
    else if (*oracle)
        result = cmd_oracle_check(oracle_path, seed, trials, format);
    else
        result = cmd_decompose(path, M, N, format);

    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
