// Command-line surface over the riordan shared library. Talks to the core
// exclusively through the C API in riordan/riordan.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riordan/riordan.h"

namespace {

using Json = nlohmann::json;

// Exit-status contract: 0 success / all-pass, 1 verification or internal
// failure, 2 usage or validation error.
struct CliError {
    int exit_code;
    std::string message;
};

int status_exit_code(rp_status st) {
    switch (st) {
        case RP_OK: return 0;
        case RP_ERROR_INTERNAL: return 1;
        default: return 2;
    }
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    rp_string_free(s);
    return out;
}

std::string check(rp_status st, char* out) {
    if (st != RP_OK) {
        rp_string_free(out);
        throw CliError{status_exit_code(st), rp_last_error()};
    }
    return take_string(out);
}

void ensure(rp_status st) {
    if (st != RP_OK) throw CliError{status_exit_code(st), rp_last_error()};
}

struct Options {
    std::string format = "text";
    bool force = false;
};

// ---------------------------------------------------------------- count

const int kEnumerateGuard = 18;

int cmd_count(const Options& opt, const std::string& sequence, int n, std::string method) {
    if (method == "enumerate" && n > kEnumerateGuard && !opt.force)
        throw CliError{2, "count: refusing to enumerate for n > " + std::to_string(kEnumerateGuard) +
                              " (desk-scale guard; pass --force to override)"};
    char* out = nullptr;
    std::string value = check(rp_count(sequence.c_str(), n, method.empty() ? nullptr : method.c_str(), &out), out);
    if (opt.format == "json") {
        Json j{{"sequence", sequence}, {"n", n}, {"value", value}};
        if (!method.empty()) j["method"] = method;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ enumerate

const int kMaterializedGuard = 14;

bool is_path_family(const std::string& family) {
    return family == "dyck" || family == "motzkin" || family == "2motzkin" ||
           family == "2motzkin-nostraight" || family == "riordan";
}

Json enumerate_item_json(const std::string& family, const std::string& item) {
    if (is_path_family(family)) return Json{{"steps", item}, {"class", family}};
    if (family == "bush") return Json{{"tree", item}};
    Json values = Json::array();
    size_t pos = 0;
    while (pos < item.size()) {
        size_t next = item.find(' ', pos);
        if (next == std::string::npos) next = item.size();
        values.push_back(std::stoi(item.substr(pos, next - pos)));
        pos = next + 1;
    }
    return values;
}

int cmd_enumerate(const Options& opt, const std::string& family, int n) {
    int guard = is_path_family(family) ? kEnumerateGuard : kMaterializedGuard;
    if (n > guard && !opt.force)
        throw CliError{2, "enumerate: refusing " + family + " for n > " + std::to_string(guard) +
                              " (desk-scale guard; pass --force to override)"};
    rp_enumerator* e = nullptr;
    ensure(rp_enumerator_new(family.c_str(), n, &e));
    std::unique_ptr<rp_enumerator, decltype(&rp_enumerator_free)> owner(e, rp_enumerator_free);
    for (;;) {
        char* item = nullptr;
        rp_status st = rp_enumerator_next(e, &item);
        if (st == RP_ERROR_END) break;
        std::string text = check(st, item);
        if (opt.format == "json")
            std::cout << enumerate_item_json(family, text).dump() << "\n";
        else
            std::cout << text << "\n";
    }
    std::cerr << "count: " << rp_enumerator_yielded(e) << "\n";
    return 0;
}

// ------------------------------------------------------------------ map

int cmd_map(const Options& opt, const std::string& bijection, const std::string& input, int n,
            bool check_round_trip) {
    char* out = nullptr;
    std::string result = opt.format == "json"
                             ? check(rp_map_json(bijection.c_str(), input.c_str(), n, &out), out)
                             : check(rp_map(bijection.c_str(), input.c_str(), n, &out), out);
    if (check_round_trip) {
        ensure(rp_map_check(bijection.c_str(), input.c_str(), n));
        std::cerr << "round-trip: ok\n";
    }
    std::cout << result << "\n";
    return 0;
}

// ---------------------------------------------------------------- stats

std::string brace_list(const Json& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].dump();
    }
    return out + "}";
}

int cmd_stats(const Options& opt, const std::string& path_text) {
    rp_path* path = nullptr;
    ensure(rp_path_parse(path_text.c_str(), &path));
    std::unique_ptr<rp_path, decltype(&rp_path_free)> owner(path, rp_path_free);
    char* out = nullptr;
    std::string stats = check(rp_path_stats_json(path, &out), out);
    if (opt.format == "json") {
        std::cout << stats << "\n";
        return 0;
    }
    Json j = Json::parse(stats);
    std::cout << "path: " << j["steps"].get<std::string>() << "\n";
    std::cout << "n: " << j["n"] << "\n";
    std::cout << "riordan: " << (j["riordan"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "area: " << j["area"] << "\n";
    std::cout << "up-height-sum: " << j["up_height_sum"] << "\n";
    std::cout << "axis-level-labels: " << brace_list(j["axis_level_labels"]) << "\n";
    std::string params;
    for (const Json& pair : j["strip_parameters"]) {
        if (!params.empty()) params += " ";
        params += "(" + pair[0].dump() + "," + pair[1].dump() + ")";
    }
    std::cout << "strip-parameters: " << params << "\n";
    std::string image;
    for (const Json& v : j["phi"]) {
        if (!image.empty()) image += " ";
        image += v.dump();
    }
    std::cout << "phi: " << image << "\n";
    std::cout << "fixed-points: " << brace_list(j["fixed_points"]) << "\n";
    std::cout << "inversions: " << j["inversion_number"] << "\n";
    std::cout << "area - up-height-sum == inversions: "
              << (j["identity_ok"].get<bool>() ? "OK" : "FAIL") << "\n";
    return 0;
}

// --------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, int max_n) {
    rp_report* report = nullptr;
    ensure(rp_verify(suite.c_str(), max_n, &report));
    std::unique_ptr<rp_report, decltype(&rp_report_free)> owner(report, rp_report_free);
    for (size_t i = 0; i < rp_report_property_count(report); ++i) {
        char* line = nullptr;
        std::cerr << check(rp_report_property_line(report, i, &line), line) << "\n";
    }
    std::fprintf(stderr, "duration-ms: %.1f\n", rp_report_duration_ms(report));
    char* json = nullptr;
    std::cout << check(rp_report_json(report, &json), json) << "\n";
    return rp_report_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and bijections for Riordan paths, short bushes and "
                 "(321,3bar142)-avoiding permutations"};
    app.require_subcommand(1);

    Options opt;
    unsigned long seed = 0;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--force", opt.force, "Override desk-scale enumeration guards");
    app.add_option("--seed", seed, "Accepted for interface parity; everything is deterministic");

    std::string sequence, method, family, bijection, input, suite, path_text;
    int n = 0, map_n = -1, max_n = 0;
    bool check_round_trip = false;

    CLI::App* count = app.add_subcommand("count", "Print an exact sequence value");
    count->add_option("sequence", sequence, "riordan | catalan | motzkin")->required();
    count->add_option("n", n, "Index")->required()->check(CLI::NonNegativeNumber);
    count->add_option("method", method,
                      "closed | recurrence | from-catalan | from-riordan | enumerate");

    CLI::App* enumerate = app.add_subcommand("enumerate", "List a family, one object per line");
    enumerate
        ->add_option("family", family,
                     "dyck | motzkin | 2motzkin | 2motzkin-nostraight | riordan | bush | "
                     "avoider | avoiding-derangement")
        ->required();
    enumerate->add_option("n", n, "Size parameter")->required()->check(CLI::NonNegativeNumber);

    CLI::App* map = app.add_subcommand("map", "Apply a bijection to a serialized object");
    map->add_option("bijection", bijection,
                    "phi | phi-inv | psi | psi-inv | bush2path | path2bush | dyck-encode | "
                    "dyck-decode")
        ->required();
    map->add_option("input", input, "Canonical text or JSON form")->required();
    map->add_option("--n", map_n, "Recurrence parameter for psi / psi-inv");
    map->add_flag("--check", check_round_trip, "Verify the inverse round trip");

    CLI::App* stats = app.add_subcommand("stats", "Statistics of a Motzkin path");
    stats->add_option("path", path_text, "Path string over U, D, H")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify->add_option("suite", suite, "counts | trees | dyck | patterns | phi | psi | all")
        ->required();
    verify->add_option("max_n", max_n, "Sweep bound")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(opt, sequence, n, method);
        if (enumerate->parsed()) return cmd_enumerate(opt, family, n);
        if (map->parsed()) return cmd_map(opt, bijection, input, map_n, check_round_trip);
        if (stats->parsed()) return cmd_stats(opt, path_text);
        if (verify->parsed()) return cmd_verify(suite, max_n);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
