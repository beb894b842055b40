#include "unipart/json_io.hpp"
#include "unipart/lowdim.hpp"
#include "unipart/setpart.hpp"

#include "acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using unipart::Json;
using unipart::SchemaError;

struct RunConfig {
    std::string input;
    std::string output;
    std::string format = "json";
    long p = 0;
    long n = 0;
    long bound = unipart::kDefaultSweepBound;
    long closure_cap = unipart::kDefaultClosureCap;
    long conductor_cap = unipart::kDefaultConductorCap;
    std::string re = "0";
    std::string im = "0";
    bool axis = false;
    unsigned long seed = unipart::acceptance::kDefaultSeed;
};

// Usage-level problems (bad flag combinations, malformed files, non-prime p)
// exit with code 2, as opposed to domain errors from the library (code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("$", std::string("not valid JSON: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw UsageError("cannot open output file \"" + output_path + "\"");
    out << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

long require_prime(long p) {
    if (p <= 1 || !unipart::is_prime_long(p)) {
        std::ostringstream d;
        d << "p must be prime, got " << p;
        throw UsageError(d.str());
    }
    return p;
}

std::string report_text(const unipart::AnalysisReport& report) {
    std::ostringstream out;
    out << "verdict: " << unipart::verdict_name(report.verdict) << "\n";
    out << "contractible: " << (unipart::verdict_is_contractible(report.verdict) ? "yes" : "no")
        << "\n";
    if (report.witness) {
        out << "route: " << (report.witness->route == unipart::Route::A ? "A" : "B") << "\n";
        out << "terminal partition: " << report.witness->mu.to_string() << "\n";
    }
    for (const std::string& line : report.diagnostics) out << "note: " << line << "\n";
    return out.str();
}

int run_analyze(const RunConfig& cfg) {
    Json input = load_json(cfg.input);
    unipart::GroupInput group = unipart::group_from_json(input);
    long p = cfg.p > 0 ? cfg.p : group.p.value_or(0);
    if (p == 0) throw UsageError("no prime given: pass --p or a \"p\" field in the input file");
    require_prime(p);
    unipart::set_conductor_cap(cfg.conductor_cap);
    unipart::AnalysisReport report = unipart::analyze(group.generators, p, cfg.closure_cap);
    emit(cfg.format == "json" ? render_json(unipart::report_to_json(report)) : report_text(report),
         cfg.output);
    return 0;
}

int run_discrete(const RunConfig& cfg) {
    require_prime(cfg.p);
    auto rows = unipart::sweep(cfg.n, cfg.p, cfg.bound);
    std::string text;
    if (cfg.format == "json") text = render_json(unipart::sweep_to_json(rows, cfg.n, cfg.p));
    else if (cfg.format == "csv") text = unipart::sweep_to_csv(rows);
    else text = unipart::sweep_to_text(rows);
    emit(text, cfg.output);
    return 0;
}

int run_l2(const RunConfig& cfg) {
    unipart::L2Point pt = unipart::L2Point::axis_pair();
    if (!cfg.axis) {
        unipart::Rational re, im;
        try {
            re = unipart::parse_rational(cfg.re);
            im = unipart::parse_rational(cfg.im);
        } catch (const unipart::Error& e) {
            throw UsageError(std::string("bad --re/--im value: ") + e.what());
        }
        unipart::CycNumber z = unipart::CycNumber::from_rational(re, 4) +
                               unipart::CycNumber::root_of_unity(4, 1) *
                                   unipart::CycNumber::from_rational(im, 4);
        pt = unipart::L2Point::finite_pair(z);
    }
    unipart::L2Class cls = unipart::classify_l2_fixed(pt);
    if (cfg.format == "json") {
        Json j = Json::object();
        j["schema_version"] = unipart::kSchemaVersion;
        j["point"] = pt.to_string();
        j["classification"] = unipart::l2_class_name(cls);
        j["partition"] = unipart::partition_to_json(unipart::l2_partition(pt));
        emit(render_json(j), cfg.output);
    } else {
        emit(std::string(unipart::l2_class_name(cls)) + "\n", cfg.output);
    }
    return 0;
}

int run_homology(const RunConfig& cfg) {
    unipart::ChainComplex complex = unipart::complex_from_json(load_json(cfg.input));
    unipart::HomologyResult h = unipart::homology(complex);
    emit(cfg.format == "json" ? render_json(unipart::homology_to_json(h)) : h.to_string() + "\n",
         cfg.output);
    return 0;
}

int run_selftest(const RunConfig& cfg) {
    auto results = unipart::acceptance::run_all(cfg.seed, &std::cout);
    return unipart::acceptance::summarize(results, std::cout) == 0 ? 0 : 1;
}

Json error_json(const std::string& name, const std::string& message) {
    Json j = Json::object();
    j["schema_version"] = unipart::kSchemaVersion;
    j["error"] = name;
    j["message"] = message;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of unitary partition posets and finite p-group fixed points"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* analyze = app.add_subcommand("analyze", "Decide contractibility of the fixed poset of a matrix p-group");
    analyze->add_option("--input", cfg.input, "Group input JSON file")->required();
    analyze->add_option("--p", cfg.p, "Prime (overrides the input file's \"p\")");
    analyze->add_option("--closure-cap", cfg.closure_cap, "Group closure size cap")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--conductor-cap", cfg.conductor_cap, "Cyclotomic conductor cap")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--output", cfg.output, "Write the report here instead of stdout");
    analyze->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* discrete = app.add_subcommand("discrete", "Sweep p-subgroups of the symmetric group and their fixed partition posets");
    discrete->add_option("--n", cfg.n, "Ground set size")->required();
    discrete->add_option("--p", cfg.p, "Prime")->required();
    discrete->add_option("--bound", cfg.bound, "Largest allowed n")->check(CLI::PositiveNumber);
    discrete->add_option("--output", cfg.output, "Write the table here instead of stdout");
    discrete->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* l2 = app.add_subcommand("l2", "Classify a point of the dimension-2 partition space under the coordinate swap");
    auto* re_opt = l2->add_option("--re", cfg.re, "Real part of z (rational)");
    auto* im_opt = l2->add_option("--im", cfg.im, "Imaginary part of z (rational)");
    l2->add_flag("--axis", cfg.axis, "Use the coordinate-axis pair instead of a finite z")
        ->excludes(re_opt)
        ->excludes(im_opt);
    l2->add_option("--output", cfg.output, "Write the classification here instead of stdout");
    l2->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* homology = app.add_subcommand("homology", "Reduced integral homology of a facet-listed simplicial complex");
    homology->add_option("--input", cfg.input, "Complex input JSON file")->required();
    homology->add_option("--output", cfg.output, "Write the result here instead of stdout");
    homology->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* selftest = app.add_subcommand("selftest", "Run the full acceptance suite");
    selftest->add_option("--seed", cfg.seed, "Seed for the randomized property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(cfg);
        if (discrete->parsed()) return run_discrete(cfg);
        if (l2->parsed()) return run_l2(cfg);
        if (homology->parsed()) return run_homology(cfg);
        return run_selftest(cfg);
    } catch (const UsageError& e) {
        std::cerr << render_json(error_json("Usage", e.what()));
        return 2;
    } catch (const SchemaError& e) {
        Json j = error_json("Schema", e.what());
        j["path"] = e.path();
        std::cerr << render_json(j);
        return 2;
    } catch (const unipart::Error& e) {
        std::cerr << render_json(error_json(unipart::errc_name(e.code()), e.what()));
        return 1;
    } catch (const std::exception& e) {
        std::cerr << render_json(error_json("Internal", e.what()));
        return 1;
    }
}
