#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hirzebruch/hirzebruch.hpp"

namespace fs = std::filesystem;
using namespace hirzebruch;
using io::json;

namespace {

// exit codes are part of the interface
constexpr int kOk = 0;
constexpr int kNegative = 1;  // no certificate / counterexample not confirmed
constexpr int kError = 2;

struct RunConfig {
    std::string catalog;
    std::string file;
    std::string dir;
    std::string format = "json";
    double tol = hopf::Tolerances{}.predicate;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

struct Outcome {
    json report;
    std::string text;
    int code = kOk;
};

using Command = Outcome (*)(const RunConfig&, const std::string& source, bool from_catalog);

Arrangement load_arrangement(const RunConfig& cfg, const std::string& source, bool from_catalog)
{
    if (from_catalog) return catalog::by_name(source, cfg.seed);
    return io::arrangement_from_json(io::read_json_file(source));
}

Outcome cmd_analyze(const RunConfig& cfg, const std::string& source, bool from_catalog)
{
    const auto arr = load_arrangement(cfg, source, from_catalog);
    auto rep = report::analyze(arr, incidence(arr));
    return {rep, report::analyze_text(rep), kOk};
}

Outcome cmd_metric(const RunConfig& cfg, const std::string& source, bool from_catalog)
{
    const auto arr = load_arrangement(cfg, source, from_catalog);
    auto out = report::metric_report(arr, incidence(arr));
    return {out.report, report::metric_text(out.report), out.verdict.aspherical ? kOk : kNegative};
}

hopf::Complex complex_from_json(const json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_object() || !j.contains("re")) throw ParseError("complex entries are numbers or {\"re\", \"im\"} objects");
    const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {j.at("re").get<double>(), im};
}

/// Line lists: [[z0, z1], ...] with numeric entries, or exact coefficients
/// together with "cyclotomic_order". Three entries per line means a projective
/// arrangement, analysed through the local configurations at its points.
Outcome cmd_hopf(const RunConfig& cfg, const std::string& source, bool from_catalog)
{
    const hopf::Tolerances tol{cfg.tol, hopf::Tolerances{}.grid};
    auto local = [&](const Arrangement& arr) {
        auto rep = report::hopf_local(arr, hopf::local_configs(arr, tol));
        return Outcome{rep, report::hopf_text(rep), kOk};
    };
    if (from_catalog) return local(catalog::by_name(source, cfg.seed));

    const json j = io::read_json_file(source);
    try {
        if (!j.is_object() || !j.contains("lines") || !j.at("lines").is_array())
            throw ParseError("missing array field \"lines\"");
        const auto& lines = j.at("lines");
        if (!lines.empty() && lines[0].is_array() && lines[0].size() == 3) return local(io::arrangement_from_json(j));

        std::vector<hopf::ComplexLine2> ls;
        const bool exact = j.contains("cyclotomic_order");
        const int order = exact ? j.at("cyclotomic_order").get<int>() : 0;
        if (exact && order < 1) throw ParseError("cyclotomic_order must be positive");
        for (const auto& l : lines) {
            if (!l.is_array() || l.size() != 2) throw ParseError("each line in C^2 needs exactly two entries");
            if (exact)
                ls.push_back(hopf::ComplexLine2::exact(io::element_from_json(l[0], order),
                                                       io::element_from_json(l[1], order)));
            else
                ls.emplace_back(complex_from_json(l[0]), complex_from_json(l[1]));
        }
        const auto v = hopf::cat1_verdict(ls, tol);
        auto rep = report::hopf_lines(ls, v);
        return {rep, report::hopf_text(rep), kOk};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed line list: ") + e.what());
    }
}

void emit(const RunConfig& cfg, const Outcome& o)
{
    if (cfg.format == "text")
        std::cout << o.text;
    else
        std::cout << o.report.dump(2) << "\n";
}

int fail(const std::string& what)
{
    std::cerr << "error: " << what << "\n";
    return kError;
}

/// Runs one command over every *.json file of a directory. Files are
/// processed concurrently, each in isolation; output follows sorted file order.
int run_batch(const RunConfig& cfg, Command cmd)
{
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(cfg.dir, ec))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    if (ec) return fail("cannot read directory " + cfg.dir + ": " + ec.message());
    std::sort(files.begin(), files.end());

    struct Slot {
        std::optional<Outcome> outcome;
        std::string error;
    };
    std::vector<Slot> slots(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            try {
                slots[i].outcome = cmd(cfg, files[i].string(), false);
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int worst = kOk;
    json results = json::array();
    std::string text;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const std::string name = files[i].filename().string();
        const auto& s = slots[i];
        const int code = s.outcome ? s.outcome->code : kError;
        worst = std::max(worst, code);
        json entry = {{"file", name}, {"exit_code", code}};
        if (s.outcome)
            entry["report"] = s.outcome->report;
        else
            entry["error"] = s.error;
        results.push_back(entry);
        text += "== " + name + " ==\n" + (s.outcome ? s.outcome->text : "error: " + s.error + "\n");
    }
    if (cfg.format == "text")
        std::cout << text;
    else
        std::cout << json{{"results", results}, {"exit_code", worst}}.dump(2) << "\n";
    return worst;
}

int run(const RunConfig& cfg, Command cmd)
{
    if (cfg.tol <= 0) return fail("--tol must be positive");
    if (!cfg.dir.empty()) return run_batch(cfg, cmd);
    const bool from_catalog = !cfg.catalog.empty();
    try {
        const auto o = cmd(cfg, from_catalog ? cfg.catalog : cfg.file, from_catalog);
        emit(cfg, o);
        return o.code;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

void add_input_options(CLI::App* sub, RunConfig& cfg)
{
    auto* c = sub->add_option("--catalog", cfg.catalog, "catalog entry, e.g. ceva3, klein, generic5");
    auto* f = sub->add_option("--file", cfg.file, "input JSON file");
    auto* d = sub->add_option("--dir", cfg.dir, "directory of input JSON files (batch mode)");
    c->excludes(f)->excludes(d);
    f->excludes(d);
    sub->add_option("--tol", cfg.tol, "predicate tolerance for floating checks");
    sub->add_option("--jobs", cfg.jobs, "worker threads for batch mode")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for random catalog entries");
    sub->callback([sub] {
        if (sub->count("--catalog") + sub->count("--file") + sub->count("--dir") != 1)
            throw CLI::ValidationError("input", "exactly one of --catalog, --file, --dir is required");
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact analysis of complex line arrangements"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.fallthrough();

    auto* analyze = app.add_subcommand("analyze", "incidence data and the Hirzebruch property");
    auto* metric = app.add_subcommand("metric", "weight feasibility, certificates and asphericity");
    auto* hopf_cmd = app.add_subcommand("hopf", "CAT(1) test for Hopf circles of lines in C^2");
    for (auto* s : {analyze, metric, hopf_cmd}) add_input_options(s, cfg);

    auto* cex = app.add_subcommand("counterexample", "doubled triangle with angles pi/n and pi(n+1)/(2n) - eps");
    int n = 0;
    std::string eps_text;
    cex->add_option("--n", n, "order of the distinguished angle")->required();
    cex->add_option("--eps", eps_text, "angle offset in radians, decimal or p/q")->required();

    auto* cat = app.add_subcommand("catalog", "built-in arrangements");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "entries with their signatures");
    auto* cat_export = cat->add_subcommand("export", "arrangement JSON of one entry");
    std::string export_name;
    cat_export->add_option("name", export_name)->required();
    cat_export->add_option("--seed", cfg.seed, "seed for random catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kError;
    }

    if (analyze->parsed()) return run(cfg, cmd_analyze);
    if (metric->parsed()) return run(cfg, cmd_metric);
    if (hopf_cmd->parsed()) return run(cfg, cmd_hopf);

    if (cex->parsed()) {
        try {
            const auto r = ext::verify_counterexample(n, parse_rational(eps_text));
            auto rep = report::counterexample(r);
            emit(cfg, {rep, report::counterexample_text(rep), kOk});
            return r.confirmed() ? kOk : kNegative;
        } catch (const std::exception& e) {
            return fail(e.what());
        }
    }

    if (cat_list->parsed()) {
        auto list = report::catalog_list();
        emit(cfg, {list, report::catalog_list_text(list), kOk});
        return kOk;
    }
    if (cat_export->parsed()) {
        try {
            std::cout << io::arrangement_to_json(catalog::by_name(export_name, cfg.seed)).dump(2) << "\n";
            return kOk;
        } catch (const std::exception& e) {
            return fail(e.what());
        }
    }
    return kError;
}
