#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "ncl/suites.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<ncl::Rational> parse_points(const std::string& s) {
    std::vector<ncl::Rational> out;
    for (const auto& tok : split_commas(s)) out.push_back(ncl::Rational(tok));
    return out;
}

/// "yangian.*" style prefix filters; anything else matches exactly.
bool matches(const std::string& pattern, const std::string& name) {
    if (pattern.empty()) return true;
    auto star = pattern.find('*');
    if (star == std::string::npos) return pattern == name;
    return name.rfind(pattern.substr(0, star), 0) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for noncommutative (Manin) matrix identities"};
    app.require_subcommand(1);

    // run
    std::string suites_arg = "all", model, points_arg, format = "text", corpus_dir;
    int trunc = 5;
    uint64_t seed = 42;
    CLI::App* run = app.add_subcommand("run", "run verification suites");
    run->add_option("--suites", suites_arg, "comma-separated suite names, or 'all'");
    run->add_option("--model", model, "inline model spec (e.g. standard:n=2,sites=2) or file");
    run->add_option("--trunc", trunc, "series truncation order")->check(CLI::PositiveNumber);
    run->add_option("--points", points_arg, "comma-separated rational evaluation points");
    run->add_option("--seed", seed, "corpus seed");
    run->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("--corpus", corpus_dir, "load the regression corpus from this directory");

    // list-suites
    bool list_json = false;
    std::string filter;
    CLI::App* ls = app.add_subcommand("list-suites", "list registered suites");
    ls->add_flag("--json", list_json, "machine-readable output");
    ls->add_option("--filter", filter, "name filter, e.g. 'yangian.*'");

    // corpus-gen
    std::string out_dir = "corpus";
    uint64_t gen_seed = 42;
    int positives = 5, negatives = 3;
    CLI::App* cg = app.add_subcommand("corpus-gen", "write the regression corpus to disk");
    cg->add_option("--out", out_dir, "output directory");
    cg->add_option("--seed", gen_seed, "generation seed");
    cg->add_option("--positives", positives, "Manin samples per size");
    cg->add_option("--negatives", negatives, "non-Manin samples per size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ncl::RunConfig cfg;
            cfg.suites = split_commas(suites_arg);
            cfg.model = model;
            cfg.trunc = trunc;
            if (!points_arg.empty()) cfg.points = parse_points(points_arg);
            if (cfg.points.empty())
                throw std::invalid_argument("no evaluation points left after parsing --points");
            cfg.seed = seed;
            cfg.format = format;
            cfg.corpus_dir = corpus_dir;
            auto results = ncl::run_suites(cfg);
            if (format == "json")
                std::cout << ncl::results_json(cfg, results).dump(2) << "\n";
            else
                std::cout << ncl::render_text(results);
            return ncl::exit_status(results);
        }
        if (*ls) {
            if (list_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& s : ncl::suite_registry())
                    if (matches(filter, s.name))
                        arr.push_back({{"name", s.name},
                                       {"description", s.description},
                                       {"recorded", s.recorded}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& s : ncl::suite_registry())
                    if (matches(filter, s.name))
                        std::cout << s.name << (s.recorded ? "  [recorded]  " : "  ")
                                  << s.description << "\n";
            }
            return 0;
        }
        if (*cg) {
            auto entries = ncl::corpus_generate(gen_seed, positives, negatives);
            ncl::corpus_write(out_dir, entries);
            std::cout << "wrote " << entries.size() << " matrices to " << out_dir << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
