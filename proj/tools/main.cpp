#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopcut/exact.hpp"
#include "loopcut/experiments.hpp"
#include "loopcut/generators.hpp"
#include "loopcut/heuristics.hpp"
#include "loopcut/network.hpp"
#include "loopcut/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw loopcut::parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw loopcut::parse_error("cannot write file: " + path);
    out << bytes;
}

void print_json(const nlohmann::ordered_json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

struct GenFlags {
    std::string kind = "g1";
    int n = 25;
    double p = 0.1;
    int m = 0;
    bool keep_connected = false;
    int k = 2;
    std::string values = "all2";
    int values_lo = 2;
    int values_hi = 5;
    std::uint64_t seed = 0;

    loopcut::GenSpec to_spec() const {
        loopcut::GenSpec spec;
        if (kind == "g1") {
            spec.kind = loopcut::GenSpec::Kind::G1;
            spec.n = n;
            spec.p = p;
        } else if (kind == "g2") {
            spec.kind = loopcut::GenSpec::Kind::G2;
            spec.n = n;
            spec.m = m;
            spec.keep_connected = keep_connected;
        } else if (kind == "adv") {
            spec.kind = loopcut::GenSpec::Kind::ADV;
            spec.k = k;
        } else {
            throw loopcut::validation_error("unknown generator kind: " + kind);
        }
        if (values == "all2")
            spec.values = loopcut::ValuesAssignment::all2();
        else if (values == "uniform")
            spec.values = loopcut::ValuesAssignment::uniform(values_lo, values_hi);
        else
            throw loopcut::validation_error("unknown values assignment: " + values);
        spec.seed = seed;
        spec.validate();
        return spec;
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "generator: g1, g2 or adv")
            ->check(CLI::IsMember({"g1", "g2", "adv"}));
        cmd->add_option("--n", n, "node count (g1/g2)");
        cmd->add_option("--p", p, "arc probability (g1)");
        cmd->add_option("--m", m, "arc count (g2)");
        cmd->add_flag("--keep-connected", keep_connected, "keep the underlying graph connected (g2)");
        cmd->add_option("--k", k, "segment count (adv)");
        cmd->add_option("--values", values, "value assignment: all2 or uniform")
            ->check(CLI::IsMember({"all2", "uniform"}));
        cmd->add_option("--values-lo", values_lo, "uniform values lower bound");
        cmd->add_option("--values-hi", values_hi, "uniform values upper bound");
        cmd->add_option("--seed", seed, "generator seed");
    }
};

loopcut::SelectionPolicy policy_from(bool values_ascending, const std::string& weighted) {
    loopcut::SelectionPolicy policy;
    if (values_ascending)
        policy.value_order = loopcut::SelectionPolicy::ValueOrder::ascending;
    if (!weighted.empty()) {
        double wd = 0, wv = 0;
        char comma = 0;
        std::istringstream is(weighted);
        if (!(is >> wd >> comma >> wv) || comma != ',' || wd < 0 || wv < 0)
            throw loopcut::validation_error("--weighted expects \"w_degree,w_values\"");
        policy.weighted = {wd, wv};
    }
    return policy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loop cutset toolkit: generators, heuristic and exact cutsets, benchmarks"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a network file");
    GenFlags gen_flags;
    gen_flags.add_to(gen);
    std::string gen_out;
    gen->add_option("-o,--out", gen_out, "output path (file format JSON)")->required();

    // cut
    auto* cut = app.add_subcommand("cut", "compute a loop cutset for a network file");
    std::string cut_path, cut_alg = "a2", cut_weighted;
    bool cut_values_ascending = false;
    std::uint64_t cut_seed = 0;
    std::uint64_t cut_budget = loopcut::kDefaultExactBudget;
    cut->add_option("input", cut_path, "network file")->required();
    cut->add_option("--alg", cut_alg, "a1, a2, random or exact")
        ->check(CLI::IsMember({"a1", "a2", "random", "exact"}));
    cut->add_flag("--values-ascending", cut_values_ascending,
                  "break degree ties by smallest value count");
    cut->add_option("--weighted", cut_weighted, "weighted score \"w_degree,w_values\"");
    cut->add_option("--seed", cut_seed, "seed for --alg random");
    cut->add_option("--budget", cut_budget, "node-expansion budget for --alg exact");

    // validate
    auto* validate = app.add_subcommand("validate", "check a candidate cutset");
    std::string validate_path;
    std::vector<int> validate_members;
    validate->add_option("input", validate_path, "network file")->required();
    validate->add_option("--cutset", validate_members, "candidate member ids")
        ->required()
        ->delimiter(',');

    // bench
    auto* bench = app.add_subcommand("bench", "run a seeded comparison benchmark");
    GenFlags bench_flags;
    bench_flags.add_to(bench);
    std::string bench_config, bench_out, bench_format = "csv", bench_algorithms = "a1,a2,random,exact";
    int bench_trials = 100, bench_jobs = 1, bench_threshold = 20;
    std::uint64_t bench_master = 0, bench_budget = loopcut::kDefaultExactBudget;
    bench->add_option("--config", bench_config, "JSON config (overrides generator flags)");
    bench->add_option("--trials", bench_trials, "trial count");
    bench->add_option("--master-seed", bench_master, "master seed for trial derivation");
    bench->add_option("--algorithms", bench_algorithms, "comma list of a1,a2,random,exact");
    bench->add_option("--exact-threshold", bench_threshold,
                      "run exact only when post-pruning nodes <= this");
    bench->add_option("--exact-budget", bench_budget, "exact node-expansion budget");
    bench->add_option("--jobs", bench_jobs, "parallel trial workers");
    bench->add_option("--format", bench_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("-o,--out", bench_out, "report path (stdout when omitted)");

    // adv-demo
    auto* demo = app.add_subcommand("adv-demo", "adversarial family demo: heuristics vs exact");
    int demo_k = 4;
    demo->add_option("k", demo_k, "segment count (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            auto spec = gen_flags.to_spec();
            loopcut::Network net = loopcut::generate(spec);
            write_file(gen_out, loopcut::save_network(net));
            nlohmann::ordered_json prov;
            prov["kind"] = spec.to_json()["kind"];
            prov["params"] = spec.to_json();
            prov["params"].erase("kind");
            prov["params"].erase("seed");
            prov["seed"] = spec.seed;
            write_file(gen_out + ".prov.json", prov.dump());
            nlohmann::ordered_json out;
            out["path"] = gen_out;
            out["nodes"] = net.node_count();
            out["arcs"] = net.arc_count();
            print_json(out, pretty);
        } else if (*cut) {
            loopcut::Network net = loopcut::load_network(read_file(cut_path));
            auto policy = policy_from(cut_values_ascending, cut_weighted);
            loopcut::Cutset cs;
            if (cut_alg == "a1")
                cs = loopcut::run_heuristic(net, loopcut::Algorithm::A1, policy);
            else if (cut_alg == "a2")
                cs = loopcut::run_heuristic(net, loopcut::Algorithm::A2, policy);
            else if (cut_alg == "random")
                cs = loopcut::run_random_baseline(net, cut_seed);
            else {
                try {
                    cs = loopcut::exact_min_cutset(net, cut_budget);
                } catch (const loopcut::budget_exceeded& e) {
                    print_json(e.best.to_json(), pretty);
                    std::cerr << "exact search budget exceeded; best-so-far printed\n";
                    return kExitBudget;
                }
            }
            print_json(cs.to_json(), pretty);
        } else if (*validate) {
            loopcut::Network net = loopcut::load_network(read_file(validate_path));
            std::set<int> members(validate_members.begin(), validate_members.end());
            nlohmann::ordered_json out;
            out["valid"] = loopcut::is_valid_cutset(net, members);
            print_json(out, pretty);
        } else if (*bench) {
            loopcut::GenSpec spec;
            loopcut::ComparisonOptions options;
            options.master_seed = bench_master;
            options.exact_threshold = bench_threshold;
            options.exact_budget = bench_budget;
            options.jobs = bench_jobs;
            if (!bench_config.empty()) {
                auto cfg = nlohmann::json::parse(read_file(bench_config));
                spec = loopcut::GenSpec::from_json(cfg);
                if (cfg.contains("trials")) bench_trials = cfg["trials"].get<int>();
                if (cfg.contains("master_seed"))
                    options.master_seed = cfg["master_seed"].get<std::uint64_t>();
                if (cfg.contains("algorithms"))
                    bench_algorithms = cfg["algorithms"].get<std::string>();
                if (cfg.contains("exact_threshold"))
                    options.exact_threshold = cfg["exact_threshold"].get<int>();
            } else {
                spec = bench_flags.to_spec();
            }
            options.algorithms.clear();
            std::istringstream alg_list(bench_algorithms);
            std::string tok;
            while (std::getline(alg_list, tok, ',')) {
                if (tok == "a1") options.algorithms.insert(loopcut::Algorithm::A1);
                else if (tok == "a2") options.algorithms.insert(loopcut::Algorithm::A2);
                else if (tok == "random") options.algorithms.insert(loopcut::Algorithm::Random);
                else if (tok == "exact") options.algorithms.insert(loopcut::Algorithm::Exact);
                else throw loopcut::validation_error("unknown algorithm: " + tok);
            }
            auto result = loopcut::run_comparison(spec, bench_trials, options);
            auto format = bench_format == "csv" ? loopcut::ReportFormat::csv
                                                : loopcut::ReportFormat::json;
            std::string report = loopcut::emit_report(result.table, result.records, format);
            if (bench_out.empty())
                std::cout << report;
            else
                write_file(bench_out, report);
            std::cerr << result.table.row_key << ": trials=" << result.table.trials
                      << " equal=" << result.table.equal
                      << " a1_smaller=" << result.table.a1_smaller
                      << " a2_smaller=" << result.table.a2_smaller << "\n";
        } else if (*demo) {
            loopcut::Network net = loopcut::gen_adv(demo_k);
            auto a1 = loopcut::run_heuristic(net, loopcut::Algorithm::A1);
            auto a2 = loopcut::run_heuristic(net, loopcut::Algorithm::A2);
            auto exact = loopcut::exact_min_cutset(net);
            nlohmann::ordered_json out;
            out["k"] = demo_k;
            out["a1_size"] = a1.size();
            out["a2_size"] = a2.size();
            out["exact_size"] = exact.size();
            print_json(out, pretty);
        }
    } catch (const loopcut::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const loopcut::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const loopcut::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
