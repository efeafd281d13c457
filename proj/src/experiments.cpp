#include "loopcut/experiments.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "loopcut/heuristics.hpp"
#include "loopcut/rng.hpp"

namespace loopcut {

namespace {

constexpr std::uint64_t kRandomAlgoSalt = 0x72616E646F6D7031ULL;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

AlgoStats stats_for(const Network& net, const Cutset& cs, double wall_ms) {
    AlgoStats s;
    s.size = static_cast<int>(cs.size());
    s.weight = cutset_weight(net, {cs.members.begin(), cs.members.end()});
    s.wall_ms = wall_ms;
    s.fallback = cs.used_fallback();
    return s;
}

void check_valid(const Network& net, const Cutset& cs, int trial, std::uint64_t seed) {
    if (!is_valid_cutset(net, {cs.members.begin(), cs.members.end()})) {
        std::ostringstream os;
        os << "invalid cutset from " << algorithm_name(cs.algorithm) << " at trial " << trial
           << " (seed " << seed << ")";
        throw std::logic_error(os.str());
    }
}

TrialRecord run_trial(const GenSpec& spec, int trial, const ComparisonOptions& options) {
    TrialRecord rec;
    rec.trial = trial;
    rec.seed = rng::derive_seed(options.master_seed, static_cast<std::uint64_t>(trial));

    GenSpec trial_spec = spec;
    trial_spec.seed = rec.seed;
    Network net = generate(trial_spec);
    rec.nodes = static_cast<int>(net.node_count());
    rec.arcs = static_cast<int>(net.arc_count());

    auto timed_heuristic = [&](Algorithm a) {
        auto t0 = std::chrono::steady_clock::now();
        Cutset cs = run_heuristic(net, a);
        double ms = elapsed_ms(t0);
        check_valid(net, cs, trial, rec.seed);
        return stats_for(net, cs, ms);
    };

    if (options.algorithms.count(Algorithm::A1)) rec.a1 = timed_heuristic(Algorithm::A1);
    if (options.algorithms.count(Algorithm::A2)) rec.a2 = timed_heuristic(Algorithm::A2);
    if (options.algorithms.count(Algorithm::Random)) {
        auto t0 = std::chrono::steady_clock::now();
        Cutset cs = run_random_baseline(net, rng::mix64(rec.seed ^ kRandomAlgoSalt));
        double ms = elapsed_ms(t0);
        check_valid(net, cs, trial, rec.seed);
        rec.random_pick = stats_for(net, cs, ms);
    }
    if (options.algorithms.count(Algorithm::Exact)) {
        Network pruned = prune_degree_one(net);
        if (static_cast<int>(pruned.node_count()) > options.exact_threshold) {
            rec.exact_skipped = true;
        } else {
            auto t0 = std::chrono::steady_clock::now();
            try {
                Cutset cs = exact_min_cutset(net, options.exact_budget);
                double ms = elapsed_ms(t0);
                check_valid(net, cs, trial, rec.seed);
                rec.exact = stats_for(net, cs, ms);
                rec.exact_optimal = true;
            } catch (const budget_exceeded& e) {
                double ms = elapsed_ms(t0);
                check_valid(net, e.best, trial, rec.seed);
                rec.exact = stats_for(net, e.best, ms);
                rec.exact_optimal = false;
            }
        }
    }
    return rec;
}

}  // namespace

ComparisonResult run_comparison(const GenSpec& spec, int trials,
                                const ComparisonOptions& options) {
    if (trials < 1) throw validation_error("trials must be >= 1");
    spec.validate();

    std::vector<TrialRecord> records(trials);
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (int t = 0; t < trials; ++t) records[t] = run_trial(spec, t, options);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto worker = [&] {
            for (;;) {
                int t = next.fetch_add(1);
                if (t >= trials) return;
                try {
                    records[t] = run_trial(spec, t, options);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    SummaryTable table;
    table.row_key = spec.row_key();
    table.master_seed = options.master_seed;
    table.trials = trials;
    for (const TrialRecord& rec : records) {
        if (rec.a1 && rec.a2) {
            if (rec.a1->size == rec.a2->size)
                ++table.equal;
            else if (rec.a1->size < rec.a2->size)
                ++table.a1_smaller;
            else
                ++table.a2_smaller;
        }
        if (rec.exact && rec.exact_optimal && rec.a1 && rec.a2 &&
            (rec.a1->size > rec.exact->size || rec.a2->size > rec.exact->size)) {
            table.optimal_comparison.push_back(
                {rec.trial, rec.a1->size, rec.a2->size, rec.exact->size});
        }
    }
    return {std::move(table), std::move(records)};
}

namespace {

std::string opt_int(const std::optional<AlgoStats>& s) {
    return s ? std::to_string(s->size) : std::string();
}

std::string opt_weight(const std::optional<AlgoStats>& s) {
    if (!s) return {};
    return s->weight.overflow ? "overflow" : std::to_string(s->weight.value);
}

nlohmann::ordered_json stats_json(const AlgoStats& s) {
    nlohmann::ordered_json j;
    j["size"] = s.size;
    if (s.weight.overflow)
        j["weight"] = "overflow";
    else
        j["weight"] = s.weight.value;
    j["wall_ms"] = s.wall_ms;
    if (s.fallback) j["fallback"] = true;
    return j;
}

}  // namespace

std::string emit_report(const SummaryTable& table, const std::vector<TrialRecord>& records,
                        ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::ostringstream os;
        os << "# loopcut " << kArtifactVersion << "\n";
        os << "# row=" << table.row_key << " master_seed=" << table.master_seed << "\n";
        os << "trial,seed,n,arcs,a1_size,a2_size,random_size,exact_size,"
              "a1_weight,a2_weight,exact_optimal_flag\n";
        for (const TrialRecord& r : records) {
            os << r.trial << ',' << r.seed << ',' << r.nodes << ',' << r.arcs << ','
               << opt_int(r.a1) << ',' << opt_int(r.a2) << ',' << opt_int(r.random_pick) << ','
               << opt_int(r.exact) << ',' << opt_weight(r.a1) << ',' << opt_weight(r.a2) << ','
               << (r.exact ? (r.exact_optimal ? "1" : "0") : "") << "\n";
        }
        return os.str();
    }

    nlohmann::ordered_json j;
    j["version"] = kArtifactVersion;
    j["master_seed"] = table.master_seed;
    j["summary"] = {{"row", table.row_key},
                    {"trials", table.trials},
                    {"equal", table.equal},
                    {"a1_smaller", table.a1_smaller},
                    {"a2_smaller", table.a2_smaller}};
    j["summary"]["optimal_comparison"] = nlohmann::ordered_json::array();
    for (const auto& e : table.optimal_comparison)
        j["summary"]["optimal_comparison"].push_back(
            {{"trial", e.trial}, {"a1", e.a1}, {"a2", e.a2}, {"exact", e.exact}});
    j["records"] = nlohmann::ordered_json::array();
    for (const TrialRecord& r : records) {
        nlohmann::ordered_json rec;
        rec["trial"] = r.trial;
        rec["seed"] = r.seed;
        rec["n"] = r.nodes;
        rec["arcs"] = r.arcs;
        if (r.a1) rec["a1"] = stats_json(*r.a1);
        if (r.a2) rec["a2"] = stats_json(*r.a2);
        if (r.random_pick) rec["random"] = stats_json(*r.random_pick);
        if (r.exact) {
            rec["exact"] = stats_json(*r.exact);
            rec["exact"]["optimal"] = r.exact_optimal;
        }
        if (r.exact_skipped) rec["exact_skipped"] = true;
        j["records"].push_back(std::move(rec));
    }
    return j.dump();
}

}  // namespace loopcut
