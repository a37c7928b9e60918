#include "netform/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "netform/deviation.hpp"
#include "netform/payoff.hpp"
#include "netform/rng.hpp"
#include "netform/structure.hpp"

namespace netform {

GameState erdos_renyi_init(int n, double edge_probability, double c, double b,
                           std::uint64_t seed) {
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<PlayerStrategy> strategies(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_double() >= edge_probability) continue;
            const int buyer = rng.next_bool() ? i : j;
            strategies[buyer].purchases.push_back(buyer == i ? j : i);
        }
    return GameState(n, c, b, std::move(strategies));
}

GameState erdos_renyi_avg_degree_init(int n, double avg_degree, double c, double b,
                                      std::uint64_t seed) {
    const double p = n > 1 ? avg_degree / (n - 1) : 0.0;
    return erdos_renyi_init(n, std::min(1.0, std::max(0.0, p)), c, b, seed);
}

double SweepConfig::edge_probability() const {
    if (init_density >= 0) return init_density;
    if (init_avg_degree >= 0 && n > 1)
        return std::min(1.0, init_avg_degree / (n - 1));
    return 0.0;
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    if (!j.contains("configs") || !j.at("configs").is_array())
        throw std::invalid_argument("sweep spec: missing 'configs' array");
    int index = 0;
    for (const auto& cj : j.at("configs")) {
        SweepConfig cfg;
        cfg.id = cj.value("id", "config" + std::to_string(index));
        cfg.n = cj.at("n").get<int>();
        cfg.c = cj.at("c").get<double>();
        cfg.b = cj.at("b").get<double>();
        if (cj.contains("init_avg_degree")) cfg.init_avg_degree = cj.at("init_avg_degree").get<double>();
        if (cj.contains("init_density")) cfg.init_density = cj.at("init_density").get<double>();
        if (cfg.init_avg_degree < 0 && cfg.init_density < 0)
            throw std::invalid_argument("sweep spec: config needs init_avg_degree or init_density");
        cfg.adversary = adversary_from_name(cj.value("adversary", "carnage"));
        cfg.trials = cj.value("trials", 1);
        if (cfg.trials < 1) throw std::invalid_argument("sweep spec: trials must be >= 1");
        cfg.max_rounds = cj.value("max_rounds", 200);
        cfg.order = cj.value("order", "ascending");
        const std::string tb = cj.value("tiebreak", "prefer-current");
        if (tb == "prefer-current")
            cfg.tiebreak = TieBreakKind::PreferCurrent;
        else if (tb == "random")
            cfg.tiebreak = TieBreakKind::RandomAmongBest;
        else
            throw std::invalid_argument("sweep spec: unknown tiebreak '" + tb + "'");
        cfg.master_seed = cj.value("master_seed", 0ull);
        spec.configs.push_back(cfg);
        ++index;
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sweep spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("sweep spec " + path + ": " + e.what());
    }
    return sweep_spec_from_json(j);
}

DynamicsTrace run_trial(const SweepConfig& config, int trial) {
    SplitMix64 stream = SplitMix64::substream(config.master_seed, trial);
    const std::uint64_t init_seed = stream.next_u64();
    const std::uint64_t tiebreak_seed = stream.next_u64();
    const std::uint64_t order_seed = stream.next_u64();

    GameState initial = erdos_renyi_init(config.n, config.edge_probability(), config.c,
                                         config.b, init_seed);
    DynamicsConfig dyn;
    dyn.max_rounds = config.max_rounds;
    dyn.adversary = config.adversary;
    if (config.tiebreak == TieBreakKind::RandomAmongBest)
        dyn.policy = TieBreakPolicy::random_among_best(tiebreak_seed);
    if (config.order == "shuffled") {
        std::vector<int> order(config.n);
        for (int i = 0; i < config.n; ++i) order[i] = i;
        SplitMix64 order_rng(order_seed);
        for (int i = config.n - 1; i > 0; --i)
            std::swap(order[i], order[order_rng.next_below(i + 1)]);
        dyn.order = std::move(order);
    } else if (config.order != "ascending") {
        throw std::invalid_argument("unknown order policy '" + config.order + "'");
    }
    return run_swapstable_dynamics(initial, dyn);
}

TrialRecord summarize_trial(const SweepConfig& config, int trial, const DynamicsTrace& trace) {
    TrialRecord rec;
    rec.config_id = config.id;
    rec.n = config.n;
    rec.c = config.c;
    rec.b = config.b;
    rec.init_mode = config.init_density >= 0 ? "density" : "avg_degree";
    rec.init_value = config.init_density >= 0 ? config.init_density : config.init_avg_degree;
    rec.adversary = adversary_name(config.adversary);
    rec.order = config.order;
    rec.tiebreak = config.tiebreak == TieBreakKind::PreferCurrent ? "prefer-current" : "random";
    rec.master_seed = config.master_seed;
    rec.trial = trial;
    rec.outcome = outcome_name(trace.outcome);
    rec.rounds = static_cast<int>(trace.rounds.size());

    const GameState& final_state = trace.final_state;
    const InducedGraph graph = build_induced_graph(final_state);
    rec.edges = graph.edge_count();
    rec.immunizations = final_state.immunized_count();
    rec.welfare = social_welfare(final_state, config.adversary);
    rec.avg_welfare = rec.welfare / config.n;
    const DegreeStats deg = degree_stats(graph);
    rec.degree_ratio = deg.ratio;
    rec.max_degree = deg.max_degree;
    for (int v = 0; v < config.n; ++v)
        if (graph.degree(v) == deg.max_degree) {
            rec.highest_degree_immunized = final_state.immunized(v);
            break;
        }

    const EquilibriumReport report = classify(final_state, config.adversary);
    rec.eq_class = equilibrium_class_name(report.cls);
    rec.nash_unknown = report.nash_unknown;

    rec.sparsity_ok = check_sparsity(final_state).within;
    const AbstractGraph abs = abstract_graph(final_state);
    rec.abstraction_chord_free = abs.simple() && is_chord_free(abs).chord_free;
    rec.regions_trees = regions_are_trees(final_state).all_trees;
    const ConnectivityFlags flags = connectivity_and_singletons(final_state, config.adversary);
    rec.connected = flags.connected;
    rec.targeted_singletons = flags.all_targeted_singletons;
    rec.non_trivial = flags.non_trivial;
    rec.welfare_cert_holds = welfare_certificate(final_state, config.adversary).holds;
    return rec;
}

int thread_budget() {
    if (const char* env = std::getenv("NETFORM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<TrialRecord> run_sweep(const SweepSpec& spec,
                                   std::vector<RoundRecord>* round_records) {
    struct Job {
        int config_index;
        int trial;
    };
    std::vector<Job> jobs;
    for (int ci = 0; ci < static_cast<int>(spec.configs.size()); ++ci)
        for (int t = 0; t < spec.configs[ci].trials; ++t) jobs.push_back({ci, t});

    std::vector<TrialRecord> records(jobs.size());
    std::vector<std::vector<RoundRecord>> rounds(jobs.size());
    std::atomic<std::size_t> next{0};
    const int threads = std::min<int>(thread_budget(), static_cast<int>(jobs.size()));

    auto worker = [&] {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) break;
            const SweepConfig& cfg = spec.configs[jobs[k].config_index];
            const DynamicsTrace trace = run_trial(cfg, jobs[k].trial);
            records[k] = summarize_trial(cfg, jobs[k].trial, trace);
            if (round_records) {
                for (const auto& m : trace.rounds)
                    rounds[k].push_back({cfg.id, jobs[k].trial, m.round, m.edge_count,
                                         m.immunization_count, m.avg_welfare, m.changes});
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (round_records)
        for (auto& r : rounds)
            round_records->insert(round_records->end(), r.begin(), r.end());
    return records;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                      bool deterministic) {
    out << "# netform sweep, rng=" << rng_algorithm_name();
    if (!deterministic) out << ", time=" << std::time(nullptr);
    out << "\n";
    out << "config_id,n,c,b,init_mode,init_value,adversary,order,tiebreak,master_seed,trial,"
           "outcome,rounds,edges,immunizations,welfare,avg_welfare,degree_ratio,max_degree,"
           "highest_degree_immunized,eq_class,nash_unknown,sparsity_ok,abstraction_chord_free,"
           "regions_trees,connected,targeted_singletons,non_trivial,welfare_cert_holds\n";
    for (const auto& r : records) {
        out << r.config_id << ',' << r.n << ',' << r.c << ',' << r.b << ',' << r.init_mode
            << ',' << r.init_value << ',' << r.adversary << ',' << r.order << ',' << r.tiebreak
            << ',' << r.master_seed << ',' << r.trial << ',' << r.outcome << ',' << r.rounds
            << ',' << r.edges << ',' << r.immunizations << ',' << r.welfare << ','
            << r.avg_welfare << ',' << r.degree_ratio << ',' << r.max_degree << ','
            << r.highest_degree_immunized << ',' << r.eq_class << ',' << r.nash_unknown << ','
            << r.sparsity_ok << ',' << r.abstraction_chord_free << ',' << r.regions_trees
            << ',' << r.connected << ',' << r.targeted_singletons << ',' << r.non_trivial
            << ',' << r.welfare_cert_holds << '\n';
    }
}

void write_rounds_csv(std::ostream& out, const std::vector<RoundRecord>& records) {
    out << "config_id,trial,round,edges,immunizations,avg_welfare,changes\n";
    for (const auto& r : records)
        out << r.config_id << ',' << r.trial << ',' << r.round << ',' << r.edges << ','
            << r.immunizations << ',' << r.avg_welfare << ',' << r.changes << '\n';
}

}  // namespace netform
