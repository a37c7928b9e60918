#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "netform/dynamics.hpp"
#include "netform/game.hpp"

namespace netform {

/// Erdős–Rényi initial state: each unordered pair is an edge independently
/// with probability p; the purchaser of every edge is a uniformly random
/// endpoint; nobody starts immunized. Deterministic per seed.
GameState erdos_renyi_init(int n, double edge_probability, double c, double b,
                           std::uint64_t seed);
GameState erdos_renyi_avg_degree_init(int n, double avg_degree, double c, double b,
                                      std::uint64_t seed);

struct SweepConfig {
    std::string id;
    int n = 0;
    double c = 0, b = 0;
    double init_avg_degree = -1;  // one of these two must be set
    double init_density = -1;
    AdversaryKind adversary = AdversaryKind::MaxCarnage;
    int trials = 1;
    int max_rounds = 200;
    std::string order = "ascending";  // or "shuffled" (per trial)
    TieBreakKind tiebreak = TieBreakKind::PreferCurrent;
    std::uint64_t master_seed = 0;

    double edge_probability() const;
};

struct SweepSpec {
    std::vector<SweepConfig> configs;
};

SweepSpec sweep_spec_from_json(const nlohmann::json& j);
SweepSpec load_sweep_spec(const std::string& path);

/// One row per trial: final-state metrics plus the structural suite verdicts.
struct TrialRecord {
    std::string config_id;
    int n = 0;
    double c = 0, b = 0;
    double init_value = 0;  // avg degree or density, as configured
    std::string init_mode;  // "avg_degree" | "density"
    std::string adversary;
    std::string order;
    std::string tiebreak;
    std::uint64_t master_seed = 0;
    int trial = 0;
    std::string outcome;
    int rounds = 0;
    int edges = 0;
    int immunizations = 0;
    double welfare = 0;
    double avg_welfare = 0;
    double degree_ratio = 0;
    int max_degree = 0;
    bool highest_degree_immunized = false;
    std::string eq_class;
    bool nash_unknown = false;
    bool sparsity_ok = false;
    bool abstraction_chord_free = false;
    bool regions_trees = false;
    bool connected = false;
    bool targeted_singletons = false;
    bool non_trivial = false;
    bool welfare_cert_holds = false;
};

struct RoundRecord {
    std::string config_id;
    int trial = 0;
    int round = 0;
    int edges = 0;
    int immunizations = 0;
    double avg_welfare = 0;
    int changes = 0;
};

/// Runs every (config, trial) pair; trials are independent and fully
/// determined by (master_seed, trial index), so the available parallelism
/// (capped by NETFORM_THREADS) never changes results.
std::vector<TrialRecord> run_sweep(const SweepSpec& spec,
                                   std::vector<RoundRecord>* round_records = nullptr);

/// Single trial, exposed for tests and the acceptance suite.
DynamicsTrace run_trial(const SweepConfig& config, int trial);
TrialRecord summarize_trial(const SweepConfig& config, int trial, const DynamicsTrace& trace);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                      bool deterministic);
void write_rounds_csv(std::ostream& out, const std::vector<RoundRecord>& records);

int thread_budget();  // NETFORM_THREADS override, else hardware concurrency

}  // namespace netform
