#include "netform/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "netform/payoff.hpp"
#include "netform/rng.hpp"

namespace netform {

using nlohmann::json;

json state_to_json(const GameState& state) {
    json players = json::array();
    for (int i = 0; i < state.n(); ++i) {
        players.push_back({{"id", i},
                           {"immunized", state.immunized(i)},
                           {"purchases", state.strategy(i).purchases}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"n", state.n()},
                {"c", state.edge_cost()},
                {"b", state.immunization_cost()},
                {"players", players}};
}

GameState state_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("state file: top level must be an object");
    for (const char* key : {"n", "c", "b", "players"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("state file: missing field '") + key + "'");
    const int n = j.at("n").get<int>();
    std::vector<PlayerStrategy> strategies(n);
    const auto& players = j.at("players");
    if (!players.is_array() || static_cast<int>(players.size()) != n)
        throw std::invalid_argument("state file: 'players' must list exactly n records");
    std::vector<char> seen(n, 0);
    for (const auto& p : players) {
        const int id = p.at("id").get<int>();
        if (id < 0 || id >= n || seen[id])
            throw std::invalid_argument("state file: bad or duplicate player id " +
                                        std::to_string(id));
        seen[id] = 1;
        strategies[id].immunized = p.at("immunized").get<bool>();
        strategies[id].purchases = p.at("purchases").get<std::vector<int>>();
    }
    return GameState(n, j.at("c").get<double>(), j.at("b").get<double>(),
                     std::move(strategies));
}

GameState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("state file " + path + ": " + e.what());
    }
    return state_from_json(j);
}

void save_state_file(const GameState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << state_to_json(state).dump(2) << "\n";
}

namespace {

json deviation_to_json(const Deviation& d) {
    const char* change = "none";
    switch (d.change) {
        case Deviation::Change::None: change = "none"; break;
        case Deviation::Change::Drop: change = "drop"; break;
        case Deviation::Change::Add: change = "add"; break;
        case Deviation::Change::Swap: change = "swap"; break;
    }
    json out{{"actor", d.actor},
             {"change", change},
             {"toggle_immunization", d.toggle_immunization}};
    if (d.drop_target >= 0) out["drop_target"] = d.drop_target;
    if (d.add_target >= 0) out["add_target"] = d.add_target;
    return out;
}

}  // namespace

json report_to_json(const EquilibriumReport& report) {
    json out{{"schema_version", kSchemaVersion},
             {"class", equilibrium_class_name(report.cls)},
             {"nash_unknown", report.nash_unknown}};
    if (report.witness) {
        out["witness"] = deviation_to_json(*report.witness);
        out["utility_before"] = report.utility_before;
        out["utility_after"] = report.utility_after;
    }
    if (report.nash_witness) {
        out["nash_witness"] = {{"actor", report.nash_witness->first},
                               {"purchases", report.nash_witness->second.purchases},
                               {"immunized", report.nash_witness->second.immunized}};
        out["utility_before"] = report.utility_before;
        out["utility_after"] = report.utility_after;
    }
    return out;
}

json trace_to_json(const DynamicsTrace& trace, const DynamicsConfig& config) {
    const char* tiebreak = "prefer-current";
    if (config.policy.kind == TieBreakKind::RandomAmongBest) tiebreak = "random";
    if (config.policy.kind == TieBreakKind::Adversarial) tiebreak = "adversarial";
    json rounds = json::array();
    for (const auto& m : trace.rounds)
        rounds.push_back({{"round", m.round},
                          {"edges", m.edge_count},
                          {"immunizations", m.immunization_count},
                          {"avg_welfare", m.avg_welfare},
                          {"changes", m.changes}});
    json out{{"schema_version", kSchemaVersion},
             {"config",
              {{"adversary", adversary_name(config.adversary)},
               {"max_rounds", config.max_rounds},
               {"tiebreak", tiebreak},
               {"tiebreak_seed", config.policy.seed},
               {"deviations",
                config.deviations == DeviationSet::Swapstable ? "swapstable" : "linkstable"},
               {"rng", rng_algorithm_name()}}},
             {"initial",
              {{"edges", trace.initial_edge_count},
               {"immunizations", trace.initial_immunization_count},
               {"avg_welfare", trace.initial_avg_welfare}}},
             {"rounds", rounds},
             {"outcome", outcome_name(trace.outcome)},
             {"final_state", state_to_json(trace.final_state)}};
    if (trace.outcome == DynamicsOutcome::Converged)
        out["rounds_to_converge"] = trace.rounds_to_converge;
    if (trace.outcome == DynamicsOutcome::Cycled) {
        out["first_repeat_round"] = trace.first_repeat_round;
        out["period"] = trace.period;
    }
    return out;
}

json analyze_to_json(const GameState& state, AdversaryKind kind) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    const AttackDistribution dist = attack_distribution(state, graph, decomp, kind);
    const AbstractGraph abs = abstract_graph(graph, decomp);
    const ChordFreeResult chord = is_chord_free(abs);
    const SparsityVerdict sparsity = check_sparsity(state);
    const RegionTreeResult trees = regions_are_trees(state);
    const ConnectivityFlags conn = connectivity_and_singletons(state, kind);
    const WelfareCertificate cert = welfare_certificate(state, kind);
    const HeavyCutVertices heavy = heavy_targeted_cut_vertices(state, kind);
    const DegreeStats deg = degree_stats(graph);

    json regions = json::array();
    for (const auto& r : decomp.vulnerable_regions) regions.push_back(r);

    json out{{"schema_version", kSchemaVersion},
             {"adversary", adversary_name(kind)},
             {"n", state.n()},
             {"edge_count", graph.edge_count()},
             {"immunized", state.immunized_set()},
             {"vulnerable_regions", regions},
             {"targeted_regions", dist.targeted},
             {"region_prob", dist.region_prob},
             {"sparsity",
              {{"edge_count", sparsity.edge_count},
               {"bound", sparsity.bound},
               {"within", sparsity.within},
               {"applicable", sparsity.applicable}}},
             {"abstract",
              {{"nodes", abs.node_count},
               {"edges", abs.edges.size()},
               {"simple", abs.simple()},
               {"chord_free", chord.chord_free}}},
             {"regions_are_trees", trees.all_trees},
             {"connected", conn.connected},
             {"all_targeted_singletons", conn.all_targeted_singletons},
             {"non_trivial", conn.non_trivial},
             {"welfare_certificate",
              {{"c_max", cert.c_max},
               {"epsilon", cert.epsilon},
               {"bound", cert.bound},
               {"measured_welfare", cert.measured_welfare},
               {"holds", cert.holds}}},
             {"heavy_targeted_cut_vertices",
              {{"epsilon", heavy.epsilon}, {"vertices", heavy.vertices}}},
             {"degree_stats",
              {{"max_degree", deg.max_degree},
               {"avg_degree", deg.avg_degree},
               {"ratio", deg.ratio},
               {"histogram", deg.degree_histogram}}}};
    if (chord.witness) out["abstract"]["chord_witness"] = {chord.witness->first, chord.witness->second};
    if (trees.witness_region) out["region_tree_witness"] = *trees.witness_region;
    return out;
}

}  // namespace netform
