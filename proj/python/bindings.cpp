#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netform/adversary.hpp"
#include "netform/catalog.hpp"
#include "netform/deviation.hpp"
#include "netform/dynamics.hpp"
#include "netform/harness.hpp"
#include "netform/json_io.hpp"
#include "netform/payoff.hpp"
#include "netform/rng.hpp"
#include "netform/structure.hpp"

namespace py = pybind11;
using namespace netform;

namespace {

GameState make_state(int n, double c, double b,
                     const std::vector<std::pair<std::vector<int>, bool>>& players) {
    std::vector<PlayerStrategy> strategies;
    for (const auto& [purchases, immunized] : players)
        strategies.push_back({purchases, immunized});
    return GameState(n, c, b, std::move(strategies));
}

DynamicsConfig make_config(int max_rounds, AdversaryKind adversary, const std::string& tiebreak,
                           std::uint64_t seed, const std::vector<int>& order,
                           int script_components) {
    DynamicsConfig cfg;
    cfg.max_rounds = max_rounds;
    cfg.adversary = adversary;
    cfg.order = order;
    if (tiebreak == "prefer-current")
        cfg.policy = TieBreakPolicy::prefer_current();
    else if (tiebreak == "random")
        cfg.policy = TieBreakPolicy::random_among_best(seed);
    else if (tiebreak == "adversarial")
        cfg.policy = scripted_cycle_policy(script_components);
    else
        throw std::invalid_argument("unknown tiebreak '" + tiebreak + "'");
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "attack/immunization network formation game toolkit";

    py::enum_<AdversaryKind>(m, "Adversary")
        .value("CARNAGE", AdversaryKind::MaxCarnage)
        .value("RANDOM", AdversaryKind::RandomAttack)
        .value("DISRUPTION", AdversaryKind::MaxDisruption);

    py::enum_<EquilibriumClass>(m, "EquilibriumClass")
        .value("NONE", EquilibriumClass::None)
        .value("LINKSTABLE", EquilibriumClass::Linkstable)
        .value("SWAPSTABLE", EquilibriumClass::Swapstable)
        .value("NASH", EquilibriumClass::Nash);

    py::class_<GameState>(m, "GameState")
        .def(py::init(&make_state), py::arg("n"), py::arg("c"), py::arg("b"),
             py::arg("players"))
        .def_static("empty", &GameState::empty, py::arg("n"), py::arg("c"), py::arg("b"))
        .def_property_readonly("n", &GameState::n)
        .def_property_readonly("c", &GameState::edge_cost)
        .def_property_readonly("b", &GameState::immunization_cost)
        .def("immunized", &GameState::immunized)
        .def("purchases", [](const GameState& s, int i) { return s.strategy(i).purchases; })
        .def("with_strategy",
             [](const GameState& s, int i, const std::vector<int>& purchases, bool immunized) {
                 return s.with_strategy(i, {purchases, immunized});
             })
        .def("to_json", [](const GameState& s) { return state_to_json(s).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return state_from_json(nlohmann::json::parse(text));
                    })
        .def("__eq__", [](const GameState& a, const GameState& b) { return a == b; });

    m.def("edges", [](const GameState& s) { return build_induced_graph(s).edges; });
    m.def("vulnerable_regions", [](const GameState& s) {
        return decompose_regions(s, build_induced_graph(s)).vulnerable_regions;
    });
    m.def(
        "attack_distribution",
        [](const GameState& s, AdversaryKind kind) {
            const auto d = attack_distribution(s, kind);
            return py::make_tuple(d.region_prob, d.seed_prob, d.targeted);
        },
        py::arg("state"), py::arg("adversary"),
        "per-region probabilities, per-vertex seed probabilities, targeted region indices");
    m.def("expected_utility", [](const GameState& s, AdversaryKind kind, int i) {
        return expected_utility(s, attack_distribution(s, kind), i);
    });
    m.def("social_welfare",
          [](const GameState& s, AdversaryKind kind) { return social_welfare(s, kind); });
    m.def("post_attack_welfare", &post_attack_welfare);

    m.def(
        "classify",
        [](const GameState& s, AdversaryKind kind, std::int64_t nash_limit) {
            const auto rep = classify(s, kind, nash_limit);
            return py::make_tuple(rep.cls, report_to_json(rep).dump());
        },
        py::arg("state"), py::arg("adversary"),
        py::arg("nash_limit") = std::int64_t{1} << 20,
        "equilibrium class and the full report as a JSON string");

    m.def(
        "run_dynamics",
        [](const GameState& s, int max_rounds, AdversaryKind adversary,
           const std::string& tiebreak, std::uint64_t seed, const std::vector<int>& order) {
            const auto cfg =
                make_config(max_rounds, adversary, tiebreak, seed, order, s.n() / 4);
            const auto trace = run_swapstable_dynamics(s, cfg);
            return py::make_tuple(outcome_name(trace.outcome), trace.final_state,
                                  trace_to_json(trace, cfg).dump());
        },
        py::arg("state"), py::arg("max_rounds") = 200,
        py::arg("adversary") = AdversaryKind::MaxCarnage,
        py::arg("tiebreak") = "prefer-current", py::arg("seed") = 0,
        py::arg("order") = std::vector<int>{},
        "outcome name, final state, and the trace as a JSON string");

    m.def("erdos_renyi_init", &erdos_renyi_init, py::arg("n"), py::arg("edge_probability"),
          py::arg("c"), py::arg("b"), py::arg("seed"));
    m.def("erdos_renyi_avg_degree_init", &erdos_renyi_avg_degree_init, py::arg("n"),
          py::arg("avg_degree"), py::arg("c"), py::arg("b"), py::arg("seed"));

    m.def(
        "catalog",
        [](const std::string& family, int n, int k, int f, int extra, double c, double b) {
            const auto r = generate(family_from_name(family), {n, k, f, extra}, c, b);
            return py::make_tuple(r.state, equilibrium_class_name(r.expected_class),
                                  adversary_name(r.expected_adversary), r.valid);
        },
        py::arg("family"), py::arg("n") = 0, py::arg("k") = 0, py::arg("f") = 0,
        py::arg("extra") = 0, py::arg("c") = 1.0, py::arg("b") = 1.0,
        "state, expected class, expected adversary, validity");
    m.def("family_names", &family_names);

    m.def("analyze",
          [](const GameState& s, AdversaryKind kind) { return analyze_to_json(s, kind).dump(); });
    m.def("check_sparsity", [](const GameState& s) {
        const auto v = check_sparsity(s);
        return py::make_tuple(v.edge_count, v.bound, v.within, v.applicable);
    });
    m.def("is_chord_free_abstraction", [](const GameState& s) {
        const auto abs = abstract_graph(s);
        return abs.simple() && is_chord_free(abs).chord_free;
    });
    m.def("regions_are_trees",
          [](const GameState& s) { return regions_are_trees(s).all_trees; });
    m.def("equivalent",
          [](const GameState& a, const GameState& b) { return equivalent(a, b); });
    m.def("check_well_behaved", &check_well_behaved, py::arg("state_a"), py::arg("state_b"),
          py::arg("adversary"));
    m.def(
        "nash_best_response",
        [](const GameState& s, int actor, AdversaryKind kind, std::int64_t limit) {
            const auto br = nash_best_response(s, actor, kind, limit);
            return py::make_tuple(br.strategy.purchases, br.strategy.immunized, br.utility);
        },
        py::arg("state"), py::arg("actor"), py::arg("adversary"),
        py::arg("limit") = std::int64_t{1} << 20,
        "best purchases, immunization bit, and utility by exhaustive search");
    m.def("heavy_targeted_cut_vertices", [](const GameState& s, AdversaryKind kind) {
        const auto h = heavy_targeted_cut_vertices(s, kind);
        return py::make_tuple(h.vertices, h.epsilon);
    });
    m.def("welfare_certificate", [](const GameState& s, AdversaryKind kind) {
        const auto cert = welfare_certificate(s, kind);
        py::dict out;
        out["n"] = cert.n;
        out["c_max"] = cert.c_max;
        out["epsilon"] = cert.epsilon;
        out["bound"] = cert.bound;
        out["measured_welfare"] = cert.measured_welfare;
        out["holds"] = cert.holds;
        out["non_trivial"] = cert.non_trivial;
        return out;
    });

    m.attr("__version__") = "0.1.0";
    m.attr("rng_algorithm") = rng_algorithm_name();
}
