#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "netform/catalog.hpp"
#include "netform/deviation.hpp"
#include "netform/dynamics.hpp"
#include "netform/harness.hpp"
#include "netform/json_io.hpp"
#include "netform/payoff.hpp"
#include "netform/rng.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

int run(int argc, char** argv) {
    CLI::App app{"netform: attack/immunization network formation toolkit"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "classify a state as none/linkstable/swapstable/nash");
    std::string verify_file, verify_adv = "carnage";
    std::int64_t nash_limit = std::int64_t{1} << 20;
    verify->add_option("state-file", verify_file, "game state JSON")->required();
    verify->add_option("--adversary", verify_adv, "carnage|random|disruption");
    verify->add_option("--nash-limit", nash_limit, "max strategies for the Nash brute force");

    // analyze ------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "structural report for a state");
    std::string analyze_file, analyze_adv = "carnage";
    analyze->add_option("state-file", analyze_file, "game state JSON")->required();
    analyze->add_option("--adversary", analyze_adv, "carnage|random|disruption");

    // catalog ------------------------------------------------------------
    auto* catalog = app.add_subcommand("catalog", "write a canonical family instance");
    std::string cat_family, cat_out;
    double cat_c = 1.0, cat_b = 1.0;
    netform::CatalogParams cat_params;
    catalog->add_option("--family", cat_family, "family name")->required();
    catalog->add_option("--n", cat_params.n, "vertex count");
    catalog->add_option("--k", cat_params.k, "multiplicity parameter");
    catalog->add_option("--f", cat_params.f, "tree size / petal count");
    catalog->add_option("--extra", cat_params.extra, "singletons / height / components");
    catalog->add_option("--c", cat_c, "edge cost")->required();
    catalog->add_option("--b", cat_b, "immunization cost")->required();
    catalog->add_option("-o,--out", cat_out, "output state file (default stdout)");

    // dynamics -----------------------------------------------------------
    auto* dynamics = app.add_subcommand("dynamics", "run swapstable best-response dynamics");
    std::string dyn_file, dyn_adv = "carnage", dyn_tiebreak = "prefer-current";
    std::string dyn_order = "ascending", dyn_out;
    int dyn_rounds = 200, dyn_er_n = 0;
    double dyn_er_avg_degree = -1, dyn_er_density = -1, dyn_c = 2, dyn_b = 2;
    std::uint64_t dyn_seed = 0;
    dynamics->add_option("state-file", dyn_file, "game state JSON (omit with --er-n)");
    dynamics->add_option("--er-n", dyn_er_n, "Erdos-Renyi start: vertex count");
    dynamics->add_option("--er-avg-degree", dyn_er_avg_degree, "Erdos-Renyi target average degree");
    dynamics->add_option("--er-density", dyn_er_density, "Erdos-Renyi edge probability");
    dynamics->add_option("--c", dyn_c, "edge cost for --er-n starts");
    dynamics->add_option("--b", dyn_b, "immunization cost for --er-n starts");
    dynamics->add_option("--seed", dyn_seed, "seed for the start graph and tie-breaking");
    dynamics->add_option("--rounds", dyn_rounds, "round limit");
    dynamics->add_option("--order", dyn_order, "ascending|shuffled");
    dynamics->add_option("--tiebreak", dyn_tiebreak,
                         "prefer-current|random|adversarial (adversarial replays the canonical "
                         "cycling script; pair it with the best-response-cycle-paths family)");
    dynamics->add_option("--adversary", dyn_adv, "carnage|random|disruption");
    std::string dyn_devset = "swapstable";
    dynamics->add_option("--deviations", dyn_devset,
                         "swapstable|linkstable update moves (default swapstable)");
    dynamics->add_option("-o,--out", dyn_out, "trace JSON output (default stdout)");

    // sweep ----------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "run an experiment sweep from a spec file");
    std::string sweep_file, sweep_out = "trials.csv", sweep_rounds_out;
    bool sweep_deterministic = false;
    sweep->add_option("spec-file", sweep_file, "sweep spec JSON")->required();
    sweep->add_option("-o,--out", sweep_out, "trial CSV path");
    sweep->add_option("--rounds-out", sweep_rounds_out, "per-round long CSV path");
    sweep->add_flag("--deterministic", sweep_deterministic, "suppress the timestamp header");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        const netform::GameState state = netform::load_state_file(verify_file);
        const auto report =
            netform::classify(state, netform::adversary_from_name(verify_adv), nash_limit);
        std::cout << netform::report_to_json(report).dump(2) << "\n";
        return 0;
    }
    if (analyze->parsed()) {
        const netform::GameState state = netform::load_state_file(analyze_file);
        std::cout << netform::analyze_to_json(state, netform::adversary_from_name(analyze_adv))
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (catalog->parsed()) {
        const auto result = netform::generate(netform::family_from_name(cat_family),
                                              cat_params, cat_c, cat_b);
        if (!result.valid)
            std::cerr << "note: parameters fall outside the reference validity range for this family\n";
        if (cat_out.empty())
            std::cout << netform::state_to_json(result.state).dump(2) << "\n";
        else
            netform::save_state_file(result.state, cat_out);
        return 0;
    }
    if (dynamics->parsed()) {
        netform::GameState state = [&] {
            if (!dyn_file.empty()) return netform::load_state_file(dyn_file);
            if (dyn_er_n <= 0)
                throw std::invalid_argument("dynamics: provide a state file or --er-n");
            if (dyn_er_density >= 0)
                return netform::erdos_renyi_init(dyn_er_n, dyn_er_density, dyn_c, dyn_b, dyn_seed);
            if (dyn_er_avg_degree >= 0)
                return netform::erdos_renyi_avg_degree_init(dyn_er_n, dyn_er_avg_degree, dyn_c,
                                                            dyn_b, dyn_seed);
            throw std::invalid_argument("dynamics: --er-n needs --er-avg-degree or --er-density");
        }();
        netform::DynamicsConfig cfg;
        cfg.max_rounds = dyn_rounds;
        cfg.adversary = netform::adversary_from_name(dyn_adv);
        if (dyn_tiebreak == "random")
            cfg.policy = netform::TieBreakPolicy::random_among_best(dyn_seed);
        else if (dyn_tiebreak == "adversarial")
            cfg.policy = netform::scripted_cycle_policy(state.n() / 4);
        else if (dyn_tiebreak != "prefer-current")
            throw std::invalid_argument("unknown tiebreak '" + dyn_tiebreak + "'");
        if (dyn_order == "shuffled") {
            std::vector<int> order(state.n());
            for (int i = 0; i < state.n(); ++i) order[i] = i;
            netform::SplitMix64 rng(dyn_seed);
            for (int i = state.n() - 1; i > 0; --i)
                std::swap(order[i], order[rng.next_below(i + 1)]);
            cfg.order = std::move(order);
        } else if (dyn_order != "ascending") {
            throw std::invalid_argument("unknown order '" + dyn_order + "'");
        }
        if (dyn_devset == "linkstable")
            cfg.deviations = netform::DeviationSet::Linkstable;
        else if (dyn_devset != "swapstable")
            throw std::invalid_argument("unknown deviation set '" + dyn_devset + "'");
        const auto trace = netform::run_swapstable_dynamics(state, cfg);
        const auto j = netform::trace_to_json(trace, cfg);
        if (dyn_out.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream out(dyn_out);
            if (!out) throw std::runtime_error("cannot write " + dyn_out);
            out << j.dump(2) << "\n";
        }
        return 0;
    }
    if (sweep->parsed()) {
        const auto spec = netform::load_sweep_spec(sweep_file);
        std::vector<netform::RoundRecord> rounds;
        const auto records =
            netform::run_sweep(spec, sweep_rounds_out.empty() ? nullptr : &rounds);
        std::ofstream out(sweep_out);
        if (!out) throw std::runtime_error("cannot write " + sweep_out);
        netform::write_trials_csv(out, records, sweep_deterministic);
        if (!sweep_rounds_out.empty()) {
            std::ofstream rout(sweep_rounds_out);
            if (!rout) throw std::runtime_error("cannot write " + sweep_rounds_out);
            netform::write_rounds_csv(rout, rounds);
        }
        std::cerr << "wrote " << records.size() << " trial records to " << sweep_out << "\n";
        return 0;
    }
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
