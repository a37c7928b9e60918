#pragma once

#include <string>

#include <json.hpp>

#include "netform/deviation.hpp"
#include "netform/dynamics.hpp"
#include "netform/game.hpp"
#include "netform/structure.hpp"

namespace netform {

inline constexpr int kSchemaVersion = 1;

/// State file schema: {schema_version, n, c, b,
///                     players: [{id, immunized, purchases}]}
nlohmann::json state_to_json(const GameState& state);
GameState state_from_json(const nlohmann::json& j);
GameState load_state_file(const std::string& path);
void save_state_file(const GameState& state, const std::string& path);

nlohmann::json report_to_json(const EquilibriumReport& report);
nlohmann::json trace_to_json(const DynamicsTrace& trace, const DynamicsConfig& config);

/// Structural report for the `analyze` subcommand.
nlohmann::json analyze_to_json(const GameState& state, AdversaryKind kind);

}  // namespace netform
