#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "orbkit/elements.hpp"
#include "orbkit/optctrl.hpp"

namespace orbkit {

using AnyState = std::variant<CoeSet, MeeSet, MrpMeeSet, CartesianState>;

nlohmann::json to_json(const CoeSet& c);
nlohmann::json to_json(const MeeSet& m);
nlohmann::json to_json(const MrpMeeSet& m);
nlohmann::json to_json(const CartesianState& s);
nlohmann::json to_json(const AnyState& s);

CoeSet coe_from_json(const nlohmann::json& j);
MeeSet mee_from_json(const nlohmann::json& j);
MrpMeeSet mrpmee_from_json(const nlohmann::json& j);
CartesianState cartesian_from_json(const nlohmann::json& j);

/// kind in {"coe", "mee", "mrpmee", "cartesian"}.
AnyState state_from_json(const nlohmann::json& j, const std::string& kind);

/// Convert between any two representations named by kind strings.
AnyState convert_state(const AnyState& in, const std::string& to_kind);

/// A transfer problem file plus solver extras carried alongside it.
struct ProblemConfig {
  TransferProblem problem;
  std::uint64_t seed = 0;
  std::optional<std::array<double, 7>> lam_guess;
  int revolutions = -1;  // -1: chosen from the mean Kepler drift
};

ProblemConfig problem_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const TransferSolution& sol);

/// Trajectory CSV for a solved transfer: canonical units, one row per sample,
/// columns t, x[6], m, lam[6], lam_m, delta, alpha[3], S_tilde, H.
void write_solution_csv(std::ostream& os, const TransferSolution& sol, const TransferProblem& p);

/// Propagation CSV: canonical units, columns t, six elements, r_xyz, v_xyz.
void write_propagation_csv(std::ostream& os, const Trajectory& traj, const std::string& set_kind,
                           double mu, double du_km, double tu_s);

}  // namespace orbkit
