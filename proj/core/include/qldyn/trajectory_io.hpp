#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qldyn/analysis.hpp"
#include "qldyn/stochastic.hpp"

namespace qldyn {

inline constexpr const char* kVersion = "0.1.0";

// Shortest round-trippable decimal form of a double.
std::string format_double(double value);

// Column schema: step,q1_c,q1_d,q2_c,q2_d,pi1_c,pi2_c  (2x2 games).
// `step` is the integer step index for simulators and map models, and
// accumulated model time for the replicator ODE.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

// JSON mirror of the CSV with a metadata block (resolved config echo plus
// the artifact version) ahead of the samples.
nlohmann::json trajectory_to_json(const Trajectory& trajectory,
                                  nlohmann::json metadata);

nlohmann::json to_json(const StabilityReport& report);
nlohmann::json to_json(const BifurcationScan& scan);

// gamma,lambda1_abs,...,lambda4_abs,classification rows; moduli sorted
// descending. Failed grid entries carry empty moduli and "failed".
void write_scan_csv(std::ostream& out, const BifurcationScan& scan);

void write_ensemble_csv(std::ostream& out, const EnsembleResult& ensemble);
nlohmann::json to_json(const EnsembleResult& ensemble, nlohmann::json metadata);

}  // namespace qldyn
