#pragma once

#include <string>

#include "nlkg/classifier.hpp"
#include "nlkg/coefficients.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/fitting.hpp"
#include "nlkg/matrix_rep.hpp"
#include "nlkg/reducer.hpp"
#include "nlkg/sim.hpp"

namespace nlkg::io {

// JSON wire formats. Numbers parse exactly: integer literals and "p/q"
// strings land on the rational path, decimal literals on the floating path.
//
//   Coefficients:    {"lambda":[l1,...,l8]}
//   GL2Transform:    {"m":[[a,b],[c,d]]}
//   StructureMatrix: {"A":[[..],[..],[..]]}  (row-major)

std::string to_json(const Coefficients& c);
Coefficients coefficients_from_json(const std::string& text);

std::string to_json(const GL2Transform& m);
GL2Transform gl2_from_json(const std::string& text);

std::string to_json(const StructureMatrix& a);
StructureMatrix structure_matrix_from_json(const std::string& text);

std::string to_json(const ClassLabel& label, const Coefficients& input);
std::string to_json(const ReductionResult& r);
std::string to_json(const FitReport& r);

/// {"error":{"code":..., "message":..., "exit":N}}
std::string error_to_json(const error& e);

/// Parses the `pde` subcommand config. Gaussian data spec per component:
/// {"system":..., "epsilon":..., "data":{"u1":{"amplitude":..,"width":..,
/// "center":..,"velocity_amplitude":..}, "u2":{...}}, "grid":{...}, ...}
SimConfig sim_config_from_json(const std::string& text);

}  // namespace nlkg::io
