#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlkg/classifier.hpp"
#include "nlkg/coefficients.hpp"

namespace nlkg {

/// Constructive reduction of a classified system to its model representative.
///
/// The chain is applied left to right: step i replaces the current unknowns w
/// by chain[i] * w, so total = chain[n-1] * ... * chain[0] and
/// transform_by_substitution(input, total) == model_coeffs up to `residual`.
/// `params` records the theorem data used (theta's, k's, ell, sigma, r, ...).
struct ReductionResult {
    std::vector<GL2Transform> chain;
    GL2Transform total = GL2Transform::identity();
    ModelSystemId model = ModelSystemId::sunagawa();
    Coefficients model_coeffs;
    double residual = 0.0;
    std::map<std::string, double> params;
};

ReductionResult reduce_z1_plus(const Coefficients& c);
ReductionResult reduce_z1_zero(const Coefficients& c);
ReductionResult reduce_z1_minus(const Coefficients& c);
ReductionResult reduce_z2(const Coefficients& c);

/// Dispatcher over the four procedures. Throws unsupported_class for Rank0,
/// Rank2_nonZ2 and Rank3 inputs; certifies the result against the
/// substitution oracle and throws inconsistent_extraction if the residual
/// exceeds 1e-8 * max(1, ||input||_inf).
ReductionResult reduce(const Coefficients& c);

}  // namespace nlkg
