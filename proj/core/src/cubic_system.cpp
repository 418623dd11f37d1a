#include "nlkg/cubic_system.hpp"

namespace nlkg {

Coefficients transform_by_substitution(const Coefficients& c, const GL2Transform& m) {
    if (c.is_exact() && m.is_exact())
        return Coefficients::from_rationals(
            detail::substitute_cubic<Rational>(c.exact_values(), m.exact_mat()));
    return Coefficients::from_doubles(detail::substitute_cubic<double>(c.values(), m.mat()));
}

}  // namespace nlkg
