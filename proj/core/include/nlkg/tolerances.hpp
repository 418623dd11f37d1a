#pragma once

namespace nlkg::tol {

// Shared numeric thresholds for the floating-point path.
inline constexpr double kRel = 1e-9;           // relative comparison tolerance
inline constexpr double kAbsFloor = 1e-12;     // absolute floor under kRel
inline constexpr double kRankRel = 1e-9;       // singular value cut, relative to sigma_max
inline constexpr double kRankZero = 1e-12;     // sigma_max below this means the zero matrix
inline constexpr double kResidual = 1e-8;      // reduction certification bound
inline constexpr double kBorderline = 10.0;    // decisive quantities within 10x of their
                                               // threshold get a borderline flag
inline constexpr double kBlowUp = 1e12;        // state modulus that aborts an integration

inline bool near(double x, double y) {
    double m = x < 0 ? -x : x;
    double n = y < 0 ? -y : y;
    double scale = m > n ? m : n;
    double d = x - y;
    if (d < 0) d = -d;
    return d <= (kRel * scale > kAbsFloor ? kRel * scale : kAbsFloor);
}

}  // namespace nlkg::tol
