#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlkg/coefficients.hpp"
#include "nlkg/matrix_rep.hpp"

namespace nlkg {

/// Unit normal of ker A for rank-one A, i.e. A = d nu^T with d in nu^perp.
/// Sign fixed so the first component above noise level is positive; `pivot`
/// records which component that was.
struct KernelDirection {
    Vec3<double> nu{};
    int pivot = 0;
    std::optional<Vec3<Rational>> exact_raw;  // unnormalized, when available
};

enum class Family { Rank0, Z1_plus, Z1_zero, Z1_minus, Z2, Rank2_nonZ2, Rank3 };

std::string family_name(Family f);

struct ClassLabel {
    Family family = Family::Rank0;
    std::optional<ModelSystemId> model;  // present iff family in {Z1_*, Z2}
    std::optional<int> roster;           // 1..9 for Z1, 1..5 for Z2
    bool borderline = false;
    bool exact = false;                  // decisions taken on the rational path
};

KernelDirection kernel_direction(const StructureMatrix& a);

/// Sign of b^2 - 4ac for nu = (a,b,c); +1 on S1, 0 on the critical curves,
/// -1 on S2 u (-S2). Floating path treats |b^2-4ac| <= 1e-9 as zero.
int discriminant_sign(const KernelDirection& nu);

/// All theta in [0,2pi) with nu . (1+sin t, cos t, 1-sin t) = 0, ascending.
/// The count is 2/1/0 exactly as discriminant_sign is +1/0/-1.
std::vector<double> curve_intersections(const KernelDirection& nu);

/// Structural condition for the rank-two classified set:
/// (l1,l2,l3) != 0, l4=l5=0, l6=l1, l7=l2, l8=l3.
bool z2_condition(const Coefficients& c);

ClassLabel classify(const Coefficients& c);

}  // namespace nlkg
