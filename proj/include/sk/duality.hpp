#pragma once

#include <vector>

#include "sk/planar_map.hpp"
#include "sk/schnyder.hpp"

namespace sk {

// Dual of a d-angulation rooted at the vertex of its outer face. Dart ids are shared,
// so edge e of the primal is dual to edge e of the result, and f_i corresponds to u_i.
RegularView dual_view(const AngulationView& g);

// Corner c of the primal faces corner next_cw(c) of the dual.
int dual_corner(const PlaneMap& primal, int c);

std::vector<Violation> validate_regular_labelling(const RegularView& r, const CornerLabelling& l);
// Colors per dart: the tree(s) in which the dart is the arc toward the parent.
std::vector<Violation> validate_regular_decomposition(const RegularView& r, const ColorDecomposition& s);

CornerLabelling dual_labelling(const AngulationView& g, const RegularView& r, const CornerLabelling& l);
CornerLabelling primal_labelling(const AngulationView& g, const RegularView& r, const CornerLabelling& l);

ColorDecomposition xi(const RegularView& r, const CornerLabelling& l);
CornerLabelling xi_inverse(const RegularView& r, const ColorDecomposition& s);

// Via complemented duals of T_i = F_i plus the external edges other than {u_i, u_i+1}.
ColorDecomposition chi(const AngulationView& g, const RegularView& r, const ColorDecomposition& s);
ColorDecomposition chi_inverse(const AngulationView& g, const RegularView& r, const ColorDecomposition& s);

// Edge ids of T_i in the primal.
std::vector<uint8_t> primal_tree(const AngulationView& g, const ColorDecomposition& s, int i);

}  // namespace sk
