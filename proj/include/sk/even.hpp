#pragma once

#include <cstdint>
#include <vector>

#include "sk/duality.hpp"
#include "sk/schnyder.hpp"

namespace sk {

// Reduced structures reuse ColorDecomposition with d = p and colors in [p].

bool is_even_labelling(const AngulationView& g, const CornerLabelling& l);
bool is_even_schnyder(const AngulationView& g, const ColorDecomposition& s);
bool is_even_regular(const RegularView& r, const ColorDecomposition& t);

// Per face of the regular graph: 1 when black. The root-face f_1 is black.
std::vector<uint8_t> face_colors(const RegularView& r);

ColorDecomposition lambda(const AngulationView& g, const ColorDecomposition& s);
ColorDecomposition lambda_inverse(const AngulationView& g, const ColorDecomposition& reduced);
std::vector<Violation> validate_reduced_schnyder(const AngulationView& g, const ColorDecomposition& reduced);

ColorDecomposition lambda_star(const RegularView& r, const ColorDecomposition& t);
ColorDecomposition lambda_star_inverse(const RegularView& r, const ColorDecomposition& reduced);
std::vector<Violation> validate_reduced_regular(const RegularView& r, const ColorDecomposition& reduced);

// The quadrangulation dual to r with the same dart ids, so that dual_view of it is r.
AngulationView dual_quadrangulation(const RegularView& r);

// 4-regular graph of mincut 4: the quadrangulation dual to r, a 2-orientation by flow,
// doubled, then transported through labellings and Schnyder decompositions.
ColorDecomposition compute_even_regular_decomposition(const RegularView& r);

}  // namespace sk
