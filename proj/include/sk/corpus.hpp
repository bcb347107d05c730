#pragma once

#include <functional>
#include <random>
#include <vector>

#include "sk/planar_map.hpp"

namespace sk {

PlaneMap tetrahedron();
PlaneMap cube();
PlaneMap octahedron();
PlaneMap dodecahedron();
PlaneMap icosahedron();
PlaneMap cycle_map(int n);

// Number of rooted maps whose outer face has degree p and whose f inner faces
// all have degree d (loops included, so this bounds the loopless count).
double count_rooted_maps(int d, int p, int f);

// Calls cb on every loopless rooted map with outer degree d and f inner faces of
// degree d. simple also rejects multiple edges.
void for_each_angulation(int d, int f, bool simple, const std::function<void(const PlaneMap&)>& cb);

// Same, keeping one representative per unrooted map with a marked outer face.
std::vector<PlaneMap> enumerate_angulations(int d, int f, bool simple);

// Uniform loopless (or simple) rooted d-angulation with f inner faces, by rejection.
PlaneMap random_angulation(int d, int f, bool simple, std::mt19937_64& rng);

// Simple quadrangulation with the given total face count, grown by random vertex
// splits from the 4-cycle. Not uniform.
PlaneMap grow_quadrangulation(int faces, std::mt19937_64& rng);

}  // namespace sk
