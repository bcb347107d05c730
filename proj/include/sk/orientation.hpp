#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sk/planar_map.hpp"

namespace sk {

// value[a] in [0,k] for darts of oriented edges, -1 elsewhere (external edges).
struct FracOrientation {
  int k = 1;
  std::vector<int> value;
  bool operator==(const FracOrientation&) const = default;
};

// Edges with in_subset[edge] set are oriented; alpha is the outdegree per vertex.
FracOrientation compute_alpha_k_orientation(const PlaneMap& m, const std::vector<uint8_t>& in_subset,
                                            const std::vector<int>& alpha, int k);

FracOrientation compute_dd2_orientation(const AngulationView& g);
FracOrientation compute_p_p1_orientation(const AngulationView& g);

bool is_even(const FracOrientation& o);
FracOrientation scaled(const FracOrientation& o, int factor);
std::vector<int> outdegrees(const PlaneMap& m, const FracOrientation& o);
// Empty when o is a d/(d-2)-orientation of g; otherwise a description of the first problem.
std::string check_dd2(const AngulationView& g, const FracOrientation& o);

// A simple cycle given by its darts walked clockwise (interior on the right).
// inside[f] marks the faces enclosed.
struct Cycle {
  std::vector<int> darts;
  std::vector<int> twins;
  std::vector<uint8_t> inside;
};

// Orients a closed dart walk so that the interior (the side without the outer face)
// lies on its right.
Cycle make_cycle(const PlaneMap& m, std::vector<int> darts);

// All simple cycles of length d through internal vertices only.
std::vector<Cycle> d_cycles(const AngulationView& g);

bool is_ccw_circuit(const FracOrientation& o, const Cycle& c);
bool is_cw_circuit(const FracOrientation& o, const Cycle& c);
std::vector<Cycle> find_ccw_d_circuits(const AngulationView& g, const FracOrientation& o);

// Pushes a counterclockwise circuit: clockwise arcs +1, counterclockwise arcs -1.
FracOrientation push_cycle(const FracOrientation& o, const Cycle& c);
// Inverse move on a clockwise circuit.
FracOrientation unpush_cycle(const FracOrientation& o, const Cycle& c);

FracOrientation minimal_orientation(const AngulationView& g, const FracOrientation& start);
FracOrientation minimal_orientation(const AngulationView& g);

struct LatticeOptions {
  std::size_t cap = 1000000;
  int jobs = 1;
};
std::vector<FracOrientation> lattice_enumerate(const AngulationView& g, LatticeOptions opt = {});

// Oracle: number of d/(d-2)-orientations by exhaustive search over arc values.
std::size_t brute_force_count(const AngulationView& g, std::vector<FracOrientation>* all = nullptr);

}  // namespace sk
