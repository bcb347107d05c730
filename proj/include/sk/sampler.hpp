#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sk/planar_map.hpp"
#include "sk/schnyder.hpp"

namespace sk {

// A simple quadrangulation with n faces (outer face included) and an even
// Schnyder decomposition of it.
struct SchnyderPair {
  AngulationView q;
  ColorDecomposition s;
};

struct EncodingTriple {
  std::vector<int> alpha, beta, gamma;
  bool operator==(const EncodingTriple&) const = default;
  auto operator<=>(const EncodingTriple&) const = default;
};

int faces_of(const EncodingTriple& t);  // sum of alpha

EncodingTriple encode(const AngulationView& q, const ColorDecomposition& s);

// Throws Error with stage "decode" and kind TreeReconstructionFailed,
// ClosureFailed or ValidationFailed.
SchnyderPair decode(const EncodingTriple& t);

// Relabelling-invariant key of a pair: the map read from its outer dart plus colors.
std::vector<int64_t> pair_key(const AngulationView& q, const ColorDecomposition& s);

// Random stream for sample `index` under `seed`.
std::mt19937_64 derived_stream(uint64_t seed, uint64_t index);
int geometric2(std::mt19937_64& rng);  // P(k) = 2^-k, k >= 1
EncodingTriple sample_geometric_triple(int n, std::mt19937_64& rng);

struct SampleResult {
  SchnyderPair pair;
  EncodingTriple triple;
  long long attempts = 0;
};
SampleResult rejection_sample(int n, std::mt19937_64& rng, long long max_attempts = 1000000);

struct PartFull {
  int part = 0, full = 0;
  bool operator==(const PartFull&) const = default;
};
// White vertices only, read from (beta, gamma).
PartFull part_full_counts(const EncodingTriple& t);
// Internal vertices of the given color, read from their degrees in the two reduced trees.
PartFull part_full_counts(const AngulationView& q, const ColorDecomposition& s, bool black);

struct EnumerateOptions {
  std::size_t cap = 1000000;
};
void for_each_pair(int n, const std::function<void(const SchnyderPair&)>& cb, EnumerateOptions opt = {});
std::vector<SchnyderPair> enumerate_pairs(int n, EnumerateOptions opt = {});

struct SampleStats {
  int n = 0;
  int samples = 0;     // requested
  int accepted = 0;
  long long attempts = 0;
  uint64_t seed = 0;
  std::vector<long long> sample_attempts;
  std::vector<int> part_counts, full_counts, reduced_width, reduced_height;
  std::vector<int> white_part_from_triple, white_full_from_triple;
  int classification_mismatches = 0;  // triple counts vs drawing classification of white faces

  struct Summary {
    double mean = 0, stddev = 0, half_width = 0;  // 95% normal half-width
  };
  Summary part, full, width, height, side;  // side = (width + height) / 2
};

SampleStats concentration_experiment(int n, int sample_count, uint64_t seed, int jobs = 1,
                                     long long max_attempts = 100000000);
std::string stats_json(const SampleStats& st);
std::string stats_csv(const SampleStats& st);

std::string triple_json(const EncodingTriple& t);
EncodingTriple parse_triple_json(const std::string& text);

}  // namespace sk
