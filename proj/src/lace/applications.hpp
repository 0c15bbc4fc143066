#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lace/json_io.hpp"

namespace lace::apps {

/// n-step nearest-neighbour walks on Z^d from the origin.
struct SawConfig {
  int dimension = 2;
  int steps = 1;
};

/// 2-colourings of the edges of K_vertices; a property per clique-subset.
struct RamseyConfig {
  int vertices = 3;
  int clique = 3;
};

struct DerangementParams {
  int n = 1;
};

struct BrunPrimesParams {
  std::uint64_t bound = 30;
  int primes = 3;  ///< use the first `primes` primes
};

using AppParams = std::variant<DerangementParams, BrunPrimesParams, SawConfig, RamseyConfig>;

/// The first r primes.
std::vector<std::uint64_t> first_primes(int r);

/// X = permutations of {1..n}; property i = "fixes point i+1".
WeightedInstance derangement_instance(int n, const Limits& limits = {});

/// X = {1..bound}; property j = "divisible by the (j+1)-th prime".
WeightedInstance brun_integer_instance(std::uint64_t bound, int prime_count,
                                       const Limits& limits = {});

/// X = all (2d)^n walks; property arc_index(n, {i, j}) = "omega(i) = omega(j)".
/// Property indices match LaceMap::brydges_spencer(steps).
WeightedInstance saw_instance(SawConfig cfg, const Limits& limits = {});

/// X = all 2^(N choose 2) colourings (bit e of x colours edge e, edges in
/// lexicographic order); one property per clique-subset in lexicographic
/// order, holding when the induced colouring is monochromatic.
WeightedInstance ramsey_instance(RamseyConfig cfg, const Limits& limits = {});

/// Direct enumeration count of property-free elements, no lace machinery
/// and no instance construction.
BigInt oracle_count(const AppParams& params, const Limits& limits = {});

// Demos: oracle vs. expansion vs. sieve bounds, as JSON.
Json demo_derangements(int n, const Limits& limits = {});
Json demo_brun_primes(std::uint64_t bound, int prime_count,
                      std::optional<std::vector<int>> odd_pattern_thresholds,
                      std::optional<std::vector<int>> even_pattern_thresholds,
                      const Limits& limits = {});
Json demo_saw(SawConfig cfg, const Limits& limits = {});
Json demo_ramsey(RamseyConfig cfg, int max_k = 3, const Limits& limits = {});

/// Default Brun chains: N_1=N_2, N_3=N_4, ... and N_1=n, N_2=N_3, N_4=N_5, ...
std::vector<int> brun_pair_pattern(int n);
std::vector<int> brun_shifted_pair_pattern(int n);

}  // namespace lace::apps
