#include "lace/applications.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

namespace lace::apps {

namespace {

/// base^exp, or cap+1 once it exceeds cap.
std::uint64_t capped_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    out *= base;
  }
  return out;
}

void require_budget(std::uint64_t count, const Limits& limits, const std::string& what) {
  if (count > limits.budget) {
    throw Error(ErrorCode::budget_exceeded,
                what + " exceeds the element budget of " + std::to_string(limits.budget),
                {{"budget", limits.budget}});
  }
}

std::uint64_t capped_factorial(int n, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) {
    if (out > cap / static_cast<std::uint64_t>(i)) return cap + 1;
    out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

void check_derangement(int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "derangements: n must be >= 1");
  if (n > kMaxProperties) throw Error(ErrorCode::limit_exceeded, "derangements: n > 64");
  require_budget(capped_factorial(n, limits.budget), limits,
                 "derangements n=" + std::to_string(n));
}

void check_brun(std::uint64_t bound, int r, const Limits& limits) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "brun-primes: bound must be >= 1");
  if (r < 1 || r > kMaxProperties) {
    throw Error(ErrorCode::invalid_argument, "brun-primes: prime count must be in [1, 64]");
  }
  require_budget(bound, limits, "brun-primes bound=" + std::to_string(bound));
}

void check_saw(SawConfig cfg, const Limits& limits) {
  if (cfg.dimension < 1 || cfg.steps < 1) {
    throw Error(ErrorCode::invalid_argument, "saw: dimension and steps must be >= 1");
  }
  if (arc_universe_size(cfg.steps) > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded, "saw: steps > 10 gives more than 64 time pairs");
  }
  require_budget(capped_power(2 * static_cast<std::uint64_t>(cfg.dimension),
                              static_cast<std::uint64_t>(cfg.steps), limits.budget),
                 limits, "saw walks");
}

void check_ramsey(RamseyConfig cfg, const Limits& limits) {
  if (cfg.clique < 2 || cfg.vertices < cfg.clique) {
    throw Error(ErrorCode::invalid_argument, "ramsey: need vertices >= clique >= 2");
  }
  if (binomial(cfg.vertices, cfg.clique) > static_cast<std::uint64_t>(kMaxProperties)) {
    throw Error(ErrorCode::limit_exceeded, "ramsey: more than 64 clique properties");
  }
  const int edges = cfg.vertices * (cfg.vertices - 1) / 2;
  require_budget(capped_power(2, static_cast<std::uint64_t>(edges), limits.budget), limits,
                 "ramsey colourings");
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// Sieve bounds of several maps, keeping the tightest of each side.
class BoundCollector {
public:
  BoundCollector(const WeightedInstance& inst, const Limits& limits)
      : inst_(inst), limits_(limits) {}

  void add(const LaceMap& map) {
    Json entry;
    entry["map"] = map_to_json(map);
    try {
      SieveBound b = sieve_bound(inst_, map, limits_);
      entry["direction"] = to_string(b.direction);
      entry["value"] = to_string(b.value);
      if (b.direction != Direction::upper && (!lower_ || b.value > lower_->second)) {
        lower_.emplace(map, b.value);
      }
      if (b.direction != Direction::lower && (!upper_ || b.value < upper_->second)) {
        upper_.emplace(map, b.value);
      }
    } catch (const Error& e) {
      entry["error"] = error_to_json(e).at("error");
    }
    list_.push_back(std::move(entry));
  }

  const Json& list() const { return list_; }

  /// Bracket from the tightest pair via sieve_bracket; null if a side is missing.
  Json bracket(const BigInt& oracle) const {
    if (!lower_ || !upper_) return nullptr;
    const SieveBracket br = sieve_bracket(inst_, lower_->first, upper_->first, limits_);
    const Rational truth(oracle);
    Json j;
    j["lower"] = to_string(br.lower.value);
    j["upper"] = to_string(br.upper.value);
    j["lower_map"] = map_to_json(lower_->first);
    j["upper_map"] = map_to_json(upper_->first);
    j["contains_oracle"] = br.lower.value <= truth && truth <= br.upper.value;
    if (br.lower.value > 0) {
      j["certifies"] = "N0>0";
    } else if (br.upper.value <= 0) {
      j["certifies"] = "N0=0";
    } else {
      j["certifies"] = "none";
    }
    return j;
  }

private:
  const WeightedInstance& inst_;
  const Limits& limits_;
  Json list_ = Json::array();
  std::optional<std::pair<LaceMap, Rational>> lower_;
  std::optional<std::pair<LaceMap, Rational>> upper_;
};

Json demo_core(const char* application, Json params, std::string property_order,
               const WeightedInstance& inst, const LaceMap& expansion_map,
               const BigInt& oracle, const ExpansionReport& report) {
  const Rational brute = n_zero_bruteforce(inst);
  Json j;
  j["application"] = application;
  j["params"] = std::move(params);
  j["property_order"] = std::move(property_order);
  j["oracle"] = oracle.str();
  j["bruteforce"] = to_string(brute);
  j["expansion"] = to_string(report.n0);
  j["expansion_map"] = map_to_json(expansion_map);
  j["lace_count"] = report.terms.size();
  j["agree"] = report.n0 == Rational(oracle) && brute == Rational(oracle);
  return j;
}

}  // namespace

std::vector<std::uint64_t> first_primes(int r) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; static_cast<int>(primes.size()) < r; ++c) {
    bool prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

WeightedInstance derangement_instance(int n, const Limits& limits) {
  check_derangement(n, limits);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("fix(" + std::to_string(i) + ")");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> elements;
  do {
    PropSubset props;
    for (int i = 0; i < n; ++i) {
      if (perm[static_cast<std::size_t>(i)] == i) props = props.with(i);
    }
    elements.push_back({Rational(1), props});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return WeightedInstance(PropertyUniverse(n, std::move(labels)), std::move(elements));
}

WeightedInstance brun_integer_instance(std::uint64_t bound, int prime_count,
                                       const Limits& limits) {
  check_brun(bound, prime_count, limits);
  const auto primes = first_primes(prime_count);
  std::vector<std::string> labels;
  for (std::uint64_t p : primes) labels.push_back("div(" + std::to_string(p) + ")");
  std::vector<Element> elements;
  elements.reserve(bound);
  for (std::uint64_t x = 1; x <= bound; ++x) {
    PropSubset props;
    for (int j = 0; j < prime_count; ++j) {
      if (x % primes[static_cast<std::size_t>(j)] == 0) props = props.with(j);
    }
    elements.push_back({Rational(1), props});
  }
  return WeightedInstance(PropertyUniverse(prime_count, std::move(labels)), std::move(elements));
}

WeightedInstance saw_instance(SawConfig cfg, const Limits& limits) {
  check_saw(cfg, limits);
  const int d = cfg.dimension;
  const int n = cfg.steps;
  const int props = arc_universe_size(n);
  std::vector<std::string> labels;
  for (int p = 0; p < props; ++p) {
    const Arc a = arc_at(n, p);
    labels.push_back(std::to_string(a.s) + "-" + std::to_string(a.t));
  }

  std::vector<int> choice(static_cast<std::size_t>(n), 0);  // step directions, base 2d
  std::vector<std::vector<int>> sites(static_cast<std::size_t>(n + 1), std::vector<int>(d, 0));
  std::vector<Element> elements;
  while (true) {
    for (int i = 0; i < n; ++i) {
      const int dir = choice[static_cast<std::size_t>(i)];
      sites[static_cast<std::size_t>(i + 1)] = sites[static_cast<std::size_t>(i)];
      sites[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(dir / 2)] +=
          (dir % 2 == 0) ? 1 : -1;
    }
    PropSubset collisions;
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (sites[static_cast<std::size_t>(i)] == sites[static_cast<std::size_t>(j)]) {
          collisions = collisions.with(arc_index(n, {i, j}));
        }
      }
    }
    elements.push_back({Rational(1), collisions});

    int pos = 0;
    while (pos < n && ++choice[static_cast<std::size_t>(pos)] == 2 * d) {
      choice[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return WeightedInstance(PropertyUniverse(props, std::move(labels)), std::move(elements));
}

WeightedInstance ramsey_instance(RamseyConfig cfg, const Limits& limits) {
  check_ramsey(cfg, limits);
  const int nv = cfg.vertices;
  std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(nv), std::vector<int>(nv, -1));
  int edges = 0;
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) edge_id[a][b] = edges++;
  }
  const auto cliques = combinations(nv, cfg.clique);
  std::vector<std::uint64_t> clique_edges;
  std::vector<std::string> labels;
  for (const auto& c : cliques) {
    std::uint64_t mask = 0;
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = x + 1; y < c.size(); ++y) {
        mask |= std::uint64_t{1} << edge_id[c[x]][c[y]];
      }
    }
    clique_edges.push_back(mask);
    labels.push_back("{" + join_ints(c, ",") + "}");
  }

  std::vector<Element> elements;
  const std::uint64_t colourings = std::uint64_t{1} << edges;
  elements.reserve(colourings);
  for (std::uint64_t x = 0; x < colourings; ++x) {
    PropSubset props;
    for (std::size_t c = 0; c < clique_edges.size(); ++c) {
      const std::uint64_t induced = x & clique_edges[c];
      if (induced == 0 || induced == clique_edges[c]) props = props.with(static_cast<int>(c));
    }
    elements.push_back({Rational(1), props});
  }
  return WeightedInstance(
      PropertyUniverse(static_cast<int>(cliques.size()), std::move(labels)),
      std::move(elements));
}

BigInt oracle_count(const AppParams& params, const Limits& limits) {
  struct Oracle {
    const Limits& limits;

    BigInt operator()(const DerangementParams& p) const {
      check_derangement(p.n, limits);
      std::vector<int> perm(static_cast<std::size_t>(p.n));
      std::iota(perm.begin(), perm.end(), 0);
      BigInt count = 0;
      do {
        bool moves_all = true;
        for (int i = 0; i < p.n; ++i) moves_all = moves_all && perm[static_cast<std::size_t>(i)] != i;
        if (moves_all) ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return count;
    }

    BigInt operator()(const BrunPrimesParams& p) const {
      check_brun(p.bound, p.primes, limits);
      const auto primes = first_primes(p.primes);
      BigInt count = 0;
      for (std::uint64_t x = 1; x <= p.bound; ++x) {
        if (std::none_of(primes.begin(), primes.end(),
                         [x](std::uint64_t q) { return x % q == 0; })) {
          ++count;
        }
      }
      return count;
    }

    BigInt operator()(const SawConfig& cfg) const {
      check_saw(cfg, limits);
      std::set<std::vector<int>> visited;
      std::vector<int> site(static_cast<std::size_t>(cfg.dimension), 0);
      visited.insert(site);
      auto walk = [&](auto&& self, int remaining) -> BigInt {
        if (remaining == 0) return 1;
        BigInt total = 0;
        for (int axis = 0; axis < cfg.dimension; ++axis) {
          for (int delta : {1, -1}) {
            site[static_cast<std::size_t>(axis)] += delta;
            if (visited.insert(site).second) {
              total += self(self, remaining - 1);
              visited.erase(site);
            }
            site[static_cast<std::size_t>(axis)] -= delta;
          }
        }
        return total;
      };
      return walk(walk, cfg.steps);
    }

    BigInt operator()(const RamseyConfig& cfg) const {
      check_ramsey(cfg, limits);
      const int nv = cfg.vertices;
      const int edges = nv * (nv - 1) / 2;
      BigInt count = 0;
      std::vector<std::vector<int>> colour(static_cast<std::size_t>(nv), std::vector<int>(nv));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << edges); ++x) {
        int e = 0;
        for (int a = 0; a < nv; ++a) {
          for (int b = a + 1; b < nv; ++b, ++e) colour[a][b] = colour[b][a] = (x >> e) & 1;
        }
        // Selector over vertices; prev_permutation walks every clique-subset.
        std::vector<bool> pick(static_cast<std::size_t>(nv), false);
        std::fill(pick.begin(), pick.begin() + cfg.clique, true);
        bool found = false;
        do {
          std::vector<int> vs;
          for (int v = 0; v < nv; ++v) {
            if (pick[static_cast<std::size_t>(v)]) vs.push_back(v);
          }
          bool mono = true;
          for (std::size_t i = 0; i < vs.size() && mono; ++i) {
            for (std::size_t k = i + 1; k < vs.size() && mono; ++k) {
              mono = colour[vs[i]][vs[k]] == colour[vs[0]][vs[1]];
            }
          }
          found = mono;
        } while (!found && std::prev_permutation(pick.begin(), pick.end()));
        if (!found) ++count;
      }
      return count;
    }
  };
  return std::visit(Oracle{limits}, params);
}

std::vector<int> brun_pair_pattern(int n) {
  std::vector<int> v;
  for (int j = 0; j < n; ++j) v.push_back(std::max(1, n - 1 - 2 * (j / 2)));
  return v;
}

std::vector<int> brun_shifted_pair_pattern(int n) {
  std::vector<int> v;
  for (int j = 0; j < n; ++j) v.push_back(j == 0 ? n : std::max(1, n - 2 - 2 * ((j - 1) / 2)));
  return v;
}

Json demo_derangements(int n, const Limits& limits) {
  const BigInt oracle = oracle_count(DerangementParams{n}, limits);
  const WeightedInstance inst = derangement_instance(n, limits);
  const LaceMap map = LaceMap::identity(n);
  const ExpansionReport report = lace_expansion_sum(inst, map, limits);
  Json j = demo_core("derangements", {{"n", n}},
                     "property i (0-based) = permutation fixes point i+1", inst, map, oracle,
                     report);
  BoundCollector bounds(inst, limits);
  for (int k = 1; k <= n; ++k) bounds.add(LaceMap::bonferroni(n, k));
  j["bounds"] = bounds.list();
  j["bracket"] = bounds.bracket(oracle);
  return j;
}

Json demo_brun_primes(std::uint64_t bound, int prime_count,
                      std::optional<std::vector<int>> odd_pattern_thresholds,
                      std::optional<std::vector<int>> even_pattern_thresholds,
                      const Limits& limits) {
  const BigInt oracle = oracle_count(BrunPrimesParams{bound, prime_count}, limits);
  const WeightedInstance inst = brun_integer_instance(bound, prime_count, limits);
  const LaceMap pair_map = LaceMap::brun(
      BrunThresholds(odd_pattern_thresholds.value_or(brun_pair_pattern(prime_count))));
  const LaceMap shifted_map = LaceMap::brun(
      BrunThresholds(even_pattern_thresholds.value_or(brun_shifted_pair_pattern(prime_count))));
  const ExpansionReport report = lace_expansion_sum(inst, pair_map, limits);

  Json primes = Json::array();
  for (std::uint64_t p : first_primes(prime_count)) primes.push_back(p);
  Json j = demo_core("brun-primes", {{"bound", bound}, {"primes", primes}},
                     "property j (0-based, Brun label j+1) = divisible by the (j+1)-th prime",
                     inst, pair_map, oracle, report);

  Json patterns = Json::array();
  BoundCollector bounds(inst, limits);
  const std::array<std::pair<const char*, const LaceMap*>, 2> chains{
      {{"N1=N2, N3=N4, ...", &pair_map}, {"N1=n, N2=N3, N4=N5, ...", &shifted_map}}};
  for (const auto& [pattern, map] : chains) {
    const ParityAnalysis parity = analyze_parity(*map, limits);
    bounds.add(*map);
    Json entry;
    entry["pattern"] = pattern;
    entry["thresholds"] = std::get<kind::Brun>(map->kind()).thresholds.values();
    entry["parity"] = parity_to_json(parity);
    entry["observed_direction"] = bounds.list().back().value("direction", "none");
    patterns.push_back(std::move(entry));
  }
  j["patterns"] = std::move(patterns);
  j["bounds"] = bounds.list();
  j["bracket"] = bounds.bracket(oracle);
  return j;
}

Json demo_saw(SawConfig cfg, const Limits& limits) {
  const BigInt oracle = oracle_count(cfg, limits);
  const WeightedInstance inst = saw_instance(cfg, limits);
  const LaceMap map = LaceMap::brydges_spencer(cfg.steps);
  const ExpansionReport report = lace_expansion_sum(inst, map, limits);
  Json j = demo_core("saw", {{"dimension", cfg.dimension}, {"steps", cfg.steps}},
                     "time pairs (i,j), 0<=i<j<=steps, lexicographic; property (i,j) = walk "
                     "visits the same site at times i and j",
                     inst, map, oracle, report);
  BoundCollector bounds(inst, limits);
  bounds.add(map);
  j["bounds"] = bounds.list();
  j["bracket"] = bounds.bracket(oracle);
  j["parity"] = parity_to_json(analyze_parity(map, limits));
  j["terms"] = expansion_report_to_json(report, map.universe()).at("terms");
  return j;
}

Json demo_ramsey(RamseyConfig cfg, int max_k, const Limits& limits) {
  if (max_k < 1) throw Error(ErrorCode::invalid_argument, "ramsey: max_k must be >= 1");
  const BigInt oracle = oracle_count(cfg, limits);
  const WeightedInstance inst = ramsey_instance(cfg, limits);
  const int props = inst.universe().size();
  const LaceMap map = LaceMap::bonferroni(props, max_k);
  const ExpansionReport report = lace_expansion_sum(inst, map, limits);
  Json j = demo_core("ramsey", {{"vertices", cfg.vertices}, {"clique", cfg.clique}},
                     "vertex clique-subsets in lexicographic order; property S = induced "
                     "colouring on S is monochromatic",
                     inst, map, oracle, report);
  BoundCollector bounds(inst, limits);
  for (int k = 1; k <= max_k; ++k) bounds.add(LaceMap::bonferroni(props, k));
  j["bounds"] = bounds.list();
  j["bracket"] = bounds.bracket(oracle);
  const std::string r = "R(" + std::to_string(cfg.clique) + "," + std::to_string(cfg.clique) + ")";
  j["oracle_certifies"] = oracle > 0 ? r + " > " + std::to_string(cfg.vertices)
                                     : r + " <= " + std::to_string(cfg.vertices);
  return j;
}

}  // namespace lace::apps
