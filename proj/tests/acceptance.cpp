// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lace/applications.hpp"
#include "lace/error.hpp"
#include "lace/sieve.hpp"
#include "oracles.hpp"

using namespace lace;
namespace lt = lace::testing;

namespace {

/// Collects failure notes for one criterion.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && notes_.size() < 5) notes_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& notes() const { return notes_; }

private:
  bool failed_ = false;
  std::size_t count_ = 0;
  std::vector<std::string> notes_;
};

std::string str(const Rational& r) { return to_string(r); }

/// Builtin maps at the sizes of criterion 1.
std::vector<LaceMap> builtin_family(std::mt19937_64& rng) {
  std::vector<LaceMap> maps;
  for (int n = 0; n <= 10; ++n) maps.push_back(LaceMap::identity(n));
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= 3; ++k) maps.push_back(LaceMap::bonferroni(n, k));
  }
  for (int i = 0; i < 25; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    maps.push_back(LaceMap::brun(lt::random_brun_chain(rng, n)));
  }
  for (int dots = 0; dots <= 4; ++dots) maps.push_back(LaceMap::brydges_spencer(dots));
  return maps;
}

std::string describe(const LaceMap& m) {
  return std::string(m.kind_name()) + " n=" + std::to_string(m.size());
}

void criterion1(Check& c) {
  std::mt19937_64 rng(1001);
  for (const LaceMap& map : builtin_family(rng)) {
    for (int i = 0; i < 50; ++i) {
      const WeightedInstance inst = lt::random_instance(rng, map.size(), 200, -9, 9);
      const Rational lhs = n_zero_bruteforce(inst);
      const Rational rhs = lace_expansion_sum(inst, map).n0;
      c.expect(lhs == rhs, describe(map) + ": N0=" + str(lhs) + " expansion=" + str(rhs));
    }
  }
}

void criterion2(Check& c) {
  std::mt19937_64 rng(2002);
  std::vector<LaceMap> maps;
  for (int n = 0; n <= 10; ++n) {
    maps.push_back(LaceMap::identity(n));
    for (int k = 1; k <= n; ++k) maps.push_back(LaceMap::bonferroni(n, k));
    if (n > 0) {
      maps.push_back(LaceMap::brun(BrunThresholds(apps::brun_pair_pattern(n))));
      maps.push_back(LaceMap::brun(BrunThresholds(apps::brun_shifted_pair_pattern(n))));
      for (int r = 0; r < 3; ++r) maps.push_back(LaceMap::brun(lt::random_brun_chain(rng, n)));
    }
  }
  for (int dots = 0; dots <= 4; ++dots) maps.push_back(LaceMap::brydges_spencer(dots));
  for (const LaceMap& map : maps) {
    c.expect(polynomial_identity_check(map), describe(map));
  }
  for (int i = 0; i < 25; ++i) {
    const LaceMap map = lt::random_interval_map(rng, 1 + static_cast<int>(rng() % 8));
    c.expect(verify_axioms(map).pass, "interval map fails axioms: " + describe(map));
    c.expect(polynomial_identity_check(map), "interval map: " + describe(map));
  }
}

void criterion3(Check& c) {
  std::mt19937_64 rng(1001);
  for (const LaceMap& map : builtin_family(rng)) {
    const AxiomReport r = verify_axioms(map);
    c.expect(r.pass, describe(map) + " violates (" +
                         (r.violated ? axiom_label(*r.violated) : std::string("?")) + ")");
  }
  const std::vector<std::pair<LaceMap, std::string>> broken{
      {lt::broken_containment_map(), "i"},
      {lt::broken_interval_map(), "ii"},
      {lt::broken_union_map(), "iii"},
  };
  for (const auto& [map, label] : broken) {
    const AxiomReport r = verify_axioms(map);
    c.expect(!r.pass && r.violated && axiom_label(*r.violated) == label,
             "broken map expected (" + label + ")");
  }
  const AxiomReport ii = verify_axioms(lt::broken_interval_map());
  const std::vector<std::pair<std::string, PropSubset>> expected{
      {"S", PropSubset(0b011)}, {"l(S)", PropSubset(0b001)}, {"G", PropSubset(0b001)},
      {"l(G)", PropSubset(0)}};
  c.expect(ii.witness == expected, "drop-max witness differs");
}

void criterion4(Check& c) {
  std::mt19937_64 rng(4004);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const WeightedInstance inst = lt::random_instance(rng, n, 200, -9, 9);
    const Rational ie = lt::inclusion_exclusion(inst);
    const Rational ex = lace_expansion_sum(inst, LaceMap::identity(n)).n0;
    c.expect(ie == ex, "n=" + std::to_string(n) + " ie=" + str(ie) + " expansion=" + str(ex));
  }
}

void criterion5(Check& c) {
  const std::vector<std::string> golden{"0", "1", "2", "9", "44", "265", "1854"};
  for (int n = 1; n <= 7; ++n) {
    const Json d = apps::demo_derangements(n);
    const std::string want = golden[static_cast<std::size_t>(n - 1)];
    c.expect(apps::oracle_count(apps::DerangementParams{n}).str() == want,
             "oracle n=" + std::to_string(n));
    c.expect(d["oracle"] == want && d["expansion"] == want && d["agree"] == true,
             "demo n=" + std::to_string(n) + " reports " + d["expansion"].dump());
  }
}

void criterion6(Check& c) {
  const BigInt oracle = apps::oracle_count(apps::BrunPrimesParams{30, 3});
  c.expect(oracle == 8, "oracle " + oracle.str());
  const WeightedInstance inst = apps::brun_integer_instance(30, 3);
  const Json demo = apps::demo_brun_primes(30, 3, std::nullopt, std::nullopt);
  c.expect(demo["oracle"] == "8" && demo["expansion"] == "8", "demo disagrees with the oracle");

  const Rational n0(oracle);
  std::vector<SieveBound> bounds;
  for (const auto& pattern : {apps::brun_pair_pattern(3), apps::brun_shifted_pair_pattern(3)}) {
    const LaceMap map = LaceMap::brun(BrunThresholds(pattern));
    c.expect(lace_expansion_sum(inst, map).n0 == n0, "expansion under a pattern map");
    const ParityAnalysis parity = analyze_parity(map);
    const SieveBound b = sieve_bound(inst, map);
    const Direction expected = !parity.parity                     ? Direction::exact
                               : *parity.parity == Parity::odd ? Direction::upper
                                                               : Direction::lower;
    c.expect(b.direction == expected, "direction does not follow parity");
    c.expect(b.direction == Direction::upper ? b.value >= n0
             : b.direction == Direction::lower ? b.value <= n0
                                               : b.value == n0,
             std::string("bound ") + to_string(b.direction) + " " + str(b.value));
    bounds.push_back(b);
  }
  c.expect(bounds[0].direction != bounds[1].direction, "patterns bound the same side");
  c.expect(demo["bracket"]["contains_oracle"] == true, "demo bracket misses the oracle");
  const Rational lo = parse_rational(demo["bracket"]["lower"].get<std::string>());
  const Rational hi = parse_rational(demo["bracket"]["upper"].get<std::string>());
  c.expect(lo <= n0 && n0 <= hi, "bracket [" + str(lo) + ", " + str(hi) + "]");
}

void criterion7(Check& c) {
  const std::vector<std::string> golden{"4", "12", "36", "100", "284"};
  for (int steps = 1; steps <= 5; ++steps) {
    const std::string want = golden[static_cast<std::size_t>(steps - 1)];
    const BigInt oracle = apps::oracle_count(apps::SawConfig{2, steps});
    c.expect(oracle.str() == want, "oracle steps=" + std::to_string(steps));
    const Json d = apps::demo_saw({2, steps});
    c.expect(d["expansion"] == want && d["oracle"] == want, "demo steps=" + std::to_string(steps));
    c.expect(d["expansion_map"]["kind"] == "brydges_spencer", "demo map");
    Rational sum = 0;
    for (const Json& t : d["terms"]) sum += parse_rational(t["signed"].get<std::string>());
    c.expect(sum == Rational(oracle), "term table sums to " + str(sum));
    c.expect(d["terms"].size() == d["lace_count"].get<std::size_t>(), "term table size");
    const std::string csv = terms_to_csv(d);
    c.expect(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) ==
                 d["terms"].size() + 1,
             "csv rows");
  }
}

void criterion8(Check& c) {
  for (int n : {5, 6}) {
    const BigInt oracle = apps::oracle_count(apps::RamseyConfig{n, 3});
    c.expect(n == 5 ? oracle > 0 : oracle == 0, "oracle N=" + std::to_string(n) + " is " + oracle.str());
    const Json d = apps::demo_ramsey({n, 3});
    c.expect(d["oracle"] == oracle.str() && d["agree"] == true, "demo N=" + std::to_string(n));
    const Json& b = d["bracket"];
    const Rational lo = parse_rational(b["lower"].get<std::string>());
    const Rational hi = parse_rational(b["upper"].get<std::string>());
    const Rational n0(oracle);
    c.expect(lo <= n0 && n0 <= hi, "bracket [" + str(lo) + ", " + str(hi) + "]");
    if (lo > 0) c.expect(n0 > 0, "bracket certifies N0>0 wrongly");
    if (hi <= 0) c.expect(n0 == 0, "bracket certifies N0=0 wrongly");
    for (const Json& bound : d["bounds"]) {
      const Rational v = parse_rational(bound["value"].get<std::string>());
      const std::string dir = bound["direction"];
      c.expect(dir == "upper" ? v >= n0 : dir == "lower" ? v <= n0 : v == n0,
               "bound " + dir + " " + str(v));
    }
  }
  c.expect(apps::demo_ramsey({5, 3})["oracle_certifies"] == "R(3,3) > 5", "certificate text");
}

/// Unsaturated lace counts by size from the definitional scan.
std::map<int, std::size_t> unsaturated_histogram(const LaceMap& map) {
  std::map<int, std::size_t> h;
  for (std::uint64_t l : lt::fixed_points(map)) {
    if (!lt::compatible_oracle(map, PropSubset(l)).empty()) ++h[std::popcount(l)];
  }
  return h;
}

bool mixed(const std::map<int, std::size_t>& h) {
  bool odd = false;
  bool even = false;
  for (const auto& [size, count] : h) (size % 2 ? odd : even) = true;
  return odd && even;
}

void criterion9(Check& c) {
  std::mt19937_64 rng(9009);
  int uniform = 0;
  int rejected = 0;
  int attempts = 0;
  while (uniform < 200 && attempts < 5000) {
    ++attempts;
    const int n = 1 + static_cast<int>(rng() % 8);
    LaceMap map = LaceMap::identity(n);
    switch (attempts % 4) {
      case 0: map = LaceMap::bonferroni(n, 1 + static_cast<int>(rng() % n)); break;
      case 1: map = LaceMap::brun(lt::random_brun_chain(rng, n)); break;
      case 2: map = lt::random_interval_map(rng, n); break;
      default: map = LaceMap::brydges_spencer(static_cast<int>(rng() % 5)); break;
    }
    const WeightedInstance inst = lt::random_instance(rng, map.size(), 150, 0, 9);
    const auto hist = unsaturated_histogram(map);
    if (mixed(hist)) {
      try {
        sieve_bound(inst, map);
        c.expect(false, "mixed-parity map " + describe(map) + " was not rejected");
      } catch (const Error& e) {
        Json expected = Json::object();
        for (const auto& [size, count] : hist) expected[std::to_string(size)] = count;
        c.expect(e.code() == ErrorCode::mixed_parity &&
                     e.detail()["unsaturated_by_size"] == expected,
                 "mixed-parity rejection of " + describe(map));
      }
      ++rejected;
      continue;
    }
    const Rational n0 = n_zero_bruteforce(inst);
    const SieveBound b = sieve_bound(inst, map);
    const Direction want = hist.empty()                        ? Direction::exact
                           : hist.begin()->first % 2 == 1 ? Direction::upper
                                                          : Direction::lower;
    c.expect(b.direction == want, describe(map) + " direction " + to_string(b.direction));
    c.expect(b.direction == Direction::upper ? n0 <= b.value
             : b.direction == Direction::lower ? b.value <= n0
                                               : b.value == n0,
             describe(map) + " " + to_string(b.direction) + " " + str(b.value) + " vs " + str(n0));
    ++uniform;
  }
  c.expect(uniform == 200, "only " + std::to_string(uniform) + " uniform-parity pairs");
  c.expect(rejected > 0, "no mixed-parity map was exercised");

  // A fixed mixed-parity witness: the steps=5 walk map.
  try {
    sieve_bound(apps::saw_instance({2, 5}), LaceMap::brydges_spencer(5));
    c.expect(false, "brydges_spencer dots=5 was not rejected");
  } catch (const Error& e) {
    c.expect(e.code() == ErrorCode::mixed_parity &&
                 e.detail()["unsaturated_by_size"] ==
                     Json::parse(R"({"1":10,"2":40,"3":39,"4":10})"),
             "brydges_spencer dots=5 histogram " + e.detail().dump());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"theorem identity across builtin maps and signed random instances", criterion1},
      {"polynomial identity for builtins and random interval maps", criterion2},
      {"axiom suite and broken-map witnesses", criterion3},
      {"identity map expansion equals inclusion-exclusion", criterion4},
      {"derangements n=1..7", criterion5},
      {"Brun sieve on 1..30 with primes 2, 3, 5", criterion6},
      {"self-avoiding walks d=2, n=1..5 under Brydges-Spencer", criterion7},
      {"Ramsey triangles on K5 and K6", criterion8},
      {"sieve soundness and mixed-parity rejection", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = !check.failed() && crash.empty();
    failures += ok ? 0 : 1;
    std::printf("%s %zu: %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), check.count(), secs);
    for (const std::string& note : check.notes()) std::printf("    %s\n", note.c_str());
    if (!crash.empty()) std::printf("    exception: %s\n", crash.c_str());
  }
  return failures == 0 ? 0 : 1;
}
