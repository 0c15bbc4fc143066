#include "lace/lace_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lace/error.hpp"

namespace lace {

namespace {

std::size_t env_value(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(ErrorCode::invalid_argument,
                std::string(name) + " must be a positive integer, got \"" + raw + "\"");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void require_exhaustive(const LaceMap& map, const Limits& limits, const char* what) {
  if (map.size() > limits.exhaustive) {
    throw Error(ErrorCode::limit_exceeded,
                std::string(what) + " needs an exhaustive scan; universe size " +
                    std::to_string(map.size()) + " exceeds the limit " +
                    std::to_string(limits.exhaustive),
                {{"universe_size", map.size()}, {"limit", limits.exhaustive}});
  }
}

std::vector<std::uint64_t> image_table(const LaceMap& map) {
  const std::uint64_t count = std::uint64_t{1} << map.size();
  std::vector<std::uint64_t> img(count);
  for (std::uint64_t m = 0; m < count; ++m) img[m] = map.apply(PropSubset(m)).bits();
  return img;
}

PropSubset scan_compatible(const std::vector<std::uint64_t>& img, int n, std::uint64_t lace) {
  PropSubset out;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (!(lace & bit) && img[lace | bit] == lace) out = out.with(p);
  }
  return out;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.exhaustive = static_cast<int>(
      std::min<std::size_t>(env_value("LACE_EXHAUSTIVE_LIMIT", 12), kMaxProperties));
  limits.budget = env_value("LACE_BUDGET", limits.budget);
  return limits;
}

PropertyUniverse::PropertyUniverse(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 0 || size > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded,
                "universe size " + std::to_string(size) + " outside [0, 64]");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != size) {
    throw Error(ErrorCode::invalid_argument, "universe labels must have exactly size entries");
  }
}

void PropertyUniverse::check(PropSubset s) const {
  if (!s.within(size_)) {
    throw Error(ErrorCode::out_of_range, "subset " + to_string(s) +
                                             " leaves the universe of size " +
                                             std::to_string(size_));
  }
}

LaceMap LaceMap::identity(int n) { return LaceMap(PropertyUniverse(n), kind::Identity{}); }

LaceMap LaceMap::bonferroni(int n, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "Bonferroni k must be >= 1");
  return LaceMap(PropertyUniverse(n, numeric_labels(n)), kind::Bonferroni{k});
}

LaceMap LaceMap::brun(BrunThresholds thresholds) {
  const int n = thresholds.universe_size();
  return LaceMap(PropertyUniverse(n, numeric_labels(n)), kind::Brun{std::move(thresholds)});
}

LaceMap LaceMap::brydges_spencer(int dots) {
  if (dots < 0 || arc_universe_size(dots) > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded,
                "Brydges-Spencer map needs dots in [0, 10], got " + std::to_string(dots));
  }
  const int n = arc_universe_size(dots);
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) {
    const Arc a = arc_at(dots, p);
    labels.push_back(std::to_string(a.s) + "-" + std::to_string(a.t));
  }
  return LaceMap(PropertyUniverse(n, std::move(labels)), kind::BrydgesSpencer{dots});
}

LaceMap LaceMap::table(int n, const std::vector<std::pair<PropSubset, PropSubset>>& entries,
                       const Limits& limits) {
  if (n < 0 || n > limits.table) {
    throw Error(ErrorCode::limit_exceeded, "table map size " + std::to_string(n) +
                                               " exceeds the table limit " +
                                               std::to_string(limits.table));
  }
  PropertyUniverse universe(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> image(count);
  std::vector<bool> seen(count, false);
  for (const auto& [s, l] : entries) {
    universe.check(s);
    universe.check(l);
    if (seen[s.bits()]) {
      throw Error(ErrorCode::invalid_argument, "table map lists S=" + to_string(s) + " twice");
    }
    seen[s.bits()] = true;
    image[s.bits()] = l.bits();
  }
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!seen[m]) {
      throw Error(ErrorCode::invalid_argument,
                  "table map has no entry for S=" + to_string(PropSubset(m)),
                  {{"missing", PropSubset(m).members()}});
    }
  }
  return LaceMap(std::move(universe), kind::Table{std::move(image)});
}

LaceMap LaceMap::table(int n, const std::function<PropSubset(PropSubset)>& fn,
                       const Limits& limits) {
  if (n < 0 || n > limits.table) {
    throw Error(ErrorCode::limit_exceeded, "table map size exceeds the table limit");
  }
  std::vector<std::pair<PropSubset, PropSubset>> entries;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    entries.emplace_back(PropSubset(m), fn(PropSubset(m)));
  }
  return table(n, entries, limits);
}

const char* LaceMap::kind_name() const {
  struct Name {
    const char* operator()(const kind::Identity&) const { return "identity"; }
    const char* operator()(const kind::Bonferroni&) const { return "bonferroni"; }
    const char* operator()(const kind::Brun&) const { return "brun"; }
    const char* operator()(const kind::BrydgesSpencer&) const { return "brydges_spencer"; }
    const char* operator()(const kind::Table&) const { return "table"; }
  };
  return std::visit(Name{}, kind_);
}

PropSubset LaceMap::apply(PropSubset s) const {
  universe_.check(s);
  struct Apply {
    PropSubset s;
    PropSubset operator()(const kind::Identity&) const { return s; }
    PropSubset operator()(const kind::Bonferroni& b) const { return bonferroni_apply(b.k, s); }
    PropSubset operator()(const kind::Brun& b) const { return brun_apply(b.thresholds, s); }
    PropSubset operator()(const kind::BrydgesSpencer& b) const {
      return brydges_spencer_apply(b.dots, s);
    }
    PropSubset operator()(const kind::Table& t) const { return PropSubset(t.image[s.bits()]); }
  };
  return std::visit(Apply{s}, kind_);
}

const char* axiom_label(Axiom a) {
  switch (a) {
    case Axiom::containment: return "i";
    case Axiom::interval: return "ii";
    case Axiom::union_closure: return "iii";
  }
  return "?";
}

PropSubset apply(const LaceMap& map, PropSubset s) { return map.apply(s); }

bool is_lace(const LaceMap& map, PropSubset s) { return map.apply(s) == s; }

PropSubset compatible_set_by_scan(const LaceMap& map, PropSubset lace) {
  if (!is_lace(map, lace)) {
    throw Error(ErrorCode::not_a_lace, to_string(lace) + " is not a lace of the map");
  }
  PropSubset out;
  for (int p = 0; p < map.size(); ++p) {
    if (!lace.contains(p) && map.apply(lace.with(p)) == lace) out = out.with(p);
  }
  return out;
}

PropSubset compatible_set(const LaceMap& map, PropSubset lace) {
  if (!is_lace(map, lace)) {
    throw Error(ErrorCode::not_a_lace, to_string(lace) + " is not a lace of the map");
  }
  if (std::holds_alternative<kind::Identity>(map.kind())) return {};
  if (const auto* b = std::get_if<kind::Bonferroni>(&map.kind())) {
    return bonferroni_compatible(map.size(), b->k, lace);
  }
  if (const auto* b = std::get_if<kind::Brun>(&map.kind())) {
    return brun_compatible(b->thresholds, lace);
  }
  return compatible_set_by_scan(map, lace);
}

AxiomReport verify_axioms(const LaceMap& map, const Limits& limits) {
  require_exhaustive(map, limits, "verify_axioms");
  const auto img = image_table(map);
  const std::uint64_t count = img.size();
  AxiomReport report;
  auto fail = [&](Axiom a, std::vector<std::pair<std::string, PropSubset>> witness) {
    report.pass = false;
    report.violated = a;
    report.witness = std::move(witness);
    return report;
  };

  for (std::uint64_t s = 0; s < count; ++s) {
    if (!PropSubset(img[s]).subset_of(PropSubset(s))) {
      return fail(Axiom::containment, {{"S", PropSubset(s)}, {"l(S)", PropSubset(img[s])}});
    }
  }

  for (std::uint64_t s = 0; s < count; ++s) {
    const PropSubset ls(img[s]);
    std::optional<PropSubset> bad;
    for_each_in_interval(ls, PropSubset(s), [&](PropSubset g) {
      if (!bad && img[g.bits()] != ls.bits()) bad = g;
    });
    if (bad) {
      return fail(Axiom::interval, {{"S", PropSubset(s)},
                                    {"l(S)", ls},
                                    {"G", *bad},
                                    {"l(G)", PropSubset(img[bad->bits()])}});
    }
  }

  // Pairs with equal images only; buckets keep ascending order so the first
  // witness matches a plain (S1, S2) lexicographic scan.
  std::vector<std::vector<std::uint64_t>> bucket(count);
  for (std::uint64_t s = 0; s < count; ++s) bucket[img[s]].push_back(s);
  for (std::uint64_t s1 = 0; s1 < count; ++s1) {
    for (std::uint64_t s2 : bucket[img[s1]]) {
      if (img[s1 | s2] != img[s1]) {
        return fail(Axiom::union_closure, {{"S1", PropSubset(s1)},
                                           {"S2", PropSubset(s2)},
                                           {"l(S1)", PropSubset(img[s1])},
                                           {"S1|S2", PropSubset(s1 | s2)},
                                           {"l(S1|S2)", PropSubset(img[s1 | s2])}});
      }
    }
  }
  return report;
}

void require_lace_map(const LaceMap& map, const Limits& limits) {
  if (map.is_builtin()) return;
  const AxiomReport report = verify_axioms(map, limits);
  if (report.pass) return;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  for (const auto& [name, s] : report.witness) witness[name] = s.members();
  throw Error(ErrorCode::axiom_violation,
              std::string("table map violates lace axiom (") + axiom_label(*report.violated) + ")",
              {{"violated", axiom_label(*report.violated)}, {"witness", witness}});
}

void sort_canonical(std::vector<Lace>& laces) {
  std::sort(laces.begin(), laces.end(),
            [](const Lace& a, const Lace& b) { return canonical_less(a.members, b.members); });
}

std::vector<Lace> enumerate_laces_generic(const LaceMap& map, const Limits& limits) {
  require_exhaustive(map, limits, "generic lace enumeration");
  const auto img = image_table(map);
  std::vector<Lace> out;
  for (std::uint64_t m = 0; m < img.size(); ++m) {
    if (img[m] != m) continue;
    if (out.size() >= limits.max_laces) {
      throw Error(ErrorCode::limit_exceeded, "lace count exceeds the configured cap");
    }
    out.push_back({PropSubset(m), scan_compatible(img, map.size(), m)});
  }
  sort_canonical(out);
  return out;
}

std::vector<Lace> enumerate_laces(const LaceMap& map, const Limits& limits) {
  std::vector<PropSubset> members;
  const auto& k = map.kind();
  if (std::holds_alternative<kind::Identity>(k)) {
    members = identity_laces(map.size(), limits.max_laces);
  } else if (const auto* b = std::get_if<kind::Bonferroni>(&k)) {
    members = bonferroni_laces(map.size(), b->k, limits.max_laces);
  } else if (const auto* b = std::get_if<kind::Brun>(&k)) {
    members = brun_laces(b->thresholds, limits.max_laces);
  } else if (const auto* b = std::get_if<kind::BrydgesSpencer>(&k)) {
    members = brydges_spencer_laces(b->dots, limits.max_laces);
  } else {
    return enumerate_laces_generic(map, limits);
  }
  std::vector<Lace> out;
  out.reserve(members.size());
  for (PropSubset m : members) out.push_back({m, compatible_set(map, m)});
  sort_canonical(out);
  return out;
}

bool fiber_interval_check(const LaceMap& map, const Limits& limits) {
  require_exhaustive(map, limits, "fiber_interval_check");
  const int n = map.size();
  const auto img = image_table(map);
  std::vector<std::optional<PropSubset>> compat(img.size());
  auto compatible_of = [&](std::uint64_t l) {
    if (!compat[l]) compat[l] = scan_compatible(img, n, l);
    return *compat[l];
  };

  for (std::uint64_t s = 0; s < img.size(); ++s) {
    const std::uint64_t l = img[s];
    if (img[l] != l) return false;
    const PropSubset lo(l);
    const PropSubset hi = lo | compatible_of(l);
    if (!lo.subset_of(PropSubset(s)) || !PropSubset(s).subset_of(hi)) return false;
  }
  for (std::uint64_t l = 0; l < img.size(); ++l) {
    if (img[l] != l) continue;
    bool ok = true;
    for_each_in_interval(PropSubset(l), PropSubset(l) | compatible_of(l),
                         [&](PropSubset s) { ok = ok && img[s.bits()] == l; });
    if (!ok) return false;
  }
  return true;
}

}  // namespace lace
