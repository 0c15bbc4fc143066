#include "lace/lace_maps.hpp"

#include <algorithm>
#include <string>

#include "lace/error.hpp"

namespace lace {

namespace {

void push_capped(std::vector<PropSubset>& out, PropSubset s, std::size_t cap) {
  if (out.size() >= cap) {
    throw Error(ErrorCode::limit_exceeded,
                "lace count exceeds the configured cap of " + std::to_string(cap));
  }
  out.push_back(s);
}

}  // namespace

BrunThresholds::BrunThresholds(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded, "Brun universe larger than 64 properties");
  }
  for (int j = 0; j < n; ++j) {
    const int v = values_[static_cast<std::size_t>(j)];
    if (v < 1 || v > n) {
      throw Error(ErrorCode::invalid_argument,
                  "Brun threshold N_" + std::to_string(j + 1) + "=" + std::to_string(v) +
                      " outside [1, " + std::to_string(n) + "]");
    }
    if (j > 0 && v > values_[static_cast<std::size_t>(j - 1)]) {
      throw Error(ErrorCode::invalid_argument,
                  "Brun thresholds must be non-increasing (N_" + std::to_string(j + 1) + " > N_" +
                      std::to_string(j) + ")");
    }
  }
}

int arc_universe_size(int dots) { return dots * (dots + 1) / 2; }

int arc_index(int dots, Arc arc) {
  int index = 0;
  for (int a = 0; a < arc.s; ++a) index += dots - a;
  return index + (arc.t - arc.s - 1);
}

Arc arc_at(int dots, int index) {
  for (int s = 0; s < dots; ++s) {
    const int row = dots - s;
    if (index < row) return {s, s + 1 + index};
    index -= row;
  }
  throw Error(ErrorCode::out_of_range, "arc index outside universe");
}

ArcSet::ArcSet(int dots, std::vector<Arc> arcs) : dots_(dots), arcs_(std::move(arcs)) {
  if (dots < 0 || arc_universe_size(dots) > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded,
                "dots=" + std::to_string(dots) + " gives more than 64 arcs");
  }
  for (const Arc& a : arcs_) {
    if (a.s < 0 || a.t > dots || a.s >= a.t) {
      throw Error(ErrorCode::out_of_range, "arc (" + std::to_string(a.s) + "," +
                                               std::to_string(a.t) + ") invalid for dots 0.." +
                                               std::to_string(dots));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw Error(ErrorCode::invalid_argument, "duplicate arc");
  }
}

ArcSet ArcSet::from_subset(int dots, PropSubset s) {
  if (!s.within(arc_universe_size(dots))) {
    throw Error(ErrorCode::out_of_range, "arc subset outside universe");
  }
  std::vector<Arc> arcs;
  for (int p : s.members()) arcs.push_back(arc_at(dots, p));
  return ArcSet(dots, std::move(arcs));
}

PropSubset ArcSet::to_subset() const {
  PropSubset out;
  for (const Arc& a : arcs_) out = out.with(arc_index(dots_, a));
  return out;
}

PropSubset bonferroni_apply(int k, PropSubset s) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "Bonferroni k must be >= 1");
  if (s.size() < k) return s;
  std::uint64_t out = 0;
  std::uint64_t rest = s.bits();
  for (int i = 0; i < k; ++i) {
    const std::uint64_t low = rest & (~rest + 1);
    out |= low;
    rest ^= low;
  }
  return PropSubset(out);
}

PropSubset brun_apply(const BrunThresholds& thresholds, PropSubset s) {
  if (!s.within(thresholds.universe_size())) {
    throw Error(ErrorCode::out_of_range, "subset outside Brun universe");
  }
  PropSubset prefix;
  int j = 1;
  for (std::uint64_t rest = s.bits(); rest != 0; ++j) {
    const int p = 63 - std::countl_zero(rest);
    rest &= ~(std::uint64_t{1} << p);
    prefix = prefix.with(p);
    if (p + 1 > thresholds.at(j)) return prefix;
  }
  return s;
}

ArcSet brydges_spencer_apply(const ArcSet& g) {
  const auto& arcs = g.arcs();
  const int n = g.dots();
  std::vector<Arc> out;
  if (arcs.empty()) return ArcSet(n, {});

  int d = arcs.front().s;
  while (true) {
    int t = -1;
    for (const Arc& a : arcs) {
      if (a.s == d) t = std::max(t, a.t);
    }
    out.push_back({d, t});
    while (t < n) {
      int next_t = t;
      for (const Arc& a : arcs) {
        if (a.s < t) next_t = std::max(next_t, a.t);
      }
      if (next_t <= t) break;
      int next_s = next_t;
      for (const Arc& a : arcs) {
        if (a.t == next_t) next_s = std::min(next_s, a.s);
      }
      out.push_back({next_s, next_t});
      t = next_t;
    }
    if (t == n) break;
    auto it = std::find_if(arcs.begin(), arcs.end(), [t](const Arc& a) { return a.s >= t; });
    if (it == arcs.end()) break;
    d = it->s;
  }
  return ArcSet(n, std::move(out));
}

PropSubset brydges_spencer_apply(int dots, PropSubset arcs) {
  return brydges_spencer_apply(ArcSet::from_subset(dots, arcs)).to_subset();
}

bool interlace_check(const ArcSet& lace) {
  if (brydges_spencer_apply(lace) != lace) {
    throw Error(ErrorCode::not_a_lace, "arc set is not a Brydges-Spencer lace");
  }
  const auto& arcs = lace.arcs();
  int reach = -1;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const bool continues = i > 0 && arcs[i].s < reach;
    if (continues) {
      const Arc& prev = arcs[i - 1];
      if (!(arcs[i].s < prev.t && prev.t < arcs[i].t)) return false;
    }
    reach = std::max(reach, arcs[i].t);
  }
  return true;
}

std::vector<PropSubset> identity_laces(int n, std::size_t cap) {
  if (n >= 63 || (std::uint64_t{1} << n) > cap) {
    throw Error(ErrorCode::limit_exceeded, "identity map on n=" + std::to_string(n) +
                                               " has more laces than the cap of " +
                                               std::to_string(cap));
  }
  std::vector<PropSubset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m);
  return out;
}

std::vector<PropSubset> bonferroni_laces(int n, int k, std::size_t cap) {
  std::vector<PropSubset> out;
  auto extend = [&](auto&& self, PropSubset cur, int next) -> void {
    push_capped(out, cur, cap);
    if (cur.size() == k) return;
    for (int p = next; p < n; ++p) self(self, cur.with(p), p + 1);
  };
  extend(extend, PropSubset{}, 0);
  return out;
}

std::vector<PropSubset> brun_laces(const BrunThresholds& thresholds, std::size_t cap) {
  const int n = thresholds.universe_size();
  std::vector<PropSubset> out;
  // Labels are chosen in decreasing order; `position` is the 1-based j of the next label.
  auto extend = [&](auto&& self, PropSubset cur, int below, int position) -> void {
    for (int label = below - 1; label >= 1; --label) {
      const PropSubset next = cur.with(label - 1);
      push_capped(out, next, cap);
      if (label <= thresholds.at(position) && position < n) {
        self(self, next, label, position + 1);
      }
    }
  };
  push_capped(out, PropSubset{}, cap);
  extend(extend, PropSubset{}, n + 1, 1);
  return out;
}

std::vector<PropSubset> brydges_spencer_laces(int dots, std::size_t cap) {
  if (arc_universe_size(dots) > kMaxProperties) {
    throw Error(ErrorCode::limit_exceeded, "dots=" + std::to_string(dots) + " too large");
  }
  std::vector<PropSubset> out;
  // Laces are arc sequences with strictly increasing s and t and
  // s_{i+2} >= t_i; a new component begins whenever s_{i+1} >= t_i.
  auto extend = [&](auto&& self, PropSubset cur, Arc last, int before_last_t) -> void {
    push_capped(out, cur, cap);
    for (int s = last.s + 1; s < dots; ++s) {
      if (s < before_last_t) continue;
      for (int t = std::max(last.t + 1, s + 1); t <= dots; ++t) {
        self(self, cur.with(arc_index(dots, {s, t})), Arc{s, t}, last.t);
      }
    }
  };
  extend(extend, PropSubset{}, Arc{-1, -1}, -1);
  return out;
}

PropSubset bonferroni_compatible(int n, int k, PropSubset lace) {
  if (lace.size() < k) return {};
  const int top = *lace.max();
  return PropSubset::full(n).minus(PropSubset::full(top + 1));
}

PropSubset brun_compatible(const BrunThresholds& thresholds, PropSubset lace) {
  const auto members = lace.members();
  int j = 1;
  for (auto it = members.rbegin(); it != members.rend(); ++it, ++j) {
    if (*it + 1 > thresholds.at(j)) return PropSubset::full(*it);
  }
  return {};
}

}  // namespace lace
