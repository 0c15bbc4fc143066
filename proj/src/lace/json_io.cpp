#include "lace/json_io.hpp"

#include <sstream>

namespace lace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) bad(std::string(what) + " must contain only integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json labels_of(PropSubset s, const PropertyUniverse& universe) {
  Json out = Json::array();
  for (int p : s.members()) out.push_back(universe.labels()[static_cast<std::size_t>(p)]);
  return out;
}

Json term_to_json(const LaceTerm& t, const PropertyUniverse& universe) {
  Json j = lace_to_json(t.lace, universe);
  j["N"] = to_string(t.n_of_l);
  j["signed"] = to_string(t.signed_value);
  return j;
}

std::string join_json(const Json& arr) {
  std::string out;
  for (const Json& x : arr) {
    if (!out.empty()) out += ' ';
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

}  // namespace

Json subset_to_json(PropSubset s) { return s.members(); }

PropSubset subset_from_json(const Json& j, int universe_size) {
  return PropSubset::from_indices(int_array(j, "subset"), universe_size);
}

LaceMap map_from_json(const Json& j, const Limits& limits) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) bad("field \"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "identity") return LaceMap::identity(int_field(j, "n"));
  if (kind == "bonferroni") return LaceMap::bonferroni(int_field(j, "n"), int_field(j, "k"));
  if (kind == "brun") {
    BrunThresholds thresholds(int_array(field(j, "thresholds"), "thresholds"));
    if (j.contains("n") && int_field(j, "n") != thresholds.universe_size()) {
      bad("brun: n must equal the number of thresholds");
    }
    return LaceMap::brun(std::move(thresholds));
  }
  if (kind == "brydges_spencer") {
    const int dots = int_field(j, "dots");
    if (dots < 0) bad("brydges_spencer: dots must be >= 0");
    LaceMap map = LaceMap::brydges_spencer(dots);
    if (j.contains("n") && int_field(j, "n") != map.size()) {
      bad("brydges_spencer: n must equal (dots+1)*dots/2 = " + std::to_string(map.size()));
    }
    return map;
  }
  if (kind == "table") {
    const int n = int_field(j, "n");
    if (n < 0 || n > limits.table) {
      throw Error(ErrorCode::limit_exceeded, "table map size " + std::to_string(n) +
                                                 " exceeds the table limit " +
                                                 std::to_string(limits.table));
    }
    const Json& rows = field(j, "table");
    if (!rows.is_array()) bad("field \"table\" must be an array");
    std::vector<std::pair<PropSubset, PropSubset>> entries;
    for (const Json& row : rows) {
      entries.emplace_back(subset_from_json(field(row, "s"), n),
                           subset_from_json(field(row, "l"), n));
    }
    return LaceMap::table(n, entries, limits);
  }
  bad("unknown map kind \"" + kind + "\"");
}

Json map_to_json(const LaceMap& map) {
  Json j;
  j["kind"] = map.kind_name();
  j["n"] = map.size();
  const auto& k = map.kind();
  if (const auto* b = std::get_if<kind::Bonferroni>(&k)) j["k"] = b->k;
  if (const auto* b = std::get_if<kind::Brun>(&k)) j["thresholds"] = b->thresholds.values();
  if (const auto* b = std::get_if<kind::BrydgesSpencer>(&k)) j["dots"] = b->dots;
  if (const auto* t = std::get_if<kind::Table>(&k)) {
    Json rows = Json::array();
    for (std::uint64_t m = 0; m < t->image.size(); ++m) {
      rows.push_back({{"s", PropSubset(m).members()}, {"l", PropSubset(t->image[m]).members()}});
    }
    j["table"] = std::move(rows);
  }
  return j;
}

WeightedInstance instance_from_json(const Json& j) {
  const int n = int_field(j, "n");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) bad("field \"labels\" must be an array of strings");
    for (const Json& x : l) {
      if (!x.is_string()) bad("field \"labels\" must be an array of strings");
      labels.push_back(x.get<std::string>());
    }
  }
  PropertyUniverse universe(n, std::move(labels));
  const Json& elems = field(j, "elements");
  if (!elems.is_array()) bad("field \"elements\" must be an array");
  std::vector<Element> elements;
  elements.reserve(elems.size());
  for (const Json& e : elems) {
    const Json& w = field(e, "w");
    Rational weight;
    if (w.is_number_unsigned()) {
      weight = Rational(BigInt(w.get<unsigned long long>()));
    } else if (w.is_number_integer()) {
      weight = Rational(BigInt(w.get<long long>()));
    } else if (w.is_string()) {
      weight = parse_rational(w.get<std::string>());
    } else {
      bad("element weight \"w\" must be an integer or a rational string");
    }
    elements.push_back({std::move(weight), subset_from_json(field(e, "props"), n)});
  }
  return WeightedInstance(std::move(universe), std::move(elements));
}

Json instance_to_json(const WeightedInstance& inst) {
  Json j;
  j["n"] = inst.universe().size();
  if (inst.universe().has_labels()) j["labels"] = inst.universe().labels();
  Json elems = Json::array();
  for (const Element& e : inst.elements()) {
    elems.push_back({{"w", to_string(e.weight)}, {"props", e.properties.members()}});
  }
  j["elements"] = std::move(elems);
  return j;
}

ArcSet arcset_from_json(const Json& j) {
  const int dots = int_field(j, "dots");
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) bad("field \"arcs\" must be an array");
  std::vector<Arc> out;
  for (const Json& a : arcs) {
    const auto pair = int_array(a, "arc");
    if (pair.size() != 2) bad("each arc must be a pair [i, j]");
    out.push_back({pair[0], pair[1]});
  }
  return ArcSet(dots, std::move(out));
}

Json arcset_to_json(const ArcSet& arcs) {
  Json list = Json::array();
  for (const Arc& a : arcs.arcs()) list.push_back({a.s, a.t});
  return {{"dots", arcs.dots()}, {"arcs", std::move(list)}};
}

Json lace_to_json(const Lace& lace, const PropertyUniverse& universe) {
  Json j;
  j["lace"] = subset_to_json(lace.members);
  j["compatible"] = subset_to_json(lace.compatible);
  j["saturated"] = lace.saturated();
  if (universe.has_labels()) {
    j["lace_labels"] = labels_of(lace.members, universe);
    j["compatible_labels"] = labels_of(lace.compatible, universe);
  }
  return j;
}

Json laces_to_json(const std::vector<Lace>& laces, const LaceMap& map) {
  Json list = Json::array();
  std::size_t saturated = 0;
  for (const Lace& l : laces) {
    list.push_back(lace_to_json(l, map.universe()));
    saturated += l.saturated() ? 1 : 0;
  }
  return {{"map", map_to_json(map)},
          {"count", laces.size()},
          {"saturated_count", saturated},
          {"laces", std::move(list)}};
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json j;
  j["pass"] = report.pass;
  if (report.violated) {
    j["violated"] = axiom_label(*report.violated);
    Json w = Json::object();
    for (const auto& [name, s] : report.witness) w[name] = subset_to_json(s);
    j["witness"] = std::move(w);
  }
  return j;
}

Json parity_to_json(const ParityAnalysis& a) {
  Json hist = Json::object();
  for (const auto& [size, count] : a.unsaturated_by_size) hist[std::to_string(size)] = count;
  Json j;
  j["all_unsaturated_same_parity"] = a.all_unsaturated_same_parity;
  j["parity"] = a.parity ? Json(to_string(*a.parity)) : Json(nullptr);
  j["unsaturated_count"] = a.unsaturated_count;
  j["saturated_count"] = a.saturated_count;
  j["unsaturated_by_size"] = std::move(hist);
  return j;
}

Json expansion_report_to_json(const ExpansionReport& report, const PropertyUniverse& universe) {
  Json terms = Json::array();
  for (const LaceTerm& t : report.terms) terms.push_back(term_to_json(t, universe));
  return {{"n0", to_string(report.n0)}, {"terms", std::move(terms)}};
}

Json sieve_bound_to_json(const SieveBound& bound, const PropertyUniverse& universe) {
  Json terms = Json::array();
  for (const LaceTerm& t : bound.terms) terms.push_back(term_to_json(t, universe));
  return {{"value", to_string(bound.value)},
          {"direction", to_string(bound.direction)},
          {"terms", std::move(terms)}};
}

Json error_to_json(const Error& e) {
  Json inner;
  inner["code"] = error_code_name(e.code());
  inner["message"] = e.what();
  if (!e.detail().is_null()) inner["detail"] = e.detail();
  return {{"error", std::move(inner)}};
}

std::string terms_to_csv(const Json& report) {
  if (!report.is_object() || !report.contains("terms") || !report.at("terms").is_array()) {
    bad("report has no \"terms\" array");
  }
  std::ostringstream out;
  out << "lace,lace_labels,compatible,saturated,N,signed\n";
  for (const Json& t : report.at("terms")) {
    out << join_json(field(t, "lace")) << ','
        << (t.contains("lace_labels") ? join_json(t.at("lace_labels")) : std::string()) << ','
        << join_json(field(t, "compatible")) << ','
        << (field(t, "saturated").get<bool>() ? "true" : "false") << ','
        << field(t, "N").get<std::string>() << ',' << field(t, "signed").get<std::string>()
        << '\n';
  }
  return out.str();
}

}  // namespace lace
