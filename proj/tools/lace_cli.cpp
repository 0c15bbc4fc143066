// Command-line front end over the liblace C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lace/lace.h"

namespace {

using Json = nlohmann::ordered_json;

struct ContextDeleter {
  void operator()(lace_context* c) const { lace_context_free(c); }
};
struct MapDeleter {
  void operator()(lace_map* m) const { lace_map_free(m); }
};
struct InstanceDeleter {
  void operator()(lace_instance* i) const { lace_instance_free(i); }
};
struct StringDeleter {
  void operator()(char* s) const { lace_string_free(s); }
};
using ContextPtr = std::unique_ptr<lace_context, ContextDeleter>;
using MapPtr = std::unique_ptr<lace_map, MapDeleter>;
using InstancePtr = std::unique_ptr<lace_instance, InstanceDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(lace_status s) {
  switch (s) {
    case LACE_OK: return 0;
    case LACE_ERR_AXIOM_VIOLATION: return 2;
    case LACE_ERR_MIXED_PARITY: return 3;
    case LACE_ERR_LIMIT_EXCEEDED:
    case LACE_ERR_BUDGET_EXCEEDED: return 4;
    case LACE_ERR_INTERNAL: return 70;
    default: return 1;
  }
}

/// Thrown to unwind with an already-formatted error object.
struct Failure {
  int code;
  std::string error_json;
};

[[noreturn]] void fail_plain(const std::string& code, const std::string& message) {
  Json j = {{"error", {{"code", code}, {"message", message}}}};
  throw Failure{1, j.dump(2)};
}

class Session {
public:
  explicit Session(std::optional<std::size_t> exhaustive, std::optional<std::size_t> budget,
                   std::optional<std::size_t> max_laces) {
    lace_context* raw = nullptr;
    const lace_status s = lace_context_new(&raw);
    if (s != LACE_OK) {
      fail_plain(lace_status_name(s), "invalid LACE_EXHAUSTIVE_LIMIT or LACE_BUDGET");
    }
    ctx_.reset(raw);
    if (exhaustive) check(lace_context_set_limit(ctx(), LACE_LIMIT_EXHAUSTIVE, *exhaustive));
    if (budget) check(lace_context_set_limit(ctx(), LACE_LIMIT_BUDGET, *budget));
    if (max_laces) check(lace_context_set_limit(ctx(), LACE_LIMIT_MAX_LACES, *max_laces));
  }

  lace_context* ctx() const { return ctx_.get(); }

  void check(lace_status s) const {
    if (s != LACE_OK) throw Failure{exit_code(s), lace_context_last_error(ctx())};
  }

  MapPtr load_map(const std::string& path) const {
    lace_map* raw = nullptr;
    check(lace_map_from_json(ctx(), read_file(path).c_str(), &raw));
    return MapPtr(raw);
  }

  InstancePtr load_instance(const std::string& path) const {
    lace_instance* raw = nullptr;
    check(lace_instance_from_json(ctx(), read_file(path).c_str(), &raw));
    return InstancePtr(raw);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_plain("io_error", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

private:
  ContextPtr ctx_;
};

std::string take(char* s) { return OwnedString(s).get(); }

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail_plain("io_error", "cannot write " + out_path);
  out << text << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail_plain("parse_error", "expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lace-maps, the lace expansion and saturated-lace sieves"};
  app.require_subcommand(1);

  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> max_laces;
  std::string out_path;
  app.add_option("--exhaustive-limit", exhaustive,
                 "Largest universe for exhaustive scans (default 12, env LACE_EXHAUSTIVE_LIMIT)");
  app.add_option("--budget", budget,
                 "Element budget for application instances (default 65536, env LACE_BUDGET)");
  app.add_option("--max-laces", max_laces, "Cap on laces per enumeration");
  app.add_option("-o,--out", out_path, "Write the report here instead of stdout");

  std::string map_path;
  std::string instance_path;

  auto* verify = app.add_subcommand("verify", "Exhaustively check the lace axioms");
  verify->add_option("--map", map_path, "Lace-map JSON")->required();

  auto* laces = app.add_subcommand("laces", "List laces with compatible sets");
  laces->add_option("--map", map_path, "Lace-map JSON")->required();

  auto* expand = app.add_subcommand("expand", "Evaluate the lace expansion on an instance");
  expand->add_option("--map", map_path, "Lace-map JSON")->required();
  expand->add_option("--instance", instance_path, "Weighted instance JSON")->required();

  auto* sieve = app.add_subcommand("sieve", "Saturated-lace sieve bound");
  sieve->add_option("--map", map_path, "Lace-map JSON")->required();
  sieve->add_option("--instance", instance_path, "Weighted instance JSON")->required();

  auto* identity = app.add_subcommand("identity-check", "Check the polynomial lace identity");
  identity->add_option("--map", map_path, "Lace-map JSON")->required();

  auto* parity = app.add_subcommand("parity", "Cardinality parity of unsaturated laces");
  parity->add_option("--map", map_path, "Lace-map JSON")->required();

  auto* fiber = app.add_subcommand("fiber-check", "Check every fiber is the interval [L, L+C(L)]");
  fiber->add_option("--map", map_path, "Lace-map JSON")->required();

  auto* demo = app.add_subcommand("demo", "Oracle vs. expansion vs. sieve demos");
  demo->require_subcommand(1);
  int n = 5;
  auto* der = demo->add_subcommand("derangements", "Permutations without fixed points");
  der->add_option("--n", n, "Permutation size")->capture_default_str();

  int bound = 30;
  int primes = 3;
  std::string pair_thresholds;
  std::string shifted_thresholds;
  auto* brun = demo->add_subcommand("brun-primes", "Integers coprime to the first primes");
  brun->add_option("--bound", bound, "Scan 1..bound")->capture_default_str();
  brun->add_option("--primes", primes, "Number of leading primes")->capture_default_str();
  brun->add_option("--pair-thresholds", pair_thresholds, "Brun chain with N1=N2, N3=N4, ...");
  brun->add_option("--shifted-thresholds", shifted_thresholds,
                   "Brun chain with N1=n, N2=N3, N4=N5, ...");

  int dim = 2;
  int steps = 3;
  std::string csv_path;
  auto* saw = demo->add_subcommand("saw", "Self-avoiding walks under the Brydges-Spencer map");
  saw->add_option("--dim", dim, "Lattice dimension")->capture_default_str();
  saw->add_option("--steps", steps, "Walk length")->capture_default_str();
  saw->add_option("--csv", csv_path, "Also write the per-lace terms as CSV");

  int vertices = 5;
  int clique = 3;
  int max_k = 3;
  auto* ramsey = demo->add_subcommand("ramsey", "Colourings of K_N without monochromatic K_n");
  ramsey->add_option("--vertices", vertices, "N")->capture_default_str();
  ramsey->add_option("--clique", clique, "n")->capture_default_str();
  ramsey->add_option("--max-k", max_k, "Largest Bonferroni depth")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump(2) << '\n';
    return 1;
  }

  try {
    Session session(exhaustive, budget, max_laces);
    lace_context* ctx = session.ctx();
    int code = 0;
    std::string report;

    if (*verify) {
      MapPtr map = session.load_map(map_path);
      int pass = 0;
      char* out = nullptr;
      session.check(lace_verify_axioms(ctx, map.get(), &pass, &out));
      report = take(out);
      code = pass ? 0 : 2;
    } else if (*laces) {
      MapPtr map = session.load_map(map_path);
      char* out = nullptr;
      session.check(lace_enumerate_laces(ctx, map.get(), &out));
      report = take(out);
    } else if (*expand || *sieve) {
      MapPtr map = session.load_map(map_path);
      InstancePtr inst = session.load_instance(instance_path);
      char* out = nullptr;
      session.check(*expand ? lace_expand(ctx, map.get(), inst.get(), &out)
                            : lace_sieve_bound(ctx, map.get(), inst.get(), &out));
      report = take(out);
    } else if (*identity || *fiber) {
      MapPtr map = session.load_map(map_path);
      int holds = 0;
      session.check(*identity ? lace_identity_check(ctx, map.get(), &holds)
                              : lace_fiber_check(ctx, map.get(), &holds));
      char* spec = nullptr;
      session.check(lace_map_to_json(ctx, map.get(), &spec));
      report = Json{{"holds", holds != 0}, {"map", Json::parse(take(spec))}}.dump(2);
      code = holds ? 0 : 2;
    } else if (*parity) {
      MapPtr map = session.load_map(map_path);
      char* out = nullptr;
      session.check(lace_analyze_parity(ctx, map.get(), &out));
      report = take(out);
    } else {
      std::string application;
      Json params;
      if (*der) {
        application = "derangements";
        params = {{"n", n}};
      } else if (*brun) {
        application = "brun-primes";
        params = {{"bound", bound}, {"primes", primes}};
        if (!pair_thresholds.empty()) params["pair_thresholds"] = parse_int_list(pair_thresholds);
        if (!shifted_thresholds.empty()) {
          params["shifted_thresholds"] = parse_int_list(shifted_thresholds);
        }
      } else if (*saw) {
        application = "saw";
        params = {{"dimension", dim}, {"steps", steps}};
      } else {
        application = "ramsey";
        params = {{"vertices", vertices}, {"clique", clique}, {"max_k", max_k}};
      }
      char* out = nullptr;
      session.check(lace_demo(ctx, application.c_str(), params.dump().c_str(), &out));
      report = take(out);
      if (*saw && !csv_path.empty()) {
        char* csv = nullptr;
        session.check(lace_terms_csv(ctx, report.c_str(), &csv));
        std::ofstream f(csv_path);
        if (!f) fail_plain("io_error", "cannot write " + csv_path);
        f << take(csv);
      }
    }
    write_output(report, out_path);
    return code;
  } catch (const Failure& f) {
    std::cout << f.error_json << '\n';
    return f.code;
  }
}
