#include "lace/lace.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "lace/applications.hpp"
#include "lace/json_io.hpp"

struct lace_context {
  lace::Limits limits;
  std::string last_error;
};

struct lace_map {
  lace::LaceMap map;
};

struct lace_instance {
  lace::WeightedInstance inst;
};

namespace {

using lace::Error;
using lace::ErrorCode;
using lace::Json;

lace_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return LACE_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return LACE_ERR_PARSE;
    case ErrorCode::out_of_range: return LACE_ERR_OUT_OF_RANGE;
    case ErrorCode::limit_exceeded: return LACE_ERR_LIMIT_EXCEEDED;
    case ErrorCode::budget_exceeded: return LACE_ERR_BUDGET_EXCEEDED;
    case ErrorCode::axiom_violation: return LACE_ERR_AXIOM_VIOLATION;
    case ErrorCode::not_a_lace: return LACE_ERR_NOT_A_LACE;
    case ErrorCode::mixed_parity: return LACE_ERR_MIXED_PARITY;
    case ErrorCode::negative_weight: return LACE_ERR_NEGATIVE_WEIGHT;
    case ErrorCode::direction_mismatch: return LACE_ERR_DIRECTION_MISMATCH;
    case ErrorCode::internal: return LACE_ERR_INTERNAL;
  }
  return LACE_ERR_INTERNAL;
}

template <class Fn>
lace_status guarded(lace_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return LACE_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  auto record = [ctx](const Error& e) {
    ctx->last_error = lace::error_to_json(e).dump();
    return to_status(e.code());
  };
  try {
    fn();
    return LACE_OK;
  } catch (const Error& e) {
    return record(e);
  } catch (const nlohmann::json::exception& e) {
    return record(Error(ErrorCode::parse_error, e.what()));
  } catch (const std::bad_alloc&) {
    return record(Error(ErrorCode::internal, "out of memory"));
  } catch (const std::exception& e) {
    return record(Error(ErrorCode::internal, e.what()));
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::invalid_argument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) { *out = copy_string(j.dump(2)); }

Json parse(const char* text) {
  require(text != nullptr, "null JSON text");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

int int_param(const Json& p, const char* name) {
  if (!p.contains(name) || !p.at(name).is_number_integer()) {
    throw Error(ErrorCode::parse_error, std::string("parameter \"") + name +
                                            "\" must be an integer");
  }
  return p.at(name).get<int>();
}

std::optional<std::vector<int>> int_list_param(const Json& p, const char* name) {
  if (!p.contains(name) || p.at(name).is_null()) return std::nullopt;
  std::vector<int> out;
  for (const Json& x : p.at(name)) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::parse_error, std::string("parameter \"") + name +
                                              "\" must be an integer array");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

lace::apps::AppParams app_params(const std::string& app, const Json& p) {
  using namespace lace::apps;
  if (app == "derangements") return DerangementParams{int_param(p, "n")};
  if (app == "brun-primes") {
    const int bound = int_param(p, "bound");
    require(bound >= 1, "bound must be >= 1");
    return BrunPrimesParams{static_cast<std::uint64_t>(bound), int_param(p, "primes")};
  }
  if (app == "saw") return SawConfig{int_param(p, "dimension"), int_param(p, "steps")};
  if (app == "ramsey") return RamseyConfig{int_param(p, "vertices"), int_param(p, "clique")};
  throw Error(ErrorCode::invalid_argument, "unknown application \"" + app + "\"",
              {{"known", {"derangements", "brun-primes", "saw", "ramsey"}}});
}

}  // namespace

extern "C" {

const char* lace_version(void) { return "1.0.0"; }

const char* lace_status_name(lace_status status) {
  switch (status) {
    case LACE_OK: return "ok";
    case LACE_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LACE_ERR_PARSE: return "parse_error";
    case LACE_ERR_OUT_OF_RANGE: return "out_of_range";
    case LACE_ERR_LIMIT_EXCEEDED: return "limit_exceeded";
    case LACE_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case LACE_ERR_AXIOM_VIOLATION: return "axiom_violation";
    case LACE_ERR_NOT_A_LACE: return "not_a_lace";
    case LACE_ERR_MIXED_PARITY: return "mixed_parity";
    case LACE_ERR_NEGATIVE_WEIGHT: return "negative_weight";
    case LACE_ERR_DIRECTION_MISMATCH: return "direction_mismatch";
    case LACE_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void lace_string_free(char* s) { std::free(s); }

lace_status lace_context_new(lace_context** out) {
  if (out == nullptr) return LACE_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    *out = new lace_context{lace::Limits::from_environment(), {}};
    return LACE_OK;
  } catch (const Error& e) {
    return to_status(e.code());
  } catch (...) {
    return LACE_ERR_INTERNAL;
  }
}

void lace_context_free(lace_context* ctx) { delete ctx; }

lace_status lace_context_set_limit(lace_context* ctx, lace_limit which, size_t value) {
  return guarded(ctx, [&] {
    require(value > 0, "limits must be positive");
    auto& l = ctx->limits;
    switch (which) {
      case LACE_LIMIT_EXHAUSTIVE:
        require(value <= 64, "exhaustive limit must be <= 64");
        l.exhaustive = static_cast<int>(value);
        break;
      case LACE_LIMIT_POLYNOMIAL:
        require(value <= 64, "polynomial limit must be <= 64");
        l.polynomial = static_cast<int>(value);
        break;
      case LACE_LIMIT_TABLE:
        require(value <= 30, "table limit must be <= 30");
        l.table = static_cast<int>(value);
        break;
      case LACE_LIMIT_MAX_LACES: l.max_laces = value; break;
      case LACE_LIMIT_BUDGET: l.budget = value; break;
      default: require(false, "unknown limit");
    }
  });
}

size_t lace_context_get_limit(const lace_context* ctx, lace_limit which) {
  if (ctx == nullptr) return 0;
  const auto& l = ctx->limits;
  switch (which) {
    case LACE_LIMIT_EXHAUSTIVE: return static_cast<size_t>(l.exhaustive);
    case LACE_LIMIT_POLYNOMIAL: return static_cast<size_t>(l.polynomial);
    case LACE_LIMIT_TABLE: return static_cast<size_t>(l.table);
    case LACE_LIMIT_MAX_LACES: return l.max_laces;
    case LACE_LIMIT_BUDGET: return l.budget;
  }
  return 0;
}

const char* lace_context_last_error(const lace_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

lace_status lace_map_from_json(lace_context* ctx, const char* json, lace_map** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    *out = new lace_map{lace::map_from_json(parse(json), ctx->limits)};
  });
}

void lace_map_free(lace_map* map) { delete map; }

int lace_map_size(const lace_map* map) { return map == nullptr ? -1 : map->map.size(); }

lace_status lace_map_to_json(lace_context* ctx, const lace_map* map, char** out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    emit(out, lace::map_to_json(map->map));
  });
}

lace_status lace_map_apply(lace_context* ctx, const lace_map* map, uint64_t subset,
                           uint64_t* out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    *out = lace::apply(map->map, lace::PropSubset(subset)).bits();
  });
}

lace_status lace_map_is_lace(lace_context* ctx, const lace_map* map, uint64_t subset, int* out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    *out = lace::is_lace(map->map, lace::PropSubset(subset)) ? 1 : 0;
  });
}

lace_status lace_map_compatible(lace_context* ctx, const lace_map* map, uint64_t lace_mask,
                                uint64_t* out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    *out = lace::compatible_set(map->map, lace::PropSubset(lace_mask)).bits();
  });
}

lace_status lace_verify_axioms(lace_context* ctx, const lace_map* map, int* pass,
                               char** report) {
  return guarded(ctx, [&] {
    require(map != nullptr, "null map");
    const lace::AxiomReport r = lace::verify_axioms(map->map, ctx->limits);
    if (pass != nullptr) *pass = r.pass ? 1 : 0;
    if (report != nullptr) emit(report, lace::axiom_report_to_json(r));
  });
}

lace_status lace_enumerate_laces(lace_context* ctx, const lace_map* map, char** out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    lace::require_lace_map(map->map, ctx->limits);
    emit(out, lace::laces_to_json(lace::enumerate_laces(map->map, ctx->limits), map->map));
  });
}

lace_status lace_fiber_check(lace_context* ctx, const lace_map* map, int* holds) {
  return guarded(ctx, [&] {
    require(map != nullptr && holds != nullptr, "null argument");
    *holds = lace::fiber_interval_check(map->map, ctx->limits) ? 1 : 0;
  });
}

lace_status lace_identity_check(lace_context* ctx, const lace_map* map, int* holds) {
  return guarded(ctx, [&] {
    require(map != nullptr && holds != nullptr, "null argument");
    *holds = lace::polynomial_identity_check(map->map, ctx->limits) ? 1 : 0;
  });
}

lace_status lace_analyze_parity(lace_context* ctx, const lace_map* map, char** out) {
  return guarded(ctx, [&] {
    require(map != nullptr && out != nullptr, "null argument");
    emit(out, lace::parity_to_json(lace::analyze_parity(map->map, ctx->limits)));
  });
}

lace_status lace_interlace_check(lace_context* ctx, const char* arcset_json, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "null argument");
    *holds = lace::interlace_check(lace::arcset_from_json(parse(arcset_json))) ? 1 : 0;
  });
}

lace_status lace_instance_from_json(lace_context* ctx, const char* json, lace_instance** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    *out = new lace_instance{lace::instance_from_json(parse(json))};
  });
}

void lace_instance_free(lace_instance* inst) { delete inst; }

lace_status lace_n_zero_bruteforce(lace_context* ctx, const lace_instance* inst, char** value) {
  return guarded(ctx, [&] {
    require(inst != nullptr && value != nullptr, "null argument");
    *value = copy_string(lace::to_string(lace::n_zero_bruteforce(inst->inst)));
  });
}

lace_status lace_expand(lace_context* ctx, const lace_map* map, const lace_instance* inst,
                        char** out) {
  return guarded(ctx, [&] {
    require(map != nullptr && inst != nullptr && out != nullptr, "null argument");
    const auto report = lace::lace_expansion_sum(inst->inst, map->map, ctx->limits);
    emit(out, lace::expansion_report_to_json(report, map->map.universe()));
  });
}

lace_status lace_sieve_bound(lace_context* ctx, const lace_map* map, const lace_instance* inst,
                             char** out) {
  return guarded(ctx, [&] {
    require(map != nullptr && inst != nullptr && out != nullptr, "null argument");
    const auto bound = lace::sieve_bound(inst->inst, map->map, ctx->limits);
    emit(out, lace::sieve_bound_to_json(bound, map->map.universe()));
  });
}

lace_status lace_sieve_bracket(lace_context* ctx, const lace_map* first, const lace_map* second,
                               const lace_instance* inst, char** out) {
  return guarded(ctx, [&] {
    require(first != nullptr && second != nullptr && inst != nullptr && out != nullptr,
            "null argument");
    const auto br = lace::sieve_bracket(inst->inst, first->map, second->map, ctx->limits);
    emit(out, Json{{"lower", lace::sieve_bound_to_json(br.lower, first->map.universe())},
                   {"upper", lace::sieve_bound_to_json(br.upper, first->map.universe())}});
  });
}

lace_status lace_demo(lace_context* ctx, const char* application, const char* params_json,
                      char** out) {
  return guarded(ctx, [&] {
    using namespace lace::apps;
    require(application != nullptr && out != nullptr, "null argument");
    const std::string app = application;
    const Json p = parse(params_json != nullptr ? params_json : "{}");
    const AppParams params = app_params(app, p);
    Json result;
    if (const auto* d = std::get_if<DerangementParams>(&params)) {
      result = demo_derangements(d->n, ctx->limits);
    } else if (const auto* b = std::get_if<BrunPrimesParams>(&params)) {
      result = demo_brun_primes(b->bound, b->primes, int_list_param(p, "pair_thresholds"),
                                int_list_param(p, "shifted_thresholds"), ctx->limits);
    } else if (const auto* s = std::get_if<SawConfig>(&params)) {
      result = demo_saw(*s, ctx->limits);
    } else {
      const int max_k = p.contains("max_k") ? int_param(p, "max_k") : 3;
      result = demo_ramsey(std::get<RamseyConfig>(params), max_k, ctx->limits);
    }
    emit(out, result);
  });
}

lace_status lace_oracle_count(lace_context* ctx, const char* application,
                              const char* params_json, char** value) {
  return guarded(ctx, [&] {
    require(application != nullptr && value != nullptr, "null argument");
    const auto params = app_params(application, parse(params_json));
    *value = copy_string(lace::apps::oracle_count(params, ctx->limits).str());
  });
}

lace_status lace_application_instance(lace_context* ctx, const char* application,
                                      const char* params_json, char** out) {
  return guarded(ctx, [&] {
    using namespace lace::apps;
    require(application != nullptr && out != nullptr, "null argument");
    const auto params = app_params(application, parse(params_json));
    const auto& limits = ctx->limits;
    struct Build {
      const lace::Limits& limits;
      lace::WeightedInstance operator()(const DerangementParams& d) const {
        return derangement_instance(d.n, limits);
      }
      lace::WeightedInstance operator()(const BrunPrimesParams& b) const {
        return brun_integer_instance(b.bound, b.primes, limits);
      }
      lace::WeightedInstance operator()(const SawConfig& s) const {
        return saw_instance(s, limits);
      }
      lace::WeightedInstance operator()(const RamseyConfig& r) const {
        return ramsey_instance(r, limits);
      }
    };
    *out = copy_string(lace::instance_to_json(std::visit(Build{limits}, params)).dump());
  });
}

lace_status lace_terms_csv(lace_context* ctx, const char* report_json, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = copy_string(lace::terms_to_csv(parse(report_json)));
  });
}

}  // extern "C"
