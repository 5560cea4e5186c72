#pragma once

// Batch jobs behind the command-line tool: each command turns a Config into one or more
// ordered JSON records, printed either as NDJSON or as a flat key/value table.

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/config.hpp"
#include "dirac/diracindex.hpp"
#include "dirac/orbital.hpp"
#include "dirac/presets.hpp"
#include "dirac/weyl_cache.hpp"

namespace dirac {

using Json = nlohmann::ordered_json;

inline constexpr const char* normalization_tag = "long-root-2";

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"rootsys-info", "weyl-order",  "char-dim",    "char-branch",
                                              "pair-validate", "index-g",    "index-euler", "index-arith",
                                              "orbital-eval",  "identity-suite"};
  return names;
}

struct JobSpec {
  std::string command;
  std::string format = "table";  // or "records"
  std::uint64_t order_cap = default_weyl_cap;
  long torsion_order = 12;
  std::optional<std::filesystem::path> cache_dir;
};

struct JobResult {
  std::string output;
  int exit_code = 0;
};

// ---- identity battery ------------------------------------------------------------------

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;  // at most a handful, in enumeration order
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Replacement for ch S+ - ch S-; lets tests feed a deliberately wrong character through the battery.
struct IdentityOverrides {
  std::function<FormalCharacter(const SymmetricPair&)> euler_character;
};

// K-dominant conjugate of the first fundamental weight of G.
inline TauSpec first_fundamental_k_type(const SymmetricPair& p) {
  Weight w1 = Weight::zero(p.rank());
  w1.coords[0] = 1;
  return TauSpec{p.k.dominant_conjugate(w1).weight, "first-fundamental"};
}

inline IdentityReport identity_suite(const SymmetricPair& p, long max_order = 12,
                                     const IdentityOverrides& overrides = {}) {
  constexpr std::size_t max_reported = 5;
  auto note = [&](IdentityCheck& c, std::string what) {
    c.passed = false;
    if (c.counterexamples.size() < max_reported) c.counterexamples.push_back(std::move(what));
  };
  FormalCharacter euler = overrides.euler_character ? overrides.euler_character(p) : euler_virtual_character(p);
  const auto torsion = enumerate_torsion(p.rank(), max_order);
  IdentityReport report;

  IdentityCheck spin{"spin-product-identity", true, 0, {}};
  spin.cases = 1;
  FormalCharacter diff = euler - euler_product_character(p);
  for (const auto& [mu, m] : diff.terms()) note(spin, "weight " + to_string(mu) + " off by " + std::to_string(m));
  report.checks.push_back(std::move(spin));

  IdentityCheck vanishing{"vanishing-law", true, 0, {}};
  for (const auto& t : torsion) {
    ++vanishing.cases;
    bool zero = evaluate_at_torsion(euler, t).is_zero();
    bool fixed = !fixed_noncompact_roots(t, p).empty();
    if (zero != fixed) note(vanishing, "x = " + to_string(t.coords()));
  }
  report.checks.push_back(std::move(vanishing));

  IdentityCheck orbital{"orbital-consistency", true, 0, {}};
  for (const TauSpec& tau : {TauSpec::trivial(p.rank()), first_fundamental_k_type(p)})
    for (const auto& t : torsion) {
      if (!is_regular_element(t, p)) continue;
      ++orbital.cases;
      if (!orbital_consistency(t, tau, p))
        note(orbital, "x = " + to_string(t.coords()) + ", tau = " + to_string(tau.highest.coords));
    }
  report.checks.push_back(std::move(orbital));
  return report;
}

// ---- JSON helpers ----------------------------------------------------------------------

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const BigInt& z) { return z.get_str(); }

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const Weight& w) { return to_json(w.coords); }

inline Json to_json(const CyclotomicNumber& z) {
  CyclotomicNumber n = z.normalized();
  return Json{{"conductor", n.conductor()}, {"coefficients", to_json(n.coefficients())}};
}

inline Json int_rows(const std::vector<std::vector<int>>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

namespace detail {

inline Weight config_weight(const std::optional<RationalVector>& v, std::size_t rank, const char* what) {
  if (!v) return Weight::zero(rank);
  if (v->size() != rank)
    throw Error(ErrorCode::rank_mismatch, std::string(what) + " has " + std::to_string(v->size()) +
                                              " coordinates, rank is " + std::to_string(rank));
  return Weight(*v);
}

inline Weight required_weight(const std::optional<RationalVector>& v, std::size_t rank, const char* what) {
  if (!v) throw Error(ErrorCode::missing_parameter, std::string(what) + " is required for this command");
  return config_weight(v, rank, what);
}

inline RootSystemPtr config_root_system(const Config& cfg) {
  if (cfg.rootsys) return build_root_system(*cfg.rootsys);
  return resolve_pair(cfg).rs;
}

inline std::string subject_name(const Config& cfg) {
  if (!cfg.name.empty()) return cfg.name;
  if (cfg.rootsys) return *cfg.rootsys;
  return "";
}

inline Json record(const std::string& command, const Config& cfg, Json params, Json result) {
  Json r;
  r["record"] = command;
  r["pair"] = subject_name(cfg);
  r["normalization"] = normalization_tag;
  r["params"] = std::move(params);
  r["result"] = std::move(result);
  return r;
}

inline Json error_record(const std::string& command, const std::string& subject, const Error& e) {
  Json r;
  r["record"] = "error";
  r["command"] = command;
  r["pair"] = subject;
  r["normalization"] = normalization_tag;
  r["code"] = std::string(code_name(e.code()));
  r["message"] = e.what();
  if (auto ce = dynamic_cast<const ConfigError*>(&e)) {
    Json d = Json::array();
    for (const auto& x : ce->diagnostics())
      d.push_back(Json{{"line", x.line}, {"column", x.column}, {"message", x.message}});
    r["diagnostics"] = std::move(d);
  }
  return r;
}

inline Json pair_params(const Config& cfg) {
  Json p;
  if (cfg.preset) p["preset"] = *cfg.preset;
  if (!cfg.factors.empty()) {
    Json f = Json::array();
    for (const auto& x : cfg.factors) f.push_back(Json{{"type", x.type}, {"compact", int_rows(x.compact)}});
    p["factors"] = std::move(f);
  }
  return p;
}

inline Json roots_json(const RootSystem& rs, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto k : idx) a.push_back(rs.root(k).simple);
  return a;
}

inline Json index_json(const IndexReport& r) {
  return Json{{"lambda", to_json(r.lambda)},
              {"regular", r.regular},
              {"dominant", to_json(r.dominant)},
              {"weyl_word", r.element.word},
              {"sign", r.sign},
              {"dim_w", to_json(r.dim_w)},
              {"chi_dual", to_json(r.chi_dual)},
              {"unsigned_index", to_json(r.unsigned_index)},
              {"signed_index", to_json(r.signed_index)}};
}

inline Json orbital_json(const OrbitalResult& r) {
  Json j{{"regular", r.regular}, {"value", to_json(r.value)}};
  j["c_g"] = r.c_g ? Json(to_json(*r.c_g)) : Json(nullptr);
  j["component_index"] = r.component_index ? Json(*r.component_index) : Json(nullptr);
  j["centralizer_roots"] = r.centralizer_roots;
  j["centralizer_weyl_order"] = to_json(r.centralizer_weyl_order);
  return j;
}

inline Json decomposition_json(const VirtualKDecomposition& d) {
  Json a = Json::array();
  for (const auto& [hw, m] : d.terms) a.push_back(Json{{"highest", to_json(hw)}, {"multiplicity", m}});
  return a;
}

inline std::vector<Json> run_command(const Config& cfg, const JobSpec& job) {
  const std::string& cmd = job.command;
  if (cmd == "rootsys-info") {
    auto rs = config_root_system(cfg);
    std::vector<std::size_t> all(rs->positive_roots().size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    Json res{{"type", rs->type().to_string()},
             {"rank", rs->rank()},
             {"positive_roots", all.size()},
             {"cartan_matrix", int_rows(rs->cartan_matrix())},
             {"degrees", rs->degrees()},
             {"weyl_order", to_json(weyl_order(*rs))},
             {"rho", to_json(rho(*rs))},
             {"roots", roots_json(*rs, all)}};
    return {record(cmd, cfg, Json{{"type", rs->type().to_string()}}, std::move(res))};
  }
  if (cmd == "weyl-order") {
    auto rs = config_root_system(cfg);
    BigInt formula = weyl_order(*rs);
    Json res{{"type", rs->type().to_string()}, {"formula", to_json(formula)}};
    if (formula > BigInt(std::to_string(job.order_cap))) {
      res["enumerated"] = nullptr;
      res["agree"] = nullptr;
    } else {
      std::vector<WeylElement> elements;
      if (job.cache_dir) {
        auto path = weyl_cache_file(*rs, *job.cache_dir);
        auto loaded = load_weyl(*rs, path, job.order_cap);
        if (!loaded.from_cache) cache_weyl(*rs, path, job.order_cap);
        elements = std::move(loaded.elements);
      } else {
        elements = weyl_group(*rs, job.order_cap);
      }
      res["enumerated"] = elements.size();
      res["agree"] = BigInt(std::to_string(elements.size())) == formula;
    }
    return {record(cmd, cfg, Json{{"type", rs->type().to_string()}, {"order_cap", job.order_cap}}, std::move(res))};
  }
  if (cmd == "char-dim") {
    auto rs = config_root_system(cfg);
    Weight hw = required_weight(cfg.sigma, rs->rank(), "[sigma] weight");
    auto ch = irreducible_character(hw, *rs);
    BigInt dim = weyl_dimension(hw, *rs);
    Json res{{"weyl_dimension", to_json(dim)},
             {"freudenthal_mass", ch.total_mass()},
             {"distinct_weights", ch.support_size()},
             {"agree", BigInt(std::to_string(ch.total_mass())) == dim}};
    return {record(cmd, cfg, Json{{"type", rs->type().to_string()}, {"sigma", to_json(hw)}}, std::move(res))};
  }

  SymmetricPair p = resolve_pair(cfg);
  Json params = pair_params(cfg);

  if (cmd == "char-branch") {
    Weight hw = required_weight(cfg.sigma, p.rank(), "[sigma] weight");
    auto ch = irreducible_character(hw, p.roots());
    auto d = branch_to_compact(ch, p);
    BigInt total = 0;
    for (const auto& [k, m] : d.terms) total += BigInt(std::to_string(m)) * weyl_dimension(k, p.k);
    params["sigma"] = to_json(hw);
    Json res{{"dimension", to_json(weyl_dimension(hw, p.roots()))},
             {"k_types", decomposition_json(d)},
             {"k_dimension_total", to_json(total)}};
    return {record(cmd, cfg, std::move(params), std::move(res))};
  }
  if (cmd == "pair-validate") {
    const RootSystem& rs = p.roots();
    Json res{{"type", rs.type().to_string()},
             {"compact_roots", roots_json(rs, p.k.positive())},
             {"noncompact_roots", roots_json(rs, p.noncompact)},
             {"rho", to_json(p.rho)},
             {"rho_c", to_json(p.rho_c)},
             {"rho_n", to_json(p.rho_n)},
             {"dim_x", dim_x(p)},
             {"ep_sign", ep_sign(p)},
             {"hermitian", is_hermitian(p)},
             {"chi_dual", to_json(chi_dual(p))},
             {"chi_dual_raw_weyl", to_json(chi_dual_raw_weyl(p))}};
    return {record(cmd, cfg, std::move(params), std::move(res))};
  }

  TauSpec tau{config_weight(cfg.tau, p.rank(), "[tau] weight"), ""};
  params["tau"] = to_json(tau.highest);

  if (cmd == "index-g") return {record(cmd, cfg, std::move(params), index_json(g_index(tau, p)))};
  if (cmd == "index-euler") {
    auto r = euler_index_report(tau, p);
    Json pieces = Json::array();
    for (std::size_t i = 0; i < r.pieces.size(); ++i) {
      Json piece = index_json(r.pieces[i]);
      piece["k_type"] = to_json(r.decomposition.terms[i].first);
      piece["multiplicity"] = r.decomposition.terms[i].second;
      pieces.push_back(std::move(piece));
    }
    Json res{{"value", to_json(r.value)}, {"pieces", std::move(pieces)}};
    return {record(cmd, cfg, std::move(params), std::move(res))};
  }
  if (cmd == "index-arith") {
    if (!cfg.chi_gamma) throw Error(ErrorCode::missing_parameter, "[arith] chi_gamma is required for index-arith");
    OperatorKind kind = cfg.arith_kind == "dirac" ? OperatorKind::dirac : OperatorKind::euler;
    Rational g = kind == OperatorKind::dirac ? g_index(tau, p).signed_index : euler_index(tau, p);
    Rational value = arithmetic_index(kind, tau, p, *cfg.chi_gamma, cfg.error_term);
    params["kind"] = cfg.arith_kind;
    params["chi_gamma"] = to_json(*cfg.chi_gamma);
    params["error_term"] = to_json(cfg.error_term);
    Json res{{"g_index", to_json(g)}, {"value", to_json(value)}};
    return {record(cmd, cfg, std::move(params), std::move(res))};
  }
  if (cmd == "orbital-eval") {
    if (!cfg.element) throw Error(ErrorCode::missing_parameter, "[element] x is required for orbital-eval");
    if (cfg.element->size() != p.rank()) throw Error(ErrorCode::rank_mismatch, "[element] x does not match the rank");
    TorsionElement t(*cfg.element);
    Weight sigma = config_weight(cfg.sigma, p.rank(), "[sigma] weight");
    params["x"] = to_json(t.coords());
    params["sigma"] = to_json(sigma);
    params["c_g"] = to_json(cfg.c_g);
    params["component_index"] = cfg.component_index;
    Json res;
    res["order"] = to_json(t.order());
    res["regular"] = is_regular_element(t, p);
    res["fixed_noncompact_roots"] = roots_json(p.roots(), fixed_noncompact_roots(t, p));
    res["euler_character_vanishes"] = euler_character_vanishing(t, p);
    if (is_regular_element(t, p)) {
      res["g_tau"] = orbital_json(orbital_g_tau(t, tau, p));
      res["consistency"] = orbital_consistency(t, tau, p);
    } else {
      res["g_tau"] = nullptr;
      res["consistency"] = nullptr;
    }
    res["f_sigma"] = orbital_json(orbital_f_sigma(t, sigma, p, cfg.c_g, cfg.component_index));
    return {record(cmd, cfg, std::move(params), std::move(res))};
  }
  if (cmd == "identity-suite") {
    auto report = identity_suite(p, job.torsion_order);
    params.erase("tau");
    params["torsion_order"] = job.torsion_order;
    std::vector<Json> out;
    for (const auto& c : report.checks)
      out.push_back(record(cmd, cfg, params,
                           Json{{"identity", c.name},
                                {"passed", c.passed},
                                {"cases", c.cases},
                                {"counterexamples", c.counterexamples}}));
    return out;
  }
  throw Error(ErrorCode::unknown_command, "unknown command '" + cmd + "'");
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) && !j[0].empty() &&
             !(j[0].is_array() && !j[0][0].is_structured())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

inline std::string render_table(const Json& rec) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(rec, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace detail

inline std::string render_records(const std::vector<Json>& records, const std::string& format) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (format == "records") {
      out += records[i].dump() + "\n";
    } else {
      if (i) out += "\n";
      out += detail::render_table(records[i]);
    }
  }
  return out;
}

// Runs one command. Errors become error records and a nonzero exit code; identity-suite
// failures also exit nonzero.
inline JobResult run_job(const Config& cfg, const JobSpec& job) {
  if (job.format != "table" && job.format != "records")
    return {render_records({detail::error_record(job.command, detail::subject_name(cfg),
                                                 Error(ErrorCode::bad_argument, "unknown format '" + job.format + "'"))},
                           "records"),
            1};
  std::vector<Json> records;
  int code = 0;
  try {
    records = detail::run_command(cfg, job);
    for (const auto& r : records)
      if (r["result"].contains("passed") && !r["result"]["passed"].get<bool>()) code = 1;
  } catch (const Error& e) {
    records = {detail::error_record(job.command, detail::subject_name(cfg), e)};
    code = 1;
  }
  return {render_records(records, job.format), code};
}

inline JobResult run_job_text(std::string_view config_text, const JobSpec& job) {
  try {
    return run_job(parse_config(config_text), job);
  } catch (const Error& e) {
    return {render_records({detail::error_record(job.command, "", e)}, job.format == "records" ? "records" : "table"), 1};
  }
}

}  // namespace dirac
