#pragma once

// Pair/job configuration files: a small sectioned key/value format.
//
//   [pair]
//   name = "su21"
//   preset = "su21"          # or one or more [factor] sections
//   [factor]
//   type = "A2"
//   compact = [[1,0]]
//   [tau]
//   weight = [0, "3/2"]
//   [element]
//   x = ["1/3", "0"]
//   [arith]
//   kind = "euler"
//   chi_gamma = -2
//   error_term = "0"
//
// Values are double-quoted strings, integers, or (nested) arrays of those. Rationals are
// written as strings "p/q"; floating-point literals are rejected.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/presets.hpp"
#include "dirac/rational.hpp"
#include "dirac/sympair.hpp"

namespace dirac {

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<Diagnostic> diags)
      : Error(ErrorCode::config_syntax, join(diags)), diags_(std::move(diags)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  static std::string join(const std::vector<Diagnostic>& d) {
    std::string out;
    for (const auto& x : d) {
      if (!out.empty()) out += "; ";
      out += "line " + std::to_string(x.line) + ", column " + std::to_string(x.column) + ": " + x.message;
    }
    return out;
  }
  std::vector<Diagnostic> diags_;
};

// A parsed value: integer and string leaves, arrays as nodes.
struct Value {
  enum class Kind { integer, string, array } kind = Kind::integer;
  BigInt integer;
  std::string string;
  std::vector<Value> items;
  std::size_t line = 0, column = 0;
};

struct Config {
  std::string name;
  std::optional<std::string> preset;
  std::vector<FactorSpec> factors;
  std::optional<std::string> rootsys;  // standalone Cartan type for root-system commands
  std::optional<RationalVector> tau;
  std::optional<RationalVector> sigma;
  std::optional<RationalVector> element;
  std::string arith_kind = "euler";
  std::optional<BigInt> chi_gamma;
  Rational error_term = 0;
  Rational c_g = 1;
  long component_index = 1;

  bool has_pair() const { return preset.has_value() || !factors.empty(); }
  friend bool operator==(const Config&, const Config&) = default;
};

inline bool operator==(const FactorSpec& a, const FactorSpec& b) { return a.type == b.type && a.compact == b.compact; }

namespace detail {

class ConfigParser {
 public:
  explicit ConfigParser(std::string_view text) : text_(text) {}

  Config parse() {
    Config cfg;
    std::string section;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++lineno;
      line_ = text_.substr(start, end - start);
      if (!line_.empty() && line_.back() == '\r') line_.remove_suffix(1);
      lineno_ = lineno;
      pos_ = 0;
      try {
        handle_line(cfg, section);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::config_syntax) diags_.push_back({lineno_, pos_ + 1, e.what()});
      }
      if (end == text_.size()) break;
      start = end + 1;
    }
    if (diags_.empty()) finish(cfg);
    if (!diags_.empty()) throw ConfigError(diags_);
    return cfg;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t col) {
    diags_.push_back({lineno_, col + 1, msg});
    throw Error(ErrorCode::config_syntax, msg);
  }

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }

  void handle_line(Config& cfg, std::string& section) {
    if (at_end()) return;
    if (line_[pos_] == '[') {
      std::size_t open = pos_;
      std::size_t close = line_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated section header", open);
      std::string name(line_.substr(pos_ + 1, close - pos_ - 1));
      static const std::vector<std::string> known{"pair", "factor", "rootsys", "tau", "sigma",
                                                  "element", "arith", "orbital"};
      if (std::find(known.begin(), known.end(), name) == known.end()) fail("unknown section [" + name + "]", open);
      pos_ = close + 1;
      if (!at_end()) fail("unexpected text after section header", pos_);
      if (name == "factor") cfg.factors.emplace_back();
      if (name != "factor" && !seen_sections_.insert(name).second) fail("duplicate section [" + name + "]", open);
      section = name;
      return;
    }
    std::size_t key_start = pos_;
    while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) ++pos_;
    std::string key(line_.substr(key_start, pos_ - key_start));
    if (key.empty()) fail("expected a key", key_start);
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != '=') fail("expected '=' after key '" + key + "'", pos_);
    ++pos_;
    skip_ws();
    Value v = parse_value();
    if (!at_end()) fail("unexpected text after value", pos_);
    if (section.empty()) fail("key '" + key + "' outside of any section", key_start);
    if (!seen_keys_.insert(section + "." + std::to_string(cfg.factors.size()) + "." + key).second)
      fail("duplicate key '" + key + "'", key_start);
    assign(cfg, section, key, v, key_start);
  }

  Value parse_value() {
    skip_ws();
    Value v;
    v.line = lineno_;
    v.column = pos_ + 1;
    if (pos_ >= line_.size()) fail("expected a value", pos_);
    char c = line_[pos_];
    if (c == '"') {
      std::size_t close = line_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated string", pos_);
      v.kind = Value::Kind::string;
      v.string = std::string(line_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return v;
    }
    if (c == '[') {
      v.kind = Value::Kind::array;
      ++pos_;
      skip_ws();
      if (pos_ < line_.size() && line_[pos_] == ']') {
        ++pos_;
        return v;
      }
      for (;;) {
        v.items.push_back(parse_value());
        skip_ws();
        if (pos_ >= line_.size()) fail("unterminated array", pos_);
        if (line_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (line_[pos_] == ']') {
          ++pos_;
          return v;
        }
        fail("expected ',' or ']' in array", pos_);
      }
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t s = pos_;
      if (c == '-' || c == '+') ++pos_;
      std::size_t digits = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      if (pos_ == digits) fail("malformed number", s);
      if (pos_ < line_.size() && (line_[pos_] == '.' || line_[pos_] == 'e' || line_[pos_] == 'E'))
        fail("floating-point values are not accepted; write rationals as \"p/q\"", s);
      if (pos_ < line_.size() && line_[pos_] == '/')
        fail("rationals must be quoted strings, e.g. \"1/3\"", s);
      v.kind = Value::Kind::integer;
      std::string digits_text(line_.substr(s, pos_ - s));
      if (digits_text[0] == '+') digits_text.erase(0, 1);
      v.integer = BigInt(digits_text);
      return v;
    }
    fail("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  [[noreturn]] void fail_at(const Value& v, const std::string& msg) {
    diags_.push_back({v.line, v.column, msg});
    throw Error(ErrorCode::config_syntax, msg);
  }

  std::string as_string(const Value& v, const std::string& key) {
    if (v.kind != Value::Kind::string) fail_at(v, "'" + key + "' must be a string");
    return v.string;
  }

  Rational as_rational(const Value& v, const std::string& key) {
    if (v.kind == Value::Kind::integer) return Rational(v.integer);
    if (v.kind == Value::Kind::string) {
      try {
        return parse_rational(v.string);
      } catch (const Error& e) {
        fail_at(v, "'" + key + "': " + e.what());
      }
    }
    fail_at(v, "'" + key + "' must be an integer or a \"p/q\" string");
  }

  RationalVector as_rational_vector(const Value& v, const std::string& key) {
    if (v.kind != Value::Kind::array) fail_at(v, "'" + key + "' must be an array");
    RationalVector out;
    for (const auto& item : v.items) out.push_back(as_rational(item, key));
    return out;
  }

  std::vector<std::vector<int>> as_int_matrix(const Value& v, const std::string& key) {
    if (v.kind != Value::Kind::array) fail_at(v, "'" + key + "' must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : v.items) {
      if (row.kind != Value::Kind::array) fail_at(row, "'" + key + "' entries must be arrays");
      std::vector<int> r;
      for (const auto& x : row.items) {
        if (x.kind != Value::Kind::integer || !x.integer.fits_sint_p()) fail_at(x, "'" + key + "' needs integers");
        r.push_back(static_cast<int>(x.integer.get_si()));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  void assign(Config& cfg, const std::string& section, const std::string& key, const Value& v, std::size_t col) {
    auto unknown = [&] { fail("unknown key '" + key + "' in [" + section + "]", col); };
    if (section == "pair") {
      if (key == "name") cfg.name = as_string(v, key);
      else if (key == "preset") cfg.preset = as_string(v, key);
      else unknown();
    } else if (section == "factor") {
      if (key == "type") cfg.factors.back().type = as_string(v, key);
      else if (key == "compact") cfg.factors.back().compact = as_int_matrix(v, key);
      else unknown();
    } else if (section == "rootsys") {
      if (key == "type") cfg.rootsys = as_string(v, key);
      else unknown();
    } else if (section == "tau" || section == "sigma") {
      if (key != "weight") unknown();
      (section == "tau" ? cfg.tau : cfg.sigma) = as_rational_vector(v, key);
    } else if (section == "element") {
      if (key != "x") unknown();
      cfg.element = as_rational_vector(v, key);
    } else if (section == "arith") {
      if (key == "kind") {
        cfg.arith_kind = as_string(v, key);
        if (cfg.arith_kind != "euler" && cfg.arith_kind != "dirac") fail_at(v, "kind must be \"euler\" or \"dirac\"");
      } else if (key == "chi_gamma") {
        if (v.kind != Value::Kind::integer) fail_at(v, "chi_gamma must be an integer");
        cfg.chi_gamma = v.integer;
      } else if (key == "error_term") {
        cfg.error_term = as_rational(v, key);
      } else {
        unknown();
      }
    } else if (section == "orbital") {
      if (key == "c_g") {
        cfg.c_g = as_rational(v, key);
      } else if (key == "component_index") {
        if (v.kind != Value::Kind::integer || !v.integer.fits_slong_p()) fail_at(v, "component_index must be an integer");
        cfg.component_index = v.integer.get_si();
      } else {
        unknown();
      }
    }
  }

  void finish(Config& cfg) {
    if (cfg.preset && !cfg.factors.empty())
      diags_.push_back({0, 0, "[pair] preset and [factor] sections are mutually exclusive"});
    for (std::size_t i = 0; i < cfg.factors.size(); ++i)
      if (cfg.factors[i].type.empty()) diags_.push_back({0, 0, "[factor] #" + std::to_string(i + 1) + " has no type"});
    if (cfg.name.empty() && cfg.preset) cfg.name = *cfg.preset;
  }

  std::string_view text_;
  std::string_view line_;
  std::size_t lineno_ = 0, pos_ = 0;
  std::vector<Diagnostic> diags_;
  std::set<std::string> seen_sections_;
  std::set<std::string> seen_keys_;
};

inline std::string render_rational_array(const RationalVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if (is_integer(v[i])) out += to_string(v[i]);
    else out += "\"" + to_string(v[i]) + "\"";
  }
  return out + "]";
}

}  // namespace detail

inline Config parse_config(std::string_view text) { return detail::ConfigParser(text).parse(); }

// Resolves the pair described by the config; preset names are expanded first.
inline SymmetricPair resolve_pair(const Config& cfg) {
  if (cfg.preset) return preset_pair(*cfg.preset);
  if (cfg.factors.empty()) throw Error(ErrorCode::missing_parameter, "config describes no pair");
  return assemble_pair(cfg.factors);
}

// Canonical text form; parse_config(render_config(c)) == c.
inline std::string render_config(const Config& cfg) {
  std::ostringstream os;
  if (cfg.has_pair() || !cfg.name.empty()) {
    os << "[pair]\n";
    if (!cfg.name.empty()) os << "name = \"" << cfg.name << "\"\n";
    if (cfg.preset) os << "preset = \"" << *cfg.preset << "\"\n";
    for (const auto& f : cfg.factors) {
      os << "\n[factor]\ntype = \"" << f.type << "\"\ncompact = [";
      for (std::size_t i = 0; i < f.compact.size(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < f.compact[i].size(); ++j) os << (j ? ", " : "") << f.compact[i][j];
        os << "]";
      }
      os << "]\n";
    }
  }
  if (cfg.rootsys) os << "\n[rootsys]\ntype = \"" << *cfg.rootsys << "\"\n";
  if (cfg.tau) os << "\n[tau]\nweight = " << detail::render_rational_array(*cfg.tau) << "\n";
  if (cfg.sigma) os << "\n[sigma]\nweight = " << detail::render_rational_array(*cfg.sigma) << "\n";
  if (cfg.element) os << "\n[element]\nx = " << detail::render_rational_array(*cfg.element) << "\n";
  Config defaults;
  if (cfg.chi_gamma || cfg.arith_kind != defaults.arith_kind || cfg.error_term != defaults.error_term) {
    os << "\n[arith]\nkind = \"" << cfg.arith_kind << "\"\n";
    if (cfg.chi_gamma) os << "chi_gamma = " << cfg.chi_gamma->get_str() << "\n";
    os << "error_term = \"" << to_string(cfg.error_term) << "\"\n";
  }
  if (cfg.c_g != defaults.c_g || cfg.component_index != defaults.component_index)
    os << "\n[orbital]\nc_g = \"" << to_string(cfg.c_g) << "\"\ncomponent_index = " << cfg.component_index << "\n";
  std::string s = os.str();
  if (!s.empty() && s[0] == '\n') s.erase(0, 1);
  return s;
}

// Explicit per-factor description of a validated pair.
inline Config config_from_pair(const std::string& name, const SymmetricPair& p) {
  Config cfg;
  cfg.name = name;
  const RootSystem& rs = p.roots();
  std::size_t offset = 0;
  for (const auto& f : rs.type().factors) {
    FactorSpec spec;
    spec.type = std::string(1, f.family) + std::to_string(f.rank);
    const std::size_t r = static_cast<std::size_t>(f.rank);
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      if (!p.compact[k]) continue;
      const auto& c = rs.root(k).simple;
      bool inside = true;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0 && (i < offset || i >= offset + r)) inside = false;
      if (inside) spec.compact.emplace_back(c.begin() + static_cast<long>(offset), c.begin() + static_cast<long>(offset + r));
    }
    cfg.factors.push_back(std::move(spec));
    offset += r;
  }
  return cfg;
}

}  // namespace dirac
