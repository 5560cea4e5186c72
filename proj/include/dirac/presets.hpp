#pragma once

// Named symmetric pairs and assembly of product pairs from per-factor data.

#include <string>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/rootdata.hpp"
#include "dirac/sympair.hpp"

namespace dirac {

struct FactorSpec {
  std::string type;                        // a single simple factor, e.g. "A2"
  std::vector<std::vector<int>> compact;   // compact positive roots in the factor's simple-root coordinates
};

// Product of the factors, with compact roots placed in the matching coordinate block.
inline SymmetricPair assemble_pair(const std::vector<FactorSpec>& factors) {
  if (factors.empty()) throw Error(ErrorCode::missing_parameter, "a pair needs at least one factor");
  CartanType type;
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    CartanType t = CartanType::parse(f.type);
    if (t.factors.size() != 1) throw Error(ErrorCode::bad_argument, "factor type must be simple: " + f.type);
    type.factors.push_back(t.factors[0]);
    offsets.push_back(offset);
    offset += static_cast<std::size_t>(t.factors[0].rank);
  }
  std::vector<std::vector<int>> compact;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t r = static_cast<std::size_t>(type.factors[i].rank);
    for (const auto& c : factors[i].compact) {
      if (c.size() != r)
        throw Error(ErrorCode::rank_mismatch, "compact root " + detail::label(c) + " does not match factor " +
                                                  factors[i].type);
      std::vector<int> g(offset, 0);
      for (std::size_t j = 0; j < r; ++j) g[offsets[i] + j] = c[j];
      compact.push_back(std::move(g));
    }
  }
  return validate_pair(build_root_system(type), compact);
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"su11", "hilbert2", "su21", "so41"};
  return names;
}

inline std::vector<FactorSpec> preset_factors(const std::string& name) {
  if (name == "su11") return {{"A1", {}}};
  if (name == "hilbert2") return {{"A1", {}}, {"A1", {}}};
  if (name == "su21") return {{"A2", {{1, 0}}}};
  // so(4,1): K = so(4) carries the two long roots of B2
  if (name == "so41") return {{"B2", {{1, 0}, {1, 2}}}};
  throw Error(ErrorCode::unknown_preset, "unknown preset '" + name + "'");
}

inline SymmetricPair preset_pair(const std::string& name) { return assemble_pair(preset_factors(name)); }

}  // namespace dirac
