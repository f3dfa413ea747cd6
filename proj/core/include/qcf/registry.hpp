#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcf/qseries.hpp"

namespace qcf {

/// A free parameter of an identity, specialized to coeff * t^exp.
struct ParamSpec {
  std::string name;
  std::vector<int> exps{0};  // sampled draws pick one; grids use the first
};

using AnyPair = std::variant<SeriesPair<Rat>, SeriesPair<EisRat>>;

/// One coefficient-exact comparison produced by a builder.
struct CheckPair {
  std::string label;
  AnyPair sides;
};

using Assignment = std::vector<Monomial<Rat>>;

struct DegreeBound {
  std::string param;
  std::optional<int> bound;  // empty: no finite bound, the row is sampled
  std::string reason;
};

struct IdentityCase {
  std::string id;
  std::string description;
  int scale = 1;
  std::vector<ParamSpec> params;
  // Bounds at a given q-order, one per parameter.
  std::function<std::vector<DegreeBound>(int order)> degree_bounds;
  // q-order in, pairs out; each pair carries its own working scale.
  std::function<std::vector<CheckPair>(const Assignment&, int order)> build;

  std::string signature() const;
};

/// Rows sorted by id.
const std::vector<IdentityCase>& registry();
const IdentityCase& find_identity(const std::string& id);

}  // namespace qcf
