#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "growlang/node.hpp"
#include "growlang/ty.hpp"

namespace growlang {

struct TypeError {
  enum class Kind { UnboundVariable, OccursCheck, ConstructorClash, UninferableBinder };

  int line = 0;
  int column = 0;
  Kind kind = Kind::ConstructorClash;
  std::string message;
};

/// `line:col: message`
std::string format_error(const TypeError& e);

struct InferredExp {
  NodePtr tree;
  Ty type = Ty::int_();
  /// One entry per unconstrained type variable that was defaulted to Int.
  std::vector<std::string> warnings;
};

struct InferredDec {
  NodePtr tree;
  TypeEnv delta;
  std::vector<std::string> warnings;
};

/// Unification over Int, -> and x. The result is a typed tree whose App
/// nodes carry their argument type and whose Let nodes carry the bindings
/// of their declaration. `goal`, when given, is unified with the result
/// type before residual variables default to Int. Throws xdt::InvalidInput
/// unless the input is a plain tree.
std::variant<InferredExp, TypeError> infer_exp(const Node& m, const std::optional<Ty>& goal = {},
                                               const TypeEnv& env = {});
std::variant<InferredDec, TypeError> infer_dec(const Node& d, const TypeEnv& env = {});

/// Indented outline of a tree, one node per line, payloads in braces.
std::string dump_tree(const Node& n);

}  // namespace growlang
