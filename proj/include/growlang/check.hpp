#pragma once

#include "growlang/node.hpp"
#include "growlang/ty.hpp"

namespace growlang {

/// Γ ⊢ M : A over typed trees. Throws xdt::InvalidInput for a tree that is
/// not under the typed descriptor; returns false when no rule applies.
bool chk_exp(const Node& m, const TypeEnv& env, const Ty& ty);

/// Γ ⊢ D ⇝ Δ over typed trees.
bool chk_dec(const Node& d, const TypeEnv& env, const TypeEnv& delta);

}  // namespace growlang
