#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "growlang/node.hpp"
#include "xdt/core.hpp"

namespace testgen {

using Rng = std::mt19937_64;

/// Programs that validate without errors, covering every extension form,
/// partial extensions, list/tuple/oplus field types and mutual references.
xdt::Program random_program(Rng& rng);

/// Any type of depth <= maxDepth, products included.
growlang::Ty random_ty(Rng& rng, int maxDepth);

/// Arbitrary plain expression (not necessarily well typed) of depth <= maxDepth.
growlang::NodePtr random_exp(Rng& rng, int maxDepth);

/// A plain expression of type `target` in the empty environment, of depth
/// <= maxDepth. Requires maxDepth >= depth_needed(target).
growlang::NodePtr random_well_typed(Rng& rng, const growlang::Ty& target, int maxDepth);

/// Smallest term depth the well-typed generator can realise `t` with.
int depth_needed(const growlang::Ty& t);

/// Height of a tree; leaves are 1. Declarations count as a level.
int tree_depth(const growlang::Node& n);

}  // namespace testgen
