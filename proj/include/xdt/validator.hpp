#pragma once

#include <vector>

#include "xdt/core.hpp"

namespace xdt {

struct ValidateOptions {
  /// Treat every extension as if it were declared `partial`.
  bool assume_partial = false;
};

/// Well-formedness findings for `p`; empty iff every check passes. Findings
/// are sorted by source position, then code.
std::vector<Diagnostic> validate_program(const Program& p, const ValidateOptions& opts = {});

/// Base constructors with no clause in `ext`, in declaration order.
std::vector<Ident> unextended_constructors(const ExtensionDecl& ext, const ExtensibleDataDecl& base);

}  // namespace xdt
