#pragma once

#include <string>

#include "xdt/core.hpp"
#include "xdt/encoder.hpp"

namespace xdt {

enum class Backend { Haskell, DslEcho };

/// Layout is fixed: two-space indent, one constructor per line. lineWidth is
/// advisory and never changes the output.
struct RenderConfig {
  Backend backend = Backend::Haskell;
  int indent = 2;
  int lineWidth = 80;
};

/// Renders a type; `atomic` parenthesises applications.
std::string render_type(const TypeExpr& t, bool atomic = false);

/// `data` header, then one constructor per line prefixed `= ` / `| `.
std::string emit_encoded(const EncodedDataDecl& d, const RenderConfig& cfg = {});

/// Alias, family declaration (when owned), instances, pattern synonyms;
/// sections separated by blank lines.
std::string emit_lowered(const LoweredExtension& l, const RenderConfig& cfg = {});

/// DSL text that parses back to a structurally equal program.
std::string emit_dsl(const Program& p, const RenderConfig& cfg = {RenderConfig{Backend::DslEcho}});

/// Everything `xdt encode` writes: pragmas, every encoded extensible
/// declaration, then every lowered extension. Validated programs only.
std::string emit_module(const Program& p, EncodingMode mode, const RenderConfig& cfg = {});

}  // namespace xdt
