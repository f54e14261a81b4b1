#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xdt/core.hpp"

namespace xdt {

/// Byte range into the parsed text with derived line/column.
using SourceSpan = Location;

/// Argument syntax inside a `<+>` fragment. Types, patterns and expressions
/// share one shape; the fragment kind restricts which forms may appear.
struct Term {
  enum class Kind { Name, Integer, String, Wildcard, Apply, Tuple };

  Kind kind = Kind::Name;
  /// Name text, integer digits, unescaped string contents, or Apply head.
  std::string text;
  std::vector<Term> args;

  static Term name(std::string text) { return Term{Kind::Name, std::move(text), {}}; }
  static Term integer(std::string digits) { return Term{Kind::Integer, std::move(digits), {}}; }
  static Term string(std::string text) { return Term{Kind::String, std::move(text), {}}; }
  static Term wildcard() { return Term{Kind::Wildcard, "_", {}}; }
  static Term apply(std::string head, std::vector<Term> args) {
    return Term{Kind::Apply, std::move(head), std::move(args)};
  }
  static Term tuple(std::vector<Term> elems) { return Term{Kind::Tuple, {}, std::move(elems)}; }

  friend bool operator==(const Term&, const Term&) = default;
};

/// Haskell-style rendering; nested applications and negative literals in
/// argument position are parenthesised.
std::string render_term(const Term& t);

enum class FragmentKind { Type, Pattern, ConApp };

/// `Head a1 ... an <+> ext` in one of the three syntactic categories.
struct OplusFragment {
  FragmentKind kind = FragmentKind::ConApp;
  Ident head;
  std::vector<Term> ordinaryArgs;
  Term extensionArg;
  SourceSpan span;

  friend bool operator==(const OplusFragment&, const OplusFragment&) = default;
};

/// Parses `.xdt` text. On success the value holds the declarations in source
/// order and there are no diagnostics; on failure there is no value and at
/// least one error, each with a span inside the input.
Result<Program> parse_program(std::string_view text);

Result<OplusFragment> parse_fragment(std::string_view text, FragmentKind kind);

}  // namespace xdt
