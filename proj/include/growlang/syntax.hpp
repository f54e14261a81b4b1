#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growlang/node.hpp"
#include "growlang/ty.hpp"

namespace growlang {

struct SyntaxError {
  int line = 0;
  int column = 0;
  std::string message;
};

/// `line:col: message`
std::string format_error(const SyntaxError& e);

template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<SyntaxError> errors;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
};

/// Concrete syntax (ASCII aliases in brackets):
///   exp  ::= exp0 [:: type]
///   exp0 ::= (λ|\) x . exp | let dec in exp | app
///   app  ::= atom atom*
///   atom ::= integer | x | ( exp ) | ( exp , exp )
///   dec  ::= x := exp | ( x , y ) := exp
///   type ::= tatom [(→|->|×|*) type]
///   tatom ::= Int | ( type )
/// Trees are built under the plain descriptor.
Parsed<NodePtr> parse_exp(std::string_view text);
Parsed<NodePtr> parse_dec(std::string_view text);
Parsed<Ty> parse_ty(std::string_view text);

/// Printing of the constructors a descriptor adds. Each handler gets the
/// new-constructor node (or Ty) and the handlers for recursive calls.
struct PrintHandlers {
  std::function<std::string(const Node&, const PrintHandlers&)> exp;
  std::function<std::string(const Node&, const PrintHandlers&)> dec;
  std::function<std::string(const Ty&, const PrintHandlers&)> ty;
};

/// Handlers for Tup, Prj and Prod.
const PrintHandlers& default_handlers();

std::string print_ty(const Ty& t, const PrintHandlers& h = default_handlers());
std::string print_exp(const Node& n, const PrintHandlers& h = default_handlers());
std::string print_dec(const Node& n, const PrintHandlers& h = default_handlers());
/// Typ-class nodes print through their Ty view.
std::string print_typ(const Node& n, const PrintHandlers& h = default_handlers());

}  // namespace growlang
