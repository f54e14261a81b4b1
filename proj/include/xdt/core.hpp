#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace xdt {

/// Raised by operations whose precondition requires a validated program.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Source position attached to syntax for diagnostics. Positions never take
/// part in structural equality, so two programs parsed from differently
/// formatted text still compare equal.
struct Location {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const Location&, const Location&) { return true; }
};

/// An identifier matching `[A-Za-z][A-Za-z0-9_']*`.
class Ident {
 public:
  Ident() = default;
  explicit Ident(std::string text);

  static bool valid(std::string_view text);
  static std::optional<Ident> make(std::string_view text);

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }
  /// Uppercase names are type or data constructors.
  bool is_upper() const;
  bool is_lower() const { return !text_.empty() && !is_upper(); }

  friend bool operator==(const Ident&, const Ident&) = default;
  friend auto operator<=>(const Ident&, const Ident&) = default;

 private:
  std::string text_;
};

/// Index of an extension slot: a constructor name or a type name.
class Label {
 public:
  Label() = default;
  explicit Label(std::string text) : text_(std::move(text)) {}
  explicit Label(const Ident& id) : text_(id.str()) {}

  const std::string& str() const { return text_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::string text_;
};

/// Heap box with value semantics, used to close the recursion in TypeExpr.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

/// The fragment of Haskell types the DSL admits, plus the two forms the
/// encoder introduces (applied type variables and type-level labels).
struct TypeExpr {
  /// A type variable, possibly applied (`xi "IntX"` after encoding).
  struct Var {
    Ident name;
    std::vector<TypeExpr> args;
    friend bool operator==(const Var&, const Var&) = default;
  };
  /// Constructor application with an uppercase head.
  struct Con {
    Ident head;
    std::vector<TypeExpr> args;
    friend bool operator==(const Con&, const Con&) = default;
  };
  /// `base <+> extension`.
  struct Oplus {
    Box<TypeExpr> base;
    Box<TypeExpr> extension;
    friend bool operator==(const Oplus&, const Oplus&) = default;
  };
  struct List {
    Box<TypeExpr> element;
    friend bool operator==(const List&, const List&) = default;
  };
  struct Tuple {
    std::vector<TypeExpr> elements;
    friend bool operator==(const Tuple&, const Tuple&) = default;
  };
  /// Type-level string, only produced by the compact encoding.
  struct Symbol {
    Label label;
    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  std::variant<Var, Con, Oplus, List, Tuple, Symbol> node;

  static TypeExpr var(Ident name, std::vector<TypeExpr> args = {});
  static TypeExpr con(Ident head, std::vector<TypeExpr> args = {});
  static TypeExpr oplus(TypeExpr base, TypeExpr extension);
  static TypeExpr list(TypeExpr element);
  static TypeExpr tuple(std::vector<TypeExpr> elements);
  static TypeExpr symbol(Label label);

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node); }

  bool contains_oplus() const;
  /// Every constructor head mentioned anywhere in the type.
  void collect_heads(std::set<Ident>& out) const;
  void collect_vars(std::set<Ident>& out) const;

  friend bool operator==(const TypeExpr&, const TypeExpr&) = default;
};

struct ConstructorDecl {
  Ident name;
  std::vector<TypeExpr> fields;
  Location loc;
  friend bool operator==(const ConstructorDecl&, const ConstructorDecl&) = default;
};

struct ExtensibleDataDecl {
  Ident name;
  std::vector<Ident> params;
  std::vector<ConstructorDecl> constructors;
  bool extensible = true;
  Location loc;

  const ConstructorDecl* find_constructor(const Ident& con) const;
  friend bool operator==(const ExtensibleDataDecl&, const ExtensibleDataDecl&) = default;
};

/// `newName extends baseConstructor by addedFields`; an empty field list is ∅.
struct ConExtensionClause {
  Ident newName;
  Ident baseConstructor;
  std::vector<TypeExpr> addedFields;
  Location loc;
  friend bool operator==(const ConExtensionClause&, const ConExtensionClause&) = default;
};

struct ExtensionDecl {
  Ident name;
  std::vector<Ident> params;
  Ident baseName;
  std::vector<Ident> baseArgs;
  std::vector<ConstructorDecl> newConstructors;
  std::vector<ConExtensionClause> extendedConstructors;
  /// Uncovered base constructors are implicitly extended by ∅.
  bool partial = false;
  Location loc;

  const ConExtensionClause* find_clause(const Ident& baseCon) const;
  friend bool operator==(const ExtensionDecl&, const ExtensionDecl&) = default;
};

using MutualGroup = std::vector<Ident>;

class Program {
 public:
  Program() = default;
  Program(std::vector<ExtensibleDataDecl> extensibles, std::vector<ExtensionDecl> extensions);

  const std::vector<ExtensibleDataDecl>& extensibles() const { return extensibles_; }
  const std::vector<ExtensionDecl>& extensions() const { return extensions_; }
  /// Connected components of the reference graph between extensible
  /// declarations; members and groups in source order.
  const std::vector<MutualGroup>& mutual_groups() const { return groups_; }

  const ExtensibleDataDecl* find_extensible(const Ident& name) const;
  const ExtensionDecl* find_extension(const Ident& name) const;
  /// Index into mutual_groups(), or nullopt for names that are not extensible.
  std::optional<std::size_t> group_of(const Ident& name) const;
  std::set<Ident> extensible_names() const;

  bool empty() const { return extensibles_.empty() && extensions_.empty(); }

  /// Structural equality over the declarations; groups are derived.
  friend bool operator==(const Program& a, const Program& b) {
    return a.extensibles_ == b.extensibles_ && a.extensions_ == b.extensions_;
  }

 private:
  std::vector<ExtensibleDataDecl> extensibles_;
  std::vector<ExtensionDecl> extensions_;
  std::vector<MutualGroup> groups_;
};

enum class Severity { Error, Warning };

enum class DiagCode {
  DuplicateName,          // E001
  UnknownBase,            // E002
  BadParamMap,            // E003
  UnknownConstructor,     // E004
  DuplicateClause,        // E005
  OplusOnNonExtensible,   // E006
  ArityMismatch,          // E007
  ConstructorNotCovered,  // E008
  LexicalError,           // E101
  UnexpectedToken,        // E102
  UnterminatedDecl,       // E103
  UnusedParameter,        // W001
};

/// "E003" etc.
std::string_view code_tag(DiagCode code);
/// "bad-param-map" etc.
std::string_view code_name(DiagCode code);
Severity default_severity(DiagCode code);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::UnexpectedToken;
  std::string message;
  std::optional<Location> location;

  static Diagnostic error(DiagCode code, std::string message, std::optional<Location> loc = {});
  static Diagnostic warning(DiagCode code, std::string message, std::optional<Location> loc = {});
};

bool has_errors(const std::vector<Diagnostic>& diags);
/// `file:line:col: error[E003]: message`
std::string format_diagnostic(const Diagnostic& d, std::string_view file = {});

/// A value or the diagnostics explaining why there is none.
template <class T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// One label per constructor in declaration order, then the type's own label
/// for the new-constructor slot. Requires decl.extensible.
std::vector<Label> slot_labels(const ExtensibleDataDecl& decl);

enum class ExtensionForm { FieldExtension, ConstructorExtension, ParameterExtension };
std::string_view form_name(ExtensionForm form);

/// Which of the three syntactic extension forms `ext` uses.
Result<std::set<ExtensionForm>> classify_extension_forms(const ExtensionDecl& ext, const Program& p);

}  // namespace xdt
