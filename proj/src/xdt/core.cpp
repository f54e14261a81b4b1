#include "xdt/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace xdt {

// ---------------------------------------------------------------- Ident

Ident::Ident(std::string text) : text_(std::move(text)) {
  if (!valid(text_)) throw InvalidInput("invalid identifier: '" + text_ + "'");
}

bool Ident::valid(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::optional<Ident> Ident::make(std::string_view text) {
  if (!valid(text)) return std::nullopt;
  return Ident(std::string(text));
}

bool Ident::is_upper() const {
  return !text_.empty() && std::isupper(static_cast<unsigned char>(text_.front()));
}

// ---------------------------------------------------------------- TypeExpr

TypeExpr TypeExpr::var(Ident name, std::vector<TypeExpr> args) {
  return TypeExpr{Var{std::move(name), std::move(args)}};
}

TypeExpr TypeExpr::con(Ident head, std::vector<TypeExpr> args) {
  return TypeExpr{Con{std::move(head), std::move(args)}};
}

TypeExpr TypeExpr::oplus(TypeExpr base, TypeExpr extension) {
  return TypeExpr{Oplus{std::move(base), std::move(extension)}};
}

TypeExpr TypeExpr::list(TypeExpr element) { return TypeExpr{List{std::move(element)}}; }

TypeExpr TypeExpr::tuple(std::vector<TypeExpr> elements) {
  return TypeExpr{Tuple{std::move(elements)}};
}

TypeExpr TypeExpr::symbol(Label label) { return TypeExpr{Symbol{std::move(label)}}; }

namespace {

template <class F>
void for_each_child(const TypeExpr& t, F&& f) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TypeExpr::Var> || std::is_same_v<N, TypeExpr::Con>) {
          for (const auto& a : n.args) f(a);
        } else if constexpr (std::is_same_v<N, TypeExpr::Oplus>) {
          f(*n.base);
          f(*n.extension);
        } else if constexpr (std::is_same_v<N, TypeExpr::List>) {
          f(*n.element);
        } else if constexpr (std::is_same_v<N, TypeExpr::Tuple>) {
          for (const auto& e : n.elements) f(e);
        }
      },
      t.node);
}

}  // namespace

bool TypeExpr::contains_oplus() const {
  if (is<Oplus>()) return true;
  bool found = false;
  for_each_child(*this, [&](const TypeExpr& c) { found = found || c.contains_oplus(); });
  return found;
}

void TypeExpr::collect_heads(std::set<Ident>& out) const {
  if (const auto* c = as<Con>()) out.insert(c->head);
  for_each_child(*this, [&](const TypeExpr& c) { c.collect_heads(out); });
}

void TypeExpr::collect_vars(std::set<Ident>& out) const {
  if (const auto* v = as<Var>()) out.insert(v->name);
  for_each_child(*this, [&](const TypeExpr& c) { c.collect_vars(out); });
}

// ---------------------------------------------------------------- declarations

const ConstructorDecl* ExtensibleDataDecl::find_constructor(const Ident& con) const {
  auto it = std::find_if(constructors.begin(), constructors.end(),
                         [&](const ConstructorDecl& c) { return c.name == con; });
  return it == constructors.end() ? nullptr : &*it;
}

const ConExtensionClause* ExtensionDecl::find_clause(const Ident& baseCon) const {
  auto it = std::find_if(extendedConstructors.begin(), extendedConstructors.end(),
                         [&](const ConExtensionClause& c) { return c.baseConstructor == baseCon; });
  return it == extendedConstructors.end() ? nullptr : &*it;
}

// ---------------------------------------------------------------- Program

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

Program::Program(std::vector<ExtensibleDataDecl> extensibles, std::vector<ExtensionDecl> extensions)
    : extensibles_(std::move(extensibles)), extensions_(std::move(extensions)) {
  const std::size_t n = extensibles_.size();
  std::map<Ident, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(extensibles_[i].name, i);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Ident> heads;
    for (const auto& c : extensibles_[i].constructors)
      for (const auto& f : c.fields) f.collect_heads(heads);
    for (const auto& h : heads) {
      auto it = index.find(h);
      if (it == index.end()) continue;
      std::size_t a = find_root(parent, i), b = find_root(parent, it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::size_t, std::size_t> group_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    auto [it, inserted] = group_of_root.emplace(r, groups_.size());
    if (inserted) groups_.emplace_back();
    groups_[it->second].push_back(extensibles_[i].name);
  }
}

const ExtensibleDataDecl* Program::find_extensible(const Ident& name) const {
  for (const auto& d : extensibles_)
    if (d.name == name) return &d;
  return nullptr;
}

const ExtensionDecl* Program::find_extension(const Ident& name) const {
  for (const auto& e : extensions_)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<std::size_t> Program::group_of(const Ident& name) const {
  for (std::size_t g = 0; g < groups_.size(); ++g)
    if (std::find(groups_[g].begin(), groups_[g].end(), name) != groups_[g].end()) return g;
  return std::nullopt;
}

std::set<Ident> Program::extensible_names() const {
  std::set<Ident> out;
  for (const auto& d : extensibles_)
    if (d.extensible) out.insert(d.name);
  return out;
}

// ---------------------------------------------------------------- diagnostics

std::string_view code_tag(DiagCode code) {
  switch (code) {
    case DiagCode::DuplicateName: return "E001";
    case DiagCode::UnknownBase: return "E002";
    case DiagCode::BadParamMap: return "E003";
    case DiagCode::UnknownConstructor: return "E004";
    case DiagCode::DuplicateClause: return "E005";
    case DiagCode::OplusOnNonExtensible: return "E006";
    case DiagCode::ArityMismatch: return "E007";
    case DiagCode::ConstructorNotCovered: return "E008";
    case DiagCode::LexicalError: return "E101";
    case DiagCode::UnexpectedToken: return "E102";
    case DiagCode::UnterminatedDecl: return "E103";
    case DiagCode::UnusedParameter: return "W001";
  }
  return "E???";
}

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::DuplicateName: return "duplicate-name";
    case DiagCode::UnknownBase: return "unknown-base";
    case DiagCode::BadParamMap: return "bad-param-map";
    case DiagCode::UnknownConstructor: return "unknown-constructor";
    case DiagCode::DuplicateClause: return "duplicate-extension-clause";
    case DiagCode::OplusOnNonExtensible: return "oplus-on-nonextensible";
    case DiagCode::ArityMismatch: return "arity-mismatch";
    case DiagCode::ConstructorNotCovered: return "constructor-not-covered";
    case DiagCode::LexicalError: return "lexical-error";
    case DiagCode::UnexpectedToken: return "unexpected-token";
    case DiagCode::UnterminatedDecl: return "unterminated-declaration";
    case DiagCode::UnusedParameter: return "unused-parameter";
  }
  return "unknown";
}

Severity default_severity(DiagCode code) {
  return code == DiagCode::UnusedParameter ? Severity::Warning : Severity::Error;
}

Diagnostic Diagnostic::error(DiagCode code, std::string message, std::optional<Location> loc) {
  return Diagnostic{Severity::Error, code, std::move(message), loc};
}

Diagnostic Diagnostic::warning(DiagCode code, std::string message, std::optional<Location> loc) {
  return Diagnostic{Severity::Warning, code, std::move(message), loc};
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
  std::ostringstream os;
  if (!file.empty()) os << file << ':';
  if (d.location && d.location->known()) os << d.location->line << ':' << d.location->column << ':';
  if (!file.empty() || (d.location && d.location->known())) os << ' ';
  os << (d.severity == Severity::Error ? "error" : "warning") << '[' << code_tag(d.code)
     << "]: " << d.message;
  return os.str();
}

// ---------------------------------------------------------------- operations

std::vector<Label> slot_labels(const ExtensibleDataDecl& decl) {
  if (!decl.extensible)
    throw InvalidInput("slot_labels: '" + decl.name.str() + "' is not extensible");
  std::vector<Label> labels;
  labels.reserve(decl.constructors.size() + 1);
  for (const auto& c : decl.constructors) labels.emplace_back(c.name);
  labels.emplace_back(decl.name);
  return labels;
}

std::string_view form_name(ExtensionForm form) {
  switch (form) {
    case ExtensionForm::FieldExtension: return "field";
    case ExtensionForm::ConstructorExtension: return "constructor";
    case ExtensionForm::ParameterExtension: return "parameter";
  }
  return "?";
}

Result<std::set<ExtensionForm>> classify_extension_forms(const ExtensionDecl& ext, const Program& p) {
  Result<std::set<ExtensionForm>> r;
  const auto* base = p.find_extensible(ext.baseName);
  if (base == nullptr || !base->extensible) {
    r.diagnostics.push_back(Diagnostic::error(
        DiagCode::UnknownBase,
        "'" + ext.name.str() + "' extends unknown extensible type '" + ext.baseName.str() + "'",
        ext.loc));
    return r;
  }
  std::set<ExtensionForm> forms;
  if (std::any_of(ext.extendedConstructors.begin(), ext.extendedConstructors.end(),
                  [](const ConExtensionClause& c) { return !c.addedFields.empty(); }))
    forms.insert(ExtensionForm::FieldExtension);
  if (!ext.newConstructors.empty()) forms.insert(ExtensionForm::ConstructorExtension);
  if (ext.params.size() > ext.baseArgs.size()) forms.insert(ExtensionForm::ParameterExtension);
  r.value = std::move(forms);
  return r;
}

}  // namespace xdt
