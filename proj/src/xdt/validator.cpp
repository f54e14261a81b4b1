#include "xdt/validator.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace xdt {
namespace {

std::string q(const Ident& id) { return "'" + id.str() + "'"; }

class Checker {
 public:
  Checker(const Program& p, const ValidateOptions& opts) : p_(p), opts_(opts) {}

  std::vector<Diagnostic> run() {
    check_declaration_names();
    check_constructor_namespace();
    for (const auto& d : p_.extensibles()) check_extensible(d);
    for (const auto& e : p_.extensions()) check_extension(e);
    std::stable_sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      auto key = [](const Diagnostic& d) {
        Location l = d.location.value_or(Location{});
        return std::make_tuple(l.line, l.column, code_tag(d.code));
      };
      return key(a) < key(b);
    });
    return std::move(out_);
  }

 private:
  void error(DiagCode code, std::string msg, const Location& loc) {
    out_.push_back(Diagnostic::error(code, std::move(msg), loc));
  }

  void check_declaration_names() {
    std::map<Ident, int> seen;
    auto visit = [&](const Ident& name, const Location& loc) {
      if (seen[name]++ > 0) error(DiagCode::DuplicateName, "type " + q(name) + " is declared more than once", loc);
    };
    for (const auto& d : p_.extensibles()) visit(d.name, d.loc);
    for (const auto& e : p_.extensions()) visit(e.name, e.loc);
  }

  // Data constructors, terminal constructors (named after each extensible
  // type) and pattern synonyms all live in one namespace after encoding.
  void check_constructor_namespace() {
    std::map<Ident, std::string> owner;
    auto visit = [&](const Ident& name, const std::string& what, const Location& loc) {
      auto [it, inserted] = owner.emplace(name, what);
      if (!inserted)
        error(DiagCode::DuplicateName,
              "constructor " + q(name) + " (" + what + ") collides with " + it->second, loc);
    };
    // A repeated type name is already reported once.
    std::set<Ident> types;
    for (const auto& d : p_.extensibles())
      if (types.insert(d.name).second) visit(d.name, "terminal constructor of " + q(d.name), d.loc);
    for (const auto& d : p_.extensibles())
      for (const auto& c : d.constructors) visit(c.name, "constructor of " + q(d.name), c.loc);
    for (const auto& e : p_.extensions()) {
      for (const auto& c : e.newConstructors) visit(c.name, "new constructor of " + q(e.name), c.loc);
      for (const auto& c : e.extendedConstructors)
        visit(c.newName, "extended constructor of " + q(e.name), c.loc);
    }
  }

  void check_params(const std::vector<Ident>& params, const Location& loc) {
    std::set<Ident> seen;
    for (const auto& a : params)
      if (!seen.insert(a).second)
        error(DiagCode::DuplicateName, "type parameter " + q(a) + " is repeated", loc);
  }

  void check_oplus_heads(const TypeExpr& t, const Location& loc) {
    if (const auto* o = t.as<TypeExpr::Oplus>()) {
      const auto* head = o->base->as<TypeExpr::Con>();
      const ExtensibleDataDecl* d = head ? p_.find_extensible(head->head) : nullptr;
      if (d == nullptr || !d->extensible) {
        error(DiagCode::OplusOnNonExtensible,
              "'<+>' applied to a type whose head is not an extensible declaration", loc);
      }
    }
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, TypeExpr::Con> || std::is_same_v<N, TypeExpr::Var>) {
            for (const auto& a : n.args) check_oplus_heads(a, loc);
          } else if constexpr (std::is_same_v<N, TypeExpr::Oplus>) {
            check_oplus_heads(*n.base, loc);
            check_oplus_heads(*n.extension, loc);
          } else if constexpr (std::is_same_v<N, TypeExpr::List>) {
            check_oplus_heads(*n.element, loc);
          } else if constexpr (std::is_same_v<N, TypeExpr::Tuple>) {
            for (const auto& e : n.elements) check_oplus_heads(e, loc);
          }
        },
        t.node);
  }

  void warn_unused(const std::vector<Ident>& params, const std::set<Ident>& used, const Ident& owner,
                   const Location& loc) {
    for (const auto& a : params)
      if (!used.count(a))
        out_.push_back(Diagnostic::warning(
            DiagCode::UnusedParameter, "type parameter " + q(a) + " of " + q(owner) + " is never used", loc));
  }

  void check_extensible(const ExtensibleDataDecl& d) {
    check_params(d.params, d.loc);
    std::set<Ident> used;
    for (const auto& c : d.constructors) {
      for (const auto& f : c.fields) {
        if (f.contains_oplus())
          error(DiagCode::OplusOnNonExtensible,
                "'<+>' is not allowed in the fields of extensible declaration " + q(d.name), c.loc);
        f.collect_vars(used);
      }
    }
    warn_unused(d.params, used, d.name, d.loc);
  }

  void check_extension(const ExtensionDecl& e) {
    check_params(e.params, e.loc);

    std::set<Ident> used(e.baseArgs.begin(), e.baseArgs.end());
    auto fields_of = [&](auto&& f) {
      for (const auto& c : e.newConstructors)
        for (const auto& t : c.fields) f(t, c.loc);
      for (const auto& c : e.extendedConstructors)
        for (const auto& t : c.addedFields) f(t, c.loc);
    };
    fields_of([&](const TypeExpr& t, const Location& loc) {
      t.collect_vars(used);
      check_oplus_heads(t, loc);
    });
    warn_unused(e.params, used, e.name, e.loc);

    // V2: every base argument is one of the extension's own parameters.
    if (e.baseArgs.size() > e.params.size()) {
      error(DiagCode::BadParamMap,
            q(e.name) + " passes " + std::to_string(e.baseArgs.size()) + " arguments to " +
                q(e.baseName) + " but declares only " + std::to_string(e.params.size()) +
                " parameters",
            e.loc);
    }
    for (const auto& b : e.baseArgs) {
      if (std::find(e.params.begin(), e.params.end(), b) == e.params.end())
        error(DiagCode::BadParamMap,
              "base argument " + q(b) + " is not a parameter of " + q(e.name), e.loc);
    }

    const ExtensibleDataDecl* base = p_.find_extensible(e.baseName);
    if (base == nullptr || !base->extensible) {
      error(DiagCode::UnknownBase,
            q(e.name) + " extends " + q(e.baseName) + ", which is not an extensible declaration",
            e.loc);
      return;
    }

    // V3: the base must be fully applied.
    if (e.baseArgs.size() != base->params.size()) {
      error(DiagCode::ArityMismatch,
            q(e.baseName) + " expects " + std::to_string(base->params.size()) + " type argument(s), " +
                q(e.name) + " supplies " + std::to_string(e.baseArgs.size()),
            e.loc);
    }

    std::set<Ident> claused;
    for (const auto& c : e.extendedConstructors) {
      if (base->find_constructor(c.baseConstructor) == nullptr) {
        error(DiagCode::UnknownConstructor,
              q(c.baseConstructor) + " is not a constructor of " + q(base->name), c.loc);
        continue;
      }
      if (!claused.insert(c.baseConstructor).second) {
        error(DiagCode::DuplicateClause,
              q(c.baseConstructor) + " is extended more than once in " + q(e.name), c.loc);
      }
    }

    if (!e.partial && !opts_.assume_partial) {
      for (const auto& missing : unextended_constructors(e, *base)) {
        error(DiagCode::ConstructorNotCovered,
              q(e.name) + " has no clause for constructor " + q(missing) + " of " + q(base->name) +
                  " (declare the extension 'partial' to extend it by empty implicitly)",
              e.loc);
      }
    }
  }

  const Program& p_;
  const ValidateOptions& opts_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate_program(const Program& p, const ValidateOptions& opts) {
  return Checker(p, opts).run();
}

std::vector<Ident> unextended_constructors(const ExtensionDecl& ext, const ExtensibleDataDecl& base) {
  std::vector<Ident> out;
  for (const auto& c : base.constructors)
    if (ext.find_clause(c.name) == nullptr) out.push_back(c.name);
  return out;
}

}  // namespace xdt
