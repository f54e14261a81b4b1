#include "xdt/encoder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "xdt/validator.hpp"

namespace xdt {
namespace {

void require_valid(const Program& p, const char* op) {
  if (has_errors(validate_program(p)))
    throw InvalidInput(std::string(op) + ": program has validation errors");
}

const MutualGroup& group_containing(const Program& p, const Ident& name) {
  auto g = p.group_of(name);
  if (!g) throw InvalidInput("'" + name.str() + "' is not an extensible declaration");
  return p.mutual_groups()[*g];
}

std::vector<TypeExpr> as_vars(const std::vector<Ident>& names) {
  std::vector<TypeExpr> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(TypeExpr::var(n));
  return out;
}

/// Applies `prefix` to every head in `heads`, recursively.
TypeExpr prefix_heads(const TypeExpr& t, const std::vector<TypeExpr>& prefix,
                      const std::set<Ident>& heads) {
  return std::visit(
      [&](const auto& n) -> TypeExpr {
        using N = std::decay_t<decltype(n)>;
        auto map_all = [&](const std::vector<TypeExpr>& xs) {
          std::vector<TypeExpr> out;
          out.reserve(xs.size());
          for (const auto& x : xs) out.push_back(prefix_heads(x, prefix, heads));
          return out;
        };
        if constexpr (std::is_same_v<N, TypeExpr::Con>) {
          std::vector<TypeExpr> args = map_all(n.args);
          if (heads.count(n.head)) {
            const bool housed = args.size() >= prefix.size() &&
                                std::equal(prefix.begin(), prefix.end(), args.begin());
            if (!housed) args.insert(args.begin(), prefix.begin(), prefix.end());
          }
          return TypeExpr::con(n.head, std::move(args));
        } else if constexpr (std::is_same_v<N, TypeExpr::Var>) {
          return TypeExpr::var(n.name, map_all(n.args));
        } else if constexpr (std::is_same_v<N, TypeExpr::Oplus>) {
          throw InvalidInput("'<+>' type where an ordinary type was expected");
        } else if constexpr (std::is_same_v<N, TypeExpr::List>) {
          return TypeExpr::list(prefix_heads(*n.element, prefix, heads));
        } else if constexpr (std::is_same_v<N, TypeExpr::Tuple>) {
          return TypeExpr::tuple(map_all(n.elements));
        } else {
          return TypeExpr{n};
        }
      },
      t.node);
}

std::set<Ident> param_scope(const Program& p, const MutualGroup& group) {
  std::set<Ident> scope;
  for (const auto& m : group)
    for (const auto& a : p.find_extensible(m)->params) scope.insert(a);
  return scope;
}

}  // namespace

std::vector<Ident> EncodedDataDecl::header_params() const {
  std::vector<Ident> out;
  if (mode == EncodingMode::Compact) {
    out.push_back(*xiParam);
  } else {
    out = sharedSlotParams;
  }
  out.insert(out.end(), params.begin(), params.end());
  return out;
}

Ident fresh_name(const Ident& base, const std::set<Ident>& scope) {
  if (!scope.count(base)) return base;
  for (unsigned long i = 1;; ++i) {
    Ident candidate(base.str() + std::to_string(i));
    if (!scope.count(candidate)) return candidate;
  }
}

TypeExpr house_type(const TypeExpr& t, const Ident& xi, const std::set<Ident>& extensibleNames) {
  return prefix_heads(t, {TypeExpr::var(xi)}, extensibleNames);
}

EncodedDataDecl encode_compact(const ExtensibleDataDecl& decl, const Program& p) {
  require_valid(p, "encode_compact");
  if (!decl.extensible) throw InvalidInput("encode_compact: declaration is not extensible");
  const auto& group = group_containing(p, decl.name);
  const std::set<Ident> names = p.extensible_names();

  EncodedDataDecl out;
  out.name = decl.name;
  out.mode = EncodingMode::Compact;
  out.xiParam = fresh_name(Ident("xi"), param_scope(p, group));
  out.params = decl.params;
  const Ident& xi = *out.xiParam;
  for (const auto& c : decl.constructors) {
    ConstructorDecl enc{c.name, {}, c.loc};
    enc.fields.push_back(TypeExpr::var(xi, {TypeExpr::symbol(Label(c.name))}));
    for (const auto& f : c.fields) enc.fields.push_back(house_type(f, xi, names));
    out.constructors.push_back(std::move(enc));
  }
  out.terminalConstructor =
      ConstructorDecl{decl.name, {TypeExpr::var(xi, {TypeExpr::symbol(Label(decl.name))})}, decl.loc};
  return out;
}

EncodedDataDecl encode_naive(const ExtensibleDataDecl& decl, const Program& p) {
  require_valid(p, "encode_naive");
  if (!decl.extensible) throw InvalidInput("encode_naive: declaration is not extensible");
  const auto& group = group_containing(p, decl.name);

  EncodedDataDecl out;
  out.name = decl.name;
  out.mode = EncodingMode::Naive;
  out.params = decl.params;

  std::set<Ident> scope = param_scope(p, group);
  std::map<Label, Ident> slot_var;
  for (const auto& member : group) {
    for (const auto& label : slot_labels(*p.find_extensible(member))) {
      Ident v = fresh_name(Ident("x" + label.str()), scope);
      scope.insert(v);
      slot_var.emplace(label, v);
      out.sharedSlotParams.push_back(v);
    }
  }
  for (const auto& label : slot_labels(decl)) out.slotParams.push_back(slot_var.at(label));

  const std::vector<TypeExpr> shared = as_vars(out.sharedSlotParams);
  const std::set<Ident> heads(group.begin(), group.end());
  for (const auto& c : decl.constructors) {
    ConstructorDecl enc{c.name, {}, c.loc};
    enc.fields.push_back(TypeExpr::var(slot_var.at(Label(c.name))));
    for (const auto& f : c.fields) enc.fields.push_back(prefix_heads(f, shared, heads));
    out.constructors.push_back(std::move(enc));
  }
  out.terminalConstructor =
      ConstructorDecl{decl.name, {TypeExpr::var(slot_var.at(Label(decl.name)))}, decl.loc};
  return out;
}

EncodedDataDecl encode(const ExtensibleDataDecl& decl, const Program& p, EncodingMode mode) {
  return mode == EncodingMode::Compact ? encode_compact(decl, p) : encode_naive(decl, p);
}

Term rewrite_oplus(const OplusFragment& frag) {
  std::vector<Term> args;
  args.reserve(frag.ordinaryArgs.size() + 1);
  args.push_back(frag.extensionArg);
  args.insert(args.end(), frag.ordinaryArgs.begin(), frag.ordinaryArgs.end());
  return Term::apply(frag.head.str(), std::move(args));
}

TypeExpr rewrite_oplus_type(const TypeExpr& t) {
  return std::visit(
      [&](const auto& n) -> TypeExpr {
        using N = std::decay_t<decltype(n)>;
        auto map_all = [](const std::vector<TypeExpr>& xs) {
          std::vector<TypeExpr> out;
          for (const auto& x : xs) out.push_back(rewrite_oplus_type(x));
          return out;
        };
        if constexpr (std::is_same_v<N, TypeExpr::Oplus>) {
          const auto* head = n.base->template as<TypeExpr::Con>();
          if (head == nullptr) throw InvalidInput("'<+>' base must be a type constructor application");
          std::vector<TypeExpr> args{rewrite_oplus_type(*n.extension)};
          for (const auto& a : head->args) args.push_back(rewrite_oplus_type(a));
          return TypeExpr::con(head->head, std::move(args));
        } else if constexpr (std::is_same_v<N, TypeExpr::Con>) {
          return TypeExpr::con(n.head, map_all(n.args));
        } else if constexpr (std::is_same_v<N, TypeExpr::Var>) {
          return TypeExpr::var(n.name, map_all(n.args));
        } else if constexpr (std::is_same_v<N, TypeExpr::List>) {
          return TypeExpr::list(rewrite_oplus_type(*n.element));
        } else if constexpr (std::is_same_v<N, TypeExpr::Tuple>) {
          return TypeExpr::tuple(map_all(n.elements));
        } else {
          return TypeExpr{n};
        }
      },
      t.node);
}

// ---------------------------------------------------------------- lowering

namespace {

std::set<Ident> referenced_names(const ExtensionDecl& e) {
  std::set<Ident> heads;
  for (const auto& c : e.newConstructors)
    for (const auto& f : c.fields) f.collect_heads(heads);
  for (const auto& c : e.extendedConstructors)
    for (const auto& f : c.addedFields) f.collect_heads(heads);
  return heads;
}

struct GroupState {
  std::size_t leader;
  std::size_t mutualGroup;
  std::vector<Ident> params;
  std::set<Ident> bases;
  std::vector<std::size_t> members;
};

bool compatible(const GroupState& a, const GroupState& b) {
  if (a.mutualGroup != b.mutualGroup || a.params != b.params) return false;
  return std::none_of(a.bases.begin(), a.bases.end(), [&](const Ident& x) { return b.bases.count(x) > 0; });
}

/// Groups as lists of indices into p.extensions(), each list ascending and
/// the groups ordered by their first member.
std::vector<std::vector<std::size_t>> group_indices(const Program& p) {
  const auto& exts = p.extensions();
  const std::size_t n = exts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<GroupState> state(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto g = p.group_of(exts[i].baseName);
    state[i] = GroupState{i, g.value_or(static_cast<std::size_t>(-1)), exts[i].params, {exts[i].baseName}, {i}};
  }
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i];
    return i;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b || !compatible(state[a], state[b])) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    state[a].bases.insert(state[b].bases.begin(), state[b].bases.end());
    state[a].members.insert(state[a].members.end(), state[b].members.begin(), state[b].members.end());
  };

  // Extensions that mention one another belong together.
  std::vector<std::set<Ident>> refs(n);
  for (std::size_t i = 0; i < n; ++i) refs[i] = referenced_names(exts[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (refs[i].count(exts[j].name) || refs[j].count(exts[i].name)) unite(i, j);

  // Remaining pieces join the earliest compatible group over the same
  // mutual group, so every member's slots get instances.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i)
    if (root(i) == i) roots.push_back(i);
  std::vector<std::size_t> settled;
  for (std::size_t r : roots) {
    bool merged = false;
    for (std::size_t s : settled) {
      if (compatible(state[s], state[r])) {
        unite(s, r);
        merged = true;
        break;
      }
    }
    if (!merged) settled.push_back(r);
  }

  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s : settled) {
    auto members = state[root(s)].members;
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Ident>> extension_groups(const Program& p) {
  std::vector<std::vector<Ident>> out;
  for (const auto& g : group_indices(p)) {
    std::vector<Ident> names;
    for (std::size_t i : g) names.push_back(p.extensions()[i].name);
    out.push_back(std::move(names));
  }
  return out;
}

std::vector<LoweredExtension> lower_all(const Program& p) {
  require_valid(p, "lower_extension");
  const auto& exts = p.extensions();

  std::set<Ident> type_scope;
  for (const auto& d : p.extensibles()) type_scope.insert(d.name);
  for (const auto& e : exts) type_scope.insert(e.name);

  std::set<Ident> con_scope;
  for (const auto& d : p.extensibles()) {
    con_scope.insert(d.name);
    for (const auto& c : d.constructors) con_scope.insert(c.name);
  }
  for (const auto& e : exts) {
    for (const auto& c : e.newConstructors) con_scope.insert(c.name);
    for (const auto& c : e.extendedConstructors) con_scope.insert(c.newName);
  }
  auto fresh_con = [&](const std::string& base) {
    Ident id = fresh_name(Ident(base), con_scope);
    con_scope.insert(id);
    return id;
  };

  std::vector<Ident> family_of(exts.size());
  std::vector<bool> owns(exts.size(), false);
  for (const auto& g : group_indices(p)) {
    Ident fam = fresh_name(Ident("Ext_" + exts[g.front()].name.str()), type_scope);
    type_scope.insert(fam);
    for (std::size_t i : g) family_of[i] = fam;
    owns[g.front()] = true;
  }

  std::vector<LoweredExtension> out;
  out.reserve(exts.size());
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const ExtensionDecl& e = exts[i];
    const ExtensibleDataDecl& base = *p.find_extensible(e.baseName);

    LoweredExtension l;
    l.extensionName = e.name;
    l.familyName = family_of[i];
    l.familyParams = e.params;
    l.ownsFamily = owns[i];

    std::vector<TypeExpr> rhs_args;
    rhs_args.push_back(TypeExpr::con(l.familyName, as_vars(e.params)));
    for (const auto& b : e.baseArgs) rhs_args.push_back(TypeExpr::var(b));
    l.alias = TypeAlias{e.name, e.params, TypeExpr::con(base.name, std::move(rhs_args))};

    std::map<Ident, Ident> clause_payload;
    for (const auto& label : slot_labels(base)) {
      FamilyInstance inst{label, {}};
      if (label == Label(base.name)) {
        if (e.newConstructors.empty()) continue;
        for (const auto& c : e.newConstructors) {
          ConstructorDecl payload{fresh_con(c.name.str() + "_P"), {}, c.loc};
          for (const auto& f : c.fields) payload.fields.push_back(rewrite_oplus_type(f));
          l.synonyms.push_back(PatternSynonym{c.name, base.name, payload.name,
                                              static_cast<int>(c.fields.size()), 0});
          inst.payloadConstructors.push_back(std::move(payload));
        }
      } else {
        const Ident con(label.str());
        const ConExtensionClause* clause = e.find_clause(con);
        if (clause == nullptr && !e.partial) continue;
        ConstructorDecl payload;
        if (clause == nullptr || clause->addedFields.empty()) {
          payload.name = fresh_con("None_" + con.str());
        } else {
          payload.name = fresh_con(con.str() + "_P");
          for (const auto& f : clause->addedFields) payload.fields.push_back(rewrite_oplus_type(f));
        }
        if (clause != nullptr) {
          payload.loc = clause->loc;
          clause_payload.emplace(con, payload.name);
        }
        inst.payloadConstructors.push_back(std::move(payload));
      }
      l.instances.push_back(std::move(inst));
    }

    // Clause synonyms come first, in declaration order; new-constructor
    // synonyms were collected above.
    std::vector<PatternSynonym> clause_syns;
    for (const auto& c : e.extendedConstructors) {
      clause_syns.push_back(PatternSynonym{
          c.newName, c.baseConstructor, clause_payload.at(c.baseConstructor),
          static_cast<int>(c.addedFields.size()),
          static_cast<int>(base.find_constructor(c.baseConstructor)->fields.size())});
    }
    clause_syns.insert(clause_syns.end(), l.synonyms.begin(), l.synonyms.end());
    l.synonyms = std::move(clause_syns);
    out.push_back(std::move(l));
  }
  return out;
}

LoweredExtension lower_extension(const ExtensionDecl& ext, const Program& p) {
  for (auto& l : lower_all(p))
    if (l.extensionName == ext.name) return l;
  throw InvalidInput("lower_extension: '" + ext.name.str() + "' is not part of the program");
}

}  // namespace xdt
