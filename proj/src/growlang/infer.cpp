#include "growlang/infer.hpp"

#include <map>
#include <sstream>

#include "growlang/syntax.hpp"
#include "xdt/core.hpp"

namespace growlang {
namespace {

struct Failure {
  TypeError error;
};

/// Metavariable-bearing types in an arena; handles are indices.
class Store {
 public:
  enum class K { Int, Arrow, Prod, Meta };

  int int_() { return add({K::Int, -1, -1, -1, {}}); }
  int arrow(int a, int b) { return add({K::Arrow, a, b, -1, {}}); }
  int prod(int a, int b) { return add({K::Prod, a, b, -1, {}}); }
  int meta(Pos origin) {
    return add({K::Meta, -1, -1, -1, origin});
  }

  int from(const Ty& t) {
    switch (t.kind()) {
      case Ty::Kind::Int: return int_();
      case Ty::Kind::Arrow: return arrow(from(t.left()), from(t.right()));
      case Ty::Kind::Prod: return prod(from(t.left()), from(t.right()));
    }
    return int_();
  }

  int find(int t) const {
    while (nodes_[t].kind == K::Meta && nodes_[t].ref >= 0) t = nodes_[t].ref;
    return t;
  }

  void unify(int a, int b, Pos at) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    const Cell& x = nodes_[a];
    const Cell& y = nodes_[b];
    if (x.kind == K::Meta) return bind(a, b, at);
    if (y.kind == K::Meta) return bind(b, a, at);
    if (x.kind != y.kind)
      throw Failure{{at.line, at.column, TypeError::Kind::ConstructorClash,
                     "cannot match " + show(a) + " with " + show(b)}};
    if (x.kind == K::Int) return;
    const int xl = x.l, xr = x.r, yl = y.l, yr = y.r;
    unify(xl, yl, at);
    unify(xr, yr, at);
  }

  /// Resolves `t`, defaulting unbound metavariables to Int.
  Ty ground(int t, std::vector<std::string>& warnings) {
    t = find(t);
    const Cell c = nodes_[t];
    switch (c.kind) {
      case K::Int: return Ty::int_();
      case K::Arrow: return Ty::arrow(ground(c.l, warnings), ground(c.r, warnings));
      case K::Prod: return Ty::prod(ground(c.l, warnings), ground(c.r, warnings));
      case K::Meta: break;
    }
    nodes_[t].ref = int_();
    warnings.push_back(std::to_string(c.origin.line) + ":" + std::to_string(c.origin.column) +
                       ": unconstrained type defaulted to Int");
    return Ty::int_();
  }

  std::string show(int t) const {
    t = find(t);
    const Cell& c = nodes_[t];
    switch (c.kind) {
      case K::Int: return "Int";
      case K::Arrow: return "(" + show(c.l) + ") → " + show(c.r);
      case K::Prod: return "(" + show(c.l) + ") × " + show(c.r);
      case K::Meta: break;
    }
    return "?" + std::to_string(t);
  }

 private:
  struct Cell {
    K kind;
    int l, r, ref;
    Pos origin;
  };

  int add(Cell c) {
    nodes_.push_back(c);
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool occurs(int m, int t) const {
    t = find(t);
    if (t == m) return true;
    const Cell& c = nodes_[t];
    if (c.kind == K::Arrow || c.kind == K::Prod) return occurs(m, c.l) || occurs(m, c.r);
    return false;
  }

  void bind(int m, int t, Pos at) {
    if (occurs(m, t))
      throw Failure{{at.line, at.column, TypeError::Kind::OccursCheck,
                     "infinite type: " + show(m) + " occurs in " + show(t)}};
    nodes_[m].ref = t;
  }

  std::vector<Cell> nodes_;
};

using Env = std::vector<std::pair<std::string, int>>;

class Inferrer {
 public:
  Store store;
  std::map<const Node*, int> appArg;
  std::map<const Node*, Env> letDelta;

  int exp(const Node& m, const Env& env) {
    const std::string& k = m.ctor();
    const Pos at = m.pos();
    if (k == "Lit") return store.int_();
    if (k == "Var") {
      for (const auto& [x, t] : env)
        if (x == m.name(0)) return t;
      throw Failure{{at.line, at.column, TypeError::Kind::UnboundVariable, "unbound variable '" + m.name(0) + "'"}};
    }
    if (k == "Ann") {
      const int t = store.from(m.type(1));
      store.unify(exp(m.node(0), env), t, at);
      return t;
    }
    if (k == "Abs") {
      const int a = store.meta(at);
      Env inner = env;
      inner.insert(inner.begin(), {m.name(0), a});
      return store.arrow(a, exp(m.node(1), inner));
    }
    if (k == "App") {
      const int f = exp(m.node(0), env);
      const int a = exp(m.node(1), env);
      const int r = store.meta(at);
      store.unify(f, store.arrow(a, r), at);
      appArg[&m] = a;
      return r;
    }
    if (k == "Tup") return store.prod(exp(m.node(0), env), exp(m.node(1), env));
    if (k == "Let") {
      Env delta = dec(m.node(0), env);
      letDelta[&m] = delta;
      delta.insert(delta.end(), env.begin(), env.end());
      return exp(m.node(1), delta);
    }
    throw xdt::InvalidInput("cannot infer constructor " + k);
  }

  Env dec(const Node& d, const Env& env) {
    if (d.ctor() == "Val") return {{d.name(0), exp(d.node(1), env)}};
    if (d.ctor() == "Prj") {
      const int a = store.meta(d.pos());
      const int b = store.meta(d.pos());
      store.unify(exp(d.node(2), env), store.prod(a, b), d.pos());
      return {{d.name(0), a}, {d.name(1), b}};
    }
    throw xdt::InvalidInput("cannot infer constructor " + d.ctor());
  }

  NodePtr decorate(const Node& n, std::vector<std::string>& warnings) {
    return retag(n, typed_descriptor(), [&](const Node& x) -> Payload {
      if (auto it = appArg.find(&x); it != appArg.end()) return store.ground(it->second, warnings);
      if (auto it = letDelta.find(&x); it != letDelta.end()) {
        std::vector<TypeEnv::Entry> out;
        for (const auto& [name, t] : it->second) out.emplace_back(name, store.ground(t, warnings));
        return TypeEnv(std::move(out));
      }
      return Unit{};
    });
  }
};

void require_plain(const Node& n) {
  if (&n.descriptor() != &plain_descriptor())
    throw xdt::InvalidInput("inference reads plain trees, got a '" + n.descriptor().name + "' tree");
}

Env import(const TypeEnv& env, Store& s) {
  Env out;
  for (const auto& [x, t] : env.entries()) out.emplace_back(x, s.from(t));
  return out;
}

std::string payload_text(const Payload& p) {
  if (const auto* t = std::get_if<Ty>(&p)) return " {" + print_ty(*t) + "}";
  if (const auto* e = std::get_if<TypeEnv>(&p)) {
    std::string out = " {";
    for (std::size_t i = 0; i < e->size(); ++i) {
      if (i) out += ", ";
      out += e->entries()[i].first + " : " + print_ty(e->entries()[i].second);
    }
    return out + "}";
  }
  if (const auto* s = std::get_if<SrcSpan>(&p))
    return " {span " + std::to_string(s->begins) + " " + std::to_string(s->ends) + "}";
  return "";
}

void dump(const Node& n, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << n.ctor();
  for (const auto& f : n.fields()) {
    if (const auto* x = std::get_if<Name>(&f)) os << ' ' << x->text;
    if (const auto* i = std::get_if<std::int64_t>(&f)) os << ' ' << *i;
    if (const auto* t = std::get_if<Ty>(&f)) os << " :: " << print_ty(*t);
  }
  os << payload_text(n.ext()) << '\n';
  for (const auto& f : n.fields())
    if (const auto* c = std::get_if<NodePtr>(&f)) dump(**c, depth + 1, os);
}

}  // namespace

std::string format_error(const TypeError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
}

std::variant<InferredExp, TypeError> infer_exp(const Node& m, const std::optional<Ty>& goal, const TypeEnv& env) {
  require_plain(m);
  if (m.cls() != Cls::Exp) throw xdt::InvalidInput("infer_exp needs an expression, got " + m.ctor());
  Inferrer inf;
  try {
    const int t = inf.exp(m, import(env, inf.store));
    if (goal) inf.store.unify(t, inf.store.from(*goal), m.pos());
    InferredExp out;
    out.type = inf.store.ground(t, out.warnings);
    out.tree = inf.decorate(m, out.warnings);
    return out;
  } catch (const Failure& f) {
    return f.error;
  }
}

std::variant<InferredDec, TypeError> infer_dec(const Node& d, const TypeEnv& env) {
  require_plain(d);
  if (d.cls() != Cls::Dec) throw xdt::InvalidInput("infer_dec needs a declaration, got " + d.ctor());
  Inferrer inf;
  try {
    const Env delta = inf.dec(d, import(env, inf.store));
    InferredDec out;
    std::vector<TypeEnv::Entry> entries;
    for (const auto& [x, t] : delta) entries.emplace_back(x, inf.store.ground(t, out.warnings));
    out.delta = TypeEnv(std::move(entries));
    out.tree = inf.decorate(d, out.warnings);
    return out;
  } catch (const Failure& f) {
    return f.error;
  }
}

std::string dump_tree(const Node& n) {
  std::ostringstream os;
  dump(n, 0, os);
  return os.str();
}

}  // namespace growlang
