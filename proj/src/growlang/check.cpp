#include "growlang/check.hpp"

#include "xdt/core.hpp"

namespace growlang {
namespace {

void require_typed(const Node& n) {
  if (&n.descriptor() != &typed_descriptor())
    throw xdt::InvalidInput("the checker reads typed trees, got a '" + n.descriptor().name + "' tree");
}

bool exp(const Node& m, const TypeEnv& env, const Ty& c);

bool dec(const Node& d, const TypeEnv& env, const TypeEnv& delta) {
  const auto& ds = delta.entries();
  if (d.ctor() == "Val" && ds.size() == 1)
    return d.name(0) == ds[0].first && exp(d.node(1), env, ds[0].second);
  if (d.ctor() == "Prj" && ds.size() == 2)
    return d.name(0) == ds[0].first && d.name(1) == ds[1].first &&
           exp(d.node(2), env, Ty::prod(ds[0].second, ds[1].second));
  return false;
}

bool exp(const Node& m, const TypeEnv& env, const Ty& c) {
  const std::string& k = m.ctor();
  if (k == "Lit") return c.is_int();
  if (k == "Var") {
    const Ty* t = env.lookup(m.name(0));
    return t && *t == c;
  }
  if (k == "Ann") return m.type(1) == c && exp(m.node(0), env, c);
  if (k == "Abs" && c.is_arrow()) return exp(m.node(1), env.push(m.name(0), c.left()), c.right());
  if (k == "App") {
    const Ty& a = std::get<Ty>(m.ext());
    return exp(m.node(0), env, Ty::arrow(a, c)) && exp(m.node(1), env, a);
  }
  if (k == "Tup" && c.is_prod()) return exp(m.node(0), env, c.left()) && exp(m.node(1), env, c.right());
  if (k == "Let") {
    const TypeEnv& delta = std::get<TypeEnv>(m.ext());
    return dec(m.node(0), env, delta) && exp(m.node(1), delta.concat(env), c);
  }
  return false;
}

}  // namespace

bool chk_exp(const Node& m, const TypeEnv& env, const Ty& ty) {
  require_typed(m);
  if (m.cls() != Cls::Exp) throw xdt::InvalidInput("chk_exp needs an expression, got " + m.ctor());
  return exp(m, env, ty);
}

bool chk_dec(const Node& d, const TypeEnv& env, const TypeEnv& delta) {
  require_typed(d);
  if (d.cls() != Cls::Dec) throw xdt::InvalidInput("chk_dec needs a declaration, got " + d.ctor());
  return dec(d, env, delta);
}

}  // namespace growlang
