#include "support/oracles.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oracle {

using growlang::Builder;
using growlang::NodePtr;
using growlang::Ty;
using growlang::TypeEnv;

std::string source_path(const std::string& relative) { return std::string(XDT_SOURCE_DIR) + "/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CheckRow> checker_table() {
  const Builder b(growlang::typed_descriptor());
  const Ty I = Ty::int_();
  const Ty II = Ty::arrow(I, I);
  const Ty IxI = Ty::prod(I, I);
  auto id = [&] { return b.abs("x", b.var("x")); };
  auto row = [](std::string what, NodePtr t, TypeEnv env, Ty ty, bool expected) {
    return CheckRow{std::move(what), std::move(t), std::move(env), std::move(ty), {}, expected};
  };
  auto drow = [&](std::string what, NodePtr d, TypeEnv env, TypeEnv delta, bool expected) {
    return CheckRow{std::move(what), std::move(d), std::move(env), I, std::move(delta), expected};
  };

  return {
      row("literal at Int", b.lit(1), {}, I, true),
      row("literal at an arrow falls through", b.lit(1), {}, II, false),
      row("bound variable", b.var("x"), {{"x", I}}, I, true),
      row("unbound variable", b.var("x"), {}, I, false),
      row("variable at the wrong type", b.var("x"), {{"x", I}}, II, false),
      row("first binding shadows", b.var("x"), {{"x", II}, {"x", I}}, I, false),
      row("first binding wins", b.var("x"), {{"x", I}, {"x", II}}, I, true),
      row("annotation agrees", b.ann(b.lit(1), I), {}, I, true),
      row("annotation disagrees with goal", b.ann(b.lit(1), I), {}, II, false),
      row("annotation agrees but body fails", b.ann(b.lit(1), II), {}, II, false),
      row("identity at Int -> Int", id(), {}, II, true),
      row("abstraction at Int falls through", id(), {}, I, false),
      row("abstraction at a product falls through", id(), {}, IxI, false),
      row("nested abstraction reads outer binder", b.abs("x", b.abs("y", b.var("x"))), {},
          Ty::arrow(I, Ty::arrow(II, I)), true),
      row("application decorated with Int", b.app(id(), b.lit(1), I), {}, I, true),
      row("application decorated with the wrong type", b.app(id(), b.lit(1), II), {}, I, false),
      row("application of a bound function", b.app(b.var("f"), b.lit(2), I), {{"f", II}}, I, true),
      row("application at the wrong result type", b.app(b.var("f"), b.lit(2), I), {{"f", II}}, II, false),
      row("pair at a product", b.tup(b.lit(1), b.lit(2)), {}, IxI, true),
      row("pair at an arrow falls through", b.tup(b.lit(1), b.lit(2)), {}, II, false),
      row("pair with a function component", b.tup(b.lit(1), id()), {}, Ty::prod(I, II), true),
      row("let of a value", b.let(b.val("x", b.lit(1)), b.var("x"), TypeEnv{{"x", I}}), {}, I, true),
      row("let decoration names another variable", b.let(b.val("x", b.lit(1)), b.var("x"), TypeEnv{{"y", I}}), {},
          I, false),
      row("let bindings precede the context", b.let(b.val("x", b.lit(1)), b.var("x"), TypeEnv{{"x", I}}),
          {{"x", II}}, I, true),
      row("let of a projection",
          b.let(b.prj("x", "y", b.tup(b.lit(1), b.abs("z", b.var("z")))), b.app(b.var("y"), b.var("x"), I),
                TypeEnv{{"x", I}, {"y", II}}),
          {}, I, true),
      row("let with empty decoration falls through", b.let(b.val("x", b.lit(1)), b.lit(2), TypeEnv{}), {}, I,
          false),
      drow("value declaration", b.val("x", b.lit(1)), {}, {{"x", I}}, true),
      drow("value declaration, name mismatch", b.val("x", b.lit(1)), {}, {{"y", I}}, false),
      drow("value declaration against two bindings falls through", b.val("x", b.lit(1)), {}, {{"x", I}, {"y", I}},
           false),
      drow("projection of a pair", b.prj("x", "y", b.tup(b.lit(1), b.lit(2))), {}, {{"x", I}, {"y", I}}, true),
      drow("projection with swapped names", b.prj("x", "y", b.tup(b.lit(1), b.lit(2))), {}, {{"y", I}, {"x", I}},
           false),
      drow("projection of a bound pair", b.prj("x", "y", b.var("p")), {{"p", Ty::prod(I, II)}},
           {{"x", I}, {"y", II}}, true),
      drow("projection against one binding falls through", b.prj("x", "y", b.lit(1)), {}, {{"x", I}}, false),
      drow("projection component mismatch", b.prj("x", "y", b.tup(b.lit(1), b.lit(2))), {}, {{"x", I}, {"y", II}},
           false),
  };
}

long long typ_count(int depth) {
  if (depth <= 0) return 0;
  long long c = 1;
  for (int d = 2; d <= depth; ++d) c = 1 + 2 * c * c;
  return c;
}

std::vector<Ty> enumerate_types(int depth) {
  if (depth <= 0) return {};
  std::vector<Ty> out{Ty::int_()};
  const auto smaller = enumerate_types(depth - 1);
  for (const auto& a : smaller)
    for (const auto& c : smaller) out.push_back(Ty::arrow(a, c));
  for (const auto& a : smaller)
    for (const auto& c : smaller) out.push_back(Ty::prod(a, c));
  return out;
}

std::vector<NodePtr> enumerate_typ_nodes(int depth, const growlang::Descriptor& d) {
  if (depth <= 0) return {};
  std::vector<growlang::CtorSig> sigs;
  for (const auto& s : growlang::base_constructors())
    if (s.cls == growlang::Cls::Typ) sigs.push_back(s);
  for (const auto& s : d.newConstructors)
    if (s.cls == growlang::Cls::Typ) sigs.push_back(s);

  const auto smaller = enumerate_typ_nodes(depth - 1, d);
  std::vector<NodePtr> out;
  for (const auto& s : sigs) {
    std::vector<std::vector<growlang::Field>> partial{{}};
    for (std::size_t i = 0; i < s.fields.size(); ++i) {
      std::vector<std::vector<growlang::Field>> next;
      for (const auto& p : partial)
        for (const auto& child : smaller) {
          auto q = p;
          q.emplace_back(child);
          next.push_back(std::move(q));
        }
      partial = std::move(next);
    }
    for (auto& fields : partial)
      out.push_back(growlang::Node::make(d, growlang::Cls::Typ, s.name, growlang::Unit{}, std::move(fields)));
  }
  return out;
}

}  // namespace oracle
