#include "growlang/node.hpp"

#include <algorithm>

#include "xdt/core.hpp"

namespace growlang {
namespace {

using xdt::InvalidInput;

std::vector<CtorSig> make_base() {
  using F = FieldKind;
  return {
      {"Lit", "LitX", Cls::Exp, {F::Integer}},
      {"Var", "VarX", Cls::Exp, {F::Name}},
      {"Ann", "AnnX", Cls::Exp, {F::Exp, F::Type}},
      {"Abs", "AbsX", Cls::Exp, {F::Name, F::Exp}},
      {"App", "AppX", Cls::Exp, {F::Exp, F::Exp}},
      {"Let", "LetX", Cls::Exp, {F::Dec, F::Exp}},
      {"Val", "ValX", Cls::Dec, {F::Name, F::Exp}},
      {"Int", "IntX", Cls::Typ, {}},
      {"Arr", "ArrX", Cls::Typ, {F::Typ, F::Typ}},
  };
}

std::vector<CtorSig> make_added() {
  using F = FieldKind;
  return {
      {"Tup", "ExpX", Cls::Exp, {F::Exp, F::Exp}},
      {"Prj", "DecX", Cls::Dec, {F::Name, F::Name, F::Exp}},
      {"Prod", "TypX", Cls::Typ, {F::Typ, F::Typ}},
  };
}

Descriptor make_plain() {
  Descriptor d;
  d.name = "plain";
  for (const auto& c : base_constructors()) d.slots[c.label] = PayloadShape::Unit;
  for (Cls c : {Cls::Exp, Cls::Dec, Cls::Typ}) d.slots[cls_label(c)] = PayloadShape::Unit;
  d.newConstructors = make_added();
  return d;
}

Descriptor make_typed() {
  Descriptor d = make_plain();
  d.name = "typed";
  d.slots["AppX"] = PayloadShape::Type;
  d.slots["LetX"] = PayloadShape::Env;
  return d;
}

bool kind_matches(FieldKind k, const Field& f, const Descriptor& d) {
  switch (k) {
    case FieldKind::Name: return std::holds_alternative<Name>(f);
    case FieldKind::Integer: return std::holds_alternative<std::int64_t>(f);
    case FieldKind::Type: return std::holds_alternative<Ty>(f);
    default: break;
  }
  const auto* n = std::get_if<NodePtr>(&f);
  if (!n || !*n || &(*n)->descriptor() != &d) return false;
  const Cls want = k == FieldKind::Exp ? Cls::Exp : k == FieldKind::Dec ? Cls::Dec : Cls::Typ;
  return (*n)->cls() == want;
}

bool fields_equal(const Field& a, const Field& b) {
  if (a.index() != b.index()) return false;
  if (const auto* n = std::get_if<NodePtr>(&a)) return same_tree(*n, std::get<NodePtr>(b));
  return a == b;
}

}  // namespace

std::string cls_label(Cls c) {
  switch (c) {
    case Cls::Exp: return "ExpX";
    case Cls::Dec: return "DecX";
    case Cls::Typ: return "TypX";
  }
  return "?";
}

const std::vector<CtorSig>& base_constructors() {
  static const std::vector<CtorSig> sigs = make_base();
  return sigs;
}

const CtorSig* find_base(Cls cls, const std::string& name) {
  for (const auto& s : base_constructors())
    if (s.cls == cls && s.name == name) return &s;
  return nullptr;
}

PayloadShape Descriptor::shape(const std::string& label) const {
  auto it = slots.find(label);
  if (it == slots.end()) throw InvalidInput("descriptor '" + name + "' has no slot " + label);
  return it->second;
}

const CtorSig* Descriptor::find_new(Cls cls, const std::string& ctor) const {
  for (const auto& s : newConstructors)
    if (s.cls == cls && s.name == ctor) return &s;
  return nullptr;
}

const CtorSig* Descriptor::find(Cls cls, const std::string& ctor) const {
  if (const auto* s = find_base(cls, ctor)) return s;
  return find_new(cls, ctor);
}

const Descriptor& plain_descriptor() {
  static const Descriptor d = make_plain();
  return d;
}

const Descriptor& typed_descriptor() {
  static const Descriptor d = make_typed();
  return d;
}

NodePtr Node::make(const Descriptor& d, Cls cls, std::string ctor, Payload ext,
                   std::vector<Field> fields, Pos pos) {
  const CtorSig* sig = d.find(cls, ctor);
  if (!sig)
    throw InvalidInput("'" + ctor + "' is not a " + cls_label(cls) + " constructor under '" + d.name + "'");
  const PayloadShape want = d.shape(sig->label);
  if (shape_of(ext) != want)
    throw InvalidInput(ctor + " expects a " + shape_name(want) + " payload under '" + d.name + "', got " +
                       shape_name(shape_of(ext)));
  if (fields.size() != sig->fields.size())
    throw InvalidInput(ctor + " takes " + std::to_string(sig->fields.size()) + " fields, got " +
                       std::to_string(fields.size()));
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (!kind_matches(sig->fields[i], fields[i], d))
      throw InvalidInput("field " + std::to_string(i + 1) + " of " + ctor + " has the wrong kind");

  auto n = std::shared_ptr<Node>(new Node());
  n->desc_ = &d;
  n->sig_ = sig;
  n->cls_ = cls;
  n->ctor_ = std::move(ctor);
  n->ext_ = std::move(ext);
  n->fields_ = std::move(fields);
  n->pos_ = pos;
  return n;
}

const Node& Node::node(std::size_t i) const { return *std::get<NodePtr>(fields_.at(i)); }
const std::string& Node::name(std::size_t i) const { return std::get<Name>(fields_.at(i)).text; }
std::int64_t Node::integer(std::size_t i) const { return std::get<std::int64_t>(fields_.at(i)); }
const Ty& Node::type(std::size_t i) const { return std::get<Ty>(fields_.at(i)); }

bool operator==(const Node& a, const Node& b) {
  if (a.desc_ != b.desc_ && a.desc_->name != b.desc_->name) return false;
  if (a.cls_ != b.cls_ || a.ctor_ != b.ctor_ || !(a.ext_ == b.ext_)) return false;
  if (a.fields_.size() != b.fields_.size()) return false;
  for (std::size_t i = 0; i < a.fields_.size(); ++i)
    if (!fields_equal(a.fields_[i], b.fields_[i])) return false;
  return true;
}

bool same_tree(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

NodePtr strip(const Node& n) {
  return retag(n, plain_descriptor(), [](const Node&) { return Payload{Unit{}}; });
}

NodePtr Builder::lit(std::int64_t i, Payload ext) const { return Node::make(*d_, Cls::Exp, "Lit", ext, {i}); }
NodePtr Builder::var(std::string x, Payload ext) const {
  return Node::make(*d_, Cls::Exp, "Var", ext, {Name{std::move(x)}});
}
NodePtr Builder::ann(NodePtr m, Ty t, Payload ext) const {
  return Node::make(*d_, Cls::Exp, "Ann", ext, {std::move(m), std::move(t)});
}
NodePtr Builder::abs(std::string x, NodePtr n, Payload ext) const {
  return Node::make(*d_, Cls::Exp, "Abs", ext, {Name{std::move(x)}, std::move(n)});
}
NodePtr Builder::app(NodePtr l, NodePtr m, Payload ext) const {
  return Node::make(*d_, Cls::Exp, "App", ext, {std::move(l), std::move(m)});
}
NodePtr Builder::let(NodePtr d, NodePtr n, Payload ext) const {
  return Node::make(*d_, Cls::Exp, "Let", ext, {std::move(d), std::move(n)});
}
NodePtr Builder::tup(NodePtr m, NodePtr n) const {
  return Node::make(*d_, Cls::Exp, "Tup", Unit{}, {std::move(m), std::move(n)});
}
NodePtr Builder::val(std::string x, NodePtr m, Payload ext) const {
  return Node::make(*d_, Cls::Dec, "Val", ext, {Name{std::move(x)}, std::move(m)});
}
NodePtr Builder::prj(std::string x, std::string y, NodePtr l) const {
  return Node::make(*d_, Cls::Dec, "Prj", Unit{}, {Name{std::move(x)}, Name{std::move(y)}, std::move(l)});
}
NodePtr Builder::int_ty(Payload ext) const { return Node::make(*d_, Cls::Typ, "Int", ext, {}); }
NodePtr Builder::arr_ty(NodePtr a, NodePtr b, Payload ext) const {
  return Node::make(*d_, Cls::Typ, "Arr", ext, {std::move(a), std::move(b)});
}
NodePtr Builder::prod_ty(NodePtr a, NodePtr b) const {
  return Node::make(*d_, Cls::Typ, "Prod", Unit{}, {std::move(a), std::move(b)});
}

Ty to_ty(const Node& n) {
  if (n.cls() != Cls::Typ) throw InvalidInput("not a type node: " + n.ctor());
  if (n.ctor() == "Int") return Ty::int_();
  if (n.ctor() == "Arr") return Ty::arrow(to_ty(n.node(0)), to_ty(n.node(1)));
  if (n.ctor() == "Prod") return Ty::prod(to_ty(n.node(0)), to_ty(n.node(1)));
  throw InvalidInput("no Ty counterpart for type constructor " + n.ctor());
}

NodePtr from_ty(const Ty& t, const Descriptor& d) {
  Builder b(d);
  switch (t.kind()) {
    case Ty::Kind::Int: return b.int_ty();
    case Ty::Kind::Arrow: return b.arr_ty(from_ty(t.left(), d), from_ty(t.right(), d));
    case Ty::Kind::Prod: return b.prod_ty(from_ty(t.left(), d), from_ty(t.right(), d));
  }
  throw InvalidInput("unreachable type kind");
}

}  // namespace growlang
