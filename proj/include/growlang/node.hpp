#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "growlang/ty.hpp"
#include "xdt/core.hpp"

namespace growlang {

/// Syntax classes of the lambda language. Typ nodes exist so that the
/// type declaration itself can be instantiated at runtime; expressions
/// carry annotations as plain Ty values.
enum class Cls { Exp, Dec, Typ };

std::string cls_label(Cls c);

enum class FieldKind { Exp, Dec, Typ, Name, Integer, Type };

struct CtorSig {
  std::string name;
  /// Slot label; new constructors use the type label of their class.
  std::string label;
  Cls cls = Cls::Exp;
  std::vector<FieldKind> fields;
};

/// Constructors of the extensible base declarations, in declaration order.
const std::vector<CtorSig>& base_constructors();
const CtorSig* find_base(Cls cls, const std::string& name);

/// Runtime stand-in for one instantiation of the extension parameter:
/// the payload shape of every slot plus the constructors it adds.
struct Descriptor {
  std::string name;
  std::map<std::string, PayloadShape> slots;
  std::vector<CtorSig> newConstructors;

  PayloadShape shape(const std::string& label) const;
  const CtorSig* find_new(Cls cls, const std::string& name) const;
  const CtorSig* find(Cls cls, const std::string& name) const;
};

/// Undecorated: every slot is unit; adds Tup, Prj, Prod.
const Descriptor& plain_descriptor();
/// As plain, with App carrying its argument type and Let its bindings.
const Descriptor& typed_descriptor();

class Node;
using NodePtr = std::shared_ptr<const Node>;

struct Name {
  std::string text;
  friend bool operator==(const Name&, const Name&) = default;
};

using Field = std::variant<NodePtr, Name, std::int64_t, Ty>;

struct Pos {
  int line = 0;
  int column = 0;
};

/// A validated tree node. Construction checks the constructor, payload
/// shape and field kinds against the descriptor; equality ignores `pos`.
class Node {
 public:
  static NodePtr make(const Descriptor& d, Cls cls, std::string ctor, Payload ext,
                      std::vector<Field> fields, Pos pos = {});

  const Descriptor& descriptor() const { return *desc_; }
  Cls cls() const { return cls_; }
  const std::string& ctor() const { return ctor_; }
  const CtorSig& sig() const { return *sig_; }
  /// True for constructors added by the descriptor.
  bool is_new() const { return sig_->label == cls_label(cls_); }
  const Payload& ext() const { return ext_; }
  const std::vector<Field>& fields() const { return fields_; }
  Pos pos() const { return pos_; }

  const Node& node(std::size_t i) const;
  const std::string& name(std::size_t i) const;
  std::int64_t integer(std::size_t i) const;
  const Ty& type(std::size_t i) const;

  friend bool operator==(const Node& a, const Node& b);

 private:
  Node() = default;
  const Descriptor* desc_ = nullptr;
  const CtorSig* sig_ = nullptr;
  Cls cls_ = Cls::Exp;
  std::string ctor_;
  Payload ext_;
  std::vector<Field> fields_;
  Pos pos_;
};

bool same_tree(const NodePtr& a, const NodePtr& b);

/// Rebuilds `n` under `target`, asking `payload` for every slot.
template <class F>
NodePtr retag(const Node& n, const Descriptor& target, F&& payload);

/// Typed (or any) tree to the plain descriptor with every payload unit.
NodePtr strip(const Node& n);

/// Convenience constructors over one descriptor.
class Builder {
 public:
  explicit Builder(const Descriptor& d) : d_(&d) {}

  NodePtr lit(std::int64_t i, Payload ext = {}) const;
  NodePtr var(std::string x, Payload ext = {}) const;
  NodePtr ann(NodePtr m, Ty t, Payload ext = {}) const;
  NodePtr abs(std::string x, NodePtr n, Payload ext = {}) const;
  NodePtr app(NodePtr l, NodePtr m, Payload ext = {}) const;
  NodePtr let(NodePtr d, NodePtr n, Payload ext = {}) const;
  NodePtr tup(NodePtr m, NodePtr n) const;
  NodePtr val(std::string x, NodePtr m, Payload ext = {}) const;
  NodePtr prj(std::string x, std::string y, NodePtr l) const;
  NodePtr int_ty(Payload ext = {}) const;
  NodePtr arr_ty(NodePtr a, NodePtr b, Payload ext = {}) const;
  NodePtr prod_ty(NodePtr a, NodePtr b) const;

  const Descriptor& descriptor() const { return *d_; }

 private:
  const Descriptor* d_;
};

/// Typ-class nodes and Ty values are two views of one type.
Ty to_ty(const Node& n);
NodePtr from_ty(const Ty& t, const Descriptor& d = plain_descriptor());

template <class F>
NodePtr retag(const Node& n, const Descriptor& target, F&& payload) {
  std::vector<Field> fields;
  fields.reserve(n.fields().size());
  for (const auto& f : n.fields()) {
    if (const auto* c = std::get_if<NodePtr>(&f))
      fields.emplace_back(retag(**c, target, payload));
    else
      fields.push_back(f);
  }
  return Node::make(target, n.cls(), n.ctor(), payload(n), std::move(fields), n.pos());
}

}  // namespace growlang
