#include "growlang/ty.hpp"

#include <algorithm>
#include <stdexcept>

namespace growlang {

Ty Ty::int_() { return Ty{}; }

Ty Ty::arrow(Ty a, Ty b) {
  Ty t;
  t.kind_ = Kind::Arrow;
  t.left_ = std::make_shared<const Ty>(std::move(a));
  t.right_ = std::make_shared<const Ty>(std::move(b));
  return t;
}

Ty Ty::prod(Ty a, Ty b) {
  Ty t = arrow(std::move(a), std::move(b));
  t.kind_ = Kind::Prod;
  return t;
}

const Ty& Ty::left() const {
  if (!left_) throw std::logic_error("Int has no components");
  return *left_;
}

const Ty& Ty::right() const {
  if (!right_) throw std::logic_error("Int has no components");
  return *right_;
}

int Ty::depth() const {
  if (is_int()) return 1;
  return 1 + std::max(left_->depth(), right_->depth());
}

bool operator==(const Ty& a, const Ty& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.is_int()) return true;
  if (a.left_ != b.left_ && !(*a.left_ == *b.left_)) return false;
  return a.right_ == b.right_ || *a.right_ == *b.right_;
}

const Ty* TypeEnv::lookup(const std::string& name) const {
  for (const auto& [x, t] : entries_)
    if (x == name) return &t;
  return nullptr;
}

TypeEnv TypeEnv::push(std::string name, Ty ty) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + 1);
  out.emplace_back(std::move(name), std::move(ty));
  out.insert(out.end(), entries_.begin(), entries_.end());
  return TypeEnv(std::move(out));
}

TypeEnv TypeEnv::concat(const TypeEnv& rest) const {
  std::vector<Entry> out = entries_;
  out.insert(out.end(), rest.entries_.begin(), rest.entries_.end());
  return TypeEnv(std::move(out));
}

PayloadShape shape_of(const Payload& p) {
  switch (p.index()) {
    case 0: return PayloadShape::Unit;
    case 1: return PayloadShape::Type;
    case 2: return PayloadShape::Env;
    default: return PayloadShape::Span;
  }
}

std::string shape_name(PayloadShape s) {
  switch (s) {
    case PayloadShape::Unit: return "unit";
    case PayloadShape::Type: return "type";
    case PayloadShape::Env: return "environment";
    case PayloadShape::Span: return "source span";
  }
  return "?";
}

}  // namespace growlang
