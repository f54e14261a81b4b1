#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace growlang {

/// Int, A -> B, or A x B. Immutable; children are shared.
class Ty {
 public:
  enum class Kind { Int, Arrow, Prod };

  static Ty int_();
  static Ty arrow(Ty a, Ty b);
  static Ty prod(Ty a, Ty b);

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  bool is_prod() const { return kind_ == Kind::Prod; }
  const Ty& left() const;
  const Ty& right() const;

  /// 1 for Int.
  int depth() const;

  friend bool operator==(const Ty& a, const Ty& b);

 private:
  Ty() = default;
  Kind kind_ = Kind::Int;
  std::shared_ptr<const Ty> left_;
  std::shared_ptr<const Ty> right_;
};

/// Ordered association list; lookup finds the first binding.
class TypeEnv {
 public:
  using Entry = std::pair<std::string, Ty>;

  TypeEnv() = default;
  TypeEnv(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit TypeEnv(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  const Ty* lookup(const std::string& name) const;
  TypeEnv push(std::string name, Ty ty) const;
  /// `this ++ rest`.
  TypeEnv concat(const TypeEnv& rest) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const TypeEnv&, const TypeEnv&) = default;

 private:
  std::vector<Entry> entries_;
};

struct SrcSpan {
  std::int64_t begins = 0;
  std::int64_t ends = 0;
  friend bool operator==(const SrcSpan&, const SrcSpan&) = default;
};

struct Unit {
  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Contents of one extension slot.
using Payload = std::variant<Unit, Ty, TypeEnv, SrcSpan>;

enum class PayloadShape { Unit, Type, Env, Span };

PayloadShape shape_of(const Payload& p);
std::string shape_name(PayloadShape s);

}  // namespace growlang
