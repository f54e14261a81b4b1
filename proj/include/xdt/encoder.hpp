#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xdt/core.hpp"
#include "xdt/parser.hpp"

namespace xdt {

enum class EncodingMode { Compact, Naive };

/// An extensible declaration after translation to ordinary ADT form.
///
/// Compact: one higher-order parameter `xi`, each constructor's slot is
/// `xi "<label>"`. Naive: one ordinary slot variable per label. In both, the
/// slot field comes first and a terminal constructor named after the type
/// carries the new-constructor slot.
struct EncodedDataDecl {
  Ident name;
  EncodingMode mode = EncodingMode::Compact;
  /// Compact mode only.
  std::optional<Ident> xiParam;
  /// Naive mode only: this declaration's slot variables, one per slot label.
  std::vector<Ident> slotParams;
  /// Naive mode only: the slot variables of the whole mutual group, in group
  /// order. This is what the header binds and what every recursive
  /// occurrence of a group member is applied to.
  std::vector<Ident> sharedSlotParams;
  std::vector<Ident> params;
  /// Non-terminal constructors with rewritten fields, slot field first.
  std::vector<ConstructorDecl> constructors;
  ConstructorDecl terminalConstructor;

  /// Type variables bound by the `data` header, in order.
  std::vector<Ident> header_params() const;
};

/// Rewrites extensible heads `T as` to `T xi as`, recursively. Throws
/// InvalidInput on `<+>` nodes. Already-housed applications are left alone.
TypeExpr house_type(const TypeExpr& t, const Ident& xi, const std::set<Ident>& extensibleNames);

EncodedDataDecl encode_naive(const ExtensibleDataDecl& decl, const Program& p);
EncodedDataDecl encode_compact(const ExtensibleDataDecl& decl, const Program& p);
EncodedDataDecl encode(const ExtensibleDataDecl& decl, const Program& p, EncodingMode mode);

/// `base` if unused, otherwise `base` followed by the smallest positive
/// decimal suffix not in `scope`.
Ident fresh_name(const Ident& base, const std::set<Ident>& scope);

/// Moves the extension argument of a `<+>` fragment to the first argument
/// position: `C a1 .. an <+> e` becomes `C e a1 .. an`.
Term rewrite_oplus(const OplusFragment& frag);

/// Same rewrite on types appearing in declarations: `T a1 .. an <+> e`
/// becomes `T e a1 .. an`.
TypeExpr rewrite_oplus_type(const TypeExpr& t);

struct TypeAlias {
  Ident name;
  std::vector<Ident> params;
  TypeExpr rhs;
};

struct FamilyInstance {
  Label label;
  std::vector<ConstructorDecl> payloadConstructors;
};

/// `pattern publicName x1..xm y1..yk = underlying (payload x1..xm) y1..yk`
struct PatternSynonym {
  Ident publicName;
  Ident underlyingConstructor;
  Ident payloadConstructor;
  int extArgCount = 0;
  int ordinaryArgCount = 0;

  int arity() const { return extArgCount + ordinaryArgCount; }
};

/// An extension declaration lowered to alias + data family instances +
/// pattern synonyms.
struct LoweredExtension {
  Ident extensionName;
  TypeAlias alias;
  Ident familyName;
  /// Type parameters of the family, before the label index.
  std::vector<Ident> familyParams;
  /// Exactly one member of each extension group declares the family.
  bool ownsFamily = true;
  /// Slot-label order of the base.
  std::vector<FamilyInstance> instances;
  /// Clauses in declaration order, then new constructors.
  std::vector<PatternSynonym> synonyms;
};

/// Lowers every extension of a validated program, in source order. Names
/// are generated deterministically across the whole program.
std::vector<LoweredExtension> lower_all(const Program& p);
LoweredExtension lower_extension(const ExtensionDecl& ext, const Program& p);

/// Partition of extension names into groups that share one data family.
std::vector<std::vector<Ident>> extension_groups(const Program& p);

}  // namespace xdt
