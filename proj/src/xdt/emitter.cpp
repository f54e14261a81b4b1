#include "xdt/emitter.hpp"

#include <sstream>

namespace xdt {
namespace {

std::string pad(const RenderConfig& cfg) { return std::string(static_cast<std::size_t>(cfg.indent), ' '); }

std::string render_args(const std::string& head, const std::vector<TypeExpr>& args) {
  std::string out = head;
  for (const auto& a : args) out += " " + render_type(a, true);
  return out;
}

std::string render_constructor(const ConstructorDecl& c) { return render_args(c.name.str(), c.fields); }

std::string join_idents(const std::vector<Ident>& xs) {
  std::string out;
  for (const auto& x : xs) out += " " + x.str();
  return out;
}

void emit_alternatives(std::ostringstream& os, const std::vector<std::string>& alts,
                       const RenderConfig& cfg) {
  for (std::size_t i = 0; i < alts.size(); ++i)
    os << pad(cfg) << (i == 0 ? "= " : "| ") << alts[i] << '\n';
}

void require_haskell(const RenderConfig& cfg, const char* what) {
  if (cfg.backend != Backend::Haskell)
    throw InvalidInput(std::string(what) + " is only rendered by the haskell backend");
}

}  // namespace

std::string render_type(const TypeExpr& t, bool atomic) {
  auto wrap = [&](std::string s, bool applied) { return atomic && applied ? "(" + s + ")" : s; };
  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TypeExpr::Var>) {
          return wrap(render_args(n.name.str(), n.args), !n.args.empty());
        } else if constexpr (std::is_same_v<N, TypeExpr::Con>) {
          return wrap(render_args(n.head.str(), n.args), !n.args.empty());
        } else if constexpr (std::is_same_v<N, TypeExpr::Oplus>) {
          return wrap(render_type(*n.base) + " <+> " + render_type(*n.extension), true);
        } else if constexpr (std::is_same_v<N, TypeExpr::List>) {
          return "[" + render_type(*n.element) + "]";
        } else if constexpr (std::is_same_v<N, TypeExpr::Tuple>) {
          std::string out = "(";
          for (std::size_t i = 0; i < n.elements.size(); ++i) {
            if (i) out += ", ";
            out += render_type(n.elements[i]);
          }
          return out + ")";
        } else {
          return "\"" + n.label.str() + "\"";
        }
      },
      t.node);
}

std::string emit_encoded(const EncodedDataDecl& d, const RenderConfig& cfg) {
  require_haskell(cfg, "an encoded declaration");
  std::ostringstream os;
  os << "data " << d.name.str() << join_idents(d.header_params()) << '\n';
  std::vector<std::string> alts;
  for (const auto& c : d.constructors) alts.push_back(render_constructor(c));
  alts.push_back(render_constructor(d.terminalConstructor));
  emit_alternatives(os, alts, cfg);
  return os.str();
}

std::string emit_lowered(const LoweredExtension& l, const RenderConfig& cfg) {
  require_haskell(cfg, "a lowered extension");
  std::ostringstream os;
  os << "type " << l.alias.name.str() << join_idents(l.alias.params) << " = "
     << render_type(l.alias.rhs) << '\n';

  const std::string family = l.familyName.str() + join_idents(l.familyParams);
  if (l.ownsFamily) os << "\ndata family " << family << " (label :: Symbol) :: *\n";

  if (!l.instances.empty()) os << '\n';
  for (const auto& inst : l.instances) {
    os << "data instance " << family << " \"" << inst.label.str() << '"';
    if (inst.payloadConstructors.size() == 1) {
      os << " = " << render_constructor(inst.payloadConstructors.front()) << '\n';
    } else {
      os << '\n';
      std::vector<std::string> alts;
      for (const auto& c : inst.payloadConstructors) alts.push_back(render_constructor(c));
      emit_alternatives(os, alts, cfg);
    }
  }

  if (!l.synonyms.empty()) os << '\n';
  for (const auto& s : l.synonyms) {
    std::string xs, ys;
    for (int i = 1; i <= s.extArgCount; ++i) xs += " x" + std::to_string(i);
    for (int i = 1; i <= s.ordinaryArgCount; ++i) ys += " y" + std::to_string(i);
    std::string payload = s.payloadConstructor.str() + xs;
    if (s.extArgCount > 0) payload = "(" + payload + ")";
    os << "pattern " << s.publicName.str() << xs << ys << " = " << s.underlyingConstructor.str() << ' '
       << payload << ys << '\n';
  }
  return os.str();
}

std::string emit_dsl(const Program& p, const RenderConfig& cfg) {
  std::ostringstream os;
  bool first = true;
  auto separate = [&] {
    if (!first) os << '\n';
    first = false;
  };
  for (const auto& d : p.extensibles()) {
    separate();
    os << "extensible data " << d.name.str() << join_idents(d.params) << '\n';
    std::vector<std::string> alts;
    for (const auto& c : d.constructors) alts.push_back(render_constructor(c));
    emit_alternatives(os, alts, cfg);
  }
  for (const auto& e : p.extensions()) {
    separate();
    os << (e.partial ? "partial " : "") << "data " << e.name.str() << join_idents(e.params)
       << " extends " << e.baseName.str() << join_idents(e.baseArgs) << '\n';
    std::vector<std::string> alts;
    for (const auto& c : e.newConstructors) alts.push_back(render_constructor(c));
    for (const auto& c : e.extendedConstructors) {
      std::string alt = c.newName.str() + " extends " + c.baseConstructor.str() + " by";
      alt += c.addedFields.empty() ? " empty" : render_args("", c.addedFields);
      alts.push_back(std::move(alt));
    }
    emit_alternatives(os, alts, cfg);
  }
  return os.str();
}

std::string emit_module(const Program& p, EncodingMode mode, const RenderConfig& cfg) {
  if (cfg.backend == Backend::DslEcho) return emit_dsl(p, cfg);
  std::ostringstream os;
  os << "{-# LANGUAGE DataKinds, KindSignatures, PatternSynonyms, TypeFamilies #-}\n";
  // Extensions lower onto the compact encoding only.
  const bool lower = mode == EncodingMode::Compact && !p.extensions().empty();
  if (lower) os << "\nimport GHC.TypeLits (Symbol)\n";
  for (const auto& d : p.extensibles()) {
    if (!d.extensible) continue;
    os << '\n' << emit_encoded(encode(d, p, mode), cfg);
  }
  if (lower)
    for (const auto& l : lower_all(p)) os << '\n' << emit_lowered(l, cfg);
  return os.str();
}

}  // namespace xdt
