#include <doctest.h>

#include "xdt/parser.hpp"

using namespace xdt;

namespace {

DiagCode only_code(const Result<Program>& r) {
  REQUIRE_FALSE(r.ok());
  REQUIRE(!r.diagnostics.empty());
  return r.diagnostics.front().code;
}

}  // namespace

TEST_CASE("extensible declaration") {
  auto r = parse_program("extensible data TypX = IntX | Arr TypX TypX");
  REQUIRE(r.ok());
  REQUIRE(r->extensibles().size() == 1);
  const auto& d = r->extensibles().front();
  CHECK(d.name.str() == "TypX");
  CHECK(d.extensible);
  REQUIRE(d.constructors.size() == 2);
  CHECK(d.constructors[0].name.str() == "IntX");
  CHECK(d.constructors[0].fields.empty());
  CHECK(d.constructors[1].fields == std::vector<TypeExpr>{TypeExpr::con(Ident("TypX")), TypeExpr::con(Ident("TypX"))});
  CHECK(r->extensions().empty());
}

TEST_CASE("empty input") {
  auto r = parse_program("");
  REQUIRE(r.ok());
  CHECK(r->empty());
  CHECK(r.diagnostics.empty());
  auto c = parse_program("  -- only a comment\n\n");
  REQUIRE(c.ok());
  CHECK(c->empty());
}

TEST_CASE("extension declaration with a new constructor and an empty clause") {
  auto r = parse_program("data D2 extends TypX = Prod TypX TypX | IntX2 extends IntX by empty");
  REQUIRE(r.ok());
  REQUIRE(r->extensions().size() == 1);
  const auto& e = r->extensions().front();
  CHECK(e.name.str() == "D2");
  CHECK(e.baseName.str() == "TypX");
  REQUIRE(e.newConstructors.size() == 1);
  CHECK(e.newConstructors[0].name.str() == "Prod");
  CHECK(e.newConstructors[0].fields.size() == 2);
  REQUIRE(e.extendedConstructors.size() == 1);
  CHECK(e.extendedConstructors[0].newName.str() == "IntX2");
  CHECK(e.extendedConstructors[0].baseConstructor.str() == "IntX");
  CHECK(e.extendedConstructors[0].addedFields.empty());
  CHECK_FALSE(e.partial);
}

TEST_CASE("parameters, base arguments, partial marker and field types") {
  auto r = parse_program(
      "extensible data Box a b = Box1 a [b] (a, Maybe b)\n"
      "partial data Wrap p q r extends Box q p = WrapNew (Box p q <+> r) | W1 extends Box1 by Integer r\n");
  REQUIRE(r.ok());
  const auto& b = r->extensibles().front();
  CHECK(b.params == std::vector<Ident>{Ident("a"), Ident("b")});
  const auto& fs = b.constructors[0].fields;
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == TypeExpr::var(Ident("a")));
  CHECK(fs[1] == TypeExpr::list(TypeExpr::var(Ident("b"))));
  CHECK(fs[2] == TypeExpr::tuple({TypeExpr::var(Ident("a")),
                                  TypeExpr::con(Ident("Maybe"), {TypeExpr::var(Ident("b"))})}));
  const auto& e = r->extensions().front();
  CHECK(e.partial);
  CHECK(e.params.size() == 3);
  CHECK(e.baseArgs == std::vector<Ident>{Ident("q"), Ident("p")});
  REQUIRE(e.newConstructors.size() == 1);
  const auto* o = e.newConstructors[0].fields[0].as<TypeExpr::Oplus>();
  REQUIRE(o != nullptr);
  CHECK(*o->base == TypeExpr::con(Ident("Box"), {TypeExpr::var(Ident("p")), TypeExpr::var(Ident("q"))}));
  CHECK(*o->extension == TypeExpr::var(Ident("r")));
  CHECK(e.extendedConstructors[0].addedFields.size() == 2);
}

TEST_CASE("declarations end at the next declaration keyword") {
  auto r = parse_program("extensible data A = A1 extensible data B = B1 | B2 data C extends A = C1 extends A1 by empty");
  REQUIRE(r.ok());
  CHECK(r->extensibles().size() == 2);
  CHECK(r->extensions().size() == 1);
}

TEST_CASE("source order is kept") {
  auto r = parse_program("extensible data Z = Z1\nextensible data A = A1\n");
  REQUIRE(r.ok());
  CHECK(r->extensibles()[0].name.str() == "Z");
  CHECK(r->extensibles()[1].name.str() == "A");
}

TEST_CASE("lexical errors") {
  auto r = parse_program("extensible data T = A\n  | B ; C");
  CHECK(only_code(r) == DiagCode::LexicalError);
  REQUIRE(r.diagnostics.front().location.has_value());
  CHECK(r.diagnostics.front().location->line == 2);
  CHECK(r.diagnostics.front().location->column == 7);
  CHECK(only_code(parse_program("extensible data T = A | Bé")) == DiagCode::LexicalError);
  CHECK(only_code(parse_program("extensible data T = _A")) == DiagCode::LexicalError);
}

TEST_CASE("unexpected tokens") {
  CHECK(only_code(parse_program("extensible data t = A")) == DiagCode::UnexpectedToken);
  CHECK(only_code(parse_program("data T = A")) == DiagCode::UnexpectedToken);
  CHECK(only_code(parse_program("extensible data T = A | | B")) == DiagCode::UnexpectedToken);
  CHECK(only_code(parse_program("data U extends T = C extends D by")) != DiagCode::LexicalError);
  CHECK(only_code(parse_program("extensible data T = A (B <+> x <+> y)")) == DiagCode::OplusOnNonExtensible);
}

TEST_CASE("unterminated declarations") {
  CHECK(only_code(parse_program("extensible data T =")) == DiagCode::UnterminatedDecl);
  CHECK(only_code(parse_program("extensible data")) == DiagCode::UnterminatedDecl);
  auto r = parse_program("data U extends T = C extends D\nextensible data V = V1");
  CHECK(only_code(r) == DiagCode::UnterminatedDecl);
}

TEST_CASE("recovery reports errors from several declarations") {
  auto r = parse_program("extensible data T =\nextensible data U = U1 | \nextensible data V = V1");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.size() == 2);
}

TEST_CASE("every parse diagnostic lies inside the input") {
  const std::vector<std::string> bad{"extensible data T =", "data", "extensible data T = A | Bé", "extensible data T = A )",
                                     "data U extends T = C extends", "extensible data T = [A"};
  for (const auto& text : bad) {
    auto r = parse_program(text);
    REQUIRE_FALSE(r.ok());
    for (const auto& d : r.diagnostics) {
      REQUIRE(d.location.has_value());
      CHECK(d.location->begin <= d.location->end);
      CHECK(d.location->end <= text.size());
      CHECK(d.location->line >= 1);
    }
  }
}

TEST_CASE("parsing is deterministic") {
  const std::string text = "extensible data T a = A a | B (T a)\ndata U extends T Integer = A1 extends A by empty";
  auto a = parse_program(text);
  auto b = parse_program(text);
  CHECK(a.ok() == b.ok());
  CHECK(a.diagnostics.size() == b.diagnostics.size());
}

TEST_CASE("fragments: constructor application") {
  auto r = parse_fragment("LitX 42 <+> (SrcSpan 0 2)", FragmentKind::ConApp);
  REQUIRE(r.ok());
  CHECK(r->head.str() == "LitX");
  CHECK(r->ordinaryArgs == std::vector<Term>{Term::integer("42")});
  CHECK(r->extensionArg == Term::apply("SrcSpan", {Term::integer("0"), Term::integer("2")}));
}

TEST_CASE("fragments: type") {
  auto r = parse_fragment("TypX <+> xi", FragmentKind::Type);
  REQUIRE(r.ok());
  CHECK(r->head.str() == "TypX");
  CHECK(r->ordinaryArgs.empty());
  CHECK(r->extensionArg == Term::name("xi"));
}

TEST_CASE("fragments: pattern") {
  auto r = parse_fragment("LitX i <+> _", FragmentKind::Pattern);
  REQUIRE(r.ok());
  CHECK(r->head.str() == "LitX");
  CHECK(r->ordinaryArgs == std::vector<Term>{Term::name("i")});
  CHECK(r->extensionArg.kind == Term::Kind::Wildcard);
}

TEST_CASE("fragment errors") {
  CHECK_FALSE(parse_fragment("LitX 42", FragmentKind::ConApp).ok());
  CHECK_FALSE(parse_fragment("LitX 42 <+>", FragmentKind::ConApp).ok());
  CHECK_FALSE(parse_fragment("TypX 3 <+> xi", FragmentKind::Type).ok());
  CHECK_FALSE(parse_fragment("LitX _ <+> x", FragmentKind::ConApp).ok());
  CHECK_FALSE(parse_fragment("LitX i <+> \"s\"", FragmentKind::Pattern).ok());
  auto nested = parse_fragment("LitX 1 <+> a <+> b", FragmentKind::ConApp);
  REQUIRE_FALSE(nested.ok());
  auto missing = parse_fragment("LitX 42", FragmentKind::ConApp);
  CHECK(missing.diagnostics.front().code == DiagCode::UnexpectedToken);
}
