#include <doctest.h>

#include "growlang/syntax.hpp"

using namespace growlang;

namespace {

NodePtr exp(const std::string& text) {
  auto r = parse_exp(text);
  if (!r.ok()) FAIL(format_error(r.errors.front()));
  return *r.value;
}

const Builder P(plain_descriptor());
const Ty I = Ty::int_();

}  // namespace

TEST_CASE("lambda") {
  CHECK(*exp("\\x. x") == *P.abs("x", P.var("x")));
  CHECK(*exp("λx.x") == *P.abs("x", P.var("x")));
  CHECK(std::holds_alternative<Unit>(exp("\\x. x")->ext()));
}

TEST_CASE("let of a value") {
  CHECK(*exp("let x := 1 in x") == *P.let(P.val("x", P.lit(1)), P.var("x")));
}

TEST_CASE("pair uses the added constructor") {
  auto t = exp("(1, 2)");
  CHECK(*t == *P.tup(P.lit(1), P.lit(2)));
  CHECK(t->is_new());
}

TEST_CASE("precedence") {
  CHECK(*exp("f x y") == *P.app(P.app(P.var("f"), P.var("x")), P.var("y")));
  CHECK(*exp("\\x. f x :: Int") == *P.abs("x", P.ann(P.app(P.var("f"), P.var("x")), I)));
  CHECK(*exp("(\\x. x) :: Int -> Int") == *P.ann(P.abs("x", P.var("x")), Ty::arrow(I, I)));
  CHECK(*exp("let (a, b) := p in a b") == *P.let(P.prj("a", "b", P.var("p")), P.app(P.var("a"), P.var("b"))));
  CHECK(*exp("f (-3)") == *P.app(P.var("f"), P.lit(-3)));
  CHECK(*exp("let x := \\y. y in x") == *P.let(P.val("x", P.abs("y", P.var("y"))), P.var("x")));
}

TEST_CASE("types") {
  auto t = [](const std::string& s) {
    auto r = parse_ty(s);
    REQUIRE(r.ok());
    return *r.value;
  };
  CHECK(t("Int") == I);
  CHECK(t("Int -> Int -> Int") == Ty::arrow(I, Ty::arrow(I, I)));
  CHECK(t("(Int -> Int) -> Int") == Ty::arrow(Ty::arrow(I, I), I));
  CHECK(t("Int * Int -> Int") == Ty::prod(I, Ty::arrow(I, I)));
  CHECK(t("(Int) → (Int) × Int") == Ty::arrow(I, Ty::prod(I, I)));
}

TEST_CASE("declarations") {
  auto r = parse_dec("(x, y) := (1, 2)");
  REQUIRE(r.ok());
  CHECK(**r.value == *P.prj("x", "y", P.tup(P.lit(1), P.lit(2))));
}

TEST_CASE("syntax errors carry positions") {
  auto r = parse_exp("\\x x");
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().line == 1);
  CHECK(r.errors.front().column == 4);
  auto two = parse_exp("1 +\n 2");
  REQUIRE_FALSE(two.ok());
  CHECK(format_error(two.errors.front()).rfind("1:3: ", 0) == 0);
  CHECK_FALSE(parse_exp("").ok());
  CHECK_FALSE(parse_exp("let x := 1").ok());
  CHECK_FALSE(parse_exp("(1, 2, 3)").ok());
  CHECK_FALSE(parse_exp("x :: Bool").ok());
  CHECK_FALSE(parse_exp("let in := 1 in 2").ok());
  CHECK_FALSE(parse_ty("Int ->").ok());
}

TEST_CASE("comments are skipped") {
  CHECK(*exp("-- expect: Int\n1 -- trailing\n") == *P.lit(1));
}

TEST_CASE("printer follows the concatenation scheme") {
  CHECK(print_ty(Ty::arrow(I, I)) == "(Int) → Int");
  CHECK(print_ty(Ty::prod(Ty::arrow(I, I), I)) == "((Int) → Int) × Int");
  CHECK(print_exp(*P.abs("x", P.var("x"))) == "λx.x");
  CHECK(print_exp(*P.tup(P.lit(1), P.lit(2))) == "(1 , 2)");
  CHECK(print_exp(*P.lit(-4)) == "-4");
  CHECK(print_exp(*P.ann(P.var("m"), I)) == "(m) :: (Int)");
  CHECK(print_exp(*P.app(P.var("l"), P.var("m"))) == "(l) (m)");
  CHECK(print_exp(*P.let(P.val("x", P.lit(1)), P.var("x"))) == "let x := 1 in x");
  CHECK(print_dec(*P.prj("x", "y", P.var("l"))) == "(x , y) := l");
  CHECK(print_typ(*P.arr_ty(P.int_ty(), P.prod_ty(P.int_ty(), P.int_ty()))) == "(Int) → (Int) × Int");
}

TEST_CASE("handlers decide how added constructors print") {
  PrintHandlers h = default_handlers();
  h.exp = [](const Node& n, const PrintHandlers& hs) { return "<" + print_exp(n.node(0), hs) + "|" + print_exp(n.node(1), hs) + ">"; };
  CHECK(print_exp(*P.app(P.var("f"), P.tup(P.lit(1), P.lit(2))), h) == "(f) (<1|2>)");
  PrintHandlers none;
  CHECK(print_exp(*P.lit(3), none) == "3");
  CHECK_THROWS_AS(print_exp(*P.tup(P.lit(1), P.lit(2)), none), xdt::InvalidInput);
}

TEST_CASE("printer output parses back") {
  const std::vector<NodePtr> trees{
      P.abs("x", P.ann(P.var("x"), I)),
      P.ann(P.abs("x", P.var("x")), Ty::arrow(I, Ty::prod(I, I))),
      P.app(P.app(P.var("f"), P.lit(-1)), P.tup(P.lit(1), P.ann(P.lit(2), I))),
      P.let(P.prj("a", "b", P.var("p")), P.let(P.val("c", P.abs("z", P.var("z"))), P.var("c"))),
  };
  for (const auto& t : trees) {
    auto back = parse_exp(print_exp(*t));
    REQUIRE(back.ok());
    CHECK(**back.value == *t);
  }
}
