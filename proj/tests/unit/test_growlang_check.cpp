#include <doctest.h>

#include <set>

#include "growlang/check.hpp"
#include "support/oracles.hpp"

using namespace growlang;

TEST_CASE("checker table") {
  const auto rows = oracle::checker_table();
  CHECK(rows.size() >= 20);
  for (const auto& r : rows) {
    CAPTURE(r.what);
    const bool got = r.term->cls() == Cls::Exp ? chk_exp(*r.term, r.env, r.ty) : chk_dec(*r.term, r.env, r.delta);
    CHECK(got == r.expected);
  }
}

TEST_CASE("checker table covers every clause and both fall-throughs") {
  std::set<std::string> expCtors, decCtors;
  bool expFalse = false, decFalse = false;
  for (const auto& r : oracle::checker_table()) {
    (r.term->cls() == Cls::Exp ? expCtors : decCtors).insert(r.term->ctor());
    if (r.what.find("falls through") != std::string::npos) (r.term->cls() == Cls::Exp ? expFalse : decFalse) = true;
  }
  CHECK(expCtors == std::set<std::string>{"Lit", "Var", "Ann", "Abs", "App", "Tup", "Let"});
  CHECK(decCtors == std::set<std::string>{"Val", "Prj"});
  CHECK(expFalse);
  CHECK(decFalse);
}

TEST_CASE("checker refuses trees of another descriptor") {
  Builder p(plain_descriptor());
  CHECK_THROWS_AS(chk_exp(*p.lit(1), {}, Ty::int_()), xdt::InvalidInput);
  CHECK_THROWS_AS(chk_dec(*p.val("x", p.lit(1)), {}, {}), xdt::InvalidInput);
}

TEST_CASE("checker never errors on mismatched shapes") {
  Builder t(typed_descriptor());
  const Ty I = Ty::int_();
  for (const Ty& ty : {I, Ty::arrow(I, I), Ty::prod(I, I)}) {
    CHECK_NOTHROW(chk_exp(*t.lit(1), {}, ty));
    CHECK_NOTHROW(chk_exp(*t.abs("x", t.var("x")), {}, ty));
    CHECK_NOTHROW(chk_exp(*t.tup(t.lit(1), t.lit(1)), {}, ty));
  }
}
