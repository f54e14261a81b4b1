#include <doctest.h>

#include "growlang/check.hpp"
#include "growlang/infer.hpp"
#include "growlang/syntax.hpp"
#include "support/generators.hpp"
#include "xdt/emitter.hpp"
#include "xdt/parser.hpp"

TEST_CASE("DSL echo round trip over generated programs") {
  testgen::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto p = testgen::random_program(rng);
    const auto text = xdt::emit_dsl(p);
    auto back = xdt::parse_program(text);
    REQUIRE_MESSAGE(back.ok(), text);
    CHECK_MESSAGE(*back.value == p, text);
  }
}

TEST_CASE("print then parse is the identity on generated trees") {
  testgen::Rng rng(7);
  for (int i = 0; i < 1500; ++i) {
    auto t = testgen::random_exp(rng, 6);
    const auto text = growlang::print_exp(*t);
    auto back = growlang::parse_exp(text);
    REQUIRE_MESSAGE(back.ok(), text);
    CHECK_MESSAGE(**back.value == *t, text);
  }
}

TEST_CASE("inference is sound for the checker on generated well-typed terms") {
  testgen::Rng rng(99);
  for (int i = 0; i < 1200; ++i) {
    const auto target = testgen::random_ty(rng, 3);
    auto t = testgen::random_well_typed(rng, target, 6);
    REQUIRE(testgen::tree_depth(*t) <= 6);
    auto r = growlang::infer_exp(*t);
    REQUIRE_MESSAGE(std::holds_alternative<growlang::InferredExp>(r), growlang::print_exp(*t));
    const auto& ok = std::get<growlang::InferredExp>(r);
    CHECK(growlang::chk_exp(*ok.tree, {}, ok.type));
    CHECK(*growlang::strip(*ok.tree) == *t);
    auto goal = growlang::infer_exp(*t, target);
    REQUIRE(std::holds_alternative<growlang::InferredExp>(goal));
    CHECK(growlang::chk_exp(*std::get<growlang::InferredExp>(goal).tree, {}, target));
  }
}
