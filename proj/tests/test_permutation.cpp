#include "doctest.h"
#include "spreadlab/errors.hpp"
#include "spreadlab/permutation.hpp"

using namespace spreadlab;

TEST_SUITE("permutation") {

TEST_CASE("identity and cycle parsing") {
  Permutation id(5);
  CHECK(id.is_identity());
  CHECK(id.cycle_string() == "()");

  auto p = Permutation::from_cycles(5, "(1,2,3,4,5)");
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(4) == 0);
  CHECK(p.element_order() == 5);
  CHECK(p.cycle_string() == "(1,2,3,4,5)");

  auto q = Permutation::from_cycles(6, "(1,2)(3,4)");
  CHECK(q.element_order() == 2);
  CHECK(q.cycle_string() == "(1,2)(3,4)");
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_images({1, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,4)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,2"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(4, "(1,2)(2,3)"), ParseError);
}

TEST_CASE("composition applies left factor first") {
  auto a = Permutation::from_cycles(3, "(1,2)");
  auto b = Permutation::from_cycles(3, "(2,3)");
  auto ab = a * b;
  // 1 -> 2 under a, 2 -> 3 under b
  CHECK(ab.apply(0) == 2);
  CHECK((a * a).is_identity());
}

TEST_CASE("inverse, power, conjugation") {
  auto p = Permutation::from_cycles(7, "(1,2,3,4,5,6,7)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(7).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.power(3) == p * p * p);

  auto g = Permutation::from_cycles(7, "(1,2)");
  auto c = p.conjugated_by(g);
  CHECK(c == g.inverse() * p * g);
  CHECK(c.element_order() == p.element_order());
}

TEST_CASE("orders by cycle type") {
  CHECK(Permutation::from_cycles(6, "(1,2,3)(4,5)").element_order() == 6);
  CHECK(Permutation::from_cycles(6, "(1,2,3,4,5,6)").element_order() == 6);
  CHECK(Permutation::from_cycles(9, "(1,2)(3,4,5)(6,7,8,9)").element_order() == 12);
}

}  // TEST_SUITE
