#include <doctest.h>

#include "sylowlab/ffield.hpp"

using namespace sylowlab;
using Elem = Field::Elem;

TEST_CASE("field construction and modulus table") {
  Field f8(8);
  CHECK(f8.p() == 2);
  CHECK(f8.e() == 3);
  CHECK(f8.modulus() == std::vector<int>{1, 1, 0, 1});   // x^3+x+1

  Field f7(7);
  CHECK(f7.p() == 7);
  CHECK(f7.e() == 1);

  CHECK_THROWS_AS(Field(12), std::invalid_argument);   // not a prime power
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
}

TEST_CASE("irreducibility self-check") {
  CHECK(is_irreducible(2, {1, 1, 0, 1}));       // x^3+x+1
  CHECK(is_irreducible(5, {2, 4, 1}));          // x^2+4x+2 over GF(5)
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));    // x^2+1 = (x+1)^2 over GF(2)
  CHECK_FALSE(is_irreducible(3, {0, 0, 1}));    // x^2
}

TEST_CASE("arithmetic examples") {
  Field f8(8);
  Elem x = f8.element(2);     // x
  Elem x2 = f8.mul(x, x);     // x^2
  CHECK(f8.mul(x, x2) == f8.element(3));   // x^3 = x+1 mod x^3+x+1

  Field f9(9);
  Elem two = f9.element(2);
  CHECK(f9.inv(two) == two);   // 2*2 = 4 = 1 (mod 3)
  CHECK_THROWS_AS(f9.inv(f9.zero()), std::domain_error);
}

TEST_CASE("frobenius_power examples") {
  Field f8(8);
  Elem x = f8.element(2);
  // x^4 = x^2 + x mod x^3+x+1
  CHECK(f8.frobenius_power(x, 2) == f8.element(6));
  CHECK(f8.frobenius_power(x, 0) == x);
  CHECK(f8.frobenius_power(f8.zero(), 5) == f8.zero());
}

TEST_CASE("all_elements enumerates q distinct elements, zero first") {
  for (long q : {2l, 4l, 27l}) {
    Field f(q);
    auto elems = f.all_elements();
    CHECK(static_cast<long>(elems.size()) == q);
    CHECK(elems[0] == f.zero());
    for (long i = 0; i < q; ++i) CHECK(f.index_of(elems[i]) == i);
  }
}

TEST_CASE("field axioms, exhaustive for small q") {
  for (long q : {2l, 3l, 4l, 5l, 8l, 9l, 16l, 25l, 27l}) {
    CAPTURE(q);
    Field f(q);
    auto elems = f.all_elements();
    for (const Elem& a : elems) {
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.mul(a, f.one()) == a);
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (const Elem& b : elems) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (const Elem& c : elems) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  for (long q : {4l, 7l, 8l, 9l, 16l, 25l, 27l}) {
    Field f(q);
    Elem g = f.multiplicative_generator();
    Elem x = g;
    long ord = 1;
    while (x != f.one()) { x = f.mul(x, g); ++ord; }
    CHECK(ord == q - 1);
  }
}

TEST_CASE("frobenius is a field homomorphism") {
  for (long q : {4l, 8l, 9l, 25l, 27l}) {
    Field f(q);
    auto elems = f.all_elements();
    for (const Elem& a : elems)
      for (const Elem& b : elems) {
        CHECK(f.frobenius_power(f.add(a, b), 1) ==
              f.add(f.frobenius_power(a, 1), f.frobenius_power(b, 1)));
        CHECK(f.frobenius_power(f.mul(a, b), 1) ==
              f.mul(f.frobenius_power(a, 1), f.frobenius_power(b, 1)));
      }
  }
}

TEST_CASE("Suzuki twist: theta(theta(a)) = a^2 for q = 2^(2m+1)") {
  for (auto [q, m] : {std::pair<long, int>{8, 1}, {32, 2}}) {
    Field f(q);
    for (const Elem& a : f.all_elements()) {
      Elem t = f.frobenius_power(a, m + 1);
      CHECK(f.frobenius_power(t, m + 1) == f.mul(a, a));
    }
  }
}
