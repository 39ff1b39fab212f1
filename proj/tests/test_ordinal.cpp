#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trasdim/ordinal.hpp"

using trasdim::add;
using trasdim::Ordinal;
using trasdim::parse_ordinal;

namespace {

Ordinal from_cnf(const oracles::Cnf& c) {
  std::vector<std::uint64_t> coeffs;
  for (const auto& [p, co] : c.terms) {
    if (coeffs.size() <= p) coeffs.resize(p + 1, 0);
    coeffs[p] = co;
  }
  return Ordinal::from_coefficients(coeffs);
}

oracles::Cnf to_cnf(const Ordinal& a) {
  oracles::Cnf c;
  const auto& v = a.coefficients();
  for (int p = static_cast<int>(v.size()) - 1; p >= 0; --p)
    if (v[p]) c.terms.emplace_back(p, v[p]);
  return c;
}

Ordinal random_ordinal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<std::uint64_t> coeff(0, 5);
  std::vector<std::uint64_t> coeffs(len(rng));
  for (auto& c : coeffs) c = coeff(rng);
  return Ordinal::from_coefficients(coeffs);
}

}  // namespace

TEST_CASE("zero, naturals and infinity basics") {
  const Ordinal zero;
  CHECK(zero.is_zero());
  CHECK(zero.is_nat());
  CHECK(zero.as_nat() == 0);
  CHECK(zero.degree() == -1);

  const Ordinal four = Ordinal::nat(4);
  CHECK(four.is_nat());
  CHECK(four.as_nat() == 4);
  CHECK(four.degree() == 0);
  CHECK(four.coeff(0) == 4);
  CHECK(four.coeff(3) == 0);

  const Ordinal w = Ordinal::omega();
  CHECK(!w.is_nat());
  CHECK(w.degree() == 1);
  CHECK(w.limit_part() == w);
  CHECK(Ordinal::nat(7).limit_part().is_zero());
  CHECK_THROWS_AS(w.as_nat(), std::logic_error);

  const Ordinal inf = Ordinal::infinity();
  CHECK(inf.is_infinity());
  CHECK(!inf.is_zero());
  CHECK(!inf.is_nat());
  CHECK_THROWS_AS(inf.degree(), std::logic_error);
}

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(Ordinal::from_coefficients({0, 0, 0}) == Ordinal());
  CHECK(Ordinal::from_coefficients({3, 0, 0}) == Ordinal::nat(3));
  CHECK(Ordinal::from_coefficients({0, 1, 0}) == Ordinal::omega());
  CHECK(Ordinal::from_coefficients({5, 2, 7}).degree() == 2);
}

TEST_CASE("addition absorbs low left terms") {
  CHECK(add(Ordinal::nat(3), Ordinal::omega()) == Ordinal::omega());
  CHECK(add(Ordinal::omega(), Ordinal::nat(3)) ==
        Ordinal::from_coefficients({3, 1}));
  CHECK(add(Ordinal::from_coefficients({4, 2}), Ordinal::from_coefficients({0, 3})) ==
        Ordinal::from_coefficients({0, 5}));
  CHECK(add(Ordinal::from_coefficients({0, 0, 1}), Ordinal::omega()) ==
        Ordinal::from_coefficients({0, 1, 1}));
  CHECK(add(Ordinal::nat(0), Ordinal::nat(0)).is_zero());
}

TEST_CASE("addition matches the formal-sum reference") {
  std::mt19937_64 rng(20260815);
  for (int i = 0; i < 4000; ++i) {
    const Ordinal a = random_ordinal(rng);
    const Ordinal b = random_ordinal(rng);
    const Ordinal expect = from_cnf(oracles::cnf_add(to_cnf(a), to_cnf(b)));
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(add(a, b) == expect);
  }
}

TEST_CASE("addition is associative and strictly monotone on the right") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_ordinal(rng);
    const Ordinal b = random_ordinal(rng);
    const Ordinal c = random_ordinal(rng);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    if (b < c) CHECK(add(a, b) < add(a, c));
    if (b == c) CHECK(add(a, b) == add(a, c));
    CHECK(add(a, b) >= b);
    CHECK(add(a, b) >= a);
  }
}

TEST_CASE("comparison matches the formal reference and is total") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = random_ordinal(rng);
    const Ordinal b = random_ordinal(rng);
    const int ref = oracles::cnf_compare(to_cnf(a), to_cnf(b));
    CHECK((a < b) == (ref < 0));
    CHECK((a == b) == (ref == 0));
    CHECK((a > b) == (ref > 0));
    CHECK(((a < b) ? 1 : 0) + ((a == b) ? 1 : 0) + ((a > b) ? 1 : 0) == 1);
  }
}

TEST_CASE("rendering is pinned and parsing round trips") {
  CHECK(Ordinal().to_string() == "0");
  CHECK(Ordinal::nat(4).to_string() == "4");
  CHECK(Ordinal::omega().to_string() == "w*1");
  CHECK(Ordinal::from_coefficients({4, 3, 1}).to_string() == "w^2*1 + w*3 + 4");
  CHECK(Ordinal::from_coefficients({0, 0, 2}).to_string() == "w^2*2");
  CHECK(Ordinal::infinity().to_string() == "INF");

  CHECK(parse_ordinal("w") == Ordinal::omega());
  CHECK(parse_ordinal("w^3") == Ordinal::from_coefficients({0, 0, 0, 1}));
  CHECK(parse_ordinal("4 + w") == Ordinal::from_coefficients({4, 1}));
  CHECK(parse_ordinal(" INF ") == Ordinal::infinity());
  CHECK(parse_ordinal("0") == Ordinal());

  std::mt19937_64 rng(999);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = random_ordinal(rng);
    CHECK(parse_ordinal(a.to_string()) == a);
  }
  CHECK(parse_ordinal(Ordinal::infinity().to_string()) == Ordinal::infinity());
}

TEST_CASE("parser rejects malformed literals") {
  CHECK_THROWS_AS(parse_ordinal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("w^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("w + w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("1 + 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("w^2*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("3 junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("INFx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordinal("18446744073709551616"), std::invalid_argument);
}

TEST_CASE("infinity compares above everything and add rejects it") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Ordinal a = random_ordinal(rng);
    CHECK(a < Ordinal::infinity());
    CHECK(Ordinal::infinity() > a);
  }
  CHECK(Ordinal::infinity() == Ordinal::infinity());
  CHECK_THROWS_AS(add(Ordinal::infinity(), Ordinal::nat(1)), std::invalid_argument);
  CHECK_THROWS_AS(add(Ordinal::nat(1), Ordinal::infinity()), std::invalid_argument);
}
