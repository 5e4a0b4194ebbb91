#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace tropdd;
using fixtures::sc;
using fixtures::vec;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), zero(0, 5);
  if (zero(rng) == 0) return Scalar::zero();
  return Scalar(Rational(num(rng)) / den(rng));
}

TVector random_vector(std::mt19937_64& rng, std::size_t d) {
  TVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = random_scalar(rng);
  return x;
}

}  // namespace

TEST_CASE("scalar parsing is exact") {
  CHECK(sc("-oo").is_zero());
  CHECK(sc("2.5") == Scalar(Rational(5) / 2));
  CHECK(sc("-0.125") == Scalar(Rational(-1) / 8));
  CHECK(sc("6/4") == Scalar(Rational(3) / 2));
  CHECK(sc("-3") == Scalar(-3));
  CHECK(sc(".5") == Scalar(Rational(1) / 2));
  CHECK(sc("010/03") == Scalar(Rational(10) / 3));
  for (const char* bad : {"", "-", "1/0", "1.", "abc", "1/-2", "--1", "oo", "1e3", "2/"})
    CHECK_THROWS_AS(parse_scalar(bad), std::invalid_argument);
}

TEST_CASE("scalar formatting round-trips") {
  for (const char* text : {"-oo", "0", "3", "-7", "5/2", "-1/3"}) CHECK(to_string(sc(text)) == text);
  CHECK(to_string(sc("2.5")) == "5/2");
}

TEST_CASE("-oo is below every rational") {
  CHECK(Scalar::zero() < Scalar(-1000000));
  CHECK(Scalar(-1) < Scalar(0));
  CHECK(Scalar::zero() == Scalar::zero());
  CHECK_THROWS_AS(Scalar::zero().value(), std::domain_error);
}

TEST_CASE("semiring laws on random scalars") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(tadd(a, b) == tadd(b, a));
    CHECK(tadd(tadd(a, b), c) == tadd(a, tadd(b, c)));
    CHECK(tadd(a, a) == a);
    CHECK(tmul(a, tmul(b, c)) == tmul(tmul(a, b), c));
    CHECK(tmul(a, b) == tmul(b, a));
    CHECK(tmul(a, tadd(b, c)) == tadd(tmul(a, b), tmul(a, c)));
    CHECK(tmul(a, Scalar::zero()).is_zero());
    CHECK(tadd(a, Scalar::zero()) == a);
    CHECK(tmul(a, Scalar::one()) == a);
  }
}

TEST_CASE("dot_argmax") {
  auto r = dot_argmax(vec("-oo 0 -oo"), vec("2 2 0"));
  CHECK(r.value == sc("2"));
  CHECK(r.argmax == IndexSet{1});

  r = dot_argmax(vec("-oo 0 0"), vec("2 2 0"));
  CHECK(r.value == sc("2"));
  CHECK(r.argmax == IndexSet{1});

  r = dot_argmax(vec("-oo -oo -oo"), vec("1 1 1"));
  CHECK(r.value.is_zero());
  CHECK(r.argmax.empty());

  r = dot_argmax(vec("2 -oo -oo"), vec("-2 1 0"));
  CHECK(r.value == sc("0"));
  CHECK(r.argmax == IndexSet{0});

  r = dot_argmax(vec("0 -1 -oo"), vec("1 2 5"));
  CHECK(r.argmax == IndexSet{0, 1});

  CHECK_THROWS_AS(dot_argmax(vec("0 0"), vec("0 0 0")), std::invalid_argument);
}

TEST_CASE("combine") {
  auto u = vec("1 -oo 3"), v = vec("0 0 0");
  CHECK(combine(Scalar::one(), u, Scalar::zero(), v) == u);
  CHECK(combine(sc("0"), vec("-2 1 0"), sc("2.5"), vec("-oo 0 -oo")) == vec("-2 2.5 0"));
  CHECK(combine(sc("0"), vec("2 2 0"), sc("2.5"), vec("-oo 0 -oo")) == vec("2 2.5 0"));
  CHECK_THROWS_AS(combine(Scalar::one(), u, Scalar::one(), vec("0")), std::invalid_argument);
}

TEST_CASE("support") {
  CHECK(support(vec("-oo 0 -oo")) == IndexSet{1});
  CHECK(support(vec("-2 1 0")) == IndexSet{0, 1, 2});
  CHECK(support(vec("-oo -oo")).empty());
}

TEST_CASE("normalize") {
  CHECK(normalize(vec("2 2 0")) == vec("0 0 -2"));
  CHECK(normalize(vec("-oo 0 -oo")) == vec("-oo 0 -oo"));
  CHECK(normalize(vec("-2 2.5 0")) == vec("0 4.5 2"));
  CHECK_THROWS_AS(normalize(vec("-oo -oo")), std::invalid_argument);
}

TEST_CASE("is_proportional") {
  CHECK(is_proportional(vec("2 2 0"), vec("0 0 -2")));
  CHECK_FALSE(is_proportional(vec("2 2 0"), vec("0 0 0")));
  CHECK(is_proportional(vec("-oo 0 -oo"), vec("-oo 5 -oo")));
  CHECK_FALSE(is_proportional(vec("-oo 0 -oo"), vec("0 5 -oo")));
  CHECK_THROWS_AS(is_proportional(vec("-oo -oo"), vec("0 0")), std::invalid_argument);
}

TEST_CASE("vector properties on random data") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + trial % 5;
    TVector row = random_vector(rng, d), u = random_vector(rng, d), v = random_vector(rng, d);
    Scalar alpha = random_scalar(rng), beta = random_scalar(rng);

    // Rows act linearly.
    CHECK(dot(row, combine(alpha, u, beta, v)) == tadd(tmul(alpha, dot(row, u)), tmul(beta, dot(row, v))));

    // Support of a combination.
    auto su = support(u), sv = support(v), sc_ = support(combine(alpha, u, beta, v));
    IndexSet uni;
    std::set_union(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(uni));
    CHECK(std::includes(uni.begin(), uni.end(), sc_.begin(), sc_.end()));
    if (alpha.is_finite() && beta.is_finite()) CHECK(sc_ == uni);

    if (u.is_zero() || v.is_zero()) continue;
    CHECK(normalize(normalize(u)) == normalize(u));
    CHECK(is_proportional(u, u));
    CHECK(is_proportional(u, v) == is_proportional(v, u));
    CHECK(is_proportional(u, v) == (normalize(u) == normalize(v)));
    Scalar lambda = Scalar(Rational(static_cast<long>(rng() % 21) - 10) / 3);
    CHECK(is_proportional(u, scale(lambda, u)));
    // Transitivity through a scaled copy.
    if (is_proportional(u, v)) CHECK(is_proportional(scale(lambda, u), v));
  }
}

TEST_CASE("inequality system membership") {
  auto sys = fixtures::running_example();
  CHECK(sys.contains(fixtures::g0));
  CHECK(sys.contains(fixtures::g1));
  CHECK(sys.contains(fixtures::g2));
  CHECK(sys.contains(fixtures::g3));
  CHECK_FALSE(sys.contains(vec("0 -oo -oo")));
  CHECK_THROWS_AS(sys.add_row(vec("0 0"), vec("0 0 0")), std::invalid_argument);
}
