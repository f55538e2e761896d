#include <doctest.h>

#include <random>

#include "hspecht/poly.hpp"
#include "hspecht/rational.hpp"
#include "hspecht/tableaux.hpp"

using namespace hspecht;

namespace {

Poly random_poly(std::mt19937& rng, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-5, 5), dd(1, 3);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> ex(static_cast<std::size_t>(n));
    int budget = max_deg;
    for (auto& x : ex) {
      x = std::min(budget, e(rng) % 3);
      budget -= x;
    }
    ts.push_back({Monomial::from_exponents(std::span<const int>(ex)), Rational(c(rng), dd(rng))});
  }
  return Poly::from_terms(n, std::move(ts));
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

Rational eval_at_ones(const Poly& p) {
  Rational s;
  for (const auto& t : p.terms()) s += t.coeff;
  return s;
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3).str() == "-1/3");
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational::parse("-5/4") == Rational(-5, 4));
    CHECK(Rational(8, 3).inverse() == Rational(3, 8));
    CHECK_THROWS(Rational(0).inverse());
    // overflow past 64 bits falls back to GMP and stays exact
    Rational big(std::int64_t{1} << 62);
    Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    CHECK(sq.str() == "21267647932558653966460912964485513216");
  }

  TEST_CASE("monomial order") {
    auto ms = monomials_of_degree(2, 2);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Monomial::from_exponents({0, 2}));
    CHECK(ms[1] == Monomial::from_exponents({1, 1}));
    CHECK(ms[2] == Monomial::from_exponents({2, 0}));
    CHECK(monomials_of_degree(3, 0).size() == 1);
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= 8; ++d) CHECK(static_cast<std::int64_t>(monomials_of_degree(n, d).size()) == binomial(n + d - 1, d));
  }

  TEST_CASE("permute variables") {
    Poly p = Poly::variable(2, 1) - Poly::variable(2, 2);
    std::vector<int> swap{0, 2, 1};
    CHECK(permute_variables(swap, p) == -p);
    std::vector<int> id{0, 1, 2};
    CHECK(permute_variables(id, p) == p);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + trial % 4;
      auto s = random_perm(rng, n), t = random_perm(rng, n);
      Poly f = random_poly(rng, n, 4, 6);
      std::vector<int> st(static_cast<std::size_t>(n + 1));
      for (int i = 1; i <= n; ++i) st[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      CHECK(permute_variables(st, f) == permute_variables(s, permute_variables(t, f)));
      Poly g = permute_variables(s, f);
      CHECK(g.size() == f.size());
      if (!f.is_zero()) CHECK(g.degree() == f.degree());
    }
  }

  TEST_CASE("elementary symmetric polynomials") {
    std::vector<int> vars{1, 4, 5};
    Poly e2 = elementary(5, 2, vars);
    Poly x1 = Poly::variable(5, 1), x4 = Poly::variable(5, 4), x5 = Poly::variable(5, 5);
    CHECK(e2 == x1 * x4 + x1 * x5 + x4 * x5);
    CHECK(elementary(3, 0) == Poly(3, Rational(1)));
    CHECK(elementary(3, 4).is_zero());
    Rational total;
    for (int d = 0; d <= 3; ++d) total += eval_at_ones(elementary(3, d));
    CHECK(total == Rational(8));
    std::mt19937 rng(3);
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= n; ++d)
        for (int t = 0; t < 5; ++t) CHECK(permute_variables(random_perm(rng, n), elementary(n, d)) == elementary(n, d));
  }

  TEST_CASE("vandermonde") {
    CHECK(vandermonde(1) == Poly(1, Rational(1)));
    CHECK(vandermonde(2) == Poly::variable(2, 1) - Poly::variable(2, 2));
    Poly v3 = vandermonde(3);
    CHECK(v3.size() == 6);
    for (auto perm : {std::vector<int>{0, 2, 1, 3}, std::vector<int>{0, 1, 3, 2}, std::vector<int>{0, 3, 2, 1}})
      CHECK(permute_variables(perm, v3) == -v3);
  }

  TEST_CASE("ring axioms") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + trial % 5;
      Poly a = random_poly(rng, n, 6, 5), b = random_poly(rng, n, 6, 5), c = random_poly(rng, n, 6, 5);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("rendering") {
    Poly p = Poly::monomial(3, Monomial::from_exponents({2, 0, 1}), Rational(-5, 4)) + Poly::variable(3, 2);
    CHECK(p.str() == "-5/4*x1^2*x3 + x2");
  }
}
