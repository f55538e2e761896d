#include <doctest.h>

#include <random>

#include "hspecht/specht.hpp"
#include "hspecht/tableaux.hpp"

using namespace hspecht;

namespace {

Tableau tab(const char* s) { return Tableau::parse(s); }
Poly x(int n, int i) { return Poly::variable(n, i); }

// Unique semistandard tableau of a two-row shape (n-d, d) and two-row content.
Tableau two_row_s(const Partition& mu, int d) {
  const int n = mu.size();
  auto v = semistandard_tableaux(d == 0 ? Partition{n} : Partition{n - d, d}, mu);
  REQUIRE(v.size() == 1);
  return v.front();
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

Poly random_poly(std::mt19937& rng, int n, int deg) {
  std::uniform_int_distribution<int> v(1, n), c(-3, 3);
  std::vector<Term> ts;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> ex(static_cast<std::size_t>(n), 0);
    for (int d = 0; d < deg; ++d) ++ex[static_cast<std::size_t>(v(rng) - 1)];
    ts.push_back({Monomial::from_exponents(std::span<const int>(ex)), Rational(c(rng))});
  }
  return Poly::from_terms(n, std::move(ts));
}

// All (S, T) pairs with S standard of the given size.
template <class F>
void for_standard_pairs(int n, F&& f) {
  for (const auto& l : partitions_of(n)) {
    auto syt = standard_tableaux(l);
    for (const auto& s : syt)
      for (const auto& t : syt) f(s, t);
  }
}

}  // namespace

TEST_SUITE("specht") {
  TEST_CASE("row and column groups") {
    auto g = tab_groups(tab("136/247/5"));
    CHECK(g.row_groups.size() == 3);
    CHECK(g.column_groups.size() == 3);
    CHECK(g.column_groups[0] == std::vector<int>{1, 2, 5});
  }

  TEST_CASE("classical Specht polynomials") {
    const int n = 7;
    Poly example = (x(n, 1) - x(n, 2)) * (x(n, 1) - x(n, 5)) * (x(n, 2) - x(n, 5)) * (x(n, 3) - x(n, 4)) * (x(n, 6) - x(n, 7));
    // The product runs over x_j - x_i with i below j; five factors flip sign.
    CHECK(specht_classical(tab("136/247/5")) == -example);
    CHECK(specht_classical(tab("1234")) == Poly(4, Rational(1)));
    Poly col = specht_classical(tab("1/2/3"));
    CHECK((col == vandermonde(3) || col == -vandermonde(3)));
  }

  TEST_CASE("symmetrizer") {
    CHECK(apply_symmetrizer(tab("123"), Poly(3, Rational(1))) == Poly(3, Rational(6)));
    CHECK(apply_symmetrizer(tab("12/3"), x(3, 3)) == Rational(2) * (x(3, 3) - x(3, 1)));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 4;
      auto parts = partitions_of(n);
      const Partition& l = parts[static_cast<std::size_t>(trial) % parts.size()];
      auto fills = enumerate_tableaux(l, Partition{}, Flavor::AllBijective);
      const Tableau& t = fills[static_cast<std::size_t>(trial * 7) % fills.size()];
      Poly p = random_poly(rng, n, 1 + trial % 3);
      CHECK(apply_symmetrizer(t, p) == apply_symmetrizer_reference(t, p));
    }
  }

  TEST_CASE("superstandard S gives the classical polynomial") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& l : partitions_of(n)) {
        std::vector<std::vector<int>> rows;
        int next = 1;
        std::int64_t scale = 1;
        for (int p : l.parts()) {
          rows.emplace_back();
          for (int i = 0; i < p; ++i) rows.back().push_back(next++);
          scale *= factorial(p);
        }
        const Tableau s(rows);
        for (const auto& t : standard_tableaux(l)) CHECK(higher_specht(s, t) == Rational(scale) * specht_classical(t));
      }
  }

  TEST_CASE("higher Specht examples") {
    CHECK(higher_specht(tab("11/2"), tab("12/3")) == Rational(2) * (x(3, 3) - x(3, 1)));
    const Tableau s = tab("1112/22");
    CHECK(cocharge(s) == 2);
    const int n = 6;
    CHECK(higher_specht(s, tab("1356/24")) == Rational(2 * 24) * (x(n, 2) - x(n, 1)) * (x(n, 4) - x(n, 3)));
    CHECK_THROWS(higher_specht(tab("12/3"), tab("123")));
  }

  TEST_CASE("two-row closed form") {
    for (int n = 2; n <= 7; ++n)
      for (int b = 1; 2 * b <= n; ++b) {
        const Partition mu{n - b, b};
        for (int d = 0; d <= b; ++d) {
          const Tableau s = two_row_s(mu, d);
          CHECK(cocharge(s) == d);
          for (const auto& t : standard_tableaux(s.shape())) {
            Poly expect(n, Rational(factorial(d) * factorial(n - d)));
            for (int i = 0; i < d; ++i) expect *= x(n, t.at(1, i)) - x(n, t.at(0, i));
            CHECK(higher_specht(s, t) == expect);
          }
        }
      }
  }

  TEST_CASE("fast and reference higher Specht agree") {
    for (int n = 1; n <= 4; ++n)
      for_standard_pairs(n, [&](const Tableau& s, const Tableau& t) { CHECK(higher_specht(s, t) == higher_specht_reference(s, t)); });
    for (const auto& mu : partitions_of(5))
      for (const auto& l : partitions_of(5))
        for (const auto& s : semistandard_tableaux(l, mu))
          for (const auto& t : standard_tableaux(l)) CHECK(higher_specht(s, t) == higher_specht_reference(s, t));
  }

  TEST_CASE("degree and exponent bounds") {
    for (int n = 1; n <= 5; ++n)
      for_standard_pairs(n, [&](const Tableau& s, const Tableau& t) {
        Poly f = higher_specht(s, t);
        REQUIRE_FALSE(f.is_zero());
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == cocharge(s));
        CHECK(f.max_variable_exponent() <= descent_stats(s).des);
      });
  }

  TEST_CASE("equivariance") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 5;
      auto parts = partitions_of(n);
      const Partition& l = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
      std::vector<Tableau> ss;
      if (trial % 2) {
        ss = standard_tableaux(l);
      } else {
        for (const auto& mu : parts)
          for (auto& s : semistandard_tableaux(l, mu)) ss.push_back(s);
      }
      auto ts = standard_tableaux(l);
      const Tableau& s = ss[std::uniform_int_distribution<std::size_t>(0, ss.size() - 1)(rng)];
      const Tableau& t = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
      auto w = random_perm(rng, n);
      CHECK(permute_variables(w, higher_specht(s, t)) == higher_specht(s, t.relabeled(w)));
    }
  }

  TEST_CASE("dual polynomials") {
    CHECK(dual_specht(tab("1"), tab("1")) == Poly(1, Rational(1)));
    std::vector<int> staircase{0, 1, 2, 3};
    const Monomial top = Monomial::from_exponents(std::span<const int>(staircase));
    std::vector<std::pair<Tableau, Tableau>> undefined, vanishing;
    for_standard_pairs(4, [&](const Tableau& s, const Tableau& t) {
      Monomial d;
      try {
        d = dual_monomial(s, t);
      } catch (const std::invalid_argument&) {
        undefined.emplace_back(s, t);
        return;
      }
      CHECK(d * cocharge_monomial(s, t) == top);
      if (bilinear_form(higher_specht(s, t), dual_specht(s, t)).is_zero()) vanishing.emplace_back(s, t);
    });
    // T-1-cw(S) goes negative on one cell
    REQUIRE(undefined.size() == 1);
    CHECK(undefined[0].first == tab("14/2/3"));
    CHECK(undefined[0].second == tab("12/3/4"));
    // two rows of T carry equal exponents, so the row antisymmetrizer kills G
    REQUIRE(vanishing.size() == 2);
    CHECK(vanishing[0].first == tab("124/3"));
    CHECK(dual_specht(tab("124/3"), tab("123/4")).is_zero());
    CHECK(dual_specht(tab("124/3"), tab("134/2")).is_zero());
  }

  TEST_CASE("dual pairing for superstandard S") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitions_of(n)) {
        std::vector<std::vector<int>> rows;
        int next = 1;
        for (int p : l.parts()) {
          rows.emplace_back();
          for (int i = 0; i < p; ++i) rows.back().push_back(next++);
        }
        const Tableau s(rows);
        for (const auto& t : standard_tableaux(l)) CHECK_FALSE(bilinear_form(higher_specht(s, t), dual_specht(s, t)).is_zero());
      }
  }

  TEST_CASE("bilinear form") {
    CHECK(bilinear_form(Poly(2, Rational(1)), Poly(2, Rational(1))).is_zero());
    CHECK(bilinear_form(x(2, 2), Poly(2, Rational(1))) == Rational(-1));
    CHECK(bilinear_form_reference(x(2, 2), Poly(2, Rational(1))) == Rational(-1));
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 3;
      const int top = n * (n - 1) / 2;
      const int df = trial % (top + 1);
      Poly f = random_poly(rng, n, df), g = random_poly(rng, n, top - df);
      CHECK(bilinear_form(f, g) == bilinear_form_reference(f, g));
    }
  }

  TEST_CASE("dual pairing is triangular") {
    // vanishes when T1 precedes T2 in last letter order
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitions_of(n)) {
        auto syt = standard_tableaux(l);
        sort_last_letter(syt);
        for (const auto& s : syt)
          for (std::size_t j = 0; j < syt.size(); ++j) {
            Poly g;
            try {
              g = dual_specht(s, syt[j]);
            } catch (const std::invalid_argument&) {
              continue;
            }
            for (std::size_t i = 0; i < j; ++i) CHECK(bilinear_form(higher_specht(s, syt[i]), g).is_zero());
          }
      }
    // and not in the other direction once n = 5
    const Tableau s = tab("123/45");
    CHECK(last_letter_compare(tab("123/45"), tab("135/24")) > 0);
    CHECK(bilinear_form(higher_specht(s, tab("123/45")), dual_specht(s, tab("135/24"))) == Rational(-1152));
  }

  TEST_CASE("Garnir relations") {
    for (int n = 2; n <= 5; ++n)
      for (const auto& l : partitions_of(n)) {
        const Partition lc = conjugate(l);
        std::vector<Tableau> ss;
        for (const auto& mu : partitions_of(n))
          for (auto& s : semistandard_tableaux(l, mu)) ss.push_back(s);
        for (const auto& s : ss)
          for (const auto& t : standard_tableaux(l)) {
            const Poly f = higher_specht(s, t);
            for (int a = 1; a <= l.part(1); ++a)
              for (int b = a + 1; b <= l.part(1); ++b)
                for (int r = 1; r <= lc.part(b); ++r) CHECK(garnir_apply(t, a, b, r, f).is_zero());
          }
      }
  }

  TEST_CASE("Garnir element algebra") {
    const Tableau t = tab("134/25");
    const Poly p = x(5, 2) * x(5, 2) * x(5, 3) + x(5, 5);
    auto entries = garnir_entries(t, 1, 2, 1);
    CHECK(entries.size() == 3);
    Poly once = garnir_apply(t, 1, 2, 1, p);
    CHECK(garnir_apply(t, 1, 2, 1, once) == Rational(6) * once);
    std::vector<int> single{4};
    CHECK(antisymmetrize(single, p) == p);
    CHECK_THROWS(garnir_entries(t, 2, 1, 1));
  }

  TEST_CASE("straightening") {
    const Tableau s = tab("11/2");
    auto st = straighten(s, tab("12/3"));
    REQUIRE(st.ok);
    for (std::size_t i = 0; i < st.basis.size(); ++i) CHECK(st.coeffs[i] == Rational(st.basis[i] == tab("12/3") ? 1 : 0));
    for (const auto& t : enumerate_tableaux(Partition{2, 1}, Partition{}, Flavor::AllBijective)) {
      auto r = straighten(s, t);
      REQUIRE(r.ok);
      Poly sum(3);
      for (std::size_t i = 0; i < r.basis.size(); ++i) {
        CHECK((r.coeffs[i] == Rational(0) || r.coeffs[i] == Rational(1) || r.coeffs[i] == Rational(-1)));
        sum += r.coeffs[i] * higher_specht(s, r.basis[i]);
      }
      CHECK(sum == higher_specht(s, t));
    }
    const Tableau s1 = semistandard_tableaux(Partition{3, 2}, Partition{3, 2}).front();
    auto r = straighten(s1, tab("125/43"));
    REQUIRE(r.ok);
    Poly sum(5);
    for (std::size_t i = 0; i < r.basis.size(); ++i) sum += r.coeffs[i] * higher_specht(s1, r.basis[i]);
    CHECK(sum == higher_specht(s1, tab("125/43")));
  }

  TEST_CASE("family sizes") {
    for (int n = 2; n <= 6; ++n) {
      FamilyParams p;
      p.n = n;
      p.k = 1;
      p.mu = Partition{n - 1};
      auto fam = build_basis_family(Family::Rnkmu, p);
      REQUIRE(fam.size() == 1);
      CHECK(fam[0].poly.degree() == 0);
    }
    for (int n = 1; n <= 5; ++n)
      for (const auto& mu : partitions_of(n)) {
        FamilyParams p;
        p.mu = mu;
        CHECK(static_cast<std::int64_t>(basis_labels(Family::Rmu, p).size()) == multinomial(mu));
      }
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= std::min(3, n); ++k) {
        FamilyParams p;
        p.n = n;
        p.k = k;
        p.s = 0;
        std::int64_t kn = 1;
        for (int i = 0; i < n; ++i) kn *= k;
        CHECK(static_cast<std::int64_t>(basis_labels(Family::Rnks, p).size()) == kn);
      }
  }

  TEST_CASE("parallel family build is order stable") {
    FamilyParams p;
    p.n = 4;
    p.k = 3;
    p.s = 2;
    auto a = build_basis_family(Family::Rnks, p, Exec::Serial);
    auto b = build_basis_family(Family::Rnks, p, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].label.t == b[i].label.t);
      CHECK(a[i].poly == b[i].poly);
    }
  }
}
