#include <doctest.h>

#include "hspecht/quotient.hpp"

using namespace hspecht;

namespace {

FamilyParams params(int n, int k, int s, Partition mu = {}) {
  FamilyParams p;
  p.n = n;
  p.k = k;
  p.s = s;
  p.mu = std::move(mu);
  return p;
}

long dim(Family f, const FamilyParams& p) { return GradedQuotient(build_ideal(f, p)).total_dimension(); }

long dim_rnks(int n, int k, int s) {
  if (k == 0) return 0;
  return dim(Family::Rnks, params(n, k, s));
}

std::int64_t stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

std::vector<Partition> two_row_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(n))
    if (mu.length() == 2) out.push_back(mu);
  return out;
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("ideal generators") {
    auto rn = build_ideal(Family::Rn, params(3, 0, 0));
    CHECK(rn.generators.size() == 3);
    for (const auto& g : rn.generators) CHECK(g.is_homogeneous());
    auto one = build_ideal(Family::Rmu, params(0, 0, 0, Partition{1, 1, 1, 1}));
    for (int r = 1; r <= 4; ++r) CHECK(GradedQuotient(one).in_ideal(elementary(4, r)));
    CHECK_THROWS_AS(build_ideal(Family::Rnks, params(3, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_ideal(Family::Rnk, params(3, 4, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_ideal(Family::Rnkmu, params(3, 2, 0, Partition{2, 2})), std::invalid_argument);
    std::vector<Poly> gens{Poly::variable(2, 1) + Poly(2, Rational(1))};
    CHECK_THROWS_AS(build_ideal(2, gens), std::invalid_argument);
  }

  TEST_CASE("Griffin ideal at mu = (n-1)") {
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        GradedQuotient q(build_ideal(Family::Rnkmu, params(n, k, 0, Partition{n - 1})));
        for (int r = 2; r <= n; ++r) CHECK(q.in_ideal(elementary(n, r)));
        CHECK_FALSE(q.in_ideal(Poly::variable(n, 1)) == (k > 1));
      }
    CHECK(dim(Family::Rnkmu, params(2, 1, 0, Partition{1})) == 1);
  }

  TEST_CASE("Hilbert functions") {
    GradedQuotient r3(build_ideal(Family::Rn, params(3, 0, 0)));
    CHECK(r3.hilbert() == std::vector<int>{1, 2, 2, 1});
    CHECK(r3.dimension(0) == 1);
    CHECK(r3.standard_monomials(0).size() == 1);
    for (int n = 1; n <= 5; ++n) {
      CHECK(dim(Family::Rn, params(n, 0, 0)) == factorial(n));
      for (int k = 1; k <= n; ++k) {
        std::int64_t kn = 1;
        for (int i = 0; i < n; ++i) kn *= k;
        CHECK(dim_rnks(n, k, 0) == kn);
        CHECK(dim(Family::Rnk, params(n, k, k)) == factorial(k) * stirling2(n, k));
      }
      for (const auto& mu : partitions_of(n)) CHECK(dim(Family::Rmu, params(0, 0, 0, mu)) == multinomial(mu));
    }
  }

  TEST_CASE("one-column content recovers R_{n,k}") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        GradedQuotient a(build_ideal(Family::Rnkmu, params(n, k, 0, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)))));
        GradedQuotient b(build_ideal(Family::Rnk, params(n, k, k)));
        CHECK(a.hilbert() == b.hilbert());
      }
    for (int n = 1; n <= 5; ++n) {
      GradedQuotient a(build_ideal(Family::Rmu, params(0, 0, 0, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))));
      GradedQuotient b(build_ideal(Family::Rn, params(n, 0, 0)));
      CHECK(a.hilbert() == b.hilbert());
    }
  }

  TEST_CASE("short exact sequence bookkeeping") {
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k)
        for (int s = 0; s < k; ++s) CHECK(dim_rnks(n, k - 1, s) + dim_rnks(n, k, s + 1) == dim_rnks(n, k, s));
  }

  TEST_CASE("Griffin sequence bookkeeping") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k) {
        const long a = dim(Family::Rnkmu, params(n, k, 0, Partition{n - 1}));
        const long b = dim(Family::Rnkmu, params(n, k + 1, 0, Partition{n - 1, 1}));
        const long c = dim(Family::Rnkmu, params(n, k + 1, 0, Partition{n - 1}));
        CHECK(a + b == c);
      }
  }

  TEST_CASE("agreement with full slice reduction") {
    std::vector<IdealSpec> specs{build_ideal(Family::Rn, params(4, 0, 0)), build_ideal(Family::Rnks, params(4, 3, 1)),
                                 build_ideal(Family::Rmu, params(0, 0, 0, Partition{2, 2, 1})),
                                 build_ideal(Family::Rnkmu, params(4, 2, 0, Partition{2, 1}))};
    for (const auto& spec : specs) {
      GradedQuotient q(spec);
      for (int d = 0; d <= q.top_degree() + 1; ++d) {
        auto ms = macaulay_slice(spec, d);
        CHECK(ms.standard == q.standard_monomials(d));
        for (const auto& m : monomials_of_degree(spec.nvars, d)) {
          Poly rq = q.reduce(Poly::monomial(spec.nvars, m));
          std::vector<Term> ts;
          for (auto& [c, v] : ms.echelon.reduce({{static_cast<int>(std::find(ms.columns.begin(), ms.columns.end(), m) - ms.columns.begin()), Rational(1)}}))
            ts.push_back({ms.columns[static_cast<std::size_t>(c)], v});
          CHECK(rq == Poly::from_terms(spec.nvars, std::move(ts)));
        }
      }
    }
  }

  TEST_CASE("basis verification") {
    GradedQuotient r4(build_ideal(Family::Rn, params(4, 0, 0)));
    auto b4 = build_basis_family(Family::Rn, params(4, 4, 4));
    auto rep = verify_basis(r4, b4);
    CHECK(rep.verdict);
    CHECK(rep.size == 24);
    CHECK(rep.first_dependent == -1);
    for (const auto& mu : partitions_of(5)) {
      GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, mu)));
      CHECK(verify_basis(q, build_basis_family(Family::Rmu, params(0, 0, 0, mu))).verdict);
    }
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        GradedQuotient q(build_ideal(Family::Rnkmu, params(n, k, 0, Partition{n - 1})));
        CHECK(verify_basis(q, build_basis_family(Family::Rnkmu, params(n, k, 0, Partition{n - 1}))).verdict);
      }
  }

  TEST_CASE("negative controls") {
    GradedQuotient r4(build_ideal(Family::Rn, params(4, 0, 0)));
    auto b4 = build_basis_family(Family::Rn, params(4, 4, 4));
    auto truncated = b4;
    truncated.pop_back();
    auto rep = verify_basis(r4, truncated);
    CHECK_FALSE(rep.verdict);
    int bad = 0;
    for (const auto& pd : rep.per_degree)
      if (!pd.ok) ++bad;
    CHECK(bad == 1);
    CHECK_FALSE(rep.failures.empty());
    auto dup = b4;
    dup[1] = dup[0];
    auto rep2 = verify_basis(r4, dup);
    CHECK_FALSE(rep2.verdict);
    CHECK(rep2.first_dependent == 1);
  }

  TEST_CASE("basis check against full slices") {
    for (const auto& mu : partitions_of(4)) {
      auto spec = build_ideal(Family::Rmu, params(0, 0, 0, mu));
      auto fam = build_basis_family(Family::Rmu, params(0, 0, 0, mu));
      GradedQuotient q(spec);
      for (int d = 0; d <= q.top_degree() + 1; ++d) {
        auto ms = macaulay_slice(spec, d);
        RowEchelon e = ms.echelon;
        int added = 0, count = 0;
        for (const auto& el : fam) {
          if (el.label.degree != d) continue;
          ++count;
          SparseVec v;
          for (const auto& t : el.poly.terms())
            v.emplace_back(static_cast<int>(std::find(ms.columns.begin(), ms.columns.end(), t.mono) - ms.columns.begin()), t.coeff);
          std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          if (e.insert(v)) ++added;
        }
        CHECK(added == count);
        CHECK(e.rank() == static_cast<int>(ms.columns.size()));
      }
    }
  }

  TEST_CASE("recursion family") {
    auto c1 = gp_recursion_family(Partition{1});
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].poly == Poly(1, Rational(1)));
    for (int n = 1; n <= 5; ++n)
      for (const auto& mu : partitions_of(n)) {
        auto c = gp_recursion_family(mu);
        CHECK(static_cast<std::int64_t>(c.size()) == multinomial(mu));
        GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, mu)));
        CHECK(verify_basis(q, c).verdict);
      }
  }

  TEST_CASE("two-row transition matrices") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& mu : two_row_partitions(n))
        for (int d = 0; d <= n_statistic(mu); ++d) {
          auto tm = transition_matrix(mu, d, {Scaling::Raw, RowOrder::LastLetterAny});
          CHECK(tm.columns_independent);
          REQUIRE(tm.m.is_square());
          CHECK(tm.m.is_lower_triangular());
          CHECK(tm.m.has_nonzero_diagonal());
          // block form: the first block is a scalar multiple of the identity
          // and the last block is alpha times the identity
          const int dd = d;
          Rational alpha = Rational(dd, n - 2 * dd + 1) + Rational(dd);
          int first = 0;
          for (const auto& r : tm.rows)
            if (r.t.position(n).first == 0) ++first;
          for (int i = 0; i < tm.m.rows(); ++i)
            for (int j = 0; j < tm.m.cols(); ++j) {
              if (i >= first && j >= first) CHECK(tm.m(i, j) == (i == j ? alpha : Rational(0)));
              if (i < first && j < first && i != j) CHECK(tm.m(i, j).is_zero());
              if (i < first && j < first && i == j) CHECK(tm.m(i, j) == tm.m(0, 0));
            }
        }
  }

  TEST_CASE("two-row residuals lie in the ideal") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& mu : two_row_partitions(n)) {
        GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, mu)));
        for (int d = 1; d <= mu.part(2); ++d)
          for (const auto& t : standard_tableaux(Partition{n - d, d}))
            if (t.position(n).first == 1) CHECK(q.in_ideal(two_row_residual(mu, t)));
      }
  }

  TEST_CASE("almost lower triangular") {
    auto id = almost_lower_triangular(Matrix::identity(3));
    CHECK(id.ok);
    CHECK(id.a == Matrix::identity(3));
    Matrix sing(2, 2);
    sing(0, 0) = Rational(1);
    sing(0, 1) = Rational(2);
    sing(1, 0) = Rational(2);
    sing(1, 1) = Rational(4);
    CHECK_FALSE(almost_lower_triangular(sing).ok);
    Matrix up(2, 2);
    up(0, 0) = Rational(1);
    up(0, 1) = Rational(1);
    up(1, 1) = Rational(1);
    auto r = almost_lower_triangular(up);
    REQUIRE(r.ok);
    CHECK(r.a.is_upper_triangular());
    CHECK(r.ma.is_lower_triangular());
    CHECK(r.ma.has_nonzero_diagonal());
    CHECK(up * r.a == r.ma);
  }

  TEST_CASE("projection rejects inhomogeneous input") {
    GradedQuotient q(build_ideal(Family::Rn, params(3, 0, 0)));
    CHECK_THROWS(q.project(Poly::variable(3, 1) + Poly(3, Rational(1))));
    CHECK(q.reduce(Poly::variable(3, 1) + Poly::variable(3, 2) + Poly::variable(3, 3)).is_zero());
  }
}
