#include <doctest.h>

#include "hspecht/symfunc.hpp"

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

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("q-integers and q-binomials") {
    CHECK(qinteger(3) == QPoly{1, 1, 1});
    CHECK(qbinomial(4, 2) == QPoly{1, 1, 2, 1, 1});
    CHECK(qbinomial(3, 0) == QPoly{1});
    CHECK(qbinomial(2, 3).empty());
    CHECK(qbinomial(2, -1).empty());
    CHECK(qpoly_str(QPoly{1, 0, 2}) == "1 + 2*q^2");
    for (int a = 0; a <= 7; ++a)
      for (int b = 0; b <= a; ++b) {
        std::int64_t total = 0;
        for (auto c : qbinomial(a, b)) total += c;
        CHECK(total == binomial(a, b));
        CHECK(qbinomial(a, b) == qbinomial(a, a - b));
      }
  }

  TEST_CASE("character tables") {
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(mn_character(Partition{3, 1}, Partition{2, 2}) == -1);
    for (int n = 1; n <= 6; ++n) {
      const auto& ct = character_table(n);
      const auto& ps = ct.partitions();
      const std::size_t one = ct.index_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      std::int64_t total = 0;
      for (std::size_t r = 0; r < ps.size(); ++r) total += ct.class_size(r);
      CHECK(total == factorial(n));
      for (std::size_t a = 0; a < ps.size(); ++a) {
        CHECK(ct.value(a, one) == count_syt(ps[a]));
        CHECK(count_syt(ps[a]) == static_cast<std::int64_t>(standard_tableaux(ps[a]).size()));
        for (std::size_t b = 0; b < ps.size(); ++b) {
          std::int64_t s = 0;
          for (std::size_t r = 0; r < ps.size(); ++r) s += ct.class_size(r) * ct.value(a, r) * ct.value(b, r);
          CHECK(s == (a == b ? factorial(n) : 0));
        }
      }
    }
  }

  TEST_CASE("trivial and sign characters") {
    const auto& ct = character_table(3);
    for (const auto& rho : ct.partitions()) {
      CHECK(ct.value(Partition{3}, rho) == 1);
      const int sign = ((3 - rho.length()) % 2) ? -1 : 1;
      CHECK(ct.value(Partition{1, 1, 1}, rho) == sign);
    }
    for (int k = 2; k <= 6; ++k) CHECK(qbinomial(k - 1, k - 2) == qinteger(k - 1));
  }

  TEST_CASE("closed formulas") {
    GradedSchurExpansion s2;
    s2.add(0, Partition{2}, 1);
    CHECK(grfrob_formula_rnk(2, 1) == s2);
    for (int n = 1; n <= 5; ++n) {
      GradedSchurExpansion maj;
      for (const auto& s : standard_tableaux_of_size(n)) maj.add(descent_stats(s).maj, s.shape(), 1);
      CHECK(grfrob_formula_rnk(n, n) == maj);
      CHECK(hall_littlewood_cocharge(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == maj);
      GradedSchurExpansion row;
      row.add(0, Partition{n}, 1);
      CHECK(hall_littlewood_cocharge(Partition{n}) == row);
    }
    for (int n = 1; n <= 4; ++n) CHECK(grfrob_formula_rnkmu(n, n, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == grfrob_formula_rnk(n, n));
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        QPoly shift(static_cast<std::size_t>(k), 0);
        shift.back() = 1;
        auto display = hall_littlewood_cocharge(Partition{n}).times(shift) + hall_littlewood_cocharge(Partition{n - 1, 1}).times(qinteger(k - 1));
        auto f = grfrob_formula_rnkmu(n, k, Partition{n - 1});
        CHECK(f == display);
        CHECK(f.max_degree() == k - 1);
        GradedQuotient q(build_ideal(Family::Rnkmu, params(n, k, 0, Partition{n - 1})));
        CHECK(graded_frobenius(q) == f);
      }
  }

  TEST_CASE("cycle type representatives") {
    auto p = cycle_type_representative(Partition{3, 2});
    CHECK(p == std::vector<int>{0, 2, 3, 1, 5, 4});
  }

  TEST_CASE("graded expansion arithmetic") {
    GradedSchurExpansion e;
    e.add(0, Partition{3}, 1);
    e.add(1, Partition{2, 1}, 1);
    e.add(2, Partition{2, 1}, 2);
    CHECK(e.str() == "s[3] + q*s[2,1] + 2*q^2*s[2,1]");
    CHECK(e.max_degree() == 2);
    CHECK(e.dimension() == 7);
    CHECK(e.hilbert() == std::vector<std::int64_t>{1, 2, 4});
    CHECK(e.reversed(2).coefficient(0, Partition{2, 1}) == 2);
    CHECK(e.shifted(1).coefficient(3, Partition{2, 1}) == 2);
    CHECK(e.times(QPoly{1, 1}).coefficient(2, Partition{2, 1}) == 3);
    CHECK((e + e).coefficient(0, Partition{3}) == 2);
    e.add(0, Partition{3}, -1);
    CHECK(e.coefficient(0, Partition{3}) == 0);
    CHECK(e.is_nonnegative());
  }

  TEST_CASE("Frobenius of the coinvariant algebra") {
    GradedQuotient r3(build_ideal(Family::Rn, params(3, 0, 0)));
    auto f = graded_frobenius(r3);
    CHECK(f.str() == "s[3] + q*s[2,1] + q^2*s[2,1] + q^3*s[1,1,1]");
    for (int n = 1; n <= 4; ++n) {
      GradedQuotient q(build_ideal(Family::Rn, params(n, 0, 0)));
      auto g = graded_frobenius(q);
      CHECK(g == hall_littlewood_cocharge(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
      CHECK(g == grfrob_formula_rnk(n, n));
    }
  }

  TEST_CASE("serial and parallel Frobenius agree") {
    GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, Partition{2, 2, 1})));
    CHECK(graded_frobenius(q, Exec::Serial) == graded_frobenius(q, Exec::Parallel));
  }

  TEST_CASE("Garsia-Procesi modules") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& mu : partitions_of(n)) {
        GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, mu)));
        auto f = graded_frobenius(q);
        CHECK(f == hall_littlewood_cocharge(mu));
        CHECK(f.reversed(n_statistic(mu)) == hall_littlewood_charge(mu));
        std::vector<std::int64_t> h(q.hilbert().begin(), q.hilbert().end());
        CHECK(f.hilbert() == h);
      }
  }

  TEST_CASE("generalized coinvariant modules") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        GradedQuotient q(build_ideal(Family::Rnk, params(n, k, k)));
        CHECK(graded_frobenius(q) == grfrob_formula_rnk(n, k));
      }
  }

  TEST_CASE("Griffin modules") {
    for (int n = 1; n <= 4; ++n)
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : m == 0 ? std::vector<Partition>{Partition{}} : partitions_of(m))
          for (int k = std::max(1, mu.length()); k <= n; ++k) {
            GradedQuotient q(build_ideal(Family::Rnkmu, params(n, k, 0, mu)));
            CHECK(graded_frobenius(q) == grfrob_formula_rnkmu(n, k, mu));
          }
  }

  TEST_CASE("irreducible blocks") {
    for (const auto& mu : partitions_of(4)) {
      GradedQuotient q(build_ideal(Family::Rmu, params(0, 0, 0, mu)));
      for (const auto& l : partitions_of(4))
        for (const auto& s : semistandard_tableaux(l, mu)) {
          auto b = irreducible_block_check(s, q);
          CHECK_MESSAGE(b.ok, b.message);
          CHECK(b.rank == b.expected_dim);
        }
    }
    GradedQuotient r4(build_ideal(Family::Rn, params(4, 0, 0)));
    for (const auto& s : standard_tableaux_of_size(4)) CHECK(irreducible_block_check(s, r4).ok);
    GradedQuotient r21(build_ideal(Family::Rmu, params(0, 0, 0, Partition{2, 1})));
    auto triv = irreducible_block_check(Tableau::parse("112"), r21);
    CHECK(triv.ok);
    CHECK(triv.expected_dim == 1);
    auto std21 = irreducible_block_check(Tableau::parse("11/2"), r21);
    CHECK(std21.ok);
    CHECK(std21.expected_dim == 2);
    CHECK(std21.expected_character == std::vector<std::int64_t>{-1, 0, 2});
  }
}
