#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hspecht/quotient.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/tableaux.hpp"

namespace hspecht {

/// Polynomial in q with integer coefficients; index = power of q.
using QPoly = std::vector<std::int64_t>;

QPoly qpoly_trim(QPoly p);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
/// [a]_q = 1 + q + ... + q^{a-1}.
QPoly qinteger(int a);
/// Gaussian binomial; 0 when b > a >= 0 or b < 0.
QPoly qbinomial(int a, int b);
std::string qpoly_str(const QPoly& p);

class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  /// Irreducibles and cycle types, both in partitions_of(n) order.
  const std::vector<Partition>& partitions() const { return parts_; }
  std::int64_t value(const Partition& lambda, const Partition& rho) const;
  std::int64_t value(std::size_t lambda, std::size_t rho) const { return chi_[lambda][rho]; }
  std::int64_t class_size(std::size_t rho) const { return class_size_[rho]; }
  std::size_t index_of(const Partition& p) const;

 private:
  int n_;
  std::vector<Partition> parts_;
  std::vector<std::vector<std::int64_t>> chi_;
  std::vector<std::int64_t> class_size_;
};

/// Shared table for S_n, built once per n.
const CharacterTable& character_table(int n);

/// chi^lambda(rho) by the Murnaghan-Nakayama rule.
std::int64_t mn_character(const Partition& lambda, const Partition& rho);
/// Number of standard tableaux of shape lambda (hook length formula).
std::int64_t count_syt(const Partition& lambda);
/// Permutation of cycle type rho with consecutive cycles (1..rho_1)(...)..., 1-based.
std::vector<int> cycle_type_representative(const Partition& rho);

/// Sum over (d, lambda) of c_{lambda,d} q^d s_lambda.
class GradedSchurExpansion {
 public:
  using Key = std::pair<int, Partition>;

  void add(int degree, const Partition& lambda, std::int64_t mult);
  std::int64_t coefficient(int degree, const Partition& lambda) const;
  const std::map<Key, std::int64_t>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  bool is_nonnegative() const;
  int max_degree() const;  // -1 when empty

  GradedSchurExpansion times(const QPoly& p) const;
  GradedSchurExpansion shifted(int s) const;
  /// q^top * f(1/q).
  GradedSchurExpansion reversed(int top) const;
  /// q -> 1 dimension: sum of c_{lambda,d} f^lambda.
  std::int64_t dimension() const;
  /// Dimension of each graded piece.
  std::vector<std::int64_t> hilbert() const;
  /// e.g. "s[3] + q*s[2,1] + 2*q^2*s[2,1]".
  std::string str() const;

  friend GradedSchurExpansion operator+(const GradedSchurExpansion& a, const GradedSchurExpansion& b);
  friend bool operator==(const GradedSchurExpansion&, const GradedSchurExpansion&) = default;

 private:
  std::map<Key, std::int64_t> coeffs_;
};

/// Graded character of the quotient's S_n action decomposed into irreducibles.
/// Throws std::logic_error on a non-integral or negative multiplicity.
GradedSchurExpansion graded_frobenius(const GradedQuotient& q, Exec exec = Exec::Parallel);

/// sum over lambda, S in SSYT(lambda, mu) of q^{cc(S)} s_lambda.
GradedSchurExpansion hall_littlewood_cocharge(const Partition& mu);
/// Charge version: q^{n(mu)} times the cocharge one at 1/q.
GradedSchurExpansion hall_littlewood_charge(const Partition& mu);

/// sum over S in SYT(n) of q^{maj(S)} [n - des(S) - 1 choose n - k]_q s_shape(S).
GradedSchurExpansion grfrob_formula_rnk(int n, int k);
/// Reflected Hall-Littlewood expansion over lambda ⊇ mu with at most k parts,
/// lambda'_0 taken to be k.
GradedSchurExpansion grfrob_formula_rnkmu(int n, int k, const Partition& mu);

struct BlockCheck {
  bool ok = false;
  Partition shape;
  int expected_dim = 0;
  int rank = 0;
  std::vector<std::int64_t> expected_character;  // per cycle type
  std::vector<Rational> character;
  std::string message;
};

/// span{F_T^S : T in SYT(shape S)} in the quotient: dimension f^shape and
/// character chi^shape, traces read off from F_{sigma T}^S in quotient coordinates.
BlockCheck irreducible_block_check(const Tableau& s, const GradedQuotient& q);

}  // namespace hspecht
