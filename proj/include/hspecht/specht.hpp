#pragma once

#include <span>
#include <vector>

#include "hspecht/family.hpp"
#include "hspecht/poly.hpp"
#include "hspecht/tableaux.hpp"

namespace hspecht {

/// Row and column entry sets of a bijective filling.
struct TabGroupSpec {
  std::vector<std::vector<int>> row_groups;
  std::vector<std::vector<int>> column_groups;
};

TabGroupSpec tab_groups(const Tableau& t);

/// Execution policy for the family builders.
enum class Exec { Serial, Parallel };

/// Classical Specht polynomial: product over columns of (x_j - x_i), i below j.
Poly specht_classical(const Tableau& t);

/// Sum of sigma . p over all permutations sigma of `entries`.
Poly symmetrize(std::span<const int> entries, const Poly& p);
/// Signed sum of sigma . p over all permutations sigma of `entries`.
Poly antisymmetrize(std::span<const int> entries, const Poly& p);

/// eps_T . p = sum over column perms tau and row perms sigma of sgn(tau) tau sigma . p,
/// evaluated by coset factorization of each row and column group.
Poly apply_symmetrizer(const Tableau& t, const Poly& p);
/// Same value by direct enumeration of C(T) x R(T).
Poly apply_symmetrizer_reference(const Tableau& t, const Poly& p);

/// x_T^{cw(S)}: the cocharge label of each cell of S on the variable T holds there.
Monomial cocharge_monomial(const Tableau& s, const Tableau& t);
/// F_T^S. S standard or semistandard with partition content; T a bijective filling.
Poly higher_specht(const Tableau& s, const Tableau& t);
Poly higher_specht_reference(const Tableau& s, const Tableau& t);

/// x_T^{T-1-cw(S)}; throws if some cell exponent is negative.
Monomial dual_monomial(const Tableau& s, const Tableau& t);
/// G_T^S = alpha(R(T)) beta(C(T)) . x_T^{T-1-cw(S)}.
Poly dual_specht(const Tableau& s, const Tableau& t);

/// Constant term of (1/Delta) sum_sigma sgn(sigma) sigma(f g).
Rational bilinear_form(const Poly& f, const Poly& g);
/// Same value through explicit antisymmetrization over S_n.
Rational bilinear_form_reference(const Poly& f, const Poly& g);

/// Entries of column a (1-based) in rows >= row, and of column b in rows <= row.
std::vector<int> garnir_entries(const Tableau& t, int a, int b, int row);
/// Partial antisymmetrizer over garnir_entries applied to p.
Poly garnir_apply(const Tableau& t, int a, int b, int row, const Poly& p);

struct Straightening {
  bool ok = false;
  std::vector<Tableau> basis;  // standard tableaux, last letter order
  std::vector<Rational> coeffs;
};

/// Expresses F_T^S for an arbitrary bijective filling T in terms of F_U^S,
/// U standard of the same shape, by an exact linear solve.
Straightening straighten(const Tableau& s, const Tableau& t);

struct BasisLabel {
  Tableau s;
  Tableau t;
  std::vector<int> exponents;  // powers of e_1, e_2, ...
  int degree = 0;
  int xn_power = 0;  // extra factor x_n^xn_power (recursion families)
  const Partition& shape() const { return s.shape(); }
};

struct BasisElement {
  BasisLabel label;
  Poly poly;
};

/// Labels of the candidate higher Specht family of a ring, in report order:
/// degree, then S, then T in last letter order, then exponent tuple.
///   Rn     {F_T^S : S, T in SYT(n)}
///   Rnk    Rnks with s = k
///   Rnks   F_T^S e_1^i_1 ... e_{n-s}^i_{n-s}, sum i_j < k - des(S)
///   Rmu    {F_T^S : S in SSYT(lambda, mu), T in SYT(lambda)}
///   Rnkmu  mu = (n-1) only: F_T^S e_1^i, S of content (n-1,1), i < k - des(S)
std::vector<BasisLabel> basis_labels(Family f, const FamilyParams& params);
/// Labels with their polynomials. Parallel execution gives identical output.
std::vector<BasisElement> build_basis_family(Family f, const FamilyParams& params, Exec exec = Exec::Parallel);
/// Polynomial of a single label in n variables.
Poly basis_polynomial(const BasisLabel& label, int n);

}  // namespace hspecht
