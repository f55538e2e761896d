#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hspecht/family.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/poly.hpp"
#include "hspecht/specht.hpp"

namespace hspecht {

struct IdealSpec {
  Family family = Family::Rn;
  FamilyParams params;
  int nvars = 1;
  std::vector<Poly> generators;  // homogeneous
};

/// Generators of the family's ideal:
///   Rn     e_1..e_n
///   Rnks   x_i^k, e_n, ..., e_{n-s+1}   (Rnk: s = k)
///   Rmu    e_r(S) for c_{n-|S|}(mu) < r <= |S|
///   Rnkmu  x_i^k and e_r(S) for c_{n-|S|}(mu) + (n - |mu|) < r <= |S|
IdealSpec build_ideal(Family f, const FamilyParams& params);
IdealSpec build_ideal(int nvars, std::vector<Poly> generators);

/// Degree-by-degree quotient of Q[x_1..x_n] by a homogeneous ideal.
///
/// For each degree d the standard monomials are the non-pivot columns of the
/// fully reduced echelon form of the ideal's degree-d slice, with columns in
/// descending monomial order and leftmost pivots. Only the candidate
/// monomials x_i * (standard monomial of degree d-1) are kept as columns;
/// every other monomial is first rewritten through lower-degree normal forms.
/// The normal forms agree with full Macaulay-slice reduction.
///
/// Construction is single-threaded; afterwards all const members are safe
/// to call concurrently.
class GradedQuotient {
 public:
  /// degree_cap < 0 picks a bound from the family parameters.
  explicit GradedQuotient(IdealSpec spec, int degree_cap = -1);

  const IdealSpec& spec() const { return spec_; }
  int nvars() const { return spec_.nvars; }
  /// hilbert()[d] for d = 0..top_degree().
  const std::vector<int>& hilbert() const { return hilbert_; }
  int top_degree() const { return static_cast<int>(hilbert_.size()) - 1; }
  long total_dimension() const;
  int dimension(int d) const { return (d >= 0 && d <= top_degree()) ? hilbert_[static_cast<std::size_t>(d)] : 0; }
  /// Standard monomials of degree d in descending order (empty past the top).
  const std::vector<Monomial>& standard_monomials(int d) const;

  /// Coordinates of the normal form of m over standard_monomials(deg m).
  SparseVec normal_form(Monomial m) const;
  /// Coordinates of a homogeneous polynomial over standard_monomials(deg p).
  SparseVec project(const Poly& p) const;
  /// Normal form as a polynomial (p need not be homogeneous).
  Poly reduce(const Poly& p) const;
  bool in_ideal(const Poly& p) const { return reduce(p).is_zero(); }

 private:
  struct Slice {
    std::vector<Monomial> cand;
    std::unordered_map<Monomial, int, MonomialHash> cand_index;
    RowEchelon echelon;
    std::vector<int> std_of_cand;  // standard index or -1
    std::vector<Monomial> standard;
  };

  void build(int degree_cap);
  SparseVec candidate_nf(int d, const SparseVec& cand_vec) const;
  SparseVec nf_locked(Monomial m) const;
  /// x_j * (coordinates over standard(d)) as coordinates over cand(d+1).
  SparseVec lift(int d, int j, const SparseVec& v) const;
  SparseVec phi(int d1, Monomial m) const;

  IdealSpec spec_;
  std::vector<int> hilbert_;
  std::vector<Slice> slices_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Monomial, SparseVec, MonomialHash> nf_cache_;
};

/// Fully reduced echelon form of the full degree-d slice of the ideal over
/// monomials_of_degree(n, d) (brute-force reference).
struct MacaulaySlice {
  std::vector<Monomial> columns;
  RowEchelon echelon;
  std::vector<Monomial> standard;
};
MacaulaySlice macaulay_slice(const IdealSpec& spec, int d);

struct DegreeCheck {
  int degree = 0;
  int expected = 0;    // quotient dimension
  int candidates = 0;  // family elements of this degree
  int rank = 0;        // rank of their projections
  bool ok = false;
};

struct BasisReport {
  bool verdict = false;
  long size = 0;
  long expected_size = 0;
  std::vector<int> hilbert;
  std::vector<DegreeCheck> per_degree;
  std::vector<std::string> failures;
  long first_dependent = -1;  // family index, -1 if none
};

/// Checks that the family descends to a basis of the quotient.
BasisReport verify_basis(const GradedQuotient& q, const std::vector<BasisElement>& family);

/// C_mu = union over i of x_n^{i-1} B_{mu^(i)}, blocks in order of i, each
/// block in basis_labels order, polynomials in n = |mu| variables.
std::vector<BasisElement> gp_recursion_family(const Partition& mu);

enum class Scaling { Raw, Primitive };
enum class RowOrder { Basis, LastLetterAny };

struct TransitionOptions {
  Scaling scaling = Scaling::Raw;  // Primitive: each polynomial divided by its coefficient content
  RowOrder rows = RowOrder::Basis;  // LastLetterAny: rows by last_letter_compare_any on T
};

struct TransitionMatrix {
  Partition mu;
  int degree = 0;
  std::vector<BasisLabel> rows;  // B_mu^(d)
  std::vector<BasisLabel> cols;  // C_mu^(d)
  Matrix m;                      // rows expressed in the columns
  bool columns_independent = false;
};

TransitionMatrix transition_matrix(const Partition& mu, int d, TransitionOptions opts = {});

struct AlmostLowerResult {
  bool ok = false;
  Matrix a;   // upper triangular witness when ok
  Matrix ma;  // m * a
};

/// Searches for upper triangular A with M A lower triangular and nonzero
/// diagonal, column by column (column j of M A combines columns 0..j of M).
AlmostLowerResult almost_lower_triangular(const Matrix& m);

/// For two-row mu and T standard of shape (n-d, d) with n in the top row:
/// F_T^S - alpha x_n F_{T''}^{S''} - beta sum_j F_{T'_j}^{S'}, with
/// alpha = d/(n-2d+1) + d and beta = (n-d)/(n-2d+1).
Poly two_row_residual(const Partition& mu, const Tableau& t);

}  // namespace hspecht
