#include "hspecht/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "hspecht/linalg.hpp"

namespace hspecht {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

Monomial swap_bytes(Monomial m, int a, int b) {
  std::uint64_t bits = m.packed();
  const int sa = 8 * (a - 1), sb = 8 * (b - 1);
  std::uint64_t ea = (bits >> sa) & 0xff, eb = (bits >> sb) & 0xff;
  bits &= ~((std::uint64_t{0xff} << sa) | (std::uint64_t{0xff} << sb));
  bits |= (ea << sb) | (eb << sa);
  return Monomial::from_packed(bits);
}

// Appends sign * (a b).p to out.
void append_swapped(const Poly& p, int a, int b, bool negate, std::vector<Term>& out) {
  for (const auto& t : p.terms()) out.push_back({swap_bytes(t.mono, a, b), negate ? -t.coeff : t.coeff});
}

// Coset recursion: the sum over S_m is (1 +- sum_{i<m} (a_i a_m)) times the sum over S_{m-1}.
Poly coset_sum(std::span<const int> entries, const Poly& p, bool alternating) {
  Poly cur = p;
  for (std::size_t m = 1; m < entries.size(); ++m) {
    if (cur.is_zero()) return cur;
    std::vector<Term> terms(cur.terms().begin(), cur.terms().end());
    terms.reserve(cur.size() * (m + 1));
    for (std::size_t i = 0; i < m; ++i) append_swapped(cur, entries[i], entries[m], alternating, terms);
    cur = Poly::from_terms(cur.nvars(), std::move(terms));
  }
  return cur;
}

int permutation_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

void require_bijective(const Tableau& t, const char* who) {
  if (!t.is_bijective()) throw std::invalid_argument(std::string(who) + ": T must be a bijective filling");
}

void require_index(const Tableau& s, const Tableau& t, const char* who) {
  require_bijective(t, who);
  if (s.shape() != t.shape()) throw std::invalid_argument(std::string(who) + ": S and T must have the same shape");
  if (!s.is_semistandard()) throw std::invalid_argument(std::string(who) + ": S must be semistandard");
}

}  // namespace

TabGroupSpec tab_groups(const Tableau& t) {
  TabGroupSpec g;
  for (const auto& r : t.rows()) g.row_groups.push_back(r);
  Tableau tr = t.transpose();
  for (const auto& c : tr.rows()) g.column_groups.push_back(c);
  return g;
}

Poly specht_classical(const Tableau& t) {
  require_bijective(t, "specht_classical");
  const int n = std::max(1, t.size());
  Poly p(n, Rational(1));
  for (const auto& col : tab_groups(t).column_groups)
    for (std::size_t i = 0; i < col.size(); ++i)
      for (std::size_t j = i + 1; j < col.size(); ++j)
        p = p * (Poly::variable(n, col[j]) - Poly::variable(n, col[i]));
  return p;
}

Poly symmetrize(std::span<const int> entries, const Poly& p) { return coset_sum(entries, p, false); }

Poly antisymmetrize(std::span<const int> entries, const Poly& p) { return coset_sum(entries, p, true); }

Poly apply_symmetrizer(const Tableau& t, const Poly& p) {
  require_bijective(t, "apply_symmetrizer");
  if (p.nvars() < t.size()) throw std::invalid_argument("apply_symmetrizer: too few variables");
  auto g = tab_groups(t);
  Poly cur = p;
  for (const auto& r : g.row_groups) cur = symmetrize(r, cur);
  for (const auto& c : g.column_groups) cur = antisymmetrize(c, cur);
  return cur;
}

Poly apply_symmetrizer_reference(const Tableau& t, const Poly& p) {
  require_bijective(t, "apply_symmetrizer_reference");
  const int n = p.nvars();
  if (n < t.size()) throw std::invalid_argument("apply_symmetrizer_reference: too few variables");
  auto g = tab_groups(t);

  // All elements of a Young subgroup as full permutations of 1..n, with signs.
  auto group = [n](const std::vector<std::vector<int>>& blocks) {
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> id(uz(n + 1));
    std::iota(id.begin(), id.end(), 0);
    out.emplace_back(id, 1);
    for (const auto& blk : blocks) {
      std::vector<std::pair<std::vector<int>, int>> next;
      std::vector<int> img = blk;
      std::sort(img.begin(), img.end());
      do {
        int sgn = permutation_sign(img);
        for (const auto& [perm, s] : out) {
          auto q = perm;
          for (std::size_t i = 0; i < blk.size(); ++i) q[uz(blk[i])] = img[i];
          next.emplace_back(std::move(q), s * sgn);
        }
      } while (std::next_permutation(img.begin(), img.end()));
      out = std::move(next);
    }
    return out;
  };
  // Sorting blk first keeps the sign relative to the identity on that block.
  auto sorted_blocks = [](std::vector<std::vector<int>> b) {
    for (auto& x : b) std::sort(x.begin(), x.end());
    return b;
  };
  auto rows = group(sorted_blocks(g.row_groups));
  auto cols = group(sorted_blocks(g.column_groups));
  std::vector<Term> terms;
  std::vector<int> comp(uz(n + 1));
  for (const auto& [tau, sgn] : cols) {
    for (const auto& [sigma, unused] : rows) {
      (void)unused;
      for (int i = 1; i <= n; ++i) comp[uz(i)] = tau[uz(sigma[uz(i)])];
      for (const auto& term : p.terms())
        terms.push_back({term.mono.permuted(comp), sgn > 0 ? term.coeff : -term.coeff});
    }
  }
  return Poly::from_terms(n, std::move(terms));
}

Monomial cocharge_monomial(const Tableau& s, const Tableau& t) {
  require_index(s, t, "cocharge_monomial");
  auto labels = cocharge_cell_labels(s);
  std::vector<int> e(uz(t.size()), 0);
  for (int r = 0; r < t.num_rows(); ++r)
    for (int c = 0; c < t.shape().part(r + 1); ++c) e[uz(t.at(r, c) - 1)] = labels[uz(r)][uz(c)];
  return Monomial::from_exponents(std::span<const int>(e));
}

Poly higher_specht(const Tableau& s, const Tableau& t) {
  Monomial m = cocharge_monomial(s, t);
  return apply_symmetrizer(t, Poly::monomial(std::max(1, t.size()), m));
}

Poly higher_specht_reference(const Tableau& s, const Tableau& t) {
  Monomial m = cocharge_monomial(s, t);
  return apply_symmetrizer_reference(t, Poly::monomial(std::max(1, t.size()), m));
}

Monomial dual_monomial(const Tableau& s, const Tableau& t) {
  require_index(s, t, "dual_monomial");
  auto labels = cocharge_cell_labels(s);
  std::vector<int> e(uz(t.size()), 0);
  for (int r = 0; r < t.num_rows(); ++r)
    for (int c = 0; c < t.shape().part(r + 1); ++c) {
      int v = t.at(r, c);
      int x = v - 1 - labels[uz(r)][uz(c)];
      if (x < 0) throw std::invalid_argument("dual_monomial: negative exponent at entry " + std::to_string(v));
      e[uz(v - 1)] = x;
    }
  return Monomial::from_exponents(std::span<const int>(e));
}

Poly dual_specht(const Tableau& s, const Tableau& t) {
  Poly cur = Poly::monomial(std::max(1, t.size()), dual_monomial(s, t));
  auto g = tab_groups(t);
  for (const auto& c : g.column_groups) cur = symmetrize(c, cur);
  for (const auto& r : g.row_groups) cur = antisymmetrize(r, cur);
  return cur;
}

Rational bilinear_form(const Poly& f, const Poly& g) {
  const int n = f.nvars();
  if (g.nvars() != n) throw std::invalid_argument("bilinear_form: variable count mismatch");
  const int target = n * (n - 1) / 2;
  Rational acc;
  for (const auto& a : f.terms()) {
    const int da = a.mono.degree();
    for (const auto& b : g.terms()) {
      if (da + b.mono.degree() != target) continue;
      Monomial m = a.mono * b.mono;
      unsigned seen = 0;
      bool ok = true;
      int inv = 0;
      for (int i = 1; i <= n && ok; ++i) {
        int e = m.exponent(i);
        if (e >= n || (seen >> e) & 1u) {
          ok = false;
          break;
        }
        // inversions against earlier entries larger than e
        inv += std::popcount(seen >> (e + 1));
        seen |= 1u << e;
      }
      if (!ok) continue;
      Rational c = a.coeff * b.coeff;
      acc += (inv % 2) ? -c : c;
    }
  }
  return (target % 2) ? -acc : acc;
}

Rational bilinear_form_reference(const Poly& f, const Poly& g) {
  const int n = f.nvars();
  if (g.nvars() != n) throw std::invalid_argument("bilinear_form_reference: variable count mismatch");
  Poly h = f * g;
  std::vector<int> perm(uz(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Term> terms;
  std::vector<int> full(uz(n + 1), 0);
  do {
    int sgn = permutation_sign(perm);
    for (int i = 1; i <= n; ++i) full[uz(i)] = perm[uz(i - 1)];
    for (const auto& t : h.terms()) terms.push_back({t.mono.permuted(full), sgn > 0 ? t.coeff : -t.coeff});
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly alt = Poly::from_terms(n, std::move(terms));
  std::vector<int> delta(uz(n));
  for (int i = 0; i < n; ++i) delta[uz(i)] = n - 1 - i;
  return alt.coefficient(Monomial::from_exponents(std::span<const int>(delta)));
}

std::vector<int> garnir_entries(const Tableau& t, int a, int b, int row) {
  const int width = t.shape().part(1);
  if (a < 1 || b <= a || b > width) throw std::invalid_argument("garnir_entries: need 1 <= a < b <= lambda_1");
  const int hb = t.column_height(b - 1);
  if (row < 1 || row > hb) throw std::invalid_argument("garnir_entries: row must lie in column b");
  std::vector<int> out;
  for (int r = row; r <= t.column_height(a - 1); ++r) out.push_back(t.at(r - 1, a - 1));
  for (int r = 1; r <= row; ++r) out.push_back(t.at(r - 1, b - 1));
  return out;
}

Poly garnir_apply(const Tableau& t, int a, int b, int row, const Poly& p) {
  auto e = garnir_entries(t, a, b, row);
  return antisymmetrize(e, p);
}

Straightening straighten(const Tableau& s, const Tableau& t) {
  require_index(s, t, "straighten");
  Straightening out;
  out.basis = standard_tableaux(t.shape());
  sort_last_letter(out.basis);
  if (t.is_standard()) {
    out.ok = true;
    for (const auto& u : out.basis) out.coeffs.push_back(u == t ? Rational(1) : Rational(0));
    return out;
  }
  Poly target = higher_specht(s, t);
  std::vector<Poly> cols;
  for (const auto& u : out.basis) cols.push_back(higher_specht(s, u));
  std::unordered_map<Monomial, int, MonomialHash> index;
  auto idx = [&](Monomial m) {
    auto [it, fresh] = index.emplace(m, static_cast<int>(index.size()));
    (void)fresh;
    return it->second;
  };
  for (const auto& c : cols)
    for (const auto& term : c.terms()) idx(term.mono);
  for (const auto& term : target.terms()) idx(term.mono);
  Matrix a(static_cast<int>(index.size()), static_cast<int>(cols.size()));
  std::vector<Rational> b(index.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& term : cols[j].terms()) a(index[term.mono], static_cast<int>(j)) = term.coeff;
  for (const auto& term : target.terms()) b[uz(index[term.mono])] = term.coeff;
  auto x = solve_linear(a, b);
  if (!x) return out;
  out.ok = true;
  out.coeffs = std::move(*x);
  return out;
}

// ---------------------------------------------------------------- families

namespace {

struct LabelKey {
  int degree;
  int shape_index;
  int s_index;
  int t_rank;
  std::vector<int> exponents;
  auto tie() const { return std::tie(degree, shape_index, s_index, t_rank, exponents); }
};

// Exponent tuples of the given length with sum <= budget, lexicographic.
std::vector<std::vector<int>> bounded_tuples(int length, int budget) {
  std::vector<std::vector<int>> out;
  if (budget < 0) return out;
  std::vector<int> cur(uz(length), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[uz(i)] = v;
      self(self, i + 1, left - v);
    }
    cur[uz(i)] = 0;
  };
  rec(rec, 0, budget);
  return out;
}

int exponent_degree(const std::vector<int>& e) {
  int d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) d += static_cast<int>(j + 1) * e[j];
  return d;
}

}  // namespace

std::vector<BasisLabel> basis_labels(Family f, const FamilyParams& raw) {
  FamilyParams p = normalize_params(f, raw);
  const int n = p.n;
  Partition content;
  bool semistandard = false;
  if (f == Family::Rmu) {
    content = p.mu;
    semistandard = true;
  } else if (f == Family::Rnkmu) {
    if (n < 2 || p.mu != Partition{n - 1})
      throw std::invalid_argument("Rnkmu: a candidate basis is only defined for mu = (n-1), n >= 2");
    content = Partition{n - 1, 1};
    semistandard = true;
  }

  std::vector<std::pair<LabelKey, BasisLabel>> items;
  auto shapes = partitions_of(n);
  for (std::size_t si = 0; si < shapes.size(); ++si) {
    const Partition& lam = shapes[si];
    auto ts = standard_tableaux(lam);
    sort_last_letter(ts);
    auto ss = semistandard ? semistandard_tableaux(lam, content) : standard_tableaux(lam);
    for (std::size_t a = 0; a < ss.size(); ++a) {
      const Tableau& s = ss[a];
      const int cc = cocharge(s);
      std::vector<std::vector<int>> tuples;
      switch (f) {
        case Family::Rn:
        case Family::Rmu:
          tuples.push_back({});
          break;
        case Family::Rnk:
        case Family::Rnks:
          tuples = bounded_tuples(n - p.s, p.k - descents_of(s) - 1);
          break;
        case Family::Rnkmu:
          for (int i = 0; i < p.k - descents_of(s); ++i) tuples.push_back({i});
          break;
      }
      for (std::size_t b = 0; b < ts.size(); ++b) {
        for (const auto& e : tuples) {
          BasisLabel lab{s, ts[b], e, cc + exponent_degree(e), 0};
          LabelKey key{lab.degree, static_cast<int>(si), static_cast<int>(a), static_cast<int>(b), e};
          items.emplace_back(std::move(key), std::move(lab));
        }
      }
    }
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& x, const auto& y) { return x.first.tie() < y.first.tie(); });
  std::vector<BasisLabel> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

Poly basis_polynomial(const BasisLabel& label, int n) {
  Poly p = higher_specht(label.s, label.t);
  if (p.nvars() < n) p = p.embedded(n);
  for (std::size_t j = 0; j < label.exponents.size(); ++j)
    if (label.exponents[j] > 0) p = p * elementary(n, static_cast<int>(j + 1)).pow(label.exponents[j]);
  if (label.xn_power > 0) {
    std::vector<int> e(uz(n), 0);
    e[uz(n - 1)] = label.xn_power;
    p = p.times_monomial(Monomial::from_exponents(std::span<const int>(e)));
  }
  return p;
}

std::vector<BasisElement> build_basis_family(Family f, const FamilyParams& params, Exec exec) {
  FamilyParams p = normalize_params(f, params);
  auto labels = basis_labels(f, p);
  const int n = p.n;

  // Distinct (S, T) pairs and exponent tuples are evaluated once each.
  std::map<std::pair<Tableau, Tableau>, int> pair_index;
  std::map<std::vector<int>, int> tuple_index;
  std::vector<int> pair_of(labels.size()), tuple_of(labels.size());
  std::vector<const BasisLabel*> pair_rep, tuple_rep;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [pit, pnew] = pair_index.emplace(std::make_pair(labels[i].s, labels[i].t), static_cast<int>(pair_rep.size()));
    if (pnew) pair_rep.push_back(&labels[i]);
    pair_of[i] = pit->second;
    auto [tit, tnew] = tuple_index.emplace(labels[i].exponents, static_cast<int>(tuple_rep.size()));
    if (tnew) tuple_rep.push_back(&labels[i]);
    tuple_of[i] = tit->second;
  }

  std::vector<Poly> pair_poly(pair_rep.size());
  const long npairs = static_cast<long>(pair_rep.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < npairs; ++i) {
      Poly q = higher_specht(pair_rep[uz(static_cast<int>(i))]->s, pair_rep[uz(static_cast<int>(i))]->t);
      pair_poly[uz(static_cast<int>(i))] = q.nvars() < n ? q.embedded(n) : q;
    }
  } else {
    for (long i = 0; i < npairs; ++i) {
      Poly q = higher_specht(pair_rep[uz(static_cast<int>(i))]->s, pair_rep[uz(static_cast<int>(i))]->t);
      pair_poly[uz(static_cast<int>(i))] = q.nvars() < n ? q.embedded(n) : q;
    }
  }

  std::vector<Poly> tuple_poly;
  std::vector<Poly> elem;
  for (int j = 1; j <= n; ++j) elem.push_back(elementary(n, j));
  for (const BasisLabel* lab : tuple_rep) {
    Poly e(n, Rational(1));
    for (std::size_t j = 0; j < lab->exponents.size(); ++j)
      if (lab->exponents[j] > 0) e = e * elem[j].pow(lab->exponents[j]);
    tuple_poly.push_back(std::move(e));
  }

  std::vector<BasisElement> out(labels.size());
  const long nl = static_cast<long>(labels.size());
  auto fill = [&](long i) {
    const std::size_t u = uz(static_cast<int>(i));
    const Poly& base = pair_poly[uz(pair_of[u])];
    const Poly& ep = tuple_poly[uz(tuple_of[u])];
    out[u].label = labels[u];
    out[u].poly = labels[u].exponents.empty() ? base : base * ep;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nl; ++i) fill(i);
  } else {
    for (long i = 0; i < nl; ++i) fill(i);
  }
  return out;
}

}  // namespace hspecht
