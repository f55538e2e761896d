#include "hspecht/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hspecht {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

Monomial var_power(int n, int i, int e) {
  std::vector<int> ex(uz(n), 0);
  ex[uz(i - 1)] = e;
  return Monomial::from_exponents(std::span<const int>(ex));
}

// e_r(S) generators over all nonempty subsets S with threshold < r <= |S|.
void add_subset_generators(int n, const Partition& mu, int shift, std::vector<Poly>& gens) {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vars;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) vars.push_back(i);
    const int sz = static_cast<int>(vars.size());
    const int threshold = column_excess(mu, n - sz) + shift;
    for (int r = std::max(1, threshold + 1); r <= sz; ++r) gens.push_back(elementary(n, r, vars));
  }
}

SparseVec merge_terms(SparseVec parts) {
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [col, c] : parts) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += c;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(col, std::move(c));
    }
  }
  return out;
}

int default_cap(const IdealSpec& spec) {
  const FamilyParams& p = spec.params;
  switch (spec.family) {
    case Family::Rn: return p.n * (p.n - 1) / 2;
    case Family::Rnk:
    case Family::Rnks:
    case Family::Rnkmu: return p.n * (p.k - 1);
    case Family::Rmu: return n_statistic(p.mu);
  }
  return 64;
}

}  // namespace

IdealSpec build_ideal(Family f, const FamilyParams& raw) {
  FamilyParams p = normalize_params(f, raw);
  IdealSpec spec;
  spec.family = f;
  spec.params = p;
  spec.nvars = p.n;
  const int n = p.n;
  switch (f) {
    case Family::Rn:
      for (int r = 1; r <= n; ++r) spec.generators.push_back(elementary(n, r));
      break;
    case Family::Rnk:
    case Family::Rnks:
      for (int i = 1; i <= n; ++i) spec.generators.push_back(Poly::monomial(n, var_power(n, i, p.k)));
      for (int r = n; r >= n - p.s + 1; --r) spec.generators.push_back(elementary(n, r));
      break;
    case Family::Rmu:
      add_subset_generators(n, p.mu, 0, spec.generators);
      break;
    case Family::Rnkmu:
      for (int i = 1; i <= n; ++i) spec.generators.push_back(Poly::monomial(n, var_power(n, i, p.k)));
      add_subset_generators(n, p.mu, n - p.mu.size(), spec.generators);
      break;
  }
  return spec;
}

IdealSpec build_ideal(int nvars, std::vector<Poly> generators) {
  IdealSpec spec;
  spec.family = Family::Rn;
  spec.params.n = nvars;
  spec.nvars = nvars;
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("build_ideal: generator variable count mismatch");
    if (!g.is_homogeneous()) throw std::invalid_argument("build_ideal: generators must be homogeneous");
  }
  spec.generators = std::move(generators);
  return spec;
}

// ---------------------------------------------------------------- GradedQuotient

GradedQuotient::GradedQuotient(IdealSpec spec, int degree_cap) : spec_(std::move(spec)) {
  for (const auto& g : spec_.generators)
    if (!g.is_homogeneous()) throw std::invalid_argument("GradedQuotient: generators must be homogeneous");
  bool custom = spec_.generators.empty() || spec_.params.n == 0;
  if (degree_cap < 0) degree_cap = custom ? 64 : default_cap(spec_);
  build(degree_cap);
}

long GradedQuotient::total_dimension() const {
  return std::accumulate(hilbert_.begin(), hilbert_.end(), 0L);
}

const std::vector<Monomial>& GradedQuotient::standard_monomials(int d) const {
  static const std::vector<Monomial> kEmpty;
  if (d < 0 || d > top_degree()) return kEmpty;
  return slices_[uz(d)].standard;
}

SparseVec GradedQuotient::candidate_nf(int d, const SparseVec& cand_vec) const {
  const Slice& sl = slices_[uz(d)];
  SparseVec r = sl.echelon.reduce(cand_vec);
  for (auto& e : r) e.first = sl.std_of_cand[uz(e.first)];
  return r;
}

SparseVec GradedQuotient::lift(int d, int j, const SparseVec& v) const {
  const Slice& from = slices_[uz(d)];
  const Slice& to = slices_[uz(d + 1)];
  const Monomial xj = Monomial::variable(j);
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) out.emplace_back(to.cand_index.at(xj * from.standard[uz(idx)]), c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

SparseVec GradedQuotient::nf_locked(Monomial m) const {
  const int d = m.degree();
  if (d >= static_cast<int>(slices_.size())) return {};
  auto it = nf_cache_.find(m);
  if (it != nf_cache_.end()) return it->second;
  const Slice& sl = slices_[uz(d)];
  SparseVec res;
  if (sl.standard.empty()) {
    res = {};
  } else {
    auto ci = sl.cand_index.find(m);
    if (ci != sl.cand_index.end()) {
      res = candidate_nf(d, SparseVec{{ci->second, Rational(1)}});
    } else {
      int j = 1;
      while (m.exponent(j) == 0) ++j;
      const Monomial xj = Monomial::variable(j);
      SparseVec lower = nf_locked(xj.quotient_of(m));
      res = candidate_nf(d, lift(d - 1, j, lower));
    }
  }
  nf_cache_.emplace(m, res);
  return res;
}

SparseVec GradedQuotient::phi(int d1, Monomial m) const {
  const Slice& sl = slices_[uz(d1)];
  auto ci = sl.cand_index.find(m);
  if (ci != sl.cand_index.end()) return SparseVec{{ci->second, Rational(1)}};
  const Slice& below = slices_[uz(d1 - 1)];
  int pick = 0;
  for (int j = 1; j <= spec_.nvars; ++j) {
    if (m.exponent(j) == 0) continue;
    if (pick == 0) pick = j;
    auto bi = below.cand_index.find(Monomial::variable(j).quotient_of(m));
    if (bi != below.cand_index.end() && below.std_of_cand[uz(bi->second)] < 0) {
      pick = j;
      break;
    }
  }
  return lift(d1 - 1, pick, nf_locked(Monomial::variable(pick).quotient_of(m)));
}

void GradedQuotient::build(int degree_cap) {
  const int n = spec_.nvars;
  std::map<int, std::vector<const Poly*>> gens;
  for (const auto& g : spec_.generators)
    if (!g.is_zero()) gens[g.degree()].push_back(&g);

  auto finalize = [&](Slice& sl, int d) {
    sl.std_of_cand.assign(sl.cand.size(), -1);
    for (std::size_t c = 0; c < sl.cand.size(); ++c)
      if (!sl.echelon.is_pivot(static_cast<int>(c))) {
        sl.std_of_cand[c] = static_cast<int>(sl.standard.size());
        sl.standard.push_back(sl.cand[c]);
      }
    (void)d;
  };
  auto add_generators = [&](Slice& sl, int d) {
    auto it = gens.find(d);
    if (it == gens.end()) return;
    for (const Poly* g : it->second) {
      SparseVec parts;
      for (const auto& t : g->terms())
        for (auto& [col, c] : phi(d, t.mono)) parts.emplace_back(col, c * t.coeff);
      sl.echelon.insert(merge_terms(std::move(parts)));
    }
  };

  slices_.clear();
  nf_cache_.clear();
  {
    Slice s0;
    s0.cand = {Monomial{}};
    s0.cand_index.emplace(Monomial{}, 0);
    s0.echelon = RowEchelon(1);
    slices_.push_back(std::move(s0));
    add_generators(slices_[0], 0);
    finalize(slices_[0], 0);
  }

  for (int d = 0; !slices_[uz(d)].standard.empty(); ++d) {
    if (d + 1 > degree_cap + 1)
      throw std::runtime_error("GradedQuotient: nonzero quotient beyond degree cap " + std::to_string(degree_cap));
    Slice next;
    {
      const Slice& cur = slices_[uz(d)];
      std::vector<Monomial> cand;
      for (Monomial q : cur.standard)
        for (int i = 1; i <= n; ++i) cand.push_back(Monomial::variable(i) * q);
      std::sort(cand.begin(), cand.end(), MonomialDescending{});
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      next.cand = std::move(cand);
      for (std::size_t c = 0; c < next.cand.size(); ++c) next.cand_index.emplace(next.cand[c], static_cast<int>(c));
      next.echelon = RowEchelon(static_cast<int>(next.cand.size()));
    }
    slices_.push_back(std::move(next));
    const Slice& cur = slices_[uz(d)];
    Slice& nx = slices_[uz(d + 1)];

    // Border relations x_i * (p - NF(p)) for nonstandard candidates p.
    for (std::size_t c = 0; c < cur.cand.size(); ++c) {
      if (cur.std_of_cand[c] >= 0) continue;
      const Monomial p = cur.cand[c];
      const SparseVec nfp = nf_locked(p);
      for (int i = 1; i <= n; ++i) {
        const Monomial m = Monomial::variable(i) * p;
        SparseVec lhs;
        auto ci = nx.cand_index.find(m);
        if (ci != nx.cand_index.end()) {
          lhs = SparseVec{{ci->second, Rational(1)}};
        } else {
          int j = 1;
          for (; j <= n; ++j) {
            if (m.exponent(j) == 0) continue;
            auto bi = cur.cand_index.find(Monomial::variable(j).quotient_of(m));
            if (bi != cur.cand_index.end() && cur.std_of_cand[uz(bi->second)] < 0) break;
          }
          if (j == i) continue;
          lhs = lift(d, j, nf_locked(Monomial::variable(j).quotient_of(m)));
        }
        SparseVec parts = std::move(lhs);
        for (auto& [col, coef] : lift(d, i, nfp)) parts.emplace_back(col, -coef);
        nx.echelon.insert(merge_terms(std::move(parts)));
      }
    }
    add_generators(nx, d + 1);
    finalize(nx, d + 1);
  }

  hilbert_.clear();
  for (const auto& sl : slices_) {
    if (sl.standard.empty()) break;
    hilbert_.push_back(static_cast<int>(sl.standard.size()));
  }
}

SparseVec GradedQuotient::normal_form(Monomial m) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return nf_locked(m);
}

SparseVec GradedQuotient::project(const Poly& p) const {
  if (p.nvars() != nvars()) throw std::invalid_argument("project: variable count mismatch");
  if (!p.is_homogeneous()) throw std::invalid_argument("project: polynomial must be homogeneous");
  if (p.is_zero()) return {};
  SparseVec parts;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    for (const auto& t : p.terms())
      for (auto& [idx, c] : nf_locked(t.mono)) parts.emplace_back(idx, c * t.coeff);
  }
  return merge_terms(std::move(parts));
}

Poly GradedQuotient::reduce(const Poly& p) const {
  if (p.nvars() != nvars()) throw std::invalid_argument("reduce: variable count mismatch");
  std::vector<Term> terms;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  for (const auto& t : p.terms()) {
    const int d = t.mono.degree();
    if (d > top_degree()) continue;
    const auto& stdm = slices_[uz(d)].standard;
    for (auto& [idx, c] : nf_locked(t.mono)) terms.push_back({stdm[uz(idx)], c * t.coeff});
  }
  return Poly::from_terms(nvars(), std::move(terms));
}

MacaulaySlice macaulay_slice(const IdealSpec& spec, int d) {
  MacaulaySlice out;
  const int n = spec.nvars;
  out.columns = monomials_of_degree(n, d);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (std::size_t c = 0; c < out.columns.size(); ++c) index.emplace(out.columns[c], static_cast<int>(c));
  out.echelon = RowEchelon(static_cast<int>(out.columns.size()));
  for (const auto& g : spec.generators) {
    if (g.is_zero() || g.degree() > d) continue;
    for (Monomial t : monomials_of_degree(n, d - g.degree())) {
      SparseVec row;
      for (const auto& term : g.terms()) row.emplace_back(index.at(term.mono * t), term.coeff);
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      out.echelon.insert(row);
    }
  }
  for (std::size_t c = 0; c < out.columns.size(); ++c)
    if (!out.echelon.is_pivot(static_cast<int>(c))) out.standard.push_back(out.columns[c]);
  return out;
}

// ---------------------------------------------------------------- basis checks

namespace {

std::string label_text(const BasisLabel& l) {
  std::ostringstream os;
  os << "S=" << l.s.str() << " T=" << l.t.str();
  if (!l.exponents.empty()) {
    os << " e=(";
    for (std::size_t i = 0; i < l.exponents.size(); ++i) os << (i ? "," : "") << l.exponents[i];
    os << ")";
  }
  if (l.xn_power) os << " xn^" << l.xn_power;
  return os.str();
}

}  // namespace

BasisReport verify_basis(const GradedQuotient& q, const std::vector<BasisElement>& family) {
  BasisReport rep;
  rep.hilbert = q.hilbert();
  rep.expected_size = q.total_dimension();
  rep.size = static_cast<long>(family.size());
  std::map<int, std::vector<std::size_t>> by_degree;
  for (int d = 0; d <= q.top_degree(); ++d) by_degree[d];
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Poly& p = family[i].poly;
    if (p.is_zero()) {
      rep.failures.push_back("element " + std::to_string(i) + " (" + label_text(family[i].label) + ") is zero");
      if (rep.first_dependent < 0) rep.first_dependent = static_cast<long>(i);
      continue;
    }
    if (!p.is_homogeneous() || p.nvars() != q.nvars()) {
      rep.failures.push_back("element " + std::to_string(i) + " is not homogeneous in the ring's variables");
      continue;
    }
    by_degree[p.degree()].push_back(i);
  }
  bool all_ok = true;
  for (const auto& [d, idxs] : by_degree) {
    DegreeCheck dc;
    dc.degree = d;
    dc.expected = q.dimension(d);
    dc.candidates = static_cast<int>(idxs.size());
    RowEchelon ech(dc.expected);
    for (std::size_t i : idxs) {
      if (!ech.insert(q.project(family[i].poly))) {
        if (rep.first_dependent < 0) rep.first_dependent = static_cast<long>(i);
        rep.failures.push_back("degree " + std::to_string(d) + ": element " + std::to_string(i) + " (" +
                               label_text(family[i].label) + ") depends on earlier elements");
      }
    }
    dc.rank = ech.rank();
    dc.ok = dc.candidates == dc.expected && dc.rank == dc.expected;
    if (!dc.ok && dc.candidates != dc.expected)
      rep.failures.push_back("degree " + std::to_string(d) + ": " + std::to_string(dc.candidates) +
                             " candidates for dimension " + std::to_string(dc.expected));
    all_ok = all_ok && dc.ok;
    rep.per_degree.push_back(dc);
  }
  rep.verdict = all_ok && rep.failures.empty() && rep.size == rep.expected_size;
  return rep;
}

std::vector<BasisElement> gp_recursion_family(const Partition& mu) {
  const int n = mu.size();
  if (n < 1) throw std::invalid_argument("gp_recursion_family: mu must be nonempty");
  std::vector<BasisElement> out;
  for (int i = 1; i <= mu.length(); ++i) {
    Partition child = mu_child(mu, i);
    const Monomial xn = var_power(n, n, i - 1);
    if (child.size() == 0) {
      BasisElement e;
      e.label.degree = i - 1;
      e.label.xn_power = i - 1;
      e.poly = Poly::monomial(n, xn);
      out.push_back(std::move(e));
      continue;
    }
    FamilyParams p;
    p.mu = child;
    for (auto& e : build_basis_family(Family::Rmu, p)) {
      e.label.xn_power = i - 1;
      e.label.degree += i - 1;
      e.poly = e.poly.embedded(n).times_monomial(xn);
      out.push_back(std::move(e));
    }
  }
  return out;
}

TransitionMatrix transition_matrix(const Partition& mu, int d, TransitionOptions opts) {
  TransitionMatrix tm;
  tm.mu = mu;
  tm.degree = d;
  FamilyParams p;
  p.mu = mu;
  std::vector<const BasisElement*> rows, cols;
  auto bfam = build_basis_family(Family::Rmu, p);
  auto cfam = gp_recursion_family(mu);
  if (opts.scaling == Scaling::Primitive) {
    for (auto& e : bfam) e.poly = primitive_part(e.poly);
    for (auto& e : cfam) e.poly = primitive_part(e.poly);
  }
  for (const auto& e : bfam)
    if (e.label.degree == d) rows.push_back(&e);
  for (const auto& e : cfam)
    if (e.label.degree == d) cols.push_back(&e);
  if (opts.rows == RowOrder::LastLetterAny)
    std::stable_sort(rows.begin(), rows.end(), [](const BasisElement* x, const BasisElement* y) {
      return last_letter_compare_any(x->label.t, y->label.t) < 0;
    });
  for (auto* e : rows) tm.rows.push_back(e->label);
  for (auto* e : cols) tm.cols.push_back(e->label);

  GradedQuotient q(build_ideal(Family::Rmu, p));
  const int h = q.dimension(d);
  Matrix c(h, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [idx, v] : q.project(cols[j]->poly)) c(idx, static_cast<int>(j)) = v;
  tm.columns_independent = static_cast<int>(cols.size()) == h && c.rank() == h;
  tm.m = Matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> b(uz(h));
    for (auto& [idx, v] : q.project(rows[i]->poly)) b[uz(idx)] = v;
    auto x = solve_linear(c, b);
    if (!x) throw std::runtime_error("transition_matrix: row " + std::to_string(i) + " is outside the column span");
    for (std::size_t j = 0; j < cols.size(); ++j) tm.m(static_cast<int>(i), static_cast<int>(j)) = (*x)[j];
  }
  return tm;
}

AlmostLowerResult almost_lower_triangular(const Matrix& m) {
  AlmostLowerResult res;
  if (!m.is_square()) return res;
  const int n = m.rows();
  Matrix a(n, n);
  for (int j = 0; j < n; ++j) {
    // Prefer a_jj = 1: solve the top j rows against columns 0..j-1.
    std::vector<Rational> col(uz(j + 1));
    bool found = false;
    {
      Matrix top(j, j);
      std::vector<Rational> rhs(uz(j));
      for (int i = 0; i < j; ++i) {
        for (int k = 0; k < j; ++k) top(i, k) = m(i, k);
        rhs[uz(i)] = -m(i, j);
      }
      auto x = solve_linear(top, rhs);
      if (x) {
        Rational diag = m(j, j);
        for (int k = 0; k < j; ++k) diag += m(j, k) * (*x)[uz(k)];
        if (!diag.is_zero()) {
          for (int k = 0; k < j; ++k) col[uz(k)] = (*x)[uz(k)];
          col[uz(j)] = Rational(1);
          found = true;
        }
      }
    }
    if (!found) {
      // Any kernel vector of the top j rows with nonzero value in row j.
      Matrix top(j, j + 1);
      for (int i = 0; i < j; ++i)
        for (int k = 0; k <= j; ++k) top(i, k) = m(i, k);
      auto piv = rref(top);
      std::vector<bool> is_piv(uz(j + 1), false);
      for (int pc : piv) is_piv[uz(pc)] = true;
      for (int f = 0; f <= j && !found; ++f) {
        if (is_piv[uz(f)]) continue;
        std::vector<Rational> v(uz(j + 1));
        v[uz(f)] = Rational(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[uz(piv[r])] = -top(static_cast<int>(r), f);
        Rational val;
        for (int k = 0; k <= j; ++k) val += m(j, k) * v[uz(k)];
        if (!val.is_zero()) {
          col = v;
          found = true;
        }
      }
    }
    if (!found) return res;
    for (int k = 0; k <= j; ++k) a(k, j) = col[uz(k)];
  }
  res.a = a;
  res.ma = m * a;
  res.ok = res.a.is_upper_triangular() && res.ma.is_lower_triangular() && res.ma.has_nonzero_diagonal();
  return res;
}

namespace {

Tableau unique_ssyt(const Partition& shape, const Partition& content) {
  auto v = semistandard_tableaux(shape, content);
  if (v.size() != 1) throw std::invalid_argument("two_row_residual: expected a unique tableau of shape " + shape.str() + " and content " + content.str());
  return v.front();
}

}  // namespace

Poly two_row_residual(const Partition& mu, const Tableau& t) {
  const int n = mu.size();
  if (mu.length() != 2) throw std::invalid_argument("two_row_residual: mu must have two rows");
  if (!t.is_standard() || t.size() != n || t.num_rows() != 2)
    throw std::invalid_argument("two_row_residual: T must be a standard two-row tableau on 1..n");
  const int d = t.shape().part(2);
  if (t.rows()[1].back() != n) throw std::invalid_argument("two_row_residual: n must lie in the top row of T");
  const Tableau s = unique_ssyt(t.shape(), mu);
  const std::vector<int>& bottom = t.rows()[0];
  std::vector<int> top(t.rows()[1].begin(), t.rows()[1].end() - 1);

  const Tableau t2 = top.empty() ? Tableau({bottom}) : Tableau({bottom, top});
  const Tableau s2 = unique_ssyt(t2.shape(), mu_child(mu, 2));
  const Rational alpha = Rational(d, n - 2 * d + 1) + Rational(d);
  const Rational beta = Rational(n - d, n - 2 * d + 1);

  Poly res = higher_specht(s, t);
  Poly f2 = higher_specht(s2, t2).embedded(n).times_monomial(var_power(n, n, 1));
  res -= alpha * f2;
  if (n - d > d) {
    const Partition shape1{n - d - 1, d};
    const Tableau s1 = unique_ssyt(shape1, mu_child(mu, 1));
    for (int idx = d; idx < n - d; ++idx) {
      const int j = bottom[uz(idx)];
      std::vector<int> b1;
      for (int v : bottom)
        if (v != j) b1.push_back(v);
      std::vector<int> t1 = top;
      t1.push_back(j);
      res -= beta * higher_specht(s1, Tableau({b1, t1})).embedded(n);
    }
  }
  return res;
}

}  // namespace hspecht
