#include "hspecht/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace hspecht {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

}  // namespace

// ---------------------------------------------------------------- q-polynomials

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qpoly_trim(std::move(r));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qpoly_trim(std::move(r));
}

QPoly qinteger(int a) {
  if (a <= 0) return {};
  return QPoly(uz(a), 1);
}

QPoly qbinomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return {};
  // Pascal: [a, b] = [a-1, b-1] + q^b [a-1, b].
  std::vector<QPoly> row{QPoly{1}};
  for (int m = 1; m <= a; ++m) {
    std::vector<QPoly> next(uz(m + 1));
    next[0] = QPoly{1};
    next[uz(m)] = QPoly{1};
    for (int j = 1; j < m; ++j) {
      QPoly shifted(uz(j), 0);
      shifted.insert(shifted.end(), row[uz(j)].begin(), row[uz(j)].end());
      next[uz(j)] = qpoly_add(row[uz(j - 1)], shifted);
    }
    row = std::move(next);
  }
  return row[uz(b)];
}

std::string qpoly_str(const QPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::int64_t c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- characters

namespace {

std::int64_t mn_beta(std::vector<int>& beta, const std::vector<int>& rho, std::size_t at) {
  if (at == rho.size()) return 1;
  const int r = rho[at];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > nb && c < b) ++between;
    beta[i] = nb;
    const std::int64_t sub = mn_beta(beta, rho, at + 1);
    beta[i] = b;
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("mn_character: size mismatch");
  const int l = lambda.length();
  std::vector<int> beta(uz(l));
  for (int i = 1; i <= l; ++i) beta[uz(i - 1)] = lambda.part(i) + (l - i);
  return mn_beta(beta, rho.parts(), 0);
}

std::int64_t count_syt(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Rational v(factorial(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) v /= Rational(lambda.part(i) - j + conj.part(j) - i + 1);
  return v.to_int64();
}

std::vector<int> cycle_type_representative(const Partition& rho) {
  std::vector<int> perm(uz(rho.size() + 1));
  int start = 1;
  for (int len : rho.parts()) {
    for (int i = 0; i < len; ++i) perm[uz(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return perm;
}

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
  if (n < 1) throw std::invalid_argument("CharacterTable: n must be positive");
  const std::int64_t nfact = factorial(n);
  for (const auto& rho : parts_) {
    std::int64_t z = 1;
    std::vector<int> mult(uz(n + 1), 0);
    for (int p : rho.parts()) ++mult[uz(p)];
    for (int i = 1; i <= n; ++i) {
      for (int m = 0; m < mult[uz(i)]; ++m) z *= i;
      z *= factorial(mult[uz(i)]);
    }
    class_size_.push_back(nfact / z);
  }
  for (const auto& lambda : parts_) {
    std::vector<std::int64_t> row;
    for (const auto& rho : parts_) row.push_back(mn_character(lambda, rho));
    chi_.push_back(std::move(row));
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::find(parts_.begin(), parts_.end(), p);
  if (it == parts_.end()) throw std::invalid_argument("CharacterTable: not a partition of n");
  return static_cast<std::size_t>(it - parts_.begin());
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& rho) const {
  return chi_[index_of(lambda)][index_of(rho)];
}

const CharacterTable& character_table(int n) {
  static std::shared_mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>(n);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

// ---------------------------------------------------------------- expansions

void GradedSchurExpansion::add(int degree, const Partition& lambda, std::int64_t mult) {
  if (mult == 0) return;
  Key key{degree, lambda};
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(key), mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) coeffs_.erase(it);
}

std::int64_t GradedSchurExpansion::coefficient(int degree, const Partition& lambda) const {
  auto it = coeffs_.find(Key{degree, lambda});
  return it == coeffs_.end() ? 0 : it->second;
}

bool GradedSchurExpansion::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

int GradedSchurExpansion::max_degree() const {
  int m = -1;
  for (const auto& [key, c] : coeffs_) m = std::max(m, key.first);
  return m;
}

GradedSchurExpansion GradedSchurExpansion::times(const QPoly& p) const {
  GradedSchurExpansion out;
  for (const auto& [key, c] : coeffs_)
    for (std::size_t i = 0; i < p.size(); ++i) out.add(key.first + static_cast<int>(i), key.second, c * p[i]);
  return out;
}

GradedSchurExpansion GradedSchurExpansion::shifted(int s) const {
  GradedSchurExpansion out;
  for (const auto& [key, c] : coeffs_) out.add(key.first + s, key.second, c);
  return out;
}

GradedSchurExpansion GradedSchurExpansion::reversed(int top) const {
  GradedSchurExpansion out;
  for (const auto& [key, c] : coeffs_) {
    if (key.first > top) throw std::invalid_argument("reversed: degree above the reflection point");
    out.add(top - key.first, key.second, c);
  }
  return out;
}

std::int64_t GradedSchurExpansion::dimension() const {
  std::int64_t s = 0;
  for (const auto& [key, c] : coeffs_) s += c * count_syt(key.second);
  return s;
}

std::vector<std::int64_t> GradedSchurExpansion::hilbert() const {
  std::vector<std::int64_t> h(uz(max_degree() + 1), 0);
  for (const auto& [key, c] : coeffs_) h[uz(key.first)] += c * count_syt(key.second);
  return h;
}

std::string GradedSchurExpansion::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    if (key.first == 1) os << "q*";
    else if (key.first > 1) os << "q^" << key.first << "*";
    os << "s[" << key.second.str() << "]";
  }
  return os.str();
}

GradedSchurExpansion operator+(const GradedSchurExpansion& a, const GradedSchurExpansion& b) {
  GradedSchurExpansion out = a;
  for (const auto& [key, c] : b.coeffs_) out.add(key.first, key.second, c);
  return out;
}

// ---------------------------------------------------------------- Frobenius

GradedSchurExpansion graded_frobenius(const GradedQuotient& q, Exec exec) {
  const int n = q.nvars();
  const CharacterTable& table = character_table(n);
  const auto& classes = table.partitions();
  const int top = q.top_degree();
  const int nclass = static_cast<int>(classes.size());
  std::vector<std::vector<int>> reps;
  for (const auto& rho : classes) reps.push_back(cycle_type_representative(rho));

  std::vector<Rational> traces(uz((top + 1) * nclass));
  const int tasks = (top + 1) * nclass;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int t = 0; t < tasks; ++t) {
    const int d = t / nclass;
    const auto& perm = reps[uz(t % nclass)];
    const auto& std_d = q.standard_monomials(d);
    Rational tr;
    for (std::size_t i = 0; i < std_d.size(); ++i) {
      const SparseVec nf = q.normal_form(std_d[i].permuted(perm));
      auto it = std::lower_bound(nf.begin(), nf.end(), static_cast<int>(i),
                                 [](const auto& e, int col) { return e.first < col; });
      if (it != nf.end() && it->first == static_cast<int>(i)) tr += it->second;
    }
    traces[uz(t)] = tr;
  }

  const Rational nfact(factorial(n));
  GradedSchurExpansion out;
  for (int d = 0; d <= top; ++d) {
    for (std::size_t l = 0; l < classes.size(); ++l) {
      Rational m;
      for (int r = 0; r < nclass; ++r)
        m += Rational(table.class_size(uz(r)) * table.value(l, uz(r))) * traces[uz(d * nclass + r)];
      m /= nfact;
      if (!m.is_integer() || m.sign() < 0)
        throw std::logic_error("graded_frobenius: multiplicity " + m.str() + " of s[" + classes[l].str() +
                               "] in degree " + std::to_string(d));
      out.add(d, classes[l], m.to_int64());
    }
  }
  return out;
}

GradedSchurExpansion hall_littlewood_cocharge(const Partition& mu) {
  GradedSchurExpansion out;
  for (const auto& lambda : partitions_of(mu.size()))
    for (const auto& s : semistandard_tableaux(lambda, mu)) out.add(cocharge(s), lambda, 1);
  return out;
}

GradedSchurExpansion hall_littlewood_charge(const Partition& mu) {
  return hall_littlewood_cocharge(mu).reversed(n_statistic(mu));
}

GradedSchurExpansion grfrob_formula_rnk(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("grfrob_formula_rnk: need 1 <= k <= n");
  GradedSchurExpansion out;
  for (const auto& s : standard_tableaux_of_size(n)) {
    const DescentStats ds = descent_stats(s);
    const QPoly b = qbinomial(n - ds.des - 1, n - k);
    for (std::size_t i = 0; i < b.size(); ++i) out.add(ds.maj + static_cast<int>(i), s.shape(), b[i]);
  }
  return out;
}

GradedSchurExpansion grfrob_formula_rnkmu(int n, int k, const Partition& mu) {
  if (mu.size() > n || k < std::max(1, mu.length()))
    throw std::invalid_argument("grfrob_formula_rnkmu: need |mu| <= n and k >= max(1, length of mu)");
  const Partition mu_c = conjugate(mu);
  GradedSchurExpansion sum;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() > k || !contains(lambda, mu)) continue;
    const Partition lc = conjugate(lambda);
    auto lp = [&](int i) { return i == 0 ? k : lc.part(i); };
    int shift = 0;
    for (int i = 1; i <= lambda.part(1); ++i) shift += binomial(lc.part(i) - mu_c.part(i), 2);
    QPoly coeff{1};
    for (int i = 0; i <= lambda.part(1); ++i) coeff = qpoly_mul(coeff, qbinomial(lp(i) - mu_c.part(i + 1), lp(i) - lp(i + 1)));
    sum = sum + hall_littlewood_charge(lambda).times(coeff).shifted(shift);
  }
  return sum.reversed(sum.max_degree());
}

// ---------------------------------------------------------------- blocks

BlockCheck irreducible_block_check(const Tableau& s, const GradedQuotient& q) {
  BlockCheck rep;
  rep.shape = s.shape();
  const int n = s.size();
  if (q.nvars() != n) {
    rep.message = "variable count differs from the tableau size";
    return rep;
  }
  const auto ts = standard_tableaux(s.shape());
  const int f = static_cast<int>(ts.size());
  const int deg = cocharge(s);
  const int h = q.dimension(deg);
  rep.expected_dim = f;
  Matrix c(h, f);
  for (int j = 0; j < f; ++j)
    for (auto& [idx, v] : q.project(higher_specht(s, ts[uz(j)]))) c(idx, j) = v;
  rep.rank = c.rank();
  if (rep.rank != f) {
    rep.message = "span has dimension " + std::to_string(rep.rank) + ", expected " + std::to_string(f);
    return rep;
  }
  const CharacterTable& table = character_table(n);
  const std::size_t li = table.index_of(s.shape());
  bool ok = true;
  for (std::size_t r = 0; r < table.partitions().size(); ++r) {
    const auto perm = cycle_type_representative(table.partitions()[r]);
    Rational tr;
    for (int j = 0; j < f; ++j) {
      std::vector<Rational> b(uz(h));
      for (auto& [idx, v] : q.project(higher_specht(s, ts[uz(j)].relabeled(perm)))) b[uz(idx)] = v;
      auto x = solve_linear(c, b);
      if (!x) {
        rep.message = "block is not closed under the action of class " + table.partitions()[r].str();
        return rep;
      }
      tr += (*x)[uz(j)];
    }
    rep.character.push_back(tr);
    rep.expected_character.push_back(table.value(li, r));
    ok = ok && tr == Rational(table.value(li, r));
  }
  rep.ok = ok;
  rep.message = ok ? "ok" : "character differs from the irreducible one";
  return rep;
}

}  // namespace hspecht
