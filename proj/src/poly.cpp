#include "hspecht/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hspecht {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("monomials_of_degree: bad variable count");
  if (d < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Enumerate compositions of d into n parts.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_exponents(std::span<const int>(e)));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonomialDescending{});
  return out;
}

void Poly::check_nvars(int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("Poly: variable count must be in 1..8");
}

Poly::Poly(int nvars, const Rational& constant) : nvars_(nvars) {
  check_nvars(nvars);
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

Poly Poly::monomial(int nvars, Monomial m, Rational c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("Poly::variable: index out of range");
  return monomial(nvars, Monomial::variable(i));
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  Poly p(nvars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return order_less(b.mono, a.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

Rational Poly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial x) { return order_less(x, t.mono); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational();
}

int Poly::max_variable_exponent() const {
  int best = 0;
  for (const auto& t : terms_)
    for (int i = 1; i <= nvars_; ++i) best = std::max(best, t.mono.exponent(i));
  return best;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->mono == j->mono) {
      Rational c = i->coeff + j->coeff;
      if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    } else if (order_less(j->mono, i->mono)) {
      r.terms_.push_back(*i++);
    } else {
      r.terms_.push_back(*j++);
    }
  }
  r.terms_.insert(r.terms_.end(), i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), j, b.terms_.end());
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(a.nvars_, std::move(terms));
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r(p.nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) r.terms_.push_back({t.mono, c * t.coeff});
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly result(nvars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::times_monomial(Monomial m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::embedded(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("Poly::embedded: cannot drop variables");
  Poly r = *this;
  r.nvars_ = nvars;
  check_nvars(nvars);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!c.is_one() || t.mono.is_one()) {
      os << c.str();
      wrote = true;
    }
    for (int i = 1; i <= nvars_; ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly permute_variables(std::span<const int> perm, const Poly& p) {
  const int n = p.nvars();
  if (static_cast<int>(perm.size()) != n + 1) throw std::invalid_argument("permute_variables: size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int i = 1; i <= n; ++i) {
    int v = perm[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permute_variables: not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono.permuted(perm), t.coeff});
  return Poly::from_terms(n, std::move(terms));
}

Poly elementary(int nvars, int d, std::span<const int> vars) {
  if (d < 0) throw std::invalid_argument("elementary: negative degree");
  if (d == 0) return Poly(nvars, Rational(1));
  const int m = static_cast<int>(vars.size());
  std::vector<Term> terms;
  if (d > m) return Poly(nvars);
  std::vector<int> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Monomial mono;
    for (int i : idx) mono = mono * Monomial::variable(vars[static_cast<std::size_t>(i)]);
    terms.push_back({mono, Rational(1)});
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Poly::from_terms(nvars, std::move(terms));
}

Poly elementary(int nvars, int d) {
  std::vector<int> all(static_cast<std::size_t>(nvars));
  std::iota(all.begin(), all.end(), 1);
  return elementary(nvars, d, all);
}

Poly vandermonde(int n) {
  Poly v(n, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v = v * (Poly::variable(n, i) - Poly::variable(n, j));
  return v;
}

Rational coefficient_content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  mpz_class num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpq_class q = t.coeff.to_mpq();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  return Rational(mpq_class(num, den));
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return coefficient_content(p).inverse() * p;
}

}  // namespace hspecht
