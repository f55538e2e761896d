#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hspecht {

/// Largest number of variables a Monomial can carry.
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in x_1..x_n, n <= kMaxVars.
///
/// Exponents are packed one byte per variable (x_1 in the low byte). The
/// global order is graded reverse lexicographic with x_1 < x_2 < ... < x_n:
/// higher degree wins, and at equal degree the monomial with the smaller
/// exponent at the first differing variable is larger.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("Monomial: exponent out of range");
      p |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    }
    return Monomial(p);
  }
  static Monomial from_exponents(std::initializer_list<int> exps) {
    std::vector<int> v(exps);
    return from_exponents(std::span<const int>(v));
  }
  /// x_i for 1-based i.
  static constexpr Monomial variable(int i) { return Monomial(std::uint64_t{1} << (8 * (i - 1))); }

  constexpr std::uint64_t packed() const { return bits_; }
  static constexpr Monomial from_packed(std::uint64_t bits) { return Monomial(bits); }

  /// Exponent of x_i, 1-based.
  constexpr int exponent(int i) const { return static_cast<int>((bits_ >> (8 * (i - 1))) & 0xff); }
  constexpr int degree() const {
    return static_cast<int>((bits_ * 0x0101010101010101ULL) >> 56);
  }
  constexpr bool is_one() const { return bits_ == 0; }

  std::vector<int> exponents(int n) const {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = exponent(i + 1);
    return e;
  }

  constexpr Monomial operator*(Monomial o) const { return Monomial(bits_ + o.bits_); }
  constexpr bool divides(Monomial o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (((bits_ >> (8 * i)) & 0xff) > ((o.bits_ >> (8 * i)) & 0xff)) return false;
    }
    return true;
  }
  /// o / this; requires divides(o).
  constexpr Monomial quotient_of(Monomial o) const { return Monomial(o.bits_ - bits_); }

  /// Image under x_i -> x_{perm[i]}; perm is 1-based with perm[0] unused.
  Monomial permuted(std::span<const int> perm) const {
    std::uint64_t out = 0;
    std::uint64_t b = bits_;
    int i = 1;
    while (b != 0) {
      std::uint64_t e = b & 0xff;
      if (e != 0) out |= e << (8 * (perm[static_cast<std::size_t>(i)] - 1));
      b >>= 8;
      ++i;
    }
    return Monomial(out);
  }

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }

  /// Global monomial order (graded reverse lexicographic, x_1 smallest).
  friend constexpr bool order_less(Monomial a, Monomial b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint64_t x = a.bits_ ^ b.bits_;
    if (x == 0) return false;
    int byte = std::countr_zero(x) / 8;
    auto ea = (a.bits_ >> (8 * byte)) & 0xff;
    auto eb = (b.bits_ >> (8 * byte)) & 0xff;
    return ea > eb;
  }

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Descending global order, used for term lists and matrix columns.
struct MonomialDescending {
  constexpr bool operator()(Monomial a, Monomial b) const { return order_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.packed();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

/// All monomials of degree d in n variables, in descending global order.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace hspecht
