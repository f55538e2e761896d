#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hspecht {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed and has size 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Comma-separated parts, e.g. "3,3,2". The empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based part; 0 beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
/// c_t(mu) = mu'_1 + ... + mu'_t - t.
int column_excess(const Partition& mu, int t);
/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
/// Diagram containment lambda ⊇ mu.
bool contains(const Partition& lambda, const Partition& mu);
/// mu with row i (1-based) shortened by one, re-sorted, zero parts dropped.
Partition mu_child(const Partition& mu, int i);
/// sum_i binom(lambda'_i, 2).
int n_statistic(const Partition& lambda);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);
/// n! / prod mu_i!.
std::int64_t multinomial(const Partition& mu);

using Word = std::vector<int>;

/// Young diagram filling in French convention: rows()[0] is the bottom row.
class Tableau {
 public:
  Tableau() = default;
  /// Rows bottom-to-top; the row lengths must form a partition.
  explicit Tableau(std::vector<std::vector<int>> rows);
  /// Rows bottom-to-top separated by '/', entries separated by spaces, e.g.
  /// "1 2 4 5/3 7 8/6". A row without spaces is read one digit per entry.
  static Tableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  /// 0-based row (from the bottom) and column.
  int at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  /// Column lengths, i.e. the conjugate shape.
  int column_height(int col) const;

  bool is_semistandard() const;
  bool is_standard() const;
  /// Every entry 1..n appears exactly once.
  bool is_bijective() const;
  /// Multiplicities m_1, m_2, ... of the letters (trailing zeros trimmed).
  std::vector<int> content() const;
  /// Cell (row, col) holding the given entry; throws if absent.
  std::pair<int, int> position(int entry) const;

  Tableau transpose() const;
  /// Entry e replaced by perm[e]; perm is 1-based with perm[0] unused.
  Tableau relabeled(std::span<const int> perm) const;

  std::string str() const;

  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// Rows from top to bottom, each left to right.
Word reading_word(const Tableau& t);

struct CochargeLabeling {
  std::vector<int> labels;          // per word position
  std::vector<int> subword_index;   // 0-based standard subword per position
  int total() const;
};

/// Cocharge labels of a word whose content is a partition, computed through
/// the standard subword decomposition (cyclically-previous extraction).
CochargeLabeling cocharge_labels(const Word& w);
int cocharge(const Word& w);
int cocharge(const Tableau& s);
/// Cocharge label of each cell of s, laid out like s.rows().
std::vector<std::vector<int>> cocharge_cell_labels(const Tableau& s);

enum class Flavor { Standard, Semistandard, AllBijective };

/// Complete enumeration in lexicographic order of the bottom-to-top row
/// concatenation. `content` is ignored for Standard and AllBijective.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Partition& content, Flavor flavor);
std::vector<Tableau> standard_tableaux(const Partition& shape);
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content);
/// SYT(n): all standard tableaux with n cells, grouped by shape in
/// partitions_of(n) order.
std::vector<Tableau> standard_tableaux_of_size(int n);

struct DescentStats {
  std::vector<int> descents;
  int des = 0;
  int maj = 0;
};

/// i is a descent when i+1 sits in a strictly higher row. Requires a standard tableau.
DescentStats descent_stats(const Tableau& s);
/// Descent count of the standardization; equals descent_stats().des for standard input.
int descents_of(const Tableau& s);

Tableau destandardize(const Tableau& s);
/// Equal letters are numbered left to right.
Tableau standardize(const Tableau& s);

struct RskPair {
  Tableau p;  // semistandard insertion tableau
  Tableau q;  // standard recording tableau
};

RskPair rsk(const Word& w);
Word rsk_inverse(const Tableau& p, const Tableau& q);

struct EncodedTuple {
  Tableau s;
  Tableau t;
  std::vector<int> increments;
};

/// (S, T, i_1..i_n) -> semistandard R with entries <= k, paired with T.
Tableau lemma22_encode(const Tableau& s, const Tableau& t, std::span<const int> increments, int k);
EncodedTuple lemma22_decode(const Tableau& r, const Tableau& t);

/// Last letter order on standard tableaux of one shape: T1 < T2 when the
/// largest letter in different cells sits in a lower row of T1.
std::strong_ordering last_letter_compare(const Tableau& a, const Tableau& b);
void sort_last_letter(std::vector<Tableau>& ts);
/// Extension to standard tableaux of different shapes with the same size:
/// ties in the row of the deciding letter go to the rightmost cell.
std::strong_ordering last_letter_compare_any(const Tableau& a, const Tableau& b);

}  // namespace hspecht
