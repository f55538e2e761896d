#include "hspecht/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hspecht {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

int parse_int(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse integer '" + tok + "'");
  }
  if (used != tok.size()) throw std::invalid_argument("cannot parse integer '" + tok + "'");
  return v;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string t = trim(std::string(text));
  if (t.empty()) return Partition();
  std::vector<int> parts;
  for (auto& tok : split(t, ',')) parts.push_back(parse_int(trim(tok)));
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c;
  for (int j = 1; j <= lambda.part(1); ++j) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

int column_excess(const Partition& mu, int t) {
  if (t < 0) throw std::invalid_argument("column_excess: t must be nonnegative");
  Partition c = conjugate(mu);
  int s = 0;
  for (int j = 1; j <= t; ++j) s += c.part(j);
  return s - t;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

Partition mu_child(const Partition& mu, int i) {
  if (i < 1 || i > mu.length()) throw std::out_of_range("mu_child: row index out of range");
  std::vector<int> parts = mu.parts();
  parts[uz(i - 1)] -= 1;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int n_statistic(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  int s = 0;
  for (int c : conj.parts()) s += c * (c - 1) / 2;
  return s;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: argument out of range");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t multinomial(const Partition& mu) {
  std::int64_t r = 1;
  int acc = 0;
  for (int p : mu.parts()) {
    acc += p;
    r *= binomial(acc, p);
  }
  return r;
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  while (!lens.empty() && lens.back() == 0) {
    lens.pop_back();
    rows_.pop_back();
  }
  shape_ = Partition(lens);
}

Tableau Tableau::parse(std::string_view text) {
  std::string t = trim(std::string(text));
  std::vector<std::vector<int>> rows;
  if (t.empty()) return Tableau();
  for (auto& rowtext : split(t, '/')) {
    std::string r = trim(rowtext);
    std::vector<int> row;
    if (r.find_first_of(" \t") == std::string::npos) {
      for (char c : r) {
        if (c < '0' || c > '9') throw std::invalid_argument("Tableau: bad entry in '" + r + "'");
        row.push_back(c - '0');
      }
    } else {
      std::istringstream is(r);
      std::string tok;
      while (is >> tok) row.push_back(parse_int(tok));
    }
    if (row.empty()) throw std::invalid_argument("Tableau: empty row");
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

int Tableau::column_height(int col) const {
  int h = 0;
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) > col) ++h;
  return h;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] < 1) return false;
      if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_bijective() const {
  const int n = size();
  std::vector<bool> seen(uz(n + 1), false);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n || seen[uz(v)]) return false;
      seen[uz(v)] = true;
    }
  return true;
}

bool Tableau::is_standard() const { return is_bijective() && is_semistandard(); }

std::vector<int> Tableau::content() const {
  std::vector<int> m;
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1) throw std::invalid_argument("Tableau::content: nonpositive entry");
      if (static_cast<int>(m.size()) < v) m.resize(uz(v), 0);
      ++m[uz(v - 1)];
    }
  return m;
}

std::pair<int, int> Tableau::position(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
  throw std::invalid_argument("Tableau::position: entry not present");
}

Tableau Tableau::transpose() const {
  std::vector<std::vector<int>> out;
  if (rows_.empty()) return Tableau();
  for (std::size_t c = 0; c < rows_[0].size(); ++c) {
    std::vector<int> row;
    for (const auto& r : rows_)
      if (r.size() > c) row.push_back(r[c]);
    out.push_back(std::move(row));
  }
  return Tableau(std::move(out));
}

Tableau Tableau::relabeled(std::span<const int> perm) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) v = perm[uz(v)];
  return Tableau(std::move(rows));
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += " ";
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

// ---------------------------------------------------------------- words and cocharge

Word reading_word(const Tableau& t) {
  Word w;
  for (int r = t.num_rows() - 1; r >= 0; --r)
    for (int v : t.rows()[uz(r)]) w.push_back(v);
  return w;
}

int CochargeLabeling::total() const { return std::accumulate(labels.begin(), labels.end(), 0); }

CochargeLabeling cocharge_labels(const Word& w) {
  const int len = static_cast<int>(w.size());
  int maxletter = 0;
  for (int v : w) {
    if (v < 1) throw std::invalid_argument("cocharge_labels: letters must be positive");
    maxletter = std::max(maxletter, v);
  }
  std::vector<int> mult(uz(maxletter + 1), 0);
  for (int v : w) ++mult[uz(v)];
  for (int i = 1; i < maxletter; ++i)
    if (mult[uz(i)] < mult[uz(i + 1)]) throw std::invalid_argument("cocharge_labels: content is not a partition");

  CochargeLabeling out;
  out.labels.assign(uz(len), 0);
  out.subword_index.assign(uz(len), -1);
  std::vector<int> left = mult;
  int used = 0;
  for (int sub = 0; used < len; ++sub) {
    int top = 0;
    while (top + 1 <= maxletter && left[uz(top + 1)] > 0) ++top;
    int cur = -1;
    for (int p = len - 1; p >= 0; --p)
      if (out.subword_index[uz(p)] < 0 && w[uz(p)] == 1) {
        cur = p;
        break;
      }
    int label = 0;
    out.labels[uz(cur)] = 0;
    out.subword_index[uz(cur)] = sub;
    for (int letter = 2; letter <= top; ++letter) {
      int next = -1;
      for (int p = cur - 1; p >= 0; --p)
        if (out.subword_index[uz(p)] < 0 && w[uz(p)] == letter) {
          next = p;
          break;
        }
      if (next < 0) {
        for (int p = len - 1; p > cur; --p)
          if (out.subword_index[uz(p)] < 0 && w[uz(p)] == letter) {
            next = p;
            break;
          }
      } else {
        ++label;  // letter sits to the left of its predecessor
      }
      out.labels[uz(next)] = label;
      out.subword_index[uz(next)] = sub;
      cur = next;
    }
    for (int letter = 1; letter <= top; ++letter) --left[uz(letter)];
    used += top;
  }
  return out;
}

int cocharge(const Word& w) { return cocharge_labels(w).total(); }
int cocharge(const Tableau& s) { return cocharge(reading_word(s)); }

std::vector<std::vector<int>> cocharge_cell_labels(const Tableau& s) {
  auto lab = cocharge_labels(reading_word(s));
  std::vector<std::vector<int>> out(s.rows().size());
  std::size_t pos = 0;
  for (int r = s.num_rows() - 1; r >= 0; --r) {
    for (std::size_t c = 0; c < s.rows()[uz(r)].size(); ++c) out[uz(r)].push_back(lab.labels[pos++]);
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Partition& content, Flavor flavor) {
  const int n = shape.size();
  std::vector<Tableau> out;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.part(r + 1); ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(uz(p), 0);

  if (flavor == Flavor::AllBijective) {
    std::vector<int> perm(uz(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (std::size_t i = 0; i < cells.size(); ++i) rows[uz(cells[i].first)][uz(cells[i].second)] = perm[i];
      out.emplace_back(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  std::vector<int> counts;
  if (flavor == Flavor::Standard) {
    counts.assign(uz(n + 1), 1);
    counts[0] = 0;
  } else {
    if (content.size() != n) return out;
    counts.assign(uz(content.length() + 1), 0);
    for (int i = 1; i <= content.length(); ++i) counts[uz(i)] = content.part(i);
  }
  const int maxv = static_cast<int>(counts.size()) - 1;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[uz(r)][uz(c - 1)] + (flavor == Flavor::Standard ? 1 : 0));
    if (r > 0) lo = std::max(lo, rows[uz(r - 1)][uz(c)] + 1);
    for (int v = lo; v <= maxv; ++v) {
      if (counts[uz(v)] == 0) continue;
      --counts[uz(v)];
      rows[uz(r)][uz(c)] = v;
      self(self, idx + 1);
      ++counts[uz(v)];
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  rec(rec, 0);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  return enumerate_tableaux(shape, Partition(), Flavor::Standard);
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content) {
  return enumerate_tableaux(shape, content, Flavor::Semistandard);
}

std::vector<Tableau> standard_tableaux_of_size(int n) {
  std::vector<Tableau> out;
  for (const auto& lam : partitions_of(n)) {
    auto ts = standard_tableaux(lam);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

// ---------------------------------------------------------------- descents

DescentStats descent_stats(const Tableau& s) {
  if (!s.is_standard()) throw std::invalid_argument("descent_stats: tableau is not standard");
  DescentStats d;
  const int n = s.size();
  std::vector<int> row(uz(n + 1));
  for (int r = 0; r < s.num_rows(); ++r)
    for (int v : s.rows()[uz(r)]) row[uz(v)] = r;
  for (int i = 1; i < n; ++i) {
    if (row[uz(i + 1)] > row[uz(i)]) {
      d.descents.push_back(i);
      d.maj += i;
    }
  }
  d.des = static_cast<int>(d.descents.size());
  return d;
}

int descents_of(const Tableau& s) { return descent_stats(standardize(s)).des; }

Tableau destandardize(const Tableau& s) {
  auto d = descent_stats(s);
  const int n = s.size();
  std::vector<int> value(uz(n + 1));
  int cur = 1;
  std::size_t next = 0;
  for (int i = 1; i <= n; ++i) {
    value[uz(i)] = cur;
    if (next < d.descents.size() && d.descents[next] == i) {
      ++cur;
      ++next;
    }
  }
  return s.relabeled(value);
}

Tableau standardize(const Tableau& s) {
  if (!s.is_semistandard()) throw std::invalid_argument("standardize: tableau is not semistandard");
  struct Cell {
    int value, col, row;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < s.num_rows(); ++r)
    for (int c = 0; c < s.shape().part(r + 1); ++c) cells.push_back({s.at(r, c), c, r});
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.col < b.col;
  });
  auto rows = s.rows();
  for (std::size_t i = 0; i < cells.size(); ++i) rows[uz(cells[i].row)][uz(cells[i].col)] = static_cast<int>(i + 1);
  return Tableau(std::move(rows));
}

// ---------------------------------------------------------------- RSK

RskPair rsk(const Word& w) {
  std::vector<std::vector<int>> p, q;
  for (std::size_t step = 0; step < w.size(); ++step) {
    int x = w[step];
    if (x < 1) throw std::invalid_argument("rsk: letters must be positive");
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(step + 1)});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(static_cast<int>(step + 1));
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Word rsk_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("rsk_inverse: shape mismatch");
  if (!q.is_standard() || !p.is_semistandard()) throw std::invalid_argument("rsk_inverse: bad tableau pair");
  auto prow = p.rows();
  auto qrow = q.rows();
  const int n = p.size();
  Word w(uz(n));
  for (int step = n; step >= 1; --step) {
    auto [r, c] = q.position(step);
    (void)c;
    int x = prow[uz(r)].back();
    prow[uz(r)].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      auto& row = prow[uz(rr)];
      auto it = std::lower_bound(row.begin(), row.end(), x);  // first >= x
      --it;                                                    // rightmost < x
      std::swap(x, *it);
    }
    w[uz(step - 1)] = x;
  }
  return w;
}

// ---------------------------------------------------------------- Lemma 2.2 bijection

Tableau lemma22_encode(const Tableau& s, const Tableau& t, std::span<const int> increments, int k) {
  if (!s.is_standard() || !t.is_standard()) throw std::invalid_argument("lemma22_encode: S and T must be standard");
  if (s.shape() != t.shape()) throw std::invalid_argument("lemma22_encode: shape mismatch");
  const int n = s.size();
  if (static_cast<int>(increments.size()) != n) throw std::invalid_argument("lemma22_encode: need n increments");
  int sum = 0;
  for (int v : increments) {
    if (v < 0) throw std::invalid_argument("lemma22_encode: increments must be nonnegative");
    sum += v;
  }
  const int des = descent_stats(s).des;
  if (sum >= k - des) throw std::invalid_argument("lemma22_encode: increment sum must be < k - des(S)");
  Tableau sprime = destandardize(s);
  std::vector<int> value(uz(n + 1));
  int cum = 0;
  for (int j = 1; j <= n; ++j) {
    cum += increments[uz(j - 1)];
    auto [r, c] = s.position(j);
    value[uz(j)] = sprime.at(r, c) + cum;
  }
  return s.relabeled(value);
}

EncodedTuple lemma22_decode(const Tableau& r, const Tableau& t) {
  if (!r.is_semistandard()) throw std::invalid_argument("lemma22_decode: R must be semistandard");
  Tableau s = standardize(r);
  Tableau sprime = destandardize(s);
  const int n = r.size();
  std::vector<int> inc(uz(n));
  int prev = 0;
  for (int j = 1; j <= n; ++j) {
    auto [row, col] = s.position(j);
    int shift = r.at(row, col) - sprime.at(row, col);
    inc[uz(j - 1)] = shift - prev;
    prev = shift;
  }
  return {s, t, inc};
}

// ---------------------------------------------------------------- last letter order

std::strong_ordering last_letter_compare(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("last_letter_compare: shape mismatch");
  if (!a.is_standard() || !b.is_standard()) throw std::invalid_argument("last_letter_compare: tableaux must be standard");
  for (int m = a.size(); m >= 1; --m) {
    auto pa = a.position(m);
    auto pb = b.position(m);
    if (pa != pb) {
      if (pa.first != pb.first) return pa.first <=> pb.first;
      return pa.second <=> pb.second;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering last_letter_compare_any(const Tableau& a, const Tableau& b) {
  if (a.size() != b.size()) throw std::invalid_argument("last_letter_compare_any: size mismatch");
  for (int m = a.size(); m >= 1; --m) {
    auto pa = a.position(m);
    auto pb = b.position(m);
    if (pa != pb) {
      if (pa.first != pb.first) return pa.first <=> pb.first;
      return pb.second <=> pa.second;
    }
  }
  return std::strong_ordering::equal;
}

void sort_last_letter(std::vector<Tableau>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Tableau& x, const Tableau& y) { return last_letter_compare(x, y) < 0; });
}

}  // namespace hspecht
