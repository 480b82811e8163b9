#pragma once

// Permutations of {1..n} in one-line notation (1-indexed throughout).

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace groth {

class Permutation {
public:
  // Validates that `window` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    if (n == 0) throw std::invalid_argument("permutation window must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : window_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("window is not a bijection on {1..n}");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(window_.size()); }

  // w(i), 1-based; i must be in 1..n.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& window() const { return window_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  // Inversion count.
  int length() const {
    int inv = 0;
    const int n = size();
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(w));
  }

  // (*this ∘ u)(i) = this(u(i)); sizes must agree.
  Permutation compose(const Permutation& u) const {
    if (u.size() != size()) throw std::invalid_argument("size mismatch in compose");
    std::vector<int> w(window_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(u(i));
    return Permutation(std::move(w));
  }

  // w·s_i: swaps the entries in positions i, i+1.  Requires 1 <= i <= n-1.
  Permutation right_simple(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("simple reflection index out of range");
    std::vector<int> w = window_;
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return Permutation(std::move(w));
  }

  // True iff l(w·s_i) < l(w), i.e. w(i) > w(i+1).
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  // Natural embedding into S_n (appends fixed points).
  Permutation embed(int n) const {
    if (n < size()) throw std::invalid_argument("cannot embed into smaller symmetric group");
    std::vector<int> w = window_;
    for (int i = size() + 1; i <= n; ++i) w.push_back(i);
    return Permutation(std::move(w));
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> window_;
};

// Ehresmann (sorted-prefix) criterion: w <= v iff for every i the sorted
// prefix {w(1..i)} is entrywise <= the sorted prefix {v(1..i)}.
inline bool bruhat_leq(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("size mismatch in bruhat_leq");
  const int n = w.size();
  std::vector<int> pw, pv;
  pw.reserve(static_cast<std::size_t>(n));
  pv.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(i)), v(i));
    for (int t = 0; t < i; ++t)
      if (pw[static_cast<std::size_t>(t)] > pv[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

// Deterministic reduced word: repeatedly strip the smallest right descent.
inline std::vector<int> reduced_word(const Permutation& v) {
  std::vector<int> picked;
  Permutation w = v;
  for (;;) {
    int d = 0;
    for (int i = 1; i < w.size(); ++i)
      if (w.has_right_descent(i)) { d = i; break; }
    if (d == 0) break;
    picked.push_back(d);
    w = w.right_simple(d);
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

// 1^m x u: fixes 1..m and maps m+j to m+u(j).
inline Permutation shift_embed(const Permutation& u, int m) {
  if (m < 0) throw std::invalid_argument("shift amount must be nonnegative");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(m + u.size()));
  for (int i = 1; i <= m; ++i) w.push_back(i);
  for (int j = 1; j <= u.size(); ++j) w.push_back(m + u(j));
  return Permutation(std::move(w));
}

// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Accepts compact digits ("264135", only valid when n <= 9) or the
// comma-separated form ("2,6,4,1,3,5").  Rejects non-bijections.
inline Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation string");
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty()) throw std::invalid_argument("malformed permutation string: " + text);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed permutation string: " + text);
      }
      if (used != tok.size()) throw std::invalid_argument("malformed permutation string: " + text);
      w.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("malformed permutation string: " + text);
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

// Compact digits when n <= 9, comma-separated otherwise.
inline std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() <= 9;
  for (int i = 1; i <= w.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

// Comma-separated form, used by all JSON encodings.
inline std::string to_csv_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

}  // namespace groth
