#include "framecover/hadamard.hpp"

#include <algorithm>

#include "framecover/errors.hpp"

namespace framecover {

SignMatrix::SignMatrix(int order, std::vector<std::int8_t> entries) : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw ParameterError("matrix order must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_) throw ParameterError("matrix is not square");
  for (auto e : entries_)
    if (e != 1 && e != -1) throw ParameterError("matrix entries must be +1 or -1");
}

SignMatrix SignMatrix::from_strings(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int8_t> entries;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("row length " + std::to_string(rows[i].size()) + " differs from order " + std::to_string(n),
                       i + 1, 1);
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", i + 1, j + 1);
      entries.push_back(c == '+' ? 1 : -1);
    }
  }
  return {n, std::move(entries)};
}

void SignMatrix::negate_row(int i) {
  for (int j = 0; j < order_; ++j) entries_[static_cast<std::size_t>(i) * order_ + j] *= -1;
}

void SignMatrix::negate_column(int j) {
  for (int i = 0; i < order_; ++i) entries_[static_cast<std::size_t>(i) * order_ + j] *= -1;
}

bool SignMatrix::normalized() const {
  for (int k = 0; k < order_; ++k)
    if (at(0, k) != 1 || at(k, 0) != 1) return false;
  return true;
}

std::vector<std::string> SignMatrix::to_strings() const {
  std::vector<std::string> rows(order_, std::string(order_, '+'));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (at(i, j) < 0) rows[i][j] = '-';
  return rows;
}

HadamardMatrix sylvester(int k) {
  if (k < 0 || k > 12) throw ParameterError("sylvester order exponent must lie in [0, 12]");
  int n = 1;
  std::vector<std::int8_t> h{1};
  for (int step = 0; step < k; ++step) {
    std::vector<std::int8_t> next(static_cast<std::size_t>(4) * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::int8_t v = h[static_cast<std::size_t>(i) * n + j];
        next[static_cast<std::size_t>(i) * 2 * n + j] = v;
        next[static_cast<std::size_t>(i) * 2 * n + j + n] = v;
        next[static_cast<std::size_t>(i + n) * 2 * n + j] = v;
        next[static_cast<std::size_t>(i + n) * 2 * n + j + n] = static_cast<std::int8_t>(-v);
      }
    h = std::move(next);
    n *= 2;
  }
  return {n, std::move(h)};
}

bool verify_hadamard(const SignMatrix& h) {
  const int n = h.order();
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      long dot = 0;
      for (int j = 0; j < n; ++j) dot += h.at(i, j) * h.at(k, j);
      if (dot != (i == k ? n : 0)) return false;
    }
  return true;
}

SignMatrix normalize(SignMatrix h) {
  for (int i = 0; i < h.order(); ++i)
    if (h.at(i, 0) < 0) h.negate_row(i);
  for (int j = 0; j < h.order(); ++j)
    if (h.at(0, j) < 0) h.negate_column(j);
  return h;
}

BicliqueCover k8d_cover(const HadamardMatrix& h) {
  const int n = h.order();
  if (n % 4 != 0 || !verify_hadamard(h)) throw ParameterError("k8d_cover needs a Hadamard matrix of order 4d");
  const int d = n / 4;
  BicliqueCover cover{FamilyTag::complete(2 * n), 2 * d, {}};
  for (int j = 0; j < n; ++j) {
    Biclique b;
    for (int i = 0; i < n; ++i) {
      const bool plus = h.at(i, j) > 0;
      (plus ? b.x : b.y).push_back(i);      // u_i
      (plus ? b.y : b.x).push_back(n + i);  // v_i
    }
    std::sort(b.x.begin(), b.x.end());
    std::sort(b.y.begin(), b.y.end());
    cover.bicliques.emplace_back(std::move(b));
  }
  return cover;
}

BicliqueCover kmm_minus_cover(const HadamardMatrix& h) {
  const int n = h.order();
  if (n % 4 != 0 || !verify_hadamard(h)) throw ParameterError("kmm_minus_cover needs a Hadamard matrix of order 4d");
  if (!h.normalized()) throw ParameterError("kmm_minus_cover needs a normalized Hadamard matrix");
  const int d = n / 4;
  const int rows = n - 1;  // after deleting the first row
  const int m = 2 * rows;  // 8d - 2
  BicliqueCover cover{FamilyTag::kmm(m), d, {}};
  for (int j = 0; j < n; ++j) {
    Biclique b;
    for (int i = 0; i < rows; ++i) {
      const bool plus = h.at(i + 1, j) > 0;
      const int u = i, v = rows + i;
      b.x.push_back(plus ? u : v);
      b.y.push_back(m + (plus ? v : u));
    }
    std::sort(b.x.begin(), b.x.end());
    std::sort(b.y.begin(), b.y.end());
    cover.bicliques.emplace_back(std::move(b));
  }
  return cover;
}

}  // namespace framecover
