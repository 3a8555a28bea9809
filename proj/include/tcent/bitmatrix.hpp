#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcent/pauli.hpp"

namespace tcent {

/// Dense GF(2) matrix, rows packed into 64-bit words. Elimination always
/// pivots on the lowest-index column and row first, so reduced forms are
/// reproducible run to run.
class BitMatrix {
public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool bit(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1;
  }

  void set(std::size_t r, std::size_t c, bool b) {
    uint64_t& w = data_[r * wpr_ + c / 64];
    if (b) {
      w |= uint64_t{1} << (c % 64);
    } else {
      w &= ~(uint64_t{1} << (c % 64));
    }
  }

  std::span<uint64_t> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const uint64_t> row(std::size_t r) const {
    return {data_.data() + r * wpr_, wpr_};
  }

  void xor_row_into(std::size_t dst, std::size_t src) {
    uint64_t* d = data_.data() + dst * wpr_;
    const uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) {
      d[w] ^= s[w];
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
    }
  }

  bool row_is_zero(std::size_t r) const {
    const uint64_t* d = data_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) {
      if (d[w]) return false;
    }
    return true;
  }

  void append_row(std::span<const uint64_t> words) {
    if (words.size() != wpr_) {
      throw std::invalid_argument("append_row: word count mismatch");
    }
    data_.insert(data_.end(), words.begin(), words.end());
    ++rows_;
  }

  /// Row rank over GF(2). Non-destructive.
  std::size_t rank() const {
    BitMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
      std::size_t p = r;
      while (p < m.rows_ && !m.bit(p, c)) ++p;
      if (p == m.rows_) continue;
      m.swap_rows(p, r);
      for (std::size_t i = r + 1; i < m.rows_; ++i) {
        if (m.bit(i, c)) m.xor_row_into(i, r);
      }
      ++r;
    }
    return r;
  }

  /// In-place Gauss-Jordan, lowest column first. Returns the pivot columns;
  /// afterwards row i holds the i-th pivot row, reduced above and below.
  std::vector<std::size_t> eliminate() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && !bit(p, c)) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != r && bit(i, c)) xor_row_into(i, r);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  /// Basis of { v : v^T M = 0 } (dependencies among rows), packed length rows().
  std::vector<std::vector<uint64_t>> left_nullspace() const {
    std::size_t tag_words = (rows_ + 63) / 64;
    BitMatrix m = *this;
    std::vector<std::vector<uint64_t>> tags(rows_, std::vector<uint64_t>(tag_words, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
      tags[r][r / 64] |= uint64_t{1} << (r % 64);
    }
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols_ && rr < rows_; ++c) {
      std::size_t p = rr;
      while (p < rows_ && !m.bit(p, c)) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, rr);
      std::swap(tags[p], tags[rr]);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != rr && m.bit(i, c)) {
          m.xor_row_into(i, rr);
          for (std::size_t w = 0; w < tag_words; ++w) tags[i][w] ^= tags[rr][w];
        }
      }
      ++rr;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (std::size_t r = rr; r < rows_; ++r) {
      basis.push_back(tags[r]);
    }
    return basis;
  }

  /// Basis of { x : M x = 0 } as packed vectors of length cols().
  std::vector<std::vector<uint64_t>> right_nullspace() const {
    BitMatrix m = *this;
    std::vector<std::size_t> pivots = m.eliminate();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t vw = (cols_ + 63) / 64;
    std::vector<std::vector<uint64_t>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<uint64_t> v(vw, 0);
      v[c / 64] |= uint64_t{1} << (c % 64);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (m.bit(r, c)) {
          std::size_t pc = pivots[r];
          v[pc / 64] |= uint64_t{1} << (pc % 64);
        }
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Expresses `target` as a combination of rows if possible; returns the
  /// packed row-selection vector (length rows()).
  std::optional<std::vector<uint64_t>> solve_left(std::span<const uint64_t> target) const {
    if (target.size() != wpr_) {
      throw std::invalid_argument("solve_left: word count mismatch");
    }
    std::size_t tag_words = (rows_ + 63) / 64;
    BitMatrix m = *this;
    std::vector<std::vector<uint64_t>> tags(rows_, std::vector<uint64_t>(tag_words, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
      tags[r][r / 64] |= uint64_t{1} << (r % 64);
    }
    std::vector<uint64_t> t(target.begin(), target.end());
    std::vector<uint64_t> tsel(tag_words, 0);
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols_ && rr < rows_; ++c) {
      std::size_t p = rr;
      while (p < rows_ && !m.bit(p, c)) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, rr);
      std::swap(tags[p], tags[rr]);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != rr && m.bit(i, c)) {
          m.xor_row_into(i, rr);
          for (std::size_t w = 0; w < tag_words; ++w) tags[i][w] ^= tags[rr][w];
        }
      }
      if ((t[c / 64] >> (c % 64)) & 1) {
        const uint64_t* src = m.data_.data() + rr * wpr_;
        for (std::size_t w = 0; w < wpr_; ++w) t[w] ^= src[w];
        for (std::size_t w = 0; w < tag_words; ++w) tsel[w] ^= tags[rr][w];
      }
      ++rr;
    }
    for (uint64_t w : t) {
      if (w) return std::nullopt;
    }
    return tsel;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<uint64_t> data_;
};

inline int rank_gf2(const BitMatrix& m) { return static_cast<int>(m.rank()); }

/// Incrementally maintained row space; add() reports whether the row was
/// independent of everything added so far.
class GF2Span {
public:
  explicit GF2Span(std::size_t words) : words_(words) {}

  bool add(std::span<const uint64_t> row) {
    std::vector<uint64_t> v(row.begin(), row.end());
    if (reduce(v)) return false;
    std::size_t piv = lowest_bit(v);
    rows_.emplace(piv, std::move(v));
    return true;
  }

  bool contains(std::span<const uint64_t> row) const {
    std::vector<uint64_t> v(row.begin(), row.end());
    return reduce(v);
  }

  std::size_t rank() const { return rows_.size(); }

private:
  // Reduces v by the stored echelon rows; true iff v reduces to zero.
  bool reduce(std::vector<uint64_t>& v) const {
    while (true) {
      bool zero = true;
      for (uint64_t w : v) {
        if (w) {
          zero = false;
          break;
        }
      }
      if (zero) return true;
      std::size_t piv = lowest_bit(v);
      auto it = rows_.find(piv);
      if (it == rows_.end()) return false;
      for (std::size_t w = 0; w < words_; ++w) v[w] ^= it->second[w];
    }
  }

  static std::size_t lowest_bit(const std::vector<uint64_t>& v) {
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
    }
    return ~std::size_t{0};
  }

  std::size_t words_;
  std::map<std::size_t, std::vector<uint64_t>> rows_;
};

/// Stacked (x|z) check matrix of a generator list, optionally restricted to
/// the qubits selected by `mask`. Column layout: x words first, then z words
/// (each padded to whole 64-bit words).
inline BitMatrix check_matrix(std::span<const PauliWord> gens,
                              std::span<const uint64_t> mask = {}) {
  if (gens.empty()) return BitMatrix(0, 0);
  std::size_t n = gens[0].n_qubits();
  std::size_t nw = PauliWord::word_count(n);
  BitMatrix m(gens.size(), 2 * nw * 64);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto xs = gens[g].x_words();
    auto zs = gens[g].z_words();
    auto r = m.row(g);
    for (std::size_t w = 0; w < nw; ++w) {
      uint64_t keep = mask.empty() ? ~uint64_t{0} : mask[w];
      r[w] = xs[w] & keep;
      r[nw + w] = zs[w] & keep;
    }
  }
  return m;
}

/// Packed (x|z) row of a single word, same layout as check_matrix.
inline std::vector<uint64_t> packed_xz(const PauliWord& p) {
  std::size_t nw = PauliWord::word_count(p.n_qubits());
  std::vector<uint64_t> row(2 * nw);
  auto xs = p.x_words();
  auto zs = p.z_words();
  for (std::size_t w = 0; w < nw; ++w) {
    row[w] = xs[w];
    row[nw + w] = zs[w];
  }
  return row;
}

}  // namespace tcent
