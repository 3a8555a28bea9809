#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcent {

/// A real Pauli word on n qubits, stored bit-packed as
///
///     sign * prod_i X_i^{x_i} * prod_i Z_i^{z_i},   sign in {+1, -1},
///
/// i.e. in X-before-Z normal form per qubit. This is the one place the sign
/// convention is fixed: multiplying p*q moves q's X part across p's Z part,
/// one swap per overlapping qubit, so
///
///     sign(p*q) = sign(p) * sign(q) * (-1)^{ |z_p & x_q| }.
///
/// The convention is associative bit-for-bit and sign-for-sign, and words
/// with sign +/-1 close under it; +/-i never appears because every generator
/// in this codebase is X-type or Z-type.
class PauliWord {
public:
  PauliWord() = default;

  explicit PauliWord(std::size_t n_qubits)
      : n_(n_qubits), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {}

  static PauliWord identity(std::size_t n) { return PauliWord(n); }

  static PauliWord single_x(std::size_t n, std::size_t q) {
    PauliWord p(n);
    p.set_x(q, true);
    return p;
  }

  static PauliWord single_z(std::size_t n, std::size_t q) {
    PauliWord p(n);
    p.set_z(q, true);
    return p;
  }

  std::size_t n_qubits() const { return n_; }

  bool x(std::size_t q) const { return get_bit(x_, q); }
  bool z(std::size_t q) const { return get_bit(z_, q); }

  void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }

  int sign() const { return sign_; }
  void set_sign(int s) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("PauliWord sign must be +1 or -1");
    }
    sign_ = static_cast<int8_t>(s);
  }

  std::span<const uint64_t> x_words() const { return x_; }
  std::span<const uint64_t> z_words() const { return z_; }

  bool is_identity_bits() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if (x_[w] | z_[w]) {
        return false;
      }
    }
    return true;
  }

  bool is_identity() const { return sign_ == 1 && is_identity_bits(); }

  bool same_bits(const PauliWord& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

  bool operator==(const PauliWord& other) const {
    return same_bits(other) && sign_ == other.sign_;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      w += static_cast<std::size_t>(__builtin_popcountll(x_[i] | z_[i]));
    }
    return w;
  }

  bool is_x_type() const {
    for (uint64_t w : z_) {
      if (w) return false;
    }
    return true;
  }

  bool is_z_type() const {
    for (uint64_t w : x_) {
      if (w) return false;
    }
    return true;
  }

  /// Qubits with nontrivial support, ascending.
  std::vector<uint32_t> support() const {
    std::vector<uint32_t> s;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      uint64_t bits = x_[w] | z_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        s.push_back(static_cast<uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return s;
  }

  /// In-place product, sign tracked per the convention above.
  PauliWord& operator*=(const PauliWord& q) {
    check_dims(q);
    std::size_t swaps = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      swaps += static_cast<std::size_t>(__builtin_popcountll(z_[w] & q.x_[w]));
      x_[w] ^= q.x_[w];
      z_[w] ^= q.z_[w];
    }
    int s = sign_ * q.sign_;
    if (swaps & 1) {
      s = -s;
    }
    sign_ = static_cast<int8_t>(s);
    return *this;
  }

  friend PauliWord operator*(PauliWord p, const PauliWord& q) {
    p *= q;
    return p;
  }

  /// Restriction to the qubits selected by `keep`: bits zeroed outside,
  /// sign reset to +1 (restrictions carry no phase).
  PauliWord restricted(std::span<const uint64_t> keep) const {
    if (keep.size() != x_.size()) {
      throw std::invalid_argument("restriction mask has wrong length");
    }
    PauliWord r(n_);
    for (std::size_t w = 0; w < x_.size(); ++w) {
      r.x_[w] = x_[w] & keep[w];
      r.z_[w] = z_[w] & keep[w];
    }
    return r;
  }

  bool intersects(std::span<const uint64_t> mask) const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if ((x_[w] | z_[w]) & mask[w]) {
        return true;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string s = sign_ == 1 ? "+" : "-";
    for (std::size_t q = 0; q < n_; ++q) {
      bool xb = x(q), zb = z(q);
      s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
  }

  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

private:
  void check_dims(const PauliWord& q) const {
    if (n_ != q.n_) {
      throw std::invalid_argument("PauliWord dimension mismatch");
    }
  }

  static bool get_bit(const std::vector<uint64_t>& v, std::size_t q) {
    return (v[q / 64] >> (q % 64)) & 1;
  }

  static void set_bit(std::vector<uint64_t>& v, std::size_t q, bool b) {
    if (b) {
      v[q / 64] |= uint64_t{1} << (q % 64);
    } else {
      v[q / 64] &= ~(uint64_t{1} << (q % 64));
    }
  }

  std::size_t n_ = 0;
  std::vector<uint64_t> x_, z_;
  int8_t sign_ = 1;
};

/// 0 iff p and q commute; equals (x_p.z_q + z_p.x_q) mod 2.
inline int symplectic_product(const PauliWord& p, const PauliWord& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("symplectic_product dimension mismatch");
  }
  auto px = p.x_words(), pz = p.z_words();
  auto qx = q.x_words(), qz = q.z_words();
  uint64_t acc = 0;
  for (std::size_t w = 0; w < px.size(); ++w) {
    acc ^= static_cast<uint64_t>(__builtin_popcountll(px[w] & qz[w]) ^
                                 __builtin_popcountll(pz[w] & qx[w]));
  }
  return static_cast<int>(acc & 1);
}

inline PauliWord multiply(const PauliWord& p, const PauliWord& q) { return p * q; }

}  // namespace tcent
