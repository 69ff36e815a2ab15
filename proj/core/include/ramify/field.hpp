#pragma once

// Finite fields F_q, q = p^d, with elements encoded as integers in [0, q).
// The code of an element is sum c_i p^i over its coordinates in the power
// basis modulo the field's irreducible modulus, so codes 0..p-1 are the
// prime subfield.

#include <cstdint>
#include <span>
#include <vector>

namespace ramify {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Coefficients (ascending) of the lexicographically smallest monic
/// irreducible polynomial of degree d over F_p, scanning (c_{d-1},...,c_0)
/// in ascending numeric order.
std::vector<Elem> smallest_irreducible(std::uint32_t p, unsigned d);

/// True iff the monic polynomial (ascending coefficients) is irreducible over F_p.
bool is_irreducible_mod_p(std::span<const Elem> monic, std::uint32_t p);

class Field {
 public:
  /// Throws std::invalid_argument if p is not prime, d == 0, or the field
  /// is outside the supported range (p < 2^31 for d = 1, q <= 2^16 otherwise).
  static Field make(std::uint32_t p, unsigned d = 1);

  std::uint32_t p() const noexcept { return p_; }
  unsigned d() const noexcept { return d_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, ascending; empty for prime fields.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept {
    if (d_ == 1) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      const std::uint32_t s = log_[a] + log_[b];
      return exp_[s];
    }
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  /// The Frobenius x -> x^p.
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

  /// Coordinates of a in the power basis, length d.
  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(std::span<const Elem> digits) const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem neg_digits(Elem a) const noexcept;
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 2;
  unsigned d_ = 1;
  std::uint32_t q_ = 2;
  std::vector<Elem> modulus_;
  std::vector<std::uint32_t> log_;  // discrete log w.r.t. a primitive element
  std::vector<Elem> exp_;           // length 2(q-1)
};

}  // namespace ramify
