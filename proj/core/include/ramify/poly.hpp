#pragma once

// Dense univariate polynomials over a Field. Coefficients are stored
// ascending with trailing zeros stripped; the zero polynomial is empty.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramify/field.hpp"

namespace ramify {

struct DensePoly {
  std::vector<Elem> coeffs;

  DensePoly() = default;
  explicit DensePoly(std::vector<Elem> c);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  Elem lead() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
  bool is_monic() const noexcept { return !coeffs.empty() && coeffs.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }

  bool operator==(const DensePoly&) const = default;
};

/// Builds from signed integers mapped into the prime subfield, ascending.
DensePoly poly_from_ints(const Field& F, std::initializer_list<std::int64_t> ascending);
/// x - root.
DensePoly poly_linear(const Field& F, Elem root);

DensePoly poly_add(const Field& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const Field& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_mul(const Field& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_scale(const Field& F, const DensePoly& a, Elem s);
DensePoly poly_pow(const Field& F, const DensePoly& a, unsigned e);
DensePoly poly_derivative(const Field& F, const DensePoly& a);
Elem poly_eval(const Field& F, const DensePoly& a, Elem x);
/// f(x + t).
DensePoly poly_shift(const Field& F, const DensePoly& a, Elem t);
/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<DensePoly, DensePoly> poly_divmod(const Field& F, const DensePoly& a, const DensePoly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
DensePoly poly_div_exact(const Field& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_monic(const Field& F, const DensePoly& a);

/// Monic gcd by Euclidean remainders; throws std::invalid_argument if both are zero.
DensePoly poly_gcd_monic(const Field& F, const DensePoly& a, const DensePoly& b);

/// lc(b)^{deg a} * prod_{b(beta)=0} a(beta), via the Euclidean remainder
/// recurrence. Throws std::invalid_argument on a zero input.
Elem resultant(const Field& F, const DensePoly& a, const DensePoly& b);

/// Unique polynomial of degree < xs.size() through the points (Newton form).
DensePoly interpolate(const Field& F, std::span<const Elem> xs, std::span<const Elem> ys);

struct SquarefreeLayer {
  DensePoly layer;  // monic, squarefree
  int multiplicity = 0;
  bool operator==(const SquarefreeLayer&) const = default;
};

/// h = lc * prod u_k^k with u_k monic, squarefree and pairwise coprime
/// (Yun). Layers are returned by ascending multiplicity, constant layers
/// omitted. Throws std::domain_error when a root multiplicity is a multiple
/// of the characteristic, std::invalid_argument on zero input.
std::vector<SquarefreeLayer> squarefree_decomposition(const Field& F, const DensePoly& h);

std::string poly_to_string(const DensePoly& a, char var = 'x');

}  // namespace ramify
