#include "ramify/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ramify {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

DensePoly::DensePoly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(coeffs); }

DensePoly poly_from_ints(const Field& F, std::initializer_list<std::int64_t> ascending) {
  std::vector<Elem> c;
  c.reserve(ascending.size());
  for (auto v : ascending) c.push_back(F.from_int(v));
  return DensePoly(std::move(c));
}

DensePoly poly_linear(const Field& F, Elem root) { return DensePoly({F.neg(root), 1}); }

DensePoly poly_add(const Field& F, const DensePoly& a, const DensePoly& b) {
  std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return DensePoly(std::move(c));
}

DensePoly poly_sub(const Field& F, const DensePoly& a, const DensePoly& b) {
  std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return DensePoly(std::move(c));
}

DensePoly poly_mul(const Field& F, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  return DensePoly(std::move(c));
}

DensePoly poly_scale(const Field& F, const DensePoly& a, Elem s) {
  std::vector<Elem> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.coeffs[i], s);
  return DensePoly(std::move(c));
}

DensePoly poly_pow(const Field& F, const DensePoly& a, unsigned e) {
  DensePoly result({1});
  DensePoly base = a;
  while (e) {
    if (e & 1) result = poly_mul(F, result, base);
    base = poly_mul(F, base, base);
    e >>= 1;
  }
  return result;
}

DensePoly poly_derivative(const Field& F, const DensePoly& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<Elem> c(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) c[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a.coeffs[i]);
  return DensePoly(std::move(c));
}

Elem poly_eval(const Field& F, const DensePoly& a, Elem x) {
  Elem acc = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

DensePoly poly_shift(const Field& F, const DensePoly& a, Elem t) {
  // Horner in the ring: acc = acc * (x + t) + c_i.
  DensePoly acc;
  const DensePoly step({t, 1});
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it)
    acc = poly_add(F, poly_mul(F, acc, step), DensePoly({*it}));
  return acc;
}

std::pair<DensePoly, DensePoly> poly_divmod(const Field& F, const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  std::vector<Elem> rem = a.coeffs;
  if (rem.size() < b.coeffs.size()) return {DensePoly{}, a};
  std::vector<Elem> quot(rem.size() - b.coeffs.size() + 1, 0);
  const Elem lead_inv = F.inv(b.lead());
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Elem factor = F.mul(rem[shift + b.coeffs.size() - 1], lead_inv);
    quot[shift] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, b.coeffs[i]));
  }
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly poly_div_exact(const Field& F, const DensePoly& a, const DensePoly& b) {
  auto [q, r] = poly_divmod(F, a, b);
  if (!r.is_zero()) throw std::domain_error("poly_div_exact: nonzero remainder");
  return q;
}

DensePoly poly_monic(const Field& F, const DensePoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.lead()));
}

DensePoly poly_gcd_monic(const Field& F, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd_monic: both inputs are zero");
  DensePoly x = a, y = b;
  while (!y.is_zero()) {
    DensePoly r = poly_divmod(F, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(F, x);
}

Elem resultant(const Field& F, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant: zero input");
  Elem acc = 1;
  DensePoly x = a, y = b;
  for (;;) {
    const int m = x.degree();
    const int n = y.degree();
    if (n == 0) return F.mul(acc, F.pow(y.lead(), static_cast<std::uint64_t>(m)));
    DensePoly r = poly_divmod(F, x, y).second;
    if (r.is_zero()) return 0;
    const int k = r.degree();
    // R(x, y) = lc(y)^{m-k} (-1)^{kn} R(y, x mod y)
    acc = F.mul(acc, F.pow(y.lead(), static_cast<std::uint64_t>(m - k)));
    if ((k * n) % 2 == 1) acc = F.neg(acc);
    x = std::move(y);
    y = std::move(r);
  }
}

DensePoly interpolate(const Field& F, std::span<const Elem> xs, std::span<const Elem> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t k = xs.size();
  // Divided differences in place.
  std::vector<Elem> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      const Elem den = F.sub(xs[i], xs[i - level]);
      if (den == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = F.div(F.sub(dd[i], dd[i - 1]), den);
    }
  // Horner on the Newton basis.
  std::vector<Elem> acc;
  for (std::size_t i = k; i-- > 0;) {
    // acc = acc * (x - xs[i]) + dd[i]
    std::vector<Elem> next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], acc[j]);
      next[j] = F.sub(next[j], F.mul(acc[j], xs[i]));
    }
    next[0] = F.add(next[0], dd[i]);
    acc = std::move(next);
  }
  return DensePoly(std::move(acc));
}

std::vector<SquarefreeLayer> squarefree_decomposition(const Field& F, const DensePoly& h) {
  if (h.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero input");
  const DensePoly monic = poly_monic(F, h);
  std::vector<SquarefreeLayer> out;
  if (monic.degree() == 0) return out;

  const DensePoly dh = poly_derivative(F, monic);
  if (dh.is_zero()) throw std::domain_error("squarefree_decomposition: multiplicity divisible by the characteristic");
  const DensePoly a0 = poly_gcd_monic(F, monic, dh);
  DensePoly b = poly_div_exact(F, monic, a0);
  DensePoly c = poly_div_exact(F, dh, a0);
  DensePoly d = poly_sub(F, c, poly_derivative(F, b));
  int mult = 1;
  int accounted = 0;
  while (b.degree() > 0) {
    const DensePoly a = d.is_zero() ? poly_monic(F, b) : poly_gcd_monic(F, b, d);
    if (a.degree() > 0) {
      out.push_back({a, mult});
      accounted += mult * a.degree();
    }
    b = poly_div_exact(F, b, a);
    c = poly_div_exact(F, d, a);
    d = poly_sub(F, c, poly_derivative(F, b));
    ++mult;
  }
  if (accounted != monic.degree())
    throw std::domain_error("squarefree_decomposition: multiplicity divisible by the characteristic");
  return out;
}

std::string poly_to_string(const DensePoly& a, char var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    const Elem c = a.coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace ramify
