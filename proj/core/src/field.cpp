#include "ramify/field.hpp"

#include <stdexcept>
#include <string>

namespace ramify {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace {

using Coeffs = std::vector<Elem>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// a mod b over F_p, b nonzero.
Coeffs mod_p(Coeffs a, const Coeffs& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<Elem>((a[shift + i] + (p - factor) * b[i]) % p);
    trim(a);
  }
  return a;
}

Coeffs mulmod_p(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<Elem>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return mod_p(std::move(prod), m, p);
}

Coeffs powmod_p(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
  Coeffs result{1};
  base = mod_p(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mulmod_p(result, base, m, p);
    base = mulmod_p(base, base, m, p);
    e >>= 1;
  }
  return result;
}

std::size_t gcd_degree_p(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const Elem> monic, std::uint32_t p) {
  Coeffs g(monic.begin(), monic.end());
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t d = g.size() - 1;
  if (d == 1) return true;
  // g is irreducible iff gcd(g, x^{p^k} - x) = 1 for all k <= d/2.
  Coeffs frob{0, 1};
  for (std::size_t k = 1; k <= d / 2; ++k) {
    frob = powmod_p(frob, p, g, p);
    Coeffs diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<Elem>((diff[1] + p - 1) % p);
    trim(diff);
    if (diff.empty()) return false;
    if (gcd_degree_p(g, diff, p) > 0) return false;
  }
  return true;
}

std::vector<Elem> smallest_irreducible(std::uint32_t p, unsigned d) {
  if (d == 0) throw std::invalid_argument("smallest_irreducible: degree must be positive");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  Coeffs g(d + 1, 0);
  g[d] = 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    // code's base-p digits, most significant first, are (c_{d-1},...,c_0).
    std::uint64_t rest = code;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<Elem>(rest % p);
      rest /= p;
    }
    if (is_irreducible_mod_p(g, p)) return g;
  }
  throw std::logic_error("smallest_irreducible: no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, unsigned d) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("field: d must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) throw std::invalid_argument("field: q too large");
  }
  if (d > 1 && q > (1u << 16)) throw std::invalid_argument("field: extension fields limited to q <= 65536");

  Field f;
  f.p_ = p;
  f.d_ = d;
  f.q_ = static_cast<std::uint32_t>(q);
  if (d > 1) f.modulus_ = smallest_irreducible(p, d);

  if (q <= (1u << 16)) {
    // Discrete log tables over a primitive element.
    const auto factors = prime_factors(q - 1);
    Elem generator = 0;
    for (Elem g = 1; g < q && generator == 0; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        std::uint64_t e = (q - 1) / r;
        Elem acc = 1, base = g;
        while (e) {
          if (e & 1) acc = f.slow_mul(acc, base);
          base = f.slow_mul(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) generator = g;
    }
    f.log_.assign(q, 0);
    f.exp_.assign(2 * (q - 1), 0);
    Elem acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      f.exp_[i] = acc;
      f.exp_[i + q - 1] = acc;
      f.log_[acc] = i;
      acc = f.slow_mul(acc, generator);
    }
  }
  return f;
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  return from_digits(mulmod_p(digits(a), digits(b), modulus_, p_));
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    const Elem c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return static_cast<Elem>(inv_mod(a, p_));
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

std::vector<Elem> Field::digits(Elem a) const {
  std::vector<Elem> out(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::from_digits(std::span<const Elem> digits) const {
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < digits.size() && i < d_; ++i) {
    out += (digits[i] % p_) * scale;
    scale *= p_;
  }
  return out;
}

}  // namespace ramify
