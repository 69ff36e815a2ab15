#include "ramify/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace ramify {

namespace {

int poly_n(const DensePoly& f) { return f.degree() - 1; }

void check_map_preconditions(const Field& F, const DensePoly& f) {
  if (f.degree() < 2) throw PreconditionError("polynomial map must have degree at least 2");
  if (!f.is_monic()) throw PreconditionError("polynomial map must be monic");
  if (f.coeff(0) != 0) throw PreconditionError("polynomial map must vanish at 0");
  const int n = poly_n(f);
  if (F.p() <= static_cast<std::uint32_t>(n + 1))
    throw PreconditionError("characteristic p = " + std::to_string(F.p()) + " must exceed n + 1 = " +
                            std::to_string(n + 1));
}

// Values of Res_x(f(x) - t, g(x)) at t = 0..count-1.
std::vector<Elem> shifted_resultants(const Field& F, const DensePoly& f, const DensePoly& g, int count) {
  std::vector<Elem> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    DensePoly shifted = f;
    shifted.coeffs[0] = F.sub(shifted.coeffs[0], F.from_int(t));
    values.push_back(resultant(F, DensePoly(shifted.coeffs), g));
  }
  return values;
}

std::vector<Elem> sample_points(const Field& F, int count) {
  std::vector<Elem> xs;
  for (int t = 0; t < count; ++t) xs.push_back(F.from_int(t));
  return xs;
}

}  // namespace

DensePoly branch_poly(const Field& F, const DensePoly& f) {
  check_map_preconditions(F, f);
  const int n = poly_n(f);
  const DensePoly fp = poly_derivative(F, f);
  const auto values = shifted_resultants(F, f, fp, n + 1);
  const auto xs = sample_points(F, n + 1);
  DensePoly b = interpolate(F, xs, values);
  if (b.degree() != n) throw std::logic_error("branch_poly: interpolated degree differs from n");
  return poly_monic(F, b);
}

int ram_length(const Field& F, const DensePoly& f) {
  const DensePoly b = branch_poly(F, f);
  const DensePoly g = poly_gcd_monic(F, b, poly_derivative(F, b));
  const DensePoly squarefree = poly_div_exact(F, b, g);
  return b.degree() - squarefree.degree();
}

DensePoly census_poly(std::span<const Elem> a) {
  std::vector<Elem> c(a.size() + 2, 0);
  std::copy(a.begin(), a.end(), c.begin() + 1);
  c.back() = 1;
  return DensePoly(std::move(c));
}

TypeOfResult type_of(const Field& F, const DensePoly& f) {
  check_map_preconditions(F, f);
  const int n = poly_n(f);
  TypeOfResult result;

  for (const auto& [u, k] : squarefree_decomposition(F, poly_derivative(F, f))) {
    const int g = u.degree();
    auto values = shifted_resultants(F, f, u, g + 1);
    // Res(f - t, u) = prod (f(a) - t) for monic u; flip to prod (t - f(a)).
    if (g % 2 == 1)
      for (auto& v : values) v = F.neg(v);
    DensePoly b = interpolate(F, sample_points(F, g + 1), values);
    if (b.degree() != g || !b.is_monic()) throw std::logic_error("type_of: layer branch polynomial malformed");
    result.layers.push_back({k, u, std::move(b)});
  }

  // Refine the layer branch polynomials into pairwise coprime value classes.
  for (const auto& layer : result.layers) {
    for (const auto& [piece, c] : squarefree_decomposition(F, layer.branch_values)) {
      DensePoly rest = piece;
      std::vector<ValueClass> refined;
      for (auto& cls : result.classes) {
        const DensePoly common = rest.degree() > 0 ? poly_gcd_monic(F, cls.values, rest) : DensePoly({1});
        if (common.degree() <= 0) {
          refined.push_back(std::move(cls));
          continue;
        }
        DensePoly outside = poly_div_exact(F, cls.values, common);
        if (outside.degree() > 0) refined.push_back({outside, cls.points_by_length});
        auto counts = cls.points_by_length;
        counts[layer.differential_length] = c;
        refined.push_back({common, std::move(counts)});
        rest = poly_div_exact(F, rest, common);
      }
      if (rest.degree() > 0) {
        std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
        counts[layer.differential_length] = c;
        refined.push_back({rest, std::move(counts)});
      }
      result.classes = std::move(refined);
    }
  }

  std::vector<BranchProfile> profiles;
  for (const auto& cls : result.classes) {
    std::vector<int> indices;
    for (std::size_t k = 1; k < cls.points_by_length.size(); ++k)
      indices.insert(indices.end(), static_cast<std::size_t>(cls.points_by_length[k]), static_cast<int>(k) + 1);
    for (int i = 0; i < cls.values.degree(); ++i) profiles.emplace_back(indices);
  }
  result.type = RamificationType(std::move(profiles));
  return result;
}

// ---------------------------------------------------------------------------
// Census kernel

namespace {

using KBuf = std::array<Elem, RamLengthKernel::kMaxN + 3>;

int trimmed_degree(const Elem* c, int deg) {
  while (deg >= 0 && c[deg] == 0) --deg;
  return deg;
}

// a <- a mod b; b has degree db >= 0. Returns the new degree of a.
int rem_inplace(const Field& F, Elem* a, int da, const Elem* b, int db) {
  if (da < db) return da;
  const Elem lead_inv = F.inv(b[db]);
  for (int top = da; top >= db; --top) {
    const Elem lead = a[top];
    if (lead == 0) continue;
    const Elem factor = F.mul(lead, lead_inv);
    const int shift = top - db;
    for (int i = 0; i < db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    a[top] = 0;
  }
  return trimmed_degree(a, db - 1);
}

// Resultant in the lc(y)^{deg x} prod x(roots of y) convention; clobbers both.
Elem resultant_inplace(const Field& F, Elem* x, int dx, Elem* y, int dy) {
  Elem acc = 1;
  for (;;) {
    if (dy == 0) return F.mul(acc, F.pow(y[0], static_cast<std::uint64_t>(dx)));
    const Elem lead = y[dy];
    const int dr = rem_inplace(F, x, dx, y, dy);
    if (dr < 0) return 0;
    acc = F.mul(acc, F.pow(lead, static_cast<std::uint64_t>(dx - dr)));
    if ((dr * dy) % 2 == 1) acc = F.neg(acc);
    std::swap(x, y);
    dx = dy;
    dy = dr;
  }
}

}  // namespace

RamLengthKernel::RamLengthKernel(const Field& F, int n) : F_(F), n_(n) {
  if (n < 1 || n > kMaxN) throw PreconditionError("census kernel supports 1 <= n <= " + std::to_string(kMaxN));
  if (F.p() <= static_cast<std::uint32_t>(n + 1)) throw PreconditionError("characteristic must exceed n + 1");
  for (int i = 0; i <= n + 1; ++i) int_elem_[i] = F.from_int(i);
  for (int i = 1; i <= n; ++i) inv_level_[i] = F.inv(int_elem_[i]);
}

int RamLengthKernel::operator()(std::span<const Elem> a) {
  const Field& F = F_;
  const int n = n_;
  // f = x^{n+1} + sum_{i=1}^n a_i x^i, f' = (n+1) x^n + sum i a_i x^{i-1}.
  KBuf f{}, fp{};
  f[0] = 0;
  for (int i = 1; i <= n; ++i) f[i] = a[i - 1];
  f[n + 1] = 1;
  for (int i = 1; i <= n + 1; ++i) fp[i - 1] = F.mul(int_elem_[i], f[i]);

  KBuf r = f;
  const int dr = rem_inplace(F, r.data(), n + 1, fp.data(), n);

  // v_t = Res(f - t, f') = lc(f')^{n+1-k} (-1)^{kn} Res(f', (f mod f') - t).
  std::array<Elem, kMaxN + 2> values{};
  for (int t = 0; t <= n; ++t) {
    KBuf s = r, x = fp;
    s[0] = F.sub(s[0], int_elem_[t]);
    const int k = trimmed_degree(s.data(), std::max(dr, 0));
    if (k < 0) {
      values[t] = 0;
      continue;
    }
    Elem v = resultant_inplace(F, x.data(), n, s.data(), k);
    v = F.mul(v, F.pow(fp[n], static_cast<std::uint64_t>(n + 1 - k)));
    if ((k * n) % 2 == 1) v = F.neg(v);
    values[t] = v;
  }

  // Newton interpolation at 0..n; differences of abscissae are 1..n.
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i) values[i] = F.mul(F.sub(values[i], values[i - 1]), inv_level_[level]);
  KBuf b{};
  b[0] = values[n];
  for (int i = n - 1, deg = 0; i >= 0; --i, ++deg) {
    // b <- b * (x - i) + values[i]
    b[deg + 1] = b[deg];
    for (int j = deg; j >= 1; --j) b[j] = F.sub(b[j - 1], F.mul(b[j], int_elem_[i]));
    b[0] = F.add(F.neg(F.mul(b[0], int_elem_[i])), values[i]);
  }
  const int db = trimmed_degree(b.data(), n);
  if (db != n) throw std::logic_error("census kernel: branch polynomial degree differs from n");

  KBuf bp{};
  for (int i = 1; i <= n; ++i) bp[i - 1] = F.mul(int_elem_[i], b[i]);
  int dx = n, dy = n - 1;
  Elem* x = b.data();
  Elem* y = bp.data();
  for (;;) {
    const int rdeg = rem_inplace(F, x, dx, y, dy);
    if (rdeg < 0) return dy;
    std::swap(x, y);
    dx = dy;
    dy = rdeg;
  }
}

// ---------------------------------------------------------------------------
// Enumeration

void check_census_preconditions(int n, int m, const Field& F) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (m < 1) throw PreconditionError("m must be at least 1");
  if (n > RamLengthKernel::kMaxN) throw PreconditionError("n exceeds the census kernel limit");
  if (F.p() <= static_cast<std::uint32_t>(n + 1))
    throw PreconditionError("characteristic p = " + std::to_string(F.p()) + " must exceed n + 1 = " +
                            std::to_string(n + 1) + " (wild ramification is out of scope)");
}

CensusRecord census(int n, int m, const Field& F, bool want_histogram, const CensusOptions& options) {
  check_census_preconditions(n, m, F);
  const std::uint64_t q = F.q();
  const BigInt total = big_pow(BigInt(q), static_cast<unsigned>(n));
  if (total > options.budget)
    throw ResourceLimitError("census: q^n = " + total.str() + " exceeds the budget " + options.budget.str());

  unsigned prefix = options.prefix_length;
  if (prefix == 0) prefix = n >= 3 ? 2 : 1;
  prefix = std::min<unsigned>(prefix, static_cast<unsigned>(n));
  std::uint64_t shards = 1;
  for (unsigned i = 0; i < prefix; ++i) shards *= q;
  const int free_len = n - static_cast<int>(prefix);

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, shards));

  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> next_shard{0};
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));

  auto worker = [&](unsigned id) {
    RamLengthKernel kernel(F, n);
    auto& hist = partial[id];
    std::vector<Elem> a(static_cast<std::size_t>(n), 0);
    for (;;) {
      const std::uint64_t shard = next_shard.fetch_add(1);
      if (shard >= shards) break;
      // Leading coefficients a_{free_len+1..n} come from the shard index.
      std::uint64_t rest = shard;
      for (int i = free_len; i < n; ++i) {
        a[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      std::fill(a.begin(), a.begin() + free_len, 0);
      for (;;) {
        ++hist[static_cast<std::size_t>(kernel(a))];
        int pos = 0;
        while (pos < free_len && ++a[pos] == q) a[pos++] = 0;
        if (pos == free_len) break;
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  CensusRecord rec;
  rec.n = n;
  rec.m = m;
  rec.p = F.p();
  rec.d = F.d();
  rec.q = F.q();
  rec.want_histogram = want_histogram;
  rec.shard_count = shards;
  rec.histogram.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& part : partial)
    for (std::size_t l = 0; l < part.size(); ++l) rec.histogram[l] += part[l];
  rec.count = 0;
  for (int l = 0; l < m && l <= n; ++l) rec.count += rec.histogram[static_cast<std::size_t>(l)];
  rec.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

BigInt predicted_count(int n, int m, std::uint32_t q, const BigInt& c) {
  if (m > n) throw PreconditionError("closed-form count needs m <= n");
  return big_pow(BigInt(q), static_cast<unsigned>(n)) - c * big_pow(BigInt(q), static_cast<unsigned>(n - m));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MatchesEq12: return "matches-eq12";
    case Verdict::MatchesMultiset: return "matches-multiset";
    case Verdict::MatchesBoth: return "matches-both";
    case Verdict::MatchesNeither: break;
  }
  return "matches-neither";
}

std::vector<std::string> range_flags(int n, int m, std::uint32_t p) {
  std::vector<std::string> flags;
  if (n < 3 * m) flags.emplace_back("n<3m");
  if (static_cast<std::int64_t>(n) >= static_cast<std::int64_t>(p) - 1) flags.emplace_back("n>=p-1");
  return flags;
}

VerifyResult verify_count(int n, int m, const Field& F, const CensusOptions& options) {
  if (m > n) throw PreconditionError("verify needs m <= n");
  VerifyResult out;
  out.record = census(n, m, F, true, options);
  out.predicted_eq12 = predicted_count(n, m, F.q(), c_of_m(m, Convention::Eq12));
  out.predicted_multiset = predicted_count(n, m, F.q(), c_of_m(m, Convention::Multiset));
  const bool eq12 = out.record.count == out.predicted_eq12;
  const bool multiset = out.record.count == out.predicted_multiset;
  out.verdict = eq12 && multiset ? Verdict::MatchesBoth
                : eq12           ? Verdict::MatchesEq12
                : multiset       ? Verdict::MatchesMultiset
                                 : Verdict::MatchesNeither;
  out.flags = range_flags(n, m, F.p());
  return out;
}

InferCResult infer_c(int n, int m, std::span<const Field> fields, const CensusOptions& options) {
  if (m > n) throw PreconditionError("infer_c needs m <= n");
  if (fields.empty()) throw PreconditionError("infer_c needs at least one field");
  InferCResult out;
  out.n = n;
  out.m = m;
  for (const auto& F : fields) {
    const CensusRecord rec = census(n, m, F, false, options);
    const BigInt qn = big_pow(BigInt(F.q()), static_cast<unsigned>(n));
    const BigInt scale = big_pow(BigInt(F.q()), static_cast<unsigned>(n - m));
    InferredConstant ic;
    ic.p = F.p();
    ic.d = F.d();
    ic.q = F.q();
    ic.count = rec.count;
    ic.c = BigRational(qn - rec.count, scale);
    ic.integral = denominator(ic.c) == 1;
    out.per_field.push_back(std::move(ic));
    for (auto& flag : range_flags(n, m, F.p()))
      if (std::find(out.flags.begin(), out.flags.end(), flag) == out.flags.end()) out.flags.push_back(flag);
  }
  out.consistent = std::all_of(out.per_field.begin(), out.per_field.end(), [&](const InferredConstant& ic) {
    return ic.integral && ic.c == out.per_field.front().c;
  });
  if (out.consistent) out.c = numerator(out.per_field.front().c);
  return out;
}

}  // namespace ramify
