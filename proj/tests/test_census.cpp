#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "ramify/census.hpp"

using namespace ramify;

namespace {

DensePoly random_map(const Field& F, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> e(0, F.q() - 1);
  std::vector<Elem> a(static_cast<std::size_t>(n));
  for (auto& x : a) x = e(rng);
  return census_poly(a);
}

// Length read off critical values found by brute force in an extension E
// that contains every root of f'.
int splitting_field_length(const Field& E, const DensePoly& f) {
  const DensePoly df = poly_derivative(E, f);
  std::set<Elem> values;
  for (Elem x = 0; x < E.q(); ++x)
    if (poly_eval(E, df, x) == 0) values.insert(poly_eval(E, f, x));
  return df.degree() - static_cast<int>(values.size());
}

std::vector<Elem> digits_of(std::uint64_t index, int n, std::uint32_t q) {
  std::vector<Elem> a(static_cast<std::size_t>(n));
  for (auto& x : a) {
    x = static_cast<Elem>(index % q);
    index /= q;
  }
  return a;
}

}  // namespace

TEST_CASE("branch polynomial examples") {
  const Field F5 = Field::make(5), F7 = Field::make(7);
  CHECK(branch_poly(F5, poly_from_ints(F5, {0, 0, 1})) == poly_from_ints(F5, {0, 1}));
  CHECK(branch_poly(F5, poly_from_ints(F5, {0, 0, 0, 1})) == poly_from_ints(F5, {0, 0, 1}));
  CHECK(branch_poly(F7, poly_from_ints(F7, {0, 0, -2, 0, 1})) == poly_from_ints(F7, {0, 1, 2, 1}));
  CHECK(ram_length(F5, poly_from_ints(F5, {0, 0, 1})) == 0);
  CHECK(ram_length(F5, poly_from_ints(F5, {0, 0, 0, 1})) == 1);
  CHECK(ram_length(F7, poly_from_ints(F7, {0, 0, -2, 0, 1})) == 1);
}

TEST_CASE("map preconditions") {
  const Field F5 = Field::make(5);
  CHECK_THROWS_AS(branch_poly(F5, poly_from_ints(F5, {0, 0, 0, 0, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(branch_poly(F5, poly_from_ints(F5, {0, 0, 2})), PreconditionError);
  CHECK_THROWS_AS(branch_poly(F5, poly_from_ints(F5, {1, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(ram_length(F5, poly_from_ints(F5, {0, 1})), PreconditionError);
  CHECK_THROWS_AS(census(4, 1, F5, false), PreconditionError);
  CHECK_THROWS_AS(census(3, 0, F5, false), PreconditionError);
  CHECK_THROWS_AS(census(0, 1, F5, false), PreconditionError);
}

TEST_CASE("type_of examples") {
  const Field F7 = Field::make(7);
  CHECK(type_of(F7, poly_from_ints(F7, {0, 0, 0, 0, 1})).type == RamificationType::from_lists({{4}}));
  CHECK(type_of(F7, poly_from_ints(F7, {0, -3, 0, 1})).type == RamificationType::from_lists({{2}, {2}}));
  CHECK(type_of(F7, poly_from_ints(F7, {0, 0, -2, 0, 1})).type == RamificationType::from_lists({{2}, {2, 2}}));
}

TEST_CASE("fast and slow length paths agree on random maps") {
  for (auto [p, d, n] : std::vector<std::tuple<std::uint32_t, unsigned, int>>{
           {5, 1, 3}, {7, 1, 5}, {11, 1, 6}, {13, 1, 8}, {5, 2, 3}, {3, 3, 1}, {17, 1, 12}}) {
    const Field F = Field::make(p, d);
    CAPTURE(F.q());
    CAPTURE(n);
    RamLengthKernel kernel(F, n);
    std::mt19937_64 rng(p * 100 + n);
    std::uniform_int_distribution<Elem> e(0, F.q() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const DensePoly f = random_map(F, n, rng);
      std::vector<Elem> a(f.coeffs.begin() + 1, f.coeffs.end() - 1);
      const DensePoly B = branch_poly(F, f);
      CHECK(B.degree() == n);
      CHECK(B.is_monic());
      const int len = ram_length(F, f);
      CHECK(kernel(a) == len);

      const TypeOfResult t = type_of(F, f);
      CHECK(type_length(t.type) == len);
      CHECK(t.type.total_differential_length() == n);
      if (len == 0)
        for (const auto& b : t.type.profiles()) CHECK(b.is_simple());

      const Elem s = e(rng);
      DensePoly g = poly_shift(F, f, s);
      g.coeffs[0] = 0;
      CHECK(ram_length(F, g) == len);
    }
  }
}

TEST_CASE("census agrees with splitting-field critical values") {
  // (p, extension degree holding every root of f', largest n)
  for (auto [p, e, n_max] : std::vector<std::tuple<std::uint32_t, unsigned, int>>{{5, 6, 3}, {7, 2, 2}}) {
    const Field F = Field::make(p), E = Field::make(p, e);
    for (int n = 1; n <= n_max; ++n) {
      if (p <= static_cast<std::uint32_t>(n + 1)) continue;
      const CensusRecord rec = census(n, n, F, true);
      std::vector<BigInt> expected(static_cast<std::size_t>(n) + 1, 0);
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx)
        ++expected[static_cast<std::size_t>(splitting_field_length(E, census_poly(digits_of(idx, n, p))))];
      CHECK(rec.histogram == expected);
    }
  }
}

TEST_CASE("census agrees with the generic path") {
  const Field F = Field::make(7);
  const int n = 4;
  const CensusRecord rec = census(n, 2, F, true);
  std::vector<BigInt> expected(n + 1, 0);
  for (std::uint64_t idx = 0; idx < 2401; ++idx)
    ++expected[static_cast<std::size_t>(ram_length(F, census_poly(digits_of(idx, n, 7))))];
  CHECK(rec.histogram == expected);
}

TEST_CASE("census record invariants") {
  const Field F = Field::make(7);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      const CensusRecord rec = census(n, m, F, true);
      BigInt total = 0, below = 0;
      for (std::size_t l = 0; l < rec.histogram.size(); ++l) {
        total += rec.histogram[l];
        if (static_cast<int>(l) < m) below += rec.histogram[l];
      }
      CHECK(total == big_pow(BigInt(7), static_cast<unsigned>(n)));
      CHECK(rec.count == below);
      // the unique fully ramified class: (x + c)^{n+1} - c^{n+1}
      CHECK(rec.histogram[static_cast<std::size_t>(n)] == 0);
      CHECK(rec.histogram[static_cast<std::size_t>(n - 1)] == 7);
    }
}

TEST_CASE("census is independent of sharding") {
  const Field F = Field::make(11);
  const CensusRecord base = census(4, 2, F, true, {1, BigInt(10'000'000'000ULL), 1});
  for (unsigned prefix : {2u, 3u, 4u})
    for (unsigned jobs : {1u, 2u, 5u}) {
      CAPTURE(prefix);
      CAPTURE(jobs);
      const CensusRecord rec = census(4, 2, F, true, {jobs, BigInt(10'000'000'000ULL), prefix});
      CHECK(rec.histogram == base.histogram);
      CHECK(rec.count == base.count);
    }
}

TEST_CASE("census budget guard") {
  const Field F = Field::make(11);
  CensusOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(census(3, 1, F, false, tight), ResourceLimitError);
  tight.budget = 1331;
  CHECK_NOTHROW(census(3, 1, F, false, tight));
}

TEST_CASE("square-free quadratic count at n = 2") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const Field F = Field::make(p);
    CHECK(census(2, 1, F, false).count == BigInt(p) * p - p);
  }
}

TEST_CASE("verify and infer at n = 2") {
  const Field F5 = Field::make(5);
  const VerifyResult v = verify_count(2, 1, F5);
  CHECK(v.record.count == 20);
  CHECK(v.predicted_eq12 == 15);
  CHECK(v.predicted_multiset == 15);
  CHECK(v.verdict == Verdict::MatchesNeither);
  CHECK(std::find(v.flags.begin(), v.flags.end(), "n<3m") != v.flags.end());

  const std::vector<Field> fields{F5};
  const InferCResult r = infer_c(2, 1, fields);
  REQUIRE(r.per_field.size() == 1);
  CHECK(r.per_field[0].c == 1);
  CHECK(r.per_field[0].integral);
  CHECK(r.consistent);
  CHECK(r.c == BigInt(1));
  CHECK(std::find(r.flags.begin(), r.flags.end(), "n<3m") != r.flags.end());
  CHECK_THROWS_AS(verify_count(2, 3, F5), PreconditionError);
}

TEST_CASE("range flags") {
  CHECK(range_flags(3, 1, 5).empty());
  CHECK(range_flags(2, 1, 5) == std::vector<std::string>{"n<3m"});
  CHECK(range_flags(6, 2, 7) == std::vector<std::string>{"n>=p-1"});
  CHECK(predicted_count(3, 1, 5, 2) == 75);
}

TEST_CASE("every affine-admissible type of length <= 2 occurs") {
  std::mt19937_64 rng(2024);
  for (int n = 3; n <= 6; ++n) {
    std::set<RamificationType> wanted;
    for (int m = 1; m <= 2; ++m)
      for (const auto& t : enumerate_types(m))
        if (is_affine_admissible(t, n)) wanted.insert(t);
    for (std::uint32_t p : {11u, 13u}) {
      const Field F = Field::make(p);
      for (int trial = 0; trial < 40000 && !wanted.empty(); ++trial)
        wanted.erase(type_of(F, random_map(F, n, rng)).type.nonsimple_part());
    }
    CAPTURE(n);
    CHECK(wanted.empty());
  }
}
