#include "doctest.h"

#include <stdexcept>

#include <map>
#include <set>

#include "ramify/types.hpp"

using namespace ramify;

namespace {

// p(N) from Euler's pentagonal recurrence.
std::vector<BigInt> pentagonal_table(int N) {
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return p;
}

// Coefficient of x^m in prod_{c >= 1} (1 - x^c)^{-p(c+1)}: multisets of
// non-simple profiles weighted by contribution.
BigInt multiset_oracle(int m) {
  const auto p = pentagonal_table(m + 1);
  std::vector<BigInt> series(static_cast<std::size_t>(m) + 1, 0);
  series[0] = 1;
  for (int c = 1; c <= m; ++c)
    for (BigInt copies = 0; copies < p[c + 1]; ++copies)
      for (int k = c; k <= m; ++k) series[k] += series[k - c];
  return series[m];
}

// Sum over partitions of m of prod p(n_j + 1), by recursion on the largest part.
BigInt eq12_oracle(int m, int max_part, const std::vector<BigInt>& p) {
  if (m == 0) return 1;
  BigInt total = 0;
  for (int part = std::min(m, max_part); part >= 1; --part) total += p[part + 1] * eq12_oracle(m - part, part, p);
  return total;
}

}  // namespace

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(7) == 15);
  CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);
  const auto oracle = pentagonal_table(60);
  for (int N = 0; N <= 60; ++N) CHECK(partition_count(N) == oracle[N]);
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
  CHECK(enumerate_partitions(1) == std::vector<Partition>{{1}});
  CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  for (int N = 0; N <= 18; ++N) {
    const auto parts = enumerate_partitions(N);
    CHECK(BigInt(parts.size()) == partition_count(N));
    std::set<Partition> unique(parts.begin(), parts.end());
    CHECK(unique.size() == parts.size());
    for (const auto& part : parts) {
      int sum = 0;
      for (int x : part) sum += x;
      CHECK(sum == N);
      CHECK(std::is_sorted(part.rbegin(), part.rend()));
    }
  }
}

TEST_CASE("branch profiles") {
  BranchProfile b({3, 2});
  CHECK(b.indices() == std::vector<int>{2, 3});
  CHECK(b.local_ram_length() == 3);
  CHECK(b.contribution() == 2);
  CHECK(b.fiber_size() == 5);
  CHECK(b.point_count() == 2);
  CHECK(BranchProfile({2}).is_simple());
  CHECK_THROWS_AS(BranchProfile({}), std::invalid_argument);
  CHECK_THROWS_AS(BranchProfile({1, 3}), std::invalid_argument);
}

TEST_CASE("type lengths") {
  CHECK(type_length(RamificationType::from_lists({{3}})) == 1);
  CHECK(type_length(RamificationType::from_lists({{2, 2}, {3}})) == 2);
  CHECK(type_length(RamificationType::from_lists({{4, 2}})) == 3);
  CHECK(type_length(RamificationType{}) == 0);
  CHECK(RamificationType::from_lists({{3}, {2, 2}}).to_string() == "[[2,2],[3]]");
  CHECK(RamificationType::from_lists({{2}, {3}}).nonsimple_part() == RamificationType::from_lists({{3}}));
}

TEST_CASE("c(m) under both readings") {
  CHECK(c_of_m(1, Convention::Eq12) == 2);
  CHECK(c_of_m(1, Convention::Multiset) == 2);
  CHECK(c_of_m(2, Convention::Eq12) == 7);
  CHECK(c_of_m(2, Convention::Multiset) == 6);
  CHECK(c_of_m(3, Convention::Eq12) == 19);
  CHECK(c_of_m(3, Convention::Multiset) == 15);
  CHECK_THROWS_AS(c_of_m(0, Convention::Eq12), std::invalid_argument);
  const auto p = pentagonal_table(40);
  for (int m = 1; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(c_of_m(m, Convention::Eq12) == eq12_oracle(m, m, p));
    CHECK(c_of_m(m, Convention::Multiset) == multiset_oracle(m));
    CHECK(c_of_m(m, Convention::Eq12) >= c_of_m(m, Convention::Multiset));
  }
}

TEST_CASE("type enumeration") {
  CHECK(enumerate_types(0) == std::vector<RamificationType>{RamificationType{}});
  CHECK(enumerate_types(1) ==
        std::vector<RamificationType>{RamificationType::from_lists({{3}}), RamificationType::from_lists({{2, 2}})});
  CHECK(enumerate_types(2).size() == 6);
  for (int m = 1; m <= 7; ++m) {
    const auto types = enumerate_types(m);
    CHECK(BigInt(types.size()) == c_of_m(m, Convention::Multiset));
    std::set<RamificationType> unique(types.begin(), types.end());
    CHECK(unique.size() == types.size());
    for (const auto& t : types) {
      CHECK(t.length() == m);
      CHECK(type_length(t) == type_length_by_excess(t));
      for (const auto& b : t.profiles()) CHECK_FALSE(b.is_simple());
    }
  }
}

TEST_CASE("admissibility examples") {
  CHECK(is_combinatorially_admissible(RamificationType::from_lists({{2, 2, 2}}), 5));
  CHECK_FALSE(is_combinatorially_admissible(RamificationType::from_lists({{2, 2, 2}}), 4));
  CHECK(is_affine_admissible(RamificationType::from_lists({{3}}), 3));
  CHECK_FALSE(is_affine_admissible(RamificationType::from_lists({{2, 2}, {2, 2}}), 4));
  const auto report = check_admissibility(RamificationType::from_lists({{2, 2, 2}}), 4);
  CHECK_FALSE(report.combinatorial);
  CHECK_FALSE(report.affine);
  CHECK_FALSE(report.reasons.empty());
}

TEST_CASE("admissibility properties") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& t : enumerate_types(m))
      for (int n = 1; n <= 20; ++n) {
        const bool comb = is_combinatorially_admissible(t, n);
        const bool aff = is_affine_admissible(t, n);
        if (aff) CHECK(comb);
        if (comb) CHECK(is_combinatorially_admissible(t, n + 1));
        if (aff) CHECK(is_affine_admissible(t, n + 1));
        if (n >= 3 * m) CHECK(aff);
        if (n >= 2 * m + 1) CHECK(comb);
      }
}

TEST_CASE("minimal admissible n") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(minimal_admissible_n(m, AdmissibilityKind::Combinatorial) == 2 * m + 1);
    CHECK(minimal_admissible_n(m, AdmissibilityKind::Affine) == 3 * m);
  }
  CHECK_THROWS_AS(minimal_admissible_n(0, AdmissibilityKind::Affine), std::invalid_argument);
}
