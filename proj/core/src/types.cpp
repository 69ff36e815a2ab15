#include "ramify/types.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramify {

BigInt partition_count(int N) {
  if (N < 0) throw std::invalid_argument("partition_count: N must be nonnegative");
  // Standard coin-change recurrence over part sizes.
  std::vector<BigInt> ways(static_cast<std::size_t>(N) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= N; ++part)
    for (int total = part; total <= N; ++total) ways[total] += ways[total - part];
  return ways[N];
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int N) {
  if (N < 0) throw std::invalid_argument("enumerate_partitions: N must be nonnegative");
  std::vector<Partition> out;
  Partition current;
  partitions_rec(N, N, current, out);
  return out;
}

// ---------------------------------------------------------------------------

BranchProfile::BranchProfile(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("BranchProfile: empty index multiset");
  for (int e : indices_)
    if (e < 2) throw std::invalid_argument("BranchProfile: ramification index below 2");
  std::sort(indices_.begin(), indices_.end());
}

int BranchProfile::local_ram_length() const noexcept {
  int s = 0;
  for (int e : indices_) s += e - 1;
  return s;
}

int BranchProfile::fiber_size() const noexcept {
  return std::accumulate(indices_.begin(), indices_.end(), 0);
}

std::strong_ordering BranchProfile::operator<=>(const BranchProfile& other) const {
  if (auto c = contribution() <=> other.contribution(); c != 0) return c;
  return indices_ <=> other.indices_;
}

RamificationType::RamificationType(std::vector<BranchProfile> profiles)
    : profiles_(std::move(profiles)) {
  std::sort(profiles_.begin(), profiles_.end());
}

RamificationType RamificationType::from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<BranchProfile> profiles;
  profiles.reserve(lists.size());
  for (const auto& l : lists) profiles.emplace_back(l);
  return RamificationType(std::move(profiles));
}

int RamificationType::length() const noexcept {
  int s = 0;
  for (const auto& p : profiles_) s += p.contribution();
  return s;
}

int RamificationType::total_differential_length() const noexcept {
  int s = 0;
  for (const auto& p : profiles_) s += p.local_ram_length();
  return s;
}

int RamificationType::sibling_excess() const noexcept {
  int s = 0;
  for (const auto& p : profiles_) s += p.point_count() - 1;
  return s;
}

RamificationType RamificationType::nonsimple_part() const {
  std::vector<BranchProfile> kept;
  for (const auto& p : profiles_)
    if (!p.is_simple()) kept.push_back(p);
  return RamificationType(std::move(kept));
}

std::vector<std::vector<int>> RamificationType::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(profiles_.size());
  for (const auto& p : profiles_) out.push_back(p.indices());
  return out;
}

std::string RamificationType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    if (i) os << ',';
    os << '[';
    const auto& idx = profiles_[i].indices();
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j];
    os << ']';
  }
  os << ']';
  return os.str();
}

int type_length(const RamificationType& type) { return type.length(); }

int type_length_by_excess(const RamificationType& type) {
  int s = 0;
  for (const auto& p : type.profiles())
    for (int e : p.indices()) s += e - 2;
  return s + type.sibling_excess();
}

const char* convention_name(Convention c) {
  return c == Convention::Eq12 ? "eq12" : "multiset";
}

namespace {

BigInt binomial(const BigInt& n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

BigInt c_of_m(int m, Convention convention) {
  if (m < 1) throw std::invalid_argument("c_of_m: m must be at least 1");
  if (convention == Convention::Eq12) {
    BigInt total = 0;
    for (const auto& parts : enumerate_partitions(m)) {
      BigInt term = 1;
      for (int part : parts) term *= partition_count(part + 1);
      total += term;
    }
    return total;
  }
  // Multisets: profiles of contribution c come in p(c + 1) shapes; choosing
  // r of them with repetition gives C(p(c+1) + r - 1, r). Knapsack over c.
  std::vector<BigInt> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int c = 1; c <= m; ++c) {
    const BigInt shapes = partition_count(c + 1);
    std::vector<BigInt> next(ways.size(), 0);
    for (int base = 0; base <= m; ++base) {
      if (ways[base] == 0) continue;
      for (int r = 0; base + r * c <= m; ++r) next[base + r * c] += ways[base] * binomial(shapes + r - 1, r);
    }
    ways = std::move(next);
  }
  return ways[m];
}

std::vector<BranchProfile> profiles_with_contribution(int contribution) {
  if (contribution < 0) throw std::invalid_argument("profiles_with_contribution: negative contribution");
  std::vector<BranchProfile> out;
  for (const auto& parts : enumerate_partitions(contribution + 1)) {
    std::vector<int> indices;
    for (int d : parts) indices.push_back(d + 1);
    out.emplace_back(std::move(indices));
  }
  return out;
}

std::vector<RamificationType> enumerate_types(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_types: m must be nonnegative");
  std::vector<RamificationType> out;
  for (const auto& parts : enumerate_partitions(m)) {
    // Group equal contributions: (contribution, multiplicity), descending.
    std::vector<std::pair<int, int>> groups;
    for (int c : parts) {
      if (!groups.empty() && groups.back().first == c)
        ++groups.back().second;
      else
        groups.emplace_back(c, 1);
    }
    std::vector<BranchProfile> chosen;
    std::function<void(std::size_t)> over_groups = [&](std::size_t g) {
      if (g == groups.size()) {
        out.emplace_back(chosen);
        return;
      }
      const auto shapes = profiles_with_contribution(groups[g].first);
      const int r = groups[g].second;
      // Multisets of size r from shapes, as nondecreasing index sequences.
      std::function<void(int, std::size_t)> pick = [&](int left, std::size_t from) {
        if (left == 0) {
          over_groups(g + 1);
          return;
        }
        for (std::size_t s = from; s < shapes.size(); ++s) {
          chosen.push_back(shapes[s]);
          pick(left - 1, s);
          chosen.pop_back();
        }
      };
      pick(r, 0);
    };
    over_groups(0);
  }
  return out;
}

bool is_combinatorially_admissible(const RamificationType& type, int n) {
  if (type.total_differential_length() > n) return false;
  for (const auto& p : type.profiles())
    if (p.fiber_size() > n + 1) return false;
  return true;
}

bool is_affine_admissible(const RamificationType& type, int n) {
  return n - type.total_differential_length() >= type.sibling_excess();
}

AdmissibilityReport check_admissibility(const RamificationType& type, int n) {
  AdmissibilityReport report{type, n, is_combinatorially_admissible(type, n), is_affine_admissible(type, n), {}};
  const int diff = type.total_differential_length();
  if (diff > n)
    report.reasons.push_back("riemann-hurwitz: sum(e-1) = " + std::to_string(diff) + " > n = " + std::to_string(n));
  for (const auto& p : type.profiles())
    if (p.fiber_size() > n + 1)
      report.reasons.push_back("fiber capacity: profile " + RamificationType({p}).to_string() + " has sum(e) = " +
                               std::to_string(p.fiber_size()) + " > n+1 = " + std::to_string(n + 1));
  if (!report.affine)
    report.reasons.push_back("affine: n - sum(e-1) = " + std::to_string(n - diff) + " < sum(k-1) = " +
                             std::to_string(type.sibling_excess()));
  return report;
}

int minimal_admissible_n(int m, AdmissibilityKind kind) {
  if (m < 1) throw std::invalid_argument("minimal_admissible_n: m must be at least 1");
  const auto types = enumerate_types(m);
  for (int n = 1;; ++n) {
    const bool all = std::all_of(types.begin(), types.end(), [&](const RamificationType& t) {
      return kind == AdmissibilityKind::Combinatorial ? is_combinatorially_admissible(t, n)
                                                      : is_affine_admissible(t, n);
    });
    if (all) return n;
  }
}

}  // namespace ramify
