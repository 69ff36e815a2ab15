#pragma once

// Ramification types of polynomial self-maps of the affine line: branch
// profiles, their multisets, the counting function c(m) and the two
// admissibility predicates.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ramify/bigint.hpp"

namespace ramify {

/// A partition of an integer, parts weakly decreasing.
using Partition = std::vector<int>;

/// Number of partitions of N; p(0) = 1.
BigInt partition_count(int N);

/// All partitions of N in reverse lexicographic order: {3}, {2,1}, {1,1,1}.
/// N = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int N);

/// Multiset of ramification indices (each >= 2) over one branch point,
/// stored ascending.
class BranchProfile {
 public:
  explicit BranchProfile(std::vector<int> indices);

  const std::vector<int>& indices() const noexcept { return indices_; }

  /// Sum of (e - 1): the ramification length over the branch point.
  int local_ram_length() const noexcept;
  /// local_ram_length() - 1; zero exactly for the simple profile {2}.
  int contribution() const noexcept { return local_ram_length() - 1; }
  /// Sum of e: points of the fiber absorbed by this profile.
  int fiber_size() const noexcept;
  /// Number of ramification points (k_j).
  int point_count() const noexcept { return static_cast<int>(indices_.size()); }
  bool is_simple() const noexcept { return indices_.size() == 1 && indices_[0] == 2; }

  /// Canonical order: contribution first, then lexicographic on indices.
  std::strong_ordering operator<=>(const BranchProfile& other) const;
  bool operator==(const BranchProfile& other) const = default;

 private:
  std::vector<int> indices_;
};

/// Multiset of branch profiles, held in canonical order.
class RamificationType {
 public:
  RamificationType() = default;
  explicit RamificationType(std::vector<BranchProfile> profiles);

  /// Builds from raw index lists, e.g. {{2,2},{3}}.
  static RamificationType from_lists(const std::vector<std::vector<int>>& lists);

  const std::vector<BranchProfile>& profiles() const noexcept { return profiles_; }
  bool empty() const noexcept { return profiles_.empty(); }

  /// Sum over profiles of contribution().
  int length() const noexcept;
  /// Sum of (e - 1) over every point; equals n for a full type of a degree n+1 map.
  int total_differential_length() const noexcept;
  /// Sum over profiles of (k_j - 1).
  int sibling_excess() const noexcept;

  /// The type with every simple {2} profile removed.
  RamificationType nonsimple_part() const;

  std::vector<std::vector<int>> to_lists() const;
  /// Compact text form, e.g. "[[2,2],[3]]".
  std::string to_string() const;

  auto operator<=>(const RamificationType& other) const = default;
  bool operator==(const RamificationType& other) const = default;

 private:
  std::vector<BranchProfile> profiles_;
};

/// Length as the sum over profiles of (sum(e - 1) - 1).
int type_length(const RamificationType& type);
/// Length as sum(e - 2) + sum(k_j - 1); must agree with type_length.
int type_length_by_excess(const RamificationType& type);

enum class Convention { Eq12, Multiset };

const char* convention_name(Convention c);

/// c(m). Eq12 evaluates the product formula over weakly increasing
/// compositions literally; Multiset counts multisets of non-simple profiles
/// of total contribution m. Throws std::invalid_argument for m < 1.
BigInt c_of_m(int m, Convention convention);

/// Every profile with the given contribution (>= 0), in partition order.
std::vector<BranchProfile> profiles_with_contribution(int contribution);

/// All types of length m built from non-simple profiles. m = 0 yields the
/// empty type only.
std::vector<RamificationType> enumerate_types(int m);

struct AdmissibilityReport {
  RamificationType type;
  int n = 0;
  bool combinatorial = false;
  bool affine = false;
  std::vector<std::string> reasons;
};

/// Sum(e - 1) <= n and every fiber sum(e) <= n + 1.
bool is_combinatorially_admissible(const RamificationType& type, int n);
/// n - sum(e - 1) >= sum(k_j - 1).
bool is_affine_admissible(const RamificationType& type, int n);
AdmissibilityReport check_admissibility(const RamificationType& type, int n);

enum class AdmissibilityKind { Combinatorial, Affine };

/// Smallest n at which every type of length m passes the predicate, found
/// by scanning n upwards over enumerate_types(m).
int minimal_admissible_n(int m, AdmissibilityKind kind);

}  // namespace ramify
