#pragma once

// Stratification of the ordered-critical-point space: labels (rho1, rho2)
// of set partitions of {1..n}, where rho1 groups coincident critical points
// (a block of size s is one point of index s + 1) and rho2 groups points
// sharing a critical value. The model poset is generated from the bottom
// label by four degeneration moves:
//
//   A   merge two rho2-blocks (two fibers collide in value);
//   B'  merge two rho1-blocks in different rho2-blocks, and their fibers;
//   B   merge two rho1-blocks of one fiber and absorb a simple index into
//       the merged block (a sibling collision drags a third point along);
//   C   merge a simple index into an existing non-simple rho1-block.
//
// Every move lowers the number of rho2-blocks by one. Labels are kept only
// when their ramification type is both combinatorially and affinely
// admissible at n.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramify/poset.hpp"
#include "ramify/types.hpp"

namespace ramify {

/// Partition of {1..n}; blocks sorted internally and ordered by minimum.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws std::invalid_argument unless the blocks cover {1..n} exactly once.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition discrete(int n);
  static SetPartition single_block(int n);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Index into blocks() of the block containing element i (1-based).
  std::size_t block_of(int i) const { return block_of_.at(static_cast<std::size_t>(i - 1)); }

  bool refines(const SetPartition& coarser) const;
  /// Union of blocks a and b (indices into blocks()).
  SetPartition merged(std::size_t a, std::size_t b) const;
  /// Image under a 0-based permutation of {0..n-1} acting on labels i -> perm[i-1] + 1.
  SetPartition relabeled(const Permutation& perm) const;
  /// Length in the partition lattice: n - #blocks.
  int lattice_rank() const noexcept { return n_ - static_cast<int>(blocks_.size()); }

  std::string to_string() const;

  auto operator<=>(const SetPartition& other) const { return blocks_ <=> other.blocks_; }
  bool operator==(const SetPartition& other) const { return blocks_ == other.blocks_; }

 private:
  void index_blocks();

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::size_t> block_of_;
};

class StratumLabel {
 public:
  /// Throws std::invalid_argument unless rho1 refines rho2 on the same n.
  StratumLabel(SetPartition rho1, SetPartition rho2);

  /// Both partitions discrete (the generic stratum).
  static StratumLabel bottom(int n);
  /// Both partitions a single block (all critical points coincide).
  static StratumLabel top(int n);

  const SetPartition& rho1() const noexcept { return rho1_; }
  const SetPartition& rho2() const noexcept { return rho2_; }
  int n() const noexcept { return rho1_.n(); }

  /// Indices whose rho1- and rho2-blocks are both singletons.
  std::vector<int> simple_indices() const;
  bool is_simple(int i) const;
  /// n - #rho2-blocks.
  int length() const noexcept { return n() - static_cast<int>(rho2_.block_count()); }

  StratumLabel relabeled(const Permutation& perm) const;
  std::string to_string() const;

  auto operator<=>(const StratumLabel& other) const = default;
  bool operator==(const StratumLabel& other) const = default;

 private:
  SetPartition rho1_, rho2_;
};

struct StratumInvariants {
  std::vector<int> simple;                // N
  std::vector<std::vector<int>> coincident;  // R: rho1-blocks of non-simple indices
  std::vector<std::vector<int>> siblings;    // F: rho2-blocks of non-simple indices
  int length = 0;           // sum(|R_i| + 1) - sum k_j - |F|
  int length_by_blocks = 0;  // n - #rho2-blocks
};

/// Throws std::logic_error if the two length formulas disagree.
StratumInvariants stratum_invariants(const StratumLabel& label);

/// Multiset of per-fiber index multisets over non-simple indices.
RamificationType stratum_type(const StratumLabel& label);

struct StratumPoset {
  int n = 0;
  std::optional<int> max_length;
  GradedPoset poset;
  std::vector<StratumLabel> labels;
  std::map<StratumLabel, Index> index;
  /// Some move produced a label longer than max_length.
  bool truncated = false;
  /// Labels where two siblings could collide but no simple index remains.
  std::size_t blocked_sibling_collisions = 0;

  std::optional<Index> find(const StratumLabel& label) const;
};

/// Breadth-first closure of the bottom label under moves A, B', B, C.
/// Labels within each length are indexed in lexicographic order.
StratumPoset build_poset(int n, std::optional<int> max_length = std::nullopt);

struct PartitionLattice {
  int n = 0;
  GradedPoset poset;
  std::vector<SetPartition> labels;
};

/// The lattice of set partitions of {1..n} ordered by refinement.
PartitionLattice partition_lattice(int n);

GroupAction symmetric_action(const StratumPoset& P);
GroupAction symmetric_action(const PartitionLattice& L);

struct Orbit {
  std::vector<Index> members;
  Index representative = 0;
  int length = 0;
  RamificationType type;
};

std::vector<Orbit> orbit_decomposition(const StratumPoset& P, const GroupAction& action);

struct StabilizationRow {
  int n = 0;
  std::size_t model_orbits = 0;         // length-m orbits of the model
  std::size_t combinatorial_types = 0;  // length-m types passing the combinatorial predicate
  std::size_t affine_types = 0;         // ... the affine predicate
  std::size_t gated_types = 0;          // ... both (the model's gate)
  bool orbit_types_match = false;       // orbit types == gated types exactly
};

struct StabilizationTable {
  int m = 0;
  std::vector<StabilizationRow> rows;
  /// First n from which the count stays constant to the end of the range.
  std::optional<int> model_stable_from;
  std::optional<int> combinatorial_stable_from;
};

StabilizationTable stabilization_check(int m, int n_lo, int n_hi);

}  // namespace ramify
