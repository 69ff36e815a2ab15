#pragma once

// Finite graded posets given by their cover relation, and the topology of
// their intervals: reduced cohomology of order complexes (exact, over Q),
// Moebius functions, local semimodularity, quotients that collapse the low
// ranks, and invariants under permutation actions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramify/bigint.hpp"

namespace ramify {

using Index = std::size_t;

class GradedPoset {
 public:
  GradedPoset() = default;

  /// Builds from cover pairs (lower, upper). Rank is the length of the
  /// longest chain from the bottom. Throws std::invalid_argument when the
  /// relation has a cycle or there is not exactly one minimal element.
  static GradedPoset from_covers(std::size_t size, std::vector<std::pair<Index, Index>> covers,
                                 std::vector<std::string> names = {});

  std::size_t size() const noexcept { return up_.size(); }
  const std::vector<Index>& up(Index i) const { return up_.at(i); }
  const std::vector<Index>& down(Index i) const { return down_.at(i); }
  const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }
  int rank(Index i) const { return rank_.at(i); }
  Index bottom() const noexcept { return bottom_; }
  std::optional<Index> top() const noexcept { return top_; }
  const std::string& name(Index i) const { return names_.at(i); }

  bool leq(Index u, Index v) const;
  bool less(Index u, Index v) const { return u != v && leq(u, v); }
  bool covers_pair(Index lower, Index upper) const;

  /// Elements strictly between u and v, ordered by (rank, index).
  std::vector<Index> open_interval(Index u, Index v) const;
  /// Elements of [u, v], ordered by (rank, index).
  std::vector<Index> closed_interval(Index u, Index v) const;

 private:
  std::vector<std::vector<Index>> up_, down_;
  std::vector<std::pair<Index, Index>> covers_;
  std::vector<int> rank_;
  std::vector<std::vector<std::uint64_t>> reach_;  // reach_[u] bitset of v >= u
  std::vector<std::string> names_;
  Index bottom_ = 0;
  std::optional<Index> top_;
};

struct GradedCheck {
  bool graded = false;
  std::string reason;
  std::optional<std::pair<Index, Index>> bad_cover;
};

/// Bounded, every cover raises the rank by exactly one, and no listed cover
/// is implied by a longer chain.
GradedCheck check_graded(const GradedPoset& P);

/// Reduced cohomology ranks of the order complex of (u, v); a chain with k
/// interior elements sits in degree k - 1. u = v gives rank 1 in degree -2.
struct IntervalCohomology {
  std::map<int, std::size_t> ranks;  // only nonzero entries

  std::size_t rank_at(int degree) const;
  /// Sum of (-1)^i rank_i.
  std::int64_t euler_characteristic() const;
  bool operator==(const IntervalCohomology&) const = default;
};

/// Throws std::invalid_argument unless u <= v.
IntervalCohomology interval_cohomology(const GradedPoset& P, Index u, Index v);

/// Moebius function by the defining recursion. Throws unless u <= v.
std::int64_t mobius(const GradedPoset& P, Index u, Index v);

struct SemimodularityCheck {
  bool ok = true;
  // (x, alpha, beta, y): alpha, beta cover x inside [x, y] without a common cover below y.
  std::optional<std::array<Index, 4>> counterexample;
};

SemimodularityCheck is_locally_semimodular(const GradedPoset& P);

/// Rank of an integer matrix over Q (fraction-free Bareiss elimination).
std::size_t exact_rank(std::vector<std::vector<BigInt>> matrix);

// ---------------------------------------------------------------------------
// Quotients

struct QuotientPoset {
  GradedPoset poset;
  /// Printed quotient length: 0 if l < m, else l - m.
  std::vector<int> quotient_length;
  /// Original element -> quotient element (pr_m).
  std::vector<Index> projection;
  /// Quotient element -> original element (the collapsed bottom maps to the original bottom).
  std::vector<Index> source;
};

/// Collapses every element of rank < m onto the bottom. Throws for m < 1.
QuotientPoset quotient_poset(const GradedPoset& P, int m);

struct VanishingEntry {
  Index element = 0;  // in the quotient
  Index source = 0;   // in the original poset
  int quotient_length = 0;
  int rank = 0;  // rank inside the quotient poset
  IntervalCohomology cohomology;
  bool ok = true;            // zero below quotient_length - 2
  bool ok_intrinsic = true;  // zero below rank - 2
};

struct VanishingReport {
  int m = 1;
  bool pass = true;
  bool pass_intrinsic = true;
  std::vector<VanishingEntry> entries;
};

/// For every element of the m-quotient, checks H~^i(0, lambda) = 0 for
/// i < l^m(lambda) - 2, and also against the quotient's own rank.
VanishingReport check_vanishing(const GradedPoset& P, int m);

// ---------------------------------------------------------------------------
// Permutation actions

/// 0-based images: perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& outer, const Permutation& inner);
/// The transposition (0 1) and the cycle (0 1 ... n-1); empty for n = 1.
std::vector<Permutation> symmetric_group_generators(int n);
/// Every element of the group generated by the given permutations.
std::vector<Permutation> group_closure(int degree, std::span<const Permutation> generators);

struct GroupAction {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  /// element_maps[g][x] = g . x on poset indices.
  std::vector<std::vector<Index>> element_maps;
};

/// True iff every group element is a rank- and cover-preserving bijection.
bool action_preserves_structure(const GradedPoset& P, const GroupAction& action);

/// Orbits of poset elements, each sorted, ordered by smallest member.
std::vector<std::vector<Index>> element_orbits(const GroupAction& action, std::size_t size);

/// Dimension of the invariants of H~^*(bottom, lambda) under the stabilizer
/// of lambda, computed on the invariant cochain subcomplex. Throws
/// std::invalid_argument if the action moves the bottom.
IntervalCohomology invariant_cohomology(const GradedPoset& P, Index lambda, const GroupAction& action);

}  // namespace ramify
