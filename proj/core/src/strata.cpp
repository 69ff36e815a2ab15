#include "ramify/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramify {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("SetPartition: n must be positive");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 1 || i > n) throw std::invalid_argument("SetPartition: element out of range");
      if (seen[static_cast<std::size_t>(i - 1)]++) throw std::invalid_argument("SetPartition: element repeated");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw std::invalid_argument("SetPartition: element missing");
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  index_blocks();
}

void SetPartition::index_blocks() {
  block_of_.assign(static_cast<std::size_t>(n_), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int i : blocks_[b]) block_of_[static_cast<std::size_t>(i - 1)] = b;
}

SetPartition SetPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return SetPartition(n, {all});
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& b : blocks_) {
    const std::size_t target = coarser.block_of(b.front());
    for (int i : b)
      if (coarser.block_of(i) != target) return false;
  }
  return true;
}

SetPartition SetPartition::merged(std::size_t a, std::size_t b) const {
  if (a == b) return *this;
  std::vector<std::vector<int>> blocks;
  std::vector<int> joined = blocks_.at(a);
  joined.insert(joined.end(), blocks_.at(b).begin(), blocks_.at(b).end());
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (i != a && i != b) blocks.push_back(blocks_[i]);
  blocks.push_back(std::move(joined));
  return SetPartition(n_, std::move(blocks));
}

SetPartition SetPartition::relabeled(const Permutation& perm) const {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) {
    std::vector<int> image;
    for (int i : b) image.push_back(perm.at(static_cast<std::size_t>(i - 1)) + 1);
    blocks.push_back(std::move(image));
  }
  return SetPartition(n_, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << '|';
    for (int i : blocks_[b]) os << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

StratumLabel::StratumLabel(SetPartition rho1, SetPartition rho2) : rho1_(std::move(rho1)), rho2_(std::move(rho2)) {
  if (rho1_.n() != rho2_.n()) throw std::invalid_argument("StratumLabel: partitions of different sets");
  if (!rho1_.refines(rho2_)) throw std::invalid_argument("StratumLabel: rho1 does not refine rho2");
}

StratumLabel StratumLabel::bottom(int n) { return {SetPartition::discrete(n), SetPartition::discrete(n)}; }
StratumLabel StratumLabel::top(int n) { return {SetPartition::single_block(n), SetPartition::single_block(n)}; }

bool StratumLabel::is_simple(int i) const {
  return rho1_.blocks()[rho1_.block_of(i)].size() == 1 && rho2_.blocks()[rho2_.block_of(i)].size() == 1;
}

std::vector<int> StratumLabel::simple_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    if (is_simple(i)) out.push_back(i);
  return out;
}

StratumLabel StratumLabel::relabeled(const Permutation& perm) const {
  return {rho1_.relabeled(perm), rho2_.relabeled(perm)};
}

std::string StratumLabel::to_string() const { return "(" + rho1_.to_string() + "," + rho2_.to_string() + ")"; }

StratumInvariants stratum_invariants(const StratumLabel& label) {
  StratumInvariants inv;
  inv.simple = label.simple_indices();
  for (const auto& b : label.rho1().blocks())
    if (!label.is_simple(b.front())) inv.coincident.push_back(b);
  for (const auto& b : label.rho2().blocks())
    if (!label.is_simple(b.front())) inv.siblings.push_back(b);

  // sum over R of (|R_i| + 1), minus the number of points per fiber (k_j), minus |F|.
  int sum_indices = 0;
  for (const auto& r : inv.coincident) sum_indices += static_cast<int>(r.size()) + 1;
  int sum_points = 0;
  for (const auto& f : inv.siblings) {
    std::set<std::size_t> points;
    for (int i : f) points.insert(label.rho1().block_of(i));
    sum_points += static_cast<int>(points.size());
  }
  inv.length = sum_indices - sum_points - static_cast<int>(inv.siblings.size());
  inv.length_by_blocks = label.length();
  if (inv.length != inv.length_by_blocks)
    throw std::logic_error("stratum_invariants: length formulas disagree for " + label.to_string());
  return inv;
}

RamificationType stratum_type(const StratumLabel& label) {
  std::vector<BranchProfile> profiles;
  for (const auto& fiber : label.rho2().blocks()) {
    if (fiber.size() < 2) continue;
    std::map<std::size_t, int> sizes;
    for (int i : fiber) ++sizes[label.rho1().block_of(i)];
    std::vector<int> indices;
    for (const auto& [block, size] : sizes) indices.push_back(size + 1);
    profiles.emplace_back(std::move(indices));
  }
  return RamificationType(std::move(profiles));
}

std::optional<Index> StratumPoset::find(const StratumLabel& label) const {
  auto it = index.find(label);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Model construction

namespace {

struct MoveResult {
  std::vector<StratumLabel> targets;
  bool blocked_sibling_collision = false;
};

MoveResult degenerations(const StratumLabel& label) {
  MoveResult out;
  const auto& r1 = label.rho1();
  const auto& r2 = label.rho2();
  const auto simple = label.simple_indices();
  auto fiber_of_block = [&](std::size_t b1) { return r2.block_of(r1.blocks()[b1].front()); };

  // A: two fibers collide in value.
  for (std::size_t a = 0; a < r2.block_count(); ++a)
    for (std::size_t b = a + 1; b < r2.block_count(); ++b) out.targets.emplace_back(r1, r2.merged(a, b));

  for (std::size_t a = 0; a < r1.block_count(); ++a)
    for (std::size_t b = a + 1; b < r1.block_count(); ++b) {
      const std::size_t fa = fiber_of_block(a), fb = fiber_of_block(b);
      if (fa != fb) {
        // B': points from different fibers coincide.
        out.targets.emplace_back(r1.merged(a, b), r2.merged(fa, fb));
        continue;
      }
      // B: siblings coincide and absorb a simple index.
      if (simple.empty()) {
        out.blocked_sibling_collision = true;
        continue;
      }
      const SetPartition joined = r1.merged(a, b);
      for (int k : simple) {
        const std::size_t jb = joined.block_of(r1.blocks()[a].front());
        const SetPartition rho1 = joined.merged(jb, joined.block_of(k));
        const SetPartition rho2 = r2.merged(fa, r2.block_of(k));
        out.targets.emplace_back(rho1, rho2);
      }
    }

  // C: a simple index joins a non-simple point.
  for (int k : simple)
    for (std::size_t b = 0; b < r1.block_count(); ++b) {
      const int rep = r1.blocks()[b].front();
      if (label.is_simple(rep)) continue;
      out.targets.emplace_back(r1.merged(b, r1.block_of(k)), r2.merged(fiber_of_block(b), r2.block_of(k)));
    }
  return out;
}

bool admitted(const StratumLabel& label) {
  const RamificationType t = stratum_type(label);
  return is_combinatorially_admissible(t, label.n()) && is_affine_admissible(t, label.n());
}

}  // namespace

StratumPoset build_poset(int n, std::optional<int> max_length) {
  if (n < 1) throw std::invalid_argument("build_poset: n must be positive");
  StratumPoset P;
  P.n = n;
  P.max_length = max_length;
  std::vector<std::pair<Index, Index>> covers;

  std::vector<Index> level{0};
  P.labels.push_back(StratumLabel::bottom(n));
  P.index.emplace(P.labels.back(), 0);
  while (!level.empty()) {
    std::set<StratumLabel> fresh;
    std::vector<std::pair<Index, StratumLabel>> edges;
    for (Index src : level) {
      MoveResult moves = degenerations(P.labels[src]);
      if (moves.blocked_sibling_collision) ++P.blocked_sibling_collisions;
      for (auto& t : moves.targets) {
        if (t.length() != P.labels[src].length() + 1) throw std::logic_error("build_poset: move is not a cover");
        if (!admitted(t)) continue;
        if (max_length && t.length() > *max_length) {
          P.truncated = true;
          continue;
        }
        fresh.insert(t);
        edges.emplace_back(src, std::move(t));
      }
    }
    std::vector<Index> next;
    for (const auto& t : fresh) {
      const Index id = P.labels.size();
      P.labels.push_back(t);
      P.index.emplace(t, id);
      next.push_back(id);
    }
    for (const auto& [src, t] : edges) covers.emplace_back(src, P.index.at(t));
    level = std::move(next);
  }

  std::vector<std::string> names;
  for (const auto& l : P.labels) names.push_back(l.to_string());
  P.poset = GradedPoset::from_covers(P.labels.size(), std::move(covers), std::move(names));
  return P;
}

PartitionLattice partition_lattice(int n) {
  if (n < 1) throw std::invalid_argument("partition_lattice: n must be positive");
  PartitionLattice L;
  L.n = n;
  std::map<SetPartition, Index> index;
  std::vector<std::pair<Index, Index>> covers;
  std::vector<Index> level{0};
  L.labels.push_back(SetPartition::discrete(n));
  index.emplace(L.labels.back(), 0);
  while (!level.empty()) {
    std::set<SetPartition> fresh;
    std::vector<std::pair<Index, SetPartition>> edges;
    for (Index src : level) {
      const auto& p = L.labels[src];
      for (std::size_t a = 0; a < p.block_count(); ++a)
        for (std::size_t b = a + 1; b < p.block_count(); ++b) {
          SetPartition t = p.merged(a, b);
          fresh.insert(t);
          edges.emplace_back(src, std::move(t));
        }
    }
    std::vector<Index> next;
    for (const auto& t : fresh) {
      index.emplace(t, L.labels.size());
      next.push_back(L.labels.size());
      L.labels.push_back(t);
    }
    for (const auto& [src, t] : edges) covers.emplace_back(src, index.at(t));
    level = std::move(next);
  }
  std::vector<std::string> names;
  for (const auto& l : L.labels) names.push_back(l.to_string());
  L.poset = GradedPoset::from_covers(L.labels.size(), std::move(covers), std::move(names));
  return L;
}

namespace {

template <typename Label, typename Lookup>
GroupAction make_symmetric_action(int n, const std::vector<Label>& labels, Lookup lookup) {
  GroupAction action;
  action.degree = n;
  action.generators = symmetric_group_generators(n);
  action.elements = group_closure(n, action.generators);
  for (const auto& g : action.elements) {
    std::vector<Index> map(labels.size());
    for (Index i = 0; i < labels.size(); ++i) map[i] = lookup(labels[i].relabeled(g));
    action.element_maps.push_back(std::move(map));
  }
  return action;
}

}  // namespace

GroupAction symmetric_action(const StratumPoset& P) {
  return make_symmetric_action(P.n, P.labels, [&](const StratumLabel& l) {
    auto id = P.find(l);
    if (!id) throw std::logic_error("symmetric_action: model is not closed under relabeling");
    return *id;
  });
}

GroupAction symmetric_action(const PartitionLattice& L) {
  std::map<SetPartition, Index> index;
  for (Index i = 0; i < L.labels.size(); ++i) index.emplace(L.labels[i], i);
  return make_symmetric_action(L.n, L.labels, [&](const SetPartition& p) { return index.at(p); });
}

std::vector<Orbit> orbit_decomposition(const StratumPoset& P, const GroupAction& action) {
  std::vector<Orbit> out;
  for (auto& members : element_orbits(action, P.labels.size())) {
    Orbit o;
    o.representative = members.front();
    o.length = P.labels[o.representative].length();
    o.type = stratum_type(P.labels[o.representative]);
    o.members = std::move(members);
    out.push_back(std::move(o));
  }
  return out;
}

StabilizationTable stabilization_check(int m, int n_lo, int n_hi) {
  if (m < 1) throw std::invalid_argument("stabilization_check: m must be at least 1");
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("stabilization_check: bad n range");
  StabilizationTable table;
  table.m = m;
  const auto types = enumerate_types(m);
  for (int n = n_lo; n <= n_hi; ++n) {
    StabilizationRow row;
    row.n = n;
    const StratumPoset P = build_poset(n, m);
    std::set<RamificationType> orbit_types;
    for (const auto& o : orbit_decomposition(P, symmetric_action(P)))
      if (o.length == m) {
        ++row.model_orbits;
        orbit_types.insert(o.type);
      }
    std::set<RamificationType> gated;
    for (const auto& t : types) {
      const bool comb = is_combinatorially_admissible(t, n);
      const bool aff = is_affine_admissible(t, n);
      row.combinatorial_types += comb;
      row.affine_types += aff;
      if (comb && aff) gated.insert(t);
    }
    row.gated_types = gated.size();
    row.orbit_types_match = orbit_types == gated && row.model_orbits == gated.size();
    table.rows.push_back(row);
  }
  auto stable_from = [&](auto field) -> std::optional<int> {
    std::optional<int> from;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
      if (i == 0 || field(table.rows[i]) != field(table.rows[i - 1])) from = table.rows[i].n;
    if (table.rows.size() < 2 || from == table.rows.back().n) return std::nullopt;
    return from;
  };
  table.model_stable_from = stable_from([](const StabilizationRow& r) { return r.model_orbits; });
  table.combinatorial_stable_from = stable_from([](const StabilizationRow& r) { return r.combinatorial_types; });
  return table;
}

}  // namespace ramify
