#include "ramify/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramify {

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, Index i) { return (bits[i / 64] >> (i % 64)) & 1u; }
void set_bit(std::vector<std::uint64_t>& bits, Index i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

GradedPoset GradedPoset::from_covers(std::size_t size, std::vector<std::pair<Index, Index>> covers,
                                     std::vector<std::string> names) {
  if (size == 0) throw std::invalid_argument("poset: empty element set");
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  GradedPoset P;
  P.up_.assign(size, {});
  P.down_.assign(size, {});
  for (const auto& [lo, hi] : covers) {
    if (lo >= size || hi >= size || lo == hi) throw std::invalid_argument("poset: malformed cover pair");
    P.up_[lo].push_back(hi);
    P.down_[hi].push_back(lo);
  }
  P.covers_ = std::move(covers);

  // Kahn topological order.
  std::vector<std::size_t> indegree(size);
  for (Index i = 0; i < size; ++i) indegree[i] = P.down_[i].size();
  std::deque<Index> ready;
  for (Index i = 0; i < size; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  if (ready.size() != 1) throw std::invalid_argument("poset: expected exactly one minimal element");
  P.bottom_ = ready.front();
  std::vector<Index> order;
  while (!ready.empty()) {
    const Index i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (Index j : P.up_[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  if (order.size() != size) throw std::invalid_argument("poset: cover relation has a cycle");

  P.rank_.assign(size, 0);
  for (Index i : order)
    for (Index j : P.up_[i]) P.rank_[j] = std::max(P.rank_[j], P.rank_[i] + 1);

  const std::size_t words = (size + 63) / 64;
  P.reach_.assign(size, std::vector<std::uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    set_bit(P.reach_[*it], *it);
    for (Index j : P.up_[*it])
      for (std::size_t w = 0; w < words; ++w) P.reach_[*it][w] |= P.reach_[j][w];
  }

  std::vector<Index> maximal;
  for (Index i = 0; i < size; ++i)
    if (P.up_[i].empty()) maximal.push_back(i);
  if (maximal.size() == 1) P.top_ = maximal.front();

  if (names.empty())
    for (Index i = 0; i < size; ++i) names.push_back(std::to_string(i));
  if (names.size() != size) throw std::invalid_argument("poset: name count mismatch");
  P.names_ = std::move(names);
  return P;
}

bool GradedPoset::leq(Index u, Index v) const { return test_bit(reach_.at(u), v); }

bool GradedPoset::covers_pair(Index lower, Index upper) const {
  const auto& ups = up_.at(lower);
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::vector<Index> GradedPoset::closed_interval(Index u, Index v) const {
  std::vector<Index> out;
  if (!leq(u, v)) return out;
  for (Index w = 0; w < size(); ++w)
    if (leq(u, w) && leq(w, v)) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [&](Index a, Index b) { return rank_[a] < rank_[b]; });
  return out;
}

std::vector<Index> GradedPoset::open_interval(Index u, Index v) const {
  std::vector<Index> out;
  for (Index w : closed_interval(u, v))
    if (w != u && w != v) out.push_back(w);
  return out;
}

GradedCheck check_graded(const GradedPoset& P) {
  GradedCheck out;
  if (!P.top()) {
    out.reason = "no greatest element";
    return out;
  }
  for (const auto& [lo, hi] : P.covers()) {
    if (P.rank(hi) != P.rank(lo) + 1) {
      out.reason = "cover does not raise rank by one";
      out.bad_cover = std::make_pair(lo, hi);
      return out;
    }
    for (Index mid : P.up(lo))
      if (mid != hi && P.leq(mid, hi)) {
        out.reason = "listed cover is implied by a longer chain";
        out.bad_cover = std::make_pair(lo, hi);
        return out;
      }
  }
  out.graded = true;
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank

namespace {

// Bareiss on int64; returns nullopt on overflow.
std::optional<std::size_t> bareiss_rank_i64(std::vector<std::vector<std::int64_t>> M) {
  const std::size_t rows = M.size();
  if (rows == 0) return 0;
  const std::size_t cols = M[0].size();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    const std::int64_t p = M[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t f = M[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        std::int64_t a, b, diff;
        if (__builtin_mul_overflow(p, M[r][c], &a) || __builtin_mul_overflow(f, M[rank][c], &b) ||
            __builtin_sub_overflow(a, b, &diff))
          return std::nullopt;
        M[r][c] = diff / prev;
      }
      M[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank_big(std::vector<std::vector<BigInt>> M) {
  const std::size_t rows = M.size();
  if (rows == 0) return 0;
  const std::size_t cols = M[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    const BigInt p = M[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt f = M[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) M[r][c] = (p * M[r][c] - f * M[rank][c]) / prev;
      M[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank_small(const std::vector<std::vector<std::int64_t>>& M) {
  if (auto r = bareiss_rank_i64(M)) return *r;
  std::vector<std::vector<BigInt>> big(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) big[i].assign(M[i].begin(), M[i].end());
  return bareiss_rank_big(std::move(big));
}

using Chain = std::vector<Index>;

// Reduced cochain complex of the order complex of (u, v), restricted to the
// cochains invariant under the given maps (none = everything).
IntervalCohomology chain_cohomology(const GradedPoset& P, Index u, Index v,
                                    std::span<const std::vector<Index>> maps) {
  IntervalCohomology out;
  if (u == v) {
    out.ranks[-2] = 1;
    return out;
  }
  const std::vector<Index> interior = P.open_interval(u, v);
  std::vector<int> rank_of(P.size(), 0);
  for (Index i = 0; i < P.size(); ++i) rank_of[i] = P.rank(i);

  // chains_by_size[k] lists chains with k interior elements.
  std::vector<std::vector<Chain>> chains_by_size(1, std::vector<Chain>{Chain{}});
  std::vector<Chain> frontier;
  for (Index x : interior) frontier.push_back({x});
  while (!frontier.empty()) {
    chains_by_size.push_back(frontier);
    std::vector<Chain> next;
    for (const auto& c : frontier) {
      const Index last = c.back();
      for (Index x : interior)
        if (P.less(last, x)) {
          Chain ext = c;
          ext.push_back(x);
          next.push_back(std::move(ext));
        }
    }
    frontier = std::move(next);
  }

  // Orbit labels per size.
  std::vector<std::map<Chain, std::size_t>> orbit_of(chains_by_size.size());
  std::vector<std::vector<Chain>> representatives(chains_by_size.size());
  for (std::size_t k = 0; k < chains_by_size.size(); ++k) {
    for (const auto& c : chains_by_size[k]) {
      if (orbit_of[k].count(c)) continue;
      const std::size_t id = representatives[k].size();
      representatives[k].push_back(c);
      orbit_of[k][c] = id;
      for (const auto& g : maps) {
        Chain image;
        image.reserve(c.size());
        for (Index x : c) image.push_back(g[x]);
        std::sort(image.begin(), image.end(), [&](Index a, Index b) { return rank_of[a] < rank_of[b]; });
        orbit_of[k].emplace(std::move(image), id);
      }
    }
  }

  // delta_k : C^{(k)} -> C^{(k+1)} in orbit-indicator bases.
  const std::size_t sizes = chains_by_size.size();
  std::vector<std::size_t> delta_rank(sizes, 0);
  for (std::size_t k = 0; k + 1 < sizes; ++k) {
    const auto& rows = representatives[k + 1];
    std::vector<std::vector<std::int64_t>> M(rows.size(), std::vector<std::int64_t>(representatives[k].size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Chain& c = rows[r];
      for (std::size_t i = 0; i < c.size(); ++i) {
        Chain face;
        face.reserve(c.size() - 1);
        for (std::size_t j = 0; j < c.size(); ++j)
          if (j != i) face.push_back(c[j]);
        M[r][orbit_of[k].at(face)] += (i % 2 == 0) ? 1 : -1;
      }
    }
    delta_rank[k] = exact_rank_small(M);
  }
  for (std::size_t k = 0; k < sizes; ++k) {
    const std::size_t dim = representatives[k].size();
    const std::size_t in_rank = k == 0 ? 0 : delta_rank[k - 1];
    const std::size_t h = dim - delta_rank[k] - in_rank;
    if (h != 0) out.ranks[static_cast<int>(k) - 1] = h;
  }
  return out;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<BigInt>> matrix) { return bareiss_rank_big(std::move(matrix)); }

std::size_t IntervalCohomology::rank_at(int degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? 0 : it->second;
}

std::int64_t IntervalCohomology::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [deg, r] : ranks) chi += ((deg % 2 == 0) ? 1 : -1) * static_cast<std::int64_t>(r);
  return chi;
}

IntervalCohomology interval_cohomology(const GradedPoset& P, Index u, Index v) {
  if (!P.leq(u, v)) throw std::invalid_argument("interval_cohomology: u is not below v");
  return chain_cohomology(P, u, v, {});
}

std::int64_t mobius(const GradedPoset& P, Index u, Index v) {
  if (!P.leq(u, v)) throw std::invalid_argument("mobius: u is not below v");
  const auto interval = P.closed_interval(u, v);
  std::map<Index, std::int64_t> mu;
  for (Index w : interval) {
    if (w == u) {
      mu[w] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (const auto& [z, val] : mu)
      if (P.less(z, w)) s += val;
    mu[w] = -s;
  }
  return mu.at(v);
}

SemimodularityCheck is_locally_semimodular(const GradedPoset& P) {
  SemimodularityCheck out;
  for (Index x = 0; x < P.size(); ++x) {
    const auto& ups = P.up(x);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const Index a = ups[i], b = ups[j];
        std::vector<Index> common;
        for (Index t : P.up(a))
          if (P.covers_pair(b, t)) common.push_back(t);
        for (Index y = 0; y < P.size(); ++y) {
          if (!P.leq(a, y) || !P.leq(b, y)) continue;
          const bool joined = std::any_of(common.begin(), common.end(), [&](Index t) { return P.leq(t, y); });
          if (!joined) {
            out.ok = false;
            out.counterexample = std::array<Index, 4>{x, a, b, y};
            return out;
          }
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientPoset quotient_poset(const GradedPoset& P, int m) {
  if (m < 1) throw std::invalid_argument("quotient_poset: m must be at least 1");
  QuotientPoset Q;
  Q.projection.assign(P.size(), 0);
  Q.source.push_back(P.bottom());
  std::vector<std::string> names{P.name(P.bottom())};
  for (Index i = 0; i < P.size(); ++i) {
    if (i == P.bottom() || P.rank(i) < m) {
      Q.projection[i] = 0;
      continue;
    }
    Q.projection[i] = Q.source.size();
    Q.source.push_back(i);
    names.push_back(P.name(i));
  }
  const std::size_t size = Q.source.size();
  auto below = [&](Index a, Index b) { return a != b && (a == 0 || (b != 0 && P.leq(Q.source[a], Q.source[b]))); };
  std::vector<std::pair<Index, Index>> covers;
  for (Index b = 1; b < size; ++b) {
    std::vector<Index> lower;
    for (Index a = 0; a < size; ++a)
      if (below(a, b)) lower.push_back(a);
    for (Index a : lower) {
      const bool maximal = std::none_of(lower.begin(), lower.end(), [&](Index c) { return below(a, c); });
      if (maximal) covers.emplace_back(a, b);
    }
  }
  Q.poset = GradedPoset::from_covers(size, std::move(covers), std::move(names));
  Q.quotient_length.assign(size, 0);
  for (Index e = 1; e < size; ++e) {
    const int l = P.rank(Q.source[e]);
    Q.quotient_length[e] = l < m ? 0 : l - m;
  }
  return Q;
}

VanishingReport check_vanishing(const GradedPoset& P, int m) {
  const QuotientPoset Q = quotient_poset(P, m);
  VanishingReport report;
  report.m = m;
  for (Index e = 0; e < Q.poset.size(); ++e) {
    VanishingEntry entry;
    entry.element = e;
    entry.source = Q.source[e];
    entry.quotient_length = Q.quotient_length[e];
    entry.rank = Q.poset.rank(e);
    entry.cohomology = interval_cohomology(Q.poset, Q.poset.bottom(), e);
    for (const auto& [deg, r] : entry.cohomology.ranks) {
      if (r == 0) continue;
      if (deg < entry.quotient_length - 2) entry.ok = false;
      if (deg < entry.rank - 2) entry.ok_intrinsic = false;
    }
    report.pass = report.pass && entry.ok;
    report.pass_intrinsic = report.pass_intrinsic && entry.ok_intrinsic;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Permutation actions

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

std::vector<Permutation> symmetric_group_generators(int n) {
  std::vector<Permutation> gens;
  if (n < 2) return gens;
  Permutation swap(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  gens.push_back(swap);
  if (n > 2) {
    Permutation cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.push_back(cycle);
  }
  return gens;
}

std::vector<Permutation> group_closure(int degree, std::span<const Permutation> generators) {
  Permutation identity(static_cast<std::size_t>(degree));
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> seen{identity};
  std::deque<Permutation> queue{identity};
  while (!queue.empty()) {
    const Permutation g = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation h = compose(s, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

bool action_preserves_structure(const GradedPoset& P, const GroupAction& action) {
  for (const auto& map : action.element_maps) {
    if (map.size() != P.size()) return false;
    std::vector<bool> hit(P.size(), false);
    for (Index x = 0; x < P.size(); ++x) {
      if (map[x] >= P.size() || hit[map[x]]) return false;
      hit[map[x]] = true;
      if (P.rank(map[x]) != P.rank(x)) return false;
    }
    for (const auto& [lo, hi] : P.covers())
      if (!P.covers_pair(map[lo], map[hi])) return false;
  }
  return true;
}

std::vector<std::vector<Index>> element_orbits(const GroupAction& action, std::size_t size) {
  std::vector<bool> seen(size, false);
  std::vector<std::vector<Index>> orbits;
  for (Index x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::set<Index> orbit;
    for (const auto& map : action.element_maps) orbit.insert(map[x]);
    orbit.insert(x);
    for (Index y : orbit) seen[y] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

IntervalCohomology invariant_cohomology(const GradedPoset& P, Index lambda, const GroupAction& action) {
  std::vector<std::vector<Index>> stabilizer;
  for (const auto& map : action.element_maps) {
    if (map[P.bottom()] != P.bottom()) throw std::invalid_argument("invariant_cohomology: action moves the bottom");
    if (map[lambda] == lambda) stabilizer.push_back(map);
  }
  return chain_cohomology(P, P.bottom(), lambda, stabilizer);
}

}  // namespace ramify
