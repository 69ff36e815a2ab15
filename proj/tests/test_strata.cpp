#include "doctest.h"

#include <set>
#include <stdexcept>

#include "ramify/strata.hpp"

using namespace ramify;

namespace {

SetPartition sp(int n, std::vector<std::vector<int>> blocks) { return SetPartition(n, std::move(blocks)); }

}  // namespace

TEST_CASE("set partitions") {
  const SetPartition p = sp(4, {{4, 2}, {3}, {1}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1}, {2, 4}, {3}});
  CHECK(p.to_string() == "1|24|3");
  CHECK(p.block_of(4) == 1);
  CHECK(p.lattice_rank() == 1);
  CHECK(SetPartition::discrete(4).refines(p));
  CHECK(p.refines(sp(4, {{1, 2, 4}, {3}})));
  CHECK_FALSE(sp(4, {{1, 2, 4}, {3}}).refines(p));
  CHECK(p.merged(0, 2) == sp(4, {{1, 3}, {2, 4}}));
  CHECK(p.relabeled({1, 0, 2, 3}) == sp(4, {{2}, {1, 4}, {3}}));
  CHECK_THROWS_AS(sp(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(sp(3, {{1, 2}, {4}}), std::invalid_argument);
  CHECK_THROWS_AS(sp(3, {{1, 2, 3}, {}}), std::invalid_argument);
}

TEST_CASE("stratum labels and invariants") {
  CHECK_THROWS_AS(StratumLabel(sp(3, {{1, 2}, {3}}), sp(3, {{1, 3}, {2}})), std::invalid_argument);

  const auto bottom = stratum_invariants(StratumLabel::bottom(3));
  CHECK(bottom.simple == std::vector<int>{1, 2, 3});
  CHECK(bottom.coincident.empty());
  CHECK(bottom.siblings.empty());
  CHECK(bottom.length == 0);

  const StratumLabel T(sp(3, {{1, 2}, {3}}), sp(3, {{1, 2}, {3}}));
  const auto t = stratum_invariants(T);
  CHECK(t.length == 1);
  CHECK(t.simple == std::vector<int>{3});
  CHECK(stratum_type(T) == RamificationType::from_lists({{3}}));

  const StratumLabel D(SetPartition::discrete(3), sp(3, {{1, 2}, {3}}));
  CHECK(stratum_invariants(D).length == 1);
  CHECK(stratum_type(D) == RamificationType::from_lists({{2, 2}}));

  const auto top = stratum_invariants(StratumLabel::top(3));
  CHECK(top.length == 2);
  CHECK(stratum_type(StratumLabel::top(3)) == RamificationType::from_lists({{4}}));
}

TEST_CASE("model at n = 2 and n = 3") {
  const StratumPoset P2 = build_poset(2);
  CHECK(P2.labels.size() == 2);
  CHECK(P2.find(StratumLabel::top(2)).has_value());
  CHECK_FALSE(P2.find(StratumLabel(SetPartition::discrete(2), SetPartition::single_block(2))).has_value());

  const StratumPoset P3 = build_poset(3);
  REQUIRE(P3.labels.size() == 8);
  const Index top = *P3.poset.top();
  CHECK(P3.labels[top] == StratumLabel::top(3));
  CHECK(P3.poset.up(P3.poset.bottom()).size() == 6);
  for (Index atom : P3.poset.up(P3.poset.bottom())) CHECK(P3.poset.up(atom) == std::vector<Index>{top});
  const auto D = P3.find(StratumLabel(SetPartition::discrete(3), sp(3, {{1, 2}, {3}})));
  REQUIRE(D.has_value());
  CHECK(P3.poset.rank(*D) == 1);

  CHECK(check_graded(P3.poset).graded);
  CHECK(is_locally_semimodular(P3.poset).ok);
  const auto h = interval_cohomology(P3.poset, P3.poset.bottom(), top);
  CHECK(h.ranks == std::map<int, std::size_t>{{0, 5}});
  CHECK(mobius(P3.poset, P3.poset.bottom(), top) == 5);
  const auto v = check_vanishing(P3.poset, 1);
  CHECK(v.pass);
  CHECK(v.pass_intrinsic);

  const GroupAction action = symmetric_action(P3);
  CHECK(action_preserves_structure(P3.poset, action));
  CHECK(invariant_cohomology(P3.poset, top, action).ranks == std::map<int, std::size_t>{{0, 1}});
  CHECK(invariant_cohomology(P3.poset, *D, action).ranks == std::map<int, std::size_t>{{-1, 1}});

  std::set<std::pair<RamificationType, std::size_t>> atoms;
  for (const auto& o : orbit_decomposition(P3, action))
    if (o.length == 1) atoms.emplace(o.type, o.members.size());
  CHECK(atoms == std::set<std::pair<RamificationType, std::size_t>>{
                     {RamificationType::from_lists({{3}}), 3}, {RamificationType::from_lists({{2, 2}}), 3}});
}

TEST_CASE("model invariants up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const StratumPoset P = build_poset(n);
    CHECK_FALSE(P.truncated);
    CHECK(check_graded(P.poset).graded);
    CHECK(P.poset.top().has_value());
    for (Index i = 0; i < P.labels.size(); ++i) {
      const auto& l = P.labels[i];
      CHECK(P.poset.rank(i) == l.length());
      CHECK_NOTHROW(stratum_invariants(l));
      CHECK(l.rho2().lattice_rank() == l.length());
      const auto t = stratum_type(l);
      CHECK(t.length() == l.length());
      CHECK(is_affine_admissible(t, n));
      CHECK(is_combinatorially_admissible(t, n));
    }
    for (const auto& [lo, hi] : P.poset.covers()) CHECK(P.poset.rank(hi) == P.poset.rank(lo) + 1);
    CHECK(action_preserves_structure(P.poset, symmetric_action(P)));
    if (n >= 3) CHECK(check_vanishing(P.poset, 1).pass);
  }
}

TEST_CASE("truncation") {
  const StratumPoset P = build_poset(4, 1);
  CHECK(P.truncated);
  CHECK(P.labels.size() == 13);
  CHECK_FALSE(build_poset(3, 2).truncated);
}

TEST_CASE("stabilization") {
  const auto one = stabilization_check(1, 3, 6);
  for (const auto& row : one.rows) {
    CHECK(row.model_orbits == 2);
    CHECK(row.orbit_types_match);
  }
  CHECK(one.model_stable_from == 3);

  const auto two = stabilization_check(2, 3, 6);
  REQUIRE(two.rows.size() == 4);
  CHECK(two.rows[1].combinatorial_types != two.rows[2].combinatorial_types);
  CHECK(two.rows[2].combinatorial_types == two.rows[3].combinatorial_types);
  CHECK(two.combinatorial_stable_from == 5);
  for (const auto& row : two.rows) CHECK(row.orbit_types_match);
  CHECK_THROWS_AS(stabilization_check(0, 3, 4), std::invalid_argument);
}
