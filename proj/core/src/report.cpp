#include "ramify/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ramify {

json type_to_json(const RamificationType& type) { return json(type.to_lists()); }

RamificationType type_from_json(const json& value) {
  if (!value.is_array()) throw std::invalid_argument("type must be a list of index lists");
  std::vector<std::vector<int>> lists;
  for (const auto& profile : value) {
    if (!profile.is_array() || profile.empty()) throw std::invalid_argument("each profile must be a nonempty list");
    std::vector<int> indices;
    for (const auto& e : profile) {
      if (!e.is_number_integer()) throw std::invalid_argument("ramification indices must be integers");
      const auto v = e.get<std::int64_t>();
      if (v < 2 || v > std::numeric_limits<int>::max()) throw std::invalid_argument("ramification indices must be >= 2");
      indices.push_back(static_cast<int>(v));
    }
    lists.push_back(std::move(indices));
  }
  return RamificationType::from_lists(lists);
}

RamificationType parse_type(std::string_view text) {
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) throw std::invalid_argument("type is not valid JSON: " + std::string(text));
  return type_from_json(value);
}

json small_integer(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return to_decimal(value);
}

json census_json(const CensusRecord& record) {
  json out{{"n", record.n}, {"m", record.m}, {"p", record.p}, {"d", record.d}, {"q", record.q},
           {"count", to_decimal(record.count)}};
  if (record.want_histogram) {
    json hist = json::object();
    for (std::size_t l = 0; l < record.histogram.size(); ++l) hist[std::to_string(l)] = to_decimal(record.histogram[l]);
    out["histogram"] = std::move(hist);
  }
  return out;
}

json verify_json(const VerifyResult& result) {
  json out = census_json(result.record);
  out["predicted"] = {{"eq12", to_decimal(result.predicted_eq12)}, {"multiset", to_decimal(result.predicted_multiset)}};
  out["verdict"] = verdict_name(result.verdict);
  out["flags"] = result.flags;
  return out;
}

std::string histogram_csv(const CensusRecord& record) {
  std::ostringstream os;
  os << "length,count\n";
  for (std::size_t l = 0; l < record.histogram.size(); ++l) os << l << ',' << to_decimal(record.histogram[l]) << '\n';
  return os.str();
}

namespace {

std::string rational_string(const BigRational& r) {
  if (denominator(r) == 1) return to_decimal(numerator(r));
  return to_decimal(numerator(r)) + "/" + to_decimal(denominator(r));
}

}  // namespace

json infer_json(const InferCResult& result) {
  json fields = json::array();
  for (const auto& f : result.per_field)
    fields.push_back({{"p", f.p}, {"d", f.d}, {"q", f.q}, {"count", to_decimal(f.count)},
                      {"c", rational_string(f.c)}, {"integral", f.integral}});
  json out{{"n", result.n}, {"m", result.m}, {"fields", fields}, {"consistent", result.consistent},
           {"flags", result.flags}};
  out["c"] = result.c ? json(to_decimal(*result.c)) : json(nullptr);
  return out;
}

Adjudication adjudicate(int m, int n, std::span<const std::uint32_t> primes, const CensusOptions& options) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  if (n < 3 * m) throw PreconditionError("adjudication needs n >= 3m");
  if (primes.empty()) throw PreconditionError("adjudication needs at least one prime");
  std::vector<Field> fields;
  for (std::uint32_t p : primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (p <= static_cast<std::uint32_t>(n + 1)) throw PreconditionError("every prime must exceed n + 1");
    fields.push_back(Field::make(p, 1));
  }
  Adjudication out;
  out.inferred = infer_c(n, m, fields, options);
  out.c_eq12 = c_of_m(m, Convention::Eq12);
  out.c_multiset = c_of_m(m, Convention::Multiset);
  out.supported = "none";
  if (out.inferred.c) {
    const bool eq12 = *out.inferred.c == out.c_eq12;
    const bool multiset = *out.inferred.c == out.c_multiset;
    out.supported = eq12 && multiset ? "both" : eq12 ? "eq12" : multiset ? "multiset" : "none";
  }
  return out;
}

json adjudication_json(const Adjudication& result) {
  json out = infer_json(result.inferred);
  out["candidates"] = {{"eq12", to_decimal(result.c_eq12)}, {"multiset", to_decimal(result.c_multiset)}};
  out["supported"] = result.supported;
  return out;
}

// ---------------------------------------------------------------------------

std::set<std::string> parse_check_names(std::string_view text) {
  std::set<std::string> out;
  const auto& known = poset_check_names();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string name(text.substr(start, end - start));
    if (name == "all") {
      out.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), name) != known.end()) {
      out.insert(name);
    } else {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
    start = end + 1;
  }
  return out;
}

namespace {

json partition_json(const SetPartition& p) { return json(p.blocks()); }

json cohomology_json(const IntervalCohomology& h) {
  json out = json::object();
  for (const auto& [degree, rank] : h.ranks) out[std::to_string(degree)] = rank;
  return out;
}

// The action on the quotient: x -> pr(g . source(x)).
GroupAction quotient_action(const QuotientPoset& Q, const GroupAction& action) {
  GroupAction out;
  out.degree = action.degree;
  out.generators = action.generators;
  out.elements = action.elements;
  for (const auto& map : action.element_maps) {
    std::vector<Index> qmap(Q.source.size());
    for (Index x = 0; x < Q.source.size(); ++x) qmap[x] = Q.projection[map[Q.source[x]]];
    out.element_maps.push_back(std::move(qmap));
  }
  return out;
}

}  // namespace

json poset_dump(const StratumPoset& P) {
  json elements = json::array();
  for (const auto& l : P.labels)
    elements.push_back({{"rho1", partition_json(l.rho1())}, {"rho2", partition_json(l.rho2())}, {"l", l.length()}});
  json out{{"n", P.n}, {"size", P.labels.size()}, {"elements", elements}, {"covers", P.poset.covers()},
           {"blocked_sibling_collisions", P.blocked_sibling_collisions}, {"truncated", P.truncated}};
  return out;
}

PosetReport poset_report(int n, int m, const std::set<std::string>& checks) {
  if (n < 1 || n > 6) throw PreconditionError("poset reports are limited to 1 <= n <= 6");
  if (m < 1) throw PreconditionError("m must be at least 1");
  for (const auto& c : checks)
    if (std::find(poset_check_names().begin(), poset_check_names().end(), c) == poset_check_names().end())
      throw std::invalid_argument("unknown check '" + c + "'");

  const StratumPoset P = build_poset(n);
  const QuotientPoset Q = quotient_poset(P.poset, m);
  const GradedPoset& G = Q.poset;
  auto name = [&](Index x) { return P.labels[Q.source[x]].to_string(); };

  PosetReport report;
  json& rec = report.record;
  rec = poset_dump(P);
  rec["m"] = m;
  if (m > 1) {
    json elems = json::array();
    for (Index x = 0; x < G.size(); ++x) elems.push_back({{"source", Q.source[x]}, {"l_m", Q.quotient_length[x]}});
    rec["quotient"] = {{"size", G.size()}, {"elements", elems}, {"covers", G.covers()}};
  }
  json out_checks = json::object();

  if (checks.count("graded")) {
    const GradedCheck g = check_graded(G);
    json c{{"pass", g.graded}};
    if (!g.reason.empty()) c["reason"] = g.reason;
    if (g.bad_cover) c["counterexample"] = {name(g.bad_cover->first), name(g.bad_cover->second)};
    report.pass = report.pass && g.graded;
    out_checks["graded"] = std::move(c);
  }

  if (checks.count("semimodular")) {
    const SemimodularityCheck s = is_locally_semimodular(G);
    json c{{"pass", s.ok}};
    if (s.counterexample) {
      const auto& [x, a, b, y] = *s.counterexample;
      c["counterexample"] = {{"x", name(x)}, {"alpha", name(a)}, {"beta", name(b)}, {"y", name(y)}};
      c["model_falsified"] = true;
    }
    report.pass = report.pass && s.ok;
    out_checks["semimodular"] = std::move(c);
  }

  if (checks.count("vanishing")) {
    const VanishingReport v = check_vanishing(P.poset, m);
    json entries = json::array();
    for (const auto& e : v.entries)
      entries.push_back({{"element", name(e.element)}, {"l_m", e.quotient_length}, {"rank", e.rank},
                         {"cohomology", cohomology_json(e.cohomology)}, {"ok", e.ok}, {"ok_intrinsic", e.ok_intrinsic}});
    report.pass = report.pass && v.pass;
    out_checks["vanishing"] = {{"pass", v.pass}, {"pass_intrinsic", v.pass_intrinsic}, {"entries", entries}};
  }

  if (checks.count("euler-mobius")) {
    std::size_t intervals = 0;
    json mismatches = json::array();
    for (Index u = 0; u < G.size(); ++u)
      for (Index v = 0; v < G.size(); ++v) {
        if (!G.leq(u, v)) continue;
        ++intervals;
        const auto chi = interval_cohomology(G, u, v).euler_characteristic();
        const auto mu = mobius(G, u, v);
        if (chi != mu) mismatches.push_back({{"u", name(u)}, {"v", name(v)}, {"euler", chi}, {"mobius", mu}});
      }
    const bool ok = mismatches.empty();
    report.pass = report.pass && ok;
    out_checks["euler-mobius"] = {{"pass", ok}, {"intervals", intervals}, {"mismatches", mismatches}};
  }

  const bool want_orbits = checks.count("orbits") > 0;
  const bool want_invariants = checks.count("invariants") > 0;
  if (want_orbits || want_invariants) {
    const GroupAction action = symmetric_action(P);
    const auto orbits = orbit_decomposition(P, action);
    if (want_orbits) {
      json list = json::array();
      std::map<int, std::size_t> per_length;
      for (const auto& o : orbits) {
        ++per_length[o.length];
        list.push_back({{"representative", P.labels[o.representative].to_string()}, {"l", o.length},
                        {"size", o.members.size()}, {"type", type_to_json(o.type)}});
      }
      json counts = json::object();
      for (const auto& [l, c] : per_length) counts[std::to_string(l)] = c;
      out_checks["orbits"] = {{"orbits", list}, {"count_by_length", counts}};
    }
    if (want_invariants) {
      const GroupAction qaction = quotient_action(Q, action);
      json entries = json::array();
      bool all_zero = true;
      std::set<Index> done;
      for (const auto& o : orbits) {
        const Index x = Q.projection[o.representative];
        if (G.rank(x) < 2 || !done.insert(x).second) continue;
        const IntervalCohomology inv = invariant_cohomology(G, x, qaction);
        const bool zero = inv.ranks.empty();
        all_zero = all_zero && zero;
        entries.push_back({{"element", name(x)}, {"rank", G.rank(x)}, {"l_m", Q.quotient_length[x]},
                           {"cohomology", cohomology_json(interval_cohomology(G, G.bottom(), x))},
                           {"invariants", cohomology_json(inv)}});
      }
      out_checks["invariants"] = {{"all_zero", all_zero}, {"entries", entries}};
    }
  }

  rec["checks"] = std::move(out_checks);
  rec["pass"] = report.pass;
  return report;
}

}  // namespace ramify
