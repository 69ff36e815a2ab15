#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ramify/census.hpp"
#include "ramify/report.hpp"
#include "ramify/types.hpp"

namespace ramify::cli {
namespace {

struct Options {
  int n = 0;
  int m = 1;
  std::vector<std::uint32_t> p;
  unsigned d = 1;
  std::uint32_t q = 0;
  std::string convention = "both";
  bool histogram = false;
  bool csv = false;
  unsigned jobs = 1;
  std::string budget = "10000000000";
  std::string out;
  std::string checks = "all";
  std::string type;
};

BigInt parse_budget(const std::string& text) {
  // Plain integers or mantissa-exponent form such as 1e10.
  const auto e = text.find_first_of("eE");
  auto digits = [](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("--budget must be a nonnegative integer such as 10000000000 or 1e10");
    return BigInt(s);
  };
  if (e == std::string::npos) return digits(text);
  const BigInt mantissa = digits(text.substr(0, e));
  const BigInt exponent = digits(text.substr(e + 1));
  if (exponent > 1000) throw std::invalid_argument("--budget exponent too large");
  return mantissa * big_pow(BigInt(10), exponent.convert_to<unsigned>());
}

// Resolves --p/--d/--q into a single field.
Field field_from(const Options& o) {
  if (o.p.size() > 1) throw std::invalid_argument("this verb takes a single --p");
  std::uint32_t p = o.p.empty() ? 0 : o.p.front();
  unsigned d = o.d;
  if (o.q != 0) {
    std::uint32_t base = 0;
    for (std::uint32_t c = 2; c <= o.q; ++c)
      if (o.q % c == 0) {
        base = c;
        break;
      }
    unsigned k = 0;
    for (std::uint64_t v = 1; v < o.q; v *= base) ++k;
    if (base == 0 || !is_prime(base) || big_pow(BigInt(base), k) != o.q)
      throw std::invalid_argument("--q must be a prime power");
    if (p != 0 && (p != base || d != k)) throw std::invalid_argument("--q disagrees with --p/--d");
    p = base;
    d = k;
  }
  if (p == 0) throw std::invalid_argument("one of --p or --q is required");
  return Field::make(p, d);
}

CensusOptions census_options(const Options& o) {
  CensusOptions c;
  c.jobs = o.jobs;
  c.budget = parse_budget(o.budget);
  return c;
}

void persist(const Options& o, const json& record) {
  if (o.out.empty()) return;
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot open " + o.out + " for writing");
  file << record.dump(2) << '\n';
}

void emit(std::ostream& out, const json& value) { out << value.dump() << '\n'; }

void report_timing(std::ostream& err, const CensusRecord& r) {
  err << "census n=" << r.n << " q=" << r.q << ": " << r.shard_count << " shards, " << r.wall_time_seconds << " s\n";
}

std::vector<Convention> conventions(const std::string& name) {
  if (name == "eq12") return {Convention::Eq12};
  if (name == "multiset") return {Convention::Multiset};
  if (name == "both") return {Convention::Eq12, Convention::Multiset};
  throw std::invalid_argument("--convention must be eq12, multiset or both");
}

int do_pcount(const Options& o, std::ostream& out) {
  if (o.n < 0) throw std::invalid_argument("--n must be nonnegative");
  emit(out, {{"n", o.n}, {"partitions", small_integer(partition_count(o.n))}});
  return kOk;
}

int do_cofm(const Options& o, std::ostream& out) {
  json rec{{"m", o.m}};
  for (Convention c : conventions(o.convention)) rec[convention_name(c)] = small_integer(c_of_m(o.m, c));
  emit(out, rec);
  return kOk;
}

int do_types(const Options& o, std::ostream& out) {
  if (o.m < 0) throw std::invalid_argument("--m must be nonnegative");
  const auto types = enumerate_types(o.m);
  json list = json::array();
  for (const auto& t : types) {
    if (o.n > 0) {
      const auto a = check_admissibility(t, o.n);
      list.push_back({{"type", type_to_json(t)}, {"combinatorial", a.combinatorial}, {"affine", a.affine}});
    } else {
      list.push_back(type_to_json(t));
    }
  }
  json rec{{"m", o.m}, {"count", types.size()}, {"types", list}};
  if (o.n > 0) rec["n"] = o.n;
  emit(out, rec);
  return kOk;
}

int do_admissible(const Options& o, std::ostream& out) {
  if (!o.type.empty()) {
    if (o.n < 1) throw std::invalid_argument("--type needs --n");
    const auto a = check_admissibility(parse_type(o.type), o.n);
    emit(out, {{"type", type_to_json(a.type)},
               {"n", a.n},
               {"length", a.type.length()},
               {"combinatorial", a.combinatorial},
               {"affine", a.affine},
               {"reasons", a.reasons}});
    return kOk;
  }
  if (o.m < 1) throw std::invalid_argument("--m must be at least 1");
  emit(out, {{"m", o.m},
             {"combinatorial", minimal_admissible_n(o.m, AdmissibilityKind::Combinatorial)},
             {"affine", minimal_admissible_n(o.m, AdmissibilityKind::Affine)}});
  return kOk;
}

int do_poset(const Options& o, std::ostream& out) {
  const PosetReport r = poset_report(o.n, o.m, parse_check_names(o.checks));
  persist(o, r.record);
  emit(out, r.record);
  return r.pass ? kOk : kMismatch;
}

int do_census(const Options& o, std::ostream& out, std::ostream& err) {
  const Field F = field_from(o);
  CensusRecord r = census(o.n, o.m, F, o.histogram || o.csv, census_options(o));
  report_timing(err, r);
  persist(o, census_json(r));
  if (o.csv)
    out << histogram_csv(r);
  else
    emit(out, census_json(r));
  return kOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Field F = field_from(o);
  VerifyResult v = verify_count(o.n, o.m, F, census_options(o));
  report_timing(err, v.record);
  persist(o, verify_json(v));
  if (o.csv) {
    out << histogram_csv(v.record);
  } else {
    v.record.want_histogram = o.histogram;
    emit(out, verify_json(v));
  }
  return v.verdict == Verdict::MatchesNeither ? kMismatch : kOk;
}

int do_adjudicate(const Options& o, std::ostream& out) {
  if (o.p.empty()) throw std::invalid_argument("adjudicate needs one or more --p");
  const Adjudication a = adjudicate(o.m, o.n, o.p, census_options(o));
  const json rec = adjudication_json(a);
  persist(o, rec);
  emit(out, rec);
  return a.supported == "none" ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification types, stratification posets and finite-field censuses", "ramify"};
  app.require_subcommand(1);
  Options o;

  auto* pcount = app.add_subcommand("pcount", "number of partitions p(n)");
  pcount->add_option("--n", o.n, "integer to partition")->required();

  auto* cofm = app.add_subcommand("cofm", "the constant c(m) under either reading");
  cofm->add_option("--m", o.m, "length")->required();
  cofm->add_option("--convention", o.convention, "eq12, multiset or both");

  auto* types = app.add_subcommand("types", "ramification types of length m");
  types->add_option("--m", o.m, "length")->required();
  types->add_option("--n", o.n, "annotate admissibility at this n");

  auto* admissible = app.add_subcommand("admissible", "minimal admissible n, or a single type check");
  admissible->add_option("--m", o.m, "length");
  admissible->add_option("--n", o.n, "degree parameter for --type");
  admissible->add_option("--type", o.type, "type as JSON, e.g. [[2,2],[3]]");

  auto* poset = app.add_subcommand("poset", "build the stratum poset and run checks");
  poset->add_option("--n", o.n, "number of critical points")->required();
  poset->add_option("--m", o.m, "quotient level");
  poset->add_option("--checks", o.checks, "comma list of graded,semimodular,vanishing,euler-mobius,orbits,invariants or all");
  poset->add_option("--out", o.out, "also write the record to this file");

  auto add_field_options = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "degree minus one")->required();
    sub->add_option("--m", o.m, "length bound");
    sub->add_option("--d", o.d, "extension degree");
    sub->add_option("--q", o.q, "field size (prime power)");
    sub->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
    sub->add_option("--budget", o.budget, "maximum q^n");
    sub->add_option("--out", o.out, "also write the record to this file");
  };
  auto* census_cmd = app.add_subcommand("census", "count polynomials by ramification length");
  add_field_options(census_cmd);
  census_cmd->add_option("--p", o.p, "characteristic")->expected(1);
  census_cmd->add_flag("--histogram", o.histogram, "include the length histogram");
  census_cmd->add_flag("--csv", o.csv, "emit the histogram as CSV");

  auto* verify = app.add_subcommand("verify", "compare a census with the closed form");
  add_field_options(verify);
  verify->add_option("--p", o.p, "characteristic")->expected(1);
  verify->add_option("--convention", o.convention, "ignored; both readings are always compared");
  verify->add_flag("--histogram", o.histogram, "include the length histogram");
  verify->add_flag("--csv", o.csv, "emit the histogram as CSV");

  auto* adjudicate_cmd = app.add_subcommand("adjudicate", "infer c(m) across primes and pick a reading");
  adjudicate_cmd->add_option("--m", o.m, "length")->required();
  adjudicate_cmd->add_option("--n", o.n, "degree minus one")->required();
  adjudicate_cmd->add_option("--p", o.p, "primes (repeat or comma separate)")->required()->delimiter(',');
  adjudicate_cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  adjudicate_cmd->add_option("--budget", o.budget, "maximum q^n per prime");
  adjudicate_cmd->add_option("--out", o.out, "also write the record to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  try {
    if (*pcount) return do_pcount(o, out);
    if (*cofm) return do_cofm(o, out);
    if (*types) return do_types(o, out);
    if (*admissible) return do_admissible(o, out);
    if (*poset) return do_poset(o, out);
    if (*census_cmd) return do_census(o, out, err);
    if (*verify) return do_verify(o, out, err);
    if (*adjudicate_cmd) return do_adjudicate(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ramify::cli
