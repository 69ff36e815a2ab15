#pragma once

// Machine-readable records for types, census runs, adjudication across
// fields, and poset check reports. Counts are serialized as decimal strings.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ramify/census.hpp"
#include "ramify/strata.hpp"
#include "ramify/types.hpp"

namespace ramify {

using nlohmann::json;

json type_to_json(const RamificationType& type);
/// Accepts a list of integer lists, e.g. [[2,2],[3]]; throws std::invalid_argument otherwise.
RamificationType type_from_json(const json& value);
RamificationType parse_type(std::string_view text);

/// Integer if it fits in 64 bits, decimal string otherwise.
json small_integer(const BigInt& value);

/// {"n","m","p","d","q","count"} plus "histogram" when the record carries one.
json census_json(const CensusRecord& record);
/// census_json plus "predicted", "verdict" and "flags".
json verify_json(const VerifyResult& result);
/// Header "length,count", one row per length.
std::string histogram_csv(const CensusRecord& record);

json infer_json(const InferCResult& result);

struct Adjudication {
  InferCResult inferred;
  BigInt c_eq12;
  BigInt c_multiset;
  /// "eq12", "multiset", "both" or "none".
  std::string supported;
};

/// Runs infer_c over F_p for each prime and compares the common constant
/// (if any) with both readings of c(m). Throws PreconditionError unless
/// n >= 3m and every prime exceeds n + 1.
Adjudication adjudicate(int m, int n, std::span<const std::uint32_t> primes, const CensusOptions& options = {});
json adjudication_json(const Adjudication& result);

// ---------------------------------------------------------------------------
// Poset reports

inline const std::vector<std::string>& poset_check_names() {
  static const std::vector<std::string> names{"graded", "semimodular", "vanishing", "euler-mobius", "orbits",
                                              "invariants"};
  return names;
}

/// Splits a comma list, expanding "all"; throws std::invalid_argument on unknown names.
std::set<std::string> parse_check_names(std::string_view text);

struct PosetReport {
  json record;
  /// Every requested structural check passed (orbits and invariants are informational).
  bool pass = true;
};

/// Builds the model at n (n <= 6) and runs the requested checks on its
/// m-quotient. Throws PreconditionError for n outside [1, 6] or m < 1.
PosetReport poset_report(int n, int m, const std::set<std::string>& checks);

json poset_dump(const StratumPoset& P);

}  // namespace ramify
