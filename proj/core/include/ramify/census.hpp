#pragma once

// Point counting of Simp_n^m over finite fields by exhaustive enumeration of
// f = x^{n+1} + a_n x^n + ... + a_1 x.
//
// The ramification length of f is read off its branch polynomial
// B_f(y) = prod_{f'(a)=0} (y - f(a)) (roots of f' with multiplicity):
// length(f) = n - #distinct roots of B_f = deg gcd(B_f, B_f'). All of this
// is valid only in characteristic p > n + 1, which every entry point checks.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramify/bigint.hpp"
#include "ramify/field.hpp"
#include "ramify/poly.hpp"
#include "ramify/types.hpp"

namespace ramify {

/// Input outside the mathematical preconditions (char too small, bad n/m).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The enumeration would exceed the configured evaluation budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monic degree-n polynomial in y whose roots are the critical values of f,
/// repeated by critical multiplicity. Computed by interpolating
/// t -> Res_x(f(x) - t, f'(x)) at t = 0..n.
DensePoly branch_poly(const Field& F, const DensePoly& f);

/// n - deg(squarefree part of B_f).
int ram_length(const Field& F, const DensePoly& f);

/// Builds x^{n+1} + sum a_i x^i from (a_1, ..., a_n).
DensePoly census_poly(std::span<const Elem> a);

struct CriticalLayer {
  int differential_length = 0;  // k: roots of f' of multiplicity k
  DensePoly critical_points;    // u_k, monic squarefree
  DensePoly branch_values;      // B_k(y) = prod_{u_k(a)=0} (y - f(a)), monic
};

struct ValueClass {
  DensePoly values;                // monic squarefree, pairwise coprime across classes
  std::vector<int> points_by_length;  // [k] = number of critical points of differential length k over each value
};

struct TypeOfResult {
  RamificationType type;  // full type, simple {2} profiles included
  std::vector<CriticalLayer> layers;
  std::vector<ValueClass> classes;
};

/// Full geometric ramification type of f, computed without leaving F_q.
TypeOfResult type_of(const Field& F, const DensePoly& f);

/// Allocation-free ram_length for the census loop. One instance per thread.
class RamLengthKernel {
 public:
  static constexpr int kMaxN = 15;

  RamLengthKernel(const Field& F, int n);

  /// a = (a_1, ..., a_n).
  int operator()(std::span<const Elem> a);

 private:
  using Buf = std::array<Elem, kMaxN + 3>;

  Field F_;
  int n_;
  std::array<Elem, kMaxN + 2> inv_level_{};
  std::array<Elem, kMaxN + 2> int_elem_{};
};

struct CensusOptions {
  unsigned jobs = 1;
  /// Maximum number of polynomials (q^n) to enumerate.
  BigInt budget = BigInt(10'000'000'000ULL);
  /// Number of leading coefficients fixed per shard; 0 picks a default.
  unsigned prefix_length = 0;
};

struct CensusRecord {
  int n = 0;
  int m = 0;
  std::uint32_t p = 0;
  unsigned d = 1;
  std::uint32_t q = 0;
  BigInt count;                  // #{f : length(f) < m}
  std::vector<BigInt> histogram;  // [l] = #{f : length(f) = l}, l = 0..n
  bool want_histogram = false;
  double wall_time_seconds = 0.0;
  std::uint64_t shard_count = 0;
};

/// Throws PreconditionError unless n >= 1, m >= 1 and p > n + 1.
void check_census_preconditions(int n, int m, const Field& F);

CensusRecord census(int n, int m, const Field& F, bool want_histogram, const CensusOptions& options = {});

/// q^n - c q^{n-m}; requires m <= n.
BigInt predicted_count(int n, int m, std::uint32_t q, const BigInt& c);

enum class Verdict { MatchesEq12, MatchesMultiset, MatchesBoth, MatchesNeither };
const char* verdict_name(Verdict v);

struct VerifyResult {
  CensusRecord record;
  BigInt predicted_eq12;
  BigInt predicted_multiset;
  Verdict verdict = Verdict::MatchesNeither;
  std::vector<std::string> flags;  // e.g. "n<3m"
};

/// Range flags for the closed-form count: "n<3m", "n>=p-1".
std::vector<std::string> range_flags(int n, int m, std::uint32_t p);

VerifyResult verify_count(int n, int m, const Field& F, const CensusOptions& options = {});

struct InferredConstant {
  std::uint32_t p = 0;
  unsigned d = 1;
  std::uint32_t q = 0;
  BigInt count;
  BigRational c;  // (q^n - count) / q^{n-m}
  bool integral = false;
};

struct InferCResult {
  int n = 0;
  int m = 0;
  std::vector<InferredConstant> per_field;
  bool consistent = false;       // all integral and equal
  std::optional<BigInt> c;       // set when consistent
  std::vector<std::string> flags;
};

InferCResult infer_c(int n, int m, std::span<const Field> fields, const CensusOptions& options = {});

}  // namespace ramify
