#pragma once
// Exhaustive enumeration of left CI structures (table, jr) at small
// orders, by two independent strategies:
//
//   oracle    — iterates every table and every map extensionally, with
//               no structural assumption at all; hard-capped at order 3.
//   propagate — backtracking over (row, jr) assignments with forward
//               checking from the identity: setting cell (x,y) = c with
//               jr(x) = v forces cell (c,v) = y. Rows are built as
//               permutations (sound pruning, switchable for testing);
//               column bijectivity is never assumed and is re-verified
//               downstream by verify_theorem.
//
// Both kernels split their top-level branch set across OpenMP workers
// and return structures sorted by (flattened table, jr), so output is
// identical for every worker count. Serial reference implementations
// for validating the kernels live in ciq/reference.hpp.

#include <chrono>
#include <cstdint>

#include "ciq/algebra.hpp"

namespace ciq {

struct NodeLimitExceeded : Error {
  using Error::Error;
};

inline constexpr int kOracleMaxOrder = 3;  // hard cap, 3^9 * 3^3 checks
inline constexpr int kDefaultPropagateCap = 6;
inline constexpr int kPropagateHardMax = 8;  // fixed-size search state
inline constexpr int kCanonicalMaxOrder = 7;
inline constexpr int kRandomMaxOrder = 9;

enum class SearchMode { kOracle, kPropagate };

const char* to_string(SearchMode m);

// A left CI structure: a table together with a map jr satisfying
// (x*y)*jr(x) = y for all x, y.
struct CiStructure {
  CayleyTable table;
  TotalMap jr;
  auto operator<=>(const CiStructure&) const = default;
};

struct SearchConfig {
  int order = 1;
  SearchMode mode = SearchMode::kPropagate;
  bool up_to_isomorphism = false;
  int worker_count = 0;  // 0 = all available threads
  std::optional<std::int64_t> node_limit;
  int propagate_cap = kDefaultPropagateCap;
  // Row-bijectivity pruning in propagate mode. Sound for enumeration
  // completeness (every solution has permutation rows); the flag exists
  // so tests can disable it and compare against the oracle.
  bool prune_rows = true;
};

struct TheoremFailure {
  CiStructure structure;
  std::string reason;
};

// Per-order enumeration summary. The theorem is verified iff all four
// booleans are true and failures is empty.
struct TheoremReport {
  int order = 0;
  SearchMode mode = SearchMode::kPropagate;
  std::int64_t pair_count = 0;
  std::int64_t table_count = 0;
  std::optional<std::int64_t> class_count;
  bool all_are_quasigroups = true;
  bool all_jr_bijective = true;
  bool all_right_ci_with_jr_inverse = true;
  bool all_j_unique = true;
  std::vector<TheoremFailure> failures;
  std::chrono::milliseconds elapsed{0};

  bool verified() const {
    return all_are_quasigroups && all_jr_bijective &&
           all_right_ci_with_jr_inverse && all_j_unique && failures.empty();
  }
};

// One isomorphism class: its canonical representative and how many
// enumerated structures fall into it.
struct IsoClass {
  CiStructure representative;
  std::int64_t size = 0;
};

std::vector<CiStructure> enumerate_oracle(const SearchConfig& cfg);
std::vector<CiStructure> enumerate_propagate(const SearchConfig& cfg);

// Dispatches on cfg.mode.
std::vector<CiStructure> enumerate_structures(const SearchConfig& cfg);

// Applies the relabeling sigma: new table has sigma(x)*sigma(y) =
// sigma(x*y), new jr = sigma o jr o sigma^-1.
CiStructure relabel(const CiStructure& s, const std::vector<element_t>& sigma);

// Lexicographically minimal relabeling of s, comparing the flattened
// table first and jr as tie-breaker. Idempotent; isomorphic inputs
// yield identical outputs. Throws OrderTooLarge beyond kCanonicalMaxOrder.
CiStructure canonical_form(const CiStructure& s);

// Groups structures by canonical form; classes sorted by representative.
std::vector<IsoClass> group_into_classes(const std::vector<CiStructure>& all);

// Enumerate, then deduplicate by canonical form. Sum of class sizes
// equals the number of enumerated structures.
std::vector<IsoClass> enumerate_classes(const SearchConfig& cfg);

// Runs the enumerator and checks, for every structure found: the table
// is a quasigroup, jr is bijective, the right identity holds with
// jr^-1, and jr is the unique derivable map. Failures are collected,
// never dropped.
TheoremReport verify_theorem(const SearchConfig& cfg);

// Uniform-enough random Latin square via randomized fill with restart
// on dead end. Deterministic for a fixed (n, seed) on every platform.
CayleyTable random_quasigroup(int n, std::uint64_t seed);

}  // namespace ciq
