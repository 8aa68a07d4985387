#pragma once
// Crossed-inverse identity machinery: the left identity (x*y)*jr(x) = y,
// the right identity jl(x)*(y*x) = y, derivation of jr/jl from a bare
// table, the solution formula for a*x = b, and the classification
// certificate produced by classify().

#include "ciq/algebra.hpp"

namespace ciq {

// Raised when some x admits two distinct candidates for jr(x) (or jl(x))
// during derivation. On quasigroups the map is unique, so this firing
// means a bug; it is surfaced as an error, never silently resolved.
struct AmbiguousJ : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct NotALoop : Error {
  using Error::Error;
};

enum class Classification { kNotLeftCi, kCiQuasigroup, kCiLoop };

const char* to_string(Classification c);

// Certificate for one table. jr/jl are the derived maps when they exist.
// The two loop flags are only meaningful (non-null) when the table is
// left CI and has an identity element.
struct CiReport {
  int order = 0;
  bool is_left_quasigroup = false;
  bool is_right_quasigroup = false;
  bool is_quasigroup = false;
  std::optional<TotalMap> jr;
  std::optional<TotalMap> jl;
  bool jr_is_bijective = false;
  bool jl_equals_jr_inverse = false;
  std::optional<element_t> loop_identity;
  std::optional<bool> x_times_jx_is_identity;
  std::optional<bool> j_is_automorphism;
  Classification classification = Classification::kNotLeftCi;
};

// True iff (x*y)*j(x) = y for all x, y. Throws OrderMismatch.
bool check_left_ci(const CayleyTable& t, const TotalMap& j);

// True iff j(x)*(y*x) = y for all x, y. Throws OrderMismatch.
bool check_right_ci(const CayleyTable& t, const TotalMap& j);

// True iff R_{j(x)} o L_x is the identity permutation; equivalent to
// the left identity holding at x for every y.
bool translation_form_holds(const CayleyTable& t, const TotalMap& j,
                            element_t x);

// For each x, scans all z and accepts z iff (x*y)*z = y for all y.
// Returns the map when every x has exactly one candidate, nullopt when
// some x has none, and throws AmbiguousJ when some x has several.
std::optional<TotalMap> derive_right_j(const CayleyTable& t);

// Mirror: the unique w with w*(y*x) = y for all y.
std::optional<TotalMap> derive_left_j(const CayleyTable& t);

// The unique solution x = b*j(a) of a*x = b, valid when the left
// identity holds for (t, j). The precondition is O(n^2), so it is only
// verified when check_precondition is set; enumeration hot paths leave
// it off.
element_t solve_left(const CayleyTable& t, const TotalMap& j, element_t a,
                     element_t b, bool check_precondition = false);

struct CiLoopFlags {
  bool x_times_jx_is_identity = false;
  bool j_is_automorphism = false;
};

// Requires an identity element (else NotALoop) and the left identity
// holding for (t, j) (else PreconditionViolated). First flag: x*j(x)
// equals the identity for all x. Second: j is an automorphism of t.
CiLoopFlags ci_loop_report(const CayleyTable& t, const TotalMap& j);

// Full certificate. Structural flags are filled even when the table is
// not left CI.
CiReport classify(const CayleyTable& t);

}  // namespace ciq
