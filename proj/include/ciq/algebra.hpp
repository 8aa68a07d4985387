#pragma once
// Dense Cayley tables for finite binary operations on {0..n-1}, total
// maps on the same carrier, and the structural predicates built on
// them (left/right quasigroup, loop identity, automorphism).

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ciq {

// An element is an index into the carrier {0..n-1} of the ambient table.
using element_t = int;

// Tables larger than this are rejected; everything here is O(n^2)-O(n^3)
// on dense storage, which stops being the right representation long
// before this bound matters.
inline constexpr int kMaxOrder = 16;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WrongLength : Error {
  using Error::Error;
};
struct EntryOutOfRange : Error {
  using Error::Error;
};
struct OrderMismatch : Error {
  using Error::Error;
};
struct NotBijective : Error {
  using Error::Error;
};
struct OrderTooLarge : Error {
  using Error::Error;
};

// A map of the carrier into itself, f(x) = image[x]. Not necessarily
// injective; bijectivity is checked where an operation needs it.
struct TotalMap {
  std::vector<element_t> image;

  int order() const { return static_cast<int>(image.size()); }
  element_t operator()(element_t x) const { return image[x]; }
  auto operator<=>(const TotalMap&) const = default;
};

// Alias used where the value is known (or required) to be a bijection.
using Permutation = TotalMap;

// The operation x*y on {0..n-1}, stored row-major: cells[x*n+y] = x*y.
struct CayleyTable {
  int n = 0;
  std::vector<element_t> cells;

  element_t at(element_t x, element_t y) const { return cells[x * n + y]; }
  auto operator<=>(const CayleyTable&) const = default;
};

// Validates order and entries; throws WrongLength / EntryOutOfRange /
// OrderTooLarge on malformed input.
CayleyTable make_table(int order, std::vector<element_t> entries);

TotalMap identity_map(int n);

// L_a : y -> a*y (row a) and R_a : y -> y*a (column a).
TotalMap left_translation(const CayleyTable& t, element_t a);
TotalMap right_translation(const CayleyTable& t, element_t a);

// Swaps rows and columns: transpose(t).at(x, y) == t.at(y, x).
CayleyTable transpose(const CayleyTable& t);

bool is_bijective(const TotalMap& m);

// Composition applies g first: compose(f, g)(x) = f(g(x)).
// This convention is fixed repo-wide.
TotalMap compose(const TotalMap& f, const TotalMap& g);

// Throws NotBijective unless p is a permutation.
Permutation invert(const Permutation& p);

// Left (right) quasigroup: every row (column) is a permutation.
bool is_left_quasigroup(const CayleyTable& t);
bool is_right_quasigroup(const CayleyTable& t);

// Both at once, i.e. the table is a Latin square.
bool is_quasigroup(const CayleyTable& t);

// The unique e with e*x = x*e = x for all x, if one exists. The
// identity is whatever index satisfies the equations, not necessarily 0.
std::optional<element_t> identity_element(const CayleyTable& t);

// True iff m is bijective and m(x*y) = m(x)*m(y) for all x, y.
bool is_automorphism(const CayleyTable& t, const TotalMap& m);

}  // namespace ciq
