#include "ciq/reference.hpp"

#include <algorithm>

#include "ciq/ci.hpp"

namespace ciq::reference {

namespace {

// Odometer increment over base-n digit vectors; false once wrapped.
bool next_tuple(std::vector<element_t>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

// Search state for the reference propagation search: a partial table
// (-1 = unset) plus a partial jr.
struct Partial {
  int n = 0;
  std::vector<int> cell;  // n*n, row-major
  std::vector<int> jr;    // n
};

// Applies the forcing rule cell(x,y) = c & jr(x) = v => cell(c,v) = y
// until nothing changes. Returns false on contradiction, or (with
// prune_rows) when some row holds a duplicate value.
bool closure(Partial& p, bool prune_rows) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < p.n; ++x) {
      if (p.jr[x] < 0) continue;
      for (int y = 0; y < p.n; ++y) {
        const int c = p.cell[x * p.n + y];
        if (c < 0) continue;
        int& forced = p.cell[c * p.n + p.jr[x]];
        if (forced < 0) {
          forced = y;
          changed = true;
        } else if (forced != y) {
          return false;
        }
      }
    }
  }
  if (prune_rows) {
    for (int x = 0; x < p.n; ++x) {
      unsigned seen = 0;
      for (int y = 0; y < p.n; ++y) {
        const int c = p.cell[x * p.n + y];
        if (c < 0) continue;
        if (seen & (1u << c)) return false;
        seen |= 1u << c;
      }
    }
  }
  return true;
}

// Decision variables in order: jr(0), cell(0,0..n-1), jr(1), cell(1,*), ...
// Variable i of row x: i == x*(n+1) is jr(x), the rest are cells.
void recurse(Partial& p, int var, bool prune_rows,
             std::vector<CiStructure>& out) {
  const int n = p.n;
  if (var == n * (n + 1)) {
    CayleyTable t{n, std::vector<element_t>(p.cell.begin(), p.cell.end())};
    TotalMap j{std::vector<element_t>(p.jr.begin(), p.jr.end())};
    if (check_left_ci(t, j)) out.push_back(CiStructure{std::move(t), std::move(j)});
    return;
  }
  const int x = var / (n + 1);
  const int k = var % (n + 1);
  const bool is_jr = k == 0;
  const int cell_index = is_jr ? -1 : x * n + (k - 1);
  if ((is_jr ? p.jr[x] : p.cell[cell_index]) >= 0) {  // forced by the closure
    recurse(p, var + 1, prune_rows, out);
    return;
  }
  for (int v = 0; v < n; ++v) {
    Partial saved = p;
    (is_jr ? p.jr[x] : p.cell[cell_index]) = v;
    if (closure(p, prune_rows)) recurse(p, var + 1, prune_rows, out);
    p = std::move(saved);
  }
}

}  // namespace

std::vector<CiStructure> enumerate_oracle(int n) {
  if (n < 1) throw Error("enumerate_oracle: order must be positive");
  if (n > kOracleMaxOrder) {
    throw OrderTooLarge("enumerate_oracle: order " + std::to_string(n) +
                        " exceeds the oracle cap " +
                        std::to_string(kOracleMaxOrder));
  }
  std::vector<CiStructure> out;
  std::vector<element_t> cells(static_cast<std::size_t>(n) * n, 0);
  do {
    const CayleyTable t{n, cells};
    std::vector<element_t> image(n, 0);
    do {
      const TotalMap j{image};
      if (check_left_ci(t, j)) out.push_back(CiStructure{t, j});
    } while (next_tuple(image, n));
  } while (next_tuple(cells, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CiStructure> enumerate_propagate(int n, bool prune_rows) {
  if (n < 1) throw Error("enumerate_propagate: order must be positive");
  if (n > kPropagateHardMax) {
    throw OrderTooLarge("enumerate_propagate: order " + std::to_string(n) +
                        " exceeds " + std::to_string(kPropagateHardMax));
  }
  Partial p;
  p.n = n;
  p.cell.assign(static_cast<std::size_t>(n) * n, -1);
  p.jr.assign(n, -1);
  std::vector<CiStructure> out;
  recurse(p, 0, prune_rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ciq::reference
