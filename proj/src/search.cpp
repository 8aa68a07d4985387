#include "ciq/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <map>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ciq/ci.hpp"

namespace ciq {

const char* to_string(SearchMode m) {
  return m == SearchMode::kOracle ? "oracle" : "propagate";
}

namespace {

int resolve_workers(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void require_positive_order(int n, const char* who) {
  if (n < 1) {
    throw Error(std::string(who) + ": order must be positive, got " +
                std::to_string(n));
  }
}

// Shared node budget for one enumeration run. Workers batch their local
// counts and raise the abort flag once the limit is crossed.
struct Budget {
  std::int64_t limit = -1;  // -1 = unlimited
  std::atomic<std::int64_t> used{0};
  std::atomic<bool> abort{false};

  bool limited() const { return limit >= 0; }
  void charge(std::int64_t amount) {
    if (!limited()) return;
    if (used.fetch_add(amount, std::memory_order_relaxed) + amount > limit) {
      abort.store(true, std::memory_order_relaxed);
    }
  }
  bool aborted() const { return abort.load(std::memory_order_relaxed); }
};

// ---------------------------------------------------------------------
// Oracle kernel: flat loop over all n^(n^2) tables, inner loop over all
// n^n maps. Purely extensional, no pruning of any kind.
// ---------------------------------------------------------------------

void decode_tuple(std::int64_t index, int base, int length, std::int8_t* out) {
  for (int i = length; i-- > 0;) {
    out[i] = static_cast<std::int8_t>(index % base);
    index /= base;
  }
}

}  // namespace

std::vector<CiStructure> enumerate_oracle(const SearchConfig& cfg) {
  const int n = cfg.order;
  require_positive_order(n, "enumerate_oracle");
  if (n > kOracleMaxOrder) {
    throw OrderTooLarge("enumerate_oracle: order " + std::to_string(n) +
                        " exceeds the oracle cap " +
                        std::to_string(kOracleMaxOrder));
  }
  const int n2 = n * n;
  const std::int64_t table_count = ipow(n, n2);
  const std::int64_t map_count = ipow(n, n);

  std::vector<std::array<std::int8_t, kOracleMaxOrder>> maps(
      static_cast<std::size_t>(map_count));
  for (std::int64_t mi = 0; mi < map_count; ++mi) {
    decode_tuple(mi, n, n, maps[static_cast<std::size_t>(mi)].data());
  }

  const int workers = resolve_workers(cfg.worker_count);
  std::vector<CiStructure> out;
#pragma omp parallel num_threads(workers)
  {
    std::vector<CiStructure> local;
    std::int8_t cells[kOracleMaxOrder * kOracleMaxOrder];
#pragma omp for schedule(static) nowait
    for (std::int64_t ti = 0; ti < table_count; ++ti) {
      decode_tuple(ti, n, n2, cells);
      for (std::int64_t mi = 0; mi < map_count; ++mi) {
        const auto& j = maps[static_cast<std::size_t>(mi)];
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
          for (int y = 0; y < n; ++y) {
            if (cells[cells[x * n + y] * n + j[x]] != y) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          local.push_back(CiStructure{
              CayleyTable{n, std::vector<element_t>(cells, cells + n2)},
              TotalMap{std::vector<element_t>(j.begin(), j.begin() + n)}});
        }
      }
    }
#pragma omp critical(ciq_oracle_merge)
    out.insert(out.end(), std::make_move_iterator(local.begin()),
               std::make_move_iterator(local.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------
// Propagation kernel. The top-level branch set (choices of jr(0) and
// row 0) is materialized as seeds and split across workers; each worker
// runs an in-place trail-based DFS over the remaining rows.
// ---------------------------------------------------------------------

namespace {

constexpr int kP = kPropagateHardMax;

struct Seed {
  std::int8_t jr0 = 0;
  std::array<std::int8_t, kP> row0{};
};

std::vector<Seed> make_seeds(int n, bool prune_rows) {
  std::vector<Seed> seeds;
  if (prune_rows) {
    std::vector<std::int8_t> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::int8_t>(i);
    for (int v0 = 0; v0 < n; ++v0) {
      std::vector<std::int8_t> p = perm;
      do {
        Seed s;
        s.jr0 = static_cast<std::int8_t>(v0);
        std::copy(p.begin(), p.end(), s.row0.begin());
        seeds.push_back(s);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  } else {
    const std::int64_t tuples = ipow(n, n);
    for (int v0 = 0; v0 < n; ++v0) {
      for (std::int64_t t = 0; t < tuples; ++t) {
        Seed s;
        s.jr0 = static_cast<std::int8_t>(v0);
        decode_tuple(t, n, n, s.row0.data());
        seeds.push_back(s);
      }
    }
  }
  return seeds;
}

struct PropSearcher {
  int n = 0;
  bool prune_rows = true;
  Budget* budget = nullptr;
  std::array<std::int8_t, kP * kP> cell{};
  std::array<std::int8_t, kP> jr{};
  std::array<unsigned, kP> row_used{};
  std::vector<int> trail;  // indices of set cells, in assignment order
  std::vector<CiStructure> found;
  std::int64_t local_nodes = 0;

  void reset(int order, bool prune, Budget* b) {
    n = order;
    prune_rows = prune;
    budget = b;
    cell.fill(-1);
    jr.fill(-1);
    row_used.fill(0);
    trail.clear();
  }

  // One guessed assignment (a jr value or a cell value) costs one node.
  bool count_node() {
    ++local_nodes;
    if ((local_nodes & 1023) == 0) budget->charge(1024);
    return !budget->aborted();
  }

  // Sets cell (a,b) = d and runs the forcing rule to its fixpoint.
  // Every assignment lands on the trail, so the caller can unwind to
  // its own mark whether this succeeds or not.
  bool set_cell(int a, int b, int d) {
    // pending queue of encoded assignments a<<6 | b<<3 | d
    std::array<std::uint16_t, kP * kP + 2> pending;
    int head = 0, tail = 0;
    pending[tail++] = static_cast<std::uint16_t>(a << 6 | b << 3 | d);
    while (head < tail) {
      const int enc = pending[head++];
      const int pa = enc >> 6, pb = (enc >> 3) & 7, pd = enc & 7;
      const int idx = pa * n + pb;
      const int cur = cell[idx];
      if (cur >= 0) {
        if (cur != pd) return false;
        continue;
      }
      if (prune_rows) {
        if ((row_used[pa] >> pd) & 1u) return false;
        row_used[pa] |= 1u << pd;
      }
      cell[idx] = static_cast<std::int8_t>(pd);
      trail.push_back(idx);
      if (jr[pa] >= 0) {
        pending[tail++] =
            static_cast<std::uint16_t>(pd << 6 | int(jr[pa]) << 3 | pb);
      }
    }
    return true;
  }

  // jr[x] was just set to v: fire the rule for every set cell of row x.
  bool fire_jr(int x, int v) {
    for (int y = 0; y < n; ++y) {
      const int c = cell[x * n + y];
      if (c >= 0 && !set_cell(c, v, y)) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const int idx = trail.back();
      trail.pop_back();
      if (prune_rows) row_used[idx / n] &= ~(1u << cell[idx]);
      cell[idx] = -1;
    }
  }

  void emit() {
    CayleyTable t{n, std::vector<element_t>(cell.begin(), cell.begin() + n * n)};
    TotalMap j{std::vector<element_t>(jr.begin(), jr.begin() + n)};
    assert(check_left_ci(t, j));  // holds by closure of the forcing rule
    found.push_back(CiStructure{std::move(t), std::move(j)});
  }

  void dfs_cells(int x, int y) {
    while (y < n && cell[x * n + y] >= 0) ++y;
    if (y == n) {
      dfs_rows(x + 1);
      return;
    }
    for (int d = 0; d < n; ++d) {
      if (prune_rows && ((row_used[x] >> d) & 1u)) continue;
      if (!count_node()) return;
      const std::size_t mark = trail.size();
      if (set_cell(x, y, d)) dfs_cells(x, y + 1);
      undo_to(mark);
    }
  }

  void dfs_rows(int x) {
    if (x == n) {
      emit();
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!count_node()) return;
      const std::size_t mark = trail.size();
      jr[x] = static_cast<std::int8_t>(v);
      if (fire_jr(x, v)) dfs_cells(x, 0);
      undo_to(mark);
      jr[x] = -1;
    }
  }

  // Replays the seed's guesses (jr(0), then row 0 left to right). Cells
  // already forced must agree with the seed; otherwise the seed covers
  // no solution and is dropped.
  void run_seed(const Seed& s) {
    if (!count_node()) return;
    jr[0] = s.jr0;
    if (fire_jr(0, s.jr0)) {
      bool ok = true;
      for (int y = 0; y < n && ok; ++y) {
        const int want = s.row0[y];
        const int cur = cell[y];  // row 0, so index is just y
        if (cur >= 0) {
          ok = cur == want;
        } else {
          ok = set_cell(0, y, want);
        }
      }
      if (ok) dfs_rows(1);
    }
    undo_to(0);
    jr[0] = -1;
  }
};

}  // namespace

std::vector<CiStructure> enumerate_propagate(const SearchConfig& cfg) {
  const int n = cfg.order;
  require_positive_order(n, "enumerate_propagate");
  const int cap = std::min(cfg.propagate_cap, kPropagateHardMax);
  if (n > cap) {
    throw OrderTooLarge("enumerate_propagate: order " + std::to_string(n) +
                        " exceeds the configured cap " + std::to_string(cap));
  }

  const std::vector<Seed> seeds = make_seeds(n, cfg.prune_rows);
  const auto seed_count = static_cast<std::int64_t>(seeds.size());
  Budget budget;
  if (cfg.node_limit) budget.limit = *cfg.node_limit;

  const int workers = resolve_workers(cfg.worker_count);
  std::vector<CiStructure> out;
#pragma omp parallel num_threads(workers)
  {
    PropSearcher searcher;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t i = 0; i < seed_count; ++i) {
      if (budget.aborted()) continue;
      searcher.reset(n, cfg.prune_rows, &budget);
      searcher.run_seed(seeds[static_cast<std::size_t>(i)]);
      budget.charge(searcher.local_nodes & 1023);
      searcher.local_nodes = 0;
    }
#pragma omp critical(ciq_propagate_merge)
    out.insert(out.end(), std::make_move_iterator(searcher.found.begin()),
               std::make_move_iterator(searcher.found.end()));
  }
  if (budget.aborted()) {
    throw NodeLimitExceeded("enumerate_propagate: node limit " +
                            std::to_string(budget.limit) + " exceeded");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CiStructure> enumerate_structures(const SearchConfig& cfg) {
  return cfg.mode == SearchMode::kOracle ? enumerate_oracle(cfg)
                                         : enumerate_propagate(cfg);
}

// ---------------------------------------------------------------------
// Isomorphism canonicalization
// ---------------------------------------------------------------------

CiStructure relabel(const CiStructure& s, const std::vector<element_t>& sigma) {
  const int n = s.table.n;
  assert(static_cast<int>(sigma.size()) == n);
  CiStructure r;
  r.table.n = n;
  r.table.cells.resize(static_cast<std::size_t>(n) * n);
  r.jr.image.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r.table.cells[sigma[x] * n + sigma[y]] = sigma[s.table.at(x, y)];
    }
    r.jr.image[sigma[x]] = sigma[s.jr(x)];
  }
  return r;
}

CiStructure canonical_form(const CiStructure& s) {
  const int n = s.table.n;
  require_positive_order(n, "canonical_form");
  if (n > kCanonicalMaxOrder) {
    throw OrderTooLarge("canonical_form: order " + std::to_string(n) +
                        " exceeds " + std::to_string(kCanonicalMaxOrder));
  }
  std::vector<element_t> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::optional<CiStructure> best;
  do {
    CiStructure cand = relabel(s, sigma);
    if (!best || cand < *best) best = std::move(cand);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return *best;
}

std::vector<IsoClass> group_into_classes(const std::vector<CiStructure>& all) {
  std::map<CiStructure, std::int64_t> buckets;
  for (const CiStructure& s : all) ++buckets[canonical_form(s)];
  std::vector<IsoClass> classes;
  classes.reserve(buckets.size());
  for (auto& [rep, size] : buckets) classes.push_back(IsoClass{rep, size});
  return classes;
}

std::vector<IsoClass> enumerate_classes(const SearchConfig& cfg) {
  return group_into_classes(enumerate_structures(cfg));
}

// ---------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------

TheoremReport verify_theorem(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport r;
  r.order = cfg.order;
  r.mode = cfg.mode;
  const std::vector<CiStructure> all = enumerate_structures(cfg);
  r.pair_count = static_cast<std::int64_t>(all.size());

  {
    std::vector<CayleyTable> tables;
    tables.reserve(all.size());
    for (const CiStructure& s : all) tables.push_back(s.table);
    std::sort(tables.begin(), tables.end());
    r.table_count = static_cast<std::int64_t>(
        std::unique(tables.begin(), tables.end()) - tables.begin());
  }

  for (const CiStructure& s : all) {
    std::string reasons;
    const auto fail = [&](const char* why) {
      if (!reasons.empty()) reasons += "; ";
      reasons += why;
    };
    if (!is_quasigroup(s.table)) {
      r.all_are_quasigroups = false;
      fail("table is not a quasigroup");
    }
    const bool bijective = is_bijective(s.jr);
    if (!bijective) {
      r.all_jr_bijective = false;
      fail("jr is not bijective");
    }
    if (!bijective || !check_right_ci(s.table, invert(s.jr))) {
      r.all_right_ci_with_jr_inverse = false;
      fail("right identity fails with jr^-1");
    }
    try {
      const auto derived = derive_right_j(s.table);
      if (!derived || *derived != s.jr) {
        r.all_j_unique = false;
        fail("derived j does not round-trip");
      }
    } catch (const AmbiguousJ&) {
      r.all_j_unique = false;
      fail("j is ambiguous");
    }
    if (!reasons.empty()) r.failures.push_back(TheoremFailure{s, reasons});
  }

  if (cfg.order <= kCanonicalMaxOrder) {
    r.class_count = static_cast<std::int64_t>(group_into_classes(all).size());
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

// ---------------------------------------------------------------------
// Random Latin squares
// ---------------------------------------------------------------------

CayleyTable random_quasigroup(int n, std::uint64_t seed) {
  require_positive_order(n, "random_quasigroup");
  if (n > kRandomMaxOrder) {
    throw OrderTooLarge("random_quasigroup: order " + std::to_string(n) +
                        " exceeds " + std::to_string(kRandomMaxOrder));
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);

  std::vector<element_t> cells(static_cast<std::size_t>(n) * n);
  // Fill row-major, choosing uniformly among the symbols free for both
  // the row and the column; restart from scratch on a dead cell. The
  // draw uses rng() % k, not uniform_int_distribution, so the output is
  // identical across standard library implementations.
  while (true) {
    std::vector<unsigned> row_free(n, (1u << n) - 1u);
    std::vector<unsigned> col_free(n, (1u << n) - 1u);
    bool dead = false;
    for (int idx = 0; idx < n * n && !dead; ++idx) {
      const int x = idx / n, y = idx % n;
      const unsigned avail = row_free[x] & col_free[y];
      const int count = std::popcount(avail);
      if (count == 0) {
        dead = true;
        break;
      }
      int k = static_cast<int>(rng() % static_cast<std::uint64_t>(count));
      unsigned bits = avail;
      while (k-- > 0) bits &= bits - 1;  // drop k lowest set bits
      const int v = std::countr_zero(bits);
      cells[idx] = v;
      row_free[x] &= ~(1u << v);
      col_free[y] &= ~(1u << v);
    }
    if (!dead) break;
  }
  CayleyTable t{n, std::move(cells)};
  assert(is_quasigroup(t));
  return t;
}

}  // namespace ciq
