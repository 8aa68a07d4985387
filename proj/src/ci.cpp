#include "ciq/ci.hpp"

namespace ciq {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kNotLeftCi: return "NOT_LEFT_CI";
    case Classification::kCiQuasigroup: return "CI_QUASIGROUP";
    case Classification::kCiLoop: return "CI_LOOP";
  }
  return "?";
}

namespace {

void require_same_order(const CayleyTable& t, const TotalMap& j,
                        const char* who) {
  if (j.order() != t.n) {
    throw OrderMismatch(std::string(who) + ": table order " +
                        std::to_string(t.n) + " != map order " +
                        std::to_string(j.order()));
  }
}

}  // namespace

bool check_left_ci(const CayleyTable& t, const TotalMap& j) {
  require_same_order(t, j, "check_left_ci");
  for (element_t x = 0; x < t.n; ++x)
    for (element_t y = 0; y < t.n; ++y)
      if (t.at(t.at(x, y), j(x)) != y) return false;
  return true;
}

bool check_right_ci(const CayleyTable& t, const TotalMap& j) {
  require_same_order(t, j, "check_right_ci");
  for (element_t x = 0; x < t.n; ++x)
    for (element_t y = 0; y < t.n; ++y)
      if (t.at(j(x), t.at(y, x)) != y) return false;
  return true;
}

bool translation_form_holds(const CayleyTable& t, const TotalMap& j,
                            element_t x) {
  require_same_order(t, j, "translation_form_holds");
  return compose(right_translation(t, j(x)), left_translation(t, x)) ==
         identity_map(t.n);
}

std::optional<TotalMap> derive_right_j(const CayleyTable& t) {
  TotalMap j;
  j.image.resize(t.n);
  for (element_t x = 0; x < t.n; ++x) {
    int found = 0;
    for (element_t z = 0; z < t.n; ++z) {
      bool ok = true;
      for (element_t y = 0; y < t.n && ok; ++y) ok = t.at(t.at(x, y), z) == y;
      if (ok) {
        if (++found > 1) {
          throw AmbiguousJ("derive_right_j: x = " + std::to_string(x) +
                           " admits more than one candidate");
        }
        j.image[x] = z;
      }
    }
    if (found == 0) return std::nullopt;
  }
  return j;
}

std::optional<TotalMap> derive_left_j(const CayleyTable& t) {
  TotalMap j;
  j.image.resize(t.n);
  for (element_t x = 0; x < t.n; ++x) {
    int found = 0;
    for (element_t w = 0; w < t.n; ++w) {
      bool ok = true;
      for (element_t y = 0; y < t.n && ok; ++y) ok = t.at(w, t.at(y, x)) == y;
      if (ok) {
        if (++found > 1) {
          throw AmbiguousJ("derive_left_j: x = " + std::to_string(x) +
                           " admits more than one candidate");
        }
        j.image[x] = w;
      }
    }
    if (found == 0) return std::nullopt;
  }
  return j;
}

element_t solve_left(const CayleyTable& t, const TotalMap& j, element_t a,
                     element_t b, bool check_precondition) {
  if (check_precondition && !check_left_ci(t, j)) {
    throw PreconditionViolated(
        "solve_left: the left identity does not hold for this (table, j)");
  }
  return t.at(b, j(a));
}

CiLoopFlags ci_loop_report(const CayleyTable& t, const TotalMap& j) {
  const auto e = identity_element(t);
  if (!e) throw NotALoop("ci_loop_report: table has no identity element");
  if (!check_left_ci(t, j)) {
    throw PreconditionViolated(
        "ci_loop_report: the left identity does not hold for this (table, j)");
  }
  CiLoopFlags flags;
  flags.x_times_jx_is_identity = true;
  for (element_t x = 0; x < t.n; ++x) {
    if (t.at(x, j(x)) != *e) {
      flags.x_times_jx_is_identity = false;
      break;
    }
  }
  flags.j_is_automorphism = is_automorphism(t, j);
  return flags;
}

CiReport classify(const CayleyTable& t) {
  CiReport r;
  r.order = t.n;
  r.is_left_quasigroup = is_left_quasigroup(t);
  r.is_right_quasigroup = is_right_quasigroup(t);
  r.is_quasigroup = r.is_left_quasigroup && r.is_right_quasigroup;
  r.loop_identity = identity_element(t);
  r.jr = derive_right_j(t);
  r.jl = derive_left_j(t);
  if (!r.jr) {
    r.classification = Classification::kNotLeftCi;
    return r;
  }
  r.jr_is_bijective = is_bijective(*r.jr);
  r.jl_equals_jr_inverse =
      r.jl.has_value() && r.jr_is_bijective && *r.jl == invert(*r.jr);
  if (r.loop_identity) {
    const CiLoopFlags flags = ci_loop_report(t, *r.jr);
    r.x_times_jx_is_identity = flags.x_times_jx_is_identity;
    r.j_is_automorphism = flags.j_is_automorphism;
  }
  r.classification = (r.loop_identity && r.is_quasigroup)
                         ? Classification::kCiLoop
                         : Classification::kCiQuasigroup;
  return r;
}

}  // namespace ciq
