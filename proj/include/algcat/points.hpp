#pragma once

// Points (split epimorphisms with a chosen section), their strength,
// Schreier decompositions, stability under pullback, and the square-shaped
// checks built from them.

#include <optional>
#include <string>
#include <vector>

#include "algcat/constructions.hpp"
#include "algcat/core.hpp"
#include "algcat/hom.hpp"

namespace algcat {

struct Point {
  Hom f;  // split epi A -> B
  Hom s;  // section B -> A, f o s = id
};

inline Point make_point(Hom f, Hom s) {
  if (s.target != f.source || f.target != s.source)
    throw input_error("make_point: section does not match the split epi");
  for (int b = 0; b < f.target.size; ++b)
    if (f.map[s.map[b]] != b)
      throw input_error("make_point: f(s(" + f.target.element_names[b] + ")) = " +
                        f.target.element_names[f.map[s.map[b]]] + " != " +
                        f.target.element_names[b]);
  return {std::move(f), std::move(s)};
}

struct PulledPoint {
  Point point;          // (pi_C: P -> C, <1_C, s o g>)
  PullbackResult pb;    // pairs (c, a), to_first = pi_C, to_second = pi_A
};

inline PulledPoint pullback_point(const Point& p, const Hom& g) {
  if (g.target != p.f.target) throw input_error("pullback_point: g lands outside the base");
  auto pb = pullback(g, p.f);
  std::vector<int> smap(g.source.size);
  for (int c = 0; c < g.source.size; ++c) {
    int idx = pb.index_of(c, p.s.map[g.map[c]]);
    if (idx < 0) throw input_error("pullback_point: section pair missing");  // unreachable
    smap[c] = idx;
  }
  Hom sec = make_hom(g.source, pb.algebra, std::move(smap));
  Point pt = make_point(pb.to_first, std::move(sec));
  return {std::move(pt), std::move(pb)};
}

struct StrengthVerdict {
  bool strong = false;
  std::vector<int> kernel;   // ker(f), the seeds next to image(s)
  ClosureResult closure;     // proper subalgebra witness when not strong
};

// Strong iff kernel and section image together generate the domain.  For
// split epis of pointed varieties this single generation check is equivalent
// to the pullback-quantified formulation, so no g is quantified here.
inline StrengthVerdict is_strong_point(const Point& p) {
  StrengthVerdict v;
  v.kernel = kernel(p.f);
  std::vector<int> seeds = v.kernel;
  for (int b : p.s.map) seeds.push_back(b);
  v.closure = generated_subalgebra(p.f.source, seeds);
  v.strong = v.closure.is_all;
  return v;
}

struct SchreierVerdict {
  bool schreier = false;
  std::vector<int> decomposition;  // k with a = k * s(f(a)), per element a
  int failing = -1;                // smallest a without unique decomposition
  bool ambiguous = false;          // failing had several k rather than none
};

// Unique kernel decomposition a = k . s(f(a)) through the kind's additive
// side: mul for monoids, add for semirings.
inline SchreierVerdict is_schreier_point(const Point& p) {
  const FiniteAlgebra& a = p.f.source;
  int op;
  if (kind_is_monoidal(a.kind))
    op = a.op_index("mul");
  else if (a.kind == Kind::semiring)
    op = a.op_index("add");
  else
    throw input_error("is_schreier_point: no decomposition operation for " +
                      std::string(kind_name(a.kind)));
  auto ker = kernel(p.f);
  SchreierVerdict v;
  v.decomposition.assign(a.size, -1);
  for (int x = 0; x < a.size; ++x) {
    int sb = p.s.map[p.f.map[x]];
    int found = -1;
    bool dup = false;
    for (int k : ker)
      if (a.op(op, k, sb) == x) {
        if (found >= 0) {
          dup = true;
          break;
        }
        found = k;
      }
    if (found < 0 || dup) {
      v.failing = x;
      v.ambiguous = dup;
      v.decomposition.clear();
      return v;
    }
    v.decomposition[x] = found;
  }
  v.schreier = true;
  return v;
}

enum class StableStatus { certified, falsified, unknown };

struct StablyStrongVerdict {
  StableStatus status = StableStatus::unknown;
  std::string method;            // "schreier", "section-iso", "pullback", "pool-exhausted"
  std::optional<Hom> along;      // falsifier g: C -> B
  StrengthVerdict failure;       // the failing strength check when falsified
};

// Certification first (Schreier decomposition; or a surjective section,
// which forces every pullback's section to be onto), then pool-bounded
// falsification in (pool order, hom order); first failure wins.
inline StablyStrongVerdict is_stably_strong(const Point& p,
                                            const std::vector<FiniteAlgebra>& pool) {
  StablyStrongVerdict v;
  if (kind_is_monoidal(p.f.source.kind) || p.f.source.kind == Kind::semiring) {
    if (is_schreier_point(p).schreier) {
      v.status = StableStatus::certified;
      v.method = "schreier";
      return v;
    }
  }
  if (is_surjective(p.s)) {
    v.status = StableStatus::certified;
    v.method = "section-iso";
    return v;
  }
  auto direct = is_strong_point(p);
  if (!direct.strong) {
    v.status = StableStatus::falsified;
    v.method = "pullback";
    v.along = identity_hom(p.f.target);
    v.failure = std::move(direct);
    return v;
  }
  for (const auto& c : pool) {
    if (!signature_compatible(c, p.f.target)) continue;
    for (const auto& g : enumerate_homs(c, p.f.target)) {
      auto pulled = pullback_point(p, g);
      auto sv = is_strong_point(pulled.point);
      if (!sv.strong) {
        v.status = StableStatus::falsified;
        v.method = "pullback";
        v.along = g;
        v.failure = std::move(sv);
        return v;
      }
    }
  }
  v.status = StableStatus::unknown;
  v.method = "pool-exhausted";
  return v;
}

// Commutative square of surjections over a cospan:
//        top
//     D ----> C
//  left|      |right        right o top = bottom o left
//     A ----> B
//       bottom
struct SurjectionSquare {
  Hom top;
  Hom left;
  Hom right;
  Hom bottom;
};

inline void check_square_shape(const SurjectionSquare& q) {
  if (q.top.source != q.left.source || q.right.source != q.top.target ||
      q.bottom.source != q.left.target || q.bottom.target != q.right.target)
    throw input_error("square: objects do not line up");
  if (compose(q.right, q.top).map != compose(q.bottom, q.left).map)
    throw input_error("square: does not commute");
}

struct RegularPushoutVerdict {
  bool regular = false;
  PullbackResult pb;  // C x_B A
  Hom comparison;     // <top, left>: D -> C x_B A
};

inline RegularPushoutVerdict is_regular_pushout(const SurjectionSquare& q) {
  check_square_shape(q);
  for (const Hom* h : {&q.top, &q.left, &q.right, &q.bottom})
    if (!is_surjective(*h)) throw input_error("is_regular_pushout: map not surjective");
  auto pb = pullback(q.right, q.bottom);
  Hom cmp = pairing_into_pullback(pb, q.top, q.left);
  bool reg = is_surjective(cmp);
  return {reg, std::move(pb), std::move(cmp)};
}

// Double split epimorphism:
//        (f', s')
//     D <------> C
// (g',t')|        |(g,t)     g f' = f g',  f' t' = t f,  g' s' = s g,  s' t = t' s
//     A <------> B
//        (f, s)
struct DoubleSplitEpi {
  Point top;     // (f', s')
  Point left;    // (g', t')
  Point bottom;  // (f, s)
  Point right;   // (g, t)
};

inline DoubleSplitEpi make_double_split_epi(Point top, Point left, Point bottom, Point right) {
  const Hom &fp = top.f, &gp = left.f, &f = bottom.f, &g = right.f;
  if (fp.source != gp.source || f.source != gp.target || g.source != fp.target ||
      f.target != g.target)
    throw input_error("double split epi: objects do not line up");
  if (compose(g, fp).map != compose(f, gp).map)
    throw input_error("double split epi: g f' != f g'");
  if (compose(fp, left.s).map != compose(right.s, f).map)
    throw input_error("double split epi: f' t' != t f");
  if (compose(gp, top.s).map != compose(bottom.s, g).map)
    throw input_error("double split epi: g' s' != s g");
  if (compose(top.s, right.s).map != compose(left.s, bottom.s).map)
    throw input_error("double split epi: s' t != t' s");
  return {std::move(top), std::move(left), std::move(bottom), std::move(right)};
}

enum class ImplicationStatus { confirmed, vacuous, violated };

struct DoubleSplitEpiReport {
  StablyStrongVerdict hypothesis;  // (g, t) stably strong?
  RegularPushoutVerdict conclusion;
  ImplicationStatus implication = ImplicationStatus::vacuous;
};

// "When (g, t) is stably strong the square is a regular pushout": evaluates
// both sides; a certified hypothesis with a failing conclusion would falsify
// this library, not the statement.
inline DoubleSplitEpiReport check_double_split_epi_lemma(const DoubleSplitEpi& d,
                                                         const std::vector<FiniteAlgebra>& pool) {
  DoubleSplitEpiReport r{is_stably_strong(d.right, pool),
                         is_regular_pushout({d.top.f, d.left.f, d.right.f, d.bottom.f}),
                         ImplicationStatus::vacuous};
  if (r.hypothesis.status == StableStatus::certified)
    r.implication = r.conclusion.regular ? ImplicationStatus::confirmed
                                         : ImplicationStatus::violated;
  return r;
}

struct PointQuotientReport {
  bool source_strong = false;
  bool target_strong = false;
  bool violation = false;  // source strong but target not: library falsifier
};

// Morphism of points (alpha, beta): beta f = f' alpha and alpha s = s' beta,
// both components surjective.  Strong points must pass to the quotient.
inline PointQuotientReport point_quotient_check(const Point& p, const Hom& alpha,
                                                const Hom& beta, const Point& q) {
  if (alpha.source != p.f.source || beta.source != p.f.target ||
      alpha.target != q.f.source || beta.target != q.f.target)
    throw input_error("point_quotient_check: objects do not line up");
  if (!is_surjective(alpha) || !is_surjective(beta))
    throw input_error("point_quotient_check: quotient maps must be surjective");
  if (compose(beta, p.f).map != compose(q.f, alpha).map)
    throw input_error("point_quotient_check: beta f != f' alpha");
  if (compose(alpha, p.s).map != compose(q.s, beta).map)
    throw input_error("point_quotient_check: alpha s != s' beta");
  PointQuotientReport r;
  r.source_strong = is_strong_point(p).strong;
  r.target_strong = is_strong_point(q).strong;
  r.violation = r.source_strong && !r.target_strong;
  return r;
}

// All points over b with domains drawn from the pool, in (pool, split epi,
// section) enumeration order.
inline std::vector<Point> enumerate_points_over(const FiniteAlgebra& b,
                                                const std::vector<FiniteAlgebra>& pool) {
  std::vector<Point> out;
  for (const auto& a : pool) {
    if (!signature_compatible(a, b)) continue;
    for (const auto& f : enumerate_homs(a, b))
      for (const auto& s : enumerate_sections(f)) out.push_back({f, s});
  }
  return out;
}

}  // namespace algcat
