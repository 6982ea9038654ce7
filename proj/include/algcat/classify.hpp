#pragma once

// Object-level property engines: unital, subtractive, strongly unital,
// Maltsev, protomodular.  Exact rules run where a finite characterisation
// exists for the kind; bounded pool searches run elsewhere.  Verdicts are
// three-valued; bounded failures are genuine counterexamples, bounded
// exhaustion stays unknown.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algcat/catalog.hpp"
#include "algcat/constructions.hpp"
#include "algcat/core.hpp"
#include "algcat/hom.hpp"
#include "algcat/points.hpp"
#include "algcat/words.hpp"

namespace algcat {

enum class Status { holds, fails, unknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::unknown: return "unknown-at-bound";
  }
  return "?";
}

enum class Property { unital, subtractive, strongly_unital, maltsev, protomodular };

inline constexpr std::array<Property, 5> all_properties = {
    Property::unital, Property::subtractive, Property::strongly_unital, Property::maltsev,
    Property::protomodular};

inline const char* property_name(Property p) {
  switch (p) {
    case Property::unital: return "unital";
    case Property::subtractive: return "subtractive";
    case Property::strongly_unital: return "strongly-unital";
    case Property::maltsev: return "maltsev";
    case Property::protomodular: return "protomodular";
  }
  return "?";
}

enum class Mode { exact, bounded, both };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::exact: return "exact";
    case Mode::bounded: return "bounded";
    case Mode::both: return "both";
  }
  return "?";
}

inline std::optional<Mode> mode_from_name(std::string_view s) {
  if (s == "exact") return Mode::exact;
  if (s == "bounded") return Mode::bounded;
  if (s == "both") return Mode::both;
  return std::nullopt;
}

struct PropertyRecord {
  Property property = Property::unital;
  Status status = Status::unknown;
  std::string method;   // "exact:<rule>" or "bounded:<procedure>"
  std::string witness;  // always present on fails
  std::optional<long long> bound;
  std::vector<std::string> notes;
};

struct ClassificationReport {
  std::string object_name;
  std::vector<PropertyRecord> records;  // all_properties order

  const PropertyRecord& record(Property p) const {
    for (const auto& r : records)
      if (r.property == p) return r;
    throw input_error("report: missing property record");
  }
};

// ---------------------------------------------------------------------------
// Element-level characterisations.

struct ElementVerdict {
  bool yes = false;
  int witness = -1;  // smallest failing element
};

// Every element has a two-sided inverse.
inline ElementVerdict is_group_monoid(const FiniteAlgebra& m) {
  if (!kind_is_monoidal(m.kind)) throw input_error("is_group_monoid: not a monoid");
  int mul = m.op_index("mul");
  int e = m.pointed();
  for (int y = 0; y < m.size; ++y) {
    bool inv = false;
    for (int x = 0; x < m.size && !inv; ++x)
      inv = m.op(mul, y, x) == e && m.op(mul, x, y) == e;
    if (!inv) return {false, y};
  }
  return {true, -1};
}

struct GregariousVerdict {
  bool yes = false;
  int witness = -1;                            // y with no sandwich (u, v)
  std::vector<std::pair<int, int>> sandwich;   // (u, v) with u*y*v = unit, per y
};

// Every y admits u, v with u*y*v = unit; (u, v) searched in lex order.
inline GregariousVerdict is_gregarious_monoid(const FiniteAlgebra& m) {
  if (!kind_is_monoidal(m.kind)) throw input_error("is_gregarious_monoid: not a monoid");
  int mul = m.op_index("mul");
  int e = m.pointed();
  GregariousVerdict v;
  v.sandwich.assign(m.size, {-1, -1});
  for (int y = 0; y < m.size; ++y) {
    bool found = false;
    for (int u = 0; u < m.size && !found; ++u)
      for (int x = 0; x < m.size; ++x)
        if (m.op(mul, m.op(mul, u, y), x) == e) {
          v.sandwich[y] = {u, x};
          found = true;
          break;
        }
    if (!found) {
      v.witness = y;
      v.sandwich.clear();
      return v;
    }
  }
  v.yes = true;
  return v;
}

// Every element has an additive inverse.
inline ElementVerdict is_ring_semiring(const FiniteAlgebra& s) {
  if (s.kind != Kind::semiring) throw input_error("is_ring_semiring: not a semiring");
  int add = s.op_index("add");
  int z = s.pointed();
  for (int y = 0; y < s.size; ++y) {
    bool inv = false;
    for (int x = 0; x < s.size && !inv; ++x) inv = s.op(add, y, x) == z;
    if (!inv) return {false, y};
  }
  return {true, -1};
}

// For subtraction algebras: every y has y* with sub(0, y*) = y.  Sufficient
// for the product points (pi_X, <1_X, f>) to be strong: (x, y) is
// sub((x, f(x)), (0, sub(f(x), y*-chain))) style generation from the kernel
// and the section image.
inline ElementVerdict has_zero_complements(const FiniteAlgebra& y) {
  if (y.kind != Kind::subtraction_algebra)
    throw input_error("has_zero_complements: not a subtraction algebra");
  int sub = y.op_index("sub");
  int z = y.pointed();
  for (int v = 0; v < y.size; ++v) {
    bool found = false;
    for (int w = 0; w < y.size && !found; ++w) found = y.op(sub, z, w) == v;
    if (!found) return {false, v};
  }
  return {true, -1};
}

// ---------------------------------------------------------------------------
// Shared witness renderers.

inline std::string element_set_string(const FiniteAlgebra& a, const std::vector<int>& els) {
  std::string s = "{";
  for (size_t i = 0; i < els.size(); ++i) {
    if (i) s += ",";
    s += a.element_names[els[i]];
  }
  return s + "}";
}

inline std::string hom_map_string(const Hom& h) {
  std::string s = "{";
  for (int i = 0; i < h.source.size; ++i) {
    if (i) s += ",";
    s += h.source.element_names[i] + "->" + h.target.element_names[h.map[i]];
  }
  return s + "}";
}

// (pi_X: X x Y -> X, <1_X, f>) with f defaulting to the zero morphism.
inline Point product_point(const FiniteAlgebra& x, const FiniteAlgebra& y,
                           const std::optional<Hom>& f = std::nullopt) {
  auto pr = product(x, y);
  Hom leg = f ? *f : constant_pointed_hom(x, y);
  Hom sec = pairing(pr, identity_hom(x), leg);
  return make_point(pr.to_first, std::move(sec));
}

// ---------------------------------------------------------------------------
// The five property engines.

namespace detail {

struct EngineCtx {
  const FiniteAlgebra& y;
  Mode mode;
  const std::vector<FiniteAlgebra>& pool;
};

// mode wiring shared by the five engines: exact rule first unless bounded-only,
// bounded search when allowed and exact was inconclusive.
template <class ExactFn, class BoundedFn>
PropertyRecord run_engine(Property p, Mode mode, ExactFn&& exact, BoundedFn&& bounded) {
  PropertyRecord r;
  r.property = p;
  if (mode != Mode::bounded) {
    if (exact(r)) return r;
    if (mode == Mode::exact) return r;
  }
  bounded(r);
  return r;
}

inline bool exact_by_group(const EngineCtx& c, PropertyRecord& r) {
  if (kind_is_monoidal(c.y.kind)) {
    auto g = is_group_monoid(c.y);
    r.status = g.yes ? Status::holds : Status::fails;
    r.method = c.y.kind == Kind::commutative_monoid ? "exact:abelian-group" : "exact:group";
    if (!g.yes) r.witness = c.y.element_names[g.witness];
    return true;
  }
  if (c.y.kind == Kind::semiring) {
    auto g = is_ring_semiring(c.y);
    r.status = g.yes ? Status::holds : Status::fails;
    r.method = "exact:additive-inverses";
    if (!g.yes) r.witness = c.y.element_names[g.witness];
    return true;
  }
  r.status = Status::unknown;
  r.method = "exact:none";
  return false;
}

// Shared exact rule for strongly-unital and subtractive: gregarious for plain
// monoids, abelian group for commutative monoids, ring for semirings.
inline bool exact_by_gregarious(const EngineCtx& c, PropertyRecord& r) {
  if (c.y.kind == Kind::monoid) {
    auto g = is_gregarious_monoid(c.y);
    r.status = g.yes ? Status::holds : Status::fails;
    r.method = "exact:gregarious";
    if (!g.yes) r.witness = c.y.element_names[g.witness];
    return true;
  }
  return exact_by_group(c, r);
}

}  // namespace detail

inline PropertyRecord check_unital_object(const FiniteAlgebra& y, Mode mode,
                                          const std::vector<FiniteAlgebra>& pool) {
  auto exact = [&](PropertyRecord& r) {
    if (kind_is_monoidal(y.kind) || y.kind == Kind::semiring) {
      r.status = Status::holds;
      r.method = "exact:jonsson-tarski";
      return true;
    }
    auto zc = has_zero_complements(y);
    if (zc.yes) {
      r.status = Status::holds;
      r.method = "exact:zero-complements";
      return true;
    }
    r.status = Status::unknown;
    r.method = "exact:zero-complements-inconclusive";
    r.witness = y.element_names[zc.witness];
    return false;
  };
  auto bounded = [&](PropertyRecord& r) {
    r.bound = static_cast<long long>(pool.size());
    for (const auto& x : pool) {
      if (!signature_compatible(x, y)) continue;
      auto sv = is_strong_point(product_point(x, y));
      if (!sv.strong) {
        r.status = Status::fails;
        r.method = "bounded:product-point";
        r.witness = "X=" + x.name + ": proper subalgebra " +
                    element_set_string(product(x, y).algebra, sv.closure.elements);
        return;
      }
    }
    r.status = Status::unknown;
    r.method = "bounded:pool-exhausted";
  };
  return detail::run_engine(Property::unital, mode, exact, bounded);
}

inline PropertyRecord check_strongly_unital_object(const FiniteAlgebra& y, Mode mode,
                                                   const std::vector<FiniteAlgebra>& pool) {
  detail::EngineCtx c{y, mode, pool};
  auto exact = [&](PropertyRecord& r) {
    if (y.kind == Kind::subtraction_algebra) {
      // Subtraction algebras are always subtractive, so zero-complements
      // (unital) upgrades to strongly unital.
      auto zc = has_zero_complements(y);
      if (zc.yes) {
        r.status = Status::holds;
        r.method = "exact:zero-complements";
        return true;
      }
      r.status = Status::unknown;
      r.method = "exact:zero-complements-inconclusive";
      r.witness = y.element_names[zc.witness];
      return false;
    }
    return detail::exact_by_gregarious(c, r);
  };
  auto bounded = [&](PropertyRecord& r) {
    r.bound = static_cast<long long>(pool.size());
    for (const auto& x : pool) {
      if (!signature_compatible(x, y)) continue;
      for (const auto& f : enumerate_homs(x, y)) {
        auto sv = is_strong_point(product_point(x, y, f));
        if (!sv.strong) {
          r.status = Status::fails;
          r.method = "bounded:product-point";
          r.witness = "X=" + x.name + ", f=" + hom_map_string(f) + ": proper subalgebra " +
                      element_set_string(product(x, y).algebra, sv.closure.elements);
          return;
        }
      }
    }
    r.status = Status::unknown;
    r.method = "bounded:pool-exhausted";
  };
  return detail::run_engine(Property::strongly_unital, mode, exact, bounded);
}

inline PropertyRecord check_subtractive_object(const FiniteAlgebra& y, Mode mode,
                                               const std::vector<FiniteAlgebra>& pool) {
  detail::EngineCtx c{y, mode, pool};
  auto exact = [&](PropertyRecord& r) {
    if (y.kind == Kind::subtraction_algebra) {
      r.status = Status::holds;
      r.method = "exact:subtraction-term";
      return true;
    }
    return detail::exact_by_gregarious(c, r);
  };
  // Split right punctual spans (f,s): Z <-> X, (g,t): Z <-> Y with f t = 0;
  // Y subtractive demands f restricted to ker(g) be onto X.
  auto bounded = [&](PropertyRecord& r) {
    r.bound = static_cast<long long>(pool.size());
    for (const auto& z : pool) {
      if (!signature_compatible(z, y)) continue;
      for (const auto& x : pool) {
        if (!signature_compatible(x, z)) continue;
        for (const auto& g : enumerate_homs(z, y))
          for (const auto& t : enumerate_sections(g))
            for (const auto& f : enumerate_homs(z, x)) {
              bool punctual = true;
              for (int b = 0; b < y.size && punctual; ++b)
                punctual = f.map[t.map[b]] == x.pointed();
              if (!punctual) continue;
              if (enumerate_sections(f).empty()) continue;
              std::vector<char> hit(x.size, 0);
              for (int k : kernel(g)) hit[f.map[k]] = 1;
              for (int v = 0; v < x.size; ++v)
                if (!hit[v]) {
                  r.status = Status::fails;
                  r.method = "bounded:punctual-span";
                  r.witness = "Z=" + z.name + ", X=" + x.name + ", g=" + hom_map_string(g) +
                              ", f=" + hom_map_string(f) + ": f(ker g) misses " +
                              x.element_names[v];
                  return;
                }
            }
      }
    }
    r.status = Status::unknown;
    r.method = "bounded:pool-exhausted";
  };
  return detail::run_engine(Property::subtractive, mode, exact, bounded);
}

// All double split epis over y with objects drawn from the pool, capped.
inline std::vector<DoubleSplitEpi> enumerate_double_split_epis(
    const FiniteAlgebra& y, const std::vector<FiniteAlgebra>& pool, size_t cap = 64) {
  std::vector<DoubleSplitEpi> out;
  auto points = enumerate_points_over(y, pool);
  for (const auto& bottom : points) {
    const auto& a = bottom.f.source;
    for (const auto& right : points) {
      const auto& cdom = right.f.source;
      for (const auto& d : pool) {
        if (!signature_compatible(d, y)) continue;
        for (const auto& fp : enumerate_homs(d, cdom)) {
          if (out.size() >= cap) return out;
          for (const auto& gp : enumerate_homs(d, a)) {
            if (compose(right.f, fp).map != compose(bottom.f, gp).map) continue;
            for (const auto& sp : enumerate_sections(fp)) {
              if (compose(gp, sp).map != compose(bottom.s, right.f).map) continue;
              for (const auto& tp : enumerate_sections(gp)) {
                if (compose(fp, tp).map != compose(right.s, bottom.f).map) continue;
                if (compose(sp, right.s).map != compose(tp, bottom.s).map) continue;
                out.push_back(make_double_split_epi({fp, sp}, {gp, tp}, bottom, right));
                if (out.size() >= cap) return out;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

inline PropertyRecord check_maltsev_object(const FiniteAlgebra& y, Mode mode,
                                           const std::vector<FiniteAlgebra>& pool) {
  detail::EngineCtx c{y, mode, pool};
  auto exact = [&](PropertyRecord& r) { return detail::exact_by_group(c, r); };
  auto bounded = [&](PropertyRecord& r) {
    r.bound = static_cast<long long>(pool.size());
    auto points = enumerate_points_over(y, pool);
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = 0; j < points.size(); ++j) {
        const auto& p1 = points[i];  // (f, s): A -> Y
        const auto& p2 = points[j];  // (g, t): C -> Y
        auto pb = pullback(p1.f, p2.f);
        Hom u = pairing_into_pullback(pb, identity_hom(p1.f.source), compose(p2.s, p1.f));
        Hom v = pairing_into_pullback(pb, compose(p1.s, p2.f), identity_hom(p2.f.source));
        auto jse = jointly_strongly_epimorphic({u, v});
        if (!jse.jse) {
          r.status = Status::fails;
          r.method = "bounded:point-pair";
          r.witness = "points " + p1.f.source.name + ", " + p2.f.source.name +
                      " over " + y.name + ": sections generate only " +
                      element_set_string(pb.algebra, jse.closure.elements);
          return;
        }
      }
    for (const auto& d : enumerate_double_split_epis(y, pool)) {
      auto rp = is_regular_pushout({d.top.f, d.left.f, d.right.f, d.bottom.f});
      if (!rp.regular) {
        r.status = Status::fails;
        r.method = "bounded:double-split-epi";
        r.witness = "double split epi with apex " + d.top.f.source.name +
                    " is not a regular pushout";
        return;
      }
    }
    r.status = Status::unknown;
    r.method = "bounded:pool-exhausted";
  };
  return detail::run_engine(Property::maltsev, mode, exact, bounded);
}

inline PropertyRecord check_protomodular_object(const FiniteAlgebra& y, Mode mode,
                                                const std::vector<FiniteAlgebra>& pool) {
  detail::EngineCtx c{y, mode, pool};
  auto exact = [&](PropertyRecord& r) { return detail::exact_by_group(c, r); };
  auto bounded = [&](PropertyRecord& r) {
    r.bound = static_cast<long long>(pool.size());
    auto points = enumerate_points_over(y, pool);
    size_t idx = 0;
    for (const auto& p : points) {
      auto sv = is_stably_strong(p, pool);
      std::string label = "point#" + std::to_string(idx++) + " " + p.f.source.name + " -> " +
                          y.name + " s=" + hom_map_string(p.s);
      if (sv.status == StableStatus::falsified) {
        r.status = Status::fails;
        r.method = "bounded:point-falsified";
        r.witness = label + ": pullback along g=" +
                    (sv.along ? hom_map_string(*sv.along) : std::string("?")) +
                    " gives proper subalgebra";
        r.notes.push_back(label + ": falsified");
        return;
      }
      r.notes.push_back(label + ": " +
                        (sv.status == StableStatus::certified ? "certified(" + sv.method + ")"
                                                              : "unknown-at-pool"));
    }
    r.status = Status::unknown;
    r.method = "bounded:pool-exhausted";
  };
  return detail::run_engine(Property::protomodular, mode, exact, bounded);
}

// ---------------------------------------------------------------------------
// Lazy-monoid classification (normal-form arguments plus bounded searches).

struct LazyGroupVerdict {
  Status status = Status::unknown;
  std::string witness;
};

// Group test on a lazy monoid.  Bicyclic: exact failure at x, since w * x has
// normal form y^a x^(b+1) and is never the unit.  Free products: a naturals
// letter can never cancel (values only add), so it is an exact failure; if
// every finite-component letter has an inverse within the bound the whole
// monoid is a group (products of invertibles), otherwise unknown at bound.
inline LazyGroupVerdict is_group_lazy(const LazyMonoid& m, long long bound) {
  if (m.presentation == Presentation::bicyclic) return {Status::fails, "x"};
  for (int tag = 0; tag < m.tag_count(); ++tag)
    if (m.tag_is_naturals(tag)) return {Status::fails, word_to_string(m, {{{tag, 1}}})};
  auto words = enumerate_words(m, bound);
  for (int tag = 0; tag < m.tag_count(); ++tag) {
    const auto& comp = m.components[tag];
    for (int e = 0; e < comp.size; ++e) {
      if (e == comp.pointed()) continue;
      ReducedWord w{{{tag, e}}};
      bool inv = false;
      for (const auto& cand : words)
        if (multiply_words(m, w, cand).letters.empty() &&
            multiply_words(m, cand, w).letters.empty()) {
          inv = true;
          break;
        }
      if (!inv) return {Status::unknown, word_to_string(m, w)};
    }
  }
  return {Status::holds, ""};
}

struct LazyGregariousVerdict {
  Status status = Status::unknown;
  std::string witness;
  std::vector<std::pair<ReducedWord, ReducedWord>> sandwich;  // parallel to checked
  std::vector<ReducedWord> checked;
};

// Bicyclic: exact via the normal form, u = x^n, v = y^m sandwiches y^n x^m;
// the box n, m <= bound is checked defensively through multiply_words.
// Free products: witnesses searched within the bound; success over the
// sample is not exhaustive, so the verdict stays unknown.
inline LazyGregariousVerdict is_gregarious_lazy(const LazyMonoid& m, long long bound) {
  LazyGregariousVerdict v;
  if (m.presentation == Presentation::bicyclic) {
    for (long long n = 0; n <= bound; ++n)
      for (long long k = 0; k <= bound; ++k) {
        ReducedWord y;
        if (n) y.letters.push_back({0, n});
        if (k) y.letters.push_back({1, k});
        ReducedWord u, w;
        if (n) u.letters.push_back({1, n});
        if (k) w.letters.push_back({0, k});
        if (!multiply_words(m, multiply_words(m, u, y), w).letters.empty()) {
          v.status = Status::fails;  // unreachable; would falsify the library
          v.witness = word_to_string(m, y);
          return v;
        }
        v.checked.push_back(y);
        v.sandwich.emplace_back(u, w);
      }
    v.status = Status::holds;
    return v;
  }
  auto words = enumerate_words(m, bound);
  for (const auto& y : words) {
    bool found = false;
    for (const auto& u : words) {
      auto uy = multiply_words(m, u, y);
      if (word_weight(m, uy) > 2 * bound) continue;
      for (const auto& w : words)
        if (multiply_words(m, uy, w).letters.empty()) {
          v.checked.push_back(y);
          v.sandwich.emplace_back(u, w);
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) {
      v.status = Status::unknown;
      v.witness = word_to_string(m, y);
      return v;
    }
  }
  v.status = Status::unknown;  // witnessed within bound only
  return v;
}

// ---------------------------------------------------------------------------
// Report assembly.

inline ClassificationReport classify_finite(const FiniteAlgebra& y, Mode mode,
                                            const std::vector<FiniteAlgebra>& pool) {
  ClassificationReport rep;
  rep.object_name = y.name;
  rep.records.push_back(check_unital_object(y, mode, pool));
  rep.records.push_back(check_subtractive_object(y, mode, pool));
  rep.records.push_back(check_strongly_unital_object(y, mode, pool));
  rep.records.push_back(check_maltsev_object(y, mode, pool));
  rep.records.push_back(check_protomodular_object(y, mode, pool));
  return rep;
}

inline ClassificationReport classify_lazy(const LazyMonoid& m, Mode mode, long long bound) {
  ClassificationReport rep;
  rep.object_name = m.name;
  auto push = [&](Property p, Status st, std::string method, std::string witness) {
    PropertyRecord r;
    r.property = p;
    r.status = st;
    r.method = std::move(method);
    r.witness = std::move(witness);
    if (r.method.rfind("bounded:", 0) == 0 || st == Status::unknown) r.bound = bound;
    rep.records.push_back(std::move(r));
  };
  if (mode == Mode::bounded) {
    // No finite pool machinery applies to a lazy carrier.
    for (auto p : all_properties)
      push(p, Status::unknown, "bounded:unsupported-lazy", "");
    return rep;
  }
  push(Property::unital, Status::holds, "exact:jonsson-tarski", "");
  auto greg = is_gregarious_lazy(m, bound);
  std::string greg_method = m.presentation == Presentation::bicyclic
                                ? "exact:gregarious-normal-form"
                                : "bounded:gregarious-sample";
  push(Property::subtractive, greg.status, greg_method, greg.witness);
  push(Property::strongly_unital, greg.status, greg_method, greg.witness);
  auto grp = is_group_lazy(m, bound);
  std::string grp_method = grp.status == Status::unknown ? "bounded:inverse-search"
                                                         : "exact:group-normal-form";
  push(Property::maltsev, grp.status, grp_method, grp.witness);
  push(Property::protomodular, grp.status, grp_method, grp.witness);
  return rep;
}

inline ClassificationReport classify_object(const Algebra& a, Mode mode,
                                            const std::vector<FiniteAlgebra>* pool = nullptr,
                                            long long lazy_bound = 10) {
  if (std::holds_alternative<FiniteAlgebra>(a)) {
    const auto& y = std::get<FiniteAlgebra>(a);
    auto def = pool ? std::vector<FiniteAlgebra>{} : default_pool(y.kind);
    return classify_finite(y, mode, pool ? *pool : def);
  }
  return classify_lazy(std::get<LazyMonoid>(a), mode, lazy_bound);
}

inline std::vector<ClassificationReport> classify_table(
    const std::vector<Algebra>& objects, Mode mode,
    const std::vector<FiniteAlgebra>* pool = nullptr, long long lazy_bound = 10) {
  std::vector<ClassificationReport> out;
  out.reserve(objects.size());
  for (const auto& a : objects) out.push_back(classify_object(a, mode, pool, lazy_bound));
  return out;
}

// protomodular => maltsev => strongly-unital; strongly-unital <=> unital and
// subtractive.  unknown entries are wildcards; definite entries must fit.
inline bool chain_consistent(const ClassificationReport& rep, std::string* why = nullptr) {
  auto st = [&](Property p) { return rep.record(p).status; };
  auto fail = [&](const char* msg) {
    if (why) *why = rep.object_name + ": " + msg;
    return false;
  };
  if (st(Property::protomodular) == Status::holds && st(Property::maltsev) == Status::fails)
    return fail("protomodular holds but maltsev fails");
  if (st(Property::maltsev) == Status::holds && st(Property::strongly_unital) == Status::fails)
    return fail("maltsev holds but strongly-unital fails");
  if (st(Property::strongly_unital) == Status::holds &&
      (st(Property::unital) == Status::fails || st(Property::subtractive) == Status::fails))
    return fail("strongly-unital holds but a conjunct fails");
  if (st(Property::unital) == Status::holds && st(Property::subtractive) == Status::holds &&
      st(Property::strongly_unital) == Status::fails)
    return fail("unital and subtractive hold but strongly-unital fails");
  return true;
}

// ---------------------------------------------------------------------------
// Coproduct-based bounded checks.

struct PmViaSumResult {
  bool covered = false;     // all words of weight <= bound/2 generated
  long long bound = 0;
  ReducedWord first_missing;
  size_t kernel_words = 0;
  size_t closure_words = 0;
};

// The canonical point (<f, 1_Y>: X + Y -> Y, right injection) truncated at a
// word-weight bound: close the bounded kernel together with the section image
// under multiplication (discarding words over the bound) and test coverage of
// all words of weight <= bound/2.  The halved cover bound keeps the verdict
// meaningful: a product of two covered words stays inside the closure bound.
inline PmViaSumResult check_pm_via_sum(const FiniteAlgebra& x, const Hom& f, long long bound) {
  if (!kind_is_monoidal(x.kind)) throw input_error("check_pm_via_sum: monoid kinds only");
  if (f.source != x) throw input_error("check_pm_via_sum: f must start at X");
  const FiniteAlgebra& y = f.target;
  auto xy = free_product({x, y}, false, x.name + " + " + y.name);
  std::vector<int> idmap(y.size);
  for (int i = 0; i < y.size; ++i) idmap[i] = i;
  auto fold = make_fold(xy, y, {f.map, idmap});
  PmViaSumResult res;
  res.bound = bound;
  std::set<ReducedWord> closure;
  std::vector<ReducedWord> queue;
  auto add = [&](const ReducedWord& w) {
    if (word_weight(xy, w) > bound) return;
    if (closure.insert(w).second) queue.push_back(w);
  };
  for (const auto& w : enumerate_words(xy, bound))
    if (fold_word(xy, fold, w) == y.pointed()) {
      ++res.kernel_words;
      add(w);
    }
  for (int e = 0; e < y.size; ++e) add(injection_word(xy, 1, e));
  for (size_t h = 0; h < queue.size(); ++h) {
    auto cur = queue[h];  // by value: queue may reallocate
    for (size_t k = 0; k < queue.size(); ++k) {
      add(multiply_words(xy, cur, queue[k]));
      add(multiply_words(xy, queue[k], cur));
    }
  }
  res.closure_words = closure.size();
  res.covered = true;
  for (const auto& w : enumerate_words(xy, bound / 2))
    if (!closure.count(w)) {
      res.covered = false;
      res.first_missing = w;
      break;
    }
  return res;
}

struct ProbeEntry {
  ReducedWord left;   // in M + N
  ReducedWord right;  // in M + M
  int parent_a = -1;  // indices of the factors; -1 for generators
  int parent_b = -1;
};

struct ProbeResult {
  bool generated = false;  // absent-at-bound otherwise; never "fails"
  long long bound = 0;
  std::vector<ProbeEntry> entries;  // discovery order
  int target_index = -1;
  ReducedWord target_left, target_right;
};

// Bounded pullback of <1_M 1_M>: M+M -> M along the map M+N -> M sending the
// naturals generator to m.  Generators are the images of the two induced
// sections on all words within the bound; closure is componentwise
// multiplication, discarding pairs with either side over the bound.  Reports
// whether the pair (naturals generator, second-copy m) is reached.
inline ProbeResult maltsev_freeproduct_probe(const FiniteAlgebra& m, int elem, long long bound) {
  if (!kind_is_monoidal(m.kind)) throw input_error("probe: monoid kinds only");
  if (elem < 0 || elem >= m.size) throw input_error("probe: element out of range");
  if (elem == m.pointed()) throw input_error("probe: element must differ from the unit");
  auto mn = free_product({m}, true, m.name + " + N");
  auto mm = free_product({m, m}, false, m.name + " + " + m.name);
  std::vector<int> idmap(m.size);
  for (int i = 0; i < m.size; ++i) idmap[i] = i;
  auto fold_mn = make_fold(mn, m, {idmap}, elem);
  auto fold_mm = make_fold(mm, m, {idmap, idmap});

  ProbeResult res;
  res.bound = bound;
  res.target_left = ReducedWord{{{1, 1}}};                      // naturals generator
  res.target_right = injection_word(mm, 1, elem);               // second-copy m
  std::map<std::pair<ReducedWord, ReducedWord>, int> seen;
  auto add = [&](ReducedWord l, ReducedWord r, int pa, int pb) -> int {
    if (word_weight(mn, l) > bound || word_weight(mm, r) > bound) return -1;
    auto key = std::make_pair(l, r);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    int idx = static_cast<int>(res.entries.size());
    seen.emplace(std::move(key), idx);
    res.entries.push_back({std::move(l), std::move(r), pa, pb});
    return idx;
  };
  for (const auto& u : enumerate_words(mn, bound))
    add(u, injection_word(mm, 0, fold_word(mn, fold_mn, u)), -1, -1);
  for (const auto& w : enumerate_words(mm, bound))
    add(injection_word(mn, 0, fold_word(mm, fold_mm, w)), w, -1, -1);
  for (size_t h = 0; h < res.entries.size(); ++h)
    for (size_t k = 0; k < res.entries.size(); ++k) {
      auto l1 = multiply_words(mn, res.entries[h].left, res.entries[k].left);
      auto r1 = multiply_words(mm, res.entries[h].right, res.entries[k].right);
      add(std::move(l1), std::move(r1), static_cast<int>(h), static_cast<int>(k));
    }
  auto it = seen.find(std::make_pair(res.target_left, res.target_right));
  if (it != seen.end()) {
    res.generated = true;
    res.target_index = it->second;
  }
  return res;
}

}  // namespace algcat
