#pragma once

// Finite limits and generation: products, subalgebras, pullbacks, kernel
// pairs, generated subalgebras with derivation traces, jointly-strongly-
// epimorphic cospans, reflexive relations, and monoid coproducts.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algcat/core.hpp"
#include "algcat/hom.hpp"
#include "algcat/words.hpp"

namespace algcat {

struct ProductResult {
  FiniteAlgebra algebra;  // element (i, j) at index i * |B| + j, named "(a,b)"
  Hom to_first;
  Hom to_second;
};

inline ProductResult product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!signature_compatible(a, b))
    throw input_error("product: incompatible signatures " + a.name + ", " + b.name);
  FiniteAlgebra p;
  p.kind = a.kind;
  p.name = a.name + " x " + b.name;
  p.size = a.size * b.size;
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j)
      p.element_names.push_back("(" + a.element_names[i] + "," + b.element_names[j] + ")");
  for (size_t t = 0; t < a.tables.size(); ++t) {
    OpTable tab{a.tables[t].op, std::vector<int>(static_cast<size_t>(p.size) * p.size)};
    for (int i = 0; i < p.size; ++i)
      for (int j = 0; j < p.size; ++j) {
        int ia = i / b.size, ib = i % b.size, ja = j / b.size, jb = j % b.size;
        tab.cells[static_cast<size_t>(i) * p.size + j] =
            a.op(static_cast<int>(t), ia, ja) * b.size + b.op(static_cast<int>(t), ib, jb);
      }
    p.tables.push_back(std::move(tab));
  }
  for (const auto& ca : a.constants)
    if (auto cb = b.constant(ca.name))
      p.constants.push_back({ca.name, ca.element * b.size + *cb});
  require_valid(p);
  std::vector<int> m1(p.size), m2(p.size);
  for (int i = 0; i < p.size; ++i) {
    m1[i] = i / b.size;
    m2[i] = i % b.size;
  }
  Hom pr1 = make_hom(p, a, std::move(m1));
  Hom pr2 = make_hom(p, b, std::move(m2));
  return {std::move(p), std::move(pr1), std::move(pr2)};
}

// <f, g>: X -> A x B for f: X -> A, g: X -> B.
inline Hom pairing(const ProductResult& prod, const Hom& f, const Hom& g) {
  if (f.source != g.source) throw input_error("pairing: legs have different sources");
  if (f.target != prod.to_first.target || g.target != prod.to_second.target)
    throw input_error("pairing: legs do not match the product factors");
  int bs = prod.to_second.target.size;
  std::vector<int> map(f.source.size);
  for (int x = 0; x < f.source.size; ++x) map[x] = f.map[x] * bs + g.map[x];
  return make_hom(f.source, prod.algebra, std::move(map));
}

struct SubalgebraResult {
  FiniteAlgebra algebra;
  Hom inclusion;
};

// Restrict to a subset that contains the pointed constant and is closed under
// the operations; optional constants survive only when contained.
inline SubalgebraResult subalgebra_restrict(const FiniteAlgebra& a, std::vector<int> subset,
                                            const std::string& name = "") {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int x : subset)
    if (x < 0 || x >= a.size) throw input_error("subalgebra_restrict: index out of range");
  std::vector<int> pos(a.size, -1);
  for (size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  if (pos[a.pointed()] < 0)
    throw input_error("subalgebra_restrict: subset misses the pointed constant");
  FiniteAlgebra s;
  s.kind = a.kind;
  s.name = name.empty() ? a.name + " restricted" : name;
  s.size = static_cast<int>(subset.size());
  for (int x : subset) s.element_names.push_back(a.element_names[x]);
  for (size_t t = 0; t < a.tables.size(); ++t) {
    OpTable tab{a.tables[t].op, {}};
    tab.cells.reserve(subset.size() * subset.size());
    for (int x : subset)
      for (int y : subset) {
        int r = a.op(static_cast<int>(t), x, y);
        if (pos[r] < 0)
          throw input_error("subalgebra_restrict: subset not closed under " + a.tables[t].op +
                            " at (" + a.element_names[x] + "," + a.element_names[y] + ")");
        tab.cells.push_back(pos[r]);
      }
    s.tables.push_back(std::move(tab));
  }
  for (const auto& c : a.constants)
    if (pos[c.element] >= 0) s.constants.push_back({c.name, pos[c.element]});
  require_valid(s);
  Hom inc = make_hom(s, a, std::move(subset));
  return {std::move(s), std::move(inc)};
}

struct ClosureStep {
  int result;  // derived element
  int op;      // table index
  int lhs;
  int rhs;
};

struct ClosureResult {
  std::vector<int> elements;        // the generated subalgebra, ascending
  std::vector<ClosureStep> steps;   // one derivation per non-seed element
  bool is_all = false;
};

// Least subalgebra containing the seeds (the pointed constant is always a
// seed).  Scan order: repeat passes over operations in signature order and
// element pairs in ascending index order until a pass adds nothing; each new
// element records the first derivation that produced it.
inline ClosureResult generated_subalgebra(const FiniteAlgebra& a, const std::vector<int>& seeds) {
  std::vector<char> in(a.size, 0);
  ClosureResult r;
  in[a.pointed()] = 1;
  for (int s : seeds) {
    if (s < 0 || s >= a.size) throw input_error("generated_subalgebra: seed out of range");
    in[s] = 1;
  }
  int nops = static_cast<int>(a.tables.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < nops; ++t)
      for (int i = 0; i < a.size; ++i) {
        if (!in[i]) continue;
        for (int j = 0; j < a.size; ++j) {
          if (!in[j]) continue;
          int v = a.op(t, i, j);
          if (!in[v]) {
            in[v] = 1;
            r.steps.push_back({v, t, i, j});
            changed = true;
          }
        }
      }
  }
  for (int i = 0; i < a.size; ++i)
    if (in[i]) r.elements.push_back(i);
  r.is_all = static_cast<int>(r.elements.size()) == a.size;
  return r;
}

struct Cospan {
  Hom left;
  Hom right;
};

inline Cospan make_cospan(Hom left, Hom right) {
  if (left.target != right.target) throw input_error("cospan: targets differ");
  return {std::move(left), std::move(right)};
}

struct JseResult {
  bool jse = false;
  ClosureResult closure;  // closure of the two images; proper when !jse
};

// A cospan is jointly strongly epimorphic here iff the images of its legs
// generate the codomain; the closure is the least subobject both factor
// through, so a proper closure is exactly a refuting subobject.
inline JseResult jointly_strongly_epimorphic(const Cospan& c) {
  std::vector<int> seeds;
  for (int v : c.left.map) seeds.push_back(v);
  for (int v : c.right.map) seeds.push_back(v);
  JseResult r;
  r.closure = generated_subalgebra(c.left.target, seeds);
  r.jse = r.closure.is_all;
  return r;
}

struct PullbackResult {
  FiniteAlgebra algebra;  // pairs (a, c) with f(a) = g(c), lex order, named "(a,c)"
  Hom to_first;           // (a, c) -> a
  Hom to_second;          // (a, c) -> c
  std::vector<std::pair<int, int>> pairs;

  int index_of(int a, int c) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, c));
    if (it == pairs.end() || *it != std::make_pair(a, c)) return -1;
    return static_cast<int>(it - pairs.begin());
  }
};

inline PullbackResult pullback(const Hom& f, const Hom& g) {
  if (f.target != g.target) throw input_error("pullback: codomains differ");
  auto prod = product(f.source, g.source);
  std::vector<int> subset;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.source.size; ++a)
    for (int c = 0; c < g.source.size; ++c)
      if (f.map[a] == g.map[c]) {
        subset.push_back(a * g.source.size + c);
        pairs.emplace_back(a, c);
      }
  auto sub = subalgebra_restrict(prod.algebra, subset,
                                 "(" + f.source.name + " x " + g.source.name + " over " +
                                     f.target.name + ")");
  Hom p1 = compose(prod.to_first, sub.inclusion);
  Hom p2 = compose(prod.to_second, sub.inclusion);
  return {std::move(sub.algebra), std::move(p1), std::move(p2), std::move(pairs)};
}

// <u, v>: X -> P for u: X -> A, v: X -> C landing in the pullback.
inline Hom pairing_into_pullback(const PullbackResult& pb, const Hom& u, const Hom& v) {
  if (u.source != v.source) throw input_error("pairing: legs have different sources");
  std::vector<int> map(u.source.size);
  for (int x = 0; x < u.source.size; ++x) {
    int idx = pb.index_of(u.map[x], v.map[x]);
    if (idx < 0) throw input_error("pairing: legs do not equalize over the pullback base");
    map[x] = idx;
  }
  return make_hom(u.source, pb.algebra, std::move(map));
}

// Relation on base x base; entries are subalgebra membership of pairs when
// produced by kernel_pair/reflexive_relations, but composites are plain
// boolean matrices.
struct Relation {
  FiniteAlgebra base;
  std::vector<char> mat;  // mat[a * size + c]

  bool contains(int a, int c) const { return mat[static_cast<size_t>(a) * base.size + c]; }
};

inline Relation kernel_pair(const Hom& f) {
  Relation r{f.source, std::vector<char>(static_cast<size_t>(f.source.size) * f.source.size, 0)};
  for (int a = 0; a < f.source.size; ++a)
    for (int c = 0; c < f.source.size; ++c)
      if (f.map[a] == f.map[c]) r.mat[static_cast<size_t>(a) * f.source.size + c] = 1;
  return r;
}

inline bool is_reflexive(const Relation& r) {
  for (int a = 0; a < r.base.size; ++a)
    if (!r.contains(a, a)) return false;
  return true;
}

inline bool is_symmetric(const Relation& r) {
  for (int a = 0; a < r.base.size; ++a)
    for (int c = a + 1; c < r.base.size; ++c)
      if (r.contains(a, c) != r.contains(c, a)) return false;
  return true;
}

inline bool is_transitive(const Relation& r) {
  int n = r.base.size;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!r.contains(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (r.contains(b, c) && !r.contains(a, c)) return false;
    }
  return true;
}

// (a, c) in R o S iff there is b with (a, b) in R and (b, c) in S.
inline Relation relation_compose(const Relation& r, const Relation& s) {
  if (r.base != s.base) throw input_error("relation_compose: bases differ");
  int n = r.base.size;
  Relation out{r.base, std::vector<char>(static_cast<size_t>(n) * n, 0)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!r.contains(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (s.contains(b, c)) out.mat[static_cast<size_t>(a) * n + c] = 1;
    }
  return out;
}

inline bool relations_commute(const Relation& r, const Relation& s) {
  return relation_compose(r, s).mat == relation_compose(s, r).mat;
}

// All subalgebras of a (as ascending index sets), smallest-first breadth
// search over the closure lattice; capped at max_count.
inline std::vector<std::vector<int>> enumerate_subalgebras(const FiniteAlgebra& a,
                                                           size_t max_count = 100000) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  auto push = [&](const std::vector<int>& seeds) {
    auto cl = generated_subalgebra(a, seeds).elements;
    if (seen.insert(cl).second) queue.push_back(cl);
  };
  push({});
  for (size_t head = 0; head < queue.size() && seen.size() < max_count; ++head) {
    auto cur = queue[head];
    for (int x = 0; x < a.size && seen.size() < max_count; ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      auto seeds = cur;
      seeds.push_back(x);
      push(seeds);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  return out;
}

// All reflexive relations on y in the subalgebra sense: subalgebras of y x y
// containing the diagonal.  Guarded to |y| <= 5.
struct ReflexiveRelationSet {
  ProductResult square;
  std::vector<Relation> relations;
  bool truncated = false;
};

inline ReflexiveRelationSet reflexive_relations(const FiniteAlgebra& y, size_t max_count = 100000) {
  if (y.size > 5)
    throw input_error("reflexive_relations: carrier larger than 5 (" + std::to_string(y.size) +
                      " elements)");
  ReflexiveRelationSet out{product(y, y), {}, false};
  const auto& sq = out.square.algebra;
  std::vector<int> diag;
  for (int i = 0; i < y.size; ++i) diag.push_back(i * y.size + i);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  auto push = [&](std::vector<int> seeds) {
    auto cl = generated_subalgebra(sq, seeds).elements;
    if (seen.insert(cl).second) queue.push_back(cl);
  };
  push(diag);
  for (size_t head = 0; head < queue.size(); ++head) {
    if (seen.size() >= max_count) {
      out.truncated = true;
      break;
    }
    auto cur = queue[head];
    for (int p = 0; p < sq.size; ++p) {
      if (std::binary_search(cur.begin(), cur.end(), p)) continue;
      auto seeds = cur;
      seeds.push_back(p);
      push(seeds);
    }
  }
  std::vector<std::vector<int>> sets(seen.begin(), seen.end());
  for (const auto& s : sets) {
    Relation r{y, std::vector<char>(static_cast<size_t>(y.size) * y.size, 0)};
    for (int p : s) r.mat[p] = 1;
    out.relations.push_back(std::move(r));
  }
  return out;
}

// Coproduct of two monoids as a lazy free product; injections are tag 0
// (left) and tag 1 (right) via inject_left/inject_right.
struct CoproductMonoid {
  LazyMonoid monoid;

  ReducedWord inject_left(int element) const { return injection_word(monoid, 0, element); }
  ReducedWord inject_right(int element) const { return injection_word(monoid, 1, element); }
};

inline CoproductMonoid coproduct_monoid(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return {free_product({a, b}, false, a.name + " + " + b.name)};
}

}  // namespace algcat
