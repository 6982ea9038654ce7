#pragma once

// Homomorphisms between finite algebras of a common signature.  Morphisms
// preserve the operations and the pointed constant; a semiring's designated
// one is carried structure, not a morphism constraint.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "algcat/core.hpp"

namespace algcat {

struct Hom {
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<int> map;
  bool operator==(const Hom&) const = default;

  int operator()(int x) const { return map[x]; }
};

inline bool signature_compatible(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return kind_operations(a.kind) == kind_operations(b.kind) &&
         std::string(kind_pointed_constant(a.kind)) == kind_pointed_constant(b.kind);
}

struct HomCheck {
  bool ok = true;
  std::string what;        // "pointed constant" or the operation name
  std::vector<int> tuple;  // smallest violating source pair, empty for constants
};

// First violation in a fixed scan order: pointed constant, then each
// operation over lexicographically ordered source pairs.
inline HomCheck check_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                   const std::vector<int>& map) {
  if (!signature_compatible(a, b))
    throw input_error("hom " + a.name + " -> " + b.name + ": incompatible signatures");
  if (static_cast<int>(map.size()) != a.size)
    throw input_error("hom " + a.name + " -> " + b.name + ": map size != source size");
  for (int v : map)
    if (v < 0 || v >= b.size)
      throw input_error("hom " + a.name + " -> " + b.name + ": map value out of range");
  if (map[a.pointed()] != b.pointed()) return {false, "pointed constant", {}};
  auto ops = kind_operations(a.kind);
  for (size_t t = 0; t < ops.size(); ++t)
    for (int i = 0; i < a.size; ++i)
      for (int j = 0; j < a.size; ++j)
        if (map[a.op(static_cast<int>(t), i, j)] !=
            b.op(static_cast<int>(t), map[i], map[j]))
          return {false, ops[t], {i, j}};
  return {};
}

inline bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                            const std::vector<int>& map) {
  return check_homomorphism(a, b, map).ok;
}

inline Hom make_hom(FiniteAlgebra a, FiniteAlgebra b, std::vector<int> map) {
  auto c = check_homomorphism(a, b, map);
  if (!c.ok) {
    std::string msg = "map " + a.name + " -> " + b.name + " breaks " + c.what;
    if (!c.tuple.empty())
      msg += " at (" + a.element_names[c.tuple[0]] + "," + a.element_names[c.tuple[1]] + ")";
    throw input_error(msg);
  }
  return {std::move(a), std::move(b), std::move(map)};
}

inline Hom identity_hom(const FiniteAlgebra& a) {
  std::vector<int> map(a.size);
  for (int i = 0; i < a.size; ++i) map[i] = i;
  return {a, a, std::move(map)};
}

// Everything to the pointed constant; a homomorphism for every kind.
inline Hom constant_pointed_hom(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return make_hom(a, b, std::vector<int>(a.size, b.pointed()));
}

inline Hom compose(const Hom& g, const Hom& f) {
  if (f.target != g.source)
    throw input_error("compose: middle objects differ (" + f.target.name + " vs " +
                      g.source.name + ")");
  std::vector<int> map(f.source.size);
  for (int i = 0; i < f.source.size; ++i) map[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(map)};
}

// Preimage of the target's pointed constant, ascending.
inline std::vector<int> kernel(const Hom& h) {
  std::vector<int> k;
  int z = h.target.pointed();
  for (int i = 0; i < h.source.size; ++i)
    if (h.map[i] == z) k.push_back(i);
  return k;
}

inline std::vector<int> image(const Hom& h) {
  std::vector<int> im(h.map);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

inline bool is_surjective(const Hom& h) {
  return static_cast<int>(image(h).size()) == h.target.size;
}

inline bool is_injective(const Hom& h) {
  return static_cast<int>(image(h).size()) == h.source.size;
}

// All homomorphisms A -> B with map[i] drawn from allowed[i], by backtracking
// over source positions in index order, candidate values ascending; results
// are in lexicographic map order.
inline std::vector<Hom> enumerate_homs_restricted(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b,
                                                  const std::vector<std::vector<int>>& allowed) {
  if (!signature_compatible(a, b))
    throw input_error("enumerate_homs: incompatible signatures");
  if (static_cast<int>(allowed.size()) != a.size)
    throw input_error("enumerate_homs: one candidate set per element required");
  std::vector<Hom> out;
  std::vector<int> map(a.size, -1);
  int nops = static_cast<int>(a.tables.size());

  // Constraints decidable once positions 0..p are assigned: either the pair
  // (i,j) just became known, or its product did.
  auto consistent_at = [&](int p) {
    for (int t = 0; t < nops; ++t)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= p; ++j) {
          int r = a.op(t, i, j);
          if (r > p) continue;
          if (std::max(i, j) == p || r == p)
            if (map[r] != b.op(t, map[i], map[j])) return false;
        }
    return true;
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p == a.size) {
      out.push_back({a, b, map});
      return;
    }
    for (int v : allowed[p]) {
      if (v < 0 || v >= b.size) continue;
      if (p == a.pointed() && v != b.pointed()) continue;
      map[p] = v;
      if (consistent_at(p)) self(self, p + 1);
      map[p] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Hom> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<int> all(b.size);
  for (int i = 0; i < b.size; ++i) all[i] = i;
  return enumerate_homs_restricted(a, b, std::vector<std::vector<int>>(a.size, all));
}

// All sections of f: homomorphisms s with f(s(b)) = b for every b.
inline std::vector<Hom> enumerate_sections(const Hom& f) {
  std::vector<std::vector<int>> allowed(f.target.size);
  for (int x = 0; x < f.source.size; ++x) allowed[f.map[x]].push_back(x);
  return enumerate_homs_restricted(f.target, f.source, allowed);
}

}  // namespace algcat
