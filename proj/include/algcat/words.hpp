#pragma once

// Normal-form presentations of infinite monoids: the bicyclic monoid and
// free products of finite monoids (optionally with one copy of (N, +, 0)).
// Elements are reduced words; equality of reduced words decides equality.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "algcat/core.hpp"

namespace algcat {

// One syllable of a reduced word.  For a finite component, value is a
// non-unit element index; for a naturals component (and for both bicyclic
// generators), value is an exponent >= 1.
struct Letter {
  int tag = 0;
  long long value = 0;
  auto operator<=>(const Letter&) const = default;
};

struct ReducedWord {
  std::vector<Letter> letters;  // empty word = identity
  auto operator<=>(const ReducedWord&) const = default;
};

enum class Presentation { bicyclic, free_product };

// bicyclic: tags 0 ("y") and 1 ("x"), normal form y^n x^m, no components.
// free_product: one tag per finite component, plus a final naturals tag when
// with_naturals is set; normal form = alternating-tag words.
struct LazyMonoid {
  Presentation presentation = Presentation::free_product;
  std::string name;
  std::vector<FiniteAlgebra> components;
  bool with_naturals = false;

  int tag_count() const {
    if (presentation == Presentation::bicyclic) return 2;
    return static_cast<int>(components.size()) + (with_naturals ? 1 : 0);
  }

  bool tag_is_naturals(int t) const {
    if (presentation == Presentation::bicyclic) return true;
    return with_naturals && t == static_cast<int>(components.size());
  }
};

inline LazyMonoid bicyclic_monoid() {
  LazyMonoid m;
  m.presentation = Presentation::bicyclic;
  m.name = "bicyclic";
  return m;
}

inline LazyMonoid free_product(std::vector<FiniteAlgebra> parts, bool with_naturals,
                               std::string name) {
  LazyMonoid m;
  m.presentation = Presentation::free_product;
  m.name = std::move(name);
  m.with_naturals = with_naturals;
  for (auto& p : parts) {
    if (!kind_is_monoidal(p.kind))
      throw input_error("free_product: component '" + p.name + "' is not a monoid");
    require_valid(p);
    m.components.push_back(std::move(p));
  }
  if (m.components.empty() && !with_naturals)
    throw input_error("free_product: no components");
  return m;
}

inline bool letter_ok(const LazyMonoid& m, const Letter& l) {
  if (l.tag < 0 || l.tag >= m.tag_count()) return false;
  if (m.tag_is_naturals(l.tag)) return l.value >= 1;
  const auto& c = m.components[l.tag];
  return l.value >= 0 && l.value < c.size && l.value != c.pointed();
}

inline bool is_reduced(const LazyMonoid& m, const ReducedWord& w) {
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (!letter_ok(m, w.letters[i])) return false;
    if (i > 0) {
      if (m.presentation == Presentation::bicyclic) {
        if (w.letters[i].tag <= w.letters[i - 1].tag) return false;  // y before x
      } else if (w.letters[i].tag == w.letters[i - 1].tag) {
        return false;
      }
    }
  }
  return true;
}

inline ReducedWord identity_word() { return {}; }

// Word of the canonical injection of one component element (or of n in the
// naturals component).  Units map to the empty word.
inline ReducedWord injection_word(const LazyMonoid& m, int tag, long long value) {
  if (m.presentation == Presentation::bicyclic)
    throw input_error("injection_word: bicyclic monoid is not a free product");
  if (tag < 0 || tag >= m.tag_count()) throw input_error("injection_word: bad tag");
  if (m.tag_is_naturals(tag)) {
    if (value < 0) throw input_error("injection_word: negative natural");
    if (value == 0) return {};
    return {{{tag, value}}};
  }
  const auto& c = m.components[tag];
  if (value < 0 || value >= c.size) throw input_error("injection_word: bad element");
  if (value == c.pointed()) return {};
  return {{{tag, value}}};
}

inline long long word_weight(const LazyMonoid& m, const ReducedWord& w) {
  long long s = 0;
  for (const auto& l : w.letters) s += m.tag_is_naturals(l.tag) ? l.value : 1;
  return s;
}

namespace detail {

// Product of two same-tag letters; nullopt when they cancel to the unit.
inline std::optional<Letter> combine(const LazyMonoid& m, const Letter& a, const Letter& b) {
  if (m.tag_is_naturals(a.tag)) return Letter{a.tag, a.value + b.value};
  const auto& c = m.components[a.tag];
  int mul = c.op_index("mul");
  int r = c.op(mul, static_cast<int>(a.value), static_cast<int>(b.value));
  if (r == c.pointed()) return std::nullopt;
  return Letter{a.tag, static_cast<long long>(r)};
}

}  // namespace detail

inline ReducedWord multiply_words(const LazyMonoid& m, const ReducedWord& a,
                                  const ReducedWord& b) {
  if (!is_reduced(m, a) || !is_reduced(m, b))
    throw input_error(m.name + ": multiply_words on non-reduced word");
  if (m.presentation == Presentation::bicyclic) {
    // (y^n1 x^m1)(y^n2 x^m2) = y^(n1+n2-k) x^(m1+m2-k), k = min(m1, n2).
    long long n1 = 0, m1 = 0, n2 = 0, m2 = 0;
    for (const auto& l : a.letters) (l.tag == 0 ? n1 : m1) = l.value;
    for (const auto& l : b.letters) (l.tag == 0 ? n2 : m2) = l.value;
    long long k = std::min(m1, n2);
    ReducedWord r;
    if (n1 + n2 - k > 0) r.letters.push_back({0, n1 + n2 - k});
    if (m1 + m2 - k > 0) r.letters.push_back({1, m1 + m2 - k});
    return r;
  }
  // Concatenate with cascading merges at the seam.
  ReducedWord r = a;
  for (const auto& lb : b.letters) {
    Letter cur = lb;
    bool consumed = false;
    while (!r.letters.empty() && r.letters.back().tag == cur.tag) {
      auto merged = detail::combine(m, r.letters.back(), cur);
      r.letters.pop_back();
      if (!merged) {
        consumed = true;  // cancelled; neighbours may merge with later letters
        break;
      }
      cur = *merged;
      break;  // a merged letter cannot match the new neighbour's tag
    }
    if (!consumed) r.letters.push_back(cur);
  }
  return r;
}

// All reduced words of weight <= max_weight (naturals letters weigh their
// value, finite letters weigh 1), ordered by weight then lexicographically by
// (tag, value) sequences.
inline std::vector<ReducedWord> enumerate_words(const LazyMonoid& m, long long max_weight) {
  if (max_weight < 0) throw input_error("enumerate_words: negative bound");
  std::vector<ReducedWord> out;
  ReducedWord cur;
  auto extend = [&](auto&& self, long long remaining) -> void {
    out.push_back(cur);
    for (int tag = 0; tag < m.tag_count(); ++tag) {
      if (!cur.letters.empty()) {
        int last = cur.letters.back().tag;
        if (m.presentation == Presentation::bicyclic ? tag <= last : tag == last) continue;
      }
      if (m.tag_is_naturals(tag)) {
        for (long long v = 1; v <= remaining; ++v) {
          cur.letters.push_back({tag, v});
          self(self, remaining - v);
          cur.letters.pop_back();
        }
      } else if (remaining >= 1) {
        const auto& c = m.components[tag];
        for (int e = 0; e < c.size; ++e) {
          if (e == c.pointed()) continue;
          cur.letters.push_back({tag, e});
          self(self, remaining - 1);
          cur.letters.pop_back();
        }
      }
    }
  };
  extend(extend, max_weight);
  std::sort(out.begin(), out.end(), [&](const ReducedWord& x, const ReducedWord& y) {
    auto wx = word_weight(m, x), wy = word_weight(m, y);
    if (wx != wy) return wx < wy;
    return x < y;
  });
  return out;
}

// Universal map out of a free product into a finite monoid: component_maps[k]
// sends component k elementwise, nat_base is the image of 1 in the naturals
// component (if any).  Each component map must be a monoid homomorphism.
struct Fold {
  FiniteAlgebra target;
  std::vector<std::vector<int>> component_maps;
  int nat_base = -1;
};

inline Fold make_fold(const LazyMonoid& m, FiniteAlgebra target,
                      std::vector<std::vector<int>> component_maps, int nat_base = -1) {
  if (m.presentation == Presentation::bicyclic)
    throw input_error("make_fold: bicyclic monoid is not a free product");
  if (!kind_is_monoidal(target.kind)) throw input_error("make_fold: target is not a monoid");
  if (component_maps.size() != m.components.size())
    throw input_error("make_fold: one map per component required");
  int mul = target.op_index("mul");
  for (size_t k = 0; k < m.components.size(); ++k) {
    const auto& c = m.components[k];
    const auto& f = component_maps[k];
    if (static_cast<int>(f.size()) != c.size)
      throw input_error("make_fold: map " + std::to_string(k) + " has wrong size");
    for (int v : f)
      if (v < 0 || v >= target.size) throw input_error("make_fold: map value out of range");
    if (f[c.pointed()] != target.pointed())
      throw input_error("make_fold: map " + std::to_string(k) + " breaks the unit");
    int cm = c.op_index("mul");
    for (int x = 0; x < c.size; ++x)
      for (int y = 0; y < c.size; ++y)
        if (f[c.op(cm, x, y)] != target.op(mul, f[x], f[y]))
          throw input_error("make_fold: map " + std::to_string(k) + " is not a homomorphism");
  }
  if (m.with_naturals) {
    if (nat_base < 0 || nat_base >= target.size)
      throw input_error("make_fold: naturals base image required");
  } else {
    nat_base = -1;
  }
  return {std::move(target), std::move(component_maps), nat_base};
}

inline int fold_word(const LazyMonoid& m, const Fold& f, const ReducedWord& w) {
  if (!is_reduced(m, w)) throw input_error("fold_word: non-reduced word");
  int mul = f.target.op_index("mul");
  int acc = f.target.pointed();
  for (const auto& l : w.letters) {
    int img;
    if (m.tag_is_naturals(l.tag)) {
      img = f.target.pointed();
      for (long long i = 0; i < l.value; ++i) img = f.target.op(mul, img, f.nat_base);
    } else {
      img = f.component_maps[l.tag][static_cast<int>(l.value)];
    }
    acc = f.target.op(mul, acc, img);
  }
  return acc;
}

inline std::string word_to_string(const LazyMonoid& m, const ReducedWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ".";
    if (m.presentation == Presentation::bicyclic) {
      s += (l.tag == 0 ? "y" : "x");
      if (l.value > 1) s += "^" + std::to_string(l.value);
    } else if (m.tag_is_naturals(l.tag)) {
      s += "n^" + std::to_string(l.value) + "@" + std::to_string(l.tag);
    } else {
      s += m.components[l.tag].element_names[static_cast<int>(l.value)] + "@" +
           std::to_string(l.tag);
    }
  }
  return s;
}

}  // namespace algcat
