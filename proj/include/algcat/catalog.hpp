#pragma once

// Built-in algebra catalog: the small finite algebras every checker, pool and
// test draws from, plus the bicyclic monoid as the stock lazy example.

#include <string>
#include <variant>
#include <vector>

#include "algcat/core.hpp"
#include "algcat/words.hpp"

namespace algcat {

using Algebra = std::variant<FiniteAlgebra, LazyMonoid>;

inline std::string algebra_display_name(const Algebra& a) {
  if (std::holds_alternative<FiniteAlgebra>(a)) return std::get<FiniteAlgebra>(a).name;
  return std::get<LazyMonoid>(a).name;
}

namespace detail {

inline FiniteAlgebra finite(Kind kind, std::string name, std::vector<std::string> elems,
                            std::vector<OpTable> tables, std::vector<ConstantBinding> consts) {
  FiniteAlgebra a;
  a.kind = kind;
  a.name = std::move(name);
  a.element_names = std::move(elems);
  a.size = static_cast<int>(a.element_names.size());
  a.tables = std::move(tables);
  a.constants = std::move(consts);
  require_valid(a);
  return a;
}

}  // namespace detail

inline FiniteAlgebra cyclic_group(int n) {
  if (n < 1) throw input_error("cyclic_group: order must be >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = (i + j) % n;
  return detail::finite(Kind::monoid, "cyclic_group(" + std::to_string(n) + ")",
                        std::move(names), {{"mul", std::move(mul)}}, {{"unit", 0}});
}

inline FiniteAlgebra trivial_monoid() {
  return detail::finite(Kind::monoid, "trivial_monoid", {"e"}, {{"mul", {0}}}, {{"unit", 0}});
}

// Two-element monoid {1, a} with a absorbing (a*a = a).
inline FiniteAlgebra idempotent_monoid_2() {
  return detail::finite(Kind::monoid, "idempotent_monoid_2", {"1", "a"},
                        {{"mul", {0, 1, 1, 1}}}, {{"unit", 0}});
}

inline FiniteAlgebra boolean_semiring() {
  return detail::finite(Kind::semiring, "boolean_semiring", {"0", "1"},
                        {{"add", {0, 1, 1, 1}}, {"mul", {0, 0, 0, 1}}},
                        {{"zero", 0}, {"one", 1}});
}

inline FiniteAlgebra zmod_ring(int n) {
  if (n < 1) throw input_error("zmod_ring: modulus must be >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = (i + j) % n;
      mul[i * n + j] = (i * j) % n;
    }
  return detail::finite(Kind::semiring, "zmod_ring(" + std::to_string(n) + ")",
                        std::move(names), {{"add", std::move(add)}, {"mul", std::move(mul)}},
                        {{"zero", 0}, {"one", 1 % n}});
}

// {0..n} with saturating sum and product.
inline FiniteAlgebra natural_semiring_truncated(int n) {
  if (n < 1) throw input_error("natural_semiring_truncated: cap must be >= 1");
  int sz = n + 1;
  std::vector<std::string> names;
  for (int i = 0; i < sz; ++i) names.push_back(std::to_string(i));
  std::vector<int> add(sz * sz), mul(sz * sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      add[i * sz + j] = std::min(i + j, n);
      mul[i * sz + j] = std::min(i * j, n);
    }
  return detail::finite(Kind::semiring, "natural_semiring_truncated(" + std::to_string(n) + ")",
                        std::move(names), {{"add", std::move(add)}, {"mul", std::move(mul)}},
                        {{"zero", 0}, {"one", 1}});
}

// {0, a}: sub(a, 0) = a, everything else 0.
inline FiniteAlgebra subtraction_T() {
  return detail::finite(Kind::subtraction_algebra, "subtraction_T", {"0", "a"},
                        {{"sub", {0, 0, 1, 0}}}, {{"zero", 0}});
}

// {0, u, v}: sub(x, 0) = x, everything else 0.
inline FiniteAlgebra subtraction_X() {
  return detail::finite(Kind::subtraction_algebra, "subtraction_X", {"0", "u", "v"},
                        {{"sub", {0, 0, 0, 1, 0, 0, 2, 0, 0}}}, {{"zero", 0}});
}

// {0, 1, 2}: sub(0, y) = y, sub(x, 0) = x, everything else 0.  Every y has a
// complement y* with sub(0, y*) = y (namely y itself).
inline FiniteAlgebra subtraction_3() {
  return detail::finite(Kind::subtraction_algebra, "subtraction_3", {"0", "1", "2"},
                        {{"sub", {0, 1, 2, 1, 0, 0, 2, 0, 0}}}, {{"zero", 0}});
}

// All stock finite algebras, in declaration order.
inline std::vector<FiniteAlgebra> catalog_finite() {
  return {trivial_monoid(),
          cyclic_group(2),
          cyclic_group(3),
          cyclic_group(4),
          idempotent_monoid_2(),
          zmod_ring(1),
          boolean_semiring(),
          zmod_ring(2),
          zmod_ring(3),
          zmod_ring(4),
          natural_semiring_truncated(1),
          natural_semiring_truncated(2),
          natural_semiring_truncated(3),
          subtraction_T(),
          subtraction_X(),
          subtraction_3()};
}

inline std::vector<Algebra> catalog() {
  std::vector<Algebra> out;
  for (auto& a : catalog_finite()) out.emplace_back(std::move(a));
  out.emplace_back(bicyclic_monoid());
  return out;
}

// Stock pool for bounded searches: catalog algebras of the kind, size <= 4.
// The commutative-monoid pool is the monoid pool retagged (all commutative).
inline std::vector<FiniteAlgebra> default_pool(Kind kind) {
  std::vector<FiniteAlgebra> out;
  for (auto& a : catalog_finite()) {
    if (a.size > 4) continue;
    if (a.kind == kind) {
      out.push_back(std::move(a));
    } else if (kind == Kind::commutative_monoid && a.kind == Kind::monoid) {
      bool comm = true;
      int mul = a.op_index("mul");
      for (int i = 0; i < a.size && comm; ++i)
        for (int j = 0; j < a.size; ++j)
          if (a.op(mul, i, j) != a.op(mul, j, i)) {
            comm = false;
            break;
          }
      if (comm) out.push_back(with_kind(std::move(a), Kind::commutative_monoid));
    }
  }
  return out;
}

// Resolve "name" or "name:param" to a catalog algebra.
inline Algebra builtin_algebra(const std::string& spec) {
  std::string name = spec;
  std::string param;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    param = spec.substr(pos + 1);
  }
  auto need_int = [&]() -> int {
    if (param.empty()) throw input_error("builtin '" + name + "' needs a numeric parameter");
    try {
      return std::stoi(param);
    } catch (const std::exception&) {
      throw input_error("builtin '" + name + "': bad parameter '" + param + "'");
    }
  };
  auto no_param = [&]() {
    if (!param.empty()) throw input_error("builtin '" + name + "' takes no parameter");
  };
  if (name == "cyclic_group") return cyclic_group(need_int());
  if (name == "zmod_ring") return zmod_ring(need_int());
  if (name == "natural_semiring_truncated") return natural_semiring_truncated(need_int());
  no_param();
  if (name == "trivial_monoid") return trivial_monoid();
  if (name == "idempotent_monoid_2") return idempotent_monoid_2();
  if (name == "boolean_semiring") return boolean_semiring();
  if (name == "subtraction_T") return subtraction_T();
  if (name == "subtraction_X") return subtraction_X();
  if (name == "subtraction_3") return subtraction_3();
  if (name == "bicyclic") return bicyclic_monoid();
  throw input_error("unknown builtin '" + name + "'");
}

}  // namespace algcat
