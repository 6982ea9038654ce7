#pragma once

// Finite operation-table algebras over four pointed signatures:
// monoids, commutative monoids, semirings and subtraction algebras.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace algcat {

// Raised for malformed input: bad files, bad tables, maps that are not
// homomorphisms, axiom failures on load.
class input_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { monoid, commutative_monoid, semiring, subtraction_algebra };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::monoid: return "monoid";
    case Kind::commutative_monoid: return "commutative-monoid";
    case Kind::semiring: return "semiring";
    case Kind::subtraction_algebra: return "subtraction-algebra";
  }
  return "?";
}

inline std::optional<Kind> kind_from_name(std::string_view s) {
  if (s == "monoid") return Kind::monoid;
  if (s == "commutative-monoid") return Kind::commutative_monoid;
  if (s == "semiring") return Kind::semiring;
  if (s == "subtraction-algebra") return Kind::subtraction_algebra;
  return std::nullopt;
}

inline bool kind_is_monoidal(Kind k) {
  return k == Kind::monoid || k == Kind::commutative_monoid;
}

// Binary operations of the signature, in canonical order.
inline std::vector<std::string> kind_operations(Kind k) {
  switch (k) {
    case Kind::monoid:
    case Kind::commutative_monoid: return {"mul"};
    case Kind::semiring: return {"add", "mul"};
    case Kind::subtraction_algebra: return {"sub"};
  }
  return {};
}

inline std::vector<std::string> kind_required_constants(Kind k) {
  switch (k) {
    case Kind::monoid:
    case Kind::commutative_monoid: return {"unit"};
    case Kind::semiring: return {"zero"};
    case Kind::subtraction_algebra: return {"zero"};
  }
  return {};
}

// "one" is structure an individual semiring may carry (and the catalog ones
// do), but it is not part of the morphism-level signature: homomorphisms and
// subalgebras respect operations plus the pointed constant only.  Limit
// constructions can therefore produce semirings with no designated one.
inline std::vector<std::string> kind_optional_constants(Kind k) {
  if (k == Kind::semiring) return {"one"};
  return {};
}

// The constant making the signature pointed: the unique morphism-preserved
// constant of every kind.
inline const char* kind_pointed_constant(Kind k) {
  return kind_is_monoidal(k) ? "unit" : "zero";
}

struct OpTable {
  std::string op;
  std::vector<int> cells;  // row-major: cells[a * size + b] = op(a, b)
  bool operator==(const OpTable&) const = default;
};

struct ConstantBinding {
  std::string name;
  int element = 0;
  bool operator==(const ConstantBinding&) const = default;
};

struct FiniteAlgebra {
  Kind kind = Kind::monoid;
  std::string name;
  int size = 0;
  std::vector<std::string> element_names;
  std::vector<OpTable> tables;            // in kind_operations order
  std::vector<ConstantBinding> constants; // required first, optional after

  bool operator==(const FiniteAlgebra&) const = default;

  int op(int table, int a, int b) const { return tables[table].cells[a * size + b]; }

  int op_index(std::string_view op) const {
    for (int i = 0; i < static_cast<int>(tables.size()); ++i)
      if (tables[i].op == op) return i;
    throw input_error(name + ": no operation '" + std::string(op) + "'");
  }

  std::optional<int> constant(std::string_view c) const {
    for (const auto& b : constants)
      if (b.name == c) return b.element;
    return std::nullopt;
  }

  // The pointed constant's element (unit or zero).
  int pointed() const {
    auto c = constant(kind_pointed_constant(kind));
    if (!c) throw input_error(name + ": pointed constant missing");
    return *c;
  }

  std::optional<int> try_element_index(std::string_view e) const {
    for (int i = 0; i < size; ++i)
      if (element_names[i] == e) return i;
    return std::nullopt;
  }

  int element_index(std::string_view e) const {
    if (auto i = try_element_index(e)) return *i;
    throw input_error(name + ": no element '" + std::string(e) + "'");
  }
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> tuple;  // smallest violating instance, lex order
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;  // one per failing axiom
};

// Structural well-formedness: table shapes, index ranges, required pieces.
inline void check_shape(const FiniteAlgebra& a) {
  if (a.size <= 0) throw input_error(a.name + ": empty carrier");
  if (static_cast<int>(a.element_names.size()) != a.size)
    throw input_error(a.name + ": element name count != size");
  for (int i = 0; i < a.size; ++i)
    for (int j = i + 1; j < a.size; ++j)
      if (a.element_names[i] == a.element_names[j])
        throw input_error(a.name + ": duplicate element '" + a.element_names[i] + "'");
  auto ops = kind_operations(a.kind);
  if (a.tables.size() != ops.size())
    throw input_error(a.name + ": expected " + std::to_string(ops.size()) + " operation tables");
  for (size_t t = 0; t < ops.size(); ++t) {
    if (a.tables[t].op != ops[t])
      throw input_error(a.name + ": table " + std::to_string(t) + " should be '" + ops[t] + "'");
    if (a.tables[t].cells.size() != static_cast<size_t>(a.size) * a.size)
      throw input_error(a.name + ": table '" + ops[t] + "' has wrong cell count");
    for (int c : a.tables[t].cells)
      if (c < 0 || c >= a.size)
        throw input_error(a.name + ": table '" + ops[t] + "' cell out of range");
  }
  for (const auto& rc : kind_required_constants(a.kind))
    if (!a.constant(rc))
      throw input_error(a.name + ": missing constant '" + rc + "'");
  for (const auto& b : a.constants) {
    bool known = false;
    for (const auto& rc : kind_required_constants(a.kind)) known |= (rc == b.name);
    for (const auto& oc : kind_optional_constants(a.kind)) known |= (oc == b.name);
    if (!known) throw input_error(a.name + ": unexpected constant '" + b.name + "'");
    if (b.element < 0 || b.element >= a.size)
      throw input_error(a.name + ": constant '" + b.name + "' out of range");
  }
}

namespace detail {

// Identity-law violations are recorded as the full operation instance
// (constant index included), so a broken left unit row fails at (e, x).
inline void check_identity(const FiniteAlgebra& a, int t, int c, bool left,
                           const std::string& axiom, AxiomReport& r) {
  for (int x = 0; x < a.size; ++x) {
    int got = left ? a.op(t, c, x) : a.op(t, x, c);
    if (got != x) {
      r.ok = false;
      if (left)
        r.violations.push_back({axiom, {c, x}});
      else
        r.violations.push_back({axiom, {x, c}});
      return;
    }
  }
}

inline void check_assoc(const FiniteAlgebra& a, int t, const std::string& axiom, AxiomReport& r) {
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      for (int z = 0; z < a.size; ++z)
        if (a.op(t, a.op(t, x, y), z) != a.op(t, x, a.op(t, y, z))) {
          r.ok = false;
          r.violations.push_back({axiom, {x, y, z}});
          return;
        }
}

inline void check_comm(const FiniteAlgebra& a, int t, const std::string& axiom, AxiomReport& r) {
  for (int x = 0; x < a.size; ++x)
    for (int y = x + 1; y < a.size; ++y)
      if (a.op(t, x, y) != a.op(t, y, x)) {
        r.ok = false;
        r.violations.push_back({axiom, {x, y}});
        return;
      }
}

}  // namespace detail

// Equational axioms of the kind; first violating tuple per axiom.
inline AxiomReport validate_axioms(const FiniteAlgebra& a) {
  check_shape(a);
  AxiomReport r;
  switch (a.kind) {
    case Kind::monoid:
    case Kind::commutative_monoid: {
      int mul = a.op_index("mul");
      int e = *a.constant("unit");
      detail::check_assoc(a, mul, "mul associative", r);
      detail::check_identity(a, mul, e, true, "unit left identity", r);
      detail::check_identity(a, mul, e, false, "unit right identity", r);
      if (a.kind == Kind::commutative_monoid) detail::check_comm(a, mul, "mul commutative", r);
      break;
    }
    case Kind::semiring: {
      int add = a.op_index("add");
      int mul = a.op_index("mul");
      int z = *a.constant("zero");
      detail::check_assoc(a, add, "add associative", r);
      detail::check_comm(a, add, "add commutative", r);
      detail::check_identity(a, add, z, true, "zero left identity", r);
      detail::check_identity(a, add, z, false, "zero right identity", r);
      detail::check_assoc(a, mul, "mul associative", r);
      if (auto one = a.constant("one")) {
        detail::check_identity(a, mul, *one, true, "one left identity", r);
        detail::check_identity(a, mul, *one, false, "one right identity", r);
      }
      for (int x = 0; x < a.size && r.violations.empty(); ++x)
        for (int y = 0; y < a.size && r.violations.empty(); ++y)
          for (int w = 0; w < a.size; ++w)
            if (a.op(mul, x, a.op(add, y, w)) != a.op(add, a.op(mul, x, y), a.op(mul, x, w))) {
              r.ok = false;
              r.violations.push_back({"left distributive", {x, y, w}});
              break;
            }
      {
        bool done = false;
        for (int x = 0; x < a.size && !done; ++x)
          for (int y = 0; y < a.size && !done; ++y)
            for (int w = 0; w < a.size; ++w)
              if (a.op(mul, a.op(add, x, y), w) != a.op(add, a.op(mul, x, w), a.op(mul, y, w))) {
                r.ok = false;
                r.violations.push_back({"right distributive", {x, y, w}});
                done = true;
                break;
              }
      }
      for (int x = 0; x < a.size; ++x)
        if (a.op(mul, z, x) != z) {
          r.ok = false;
          r.violations.push_back({"zero left absorbing", {z, x}});
          break;
        }
      for (int x = 0; x < a.size; ++x)
        if (a.op(mul, x, z) != z) {
          r.ok = false;
          r.violations.push_back({"zero right absorbing", {x, z}});
          break;
        }
      break;
    }
    case Kind::subtraction_algebra: {
      int sub = a.op_index("sub");
      int z = *a.constant("zero");
      for (int x = 0; x < a.size; ++x)
        if (a.op(sub, x, z) != x) {
          r.ok = false;
          r.violations.push_back({"sub right zero identity", {x, z}});
          break;
        }
      for (int x = 0; x < a.size; ++x)
        if (a.op(sub, x, x) != z) {
          r.ok = false;
          r.violations.push_back({"sub self annihilation", {x, x}});
          break;
        }
      break;
    }
  }
  return r;
}

inline std::string describe_violation(const FiniteAlgebra& a, const AxiomViolation& v) {
  std::string s = v.axiom + " fails at (";
  for (size_t i = 0; i < v.tuple.size(); ++i) {
    if (i) s += ",";
    s += a.element_names[v.tuple[i]];
  }
  return s + ")";
}

inline void require_valid(const FiniteAlgebra& a) {
  auto r = validate_axioms(a);
  if (!r.ok) throw input_error(a.name + ": " + describe_violation(a, r.violations.front()));
}

// Retag an algebra under a different kind (e.g. read a commutative monoid as a
// plain monoid, or promote a monoid known commutative); revalidates.
inline FiniteAlgebra with_kind(FiniteAlgebra a, Kind k) {
  if (kind_is_monoidal(a.kind) != kind_is_monoidal(k))
    throw input_error(a.name + ": cannot retag " + kind_name(a.kind) + " as " + kind_name(k));
  a.kind = k;
  require_valid(a);
  return a;
}

}  // namespace algcat
