#pragma once

// Line-based algebra files, element mapping files, and report rendering.
// Parse errors carry origin:line so CLI users can find the offending row.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algcat/classify.hpp"
#include "algcat/core.hpp"
#include "algcat/hom.hpp"

namespace algcat {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// Format: '#' comments; 'kind:', 'name:', 'elements:' headers; one constant
// line per kind constant ('unit:'/'zero:'/'one:'); one 'table <op>:' block per
// operation, n rows of n element names.  Shape-checked; axioms are the
// caller's concern (the CLI validates by default).
inline FiniteAlgebra parse_algebra_text(const std::string& text,
                                        const std::string& origin = "<input>") {
  FiniteAlgebra a;
  bool have_kind = false, have_elements = false;
  std::vector<std::string> pending_ops;  // tables still owed, in kind order
  std::vector<std::string> seen_ops;
  int table_row = -1;  // >= 0 while inside a table block
  std::string table_op;
  std::vector<int> table_cells;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> input_error {
    return input_error(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto element_index = [&](const std::string& name) {
    for (int i = 0; i < a.size; ++i)
      if (a.element_names[i] == name) return i;
    throw fail("unknown element '" + name + "'");
  };
  auto finish_table = [&]() {
    if (table_row < 0) return;
    if (table_row != a.size)
      throw fail("table '" + table_op + "': expected " + std::to_string(a.size) +
                 " rows, got " + std::to_string(table_row));
    a.tables.push_back({table_op, table_cells});
    table_row = -1;
    table_cells.clear();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;

    if (table_row >= 0 && line.find(':') == std::string::npos) {
      auto toks = detail::split_ws(line);
      if (static_cast<int>(toks.size()) != a.size)
        throw fail("table '" + table_op + "' row " + std::to_string(table_row + 1) +
                   ": expected " + std::to_string(a.size) + " entries, got " +
                   std::to_string(toks.size()));
      for (const auto& t : toks) table_cells.push_back(element_index(t));
      ++table_row;
      continue;
    }
    finish_table();

    auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'key: value' or a table row");
    std::string key = detail::trim(line.substr(0, colon));
    std::string value = detail::trim(line.substr(colon + 1));

    if (key == "kind") {
      if (have_kind) throw fail("duplicate kind");
      auto k = kind_from_name(value);
      if (!k) throw fail("unknown kind '" + value + "'");
      a.kind = *k;
      have_kind = true;
      pending_ops = kind_operations(a.kind);
    } else if (key == "name") {
      a.name = value;
    } else if (key == "elements") {
      if (!have_kind) throw fail("'elements' before 'kind'");
      if (have_elements) throw fail("duplicate elements");
      a.element_names = detail::split_ws(value);
      if (a.element_names.empty()) throw fail("empty element list");
      a.size = static_cast<int>(a.element_names.size());
      for (int i = 0; i < a.size; ++i)
        for (int j = i + 1; j < a.size; ++j)
          if (a.element_names[i] == a.element_names[j])
            throw fail("duplicate element '" + a.element_names[i] + "'");
      have_elements = true;
    } else if (key.rfind("table ", 0) == 0) {
      if (!have_elements) throw fail("table before 'elements'");
      std::string op = detail::trim(key.substr(6));
      bool known = false;
      for (const auto& o : kind_operations(a.kind)) known = known || o == op;
      if (!known) throw fail("operation '" + op + "' not part of kind " + kind_name(a.kind));
      for (const auto& o : seen_ops)
        if (o == op) throw fail("duplicate table '" + op + "'");
      seen_ops.push_back(op);
      if (!value.empty()) throw fail("table rows start on the next line");
      table_op = op;
      table_row = 0;
    } else {
      // constant line
      if (!have_elements) throw fail("constant before 'elements'");
      bool legal = false;
      for (const auto& n : kind_required_constants(a.kind)) legal = legal || n == key;
      for (const auto& n : kind_optional_constants(a.kind)) legal = legal || n == key;
      if (!legal) throw fail("unknown key '" + key + "'");
      for (const auto& c : a.constants)
        if (c.name == key) throw fail("duplicate constant '" + key + "'");
      a.constants.push_back({key, element_index(value)});
    }
  }
  ++lineno;
  finish_table();

  if (!have_kind) throw input_error(origin + ": missing 'kind'");
  if (!have_elements) throw input_error(origin + ": missing 'elements'");
  if (a.name.empty()) a.name = "unnamed";
  for (const auto& op : pending_ops) {
    bool seen = false;
    for (const auto& o : seen_ops) seen = seen || o == op;
    if (!seen) throw input_error(origin + ": missing table '" + op + "'");
  }
  check_shape(a);
  return a;
}

inline std::string render_algebra(const FiniteAlgebra& a) {
  std::string s;
  s += "kind: " + std::string(kind_name(a.kind)) + "\n";
  s += "name: " + a.name + "\n";
  s += "elements:";
  for (const auto& e : a.element_names) s += " " + e;
  s += "\n";
  for (const auto& c : a.constants) s += c.name + ": " + a.element_names[c.element] + "\n";
  for (const auto& t : a.tables) {
    s += "table " + t.op + ":\n";
    for (int i = 0; i < a.size; ++i) {
      std::string row = " ";
      for (int j = 0; j < a.size; ++j) row += " " + a.element_names[t.cells[i * a.size + j]];
      s += row + "\n";
    }
  }
  return s;
}

// Mapping files: one 'source_element -> target_element' per line, every
// source element exactly once.
inline Hom parse_mapping_text(const std::string& text, const FiniteAlgebra& source,
                              const FiniteAlgebra& target,
                              const std::string& origin = "<input>") {
  std::vector<int> map(source.size, -1);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw input_error(origin + ":" + std::to_string(lineno) + ": expected 'src -> tgt'");
    std::string src = detail::trim(line.substr(0, arrow));
    std::string tgt = detail::trim(line.substr(arrow + 2));
    auto si = source.try_element_index(src);
    if (!si)
      throw input_error(origin + ":" + std::to_string(lineno) + ": unknown source element '" +
                        src + "'");
    auto ti = target.try_element_index(tgt);
    if (!ti)
      throw input_error(origin + ":" + std::to_string(lineno) + ": unknown target element '" +
                        tgt + "'");
    if (map[*si] != -1)
      throw input_error(origin + ":" + std::to_string(lineno) + ": element '" + src +
                        "' mapped twice");
    map[*si] = *ti;
  }
  for (int i = 0; i < source.size; ++i)
    if (map[i] == -1)
      throw input_error(origin + ": element '" + source.element_names[i] + "' has no image");
  return make_hom(source, target, std::move(map));
}

// ---------------------------------------------------------------------------
// Report rendering.

inline std::string status_mark(Status s) {
  switch (s) {
    case Status::holds: return "+";
    case Status::fails: return "-";
    case Status::unknown: return "?";
  }
  return "?";
}

inline std::string render_report_machine(const std::vector<ClassificationReport>& reports) {
  std::string out;
  for (const auto& rep : reports)
    for (const auto& r : rep.records) {
      out += rep.object_name;
      out += "\t";
      out += property_name(r.property);
      out += "\t";
      out += status_name(r.status);
      out += "\t";
      out += r.method;
      out += "\t";
      out += r.witness;
      out += "\n";
    }
  return out;
}

inline std::string render_report_text(const std::vector<ClassificationReport>& reports) {
  std::vector<std::string> headers = {"object"};
  for (auto p : all_properties) headers.push_back(property_name(p));
  std::vector<size_t> width(headers.size());
  for (size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
  for (const auto& rep : reports) width[0] = std::max(width[0], rep.object_name.size());

  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::string out;
  for (size_t i = 0; i < headers.size(); ++i)
    out += (i ? "  " : "") + pad(headers[i], width[i]);
  out += "\n";
  for (const auto& rep : reports) {
    out += pad(rep.object_name, width[0]);
    for (size_t i = 0; i < all_properties.size(); ++i)
      out += "  " + pad(status_mark(rep.records[i].status), width[i + 1]);
    out += "\n";
  }
  out += "\nlegend: + holds, - fails, ? unknown-at-bound\n";
  for (const auto& rep : reports)
    for (const auto& r : rep.records) {
      out += rep.object_name;
      out += "." + std::string(property_name(r.property)) + ": " + status_name(r.status) +
             " [" + r.method + "]";
      if (!r.witness.empty()) out += " witness: " + r.witness;
      if (r.bound) out += " (bound " + std::to_string(*r.bound) + ")";
      out += "\n";
    }
  return out;
}

}  // namespace algcat
