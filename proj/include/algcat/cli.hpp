#pragma once

// Command-line surface.  run_cli keeps all I/O in strings so tests can drive
// the full parser/dispatcher without spawning processes.
// Exit codes: 0 holds/success, 1 fails, 2 unknown-at-bound, 3 input error.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algcat/catalog.hpp"
#include "algcat/classify.hpp"
#include "algcat/constructions.hpp"
#include "algcat/core.hpp"
#include "algcat/hom.hpp"
#include "algcat/io.hpp"
#include "algcat/points.hpp"

namespace algcat {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FILE arguments accept real paths and builtin:<name>[:<param>] pseudo-paths.
inline Algebra load_algebra(const std::string& path, bool validate) {
  if (path.rfind("builtin:", 0) == 0) return builtin_algebra(path.substr(8));
  auto a = parse_algebra_text(read_file(path), path);
  if (validate) require_valid(a);
  return a;
}

inline FiniteAlgebra load_finite(const std::string& path, bool validate) {
  auto a = load_algebra(path, validate);
  if (!std::holds_alternative<FiniteAlgebra>(a))
    throw input_error("'" + path + "' is not a finite algebra");
  return std::get<FiniteAlgebra>(a);
}

inline std::vector<FiniteAlgebra> load_pool_dir(const std::string& dir, bool validate) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw input_error("pool '" + dir + "' is not a directory");
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw input_error("pool '" + dir + "' is empty");
  std::vector<FiniteAlgebra> pool;
  for (const auto& p : paths) pool.push_back(load_finite(p, validate));
  return pool;
}

inline std::string render_closure_trace(const FiniteAlgebra& a, const ClosureResult& c) {
  std::string s;
  for (const auto& st : c.steps)
    s += "  " + a.element_names[st.result] + " = " + a.tables[st.op].op + "(" +
         a.element_names[st.lhs] + ", " + a.element_names[st.rhs] + ")\n";
  return s;
}

inline int worst_exit(const std::vector<ClassificationReport>& reports) {
  bool any_fail = false, any_unknown = false;
  for (const auto& rep : reports)
    for (const auto& r : rep.records) {
      any_fail = any_fail || r.status == Status::fails;
      any_unknown = any_unknown || r.status == Status::unknown;
    }
  return any_fail ? 1 : (any_unknown ? 2 : 0);
}

inline int status_exit(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::fails: return 1;
    case Status::unknown: return 2;
  }
  return 2;
}

}  // namespace detail

inline CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out;

  CLI::App app{"finite-algebra point and object classification"};
  app.require_subcommand(1);
  bool no_validate = false;
  app.add_flag("--no-validate", no_validate, "skip axiom validation of parsed files");

  // classify
  auto* cls = app.add_subcommand("classify", "five-property report per object");
  std::vector<std::string> cls_files;
  std::string cls_mode = "both", cls_pool, cls_format = "text";
  long long cls_bound = 10;
  cls->add_option("files", cls_files, "algebra files or builtin: names")->required();
  cls->add_option("--mode", cls_mode, "exact|bounded|both")->capture_default_str();
  cls->add_option("--bound", cls_bound, "word-weight bound for lazy monoids")
      ->capture_default_str();
  cls->add_option("--pool", cls_pool, "directory of algebra files used as the search pool");
  cls->add_option("--format", cls_format, "text|machine")->capture_default_str();

  // check
  auto* chk = app.add_subcommand("check", "one property on one object");
  std::string chk_prop, chk_file, chk_mode = "both", chk_pool;
  long long chk_bound = 10;
  chk->add_option("property", chk_prop,
                  "unital|subtractive|strongly-unital|maltsev|protomodular")
      ->required();
  chk->add_option("file", chk_file, "algebra file or builtin: name")->required();
  chk->add_option("--mode", chk_mode, "exact|bounded|both")->capture_default_str();
  chk->add_option("--bound", chk_bound, "word-weight bound for lazy monoids")
      ->capture_default_str();
  chk->add_option("--pool", chk_pool, "directory of algebra files used as the search pool");

  // validate
  auto* val = app.add_subcommand("validate", "parse and check axioms");
  std::vector<std::string> val_files;
  val->add_option("files", val_files, "algebra files or builtin: names")->required();

  // homs
  auto* hom = app.add_subcommand("homs", "enumerate homomorphisms A -> B");
  std::string hom_a, hom_b;
  bool hom_count = false, hom_list = false;
  hom->add_option("A", hom_a)->required();
  hom->add_option("B", hom_b)->required();
  hom->add_flag("--count", hom_count, "print only the count");
  hom->add_flag("--list", hom_list, "print every map");

  // point-check
  auto* pc = app.add_subcommand("point-check", "strength/Schreier/stability of a point");
  std::string pc_f, pc_s, pc_a, pc_b, pc_pool;
  bool pc_schreier = false;
  pc->add_option("--f", pc_f, "mapping file for the split epi f: A -> B")->required();
  pc->add_option("--s", pc_s, "mapping file for the section s: B -> A")->required();
  pc->add_option("A", pc_a)->required();
  pc->add_option("B", pc_b)->required();
  pc->add_option("--pool", pc_pool, "check stable strength against this pool directory");
  pc->add_flag("--schreier", pc_schreier, "check the Schreier condition instead");

  // pullback
  auto* pb = app.add_subcommand("pullback", "pullback of f: A -> B along g: C -> B");
  std::string pb_f, pb_g, pb_a, pb_c, pb_b;
  pb->add_option("--f", pb_f, "mapping file for f: A -> B")->required();
  pb->add_option("--g", pb_g, "mapping file for g: C -> B")->required();
  pb->add_option("A", pb_a)->required();
  pb->add_option("C", pb_c)->required();
  pb->add_option("B", pb_b)->required();

  // relations
  auto* rel = app.add_subcommand("relations", "reflexive relations on Y x Y");
  std::string rel_y;
  rel->add_option("Y", rel_y)->required();

  // probe-coproduct
  auto* prb = app.add_subcommand("probe-coproduct", "bounded free-product pullback probe");
  std::string prb_m, prb_elem;
  long long prb_len = 8;
  prb->add_option("M", prb_m, "finite monoid file or builtin: name")->required();
  prb->add_option("--element", prb_elem, "element m (must differ from the unit)")->required();
  prb->add_option("--length", prb_len, "word-weight bound")->capture_default_str();

  try {
    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 parses reversed vectors
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n" + app.help();
    res.exit_code = 3;
    return res;
  }

  try {
    bool validate = !no_validate;
    if (*cls) {
      auto mode = mode_from_name(cls_mode);
      if (!mode) throw input_error("bad --mode '" + cls_mode + "'");
      if (cls_format != "text" && cls_format != "machine")
        throw input_error("bad --format '" + cls_format + "'");
      std::vector<FiniteAlgebra> pool;
      bool have_pool = !cls_pool.empty();
      if (have_pool) pool = detail::load_pool_dir(cls_pool, validate);
      std::vector<Algebra> objects;
      for (const auto& f : cls_files) objects.push_back(detail::load_algebra(f, validate));
      auto reports =
          classify_table(objects, *mode, have_pool ? &pool : nullptr, cls_bound);
      out << (cls_format == "machine" ? render_report_machine(reports)
                                      : render_report_text(reports));
      res.exit_code = detail::worst_exit(reports);
    } else if (*chk) {
      Property prop = Property::unital;
      bool found = false;
      for (auto p : all_properties)
        if (chk_prop == property_name(p)) {
          prop = p;
          found = true;
        }
      if (!found) throw input_error("unknown property '" + chk_prop + "'");
      auto mode = mode_from_name(chk_mode);
      if (!mode) throw input_error("bad --mode '" + chk_mode + "'");
      std::vector<FiniteAlgebra> pool;
      bool have_pool = !chk_pool.empty();
      if (have_pool) pool = detail::load_pool_dir(chk_pool, validate);
      auto a = detail::load_algebra(chk_file, validate);
      auto rep = classify_object(a, *mode, have_pool ? &pool : nullptr, chk_bound);
      const auto& r = rep.record(prop);
      out << rep.object_name << "." << property_name(r.property) << ": "
          << status_name(r.status) << " [" << r.method << "]";
      if (!r.witness.empty()) out << " witness: " << r.witness;
      out << "\n";
      for (const auto& n : r.notes) out << "  " << n << "\n";
      res.exit_code = detail::status_exit(r.status);
    } else if (*val) {
      for (const auto& f : val_files) {
        auto a = detail::load_algebra(f, true);
        if (std::holds_alternative<FiniteAlgebra>(a)) {
          const auto& fa = std::get<FiniteAlgebra>(a);
          out << fa.name << ": valid (" << kind_name(fa.kind) << ", " << fa.size
              << " elements)\n";
        } else {
          out << std::get<LazyMonoid>(a).name << ": valid (lazy monoid)\n";
        }
      }
      res.exit_code = 0;
    } else if (*hom) {
      auto a = detail::load_finite(hom_a, validate);
      auto b = detail::load_finite(hom_b, validate);
      auto homs = enumerate_homs(a, b);
      if (!hom_list || hom_count) out << homs.size() << "\n";
      if (hom_list)
        for (const auto& h : homs) out << hom_map_string(h) << "\n";
      res.exit_code = 0;
    } else if (*pc) {
      auto a = detail::load_finite(pc_a, validate);
      auto b = detail::load_finite(pc_b, validate);
      auto f = parse_mapping_text(detail::read_file(pc_f), a, b, pc_f);
      auto s = parse_mapping_text(detail::read_file(pc_s), b, a, pc_s);
      auto p = make_point(f, s);
      if (pc_schreier) {
        auto sv = is_schreier_point(p);
        if (sv.schreier) {
          out << "schreier: yes\n";
          res.exit_code = 0;
        } else {
          out << "schreier: no";
          if (sv.failing >= 0)
            out << " (element " << a.element_names[sv.failing]
                << (sv.ambiguous ? " decomposes ambiguously" : " has no decomposition")
                << ")";
          out << "\n";
          res.exit_code = 1;
        }
      } else if (!pc_pool.empty()) {
        auto pool = detail::load_pool_dir(pc_pool, validate);
        auto sv = is_stably_strong(p, pool);
        switch (sv.status) {
          case StableStatus::certified:
            out << "stably strong: certified [" << sv.method << "]\n";
            res.exit_code = 0;
            break;
          case StableStatus::falsified:
            out << "stably strong: falsified, pullback along g="
                << (sv.along ? hom_map_string(*sv.along) : std::string("?"))
                << " leaves proper subalgebra\n";
            res.exit_code = 1;
            break;
          case StableStatus::unknown:
            out << "stably strong: unknown [" << sv.method << "]\n";
            res.exit_code = 2;
            break;
        }
      } else {
        auto sv = is_strong_point(p);
        if (sv.strong) {
          out << "strong: yes\n";
          out << "generation trace (kernel and section image close to all of " << a.name
              << "):\n";
          out << detail::render_closure_trace(a, sv.closure);
          res.exit_code = 0;
        } else {
          out << "strong: no\n";
          out << "proper subalgebra: " << element_set_string(a, sv.closure.elements) << "\n";
          res.exit_code = 1;
        }
      }
    } else if (*pb) {
      auto a = detail::load_finite(pb_a, validate);
      auto c = detail::load_finite(pb_c, validate);
      auto b = detail::load_finite(pb_b, validate);
      auto f = parse_mapping_text(detail::read_file(pb_f), a, b, pb_f);
      auto g = parse_mapping_text(detail::read_file(pb_g), c, b, pb_g);
      auto res_pb = pullback(f, g);
      out << res_pb.algebra.name << ": " << res_pb.algebra.size << " elements\n";
      for (const auto& e : res_pb.algebra.element_names) out << "  " << e << "\n";
      res.exit_code = 0;
    } else if (*rel) {
      auto y = detail::load_finite(rel_y, validate);
      auto rr = reflexive_relations(y);
      out << rr.relations.size() << " reflexive relation(s) on " << y.name << " x " << y.name
          << (rr.truncated ? " (truncated)" : "") << "\n";
      bool all_trans = true, all_commute = true;
      for (const auto& r : rr.relations) all_trans = all_trans && is_transitive(r);
      for (size_t i = 0; i < rr.relations.size(); ++i)
        for (size_t j = i + 1; j < rr.relations.size(); ++j)
          all_commute = all_commute && relations_commute(rr.relations[i], rr.relations[j]);
      out << "all transitive: " << (all_trans ? "yes" : "no") << "\n";
      out << "all pairs commute: " << (all_commute ? "yes" : "no") << "\n";
      res.exit_code = 0;
    } else if (*prb) {
      auto m = detail::load_finite(prb_m, validate);
      auto ei = m.try_element_index(prb_elem);
      if (!ei) throw input_error("unknown element '" + prb_elem + "'");
      auto pr = maltsev_freeproduct_probe(m, *ei, prb_len);
      auto mn = free_product({m}, true, m.name + " + N");
      auto mm = free_product({m, m}, false, m.name + " + " + m.name);
      if (pr.generated) {
        out << "generated at bound " << pr.bound << " (" << pr.entries.size()
            << " pairs explored)\n";
        const auto& t = pr.entries[pr.target_index];
        out << "target: (" << word_to_string(mn, t.left) << ", " << word_to_string(mm, t.right)
            << ")";
        if (t.parent_a >= 0) {
          const auto& pa = pr.entries[t.parent_a];
          const auto& pb2 = pr.entries[t.parent_b];
          out << " = (" << word_to_string(mn, pa.left) << ", " << word_to_string(mm, pa.right)
              << ") * (" << word_to_string(mn, pb2.left) << ", "
              << word_to_string(mm, pb2.right) << ")";
        }
        out << "\n";
        res.exit_code = 0;
      } else {
        out << "absent-at-bound " << pr.bound << " (" << pr.entries.size()
            << " pairs explored); larger bounds cannot change a genuine absence for "
               "non-right-invertible elements\n";
        res.exit_code = 2;
      }
    }
  } catch (const input_error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 3;
    res.out = out.str();
    return res;
  }
  res.out = out.str();
  return res;
}

}  // namespace algcat
