// yaxl command line front end.
//
// Exit codes: 0 success, 1 a checked property is negative, 2 input or
// precondition error, 3 internal error (a theorem failed on concrete data).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "yaxl/constructions.hpp"
#include "yaxl/enumerate.hpp"
#include "yaxl/error.hpp"
#include "yaxl/io.hpp"
#include "yaxl/plonka.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"
#include "yaxl/twists.hpp"

namespace {

  using json = nlohmann::ordered_json;
  using namespace yaxl;

  constexpr int kOk       = 0;
  constexpr int kNegative = 1;
  constexpr int kInput    = 2;
  constexpr int kInternal = 3;

  struct Context {
    std::string                  command;
    std::string                  format = "text";
    std::string                  output;
    bool                         human   = false;
    unsigned                     workers = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t                input_hash = 0;
  };

  std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
  }

  std::string load(std::string const& path, Context& ctx) {
    std::string data;
    if (path == "-") {
      data.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      data = read_file(path);
    }
    ctx.input_hash = fnv1a64(data);
    return data;
  }

  Format output_format(Context const& ctx) {
    auto f = parse_format(ctx.format);
    if (!f) throw InputError("unknown format '" + ctx.format + "'");
    return *f;
  }

  // YAXL_MAX_N lifts the size guards up to its value.
  bool guard_lifted(std::size_t n) {
    char const* env = std::getenv("YAXL_MAX_N");
    if (env == nullptr || *env == '\0') return false;
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InputError("YAXL_MAX_N is not a number");
    return n <= v;
  }

  json provenance(Context const& ctx) {
    json p;
    p["tool"]          = "yaxl";
    p["version"]       = version();
    p["command"]       = ctx.command;
    p["input_fnv1a64"] = hex64(ctx.input_hash);
    if (ctx.seed) {
      p["seed"] = *ctx.seed;
    } else {
      p["seed"] = nullptr;
    }
    return p;
  }

  std::string provenance_line(Context const& ctx) {
    return "# yaxl " + std::string(version()) + " input-fnv1a64="
           + hex64(ctx.input_hash) + " seed="
           + (ctx.seed ? std::to_string(*ctx.seed) : std::string("none")) + "\n";
  }

  void write_out(Context const& ctx, std::string const& body) {
    if (ctx.output.empty() || ctx.output == "-") {
      std::cout << body;
      return;
    }
    std::ofstream out(ctx.output, std::ios::binary);
    if (!out) throw InputError("cannot open '" + ctx.output + "' for writing");
    out << body;
  }

  // Writers produce compact JSON; provenance is appended as one more key.
  void emit_artifact(Context const& ctx, std::string const& body, Format f) {
    if (f == Format::text) {
      write_out(ctx, provenance_line(ctx) + body);
      return;
    }
    json j          = json::parse(body);
    j["provenance"] = provenance(ctx);
    write_out(ctx, j.dump() + "\n");
  }

  std::string human_key(std::string k) {
    for (char& c : k) {
      if (c == '_') c = ' ';
    }
    return k;
  }

  std::string human_scalar(json const& v) {
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
  }

  void render_human(json const& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto const& [k, v] : j.items()) {
      if (v.is_object()) {
        os << pad << human_key(k) << ":\n";
        render_human(v, os, indent + 2);
      } else if (v.is_array()) {
        bool flat = true;
        for (auto const& e : v) flat = flat && !e.is_structured();
        if (flat) {
          os << pad << human_key(k) << ":";
          for (auto const& e : v) os << ' ' << human_scalar(e);
          os << '\n';
        } else {
          os << pad << human_key(k) << ": " << v.size() << " item(s)\n";
          for (auto const& e : v) {
            if (e.is_object()) {
              os << pad << "  -\n";
              render_human(e, os, indent + 4);
            } else {
              os << pad << "  - " << e.dump() << '\n';
            }
          }
        }
      } else {
        os << pad << human_key(k) << ": " << human_scalar(v) << '\n';
      }
    }
  }

  void emit_report(Context const& ctx, json report) {
    if (ctx.human) {
      std::ostringstream os;
      os << provenance_line(ctx);
      render_human(report, os, 0);
      write_out(ctx, os.str());
      return;
    }
    report["provenance"] = provenance(ctx);
    write_out(ctx, report.dump(2) + "\n");
  }

  // Names of the listed boolean keys that are false.
  json failures(json const& r, std::initializer_list<char const*> keys) {
    json f = json::array();
    for (char const* k : keys) {
      if (r.contains(k) && r[k].is_boolean() && !r[k].get<bool>()) f.push_back(k);
    }
    return f;
  }

  json solution_json(SolutionTable const& s) {
    json j = json::parse(write_solution(s, Format::json));
    return j;
  }

  // check ---------------------------------------------------------------------

  int check_shelf(Magma const& m, Context const& ctx) {
    json r;
    r["n"]           = m.size();
    bool shelf       = is_left_shelf(m);
    r["left_shelf"]  = shelf;
    r["right_shelf"] = is_right_shelf(m);
    r["rack"]        = is_rack(m);
    r["quandle"]     = is_quandle(m);
    auto q           = quasi_rack_structure(m);
    r["quasi_rack"]  = q.has_value();
    if (q) {
      r["quasi_quandle"]     = is_quasi_quandle(*q);
      r["star"]              = check_star(*q);
      r["starstar"]          = check_starstar(*q);
      r["starstarstar"]      = check_starstarstar(*q);
      r["translation_lemma"] = verify_translation_lemma(*q);
      SolutionTable d        = derived_map(*q);
      bool          sol      = is_solution(d);
      r["derived_map_solution"] = sol;
      if (sol) {
        Classification c        = classify(d);
        r["derived_map_bijective"]       = c.bijective;
        r["derived_map_quasi_bijective"] = quasi_bijective(d).has_value();
      }
      if (q->size() <= kMaxCanonicalSize) r["canonical"] = is_canonical(m);
    }
    r["failures"] = failures(r, {"left_shelf", "quasi_rack", "star", "starstar",
                                 "starstarstar", "translation_lemma",
                                 "derived_map_solution"});
    emit_report(ctx, r);
    return shelf ? kOk : kNegative;
  }

  int check_solution(SolutionTable const& s, Context const& ctx) {
    json r;
    r["n"]                      = s.size();
    r["braid_relation"]         = satisfies_braid_relation(s);
    r["component_identities"]   = satisfies_component_identities(s);
    bool sol                    = is_solution(s);
    r["solution"]               = sol;
    if (sol) {
      Classification c    = classify(s);
      r["bijective"]      = c.bijective;
      r["involutive"]     = c.involutive;
      r["idempotent"]     = c.idempotent;
      r["cubic"]          = c.cubic;
      r["left_nondegenerate"]  = c.left_nd;
      r["right_nondegenerate"] = c.right_nd;
      r["nondegenerate"]       = c.nondegenerate;
      r["quasi_bijective"]     = quasi_bijective(s).has_value();
      auto ql = quasi_left_nondeg(s);
      auto qr = quasi_right_nondeg(s);
      r["quasi_left_nondegenerate"]  = ql.has_value();
      r["quasi_right_nondegenerate"] = qr.has_value();
      r["quasi_nondegenerate"]       = ql.has_value() && qr.has_value();
      if (ql) {
        bool A = check_A(s, *ql), B = check_B(s, *ql), C = check_C(s, *ql);
        r["A"] = A;
        r["B"] = B;
        r["C"] = C;
        Magma sm = structure_magma(s, *ql);
        r["structure_magma_left_shelf"] = is_left_shelf(sm);
        r["structure_magma_quasi_rack"] = quasi_rack_structure(sm).has_value();
        IdentityReport ir = verify_section3_identities(s, *ql, A, B, C);
        json failed       = json::array();
        for (auto const& c : ir.checks) {
          if (!c.passed) failed.push_back(c.name);
        }
        r["identities_checked"] = ir.checks.size();
        r["identities_failed"]  = failed;
      }
    }
    r["failures"] = failures(r, {"solution", "braid_relation", "component_identities"});
    emit_report(ctx, r);
    return sol ? kOk : kNegative;
  }

  int check_clifford(Magma const& m, Context const& ctx) {
    json r;
    r["n"]                = m.size();
    r["associative"]      = is_associative(m);
    r["inverse_semigroup"] = is_inverse_semigroup(m);
    bool cl               = is_clifford(m);
    r["clifford"]         = cl;
    if (cl) {
      CliffordTable s(m);
      r["group"]        = is_group(m);
      r["idempotents"]  = s.idempotents().size();
      auto q            = quasi_rack_structure(conjugation_quasi_quandle(s));
      if (!q) throw InternalError("conjugation quasi quandle is not a quasi rack");
      json c;
      c["star"]         = check_star(*q);
      c["starstar"]     = check_starstar(*q);
      c["starstarstar"] = check_starstarstar(*q);
      c["derived_map_solution"] = is_solution(derived_map(*q));
      r["conjugation_quasi_quandle"] = c;
      auto core        = quasi_rack_structure(core_quasi_quandle(s));
      r["core_quasi_quandle"] = core.has_value() && is_quasi_quandle(*core);
      r["trivial_weak_brace_dual"] = is_dual(trivial_weak_brace(s));
    }
    r["failures"] = failures(r, {"associative", "inverse_semigroup", "clifford"});
    emit_report(ctx, r);
    return cl ? kOk : kNegative;
  }

  int check_weak_brace(WeakBraceTable const& b, Context const& ctx) {
    json            r;
    WeakBraceReport v = weak_brace_validate(b);
    r["n"]            = b.size();
    r["add_clifford"] = v.add_clifford;
    r["mul_inverse_semigroup"] = v.mul_inverse;
    r["mul_clifford"] = v.mul_clifford;
    if (v.distributivity_failure) {
      auto const& t = *v.distributivity_failure;
      r["distributivity_failure"] = {t[0], t[1], t[2]};
    }
    if (v.inverse_failure) r["inverse_failure"] = *v.inverse_failure;
    r["weak_brace"] = v.valid();
    r["dual"]       = v.dual();
    if (v.valid()) {
      SolutionTable s = brace_solution(b);
      r["solution"]   = is_solution(s);
      if (v.dual()) {
        // brace_solution has already checked the relative inverse identities.
        r["r_rop_identities"]        = true;
        r["lambda_rho_clifford"]     = lambda_rho_clifford_check(b);
        r["structure_shelf_conjugation"] = brace_structure_shelf_check(b);
      }
    }
    r["failures"] = failures(r, {"add_clifford", "mul_inverse_semigroup", "weak_brace",
                                 "lambda_rho_clifford", "structure_shelf_conjugation"});
    emit_report(ctx, r);
    return v.valid() ? kOk : kNegative;
  }

  int check_twist(TwistFamily const& t, Context const& ctx) {
    json r;
    r["n"]           = t.size();
    r["phi_central"] = check_phi_central(t);
    r["L0_com"]      = check_L0_com(t);
    r["twist_law"]   = satisfies_twist_law(t);
    bool g          = is_g_twist(t);
    r["g_twist"]     = g;
    r["hom_lemma"]   = check_hom_lemma(t);
    SolutionTable s = twisted_map(t);
    r["r_phi_solution"] = is_solution(s);
    r["r_phi_special"]  = is_special_qlnd_solution(s);
    r["theorem_roundtrip"] = twist_theorem_roundtrip(t);
    r["failures"] = failures(r, {"phi_central", "L0_com", "twist_law", "g_twist"});
    emit_report(ctx, r);
    return g ? kOk : kNegative;
  }

  int check_plonka(PlonkaSystem const& p, Context const& ctx) {
    validate_plonka_system(p);
    Magma              sum = plonka_sum(p);
    SumStructureReport s   = sum_structure_check(p);
    json               r;
    r["semilattice_size"] = p.semilattice.size();
    r["carrier_size"]     = sum.size();
    r["left_shelf"]       = is_left_shelf(sum);
    r["quasi_rack"]       = s.quasi_rack;
    r["star"]             = s.star;
    r["starstarstar"]     = s.starstarstar;
    r["closed_forms"]     = s.closed_forms;
    r["fibers_quandles"]  = s.fibers_quandles;
    r["quasi_quandle"]    = s.quasi_quandle;
    r["strong_semilattice_of_solutions"] = solution_as_strong_semilattice(p);
    r["failures"] = failures(r, {"left_shelf", "quasi_rack", "star", "starstarstar",
                                 "closed_forms", "strong_semilattice_of_solutions"});
    emit_report(ctx, r);
    return r["failures"].empty() ? kOk : kNegative;
  }

  int cmd_check(std::string const& kind, std::string const& path, Context& ctx) {
    std::string text = load(path, ctx);
    if (kind == "shelf") return check_shelf(parse_magma(text, detect_format(text)), ctx);
    if (kind == "solution") {
      return check_solution(parse_solution(text, detect_format(text)), ctx);
    }
    if (kind == "clifford") {
      return check_clifford(parse_magma(text, detect_format(text)), ctx);
    }
    if (kind == "weak-brace") return check_weak_brace(parse_weak_brace(text), ctx);
    if (kind == "twist") return check_twist(parse_twist(text), ctx);
    return check_plonka(parse_system(text, "fibers"), ctx);
  }

  // enumerate / table1 --------------------------------------------------------

  int cmd_enumerate(std::size_t n, std::string const& cls,
                    std::vector<std::string> const& filters, bool stream,
                    Context& ctx) {
    EnumerationSpec spec;
    spec.n = n;
    auto c = parse_structure_class(cls);
    if (!c) throw InputError("unknown class '" + cls + "'");
    spec.cls = *c;
    for (auto const& f : filters) {
      auto bit = parse_filter(f);
      if (!bit) throw InputError("unknown filter '" + f + "'");
      spec.filters |= *bit;
    }
    spec.stream      = stream;
    spec.workers     = ctx.workers;
    spec.allow_large = guard_lifted(n);
    ctx.input_hash   = fnv1a64(ctx.command);

    EnumerationResult res = enumerate(spec);
    if (stream) {
      write_out(ctx, provenance_line(ctx) + write_magma_stream(res.items));
      return kOk;
    }
    json r;
    r["n"]       = n;
    r["class"]   = to_string(spec.cls);
    r["filters"] = filters;
    r["count"]   = res.count;
    emit_report(ctx, r);
    return kOk;
  }

  json table1_row_json(Table1Row const& t) {
    json j;
    j["n"]            = t.n;
    j["racks"]        = t.racks;
    j["quasi_racks"]  = t.quasi_racks;
    j["derived_solutions"] = t.derived_solutions;
    j["star"]         = t.star;
    j["starstar"]     = t.starstar;
    j["starstarstar"] = t.starstarstar;
    return j;
  }

  void render_table1(std::vector<Table1Row> const& rows, std::vector<bool> const& ok,
                     std::ostream& os) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%3s %6s %6s %6s %6s %6s %6s  %s\n", "n", "r", "qr",
                  "ds", "qr*", "qr**", "qr***", "match");
    os << buf;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto const& t = rows[i];
      std::snprintf(buf, sizeof buf, "%3zu %6llu %6llu %6llu %6llu %6llu %6llu  %s\n",
                    t.n, static_cast<unsigned long long>(t.racks),
                    static_cast<unsigned long long>(t.quasi_racks),
                    static_cast<unsigned long long>(t.derived_solutions),
                    static_cast<unsigned long long>(t.star),
                    static_cast<unsigned long long>(t.starstar),
                    static_cast<unsigned long long>(t.starstarstar), ok[i] ? "yes" : "NO");
      os << buf;
    }
  }

  int cmd_table1(std::size_t max_n, Context& ctx) {
    if (max_n < 2) throw InputError("--max-n must be at least 2");
    ctx.input_hash = fnv1a64(ctx.command);
    std::vector<Table1Row> rows;
    std::vector<bool>      ok;
    json                   j;
    j["rows"] = json::array();
    bool all  = true;
    for (std::size_t n = 2; n <= max_n; ++n) {
      Table1Row t   = cross_tabulate(n, ctx.workers, guard_lifted(n));
      auto      exp = table1_expected(n);
      bool      m   = !exp || matches_table1(t, *exp);
      json      row = table1_row_json(t);
      row["star_and_starstarstar"]       = t.star_and_starstarstar;
      row["starstarstar_not_starstar"]   = t.starstarstar_not_starstar;
      row["ds_without_star_or_starstar"] = t.ds_without_star_or_starstar;
      if (exp) {
        row["expected"] = table1_row_json(*exp);
        row["match"]    = m;
      }
      j["rows"].push_back(row);
      rows.push_back(t);
      ok.push_back(m);
      all = all && m;
    }
    j["all_match"] = all;
    if (ctx.human) {
      std::ostringstream os;
      os << provenance_line(ctx);
      render_table1(rows, ok, os);
      write_out(ctx, os.str());
    } else {
      emit_report(ctx, j);
    }
    return all ? kOk : kNegative;
  }

  // artifacts -----------------------------------------------------------------

  QuasiRackData require_quasi_rack(Magma const& m) {
    auto q = quasi_rack_structure(m);
    if (!q) throw PreconditionError("input is not a quasi rack");
    return *q;
  }

  int cmd_derive(std::string const& path, Context& ctx) {
    std::string   text = load(path, ctx);
    QuasiRackData q    = require_quasi_rack(parse_magma(text, detect_format(text)));
    SolutionTable d    = derived_map(q);
    if (!is_solution(d)) std::cerr << "yaxl: note: the derived map is not a solution\n";
    emit_artifact(ctx, write_solution(d, output_format(ctx)), output_format(ctx));
    return kOk;
  }

  int cmd_decompose(std::string const& path, Context& ctx) {
    std::string   text = load(path, ctx);
    QuasiRackData q    = require_quasi_rack(parse_magma(text, detect_format(text)));
    if (!check_star(q) || !check_starstarstar(q)) {
      throw PreconditionError("decompose needs (*) and (***)");
    }
    emit_artifact(ctx, write_system(decompose(q), "fibers"), Format::json);
    return kOk;
  }

  struct ConstructArgs {
    std::string kind;
    std::string input;
    std::size_t n = 0;
    std::string map, f, g;
    long long   e = -1;
  };

  CliffordTable load_clifford(std::string const& path, Context& ctx) {
    std::string text = load(path, ctx);
    return CliffordTable(parse_magma(text, detect_format(text)));
  }

  int cmd_construct(ConstructArgs const& a, Context& ctx) {
    auto need_input = [&] {
      if (a.input.empty()) throw InputError("construct " + a.kind + " needs an input file");
    };
    auto need_n = [&] {
      if (a.n == 0) throw InputError("construct " + a.kind + " needs --n >= 1");
      ctx.input_hash = fnv1a64(ctx.command + " " + std::to_string(a.n));
    };
    Format f = output_format(ctx);
    auto magma_out = [&](Magma const& m) { emit_artifact(ctx, write_magma(m, f), f); };

    if (a.kind == "dihedral") {
      need_n();
      magma_out(dihedral_quandle(a.n));
    } else if (a.kind == "trivial") {
      need_n();
      magma_out(trivial_shelf(a.n));
    } else if (a.kind == "cyclic-group") {
      need_n();
      magma_out(cyclic_group(a.n));
    } else if (a.kind == "constant") {
      if (a.map.empty()) throw InputError("construct constant needs --map");
      ctx.input_hash = fnv1a64(a.map);
      magma_out(constant_shelf(parse_fnmap(a.map)));
    } else if (a.kind == "conjugation" || a.kind == "core" || a.kind == "deformed") {
      need_input();
      CliffordTable s = load_clifford(a.input, ctx);
      if (a.kind == "conjugation") {
        magma_out(conjugation_quasi_quandle(s));
      } else if (a.kind == "core") {
        magma_out(core_quasi_quandle(s));
      } else {
        if (a.e < 0) throw InputError("construct deformed needs --e");
        magma_out(deformed_quasi_rack(s, static_cast<Point>(a.e)));
      }
    } else if (a.kind == "clifford") {
      need_input();
      magma_out(clifford_from_system(parse_system(load(a.input, ctx), "groups")).mul());
    } else if (a.kind == "plonka-sum") {
      need_input();
      PlonkaSystem p = parse_system(load(a.input, ctx), "fibers");
      validate_plonka_system(p);
      sum_structure_check(p);
      magma_out(plonka_sum(p));
    } else if (a.kind == "trivial-brace") {
      need_input();
      emit_artifact(ctx, write_weak_brace(trivial_weak_brace(load_clifford(a.input, ctx))),
                    Format::json);
    } else if (a.kind == "opposite-brace") {
      need_input();
      emit_artifact(ctx, write_weak_brace(opposite_brace(parse_weak_brace(load(a.input, ctx)))),
                    Format::json);
    } else if (a.kind == "brace-solution") {
      need_input();
      WeakBraceTable b = parse_weak_brace(load(a.input, ctx));
      if (!weak_brace_validate(b).valid()) throw PreconditionError("input is not a weak brace");
      emit_artifact(ctx, write_solution(brace_solution(b), f), f);
    } else if (a.kind == "lyubashenko") {
      if (a.f.empty() || a.g.empty()) throw InputError("construct lyubashenko needs --f and --g");
      ctx.input_hash = fnv1a64(a.f + "/" + a.g);
      emit_artifact(ctx, write_solution(lyubashenko(parse_fnmap(a.f), parse_fnmap(a.g)), f), f);
    } else {
      need_input();
      std::string text = load(a.input, ctx);
      emit_artifact(ctx,
                    write_solution(constant_lambda_twist(parse_solution(text, detect_format(text))), f),
                    f);
    }
    return kOk;
  }

  int cmd_twist(std::string const& mode, std::string const& path, Context& ctx) {
    std::string text = load(path, ctx);
    if (mode == "apply") {
      TwistFamily t = parse_twist(text);
      if (!is_g_twist(t)) {
        std::cerr << "yaxl: the family is not a g-twist\n";
        return kNegative;
      }
      Format f = output_format(ctx);
      emit_artifact(ctx, write_solution(solution_from_twist(t), f), f);
      return kOk;
    }
    if (mode == "from-solution") {
      SolutionTable s = parse_solution(text, detect_format(text));
      if (!is_solution(s) || !is_special_qlnd_solution(s)) {
        throw PreconditionError(
            "input is not a quasi left non-degenerate solution with (A), (B), (C)");
      }
      emit_artifact(ctx, write_twist(twist_from_solution(s)), Format::json);
      return kOk;
    }
    Magma m = parse_magma(text, detect_format(text));
    if (mode == "identity") {
      emit_artifact(ctx, write_twist(identity_twist(m)), Format::json);
    } else {
      emit_artifact(ctx, write_twist(translation_twist(require_quasi_rack(m))), Format::json);
    }
    return kOk;
  }

  // search --------------------------------------------------------------------

  int cmd_search(int question, std::size_t n, std::uint64_t samples, std::uint64_t budget,
                 std::size_t max_candidates, Context& ctx) {
    SearchOptions opt;
    opt.n           = n;
    opt.seed        = ctx.seed;
    opt.samples     = samples;
    opt.node_budget = budget;
    opt.workers     = ctx.workers;
    opt.allow_large = guard_lifted(n);
    if (n >= 4 && !opt.seed) throw InputError("sampled searches (n >= 4) require --seed");
    ctx.input_hash = fnv1a64(ctx.command + " " + std::to_string(question) + " "
                             + std::to_string(n));

    SearchReport rep = question == 1 ? search_question1(opt) : search_question2(opt);
    json         r;
    r["question"]        = rep.question;
    r["n"]               = rep.n;
    r["exhaustive"]      = rep.exhaustive;
    r["lambda_families"] = rep.lambda_families;
    r["solutions"]       = rep.solutions;
    r["qualifying"]      = rep.qualifying;
    r["candidates_found"] = rep.candidates.size();
    json cs = json::array();
    for (std::size_t i = 0; i < rep.candidates.size() && i < max_candidates; ++i) {
      cs.push_back(solution_json(rep.candidates[i]));
    }
    r["candidates"] = cs;
    r["summary"]    = rep.summary;
    emit_report(ctx, r);
    return kOk;
  }

  void add_output_options(CLI::App* sub, Context& ctx, bool report, bool artifact) {
    sub->add_option("-o,--output", ctx.output, "Output file (default stdout)");
    if (report) sub->add_flag("--human", ctx.human, "Human readable report");
    if (artifact) {
      sub->add_option("--format", ctx.format, "Artifact format")
          ->check(CLI::IsMember({"text", "json"}));
    }
  }

  int run(int argc, char** argv) {
    CLI::App app{"Quasi racks, Yang-Baxter solutions and related finite structures"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));

    Context ctx;

    std::string check_kind, check_path;
    auto* check = app.add_subcommand("check", "Validate and classify a structure");
    check->add_option("kind", check_kind, "Structure kind")
        ->required()
        ->check(CLI::IsMember({"shelf", "solution", "clifford", "weak-brace", "twist", "plonka"}));
    check->add_option("path", check_path, "Input file, - for stdin")->required();
    add_output_options(check, ctx, true, false);

    std::size_t              en_n = 0;
    std::string              en_class = "quasi_rack";
    std::vector<std::string> en_filters;
    bool                     en_stream = false;
    auto* en = app.add_subcommand("enumerate", "Count or list structures up to isomorphism");
    en->add_option("--n", en_n, "Carrier size")->required();
    en->add_option("--class", en_class,
                   "shelf, rack, quandle, quasi_rack or quasi_quandle");
    en->add_option("--filter", en_filters,
                   "star, starstar, starstarstar, derived_is_solution (repeatable)");
    en->add_flag("--stream", en_stream, "Print every canonical table");
    en->add_option("--workers", ctx.workers)->check(CLI::PositiveNumber);
    add_output_options(en, ctx, true, false);

    std::size_t t1_max = 4;
    auto*       t1     = app.add_subcommand("table1", "Cross tabulate quasi racks of order 2..max-n");
    t1->add_option("--max-n", t1_max);
    t1->add_option("--workers", ctx.workers)->check(CLI::PositiveNumber);
    add_output_options(t1, ctx, true, false);

    std::string der_path;
    auto*       der = app.add_subcommand("derive", "Derived map of a quasi rack");
    der->add_option("path", der_path)->required();
    add_output_options(der, ctx, false, true);

    ConstructArgs ca;
    auto*         con = app.add_subcommand("construct", "Build an example structure");
    con->add_option("kind", ca.kind)
        ->required()
        ->check(CLI::IsMember({"dihedral", "trivial", "cyclic-group", "constant",
                               "conjugation", "core", "deformed", "clifford", "plonka-sum",
                               "trivial-brace", "opposite-brace", "brace-solution",
                               "lyubashenko", "constant-lambda-twist"}));
    con->add_option("input", ca.input, "Input file for kinds that transform one");
    con->add_option("--n", ca.n);
    con->add_option("--map", ca.map, "Idempotent map for constant, e.g. \"0 0 2\"");
    con->add_option("--f", ca.f);
    con->add_option("--g", ca.g);
    con->add_option("--e", ca.e, "Idempotent for deformed");
    add_output_options(con, ctx, false, true);

    std::string dec_path;
    auto*       dec = app.add_subcommand("decompose", "Plonka decomposition of a quasi rack");
    dec->add_option("path", dec_path)->required();
    add_output_options(dec, ctx, false, false);

    std::string tw_mode, tw_path;
    auto*       tw = app.add_subcommand("twist", "Build twist families or their solutions");
    tw->add_option("mode", tw_mode)
        ->required()
        ->check(CLI::IsMember({"apply", "from-solution", "identity", "translation"}));
    tw->add_option("path", tw_path)->required();
    add_output_options(tw, ctx, false, true);

    int           se_q = 1;
    std::size_t   se_n = 0;
    std::uint64_t se_samples = 2000, se_budget = 20000, se_seed = 0;
    std::size_t   se_max = 20;
    auto*         se = app.add_subcommand("search", "Search for answers to the open questions");
    se->add_option("--question", se_q)->required()->check(CLI::IsMember({1, 2}));
    se->add_option("--n", se_n)->required();
    auto* seed_opt = se->add_option("--seed", se_seed, "PRNG seed (required for n >= 4)");
    se->add_option("--samples", se_samples);
    se->add_option("--budget", se_budget, "Rho search nodes per sample");
    se->add_option("--max-candidates", se_max, "Candidates listed in the report");
    se->add_option("--workers", ctx.workers)->check(CLI::PositiveNumber);
    add_output_options(se, ctx, true, false);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int rc = app.exit(e);
      return rc == 0 ? kOk : kInput;
    }

    if (*check) {
      ctx.command = "check " + check_kind;
      return cmd_check(check_kind, check_path, ctx);
    }
    if (*en) {
      ctx.command = "enumerate";
      return cmd_enumerate(en_n, en_class, en_filters, en_stream, ctx);
    }
    if (*t1) {
      ctx.command = "table1";
      return cmd_table1(t1_max, ctx);
    }
    if (*der) {
      ctx.command = "derive";
      return cmd_derive(der_path, ctx);
    }
    if (*con) {
      ctx.command = "construct " + ca.kind;
      return cmd_construct(ca, ctx);
    }
    if (*dec) {
      ctx.command = "decompose";
      return cmd_decompose(dec_path, ctx);
    }
    if (*tw) {
      ctx.command = "twist " + tw_mode;
      return cmd_twist(tw_mode, tw_path, ctx);
    }
    ctx.command = "search";
    if (seed_opt->count() > 0) ctx.seed = se_seed;
    return cmd_search(se_q, se_n, se_samples, se_budget, se_max, ctx);
  }

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (yaxl::InternalError const& e) {
    std::cerr << "yaxl: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (yaxl::Error const& e) {
    std::cerr << "yaxl: error: " << e.what() << '\n';
    return kInput;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "yaxl: error: " << e.what() << '\n';
    return kInput;
  } catch (std::exception const& e) {
    std::cerr << "yaxl: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
