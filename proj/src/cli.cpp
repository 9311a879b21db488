#include "cslab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cslab/errors.hpp"
#include "cslab/json_io.hpp"

namespace cslab {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("ParseError", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long closure_cap(long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CSLAB_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxGroupOrder;
}

json analysis_report(const LeftQuasigroup& t, long cap) {
  json rep;
  rep["size"] = t.size();
  rep["is_cycle_set"] = is_cycle_set(t);
  rep["nondegenerate"] = is_nondegenerate(t);
  rep["latin"] = is_latin(t);
  rep["irretractable"] = is_irretractable(t);
  rep["indecomposable"] = is_indecomposable(t);
  rep["simple"] = nullptr;
  rep["group_order"] = nullptr;
  rep["dis_order"] = nullptr;
  rep["dis_regular"] = nullptr;
  rep["dis_nilpotent"] = nullptr;
  rep["block_systems"] = nullptr;
  rep["congruence_count"] = nullptr;
  json limits = json::array();
  if (t.size() <= kDefaultMaxCarrier) {
    rep["simple"] = is_simple(t);
    rep["congruence_count"] = congruences(t).size();
  } else {
    limits.push_back("simple/congruence_count skipped: carrier above 64");
  }
  try {
    PermGroup g = perm_group(t, cap);
    rep["group_order"] = g.order();
    PermGroup dis = displacement_group(t, cap);
    rep["dis_order"] = dis.order();
    TransitivityProfile prof = transitivity_profile(dis);
    rep["dis_regular"] = prof.regular;
    rep["dis_nilpotent"] = is_nilpotent(dis);
    if (rep["indecomposable"].get<bool>()) {
      json systems = json::array();
      for (const auto& b : all_block_systems(g)) systems.push_back(partition_to_json(b));
      rep["block_systems"] = systems;
    } else {
      rep["block_systems"] = json::array();
    }
  } catch (const LimitExceeded& e) {
    limits.push_back(e.what());
  }
  rep["limits_exceeded"] = limits;
  return rep;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  LoadedObject obj = load_object(read_file(path));
  json rep;
  rep["kind"] = obj.kind;
  bool ok = true;
  if (obj.kind == "solution") {
    SolutionPair s = solution_from_json(obj.raw);
    SolutionReport sr = verify_solution(s);
    rep["braid"] = sr.braid;
    rep["involutive"] = sr.involutive;
    rep["nondegenerate"] = sr.nondegenerate;
    ok = sr.braid && sr.involutive && sr.nondegenerate;
    if (!sr.braid)
      rep["counterexample"] = json::array({sr.witness[0], sr.witness[1], sr.witness[2]});
  } else if (obj.kind == "brace") {
    try {
      brace_from_json(obj.raw);
      rep["brace_axioms"] = true;
    } catch (const InvalidInput& e) {
      std::string k = e.kind();
      if (k == "ParseError") throw;
      rep["brace_axioms"] = false;
      rep["failure"] = e.what();
      ok = false;
    }
  } else {
    LeftQuasigroup t = table_of(obj);
    auto witness = cycle_set_counterexample(t);
    rep["is_cycle_set"] = witness.empty();
    rep["nondegenerate"] = is_nondegenerate(t);
    if (!witness.empty()) rep["counterexample"] = witness;
    ok = witness.empty() && rep["nondegenerate"].get<bool>();
  }
  rep["ok"] = ok;
  out << rep.dump(2) << "\n";
  err << (ok ? "all checks passed" : "check failed") << "\n";
  return ok ? 0 : 1;
}

int cmd_enumerate(int size, EnumerationFilters filters, bool allow_long, std::ostream& out,
                  std::ostream& err) {
  if (!filters.cycle_set && !filters.latin && size > 4)
    throw LimitExceeded("SizeLimitExceeded",
                        "unfiltered enumeration above size 4; add --cycle-set or --latin");
  auto tables = enumerate_left_quasigroups(size, filters, allow_long);
  json arr = json::array();
  for (const auto& t : tables) arr.push_back(to_json(t));
  out << arr.dump(2) << "\n";
  err << "count=" << tables.size() << "\n";
  return 0;
}

Perm load_alpha(const std::string& text, int degree) { return parse_perm_text(text, degree); }

}  // namespace

Perm parse_perm_text(const std::string& text, int degree) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("ParseError", "empty permutation");
  if (s[0] == '[') {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw InvalidInput("ParseError", "bad permutation array");
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    if (static_cast<int>(img.size()) != degree)
      throw InvalidInput("ParseError", "permutation degree mismatch");
    return Perm(std::move(img));
  }
  // 1-based disjoint cycles.
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw InvalidInput("ParseError", "expected '(' in cycle string");
    ++i;
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw InvalidInput("ParseError", "expected a point index");
      int point = std::stoi(s.substr(i, j - i)) - 1;
      if (point < 0 || point >= degree)
        throw InvalidInput("ParseError", "cycle entry out of range");
      cyc.push_back(point);
      i = j;
      if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw InvalidInput("ParseError", "unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(degree, cycles);
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite cycle sets, braces and affine classification"};
  app.require_subcommand(1);

  std::string path, path_b, out_path, to_kind, alpha_text;
  long max_order_flag = 0;
  long p_value = 0;
  int size = 0, point_e = 0, point_f = 0;
  bool allow_long = false;
  EnumerationFilters filters;

  auto* verify = app.add_subcommand("verify", "check the axioms of a stored object");
  verify->add_option("path", path)->required();

  auto* analyze = app.add_subcommand("analyze", "structural report for a table");
  analyze->add_option("path", path)->required();
  analyze->add_option("--max-group-order", max_order_flag);

  auto* congr = app.add_subcommand("congruences", "list all congruences");
  congr->add_option("path", path)->required();

  auto* blocks = app.add_subcommand("blocks", "list nontrivial block systems");
  blocks->add_option("path", path)->required();

  auto* simple = app.add_subcommand("simple", "test simplicity");
  simple->add_option("path", path)->required();

  auto* convert = app.add_subcommand("convert", "convert between cycle set and solution");
  convert->add_option("path", path)->required();
  convert->add_option("--to", to_kind)->required()->check(CLI::IsMember({"cycleset", "solution"}));

  auto* classify = app.add_subcommand("classify-pp", "simple affine latin cycle sets of size p^p");
  classify->add_option("--p", p_value)->required();
  classify->add_option("--out", out_path);
  classify->add_flag("--allow-long", allow_long);

  auto* enumerate = app.add_subcommand("enumerate", "bounded exhaustive enumeration");
  enumerate->add_option("--size", size)->required();
  enumerate->add_flag("--cycle-set", filters.cycle_set);
  enumerate->add_flag("--nondegenerate", filters.nondegenerate);
  enumerate->add_flag("--latin", filters.latin);
  enumerate->add_flag("--indecomposable", filters.indecomposable);
  enumerate->add_flag("--irretractable", filters.irretractable);
  enumerate->add_flag("--up-to-iso", filters.up_to_iso);
  enumerate->add_flag("--allow-long", allow_long);

  auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("a", path)->required();
  iso->add_option("b", path_b)->required();

  auto* brace_of = app.add_subcommand("brace-of", "permutation brace of a cycle set");
  brace_of->add_option("path", path)->required();

  auto* deform_cmd = app.add_subcommand("deform", "deform by an automorphism");
  deform_cmd->add_option("path", path)->required();
  deform_cmd->add_option("--alpha", alpha_text)->required();

  auto* rep_cmd = app.add_subcommand("right-linear-rep", "right linear representation");
  rep_cmd->add_option("path", path)->required();
  rep_cmd->add_option("--e", point_e);
  rep_cmd->add_option("--f", point_f);

  std::vector<const char*> argv;
  argv.push_back("cslab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return 2;
    }

    long cap = closure_cap(max_order_flag);

    if (verify->parsed()) return cmd_verify(path, out, err);

    if (analyze->parsed()) {
      LeftQuasigroup t = table_of(load_object(read_file(path)));
      out << analysis_report(t, cap).dump(2) << "\n";
      return 0;
    }

    if (congr->parsed()) {
      LoadedObject obj = load_object(read_file(path));
      json arr = json::array();
      if (obj.kind == "affine") {
        for (const auto& c : congruences_of(affine_from_json(obj.raw)))
          arr.push_back(partition_to_json(c));
      } else {
        for (const auto& c : congruences(table_of(obj))) arr.push_back(partition_to_json(c));
      }
      out << arr.dump(2) << "\n";
      err << "count=" << arr.size() << "\n";
      return 0;
    }

    if (blocks->parsed()) {
      LoadedObject obj = load_object(read_file(path));
      json arr = json::array();
      if (obj.kind == "affine") {
        for (const auto& b : blocks_of(affine_from_json(obj.raw)))
          arr.push_back(partition_to_json(b));
      } else {
        for (const auto& b : all_block_systems(perm_group(table_of(obj), cap)))
          arr.push_back(partition_to_json(b));
      }
      out << arr.dump(2) << "\n";
      err << "count=" << arr.size() << "\n";
      return 0;
    }

    if (simple->parsed()) {
      LeftQuasigroup t = table_of(load_object(read_file(path)));
      bool result = is_simple(t);
      out << json{{"simple", result}}.dump(2) << "\n";
      return result ? 0 : 1;
    }

    if (convert->parsed()) {
      LoadedObject obj = load_object(read_file(path));
      if (to_kind == "solution") {
        out << to_json(to_solution(table_of(obj))).dump(2) << "\n";
      } else {
        LeftQuasigroup t =
            obj.kind == "solution" ? from_solution(solution_from_json(obj.raw)) : table_of(obj);
        out << to_json(t).dump(2) << "\n";
      }
      return 0;
    }

    if (classify->parsed()) {
      VerifyLevel level = default_verify_level(p_value);
      if (allow_long && p_value <= 5) level = VerifyLevel::exhaustive;
      auto reps = classify_pp(p_value, level);
      json arr = json::array();
      for (const auto& r : reps)
        arr.push_back(json{{"lambda", r.lambda}, {"mu", r.mu}, {"c", r.c}, {"verified", r.verified}});
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInput("ParseError", "cannot write '" + out_path + "'");
        f << arr.dump(2) << "\n";
      } else {
        out << arr.dump(2) << "\n";
      }
      err << "count=" << reps.size() << "\n";
      return 0;
    }

    if (enumerate->parsed()) return cmd_enumerate(size, filters, allow_long, out, err);

    if (iso->parsed()) {
      LoadedObject a = load_object(read_file(path));
      LoadedObject b = load_object(read_file(path_b));
      if (a.kind == "affine" && b.kind == "affine") {
        auto witness = iso_affine(affine_from_json(a.raw), affine_from_json(b.raw));
        if (witness) {
          out << json{{"isomorphic", true},
                      {"alpha", witness->alpha.row_vectors()},
                      {"u", witness->u}}
                     .dump(2)
              << "\n";
          return 0;
        }
        out << json{{"isomorphic", false}}.dump(2) << "\n";
        return 1;
      }
      auto witness = isomorphic(table_of(a), table_of(b));
      if (witness) {
        out << json{{"isomorphic", true}, {"map", *witness}}.dump(2) << "\n";
        return 0;
      }
      out << json{{"isomorphic", false}}.dump(2) << "\n";
      return 1;
    }

    if (brace_of->parsed()) {
      LeftQuasigroup t = table_of(load_object(read_file(path)));
      PermutationBrace pb = permutation_brace(t, cap);
      json rep = to_json(pb.brace);
      rep["sigma_inv_index"] = pb.sigma_inv_index;
      json carrier = json::array();
      for (const auto& perm : pb.carrier) carrier.push_back(perm.images());
      rep["carrier"] = carrier;
      out << rep.dump(2) << "\n";
      err << "brace order " << pb.brace.size() << "\n";
      return 0;
    }

    if (deform_cmd->parsed()) {
      LeftQuasigroup t = table_of(load_object(read_file(path)));
      Perm alpha = load_alpha(alpha_text, t.size());
      out << to_json(deform(t, alpha)).dump(2) << "\n";
      return 0;
    }

    if (rep_cmd->parsed()) {
      LeftQuasigroup t = table_of(load_object(read_file(path)));
      RightLinearRepresentation rep = right_linear_rep(t, point_e, point_f);
      json carrier = json::array();
      for (const auto& perm : rep.dis_labeling) carrier.push_back(perm.images());
      out << json{{"e", rep.e},
                  {"f", rep.f},
                  {"neutral", rep.neutral},
                  {"group", rep.group_table},
                  {"phi", rep.phi_ef},
                  {"psi", rep.psi_ef},
                  {"rho", carrier}}
                 .dump(2)
          << "\n";
      return 0;
    }

    err << "no subcommand\n";
    return 2;
  } catch (const LimitExceeded& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace cslab
