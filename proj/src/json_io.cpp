#include "cslab/json_io.hpp"

#include "cslab/errors.hpp"

namespace cslab {

namespace {

std::vector<std::vector<int>> int_matrix(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw InvalidInput("ParseError", std::string("missing array field '") + field + "'");
  std::vector<std::vector<int>> out;
  for (const auto& row : j[field]) {
    if (!row.is_array()) throw InvalidInput("ParseError", "matrix rows must be arrays");
    out.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InvalidInput("ParseError", "matrix entries must be integers");
      out.back().push_back(v.get<int>());
    }
  }
  return out;
}

std::vector<int> int_vector(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw InvalidInput("ParseError", std::string("missing array field '") + field + "'");
  std::vector<int> out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer()) throw InvalidInput("ParseError", "vector entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const LeftQuasigroup& x) {
  return json{{"kind", "left_quasigroup"}, {"size", x.size()}, {"table", x.table()}};
}

json to_json(const SolutionPair& s) {
  return json{{"kind", "solution"}, {"size", s.n}, {"lambda", s.lambda}, {"rho", s.rho}};
}

json to_json(const FiniteBrace& b) {
  return json{{"kind", "brace"},
              {"size", b.size()},
              {"add", b.add_table()},
              {"mul", b.mul_table()},
              {"zero", b.zero()}};
}

json to_json(const AffineCycleSet& a) {
  return json{{"kind", "affine"},
              {"p", a.p},
              {"dim", a.dim},
              {"phi", a.phi.row_vectors()},
              {"psi", a.psi.row_vectors()},
              {"c", a.c}};
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& cls : p.classes()) out.push_back(cls);
  return out;
}

LeftQuasigroup left_quasigroup_from_json(const json& j) {
  auto table = int_matrix(j, "table");
  if (j.contains("size") && j["size"].get<int>() != static_cast<int>(table.size()))
    throw InvalidInput("ParseError", "declared size does not match the table");
  return LeftQuasigroup(std::move(table));
}

SolutionPair solution_from_json(const json& j) {
  SolutionPair s;
  s.lambda = int_matrix(j, "lambda");
  s.rho = int_matrix(j, "rho");
  s.n = static_cast<int>(s.lambda.size());
  if (j.contains("size") && j["size"].get<int>() != s.n)
    throw InvalidInput("ParseError", "declared size does not match the tables");
  return s;
}

FiniteBrace brace_from_json(const json& j) {
  auto add = int_matrix(j, "add");
  auto mul = int_matrix(j, "mul");
  return FiniteBrace(std::move(add), std::move(mul));
}

AffineCycleSet affine_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("dim"))
    throw InvalidInput("ParseError", "affine object needs 'p' and 'dim'");
  long p = j["p"].get<long>();
  int dim = j["dim"].get<int>();
  FpMatrix phi(p, int_matrix(j, "phi"));
  FpMatrix psi(p, int_matrix(j, "psi"));
  return make_affine(p, dim, std::move(phi), std::move(psi), int_vector(j, "c"));
}

LoadedObject load_object(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("ParseError", "malformed JSON");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput("ParseError", "expected an object with a 'kind' field");
  std::string kind = j["kind"].get<std::string>();
  if (kind != "left_quasigroup" && kind != "solution" && kind != "brace" && kind != "affine")
    throw InvalidInput("ParseError", "unknown kind '" + kind + "'");
  return {kind, std::move(j)};
}

LeftQuasigroup table_of(const LoadedObject& obj, long table_limit) {
  if (obj.kind == "left_quasigroup") return left_quasigroup_from_json(obj.raw);
  if (obj.kind == "solution") return from_solution(solution_from_json(obj.raw));
  if (obj.kind == "affine") return as_table(affine_from_json(obj.raw), table_limit);
  throw InvalidInput("ParseError", "no table view for kind '" + obj.kind + "'");
}

}  // namespace cslab
