#include "liecx/json_io.hpp"

namespace liecx {

using nlohmann::json;

namespace {

Rational scalar_from_json(const json& v) {
  if (!v.is_string()) throw InvalidInput("expected scalar as \"p\" or \"p/q\" string");
  auto r = Rational::parse(v.get<std::string>());
  if (!r) throw InvalidInput("malformed scalar: " + v.get<std::string>());
  return *r;
}

}  // namespace

json algebra_to_json(const LieAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  out["basis_labels"] = g.basis_labels();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      json result = json::object();
      for (int k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero()) result[std::to_string(k + 1)] = g.c(i, j, k).str();
      if (!result.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"result", result}});
    }
  out["brackets"] = brackets;
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("algebra JSON: missing integer \"dim\"");
  const int dim = j["dim"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("basis_labels")) labels = j["basis_labels"].get<std::vector<std::string>>();
  std::vector<LieAlgebra::Entry> entries;
  if (j.contains("brackets")) {
    for (const json& b : j["brackets"]) {
      int i = b.at("i").get<int>() - 1;
      int jj = b.at("j").get<int>() - 1;
      for (auto it = b.at("result").begin(); it != b.at("result").end(); ++it) {
        int k = std::stoi(it.key()) - 1;
        entries.push_back({i, jj, k, scalar_from_json(it.value())});
      }
    }
  }
  return LieAlgebra(dim, entries, "", std::move(labels));
}

json endomorphism_to_json(const Endomorphism& j) {
  json rows = json::array();
  for (int r = 0; r < j.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < j.dim(); ++c) row.push_back(j.matrix()(r, c).str());
    rows.push_back(row);
  }
  return {{"dim", j.dim()}, {"rows", rows}};
}

Endomorphism endomorphism_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("rows")) throw InvalidInput("endomorphism JSON: need dim and rows");
  const int dim = j["dim"].get<int>();
  const json& rows = j["rows"];
  if (static_cast<int>(rows.size()) != dim) throw InvalidInput("endomorphism JSON: row count mismatch");
  MatQ m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[r].size()) != dim)
      throw InvalidInput("endomorphism JSON: column count mismatch");
    for (int c = 0; c < dim; ++c) m(r, c) = scalar_from_json(rows[r][c]);
  }
  return Endomorphism(std::move(m));
}

json report_to_json(const IntegrabilityReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    if (vec_is_zero(p.value)) continue;
    json value = json::array();
    for (const Rational& v : p.value) value.push_back(v.str());
    pairs.push_back({{"a", p.a + 1}, {"b", p.b + 1}, {"value", value}});
  }
  return {{"integrable", report.integrable},
          {"max_residual_norm", report.max_residual_norm.str()},
          {"nonzero_pairs", pairs}};
}

json search_result_to_json(const SearchResult& result) {
  json rows = json::array();
  for (int r = 0; r < result.best_matrix.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < result.best_matrix.cols(); ++c) row.push_back(result.best_matrix(r, c));
    rows.push_back(row);
  }
  return {{"best_residual", result.best_residual},
          {"best_start", result.best_start},
          {"starts", result.starts},
          {"converged_starts", result.converged_starts},
          {"seed", result.seed},
          {"per_start_residuals", result.per_start_residuals},
          {"best_matrix", {{"dim", result.best_matrix.rows()}, {"rows", rows}}}};
}

json system_to_json(const PolynomialSystem& sys) {
  json eqs = json::array();
  for (size_t i = 0; i < sys.equations.size(); ++i) {
    const auto& prov = sys.provenance[i];
    json terms = json::array();
    for (const PolyTerm& t : sys.equations[i].terms) {
      json vars = json::array();
      for (int v : t.vars)
        if (v >= 0) vars.push_back(v);
      terms.push_back({{"coef", t.coef.str()}, {"vars", vars}});
    }
    json p;
    if (prov.kind == EquationProvenance::Kind::SquareIdentity)
      p = {{"kind", "square"}, {"row", prov.a + 1}, {"col", prov.b + 1}};
    else
      p = {{"kind", "nijenhuis"}, {"a", prov.a + 1}, {"b", prov.b + 1}, {"k", prov.k + 1}};
    eqs.push_back({{"provenance", p}, {"terms", terms}});
  }
  return {{"dim", sys.dim}, {"n_unknowns", sys.n_unknowns}, {"equations", eqs}};
}

}  // namespace liecx
