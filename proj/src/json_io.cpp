#include "elemop/json_io.hpp"
#include "elemop/error.hpp"

#include <string>

namespace elemop {

namespace {

Json optional_scalar(const std::optional<GaussianRational> &z) {
  return z ? Json(z->str()) : Json(nullptr);
}

Json scalars_json(const std::vector<GaussianRational> &zs) {
  Json out = Json::array();
  for (const auto &z : zs)
    out.push_back(z.str());
  return out;
}

Json matrices_json(const std::vector<Matrix> &ms) {
  Json out = Json::array();
  for (const auto &m : ms)
    out.push_back(to_json(m));
  return out;
}

std::size_t positive_size(const Json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() <= 0)
    throw ParseError(std::string("matrix JSON: '") + key + "' must be a positive integer");
  return j.at(key).get<std::size_t>();
}

GaussianRational entry_from_json(const Json &e) {
  if (e.is_string())
    return GaussianRational::parse(e.get<std::string>());
  if (e.is_number_integer())
    return GaussianRational(e.get<long>());
  throw ParseError("matrix JSON: entries must be strings or integers, got " + e.dump());
}

} // namespace

Json to_json(const Matrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("matrix JSON must be an object");
  const std::size_t rows = positive_size(j, "rows");
  const std::size_t cols = positive_size(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").size() != rows)
    throw ParseError("matrix JSON: 'entries' must be an array of " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json &row = j.at("entries").at(i);
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix JSON: row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = entry_from_json(row.at(c));
  }
  return m;
}

Json to_json(const ElementaryOperator &op) {
  Json terms = Json::array();
  for (const auto &t : op.terms())
    terms.push_back({{"a", to_json(t.a)}, {"b", to_json(t.b)}});
  return {{"dim", op.dim()}, {"terms", std::move(terms)}};
}

ElementaryOperator operator_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw ParseError("operator JSON must be an object with a 'terms' array");
  std::vector<Term> terms;
  for (const auto &t : j.at("terms")) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b"))
      throw ParseError("operator JSON: each term needs 'a' and 'b'");
    terms.push_back({matrix_from_json(t.at("a")), matrix_from_json(t.at("b"))});
  }
  if (terms.empty())
    throw ParseError("operator JSON: 'terms' must be nonempty");
  ElementaryOperator op(std::move(terms));
  if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 0 ||
                            j.at("dim").get<std::size_t>() != op.dim()))
    throw ParseError("operator JSON: 'dim' does not match coefficient size " + std::to_string(op.dim()));
  return op;
}

Json to_json(const NilpotencyReport &r) {
  Json j = {{"nilpotent", r.nilpotent}, {"index", nullptr}, {"witness", nullptr}};
  if (r.index)
    j["index"] = *r.index;
  if (r.witness)
    j["witness"] = {{"power", *r.index - 1},
                    {"row", r.witness->row},
                    {"col", r.witness->col},
                    {"value", r.witness->value.str()}};
  return j;
}

Json to_json(const TheoremCheckResult &r) {
  Json j = {{"theorem", r.theorem},
            {"hypotheses_hold", r.hypotheses_hold},
            {"hypothesis_failures", r.hypothesis_failures},
            {"conclusion_nilpotent", to_json(r.conclusion)},
            {"consistent", r.consistent}};
  if (r.biconditional_holds)
    j["biconditional_holds"] = *r.biconditional_holds;
  if (r.theorem == "2.3") {
    j["lambda"] = optional_scalar(r.lambda);
    j["mu"] = optional_scalar(r.mu);
  } else if (r.theorem == "1.1") {
    j["lambda"] = optional_scalar(r.lambda);
  }
  return j;
}

Json to_json(const ProofTrace &t) {
  Json steps = Json::array();
  for (const auto &s : t.steps)
    steps.push_back({{"basis_index", s.basis_index},
                     {"x", to_json(s.x)},
                     {"rank_one", to_json(s.rank_one_op)},
                     {"sandwich_zero", s.sandwich_zero},
                     {"image_zero", s.image_zero}});
  return {{"exponent", t.exponent},  {"a_pow", to_json(t.a_pow)},   {"b_pow", to_json(t.b_pow)},
          {"z", to_json(t.z)},       {"f", to_json(t.f)},           {"f_of_bz", t.f_of_bz.str()},
          {"steps", std::move(steps)}, {"a_pow_zero", t.a_pow_zero}};
}

namespace {

Json dump_json(const InstanceDump &d) {
  return {{"trial", d.trial},         {"kind", d.kind},
          {"a", matrices_json(d.a)},  {"b", matrices_json(d.b)},
          {"scalars", scalars_json(d.scalars)}, {"note", d.note}};
}

Json dumps_json(const std::vector<InstanceDump> &ds) {
  Json out = Json::array();
  for (const auto &d : ds)
    out.push_back(dump_json(d));
  return out;
}

} // namespace

Json to_json(const SweepReport &r) {
  return {{"theorem", r.theorem},
          {"mode", r.mode},
          {"config",
           {{"dim", r.config.dim},
            {"entry_bound", r.config.entry_bound},
            {"seed", r.config.seed},
            {"gaussian", r.config.gaussian},
            {"prng", "mt19937_64/splitmix64"}}},
          {"trials", r.trials},
          {"instances_tested", r.instances_tested},
          {"hypothesis_instances", r.hypothesis_instances},
          {"auxiliary_checks", r.auxiliary_checks},
          {"violations", dumps_json(r.violations)},
          {"converse_failures", dumps_json(r.converse_failures)},
          {"passed", r.passed()}};
}

Json to_json(const Example31Record &r) {
  return {{"example", "3.1"},
          {"A", to_json(r.a)},
          {"B", to_json(r.b)},
          {"AB", to_json(r.ab)},
          {"BA", to_json(r.ba)},
          {"S", to_json(r.s)},
          {"S_cubed", to_json(r.s_cubed)},
          {"V_basis_images", matrices_json(r.basis_images)},
          {"V_nilpotency", to_json(r.v_nilpotency)},
          {"AB_ne_BA", r.ab_ne_ba},
          {"A_sq_zero", r.a_sq_zero},
          {"B_sq_zero", r.b_sq_zero},
          {"ABA_eq_A", r.aba_eq_a},
          {"BAB_eq_B", r.bab_eq_b},
          {"S_cubed_plus_S_zero", r.s_cubed_plus_s_zero},
          {"V_is_diag_x22_minus_x11", r.v_is_diagonal_swap},
          {"V_not_nilpotent", r.v_not_nilpotent},
          {"all_hold", r.all_hold()}};
}

Json to_json(const Example32Record &r) {
  return {{"example", "3.2"},
          {"params",
           {{"a", r.params.a.str()},
            {"b", r.params.b.str()},
            {"c", r.params.c.str()},
            {"d", r.params.d.str()},
            {"k", r.params.k.str()}}},
          {"A", to_json(r.a)},
          {"B", to_json(r.b)},
          {"AB", to_json(r.ab)},
          {"BA", to_json(r.ba)},
          {"N", to_json(r.n)},
          {"char_poly_A", scalars_json(r.char_poly_a)},
          {"char_poly_B", scalars_json(r.char_poly_b)},
          {"N_nilpotency", to_json(r.n_nilpotency)},
          {"A_nilpotency", to_json(r.a_nilpotency)},
          {"B_nilpotency", to_json(r.b_nilpotency)},
          {"V_nilpotency", to_json(r.v_nilpotency)},
          {"shift_A", optional_scalar(r.shift_a.lambda)},
          {"shift_B", optional_scalar(r.shift_b.lambda)},
          {"thm22_on_V_NB", to_json(r.thm22_on_vnb)},
          {"AB_eq_BA", r.ab_eq_ba},
          {"N_nilpotent", r.n_nilpotent},
          {"V_AB_eq_V_NB", r.v_ab_eq_v_nb},
          {"thm22_hypotheses_hold", r.thm22_hypotheses_hold},
          {"V_nilpotent", r.v_nilpotent},
          {"A_not_nilpotent", r.a_not_nilpotent},
          {"B_not_nilpotent", r.b_not_nilpotent},
          {"no_shift_A", r.no_shift_a},
          {"no_shift_B", r.no_shift_b},
          {"all_hold", r.all_hold()}};
}

Example32Params parse_example32_params(std::string_view text) {
  std::vector<GaussianRational> vals;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    vals.push_back(GaussianRational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (vals.size() != 5)
    throw ParseError("expected five comma-separated scalars a,b,c,d,k, got " + std::to_string(vals.size()));
  return {vals[0], vals[1], vals[2], vals[3], vals[4]};
}

} // namespace elemop
