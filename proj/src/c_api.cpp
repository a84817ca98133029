#include "elemop/elemop.h"

#include "elemop/error.hpp"
#include "elemop/json_io.hpp"
#include "elemop/lab.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>

struct elemop_matrix {
  elemop::Matrix value;
};

struct elemop_operator {
  elemop::ElementaryOperator value;
};

namespace {

thread_local std::string last_error;

elemop_status fail(elemop_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

elemop_status emit(const elemop::Json &j, char **out) {
  *out = dup_string(j.dump());
  return *out ? ELEMOP_OK : fail(ELEMOP_ERR_INTERNAL, "out of memory");
}

template <typename Fn>
elemop_status guarded(Fn &&fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const elemop::ParseError &e) {
    return fail(ELEMOP_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception &e) {
    return fail(ELEMOP_ERR_PARSE, e.what());
  } catch (const elemop::ShapeError &e) {
    return fail(ELEMOP_ERR_SHAPE, e.what());
  } catch (const elemop::PreconditionError &e) {
    return fail(ELEMOP_ERR_PRECONDITION, e.what());
  } catch (const elemop::IntegrityError &e) {
    return fail(ELEMOP_ERR_INTEGRITY, e.what());
  } catch (const std::invalid_argument &e) {
    return fail(ELEMOP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception &e) {
    return fail(ELEMOP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ELEMOP_ERR_INTERNAL, "unknown exception");
  }
}

#define REQUIRE_ARG(cond)                                                                          \
  if (!(cond))                                                                                     \
  return fail(ELEMOP_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond)

} // namespace

extern "C" {

const char *elemop_last_error(void) { return last_error.c_str(); }

const char *elemop_status_name(elemop_status status) {
  switch (status) {
  case ELEMOP_OK:
    return "ok";
  case ELEMOP_PROPERTY_FAILED:
    return "property failed";
  case ELEMOP_ERR_PARSE:
    return "parse error";
  case ELEMOP_ERR_SHAPE:
    return "shape error";
  case ELEMOP_ERR_PRECONDITION:
    return "precondition violated";
  case ELEMOP_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case ELEMOP_ERR_INTEGRITY:
    return "integrity error";
  case ELEMOP_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void elemop_string_free(char *s) { std::free(s); }

elemop_status elemop_matrix_from_json(const char *json, elemop_matrix **out) {
  REQUIRE_ARG(json && out);
  return guarded([&] {
    *out = new elemop_matrix{elemop::matrix_from_json(elemop::Json::parse(json))};
    return ELEMOP_OK;
  });
}

elemop_status elemop_matrix_to_json(const elemop_matrix *m, char **out) {
  REQUIRE_ARG(m && out);
  return guarded([&] { return emit(elemop::to_json(m->value), out); });
}

void elemop_matrix_free(elemop_matrix *m) { delete m; }

elemop_status elemop_operator_from_json(const char *json, elemop_operator **out) {
  REQUIRE_ARG(json && out);
  return guarded([&] {
    *out = new elemop_operator{elemop::operator_from_json(elemop::Json::parse(json))};
    return ELEMOP_OK;
  });
}

elemop_status elemop_operator_to_json(const elemop_operator *op, char **out) {
  REQUIRE_ARG(op && out);
  return guarded([&] { return emit(elemop::to_json(op->value), out); });
}

void elemop_operator_free(elemop_operator *op) { delete op; }

elemop_status elemop_operator_make(const char *kind, const elemop_matrix *a,
                                   const elemop_matrix *b, elemop_operator **out) {
  REQUIRE_ARG(kind && a && out);
  return guarded([&] {
    const std::string_view k = kind;
    if (k == "inner_derivation") {
      *out = new elemop_operator{elemop::make_inner_derivation(a->value)};
      return ELEMOP_OK;
    }
    if (!b)
      return fail(ELEMOP_ERR_INVALID_ARGUMENT, "operator kind '" + std::string(k) + "' needs two matrices");
    if (k == "multiplication")
      *out = new elemop_operator{elemop::make_multiplication(a->value, b->value)};
    else if (k == "generalized_derivation")
      *out = new elemop_operator{elemop::make_generalized_derivation(a->value, b->value)};
    else if (k == "v")
      *out = new elemop_operator{elemop::make_v_operator(a->value, b->value)};
    else
      return fail(ELEMOP_ERR_INVALID_ARGUMENT, "unknown operator kind '" + std::string(k) + "'");
    return ELEMOP_OK;
  });
}

elemop_status elemop_operator_apply(const elemop_operator *op, const elemop_matrix *x,
                                    elemop_matrix **out) {
  REQUIRE_ARG(op && x && out);
  return guarded([&] {
    *out = new elemop_matrix{elemop::apply(op->value, x->value)};
    return ELEMOP_OK;
  });
}

elemop_status elemop_operator_superop(const elemop_operator *op, elemop_matrix **out) {
  REQUIRE_ARG(op && out);
  return guarded([&] {
    *out = new elemop_matrix{elemop::superoperator(op->value)};
    return ELEMOP_OK;
  });
}

elemop_status elemop_matrix_nilpotency(const elemop_matrix *m, char **out) {
  REQUIRE_ARG(m && out);
  return guarded([&] { return emit(elemop::to_json(elemop::is_nilpotent(m->value)), out); });
}

elemop_status elemop_operator_nilpotency(const elemop_operator *op, char **out) {
  REQUIRE_ARG(op && out);
  return guarded([&] { return emit(elemop::to_json(elemop::op_is_nilpotent(op->value)), out); });
}

elemop_status elemop_check_pair(const char *theorem, const elemop_matrix *a,
                                const elemop_matrix *b, char **out) {
  REQUIRE_ARG(theorem && a && b && out);
  return guarded([&] {
    const std::string_view t = theorem;
    elemop::TheoremCheckResult r;
    if (t == "2.1")
      r = elemop::thm21_criterion(a->value, b->value);
    else if (t == "2.3")
      r = elemop::thm23_check(a->value, b->value);
    else if (t == "1.1")
      r = elemop::fong_sourour_check(a->value, b->value);
    else
      return fail(ELEMOP_ERR_INVALID_ARGUMENT, "unknown pair theorem '" + std::string(t) + "'");
    const elemop_status s = emit(elemop::to_json(r), out);
    if (s == ELEMOP_OK && !r.consistent)
      return fail(ELEMOP_PROPERTY_FAILED, "hypotheses hold but the operator is not nilpotent");
    return s;
  });
}

elemop_status elemop_check_terms(const elemop_operator *op, char **out) {
  REQUIRE_ARG(op && out);
  return guarded([&] {
    const auto r = elemop::thm22_check(op->value.left(), op->value.right());
    const elemop_status s = emit(elemop::to_json(r), out);
    if (s == ELEMOP_OK && !r.consistent)
      return fail(ELEMOP_PROPERTY_FAILED, "hypotheses hold but the operator is not nilpotent");
    return s;
  });
}

elemop_status elemop_proof_replay(const elemop_matrix *a, const elemop_matrix *b, char **out) {
  REQUIRE_ARG(a && b && out);
  return guarded([&] {
    const auto trace = elemop::thm21_proof_replay(a->value, b->value);
    const elemop_status s = emit(elemop::to_json(trace), out);
    if (s == ELEMOP_OK && !trace.a_pow_zero)
      return fail(ELEMOP_PROPERTY_FAILED, "replay did not conclude A^m = 0");
    return s;
  });
}

elemop_status elemop_example(const char *which, const char *params, char **out) {
  REQUIRE_ARG(which && out);
  return guarded([&] {
    const std::string_view w = which;
    if (w == "3.1") {
      if (params)
        return fail(ELEMOP_ERR_INVALID_ARGUMENT, "example 3.1 takes no parameters");
      return emit(elemop::to_json(elemop::example_3_1()), out);
    }
    if (w == "3.2") {
      const auto p = params ? elemop::parse_example32_params(params) : elemop::Example32Params{};
      return emit(elemop::to_json(elemop::example_3_2(p)), out);
    }
    return fail(ELEMOP_ERR_INVALID_ARGUMENT, "unknown example '" + std::string(w) + "'");
  });
}

elemop_status elemop_sweep(const char *theorem, size_t dim, size_t trials, uint64_t seed,
                           char **out) {
  REQUIRE_ARG(theorem && out);
  return guarded([&] {
    const std::string_view t = theorem;
    elemop::SweepReport report;
    if (t == "2.1" || (t == "1.1" && trials == 0)) {
      if (dim != 2)
        return fail(ELEMOP_ERR_PRECONDITION, "exhaustive sweep runs at dim 2 only");
      report = t == "2.1" ? elemop::sweep_thm21_exhaustive() : elemop::sweep_fong_sourour_exhaustive();
    } else {
      elemop::SweepTheorem which;
      if (t == "2.2")
        which = elemop::SweepTheorem::Thm22;
      else if (t == "2.3")
        which = elemop::SweepTheorem::Thm23;
      else if (t == "1.1")
        which = elemop::SweepTheorem::FongSourour;
      else
        return fail(ELEMOP_ERR_INVALID_ARGUMENT, "unknown sweep theorem '" + std::string(t) + "'");
      if (trials == 0)
        return fail(ELEMOP_ERR_PRECONDITION, "random sweep needs at least one trial");
      elemop::GeneratorConfig config;
      config.dim = dim;
      config.seed = seed;
      report = elemop::sweep_thm(which, config, trials);
    }
    const elemop_status s = emit(elemop::to_json(report), out);
    if (s == ELEMOP_OK && !report.passed())
      return fail(ELEMOP_PROPERTY_FAILED, std::to_string(report.violations.size()) + " violation(s)");
    return s;
  });
}

elemop_status elemop_search(const char *target, size_t dim, size_t trials, uint64_t seed,
                            char **out) {
  REQUIRE_ARG(target && out);
  return guarded([&] {
    const std::string_view t = target;
    elemop::SearchTarget which;
    if (t == "2.1-ext")
      which = elemop::SearchTarget::Thm21Extension;
    else if (t == "2.2")
      which = elemop::SearchTarget::Thm22;
    else if (t == "2.3")
      which = elemop::SearchTarget::Thm23;
    else
      return fail(ELEMOP_ERR_INVALID_ARGUMENT, "unknown search target '" + std::string(t) + "'");
    elemop::GeneratorConfig config;
    config.dim = dim;
    config.seed = seed;
    std::vector<elemop::SeedPair> seeds;
    const elemop::Example32Params p;
    if (dim == 3)
      seeds.push_back({"example-3.2", elemop::example_3_2_a(p), elemop::example_3_2_b(p)});
    if (dim == 2)
      seeds.push_back({"example-3.1", elemop::Matrix{{0, 1}, {0, 0}}, elemop::Matrix{{0, 0}, {1, 0}}});
    const auto report = elemop::search_converse_failures(which, config, trials, seeds);
    const elemop_status s = emit(elemop::to_json(report), out);
    if (s == ELEMOP_OK && !report.passed())
      return fail(ELEMOP_PROPERTY_FAILED, std::to_string(report.violations.size()) + " violation(s)");
    return s;
  });
}

} // extern "C"
