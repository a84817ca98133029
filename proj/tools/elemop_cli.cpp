// Command-line front end over the elemop C interface.
//
//   elemop apply     --op OP --x X
//   elemop superop   --op OP
//   elemop nilpotent (--matrix M | --op OP)
//   elemop check     --theorem {2.1|2.2|2.3|1.1} (--a A --b B | --op OP)
//   elemop examples  --which {3.1|3.2} [--params a,b,c,d,k]
//   elemop sweep     --theorem {2.1|2.2|2.3|1.1} --dim N [--trials T] [--seed S]
//   elemop search    --target {2.1-ext|2.2|2.3} --dim N --trials T [--seed S]
//
// Operands are file paths or inline JSON. Exit codes: 0 success, 1 a checked
// property failed, 2 usage or input error.

#include "elemop/elemop.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(elemop_status s, const std::string &msg) : std::runtime_error(msg), status(s) {}
  elemop_status status;
};

struct MatrixDeleter {
  void operator()(elemop_matrix *m) const { elemop_matrix_free(m); }
};
struct OperatorDeleter {
  void operator()(elemop_operator *op) const { elemop_operator_free(op); }
};
struct StringDeleter {
  void operator()(char *s) const { elemop_string_free(s); }
};
using MatrixPtr = std::unique_ptr<elemop_matrix, MatrixDeleter>;
using OperatorPtr = std::unique_ptr<elemop_operator, OperatorDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_source(const std::string &arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{')
    return arg;
  std::ifstream in(arg);
  if (!in)
    throw UsageError("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_for(elemop_status s) {
  switch (s) {
  case ELEMOP_OK:
    return kExitOk;
  case ELEMOP_PROPERTY_FAILED:
  case ELEMOP_ERR_INTEGRITY:
  case ELEMOP_ERR_INTERNAL:
    return kExitFailed;
  default:
    return kExitUsage;
  }
}

void check(elemop_status s, const std::string &what) {
  if (s != ELEMOP_OK)
    throw ApiError(s, what + ": " + elemop_last_error());
}

MatrixPtr load_matrix(const std::string &arg) {
  elemop_matrix *m = nullptr;
  check(elemop_matrix_from_json(read_source(arg).c_str(), &m), arg);
  return MatrixPtr(m);
}

OperatorPtr load_operator(const std::string &arg) {
  elemop_operator *op = nullptr;
  check(elemop_operator_from_json(read_source(arg).c_str(), &op), arg);
  return OperatorPtr(op);
}

int print_matrix(MatrixPtr m, std::ostream &out) {
  char *json = nullptr;
  check(elemop_matrix_to_json(m.get(), &json), "output");
  out << StringPtr(json).get() << '\n';
  return kExitOk;
}

// Prints the document even when the status reports a failed property.
int finish(elemop_status s, char **json, std::ostream &out) {
  StringPtr owned(*json);
  if (owned)
    out << owned.get() << '\n';
  if (s != ELEMOP_OK)
    std::cerr << "elemop: " << elemop_status_name(s) << ": " << elemop_last_error() << '\n';
  return exit_for(s);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact nilpotency analysis of elementary operators on matrix algebras"};
  app.require_subcommand(1, 1);

  std::string op_arg, x_arg, matrix_arg, a_arg, b_arg, theorem, which, params, target, output;
  std::size_t dim = 0, trials = 0;
  std::uint64_t seed = 0;

  app.add_option("-o,--output", output, "Write JSON here instead of standard output");

  auto *apply_cmd = app.add_subcommand("apply", "Apply an operator to a matrix");
  apply_cmd->add_option("--op", op_arg, "Operator JSON (path or inline)")->required();
  apply_cmd->add_option("--x", x_arg, "Matrix JSON (path or inline)")->required();

  auto *superop_cmd = app.add_subcommand("superop", "Superoperator matrix sum kron(B_i^T, A_i)");
  superop_cmd->add_option("--op", op_arg, "Operator JSON")->required();

  auto *nil_cmd = app.add_subcommand("nilpotent", "Nilpotency report for a matrix or operator");
  auto *nil_matrix = nil_cmd->add_option("--matrix", matrix_arg, "Matrix JSON");
  auto *nil_op = nil_cmd->add_option("--op", op_arg, "Operator JSON");
  nil_matrix->excludes(nil_op);
  nil_op->excludes(nil_matrix);

  auto *check_cmd = app.add_subcommand("check", "Theorem criterion check");
  check_cmd->add_option("--theorem", theorem, "2.1, 2.2, 2.3 or 1.1")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "1.1"}));
  check_cmd->add_option("--a,--s", a_arg, "First matrix (2.1, 2.3, 1.1)");
  check_cmd->add_option("--b,--t", b_arg, "Second matrix (2.1, 2.3, 1.1)");
  check_cmd->add_option("--op", op_arg, "Operator whose term tuples are checked (2.2)");

  auto *ex_cmd = app.add_subcommand("examples", "Reproduce a worked example");
  ex_cmd->add_option("--which", which, "3.1 or 3.2")->required()->check(CLI::IsMember({"3.1", "3.2"}));
  ex_cmd->add_option("--params", params, "a,b,c,d,k for 3.2");

  auto *sweep_cmd = app.add_subcommand("sweep", "Theorem sweep");
  sweep_cmd->add_option("--theorem", theorem, "2.1, 2.2, 2.3 or 1.1")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "1.1"}));
  sweep_cmd->add_option("--dim", dim, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--trials", trials, "Random trials (omit for the exhaustive dim-2 mode)");
  sweep_cmd->add_option("--seed", seed, "Master seed");

  auto *search_cmd = app.add_subcommand("search", "Search for converse failures");
  search_cmd->add_option("--target", target, "2.1-ext, 2.2 or 2.3")
      ->required()
      ->check(CLI::IsMember({"2.1-ext", "2.2", "2.3"}));
  search_cmd->add_option("--dim", dim, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--trials", trials, "Sampled instances")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "elemop: cannot write '" << output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream &out = output.empty() ? static_cast<std::ostream &>(std::cout) : file;

  try {
    char *json = nullptr;
    if (apply_cmd->parsed()) {
      auto op = load_operator(op_arg);
      auto x = load_matrix(x_arg);
      elemop_matrix *result = nullptr;
      check(elemop_operator_apply(op.get(), x.get(), &result), "apply");
      return print_matrix(MatrixPtr(result), out);
    }
    if (superop_cmd->parsed()) {
      auto op = load_operator(op_arg);
      elemop_matrix *result = nullptr;
      check(elemop_operator_superop(op.get(), &result), "superop");
      return print_matrix(MatrixPtr(result), out);
    }
    if (nil_cmd->parsed()) {
      if (!matrix_arg.empty()) {
        auto m = load_matrix(matrix_arg);
        return finish(elemop_matrix_nilpotency(m.get(), &json), &json, out);
      }
      if (op_arg.empty())
        throw UsageError("nilpotent: one of --matrix or --op is required");
      auto op = load_operator(op_arg);
      return finish(elemop_operator_nilpotency(op.get(), &json), &json, out);
    }
    if (check_cmd->parsed()) {
      if (theorem == "2.2") {
        if (op_arg.empty() || !a_arg.empty() || !b_arg.empty())
          throw UsageError("check --theorem 2.2 takes --op only");
        auto op = load_operator(op_arg);
        return finish(elemop_check_terms(op.get(), &json), &json, out);
      }
      if (a_arg.empty() || b_arg.empty() || !op_arg.empty())
        throw UsageError("check --theorem " + theorem + " takes --a and --b");
      auto a = load_matrix(a_arg);
      auto b = load_matrix(b_arg);
      return finish(elemop_check_pair(theorem.c_str(), a.get(), b.get(), &json), &json, out);
    }
    if (ex_cmd->parsed()) {
      if (which == "3.1" && !params.empty())
        throw UsageError("examples --which 3.1 takes no --params");
      const char *p = params.empty() ? nullptr : params.c_str();
      return finish(elemop_example(which.c_str(), p, &json), &json, out);
    }
    if (sweep_cmd->parsed()) {
      if (theorem != "2.1" && theorem != "1.1" && trials == 0)
        throw UsageError("sweep --theorem " + theorem + " requires --trials");
      return finish(elemop_sweep(theorem.c_str(), dim, trials, seed, &json), &json, out);
    }
    if (search_cmd->parsed())
      return finish(elemop_search(target.c_str(), dim, trials, seed, &json), &json, out);
  } catch (const UsageError &e) {
    std::cerr << "elemop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError &e) {
    std::cerr << "elemop: " << elemop_status_name(e.status) << ": " << e.what() << '\n';
    return exit_for(e.status);
  }
  return kExitUsage;
}
