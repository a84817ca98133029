#pragma once

#include "elemop/lab.hpp"
#include "elemop/matrix.hpp"
#include "elemop/operator.hpp"
#include "elemop/theorems.hpp"

#include <json.hpp>

namespace elemop {

using Json = nlohmann::json;

// Matrix: {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}
Json to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

// Operator: {"dim": n, "terms": [{"a": <Matrix>, "b": <Matrix>}, ...]}
Json to_json(const ElementaryOperator &op);
ElementaryOperator operator_from_json(const Json &j);

Json to_json(const NilpotencyReport &r);
Json to_json(const TheoremCheckResult &r);
Json to_json(const ProofTrace &t);
Json to_json(const SweepReport &r);
Json to_json(const Example31Record &r);
Json to_json(const Example32Record &r);

/// Comma-separated exact scalars "a,b,c,d,k".
Example32Params parse_example32_params(std::string_view text);

} // namespace elemop
