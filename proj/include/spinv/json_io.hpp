#pragma once

#include <json.hpp>

#include "spinv/grassmannian.hpp"
#include "spinv/lagrangian.hpp"
#include "spinv/matrix.hpp"

namespace spinv {

using Json = nlohmann::json;

// {"rows": r, "cols": c, "data": [["p/q", ...], ...]}; entries always canonical.
Json matrix_to_json(const Matrix& m);
// Throws ParseError on any structural or literal problem.
Matrix matrix_from_json(const Json& j);

// Same layout as a matrix; semantics is the column span.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json vector_to_json(const Vector& v);

// Entries are [re, im] pairs of numbers.
Json complex_matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_matrix_from_json(const Json& j);

// Entries are numbers; on input, rational strings are accepted too.
Json float_matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd float_matrix_from_json(const Json& j);

// True when every entry of the "data" array is a JSON string.
bool has_exact_entries(const Json& j);

}  // namespace spinv
