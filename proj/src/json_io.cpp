#include "spinv/json_io.hpp"

#include <string>

#include "spinv/errors.hpp"

namespace spinv {

namespace {

struct Shape {
  std::size_t rows;
  std::size_t cols;
};

Shape read_shape(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  for (const char* key : {"rows", "cols", "data"})
    if (!j.contains(key)) throw ParseError(std::string("matrix JSON is missing \"") + key + "\"");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError("\"rows\" and \"cols\" must be non-negative integers");
  Shape shape{j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>()};
  const Json& data = j["data"];
  if (!data.is_array() || data.size() != shape.rows)
    throw ParseError("\"data\" must be an array of " + std::to_string(shape.rows) + " rows");
  for (const auto& row : data)
    if (!row.is_array() || row.size() != shape.cols)
      throw ParseError("every row of \"data\" must have " + std::to_string(shape.cols) + " entries");
  return shape;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  const Shape shape = read_shape(j);
  Matrix m(shape.rows, shape.cols);
  for (std::size_t r = 0; r < shape.rows; ++r)
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const Json& e = j["data"][r][c];
      if (!e.is_string()) throw ParseError("matrix entries must be strings like \"3\" or \"-1/2\"");
      m(r, c) = parse_rational(e.get<std::string>());
    }
  return m;
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j) { return Subspace(matrix_from_json(j)); }

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Eigen::MatrixXcd complex_matrix_from_json(const Json& j) {
  const Shape shape = read_shape(j);
  Eigen::MatrixXcd m(shape.rows, shape.cols);
  for (std::size_t r = 0; r < shape.rows; ++r)
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const Json& e = j["data"][r][c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("complex entries must be [re, im] pairs of numbers");
      m(r, c) = {e[0].get<double>(), e[1].get<double>()};
    }
  return m;
}

Json float_matrix_to_json(const Eigen::MatrixXd& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Eigen::MatrixXd float_matrix_from_json(const Json& j) {
  const Shape shape = read_shape(j);
  Eigen::MatrixXd m(shape.rows, shape.cols);
  for (std::size_t r = 0; r < shape.rows; ++r)
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const Json& e = j["data"][r][c];
      if (e.is_number())
        m(r, c) = e.get<double>();
      else if (e.is_string())
        m(r, c) = parse_rational(e.get<std::string>()).get_d();
      else
        throw ParseError("real matrix entries must be numbers or rational strings");
    }
  return m;
}

bool has_exact_entries(const Json& j) {
  read_shape(j);
  for (const auto& row : j["data"])
    for (const auto& e : row)
      if (!e.is_string()) return false;
  return true;
}

}  // namespace spinv
