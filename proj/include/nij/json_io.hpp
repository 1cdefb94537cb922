#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "nij/lie_core.hpp"
#include "nij/matrix.hpp"

namespace nij {

using Json = nlohmann::json;

/// Matrix document {"algebra", "scalar", "matrix"}. Row-major 6x6; column j
/// is the image of e1, e2, e3, e1*, e2*, e3* in that order.
struct MatrixDocument {
  Designator algebra;
  std::variant<Mat6<Rational>, Mat6<double>> matrix;

  ScalarMode mode() const { return matrix.index() == 0 ? ScalarMode::Rational : ScalarMode::Float; }
};

/// Rational documents take "p/q" (or decimal) strings and integer numbers;
/// float documents take numbers only. Anything else, including entries that
/// do not fit the declared mode, raises ParseError.
MatrixDocument parse_matrix_document(const Json& doc);
MatrixDocument parse_matrix_document(const std::string& text);

Json to_json(const Rational& q);  ///< "p/q"
Json to_json(double x);           ///< shortest round-trip number

template <class T, std::size_t R, std::size_t C>
Json to_json(const Mat<T, R, C>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < R; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < C; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, std::size_t N>
Json vector_json(const Vec<T, N>& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < N; ++i) out.push_back(to_json(v[i]));
  return out;
}

template <class T>
Json matrix_document(const std::string& algebra, const Mat6<T>& m) {
  return Json{{"algebra", algebra},
              {"scalar", std::string(to_string(kIsExact<T> ? ScalarMode::Rational : ScalarMode::Float))},
              {"matrix", to_json(m)}};
}

}  // namespace nij
