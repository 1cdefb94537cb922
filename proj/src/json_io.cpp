#include "nij/json_io.hpp"

#include <cmath>

namespace nij {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot serialise a non-finite value");
  return x;
}

namespace {

Rational rational_entry(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) {
    // Large integers arrive as unsigned; both fit a long for any sane document.
    if (e.is_number_unsigned()) return Rational(mpz_class(std::to_string(e.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(e.get<std::int64_t>())));
  }
  if (e.is_number_float())
    throw ParseError("rational document holds a non-integer number " + e.dump() + "; write it as a \"p/q\" string");
  throw ParseError("matrix entry must be a \"p/q\" string or an integer, got " + e.dump());
}

double float_entry(const Json& e) {
  if (!e.is_number()) throw ParseError("float document entries must be numbers, got " + e.dump());
  const double x = e.get<double>();
  if (!std::isfinite(x)) throw ParseError("non-finite matrix entry");
  return x;
}

}  // namespace

MatrixDocument parse_matrix_document(const Json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  for (const char* key : {"algebra", "scalar", "matrix"})
    if (!doc.contains(key)) throw ParseError(std::string("matrix document lacks \"") + key + "\"");
  if (!doc["algebra"].is_string() || !doc["scalar"].is_string())
    throw ParseError("\"algebra\" and \"scalar\" must be strings");
  MatrixDocument out;
  out.algebra = Designator::parse(doc["algebra"].get<std::string>());
  const ScalarMode mode = parse_scalar_mode(doc["scalar"].get<std::string>());
  const Json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 6) throw ParseError("\"matrix\" must have 6 rows");
  Mat6<Rational> q;
  Mat6<double> f;
  for (std::size_t r = 0; r < 6; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 6) throw ParseError("matrix row " + std::to_string(r + 1) + " must have 6 entries");
    for (std::size_t c = 0; c < 6; ++c) {
      if (mode == ScalarMode::Rational)
        q(r, c) = rational_entry(rows[r][c]);
      else
        f(r, c) = float_entry(rows[r][c]);
    }
  }
  if (mode == ScalarMode::Rational)
    out.matrix = q;
  else
    out.matrix = f;
  return out;
}

MatrixDocument parse_matrix_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_matrix_document(doc);
}

}  // namespace nij
