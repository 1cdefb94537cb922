#include "nij/lie_core.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace nij {

BianchiType bianchi_type_from_int(int tag) {
  if (tag < 1 || tag > 8) throw std::invalid_argument("Bianchi tag must be in 1..8, got " + std::to_string(tag));
  return static_cast<BianchiType>(tag);
}

template <class T>
StructureConstants<T> StructureConstants<T>::from_brackets(const Vec3<T>& e1e2, const Vec3<T>& e1e3,
                                                           const Vec3<T>& e2e3) {
  StructureConstants sc;
  sc.c_[0][1] = e1e2;
  sc.c_[1][0] = -e1e2;
  sc.c_[0][2] = e1e3;
  sc.c_[2][0] = -e1e3;
  sc.c_[1][2] = e2e3;
  sc.c_[2][1] = -e2e3;
  return sc;
}

namespace {

template <class T>
Vec3<T> vec(T a, T b, T c) {
  Vec3<T> v;
  v[0] = a;
  v[1] = b;
  v[2] = c;
  return v;
}

template <class T>
void require_finite(const T& x, const char* what) {
  if constexpr (!kIsExact<T>) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

template <class T>
LieAlgebra3<T> bianchi(BianchiType type, std::optional<T> theta) {
  const int tag = tag_number(type);
  if (tag < 1 || tag > 8) throw std::invalid_argument("Bianchi tag must be in 1..8");
  if (takes_theta(type) && !theta)
    throw std::invalid_argument("type " + std::to_string(tag) + " requires a theta parameter");
  if (!takes_theta(type) && theta)
    throw std::invalid_argument("type " + std::to_string(tag) + " takes no theta parameter");
  if (theta) require_finite(*theta, "theta");
  if (type == BianchiType::T4 && is_zero(*theta, 0.0))
    throw std::invalid_argument("type 4 requires theta != 0");
  if (type == BianchiType::T6 && !(*theta > T(0)))
    throw std::invalid_argument("type 6 requires theta > 0");

  const T z(0), one(1);
  Vec3<T> e12 = vec(z, z, z), e13 = vec(z, z, z), e23 = vec(z, z, z);
  switch (type) {
    case BianchiType::T1:
      break;
    case BianchiType::T2:
      e12 = vec(one, z, z);
      break;
    case BianchiType::T3:
      e12 = vec(z, z, one);
      break;
    case BianchiType::T4:
      e13 = vec(one, z, z);
      e23 = vec(z, T(*theta), z);
      break;
    case BianchiType::T5:
      e13 = vec(one, z, z);
      e23 = vec(one, one, z);
      break;
    case BianchiType::T6:
      e13 = vec(T(*theta), T(-one), z);
      e23 = vec(one, T(*theta), z);
      break;
    case BianchiType::T7:
      e13 = vec(z, one, z);
      e23 = vec(one, z, z);
      e12 = vec(z, z, one);
      break;
    case BianchiType::T8:
      e13 = vec(z, T(-one), z);
      e23 = vec(one, z, z);
      e12 = vec(z, z, one);
      break;
  }
  return LieAlgebra3<T>{type, theta, StructureConstants<T>::from_brackets(e12, e13, e23)};
}

Designator Designator::parse(std::string_view text) {
  Designator d;
  std::string_view tag_text = text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    tag_text = text.substr(0, colon);
    std::string_view theta = text.substr(colon + 1);
    if (theta.empty()) throw ParseError("empty theta in designator '" + std::string(text) + "'");
    d.theta_text = std::string(theta);
  }
  int tag = 0;
  auto [ptr, ec] = std::from_chars(tag_text.data(), tag_text.data() + tag_text.size(), tag);
  if (ec != std::errc() || ptr != tag_text.data() + tag_text.size() || tag_text.empty())
    throw ParseError("malformed algebra designator '" + std::string(text) + "'");
  if (tag < 1 || tag > 8) throw ParseError("Bianchi tag must be in 1..8 in '" + std::string(text) + "'");
  d.type = static_cast<BianchiType>(tag);
  if (takes_theta(d.type) != d.theta_text.has_value())
    throw ParseError(takes_theta(d.type) ? "type " + std::to_string(tag) + " needs ':<theta>' in designator"
                                         : "type " + std::to_string(tag) + " takes no theta");
  return d;
}

std::string Designator::str() const {
  std::string s = std::to_string(tag_number(type));
  if (theta_text) s += ":" + *theta_text;
  return s;
}

template <class T>
LieAlgebra3<T> make_algebra(const Designator& d) {
  std::optional<T> theta;
  if (d.theta_text) {
    if constexpr (kIsExact<T>)
      theta = parse_rational(*d.theta_text);
    else
      theta = parse_double(*d.theta_text);
  }
  return bianchi<T>(d.type, theta);
}

template <class T>
std::string designator_of(const LieAlgebra3<T>& alg) {
  std::string s = std::to_string(tag_number(alg.type));
  if (alg.theta) {
    if constexpr (kIsExact<T>) {
      const Rational& q = *alg.theta;
      s += ":" + (q.get_den() == 1 ? q.get_num().get_str() : to_string(q));
    } else {
      s += ":" + format_double(*alg.theta);
    }
  }
  return s;
}

template <class T>
bool admits_integrable(const LieAlgebra3<T>& alg) {
  switch (alg.type) {
    case BianchiType::T5:
      return false;
    case BianchiType::T4:
      return *alg.theta == T(1);
    default:
      return true;
  }
}

LieAlgebra3<double> to_double(const LieAlgebra3<Rational>& alg) {
  std::optional<double> theta;
  if (alg.theta) theta = alg.theta->get_d();
  return bianchi<double>(alg.type, theta);
}

ProductAlgebra<double> to_double(const ProductAlgebra<Rational>& palg) { return {to_double(palg.base)}; }

template class StructureConstants<Rational>;
template class StructureConstants<double>;
template LieAlgebra3<Rational> bianchi<Rational>(BianchiType, std::optional<Rational>);
template LieAlgebra3<double> bianchi<double>(BianchiType, std::optional<double>);
template LieAlgebra3<Rational> make_algebra<Rational>(const Designator&);
template LieAlgebra3<double> make_algebra<double>(const Designator&);
template std::string designator_of<Rational>(const LieAlgebra3<Rational>&);
template std::string designator_of<double>(const LieAlgebra3<double>&);
template bool admits_integrable<Rational>(const LieAlgebra3<Rational>&);
template bool admits_integrable<double>(const LieAlgebra3<double>&);

}  // namespace nij
