#pragma once

#include <array>
#include <cstddef>
#include <ostream>

#include "nij/rational.hpp"

namespace nij {

/// Small dense fixed-size matrix, row-major. Works for Rational and double;
/// all structures in this library are 3- or 6-dimensional so there is no
/// need for dynamic storage or expression templates.
template <class T, std::size_t R, std::size_t C>
class Mat {
 public:
  Mat() {
    for (auto& x : data_) x = T(0);
  }

  static Mat zero() { return Mat(); }

  static Mat identity() {
    static_assert(R == C, "identity needs a square matrix");
    Mat m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = T(1);
    return m;
  }

  static constexpr std::size_t rows() { return R; }
  static constexpr std::size_t cols() { return C; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * C + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * C + j]; }

  // Vector-style access for column vectors.
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < R * C; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < R * C; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const T& s) { return a *= s; }
  friend Mat operator*(const T& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.data_ == b.data_; }

  Mat<T, C, R> transpose() const {
    Mat<T, C, R> t;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <std::size_t BR, std::size_t BC>
  Mat<T, BR, BC> block(std::size_t r0, std::size_t c0) const {
    Mat<T, BR, BC> b;
    for (std::size_t i = 0; i < BR; ++i)
      for (std::size_t j = 0; j < BC; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  template <std::size_t BR, std::size_t BC>
  void set_block(std::size_t r0, std::size_t c0, const Mat<T, BR, BC>& b) {
    for (std::size_t i = 0; i < BR; ++i)
      for (std::size_t j = 0; j < BC; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  const std::array<T, R * C>& data() const { return data_; }
  std::array<T, R * C>& data() { return data_; }

 private:
  std::array<T, R * C> data_;
};

template <class T, std::size_t N>
using Vec = Mat<T, N, 1>;

template <class T> using Vec3 = Vec<T, 3>;
template <class T> using Vec6 = Vec<T, 6>;
template <class T> using Mat3 = Mat<T, 3, 3>;
template <class T> using Mat6 = Mat<T, 6, 6>;

template <class T, std::size_t R, std::size_t K, std::size_t C>
Mat<T, R, C> operator*(const Mat<T, R, K>& a, const Mat<T, K, C>& b) {
  Mat<T, R, C> out;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      T acc(0);
      for (std::size_t k = 0; k < K; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <class T, std::size_t N>
Vec<T, N> unit(std::size_t i) {
  Vec<T, N> v;
  v[i] = T(1);
  return v;
}

template <class T, std::size_t R, std::size_t C>
bool is_zero(const Mat<T, R, C>& m, double eps = kDefaultEps) {
  for (const auto& x : m.data())
    if (!is_zero(x, eps)) return false;
  return true;
}

/// Largest absolute entry.
template <class T, std::size_t R, std::size_t C>
T max_abs(const Mat<T, R, C>& m) {
  T best(0);
  for (const auto& x : m.data()) {
    T a = abs_value(x);
    if (a > best) best = a;
  }
  return best;
}

template <class T, std::size_t R, std::size_t C>
double frobenius_sq(const Mat<T, R, C>& m) {
  double s = 0;
  for (const auto& x : m.data()) {
    double d = to_double(x);
    s += d * d;
  }
  return s;
}

template <std::size_t R, std::size_t C>
Mat<double, R, C> to_double(const Mat<Rational, R, C>& m) {
  Mat<double, R, C> out;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = m(i, j).get_d();
  return out;
}

template <std::size_t R, std::size_t C>
const Mat<double, R, C>& to_double(const Mat<double, R, C>& m) {
  return m;
}

template <class T>
T determinant(const Mat3<T>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class T, std::size_t N>
T dot(const Vec<T, N>& a, const Vec<T, N>& b) {
  T acc(0);
  for (std::size_t i = 0; i < N; ++i) acc += a[i] * b[i];
  return acc;
}

/// Exact inverse via Gauss-Jordan; throws std::domain_error on singular input.
/// In float mode pivots use partial pivoting and |pivot| <= 1e-300 counts as singular.
template <class T, std::size_t N>
Mat<T, N, N> inverse(const Mat<T, N, N>& m) {
  Mat<T, N, N> a = m;
  Mat<T, N, N> inv = Mat<T, N, N>::identity();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = N;
    if constexpr (kIsExact<T>) {
      for (std::size_t r = col; r < N; ++r)
        if (sgn(a(r, col)) != 0) { pivot = r; break; }
    } else {
      double best = 1e-300;
      for (std::size_t r = col; r < N; ++r)
        if (std::fabs(a(r, col)) > best) { best = std::fabs(a(r, col)); pivot = r; }
    }
    if (pivot == N) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    T p = a(col, col);
    for (std::size_t j = 0; j < N; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      T f = a(r, col);
      if (is_zero(f, 0.0)) continue;
      for (std::size_t j = 0; j < N; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T, std::size_t R, std::size_t C>
std::ostream& operator<<(std::ostream& os, const Mat<T, R, C>& m) {
  for (std::size_t i = 0; i < R; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < C; ++j) os << (j ? ", " : "") << m(i, j);
    os << (i + 1 == R ? "]" : "\n");
  }
  return os;
}

}  // namespace nij
