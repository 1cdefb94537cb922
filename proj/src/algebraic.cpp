#include "nij/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nij {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval(double t) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Rational lead = c_.back();
  std::vector<Rational> m(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) m[i] = c_[i] / lead;
  return Poly(std::move(m));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> r(p.c_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  quotient = Poly(std::move(q));
  remainder = Poly(std::move(rem));
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return r;
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Poly squarefree(const Poly& p) {
  Poly g = Poly::gcd(p, p.derivative());
  return (p / g).monic();
}

/// Simplest rational (smallest denominator) in the open interval (x, y),
/// x < y; y_inf means y = +infinity.
Rational simplest_between(const Rational& x, const Rational& y, bool y_inf) {
  if (!y_inf && sgn(y) <= 0) return -simplest_between(-y, -x, false);
  if (sgn(x) < 0) return Rational(0);
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational n(k + 1);
  if (y_inf || n < y) return n;
  Rational kq(k);
  Rational lo_inv = 1 / (y - kq);
  if (x == kq) return kq + 1 / simplest_between(lo_inv, Rational(0), true);
  return kq + 1 / simplest_between(lo_inv, 1 / (x - kq), false);
}

}  // namespace

int count_roots(const Poly& p, const Rational& a, const Rational& b) {
  auto seq = sturm_sequence(p);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<IsolatedRoot> real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() == 0) return out;

  const Poly s = squarefree(p);
  const auto seq = sturm_sequence(s);
  auto count = [&](const Rational& a, const Rational& b) { return sign_changes(seq, a) - sign_changes(seq, b); };

  // Denominators of rational roots divide the leading coefficient of the
  // primitive integer multiple of s.
  mpz_class den_lcm = 1;
  for (const auto& c : s.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& c : s.coeffs()) {
    mpz_class z = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  }
  mpz_class lead = abs(s.leading().get_num() * (den_lcm / s.leading().get_den())) / content;
  const Rational rational_width(mpz_class(1), lead * lead);

  Rational bound(0);
  for (int i = 0; i < s.degree(); ++i) bound = std::max(bound, Rational(abs(s.coeff(i) / s.leading())));
  bound += 1;

  // Bisect (lo, hi] until each piece holds one root.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }

  for (auto [lo, hi] : isolated) {
    IsolatedRoot root;
    std::optional<Rational> exact;
    if (sgn(s.eval(hi)) == 0) exact = hi;
    while (!exact && hi - lo >= rational_width) {
      Rational mid = (lo + hi) / 2;
      if (sgn(s.eval(mid)) == 0) {
        exact = mid;
      } else if (count(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (!exact) {
      Rational cand = simplest_between(lo, hi, false);
      if (sgn(s.eval(cand)) == 0) exact = cand;
    }
    if (exact) {
      root.lo = *exact - rational_width;
      root.hi = *exact;
      root.exact = *exact;
      root.approx = exact->get_d();
    } else {
      // Refine the irrational root well past double precision.
      Rational tol(mpz_class(1), mpz_class(1) << 80);
      while (hi - lo >= tol) {
        Rational mid = (lo + hi) / 2;
        if (count(lo, mid) == 1)
          hi = mid;
        else
          lo = mid;
      }
      root.lo = lo;
      root.hi = hi;
      root.approx = Rational((lo + hi) / 2).get_d();
    }
    out.push_back(std::move(root));
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.hi < b.hi; });
  return out;
}

SmallFactorisation factor_small(const Poly& p) {
  if (p.is_zero() || p.degree() > 3) throw std::invalid_argument("factor_small needs a nonzero polynomial of degree <= 3");
  SmallFactorisation f;
  Poly rest = p.monic();
  for (const auto& root : real_roots(p)) {
    if (!root.exact) continue;
    f.rational_roots.push_back(*root.exact);
    Poly lin({-*root.exact, Rational(1)});
    while (rest.degree() >= 1 && sgn(rest.eval(*root.exact)) == 0) rest = rest / lin;
  }
  f.irreducible = rest.monic();
  return f;
}

FieldElem::FieldElem(std::shared_ptr<const NumberField> field, Poly value) : k_(std::move(field)) {
  v_ = value % k_->modulus;
}

FieldElem FieldElem::rational(std::shared_ptr<const NumberField> field, const Rational& q) {
  return FieldElem(std::move(field), Poly::constant(q));
}

FieldElem FieldElem::generator(std::shared_ptr<const NumberField> field) {
  return FieldElem(std::move(field), Poly::x());
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return FieldElem(a.k_, a.v_ + b.v_); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return FieldElem(a.k_, a.v_ - b.v_); }
FieldElem operator-(const FieldElem& a) { return FieldElem(a.k_, Rational(-1) * a.v_); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return FieldElem(a.k_, a.v_ * b.v_); }

FieldElem FieldElem::inverse() const {
  if (v_.is_zero()) throw std::domain_error("inverse of zero in number field");
  // Extended Euclid: s*v + t*f = g, with g a nonzero constant since f is irreducible.
  Poly r0 = k_->modulus, r1 = v_;
  Poly s0, s1 = Poly::constant(1);
  while (r1.degree() > 0) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw std::domain_error("number field modulus is reducible");
  return FieldElem(k_, (1 / r1.coeff(0)) * s1);
}

std::string AlgebraicReal::str() const {
  if (is_rational()) return to_string(rational_value());
  std::ostringstream os;
  os.precision(17);
  os << "root of " << field->modulus.str() << " in (" << lo.get_d() << ", " << hi.get_d() << "] ~ " << approx;
  return os.str();
}

}  // namespace nij
