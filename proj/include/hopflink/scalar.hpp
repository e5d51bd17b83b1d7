#pragma once

// Exact arithmetic in Q and in cyclotomic fields Q(zeta_n).
//
// A Cyclo value carries its cyclotomic order n and its coordinates on the
// power basis 1, z, ..., z^{phi(n)-1} taken modulo the n-th cyclotomic
// polynomial. Values of different orders combine by promotion to the lcm of
// the orders, so rational constants mix freely with elements of any field.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflink/errors.hpp"

namespace hopf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyclo zeta(int n, long k = 1);
  /// Builds sum_i coeffs[i] z^i in Q(zeta_n); any length is accepted and
  /// reduced modulo Phi_n.
  static Cyclo from_coeffs(int n, std::vector<Rational> coeffs);
  /// Parses "p/q" or "p".
  static Cyclo parse_rational(const std::string& text);

  int order() const { return order_; }
  /// Coordinates on the power basis, always of length phi(order()).
  std::vector<Rational> coeffs() const;
  /// Coordinates after promotion to order n (n must be a multiple of order()).
  std::vector<Rational> coeffs_at(int n) const;

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  /// The value as a rational; throws IncompatibleOrder if it is not rational.
  Rational to_rational() const;

  /// Same value viewed in Q(zeta_n); n must be a multiple of order().
  Cyclo promoted(int n) const;
  /// Same value viewed in Q(zeta_m) if it lies in that subfield.
  std::optional<Cyclo> demoted(int m) const;

  Cyclo inv() const;
  Cyclo pow(long e) const;
  /// Trace of Q(zeta_n)/Q; n = 0 means the value's own order.
  Rational trace(int n = 0) const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  Cyclo operator-() const;

  /// Value equality (independent of the order the values are stored at).
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  /// A deterministic total order used for canonical sorting only.
  static int compare(const Cyclo& a, const Cyclo& b);

  /// Human readable form, e.g. "1/2", "-z4", "1 + 2*z3^1".
  std::string to_string() const;

  /// *this += x * factor, without a temporary for the product.
  void add_scaled(const Cyclo& x, const Cyclo& factor);

 private:
  void trim();
  int order_ = 1;
  std::vector<Rational> c_;  // trailing zeros removed; empty means zero
};

using Scalar = Cyclo;

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

/// Dense polynomial over Cyclo, lowest degree first, no trailing zeros.
using Poly = std::vector<Cyclo>;

namespace poly {
void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws DivisionByZero on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Cyclo eval(const Poly& p, const Cyclo& x);
std::string to_string(const Poly& p);
}  // namespace poly

struct RootResult {
  /// Roots in the ambient field, listed with multiplicity, sorted canonically.
  std::vector<Cyclo> roots;
  /// Monic factor of the input with no roots in the ambient field (1 when
  /// the polynomial splits completely).
  Poly remainder;
};

/// Roots of p lying in Q(zeta_n), n = lcm(field_order, coefficient orders).
/// Throws DegreeBound if deg p exceeds degree_bound.
RootResult minimal_polynomial_roots(const Poly& p, int field_order,
                                    int degree_bound = 24);

}  // namespace hopf
