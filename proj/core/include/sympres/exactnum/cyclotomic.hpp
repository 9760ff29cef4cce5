#ifndef SYMPRES_EXACTNUM_CYCLOTOMIC_HPP
#define SYMPRES_EXACTNUM_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sympres/exactnum/rational.hpp"

namespace sympres {

/// Shared data for Q(zeta_N): the cyclotomic polynomial and the reduction
/// of every power x^j (0 <= j < N) modulo it. Instances are interned and
/// live for the whole process.
class CyclotomicField {
public:
  static const CyclotomicField &get(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  /// Coefficients of Phi_N, constant term first.
  const std::vector<std::int64_t> &polynomial() const noexcept { return poly_; }
  /// x^(j mod N) reduced modulo Phi_N, as a vector of length degree().
  const std::vector<std::int64_t> &power(std::int64_t j) const noexcept;

private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<std::int64_t>> powers_;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
int euler_phi(int n);

/// Element of Q(zeta_N) in the power basis 1, x, ..., x^(phi(N)-1) modulo
/// Phi_N. Zero has an empty coefficient vector; any other value stores
/// exactly phi(N) coefficients. Values of different orders are compared and
/// combined after lifting to the lcm of their orders.
class Cyclotomic {
public:
  Cyclotomic() : field_(&CyclotomicField::get(1)) {}
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational &v);

  /// zeta_N^k.
  static Cyclotomic zeta(int n, std::int64_t k);
  /// sum_e c_e zeta_N^e for arbitrary integer exponents.
  static Cyclotomic from_terms(int n, const std::vector<std::pair<std::int64_t, Rational>> &terms);
  /// Parses the "cyc(N):[e:p/q,...]" form produced by to_string().
  static Cyclotomic parse(std::string_view text);

  int order() const noexcept { return field_->order(); }
  const CyclotomicField &field() const noexcept { return *field_; }
  const std::vector<Rational> &coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Requires is_rational().
  Rational rational_value() const;

  /// The same value represented at order m (a multiple of order()).
  Cyclotomic lifted(int m) const;
  /// Smallest n with the value in Q(zeta_n) (n = 1 for rationals, never 2 mod 4).
  int minimal_order() const;
  /// The same value represented at order d, which must contain it.
  Cyclotomic descended(int d) const;
  /// Representation at minimal_order().
  Cyclotomic reduced() const { return descended(minimal_order()); }

  Cyclotomic conjugate() const { return galois(-1); }
  /// The automorphism zeta_N -> zeta_N^k for k coprime to N.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic inverse() const;
  /// Product over the Galois group; always rational.
  Rational norm() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b);
  Cyclotomic &operator+=(const Cyclotomic &b) { return *this = *this + b; }
  Cyclotomic &operator-=(const Cyclotomic &b) { return *this = *this - b; }
  Cyclotomic &operator*=(const Cyclotomic &b) { return *this = *this * b; }
  Cyclotomic &operator/=(const Cyclotomic &b) { return *this = *this / b; }
  Cyclotomic pow(std::int64_t e) const;

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

  std::complex<long double> approx() const;
  /// "cyc(N):[e1:p1/q1,...]" at the minimal order, exponents ascending.
  std::string to_string() const;
  /// Human-readable sum in E(N) = exp(2 pi i / N), e.g. "-1/2+E(4)".
  std::string pretty() const;
  /// Byte encoding at the current order; injective among values of one order.
  void append_key(std::string &out) const;

private:
  Cyclotomic(const CyclotomicField *f, std::vector<Rational> c) : field_(f), c_(std::move(c)) { normalize(); }
  void normalize();
  bool in_subfield(int d) const;

  const CyclotomicField *field_;
  std::vector<Rational> c_;
};

/// Total order on values: by minimal order, then coefficients. Deterministic,
/// not compatible with the field structure.
int compare(const Cyclotomic &a, const Cyclotomic &b);

/// Common order of a set of values (lcm of their orders).
int common_order(const std::vector<Cyclotomic> &values);

} // namespace sympres

#endif // SYMPRES_EXACTNUM_CYCLOTOMIC_HPP
