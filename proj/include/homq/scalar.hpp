#pragma once

#include <gmpxx.h>

#include <array>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homq/error.hpp"

namespace homq {

constexpr int kMaxVars = 8;

class ScalarField;
using FieldPtr = std::shared_ptr<const ScalarField>;

// Variables plus an optional cyclotomic base Q(zeta_n).
class ScalarField {
 public:
  static FieldPtr make(std::vector<std::string> variables, int cyclotomic_order = 0);
  static FieldPtr rationals();

  const std::vector<std::string>& variables() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int cyclotomic_order() const { return order_; }
  // dimension of the base field over Q
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  // monic cyclotomic polynomial, low to high coefficients
  const std::vector<mpq_class>& modulus() const { return phi_; }
  int var_index(const std::string& name) const;

  bool same_as(const ScalarField& other) const {
    return vars_ == other.vars_ && order_ == other.order_;
  }
  std::string describe() const;

 private:
  ScalarField() = default;
  std::vector<std::string> vars_;
  int order_ = 0;
  std::vector<mpq_class> phi_;
};

// Element of the base field: coefficients of 1, zeta, zeta^2, ... reduced
// modulo the cyclotomic polynomial. Empty means zero.
using Cyc = boost::container::small_vector<mpq_class, 1>;

using Exps = std::array<std::int32_t, kMaxVars>;

struct Term {
  Exps e{};
  Cyc c;
};

// Polynomial sorted by descending graded-lex order on exponents.
using Poly = std::vector<Term>;

namespace poly {

bool grlex_less(const Exps& a, const Exps& b);
int total_degree(const Exps& e);

bool cyc_is_zero(const Cyc& c);
Cyc cyc_from(const mpq_class& v);
Cyc cyc_add(const Cyc& a, const Cyc& b);
Cyc cyc_neg(const Cyc& a);
Cyc cyc_mul(const ScalarField& f, const Cyc& a, const Cyc& b);
Cyc cyc_inv(const ScalarField& f, const Cyc& a);
bool cyc_is_one(const Cyc& c);

Poly constant(const Cyc& c);
// sorts and merges arbitrary terms
Poly from_terms(std::vector<Term> terms);
Poly add(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const ScalarField& f, const Poly& a, const Poly& b);
Poly scale(const ScalarField& f, const Poly& a, const Cyc& c);
Poly shift(const Poly& a, const Exps& e, int sign);
Poly divide_exact(const ScalarField& f, const Poly& a, const Poly& b);
Poly gcd(const ScalarField& f, const Poly& a, const Poly& b);
Poly monic(const ScalarField& f, const Poly& a);
bool is_one(const Poly& a);
bool equal(const Poly& a, const Poly& b);

}  // namespace poly

class Scalar {
 public:
  Scalar();  // zero over Q
  Scalar(long v);  // NOLINT: integers convert implicitly
  Scalar(const mpq_class& v);  // NOLINT
  Scalar(FieldPtr field, long v);

  static Scalar variable(FieldPtr field, const std::string& name);
  static Scalar variable(FieldPtr field, int index);
  static Scalar zeta(FieldPtr field, int power = 1);
  static Scalar from_parts(FieldPtr field, Poly num, Poly den);

  const FieldPtr& field() const { return field_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  // a rational number with no variables or zeta
  bool is_rational() const;
  mpq_class to_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // canonical text in the scalar grammar
  std::string str() const;
  // move into a field that declares at least the same variables
  Scalar embed(const FieldPtr& target) const;

 private:
  Scalar(FieldPtr field, Poly num, Poly den, bool canonical);
  void canonicalize();

  FieldPtr field_;
  Poly num_;
  Poly den_;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

Scalar parse_scalar(const std::string& text, const FieldPtr& field);
// re-run canonicalization on raw parts; identity on already canonical values
Scalar canonicalize(const Scalar& s);
Scalar specialize(const Scalar& s, const std::map<std::string, Scalar>& assignment,
                  const FieldPtr& target);

}  // namespace homq
