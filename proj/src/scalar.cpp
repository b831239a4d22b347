#include "homq/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

namespace homq {

namespace {

using QPoly = std::vector<mpq_class>;  // univariate, low to high

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient of a by monic-or-not b, exact over Q
QPoly qpoly_divmod(QPoly a, const QPoly& b, QPoly* rem) {
  trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  if (rem) *rem = a;
  trim(q);
  return q;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

QPoly cyclotomic(int n) {
  static std::map<int, QPoly> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  QPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = qpoly_divmod(p, cyclotomic(d), nullptr);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[n] = p;
  return p;
}

}  // namespace

// ---------------------------------------------------------------- fields

FieldPtr ScalarField::make(std::vector<std::string> variables, int cyclotomic_order) {
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  if (static_cast<int>(variables.size()) > kMaxVars)
    throw Error("config", "at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!std::regex_match(variables[i], ident))
      throw Error("config", "invalid variable name '" + variables[i] + "'");
    if (variables[i] == "zeta")
      throw Error("config", "'zeta' is reserved for the cyclotomic generator");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[j] == variables[i])
        throw Error("config", "duplicate variable '" + variables[i] + "'");
  }
  if (cyclotomic_order < 0) throw Error("config", "cyclotomic order must be >= 1");
  auto f = std::shared_ptr<ScalarField>(new ScalarField());
  f->vars_ = std::move(variables);
  f->order_ = cyclotomic_order;
  f->phi_ = cyclotomic_order > 0 ? cyclotomic(cyclotomic_order) : QPoly{-1, 1};
  // Q itself is stored as Q[z]/(z - 1): degree 1, zeta never used.
  if (cyclotomic_order == 0) f->phi_ = QPoly{-1, 1};
  return f;
}

FieldPtr ScalarField::rationals() {
  static const FieldPtr q = make({}, 0);
  return q;
}

int ScalarField::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

std::string ScalarField::describe() const {
  std::string s = "Q";
  if (order_ > 0) s += "(zeta_" + std::to_string(order_) + ")";
  if (!vars_.empty()) {
    s += "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------- base field

namespace poly {

bool cyc_is_zero(const Cyc& c) { return c.empty(); }

static void cyc_trim(Cyc& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Cyc cyc_from(const mpq_class& v) {
  Cyc c;
  if (v != 0) c.push_back(v);
  return c;
}

bool cyc_is_one(const Cyc& c) { return c.size() == 1 && c[0] == 1; }

Cyc cyc_add(const Cyc& a, const Cyc& b) {
  Cyc r = a.size() >= b.size() ? a : b;
  const Cyc& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  cyc_trim(r);
  return r;
}

Cyc cyc_neg(const Cyc& a) {
  Cyc r = a;
  for (auto& x : r) x = -x;
  return r;
}

static Cyc cyc_reduce(const ScalarField& f, QPoly p) {
  const auto& phi = f.modulus();
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    mpq_class c = p[k];
    for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
  }
  if (p.size() > d) p.resize(d);
  Cyc r(p.begin(), p.end());
  cyc_trim(r);
  return r;
}

Cyc cyc_mul(const ScalarField& f, const Cyc& a, const Cyc& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && b.size() == 1) return Cyc{a[0] * b[0]};
  QPoly p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  return cyc_reduce(f, std::move(p));
}

Cyc cyc_inv(const ScalarField& f, const Cyc& a) {
  if (a.empty()) throw Error("division_by_zero", "inverse of zero");
  if (a.size() == 1) return Cyc{1 / a[0]};
  // extended Euclid: s*a + t*phi = g
  QPoly r0 = f.modulus(), r1(a.begin(), a.end());
  QPoly s0, s1{1};
  while (!r1.empty()) {
    QPoly rem;
    QPoly q = qpoly_divmod(r0, r1, &rem);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since phi is irreducible
  mpq_class g = r0[0];
  for (auto& x : s0) x /= g;
  return cyc_reduce(f, s0);
}

// ---------------------------------------------------------------- polynomials

int total_degree(const Exps& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_less(const Exps& a, const Exps& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

static bool grlex_greater(const Term& x, const Term& y) { return grlex_less(y.e, x.e); }

Poly constant(const Cyc& c) {
  if (c.empty()) return {};
  return Poly{Term{Exps{}, c}};
}

Poly add(const Poly& a, const Poly& b) {
  Poly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].e == b[j].e) {
      Cyc c = cyc_add(a[i].c, b[j].c);
      if (!c.empty()) r.push_back(Term{a[i].e, std::move(c)});
      ++i, ++j;
    } else if (grlex_less(b[j].e, a[i].e)) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

Poly neg(const Poly& a) {
  Poly r = a;
  for (auto& t : r) t.c = cyc_neg(t.c);
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  Poly r;
  for (auto& t : terms) {
    if (!r.empty() && r.back().e == t.e) {
      r.back().c = cyc_add(r.back().c, t.c);
      if (r.back().c.empty()) r.pop_back();
    } else if (!t.c.empty()) {
      r.push_back(std::move(t));
    }
  }
  return r;
}

Poly mul(const ScalarField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Term t;
      for (int k = 0; k < kMaxVars; ++k) t.e[k] = x.e[k] + y.e[k];
      t.c = cyc_mul(f, x.c, y.c);
      terms.push_back(std::move(t));
    }
  if (a.size() == 1 || b.size() == 1) {
    // multiplying by a single term preserves the order
    Poly r;
    for (auto& t : terms)
      if (!t.c.empty()) r.push_back(std::move(t));
    return r;
  }
  return from_terms(std::move(terms));
}

Poly scale(const ScalarField& f, const Poly& a, const Cyc& c) {
  if (c.empty()) return {};
  Poly r;
  r.reserve(a.size());
  for (const auto& t : a) {
    Cyc x = cyc_mul(f, t.c, c);
    if (!x.empty()) r.push_back(Term{t.e, std::move(x)});
  }
  return r;
}

Poly shift(const Poly& a, const Exps& e, int sign) {
  Poly r = a;
  for (auto& t : r)
    for (int k = 0; k < kMaxVars; ++k) t.e[k] += sign * e[k];
  return r;
}

bool is_one(const Poly& a) {
  return a.size() == 1 && a[0].e == Exps{} && cyc_is_one(a[0].c);
}

bool equal(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].e != b[i].e || a[i].c.size() != b[i].c.size()) return false;
    for (std::size_t k = 0; k < a[i].c.size(); ++k)
      if (a[i].c[k] != b[i].c[k]) return false;
  }
  return true;
}

Poly monic(const ScalarField& f, const Poly& a) {
  if (a.empty() || cyc_is_one(a[0].c)) return a;
  return scale(f, a, cyc_inv(f, a[0].c));
}

static bool divides(const Exps& d, const Exps& e) {
  for (int k = 0; k < kMaxVars; ++k)
    if (d[k] > e[k]) return false;
  return true;
}

Poly divide_exact(const ScalarField& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error("division_by_zero", "polynomial division by zero");
  if (is_one(b)) return a;
  Cyc lc_inv = cyc_inv(f, b[0].c);
  std::vector<Term> q;
  Poly r = a;
  while (!r.empty()) {
    if (!divides(b[0].e, r[0].e))
      throw Error("internal", "inexact polynomial division");
    Term t;
    for (int k = 0; k < kMaxVars; ++k) t.e[k] = r[0].e[k] - b[0].e[k];
    t.c = cyc_mul(f, r[0].c, lc_inv);
    Poly tb = mul(f, Poly{t}, b);
    q.push_back(std::move(t));
    r = sub(r, tb);
  }
  return from_terms(std::move(q));
}

namespace {

int degree_in(const Poly& p, int v) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, t.e[v]);
  return d;
}

// coefficients of p viewed as a polynomial in variable v
std::map<int, Poly> split(const Poly& p, int v) {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : p) {
    Term u = t;
    u.e[v] = 0;
    parts[t.e[v]].push_back(std::move(u));
  }
  std::map<int, Poly> out;
  for (auto& [k, terms] : parts) out[k] = from_terms(std::move(terms));
  return out;
}

Exps unit_exps(int v, int power) {
  Exps e{};
  e[v] = power;
  return e;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  Exps g;
  g.fill(std::numeric_limits<std::int32_t>::max());
  for (const Poly* p : {&a, &b})
    for (const auto& t : *p)
      for (int k = 0; k < kMaxVars; ++k) g[k] = std::min(g[k], t.e[k]);
  return Poly{Term{g, cyc_from(1)}};
}

Poly gcd_rec(const ScalarField& f, const Poly& a, const Poly& b);

Poly content(const ScalarField& f, const Poly& p, int v) {
  Poly g;
  for (auto& [k, c] : split(p, v)) {
    g = g.empty() ? monic(f, c) : gcd_rec(f, g, c);
    if (is_one(g)) break;
  }
  return g;
}

Poly pseudo_remainder(const ScalarField& f, Poly a, const Poly& b, int v) {
  const int db = degree_in(b, v);
  const Poly lcb = split(b, v)[db];
  while (!a.empty()) {
    int da = degree_in(a, v);
    if (da < db) break;
    Poly lca = split(a, v)[da];
    a = sub(mul(f, lcb, a), mul(f, shift(lca, unit_exps(v, da - db), 1), b));
  }
  return a;
}

Poly gcd_rec(const ScalarField& f, const Poly& a, const Poly& b) {
  if (a.empty()) return monic(f, b);
  if (b.empty()) return monic(f, a);
  if (a.size() == 1 || b.size() == 1) return monomial_gcd(a, b);
  int v = -1;
  for (int k = 0; k < kMaxVars && v < 0; ++k)
    if (degree_in(a, k) > 0 || degree_in(b, k) > 0) v = k;
  if (v < 0) return Poly{Term{Exps{}, cyc_from(1)}};
  if (degree_in(a, v) == 0) return gcd_rec(f, a, content(f, b, v));
  if (degree_in(b, v) == 0) return gcd_rec(f, content(f, a, v), b);

  Poly ca = content(f, a, v), cb = content(f, b, v);
  Poly pa = divide_exact(f, a, ca), pb = divide_exact(f, b, cb);
  Poly gc = gcd_rec(f, ca, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  while (!pb.empty() && degree_in(pb, v) > 0) {
    Poly r = pseudo_remainder(f, pa, pb, v);
    pa = std::move(pb);
    pb = r.empty() ? r : monic(f, divide_exact(f, r, content(f, r, v)));
  }
  Poly gp = pb.empty() ? divide_exact(f, pa, content(f, pa, v)) : Poly{Term{Exps{}, cyc_from(1)}};
  return monic(f, mul(f, gc, gp));
}

}  // namespace

Poly gcd(const ScalarField& f, const Poly& a, const Poly& b) { return gcd_rec(f, a, b); }

}  // namespace poly

// ---------------------------------------------------------------- scalars

using namespace poly;

namespace {

const Poly& one_poly() {
  static const Poly p{Term{Exps{}, cyc_from(1)}};
  return p;
}

bool is_monomial_den(const Poly& d) { return d.size() == 1; }

}  // namespace

Scalar::Scalar() : field_(ScalarField::rationals()), den_(one_poly()) {}

Scalar::Scalar(long v) : field_(ScalarField::rationals()), num_(constant(cyc_from(v))), den_(one_poly()) {}

Scalar::Scalar(const mpq_class& v)
    : field_(ScalarField::rationals()), num_(constant(cyc_from(v))), den_(one_poly()) {}

Scalar::Scalar(FieldPtr field, long v) : field_(std::move(field)), num_(constant(cyc_from(v))), den_(one_poly()) {}

Scalar::Scalar(FieldPtr field, Poly num, Poly den, bool canonical)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

Scalar Scalar::from_parts(FieldPtr field, Poly num, Poly den) {
  if (den.empty()) throw Error("division_by_zero", "zero denominator");
  return Scalar(std::move(field), std::move(num), std::move(den), false);
}

Scalar Scalar::variable(FieldPtr field, int index) {
  if (index < 0 || index >= field->nvars()) throw Error("config", "variable index out of range");
  Exps e{};
  e[index] = 1;
  return Scalar(std::move(field), Poly{Term{e, cyc_from(1)}}, one_poly(), true);
}

Scalar Scalar::variable(FieldPtr field, const std::string& name) {
  int k = field->var_index(name);
  if (k < 0) throw Error("undeclared_variable", "undeclared variable '" + name + "'");
  return variable(std::move(field), k);
}

Scalar Scalar::zeta(FieldPtr field, int power) {
  const int n = field->cyclotomic_order();
  if (n <= 0) throw Error("config", "zeta used without a cyclotomic order");
  const int k = ((power % n) + n) % n;
  Cyc z;
  z.resize(k + 1);
  z[k] = 1;
  Cyc c = cyc_mul(*field, z, cyc_from(1));
  if (k == 0) c = cyc_from(1);
  return Scalar(field, constant(c), one_poly(), true);
}

void Scalar::canonicalize() {
  const ScalarField& f = *field_;
  if (den_.empty()) throw Error("division_by_zero", "division by zero");
  if (num_.empty()) {
    den_ = one_poly();
    return;
  }
  if (is_monomial_den(den_)) {
    Poly g = monomial_gcd(num_, den_);
    if (!poly::is_one(g)) {
      num_ = shift(num_, g[0].e, -1);
      den_ = shift(den_, g[0].e, -1);
    }
  } else {
    Poly g = poly::gcd(f, num_, den_);
    if (!poly::is_one(g)) {
      num_ = divide_exact(f, num_, g);
      den_ = divide_exact(f, den_, g);
    }
  }
  if (!cyc_is_one(den_[0].c)) {
    Cyc inv = cyc_inv(f, den_[0].c);
    num_ = scale(f, num_, inv);
    den_ = scale(f, den_, inv);
  }
}


bool Scalar::is_one() const { return poly::is_one(num_) && poly::is_one(den_); }

bool Scalar::is_rational() const {
  if (!poly::is_one(den_)) return false;
  if (num_.empty()) return true;
  return num_.size() == 1 && num_[0].e == Exps{} && num_[0].c.size() == 1;
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw Error("config", "scalar " + str() + " is not a rational number");
  return num_.empty() ? mpq_class(0) : num_[0].c[0];
}

namespace {

// Picks the field two operands share; a bare rational adapts to the other side.
const FieldPtr& common_field(const Scalar& a, const Scalar& b) {
  if (a.field() == b.field() || a.field()->same_as(*b.field())) return a.field();
  if (b.is_rational()) return a.field();
  if (a.is_rational()) return b.field();
  throw Error("config", "scalars from different fields: " + a.field()->describe() + " and " +
                            b.field()->describe());
}

}  // namespace

Scalar Scalar::operator-() const { return Scalar(field_, neg(num_), den_, true); }

Scalar& Scalar::operator+=(const Scalar& o) {
  FieldPtr fp = common_field(*this, o);
  if (o.is_zero()) {
    field_ = fp;
    return *this;
  }
  if (is_zero()) {
    *this = Scalar(fp, o.num_, o.den_, true);
    return *this;
  }
  const ScalarField& f = *fp;
  field_ = fp;
  if (is_monomial_den(den_) && is_monomial_den(o.den_)) {
    Exps l;
    for (int k = 0; k < kMaxVars; ++k) l[k] = std::max(den_[0].e[k], o.den_[0].e[k]);
    Exps sa, sb;
    for (int k = 0; k < kMaxVars; ++k) {
      sa[k] = l[k] - den_[0].e[k];
      sb[k] = l[k] - o.den_[0].e[k];
    }
    num_ = add(shift(num_, sa, 1), shift(o.num_, sb, 1));
    den_ = Poly{Term{l, cyc_from(1)}};
  } else if (equal(den_, o.den_)) {
    num_ = add(num_, o.num_);
  } else {
    num_ = add(mul(f, num_, o.den_), mul(f, o.num_, den_));
    den_ = mul(f, den_, o.den_);
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  FieldPtr fp = common_field(*this, o);
  field_ = fp;
  if (is_zero() || o.is_zero()) {
    num_.clear();
    den_ = one_poly();
    return *this;
  }
  const ScalarField& f = *fp;
  if (o.is_rational()) {
    num_ = scale(f, num_, o.num_[0].c);
    return *this;
  }
  if (is_rational()) {
    Cyc c = num_[0].c;
    num_ = scale(f, o.num_, c);
    den_ = o.den_;
    return *this;
  }
  if (is_monomial_den(den_) && is_monomial_den(o.den_)) {
    num_ = mul(f, num_, o.num_);
    den_ = shift(den_, o.den_[0].e, 1);
    canonicalize();
    return *this;
  }
  Poly g1 = poly::gcd(f, num_, o.den_);
  Poly g2 = poly::gcd(f, o.num_, den_);
  Poly n = mul(f, divide_exact(f, num_, g1), divide_exact(f, o.num_, g2));
  Poly d = mul(f, divide_exact(f, den_, g2), divide_exact(f, o.den_, g1));
  num_ = std::move(n);
  den_ = std::move(d);
  if (!cyc_is_one(den_[0].c)) {
    Cyc inv = cyc_inv(f, den_[0].c);
    num_ = scale(f, num_, inv);
    den_ = scale(f, den_, inv);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division_by_zero", "division by the zero scalar");
  Scalar r(field_, den_, num_, true);
  if (!cyc_is_one(r.den_[0].c)) {
    Cyc inv = cyc_inv(*field_, r.den_[0].c);
    r.num_ = scale(*field_, r.num_, inv);
    r.den_ = scale(*field_, r.den_, inv);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(field_, 1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) {
    if (!(is_rational() && o.is_rational())) return false;
  }
  return equal(num_, o.num_) && equal(den_, o.den_);
}

// ---------------------------------------------------------------- rendering

namespace {

std::string render_monomial(const ScalarField& f, const Exps& e) {
  std::string s;
  for (int k = 0; k < f.nvars(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += f.variables()[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

struct Piece {
  mpq_class coef;
  std::string factors;  // product of zeta power and monomial, may be empty
};

// A polynomial flattened into rational-coefficient pieces.
std::vector<Piece> pieces(const ScalarField& f, const Poly& p) {
  std::vector<Piece> out;
  for (const auto& t : p) {
    std::string mono = render_monomial(f, t.e);
    for (std::size_t k = t.c.size(); k-- > 0;) {
      if (t.c[k] == 0) continue;
      std::string z = k == 0 ? "" : (k == 1 ? "zeta" : "zeta^" + std::to_string(k));
      std::string fac = z;
      if (!mono.empty()) fac += (fac.empty() ? "" : "*") + mono;
      out.push_back(Piece{t.c[k], fac});
    }
  }
  return out;
}

std::string render_pieces(const std::vector<Piece>& ps) {
  if (ps.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    mpq_class mag = abs(ps[i].coef);
    bool negative = ps[i].coef < 0;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (ps[i].factors.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += ps[i].factors;
    } else {
      s += mag.get_str() + "*" + ps[i].factors;
    }
  }
  return s;
}

}  // namespace

std::string Scalar::str() const {
  const ScalarField& f = *field_;
  auto np = pieces(f, num_);
  std::string n = render_pieces(np);
  if (poly::is_one(den_)) return n;
  bool wrap_num = np.size() > 1 || np[0].coef.get_den() != 1 ||
                  (np[0].coef != 1 && np[0].coef != -1 && !np[0].factors.empty());
  auto dp = pieces(f, den_);
  std::string d = render_pieces(dp);
  bool single_power = dp.size() == 1 && dp[0].coef == 1 && d.find('*') == std::string::npos;
  return (wrap_num ? "(" + n + ")" : n) + "/" + (single_power ? d : "(" + d + ")");
}

// ---------------------------------------------------------------- field changes

namespace {

// image of a base-field element when Q(zeta_n) sits inside Q(zeta_m)
Cyc embed_cyc(const Cyc& c, const ScalarField& from, const ScalarField& to) {
  if (c.size() <= 1) return c;
  const int n = from.cyclotomic_order(), m = to.cyclotomic_order();
  if (m == n) return c;
  if (m <= 0 || m % n != 0)
    throw Error("config", "cannot embed " + from.describe() + " into " + to.describe());
  const int step = m / n;
  std::vector<mpq_class> p(static_cast<std::size_t>(step) * c.size());
  for (std::size_t k = 0; k < c.size(); ++k) p[k * step] = c[k];
  Cyc wide(p.begin(), p.end());
  return cyc_mul(to, wide, cyc_from(1));
}

Poly embed_poly(const Poly& p, const ScalarField& from, const ScalarField& to,
                const std::vector<int>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : p) {
    Term u;
    for (int k = 0; k < from.nvars(); ++k) {
      if (t.e[k] == 0) continue;
      if (var_map[k] < 0)
        throw Error("config", "variable '" + from.variables()[k] + "' is not declared in " +
                                  to.describe());
      u.e[var_map[k]] = t.e[k];
    }
    u.c = embed_cyc(t.c, from, to);
    terms.push_back(std::move(u));
  }
  return from_terms(std::move(terms));
}

}  // namespace

Scalar Scalar::embed(const FieldPtr& target) const {
  if (field_ == target) return *this;
  std::vector<int> var_map;
  for (const auto& v : field_->variables()) var_map.push_back(target->var_index(v));
  Poly n = embed_poly(num_, *field_, *target, var_map);
  Poly d = embed_poly(den_, *field_, *target, var_map);
  return from_parts(target, std::move(n), std::move(d));
}

Scalar canonicalize(const Scalar& s) { return Scalar::from_parts(s.field(), s.numerator(), s.denominator()); }

Scalar specialize(const Scalar& s, const std::map<std::string, Scalar>& assignment,
                  const FieldPtr& target) {
  const ScalarField& f = *s.field();
  std::vector<const Scalar*> values(f.nvars(), nullptr);
  for (int k = 0; k < f.nvars(); ++k) {
    auto it = assignment.find(f.variables()[k]);
    if (it != assignment.end()) values[k] = &it->second;
  }
  auto eval = [&](const Poly& p) {
    Scalar acc(target, 0);
    for (const auto& t : p) {
      Scalar term = Scalar::from_parts(target, constant(embed_cyc(t.c, f, *target)),
                                       Poly{Term{Exps{}, cyc_from(1)}});
      for (int k = 0; k < f.nvars(); ++k) {
        if (t.e[k] == 0) continue;
        if (!values[k])
          throw Error("config", "variable '" + f.variables()[k] + "' is not assigned");
        term *= values[k]->embed(target).pow(t.e[k]);
      }
      acc += term;
    }
    return acc.embed(target);
  };
  Scalar num = eval(s.numerator());
  Scalar den = eval(s.denominator());
  if (den.is_zero()) {
    std::string a;
    for (const auto& [name, v] : assignment) a += (a.empty() ? "" : ", ") + name + " -> " + v.str();
    throw Error("pole", "denominator " + Scalar::from_parts(s.field(), s.denominator(), one_poly()).str() +
                            " vanishes under {" + a + "}");
  }
  return num / den;
}

}  // namespace homq
