#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "homq/report.hpp"
#include "homq/scalar.hpp"

namespace homq {

// A word in the generators: each char holds one generator index.
// The empty word is the unit.
using Monomial = std::string;

inline Monomial gen_word(int g) { return Monomial(1, static_cast<char>(g)); }
inline int letter(const Monomial& m, std::size_t i) { return static_cast<unsigned char>(m[i]); }

class NCPoly {
 public:
  using Map = std::map<Monomial, Scalar>;

  NCPoly() = default;
  static NCPoly monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static NCPoly constant(const Scalar& c) { return monomial(Monomial(), c); }

  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  NCPoly operator-() const;

  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

 private:
  Map terms_;
};

inline NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
inline NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
inline NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
inline NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }

using Legs = std::array<Monomial, 3>;

// Element of A, A (x) A or A (x) A (x) A; unused legs stay empty.
class TensorElement {
 public:
  using Map = std::map<Legs, Scalar>;

  explicit TensorElement(int arity = 2) : arity_(arity) {}
  static TensorElement pure(const Legs& legs, int arity, const Scalar& c = Scalar(1));

  int arity() const { return arity_; }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Legs& legs, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);

  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  int arity_;
  Map terms_;
};

// Elementary tensor of polynomials p1 (x) p2 (x) ...
TensorElement tensor(const NCPoly& a, const NCPoly& b);
TensorElement tensor(const NCPoly& a, const NCPoly& b, const NCPoly& c);

struct Rule {
  Monomial lhs;
  NCPoly rhs;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

// Generators, rewrite rules and the monomial order (weighted graded-lex;
// weights default to 1).
class Presentation {
 public:
  Presentation(FieldPtr field, std::vector<std::string> generators, std::vector<Rule> rules,
               int max_degree = 4, std::vector<int> weights = {});

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& generators() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const std::vector<Rule>& rules() const { return rules_; }
  int max_degree() const { return max_degree_; }
  const std::vector<int>& weights() const { return weights_; }

  int generator_index(const std::string& name) const;  // -1 when absent
  int weight(const Monomial& m) const;
  // strict monomial order
  bool less(const Monomial& a, const Monomial& b) const;

  Monomial parse_monomial(const std::string& text) const;
  std::string monomial_text(const Monomial& m) const;
  std::string render(const NCPoly& p) const;
  std::string render(const TensorElement& t) const;
  json to_json(const NCPoly& p) const;

  // convenience: generator as a polynomial, and parse of "coef*mono + ..." lists
  NCPoly gen(const std::string& name) const;
  NCPoly poly(const std::vector<std::pair<std::string, std::string>>& terms) const;
  Scalar scalar(const std::string& text) const { return parse_scalar(text, field_); }

  // is m free of every rule left side
  bool is_normal(const Monomial& m) const;
  NCPoly normal_form(const Monomial& w) const;
  NCPoly normal_form(const NCPoly& p) const;
  TensorElement normal_form(const TensorElement& t) const;
  NCPoly multiply(const Monomial& a, const Monomial& b) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  // componentwise product in the tensor power
  TensorElement multiply(const TensorElement& a, const TensorElement& b) const;

  json to_json() const;

 private:
  NCPoly reduce_word(const Monomial& w) const;

  FieldPtr field_;
  std::vector<std::string> gens_;
  std::vector<Rule> rules_;
  int max_degree_;
  std::vector<int> weights_;
  bool single_char_names_ = true;
  std::vector<std::vector<int>> rules_by_last_;

  struct Cache {
    std::mutex mu;
    std::unordered_map<Monomial, NCPoly> nf;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

NCPoly normal_form(const NCPoly& p, const Presentation& pres);
NCPoly multiply(const NCPoly& p, const NCPoly& r, const Presentation& pres);

// Normal monomials of word length <= degree, ascending in the monomial order.
std::vector<Monomial> graded_basis(const Presentation& pres, int degree);
// All normal monomials, when there are finitely many; throws "rejected" with
// the length at which growth continued once `cap` is exceeded.
std::vector<Monomial> finite_basis(const Presentation& pres, int cap = 64);

Report check_local_confluence(const Presentation& pres, int degree);

Presentation presentation_from_json(const json& j, const FieldPtr& field);

}  // namespace homq
