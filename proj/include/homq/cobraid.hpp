#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homq/hombialg.hpp"

namespace homq {

// Values of R on generator pairs and unit pairs; everything else follows by
// the untwisted multiplicativity laws.
struct CobraidingForm {
  std::map<std::pair<int, int>, Scalar> gen_table;
  std::map<int, Scalar> unit_left;   // R(1 (x) g)
  std::map<int, Scalar> unit_right;  // R(g (x) 1)
  Scalar unit_unit = Scalar(1);

  json to_json(const Presentation& pres) const;
};

CobraidingForm cobraiding_form_from_json(const json& j, const Presentation& pres);

// left_first splits the left word whenever it is composite; right_first splits
// the right word first. Both must agree on a well-defined form.
enum class RecursionOrder { left_first, right_first };

class CobraidedHomBialgebra;
using CobraidedPtr = std::shared_ptr<const CobraidedHomBialgebra>;

class CobraidedHomBialgebra {
 public:
  // r_power n replaces R by R o (alpha^n (x) alpha^n). A nonempty
  // r_generators mask restricts verification to words in those generators.
  CobraidedHomBialgebra(HomBialgebraPtr H, CobraidingForm R, int r_power = 0,
                        std::vector<bool> r_generators = {});

  const HomBialgebra& H() const { return *H_; }
  const HomBialgebraPtr& H_ptr() const { return H_; }
  const Presentation& pres() const { return H_->pres(); }
  const CobraidingForm& form() const { return R_; }
  int r_power() const { return r_power_; }
  const std::vector<bool>& r_generators() const { return r_generators_; }

  Scalar eval(const Monomial& m, const Monomial& n) const;
  Scalar eval(const Monomial& m, const NCPoly& v) const;
  Scalar eval(const NCPoly& u, const Monomial& n) const;
  Scalar eval(const NCPoly& u, const NCPoly& v) const;
  // untwisted R on arbitrary (not necessarily normal) words
  Scalar eval_base(const Monomial& m, const Monomial& n,
                   RecursionOrder order = RecursionOrder::left_first) const;

  CobraidedHomBialgebra with_form(CobraidingForm R) const;
  CobraidedHomBialgebra with_hom_bialgebra(HomBialgebraPtr H) const;
  CobraidedHomBialgebra with_r_power(int n) const;

  json to_json() const;

 private:
  HomBialgebraPtr H_;
  CobraidingForm R_;
  int r_power_;
  std::vector<bool> r_generators_;

  struct Cache {
    std::mutex mu;
    std::unordered_map<std::string, Scalar> base;
    std::unordered_map<std::string, Scalar> twisted;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Scalar eval_R(const CobraidedHomBialgebra& C, const NCPoly& u, const NCPoly& v);

Report verify_cobraided(const CobraidedHomBialgebra& C, int degree);
Report verify_oqhybe(const CobraidedHomBialgebra& C, int degree);
Report check_alpha_invariance(const CobraidedHomBialgebra& C, int degree);
// alpha has trivial kernel on the span of basis words of length <= degree
Report injectivity_certificate(const HomBialgebra& H, int degree);
CobraidedHomBialgebra twist_R_power(const CobraidedHomBialgebra& C, int n);

}  // namespace homq
