#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "homq/ncpoly.hpp"

namespace homq {

// generator index -> image
using AlphaTable = std::map<int, NCPoly>;
using DeltaTable = std::map<int, TensorElement>;

class HomBialgebra;
using HomBialgebraPtr = std::shared_ptr<const HomBialgebra>;

// A presented bialgebra together with a twisting map. When twisted, the
// product is alpha after concatenation and the coproduct is Delta after alpha.
class HomBialgebra {
 public:
  HomBialgebra(PresentationPtr pres, DeltaTable delta, AlphaTable alpha, bool twisted);

  const Presentation& pres() const { return *pres_; }
  const PresentationPtr& pres_ptr() const { return pres_; }
  const FieldPtr& field() const { return pres_->field(); }
  bool twisted() const { return twisted_; }
  const DeltaTable& delta_table() const { return delta_; }
  const AlphaTable& alpha_table() const { return alpha_; }
  // alpha is diagonal on generators with nonzero scales
  bool alpha_is_identity() const;

  // Copy whose coproduct stays untwisted while the product is twisted.
  // Only useful for exhibiting broken instances.
  HomBialgebra with_untwisted_coproduct() const;

  NCPoly alpha(const Monomial& m) const;
  NCPoly alpha(const NCPoly& p) const;
  NCPoly alpha_power(const NCPoly& p, int n) const;
  TensorElement alpha(const TensorElement& t) const;  // on every leg

  // Delta from the table, extended multiplicatively (never twisted)
  TensorElement delta_plain(const Monomial& m) const;
  TensorElement delta_plain(const NCPoly& p) const;

  // the instance's own structure maps
  NCPoly mu(const Monomial& a, const Monomial& b) const;
  NCPoly mu(const NCPoly& a, const NCPoly& b) const;
  TensorElement delta(const Monomial& m) const;
  TensorElement delta(const NCPoly& p) const;
  // componentwise instance product of two tensors of the same arity
  TensorElement mu(const TensorElement& a, const TensorElement& b) const;

  json to_json() const;

 private:
  PresentationPtr pres_;
  DeltaTable delta_;
  AlphaTable alpha_;
  bool twisted_;
  bool twist_coproduct_;

  struct Cache {
    std::mutex mu;
    std::unordered_map<Monomial, NCPoly> alpha;
    std::unordered_map<Monomial, TensorElement> delta;
    std::unordered_map<std::string, NCPoly> product;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Multiplicative extension of an arbitrary generator table.
NCPoly apply_endomorphism(const Presentation& pres, const AlphaTable& endo, const NCPoly& p);

TensorElement delta(const HomBialgebra& H, const NCPoly& p);
NCPoly apply_alpha(const HomBialgebra& H, const NCPoly& p);

// Relations preserved and (endo (x) endo) Delta = Delta endo on generators.
Report verify_morphism(const AlphaTable& endo, const HomBialgebra& H, int degree);
// Twist an untwisted bialgebra along a verified bialgebra endomorphism.
HomBialgebra twist_hom_bialgebra(const HomBialgebra& B, const AlphaTable& endo);
Report verify_hom_bialgebra(const HomBialgebra& H, int degree);

// basis monomials of degree <= d, optionally restricted to some generators
std::vector<Monomial> verification_basis(const Presentation& pres, int degree,
                                         const std::vector<bool>& allowed = {});

HomBialgebra hom_bialgebra_from_json(const json& j, const PresentationPtr& pres);

}  // namespace homq
