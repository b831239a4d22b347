#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "homq/cobraid.hpp"
#include "homq/frt.hpp"
#include "homq/linalg.hpp"

namespace homq {

// Comodule on a finite basis v_0 .. v_{N-1}.
struct Comodule {
  CobraidedPtr host;
  std::vector<std::string> labels;
  // untwisted coaction: rho(v_i) = sum_k rho[i][k] (x) v_k
  std::vector<std::vector<NCPoly>> rho;
  Mat alpha;  // alpha(v_j) = sum_i alpha(i, j) v_i

  int dim() const { return static_cast<int>(labels.size()); }
  // the structure map over the host: rho o alpha_V when the host is twisted
  std::vector<std::vector<NCPoly>> coaction() const;
  json to_json() const;
};

// rho(v_i) = sum_k T_i^k (x) v_k, T_i^k looked up by its FRT name (else index i*N+k);
// alpha_V = diag(scales), identity when scales is empty.
Comodule matrix_comodule(CobraidedPtr host, int N, const std::vector<Scalar>& scales = {});
Comodule frt_comodule(const FrtAlgebra& A);

// Hom-coassociativity and compatibility of rho with the twisting maps
Report verify_comodule(const Comodule& M);

// B_{V,W}(v (x) w) = sum R(w_A (x) v_A) w_W (x) v_V from the structure maps;
// columns index v_i (x) w_j as i*dimW + j, rows w_n (x) v_m as n*dimV + m.
Mat bvw_operator(const Comodule& V, const Comodule& W);
// sum R(w_A (x) v_A) alpha(w_V) (x) alpha(v_V) from the untwisted coaction
Mat b_alpha_operator(const Comodule& V);

Report verify_hybe(const Mat& B, const Mat& alpha);
// rejected unless R is alpha-invariant on words up to the comodules' coaction degree
Report verify_mixed_hybe(const Comodule& U, const Comodule& V, const Comodule& W);

// Algebra with a twisting map; the product is alpha after concatenation when twisted.
struct HomAlgebra {
  PresentationPtr pres;
  AlphaTable alpha_table;
  bool twisted = false;

  NCPoly alpha(const NCPoly& p) const;
  NCPoly mu(const NCPoly& a, const NCPoly& b) const;
};

// Comodule algebra: leg 0 lives in the host, leg 1 in the algebra.
class ComoduleAlgebra {
 public:
  ComoduleAlgebra(CobraidedPtr host, std::shared_ptr<const HomAlgebra> algebra, std::map<int, TensorElement> rho_gen);

  const CobraidedPtr& host() const { return host_; }
  const HomAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const HomAlgebra>& algebra_ptr() const { return algebra_; }
  const std::map<int, TensorElement>& rho_table() const { return rho_gen_; }

  // multiplicative extension with the untwisted products
  TensorElement rho_plain(const Monomial& m) const;
  TensorElement rho_plain(const NCPoly& p) const;
  // rho o alpha_A when twisted
  TensorElement coaction(const NCPoly& p) const;
  // product of mixed tensors, legwise with the untwisted or the instance products
  TensorElement multiply_plain(const TensorElement& a, const TensorElement& b) const;
  TensorElement multiply(const TensorElement& a, const TensorElement& b) const;

  // normal monomials of length exactly d as a finite comodule
  Comodule piece(int d) const;
  std::string render(const TensorElement& t) const;
  json to_json() const;

 private:
  CobraidedPtr host_;
  std::shared_ptr<const HomAlgebra> algebra_;
  std::map<int, TensorElement> rho_gen_;
  struct Cache {
    std::mutex mu;
    std::unordered_map<Monomial, TensorElement> rho;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Twist along a bialgebra endomorphism of the host and an algebra endomorphism
// of the algebra; rejected unless rho o alpha_A = (alpha_H (x) alpha_A) o rho on generators.
ComoduleAlgebra twist_comodule_algebra(const ComoduleAlgebra& M, const AlphaTable& host_alpha,
                                       const AlphaTable& algebra_alpha);

// rho(xy) = sum x_H y_H (x) x_A y_A on basis pairs, plus the comodule axioms per piece
Report verify_comodule_hom_algebra(const ComoduleAlgebra& M, int degree);

enum class PlaneKind { standard, fermionic, mixed };
PlaneKind plane_kind_from_name(const std::string& name);
std::string plane_kind_name(PlaneKind k);

// Literal closed forms of rho_alpha(x^i y^j) on the quantum planes
TensorElement closed_form_coaction(const ComoduleAlgebra& M, PlaneKind kind, int i, int j, const Scalar& lambda,
                                   const Scalar& xi);

}  // namespace homq
