#pragma once

#include <array>
#include <map>
#include <vector>

#include "homq/cobraid.hpp"
#include "homq/linalg.hpp"

namespace homq {

using SparseVec = std::map<int, Scalar>;
using Sparse2 = std::map<std::array<int, 2>, Scalar>;
using Sparse3 = std::map<std::array<int, 3>, Scalar>;

// element: R = sum r(i,j) e_i (x) e_j; form: r(i,j) = R(e_i (x) e_j)
enum class RKind { none, element, form };

struct FinDimHomBialgebra {
  FieldPtr field;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mu;  // e_i e_j
  std::vector<Sparse2> delta;              // Delta(e_i)
  Mat alpha;                               // alpha(e_j) = sum_i alpha(i, j) e_i
  RKind r_kind = RKind::none;
  Mat r;

  int dim() const { return static_cast<int>(labels.size()); }
  bool operator==(const FinDimHomBialgebra& o) const;
  json to_json() const;
};

FinDimHomBialgebra findim_from_json(const json& j);

// Structure constants of the instance maps on the finite normal basis;
// rejected when the basis is not finite within `cap` elements.
FinDimHomBialgebra materialize(const HomBialgebra& H, int cap = 64);
// as above, with the element R (given in the untwisted normal form) attached
FinDimHomBialgebra materialize(const HomBialgebra& H, const TensorElement& R, int cap = 64);
// as above, with the form R attached
FinDimHomBialgebra materialize(const CobraidedHomBialgebra& C, int cap = 64);

FinDimHomBialgebra with_r(const FinDimHomBialgebra& B, RKind kind, Mat r);

Report verify_findim_hom_bialgebra(const FinDimHomBialgebra& B);
Report verify_braided(const FinDimHomBialgebra& B);
Report verify_cobraided_tensor(const FinDimHomBialgebra& B);
// alpha^{(x)2}(R) = R for elements, R o alpha^{(x)2} = R for forms
Report check_r_alpha_invariance(const FinDimHomBialgebra& B);

// transpose every structure map; R keeps its matrix and flips kind
FinDimHomBialgebra dualize(const FinDimHomBialgebra& B);

}  // namespace homq
