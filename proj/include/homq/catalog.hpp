#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homq/comodule.hpp"
#include "homq/findim.hpp"
#include "homq/frt.hpp"

namespace homq {

using Params = std::map<std::string, std::string>;

struct Instance {
  std::string name;
  json params = json::object();  // resolved parameter values
  FieldPtr field;

  HomBialgebraPtr base;       // untwisted presented bialgebra
  AlphaTable alpha;           // the endomorphism it is twisted along
  CobraidedPtr cobraided;     // twisted instance with its R (null for the braided families)
  HomBialgebraPtr presented;  // twisted presented Hom-bialgebra (always set)

  std::optional<RMatrixSpec> rmatrix;  // quantum matrix families
  std::optional<FinDimHomBialgebra> braided;
  std::optional<ComoduleAlgebra> plane;
  std::optional<PlaneKind> plane_kind;
  Scalar lambda = Scalar(1), xi = Scalar(1);
  // degree used for the cobraided checks when the instance fixes its own
  std::optional<int> natural_degree;
};

const std::vector<std::string>& instance_names();
// Unset scalar parameters stay formal variables; rejected on a violated hypothesis.
Instance build_instance(const std::string& name, const Params& params = {});

// sl2, mpq, mq11; field must declare t (and p for mpq)
RMatrixSpec catalog_rmatrix(const std::string& name, const FieldPtr& field);

// rho(v_i) = sum_k T_i^k (x) v_k over the instance (twisted, alpha_V = diag(lambda, 1))
// or over its untwisted base with alpha_V = id
Comodule instance_frt_comodule(const Instance& inst, bool twisted);

// ad - q^{-1} bc in normal form (mq2, slq2, glq2)
NCPoly quantum_determinant(const Instance& inst);

struct SuiteDegrees {
  int degree = 3;
  int oqhybe = 2;
};
// HOMQ_DEFAULT_DEGREE overrides the truncation degree; OQHYBE stays at min(degree, 2)
SuiteDegrees default_degrees();

Report verify_instance(const Instance& inst, const SuiteDegrees& deg);

json instance_to_json(const Instance& inst);

}  // namespace homq
