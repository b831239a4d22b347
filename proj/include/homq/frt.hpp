#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "homq/cobraid.hpp"
#include "homq/linalg.hpp"

namespace homq {

// Structure constants c_{ij}^{mn} of gamma(v_i (x) v_j) = sum c_{ij}^{mn} v_m (x) v_n.
// Indices are 0-based here; JSON and names use 1-based indices.
struct RMatrixSpec {
  int dim = 0;
  FieldPtr field;
  std::map<std::array<int, 4>, Scalar> c;

  Scalar at(int i, int j, int m, int n) const;
  // column i*dim+j, row m*dim+n
  Mat gamma() const;
  json to_json() const;
};

RMatrixSpec rmatrix_from_json(const json& j);

Report verify_ybe(const RMatrixSpec& spec);

// Generator names: a, b, c, d for dim 2, T11, T12, ... otherwise.
std::vector<std::string> frt_generator_names(int dim);

// R(T_i^m (x) T_j^n) = c_{ji}^{mn}, R(1 (x) T_i^j) = R(T_i^j (x) 1) = delta_ij.
// gen maps (i, j) to the generator index of T_i^j.
CobraidingForm frt_cobraiding_form(const RMatrixSpec& spec, const std::vector<int>& gen);

struct FrtAlgebra {
  RMatrixSpec spec;
  CobraidedPtr cobraided;  // untwisted A(gamma)
  int relations_retained = 0;
  // local confluence, plus alpha invariance of R once twisted
  Report certificates;
  std::vector<Scalar> lambda;  // empty unless twisted
};

FrtAlgebra frt_construct(const RMatrixSpec& spec, int max_degree = 4);

// T_i^j -> lambda_i lambda_j^{-1} T_i^j; rejected when the scaling condition fails.
AlphaTable frt_lambda_endomorphism(const FrtAlgebra& A, const std::vector<Scalar>& lambda);

FrtAlgebra frt_twist(const RMatrixSpec& spec, const std::vector<Scalar>& lambda, int max_degree = 4);

}  // namespace homq
