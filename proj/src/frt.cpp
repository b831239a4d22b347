#include "homq/frt.hpp"

#include <algorithm>

#include "homq/io.hpp"

namespace homq {

Scalar RMatrixSpec::at(int i, int j, int m, int n) const {
  auto it = c.find({i, j, m, n});
  return it == c.end() ? Scalar() : it->second;
}

Mat RMatrixSpec::gamma() const {
  Mat g(dim * dim, dim * dim);
  for (const auto& [idx, v] : c) g(idx[2] * dim + idx[3], idx[0] * dim + idx[1]) = v;
  return g;
}

json RMatrixSpec::to_json() const {
  json j = json::object();
  j["dim"] = dim;
  j["field"] = field_to_json(*field);
  json e = json::array();
  for (const auto& [idx, v] : c)
    if (!v.is_zero())
      e.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"m", idx[2] + 1}, {"n", idx[3] + 1}, {"value", v.str()}});
  j["entries"] = e;
  return j;
}

RMatrixSpec rmatrix_from_json(const json& j) {
  try {
    RMatrixSpec s;
    s.dim = j.at("dim").get<int>();
    if (s.dim < 1) throw Error("malformed_json", "R-matrix dim must be >= 1");
    s.field = field_from_json(j.at("field"));
    for (const auto& e : j.at("entries")) {
      std::array<int, 4> idx{e.at("i").get<int>() - 1, e.at("j").get<int>() - 1, e.at("m").get<int>() - 1,
                             e.at("n").get<int>() - 1};
      for (int x : idx)
        if (x < 0 || x >= s.dim) throw Error("malformed_json", "R-matrix index out of range");
      Scalar v = parse_scalar(e.at("value").get<std::string>(), s.field);
      if (!v.is_zero()) s.c[idx] = v;
    }
    return s;
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("R-matrix: ") + e.what());
  }
}

Report verify_ybe(const RMatrixSpec& spec) {
  const int N = spec.dim;
  Mat g = spec.gamma();
  Mat id = Mat::identity(N);
  Mat g12 = kron(g, id), g23 = kron(id, g);
  Mat lhs = g23 * g12 * g23, rhs = g12 * g23 * g12;

  CheckBuilder braid("ybe/braid_relation", 3);
  braid.count(static_cast<long>(N) * N * N * N * N * N);
  for (int r = 0; r < lhs.rows() && !braid.failed(); ++r)
    for (int c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) {
        auto triple = [&](int x) {
          return json::array({x / (N * N) + 1, (x / N) % N + 1, x % N + 1});
        };
        braid.fail({{"input", triple(c)}, {"output", triple(r)}, {"lhs", lhs(r, c).str()}, {"rhs", rhs(r, c).str()}});
        break;
      }
  CheckBuilder inv("ybe/invertible", 2);
  inv.count();
  int rk = rank(g);
  if (rk != N * N) inv.fail({{"rank", rk}, {"size", N * N}});

  Report rep;
  rep.add(braid.finish());
  rep.add(inv.finish());
  return rep;
}

std::vector<std::string> frt_generator_names(int dim) {
  if (dim == 2) return {"a", "b", "c", "d"};
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) names.push_back("T" + std::to_string(i) + std::to_string(j));
  return names;
}

CobraidingForm frt_cobraiding_form(const RMatrixSpec& spec, const std::vector<int>& gen) {
  const int N = spec.dim;
  CobraidingForm R;
  for (int i = 0; i < N; ++i)
    for (int m = 0; m < N; ++m)
      for (int j = 0; j < N; ++j)
        for (int n = 0; n < N; ++n) R.gen_table[{gen[i * N + m], gen[j * N + n]}] = spec.at(j, i, m, n);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      R.unit_left[gen[i * N + j]] = Scalar(i == j ? 1 : 0);
      R.unit_right[gen[i * N + j]] = Scalar(i == j ? 1 : 0);
    }
  return R;
}

FrtAlgebra frt_construct(const RMatrixSpec& spec, int max_degree) {
  const int N = spec.dim;
  const int G = N * N;
  auto T = [&](int i, int j) { return static_cast<char>(i * N + j); };
  std::vector<std::string> names = frt_generator_names(N);
  Presentation bare(spec.field, names, {}, max_degree);

  // C_{ij}^{mn} = sum c_{ij}^{kl} T_k^m T_l^n - sum T_i^k T_j^l c_{kl}^{mn}
  std::vector<Monomial> words;
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) words.push_back(Monomial{static_cast<char>(x), static_cast<char>(y)});
  std::sort(words.begin(), words.end(), [&](const Monomial& a, const Monomial& b) { return bare.less(b, a); });
  std::map<Monomial, int> column;
  for (std::size_t k = 0; k < words.size(); ++k) column[words[k]] = static_cast<int>(k);

  std::vector<std::map<int, Scalar>> rels;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          std::map<int, Scalar> rel;
          for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
              Scalar a = spec.at(i, j, k, l);
              if (!a.is_zero()) rel[column[Monomial{T(k, m), T(l, n)}]] += a;
              Scalar b = spec.at(k, l, m, n);
              if (!b.is_zero()) rel[column[Monomial{T(i, k), T(j, l)}]] -= b;
            }
          std::erase_if(rel, [](const auto& kv) { return kv.second.is_zero(); });
          if (!rel.empty()) rels.push_back(std::move(rel));
        }

  Mat M(static_cast<int>(rels.size()), static_cast<int>(words.size()));
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [c, v] : rels[r]) M(static_cast<int>(r), c) = v;
  std::vector<int> pivots = row_reduce(M);

  std::vector<Rule> rules;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rule rule;
    rule.lhs = words[pivots[r]];
    for (int c = pivots[r] + 1; c < M.cols(); ++c)
      if (!M(static_cast<int>(r), c).is_zero()) rule.rhs.add_term(words[c], -M(static_cast<int>(r), c));
    rules.push_back(std::move(rule));
  }

  auto pres = std::make_shared<const Presentation>(spec.field, names, std::move(rules), max_degree);
  DeltaTable delta;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      TensorElement t(2);
      for (int k = 0; k < N; ++k) t.add_term({Monomial(1, T(i, k)), Monomial(1, T(k, j)), ""}, Scalar(1));
      delta[i * N + j] = t;
    }
  auto H = std::make_shared<const HomBialgebra>(pres, delta, AlphaTable{}, false);
  std::vector<int> gen(G);
  for (int x = 0; x < G; ++x) gen[x] = x;

  FrtAlgebra A;
  A.spec = spec;
  A.cobraided = std::make_shared<const CobraidedHomBialgebra>(H, frt_cobraiding_form(spec, gen));
  A.relations_retained = static_cast<int>(pivots.size());
  A.certificates = check_local_confluence(*pres, max_degree);
  if (!A.certificates.checks.empty())
    A.certificates.checks.front().note = std::to_string(A.relations_retained) + " relations retained";
  return A;
}

AlphaTable frt_lambda_endomorphism(const FrtAlgebra& A, const std::vector<Scalar>& lambda) {
  const RMatrixSpec& s = A.spec;
  const int N = s.dim;
  if (static_cast<int>(lambda.size()) != N)
    throw Error("config", "expected " + std::to_string(N) + " scaling values, got " + std::to_string(lambda.size()));
  for (const auto& l : lambda)
    if (l.is_zero()) throw Error("rejected", "scaling values must be invertible");
  json bad = json::array();
  for (const auto& [idx, v] : s.c) {
    if (v.is_zero()) continue;
    if (lambda[idx[0]] * lambda[idx[1]] != lambda[idx[2]] * lambda[idx[3]])
      bad.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1});
  }
  if (!bad.empty())
    throw Error("rejected", "lambda_i lambda_j c = lambda_m lambda_n c fails at (i,j,m,n) = " + bad.dump());
  AlphaTable alpha;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      alpha[i * N + j] = NCPoly::monomial(gen_word(i * N + j), lambda[i] / lambda[j]);
  return alpha;
}

FrtAlgebra frt_twist(const RMatrixSpec& spec, const std::vector<Scalar>& lambda, int max_degree) {
  FrtAlgebra A = frt_construct(spec, max_degree);
  AlphaTable alpha = frt_lambda_endomorphism(A, lambda);
  auto H = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(A.cobraided->H(), alpha));
  A.cobraided = std::make_shared<const CobraidedHomBialgebra>(A.cobraided->with_hom_bialgebra(H));
  A.lambda = lambda;
  A.certificates.merge(check_alpha_invariance(*A.cobraided, 2));
  return A;
}

}  // namespace homq
