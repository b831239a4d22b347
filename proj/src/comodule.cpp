#include "homq/comodule.hpp"

#include <algorithm>

#include "homq/qnumbers.hpp"

namespace homq {

namespace {

NCPoly scaled(const NCPoly& p, const Scalar& c) { return c.is_one() ? p : p * c; }

int max_word_length(const std::vector<std::vector<NCPoly>>& rows) {
  std::size_t n = 0;
  for (const auto& row : rows)
    for (const auto& p : row)
      for (const auto& [m, c] : p.terms()) n = std::max(n, m.size());
  return static_cast<int>(n);
}

json index_witness(const Mat& lhs, const Mat& rhs, int r, int c) {
  return {{"row", r}, {"column", c}, {"lhs", lhs(r, c).str()}, {"rhs", rhs(r, c).str()}};
}

// first differing entry, if any
bool mat_differs(const Mat& lhs, const Mat& rhs, int& r_out, int& c_out) {
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) {
        r_out = r;
        c_out = c;
        return true;
      }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- finite comodules

std::vector<std::vector<NCPoly>> Comodule::coaction() const {
  if (!host->H().twisted()) return rho;
  const int N = dim();
  std::vector<std::vector<NCPoly>> out(N, std::vector<NCPoly>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Scalar& a = alpha(j, i);
      if (a.is_zero()) continue;
      for (int k = 0; k < N; ++k)
        if (!rho[j][k].is_zero()) out[i][k] += scaled(rho[j][k], a);
    }
  return out;
}

json Comodule::to_json() const {
  const Presentation& P = host->pres();
  json j = json::object();
  j["carrier"] = labels;
  json r = json::object();
  for (int i = 0; i < dim(); ++i) {
    json terms = json::array();
    for (int k = 0; k < dim(); ++k)
      if (!rho[i][k].is_zero()) terms.push_back({{"host", P.to_json(rho[i][k])}, {"carrier", labels[k]}});
    r[labels[i]] = terms;
  }
  j["rho"] = r;
  json a = json::array();
  for (int i = 0; i < dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < dim(); ++k) row.push_back(alpha(i, k).str());
    a.push_back(row);
  }
  j["alpha"] = a;
  return j;
}

Comodule matrix_comodule(CobraidedPtr host, int N, const std::vector<Scalar>& scales) {
  if (host->pres().ngens() < N * N) throw Error("config", "host has fewer than N^2 generators");
  if (!scales.empty() && static_cast<int>(scales.size()) != N)
    throw Error("config", "expected " + std::to_string(N) + " scaling values");
  Comodule M;
  M.host = std::move(host);
  for (int i = 1; i <= N; ++i) M.labels.push_back("v" + std::to_string(i));
  M.rho.assign(N, std::vector<NCPoly>(N));
  const auto names = frt_generator_names(N);
  const Presentation& P = M.host->pres();
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      int g = P.generator_index(names[i * N + k]);
      M.rho[i][k] = NCPoly::monomial(gen_word(g < 0 ? i * N + k : g));
    }
  M.alpha = Mat::identity(N);
  for (std::size_t i = 0; i < scales.size(); ++i) M.alpha(static_cast<int>(i), static_cast<int>(i)) = scales[i];
  return M;
}

Comodule frt_comodule(const FrtAlgebra& A) { return matrix_comodule(A.cobraided, A.spec.dim, A.lambda); }

Report verify_comodule(const Comodule& M) {
  const HomBialgebra& H = M.host->H();
  const Presentation& P = H.pres();
  const int N = M.dim();
  const auto E = M.coaction();
  const int degree = max_word_length(E);

  CheckBuilder coass("comodule/hom_coassociativity", degree);
  CheckBuilder compat("comodule/alpha_compatibility", degree);
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < N; ++l) {
      // (Delta (x) alpha_M) rho = (alpha_C (x) rho) rho, coefficient of v_l
      TensorElement lhs(2), rhs(2);
      for (int k = 0; k < N; ++k) {
        if (E[i][k].is_zero()) continue;
        if (!M.alpha(l, k).is_zero()) {
          TensorElement d = H.delta(E[i][k]);
          d *= M.alpha(l, k);
          lhs += d;
        }
        if (!E[k][l].is_zero()) rhs += tensor(H.alpha(E[i][k]), E[k][l]);
      }
      coass.count();
      if (lhs != rhs && !coass.failed())
        coass.fail({{"v", M.labels[i]}, {"component", M.labels[l]}, {"lhs", P.render(lhs)}, {"rhs", P.render(rhs)}});

      // (alpha_C (x) alpha_M) rho = rho alpha_M, coefficient of v_l
      NCPoly a, b;
      for (int k = 0; k < N; ++k)
        if (!M.alpha(l, k).is_zero() && !E[i][k].is_zero()) a += scaled(H.alpha(E[i][k]), M.alpha(l, k));
      for (int j = 0; j < N; ++j)
        if (!M.alpha(j, i).is_zero() && !E[j][l].is_zero()) b += scaled(E[j][l], M.alpha(j, i));
      compat.count();
      if (a != b && !compat.failed())
        compat.fail({{"v", M.labels[i]}, {"component", M.labels[l]}, {"lhs", P.render(a)}, {"rhs", P.render(b)}});
    }
  Report rep;
  rep.add(coass.finish());
  rep.add(compat.finish());
  return rep;
}

Mat bvw_operator(const Comodule& V, const Comodule& W) {
  const auto VE = V.coaction();
  const auto WE = W.coaction();
  const int nv = V.dim(), nw = W.dim();
  Mat B(nw * nv, nv * nw);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nw; ++j)
      for (int n = 0; n < nw; ++n) {
        if (WE[j][n].is_zero()) continue;
        for (int m = 0; m < nv; ++m)
          if (!VE[i][m].is_zero()) B(n * nv + m, i * nw + j) = V.host->eval(WE[j][n], VE[i][m]);
      }
  return B;
}

Mat b_alpha_operator(const Comodule& V) {
  const int N = V.dim();
  Mat B(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int n = 0; n < N; ++n) {
        if (V.rho[j][n].is_zero()) continue;
        for (int m = 0; m < N; ++m)
          if (!V.rho[i][m].is_zero()) B(n * N + m, i * N + j) = V.host->eval(V.rho[j][n], V.rho[i][m]);
      }
  return kron(V.alpha, V.alpha) * B;
}

Report verify_hybe(const Mat& B, const Mat& alpha) {
  const int N = alpha.rows();
  if (B.rows() != N * N || B.cols() != N * N) throw Error("config", "operator and twisting map sizes disagree");
  Mat a1B = kron(alpha, B), Ba1 = kron(B, alpha);
  Mat lhs = a1B * Ba1 * a1B, rhs = Ba1 * a1B * Ba1;
  CheckBuilder braid("hybe/braid_relation", 3);
  braid.count(static_cast<long>(lhs.rows()) * lhs.cols());
  int r = 0, c = 0;
  if (mat_differs(lhs, rhs, r, c)) braid.fail(index_witness(lhs, rhs, r, c));

  Mat aa = kron(alpha, alpha);
  Mat l2 = aa * B, r2 = B * aa;
  CheckBuilder comm("hybe/alpha_commutation", 2);
  comm.count(static_cast<long>(l2.rows()) * l2.cols());
  if (mat_differs(l2, r2, r, c)) comm.fail(index_witness(l2, r2, r, c));
  Report rep;
  rep.add(braid.finish());
  rep.add(comm.finish());
  return rep;
}

Report verify_mixed_hybe(const Comodule& U, const Comodule& V, const Comodule& W) {
  int degree = std::max({max_word_length(U.rho), max_word_length(V.rho), max_word_length(W.rho)});
  Report inv = check_alpha_invariance(*U.host, degree);
  if (!inv.passed())
    throw Error("rejected", "the cobraiding form is not alpha-invariant: " + inv.checks.front().witness->dump());

  Mat B_uv = bvw_operator(U, V), B_uw = bvw_operator(U, W), B_vw = bvw_operator(V, W);
  Mat lhs = kron(W.alpha, B_uv) * kron(B_uw, V.alpha) * kron(U.alpha, B_vw);
  Mat rhs = kron(B_vw, U.alpha) * kron(V.alpha, B_uw) * kron(B_uv, W.alpha);

  int r = 0, c = 0;
  CheckBuilder comm("mixed_hybe/alpha_commutation", 2);
  const std::vector<std::tuple<const Mat*, const Comodule*, const Comodule*, const char*>> ops{
      {&B_uv, &U, &V, "UV"}, {&B_uw, &U, &W, "UW"}, {&B_vw, &V, &W, "VW"}};
  for (const auto& [B, X, Y, name] : ops) {
    comm.count();
    Mat l = kron(Y->alpha, X->alpha) * *B, rr = *B * kron(X->alpha, Y->alpha);
    if (!comm.failed() && mat_differs(l, rr, r, c)) {
      json w = index_witness(l, rr, r, c);
      w["operator"] = name;
      comm.fail(w);
    }
  }
  CheckBuilder ident("mixed_hybe/identity", 3);
  ident.count(static_cast<long>(lhs.rows()) * lhs.cols());
  if (mat_differs(lhs, rhs, r, c)) ident.fail(index_witness(lhs, rhs, r, c));
  Report rep;
  rep.add(comm.finish());
  rep.add(ident.finish());
  return rep;
}

// ---------------------------------------------------------------- comodule algebras

NCPoly HomAlgebra::alpha(const NCPoly& p) const {
  if (alpha_table.empty()) return p;
  return apply_endomorphism(*pres, alpha_table, p);
}

NCPoly HomAlgebra::mu(const NCPoly& a, const NCPoly& b) const {
  NCPoly p = pres->multiply(a, b);
  return twisted ? alpha(p) : p;
}

ComoduleAlgebra::ComoduleAlgebra(CobraidedPtr host, std::shared_ptr<const HomAlgebra> algebra,
                                 std::map<int, TensorElement> rho_gen)
    : host_(std::move(host)), algebra_(std::move(algebra)), rho_gen_(std::move(rho_gen)) {
  for (int g = 0; g < algebra_->pres->ngens(); ++g)
    if (!rho_gen_.count(g))
      throw Error("config", "coaction missing for generator '" + algebra_->pres->generators()[g] + "'");
}

TensorElement ComoduleAlgebra::multiply_plain(const TensorElement& a, const TensorElement& b) const {
  const Presentation& HP = host_->pres();
  const Presentation& AP = *algebra_->pres;
  TensorElement out(2);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      NCPoly h = HP.multiply(la[0], lb[0]);
      if (h.is_zero()) continue;
      NCPoly x = AP.multiply(la[1], lb[1]);
      if (x.is_zero()) continue;
      TensorElement t = tensor(h, x);
      t *= ca * cb;
      out += t;
    }
  return out;
}

TensorElement ComoduleAlgebra::multiply(const TensorElement& a, const TensorElement& b) const {
  const HomBialgebra& H = host_->H();
  TensorElement out(2);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      NCPoly h = H.mu(la[0], lb[0]);
      if (h.is_zero()) continue;
      NCPoly x = algebra_->mu(NCPoly::monomial(la[1]), NCPoly::monomial(lb[1]));
      if (x.is_zero()) continue;
      TensorElement t = tensor(h, x);
      t *= ca * cb;
      out += t;
    }
  return out;
}

TensorElement ComoduleAlgebra::rho_plain(const Monomial& m) const {
  if (m.empty()) return TensorElement::pure({"", "", ""}, 2);
  if (m.size() == 1) return rho_gen_.at(letter(m, 0));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->rho.find(m);
    if (it != cache_->rho.end()) return it->second;
  }
  TensorElement r = multiply_plain(rho_plain(m.substr(0, m.size() - 1)), rho_gen_.at(letter(m, m.size() - 1)));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->rho.emplace(m, r);
  return r;
}

TensorElement ComoduleAlgebra::rho_plain(const NCPoly& p) const {
  TensorElement out(2);
  for (const auto& [m, c] : p.terms()) {
    TensorElement t = rho_plain(m);
    t *= c;
    out += t;
  }
  return out;
}

TensorElement ComoduleAlgebra::coaction(const NCPoly& p) const {
  return rho_plain(algebra_->twisted ? algebra_->alpha(p) : p);
}

Comodule ComoduleAlgebra::piece(int d) const {
  const Presentation& AP = *algebra_->pres;
  std::vector<Monomial> basis;
  for (const auto& m : graded_basis(AP, d))
    if (static_cast<int>(m.size()) == d) basis.push_back(m);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int N = static_cast<int>(basis.size());

  Comodule M;
  M.host = host_;
  for (const auto& m : basis) M.labels.push_back(AP.monomial_text(m));
  M.rho.assign(N, std::vector<NCPoly>(N));
  M.alpha = Mat(N, N);
  for (int i = 0; i < N; ++i) {
    for (const auto& [legs, c] : rho_plain(basis[i]).terms()) {
      auto it = index.find(legs[1]);
      if (it == index.end()) throw Error("config", "coaction does not preserve the degree of " + M.labels[i]);
      M.rho[i][it->second].add_term(legs[0], c);
    }
    for (const auto& [m, c] : algebra_->alpha(NCPoly::monomial(basis[i])).terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw Error("config", "twisting map does not preserve the degree of " + M.labels[i]);
      M.alpha(it->second, i) = c;
    }
  }
  return M;
}

std::string ComoduleAlgebra::render(const TensorElement& t) const {
  if (t.is_zero()) return "0";
  const Presentation& HP = host_->pres();
  const Presentation& AP = *algebra_->pres;
  std::string s;
  for (const auto& [legs, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + HP.monomial_text(legs[0]) + " (x) " + AP.monomial_text(legs[1]);
  }
  return s;
}

json ComoduleAlgebra::to_json() const {
  const Presentation& HP = host_->pres();
  const Presentation& AP = *algebra_->pres;
  json j = json::object();
  json alg = AP.to_json();
  json a = json::object();
  for (const auto& [g, p] : algebra_->alpha_table) a[AP.generators()[g]] = AP.to_json(p);
  alg["alpha"] = a;
  alg["twisted"] = algebra_->twisted;
  j["algebra"] = alg;
  json r = json::object();
  for (const auto& [g, t] : rho_gen_) {
    json terms = json::array();
    for (const auto& [legs, c] : t.terms())
      terms.push_back({{"legs", {HP.monomial_text(legs[0]), AP.monomial_text(legs[1])}}, {"coef", c.str()}});
    r[AP.generators()[g]] = terms;
  }
  j["rho"] = r;
  return j;
}

ComoduleAlgebra twist_comodule_algebra(const ComoduleAlgebra& M, const AlphaTable& host_alpha,
                                       const AlphaTable& algebra_alpha) {
  if (M.host()->H().twisted() || M.algebra().twisted) throw Error("config", "comodule algebra is already twisted");
  const Presentation& HP = M.host()->pres();
  const Presentation& AP = *M.algebra().pres;
  auto H = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(M.host()->H(), host_alpha));

  for (const auto& r : AP.rules()) {
    NCPoly d = apply_endomorphism(AP, algebra_alpha, NCPoly::monomial(r.lhs)) - apply_endomorphism(AP, algebra_alpha, r.rhs);
    if (!AP.normal_form(d).is_zero())
      throw Error("rejected", "algebra twisting map does not preserve the relation " + AP.monomial_text(r.lhs) +
                                  " = " + AP.render(r.rhs));
  }
  for (const auto& [g, t] : M.rho_table()) {
    TensorElement lhs = M.rho_plain(apply_endomorphism(AP, algebra_alpha, NCPoly::monomial(gen_word(g))));
    TensorElement rhs(2);
    for (const auto& [legs, c] : t.terms()) {
      TensorElement x = tensor(apply_endomorphism(HP, host_alpha, NCPoly::monomial(legs[0])),
                               apply_endomorphism(AP, algebra_alpha, NCPoly::monomial(legs[1])));
      x *= c;
      rhs += x;
    }
    if (lhs != rhs)
      throw Error("rejected", "rho o alpha differs from (alpha (x) alpha) o rho on generator '" + AP.generators()[g] +
                                  "': " + M.render(lhs) + " vs " + M.render(rhs));
  }
  auto host = std::make_shared<const CobraidedHomBialgebra>(M.host()->with_hom_bialgebra(H));
  auto alg = std::make_shared<HomAlgebra>(M.algebra());
  alg->alpha_table = algebra_alpha;
  alg->twisted = true;
  return ComoduleAlgebra(host, alg, M.rho_table());
}

Report verify_comodule_hom_algebra(const ComoduleAlgebra& M, int degree) {
  const Presentation& AP = *M.algebra().pres;
  const auto basis = graded_basis(AP, degree);
  std::vector<TensorElement> rho;
  for (const auto& x : basis) rho.push_back(M.coaction(NCPoly::monomial(x)));
  CheckBuilder mult("comodule_algebra/multiplicativity", degree);
  for (std::size_t i = 0; i < basis.size() && !mult.failed(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      mult.count();
      TensorElement lhs = M.coaction(M.algebra().mu(NCPoly::monomial(basis[i]), NCPoly::monomial(basis[j])));
      TensorElement rhs = M.multiply(rho[i], rho[j]);
      if (lhs != rhs) {
        mult.fail({{"x", AP.monomial_text(basis[i])}, {"y", AP.monomial_text(basis[j])}, {"lhs", M.render(lhs)},
                   {"rhs", M.render(rhs)}});
        break;
      }
    }
  Report rep;
  rep.add(mult.finish());
  for (int d = 0; d <= degree; ++d) {
    Comodule piece = M.piece(d);
    if (piece.dim() == 0) continue;
    rep.merge(verify_comodule(piece), "piece_" + std::to_string(d));
  }
  return rep;
}

PlaneKind plane_kind_from_name(const std::string& name) {
  if (name == "standard") return PlaneKind::standard;
  if (name == "fermionic") return PlaneKind::fermionic;
  if (name == "mixed") return PlaneKind::mixed;
  throw Error("config", "unknown plane kind '" + name + "'");
}

std::string plane_kind_name(PlaneKind k) {
  switch (k) {
    case PlaneKind::standard: return "standard";
    case PlaneKind::fermionic: return "fermionic";
    case PlaneKind::mixed: return "mixed";
  }
  return "";
}

TensorElement closed_form_coaction(const ComoduleAlgebra& M, PlaneKind kind, int i, int j, const Scalar& lambda,
                                   const Scalar& xi) {
  const Presentation& HP = M.host()->pres();
  const Presentation& AP = *M.algebra().pres;
  if (i < 0 || j < 0) throw Error("config", "exponents must be nonnegative");
  if (kind == PlaneKind::fermionic && (i > 1 || j > 1))
    throw Error("config", "fermionic plane needs exponents <= 1");
  if (kind == PlaneKind::mixed && j > 1) throw Error("config", "mixed plane needs the y exponent <= 1");

  auto gen = [&](const Presentation& P, const char* name) {
    int g = P.generator_index(name);
    if (g < 0) throw Error("config", std::string("closed forms need a generator '") + name + "'");
    return static_cast<char>(g);
  };
  const char a = gen(HP, "a"), b = gen(HP, "b"), c = gen(HP, "c"), d = gen(HP, "d");
  const char x = gen(AP, "x"), y = gen(AP, "y");
  auto word = [](std::initializer_list<std::pair<char, int>> parts) {
    Monomial m;
    for (const auto& [g, e] : parts) m.append(static_cast<std::size_t>(e), g);
    return m;
  };
  const Scalar q = HP.scalar("q"), q2 = q * q;

  TensorElement out(2);
  auto add = [&](const NCPoly& h, const Monomial& v, const Scalar& coef) {
    if (coef.is_zero()) return;
    TensorElement t = tensor(HP.normal_form(h), AP.normal_form(v));
    t *= coef;
    out += t;
  };
  auto mono = [](const Monomial& m) { return NCPoly::monomial(m); };

  switch (kind) {
    case PlaneKind::standard: {
      const Scalar front = lambda.pow(-j) * xi.pow(i + j);
      for (int r = 0; r <= i; ++r)
        for (int s = 0; s <= j; ++s) {
          Scalar coef = front * q.pow(static_cast<long>(i - r) * s) * q_binomial(i, r, q2) * q_binomial(j, s, q2);
          add(mono(word({{a, r}, {b, i - r}, {c, s}, {d, j - s}})), word({{x, r + s}, {y, i + j - r - s}}), coef);
        }
      break;
    }
    case PlaneKind::fermionic: {
      if (i == 1 && j == 1) {
        NCPoly det = mono(word({{a, 1}, {d, 1}})) - mono(word({{b, 1}, {c, 1}})) * q.inverse();
        add(det, word({{x, 1}, {y, 1}}), lambda.inverse() * xi * xi);
      } else if (i == 1) {
        add(mono(word({{a, 1}})), word({{x, 1}}), xi);
        add(mono(word({{b, 1}})), word({{y, 1}}), xi);
      } else if (j == 1) {
        add(mono(word({{c, 1}})), word({{x, 1}}), lambda.inverse() * xi);
        add(mono(word({{d, 1}})), word({{y, 1}}), lambda.inverse() * xi);
      } else {
        add(NCPoly::constant(Scalar(1)), Monomial(), Scalar(1));
      }
      break;
    }
    case PlaneKind::mixed: {
      const Scalar qi = q_number(i, q2);
      if (j == 0) {
        const Scalar front = xi.pow(i);
        add(mono(word({{a, i}})), word({{x, i}}), front);
        if (i > 0) add(mono(word({{a, i - 1}, {b, 1}})), word({{x, i - 1}, {y, 1}}), front * qi);
      } else {
        const Scalar front = lambda.inverse() * xi.pow(i + 1);
        add(mono(word({{a, i}, {c, 1}})), word({{x, i + 1}}), front);
        NCPoly h = mono(word({{a, i}, {d, 1}}));
        if (i > 0) h += mono(word({{a, i - 1}, {b, 1}, {c, 1}})) * (q * qi);
        add(h, word({{x, i}, {y, 1}}), front);
      }
      break;
    }
  }
  return out;
}

}  // namespace homq
