#include "doctest.h"
#include "homq/catalog.hpp"
#include "homq/comodule.hpp"
#include "homq/frt.hpp"

using namespace homq;

namespace {

RMatrixSpec diagonal_spec(const FieldPtr& f, bool flip) {
  RMatrixSpec s;
  s.dim = 2;
  s.field = f;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.c[{i, j, flip ? j : i, flip ? i : j}] = Scalar(1);
  return s;
}

std::vector<Monomial> all_words(int ngens, int maxlen) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<Monomial> next;
    for (const auto& w : layer)
      for (int g = 0; g < ngens; ++g) next.push_back(w + static_cast<char>(g));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// same normal form of every word up to maxlen, matching generators by name
void same_algebra(const Presentation& A, const Presentation& B, int maxlen) {
  REQUIRE(A.generators() == B.generators());
  for (const auto& w : all_words(A.ngens(), maxlen)) {
    CAPTURE(A.monomial_text(w));
    CHECK(A.to_json(A.normal_form(w)) == B.to_json(B.normal_form(w)));
  }
}

}  // namespace

TEST_CASE("YBE") {
  auto f = ScalarField::make({"t"});
  CHECK(verify_ybe(catalog_rmatrix("sl2", f)).passed());
  CHECK(verify_ybe(catalog_rmatrix("mq11", f)).passed());
  CHECK(verify_ybe(catalog_rmatrix("mpq", ScalarField::make({"t", "p"}))).passed());
  CHECK(verify_ybe(diagonal_spec(f, false)).passed());
  CHECK(verify_ybe(diagonal_spec(f, true)).passed());

  RMatrixSpec bad = catalog_rmatrix("sl2", f);
  bad.c[{0, 1, 0, 1}] = Scalar(1);
  Report r = verify_ybe(bad);
  REQUIRE(r.status("ybe/braid_relation") == Status::fail);
  CHECK(r.find("ybe/braid_relation")->witness.has_value());

  RMatrixSpec singular = catalog_rmatrix("sl2", f);
  singular.c.erase({0, 0, 0, 0});
  CHECK(verify_ybe(singular).status("ybe/invertible") == Status::fail);
}

TEST_CASE("FRT on the sl2 constants is M_q(2)") {
  auto f = ScalarField::make({"t"});
  FrtAlgebra A = frt_construct(catalog_rmatrix("sl2", f));
  CHECK(A.relations_retained == 6);
  CHECK(A.certificates.passed());
  Instance mq = build_instance("mq2");
  Presentation ours = presentation_from_json(mq.base->pres().to_json(), f);
  same_algebra(A.cobraided->pres(), ours, 4);
}

TEST_CASE("FRT on the other catalog R-matrices") {
  auto f = ScalarField::make({"t"});
  FrtAlgebra S = frt_construct(catalog_rmatrix("mq11", f));
  CHECK(S.certificates.passed());
  const Presentation& P = S.cobraided->pres();
  CHECK(P.multiply(P.gen("b"), P.gen("b")).is_zero());
  CHECK(P.multiply(P.gen("c"), P.gen("c")).is_zero());
  same_algebra(P, presentation_from_json(build_instance("mq11").base->pres().to_json(), f), 3);

  auto fp = ScalarField::make({"t", "p"});
  FrtAlgebra M = frt_construct(catalog_rmatrix("mpq", fp));
  CHECK(M.relations_retained == 6);
  Instance mpq = build_instance("mpq2");
  same_algebra(M.cobraided->pres(), presentation_from_json(mpq.base->pres().to_json(), mpq.field), 3);
}

TEST_CASE("FRT on the trivial solutions") {
  auto f = ScalarField::make({"t"});
  // gamma = flip: T_i^k T_j^l = T_j^l T_i^k
  FrtAlgebra flip = frt_construct(diagonal_spec(f, true));
  const Presentation& P = flip.cobraided->pres();
  CHECK(flip.relations_retained == 6);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      NCPoly x = NCPoly::monomial(gen_word(g)), y = NCPoly::monomial(gen_word(h));
      CHECK(P.multiply(x, y) == P.multiply(y, x));
    }
  // gamma = identity: the relations are empty
  FrtAlgebra id = frt_construct(diagonal_spec(f, false));
  CHECK(id.relations_retained == 0);
  CHECK(id.cobraided->pres().rules().empty());
}

TEST_CASE("scaling endomorphisms") {
  auto f = ScalarField::make({"t", "lambda", "mu"});
  const Scalar lambda = parse_scalar("lambda", f), mu = parse_scalar("mu", f);
  FrtAlgebra A = frt_construct(catalog_rmatrix("sl2", f));
  const Presentation& P = A.cobraided->pres();

  AlphaTable a = frt_lambda_endomorphism(A, {lambda, Scalar(1)});
  CHECK(a.at(P.generator_index("a")) == P.gen("a"));
  CHECK(a.at(P.generator_index("b")) == P.gen("b") * lambda);
  CHECK(a.at(P.generator_index("c")) == P.gen("c") * lambda.inverse());
  CHECK(a.at(P.generator_index("d")) == P.gen("d"));

  AlphaTable id = frt_lambda_endomorphism(A, {Scalar(1), Scalar(1)});
  for (const auto& [g, img] : id) CHECK(img == NCPoly::monomial(gen_word(g)));

  AlphaTable gen = frt_lambda_endomorphism(A, {lambda, mu});
  CHECK(gen.at(P.generator_index("b")) == P.gen("b") * (lambda / mu));
  CHECK(gen.at(P.generator_index("c")) == P.gen("c") * (mu / lambda));

  // c_{11}^{22} != 0 needs lambda_1^2 = lambda_2^2
  RMatrixSpec odd = catalog_rmatrix("sl2", f);
  odd.c[{0, 0, 1, 1}] = Scalar(1);
  FrtAlgebra B = frt_construct(odd);
  try {
    frt_lambda_endomorphism(B, {lambda, Scalar(1)});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == "rejected");
  }
}

TEST_CASE("twisted FRT is the catalog instance") {
  Instance mq = build_instance("mq2");
  FrtAlgebra A = frt_twist(catalog_rmatrix("sl2", mq.field), {mq.lambda, Scalar(1)});
  CHECK(A.certificates.passed());
  const CobraidedHomBialgebra& C = *A.cobraided;
  const CobraidedHomBialgebra& D = *mq.cobraided;
  auto basis = graded_basis(C.pres(), 2);
  for (const auto& x : basis) {
    CHECK(C.H().delta(x) == D.H().delta(x));
    CHECK(C.H().alpha(x) == D.H().alpha(x));
    for (const auto& y : basis) {
      CHECK(C.H().mu(x, y) == D.H().mu(x, y));
      CHECK(C.eval(x, y) == D.eval(x, y));
    }
  }

  Instance mpq = build_instance("mpq2");
  FrtAlgebra M = frt_twist(catalog_rmatrix("mpq", mpq.field), {mpq.lambda, Scalar(1)});
  for (const auto& x : graded_basis(M.cobraided->pres(), 2)) {
    CHECK(M.cobraided->H().delta(x) == mpq.presented->delta(x));
    CHECK(M.cobraided->H().alpha(x) == mpq.presented->alpha(x));
  }

  FrtAlgebra plain = frt_twist(catalog_rmatrix("sl2", mq.field), {Scalar(1), Scalar(1)});
  CHECK(plain.cobraided->H().alpha_is_identity());
}

TEST_CASE("the standard comodule recovers gamma") {
  auto f = ScalarField::make({"t", "lambda"});
  for (const char* name : {"sl2", "mq11"}) {
    CAPTURE(name);
    RMatrixSpec spec = catalog_rmatrix(name, f);
    FrtAlgebra A = frt_construct(spec);
    Comodule V = frt_comodule(A);
    const Presentation& P = A.cobraided->pres();
    CHECK(V.rho[0][0] == P.gen("a"));
    CHECK(V.rho[0][1] == P.gen("b"));
    CHECK(V.rho[1][0] == P.gen("c"));
    CHECK(V.rho[1][1] == P.gen("d"));
    CHECK(bvw_operator(V, V) == spec.gamma());
    CHECK(verify_comodule(V).passed());
  }

  RMatrixSpec spec = catalog_rmatrix("sl2", f);
  const Scalar lambda = parse_scalar("lambda", f);
  FrtAlgebra T = frt_twist(spec, {lambda, Scalar(1)});
  Comodule V = frt_comodule(T);
  CHECK(V.alpha(0, 0) == lambda);
  CHECK(V.alpha(1, 1) == Scalar(1));
  CHECK(verify_comodule(V).passed());
  Mat a2 = kron(V.alpha, V.alpha);
  CHECK(a2 * spec.gamma() == spec.gamma() * a2);
}

TEST_CASE("R-matrix json round trip") {
  RMatrixSpec s = catalog_rmatrix("mpq", ScalarField::make({"t", "p"}));
  RMatrixSpec back = rmatrix_from_json(s.to_json());
  CHECK(back.to_json() == s.to_json());
  CHECK(back.gamma() == s.gamma());
  json broken = s.to_json();
  broken["entries"][0]["i"] = 3;
  CHECK_THROWS_AS(rmatrix_from_json(broken), Error);
}
