#include <random>

#include "doctest.h"
#include "homq/catalog.hpp"
#include "homq/io.hpp"

using namespace homq;

namespace {

TensorElement legs(const Presentation& P, const std::vector<std::array<std::string, 3>>& terms) {
  TensorElement t(2);
  for (const auto& [l, r, c] : terms) t.add_term({P.parse_monomial(l), P.parse_monomial(r), ""}, P.scalar(c));
  return t;
}

// product in A (x) A, legwise, of two normal-form tensors
TensorElement square(const Presentation& P, const TensorElement& x) { return P.multiply(x, x); }

}  // namespace

TEST_CASE("quantum matrix coproduct and determinant") {
  Instance mq = build_instance("mq2");
  const HomBialgebra& B = *mq.base;
  const Presentation& P = B.pres();
  CHECK(B.delta(P.gen("a")) == legs(P, {{"a", "a", "1"}, {"b", "c", "1"}}));

  NCPoly det = quantum_determinant(mq);
  CHECK(det == P.poly({{"ad", "1"}, {"bc", "-q^-1"}}));
  CHECK(P.normal_form(B.delta(det)) == P.normal_form(tensor(det, det)));
  for (const char* g : {"a", "b", "c", "d"}) CHECK(P.multiply(det, P.gen(g)) == P.multiply(P.gen(g), det));
}

TEST_CASE("twisted coproduct is the matrix formula") {
  Instance mq = build_instance("mq2", {{"lambda", "3"}});
  const HomBialgebra& H = *mq.presented;
  const Presentation& P = H.pres();
  const char* T[2][2] = {{"a", "b"}, {"c", "d"}};
  // alpha(T_i^j) = s_i s_j^{-1} T_i^j with s = (lambda, 1)
  const Scalar s[2] = {Scalar(3), Scalar(1)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TensorElement want(2);
      for (int k = 0; k < 2; ++k)
        want.add_term({P.parse_monomial(T[i][k]), P.parse_monomial(T[k][j]), ""},
                      s[i] / s[k] * (s[k] / s[j]));
      CHECK(H.delta(P.gen(T[i][j])) == want);
    }
  CHECK(H.alpha(P.gen("b")) == P.gen("b") * Scalar(3));
  CHECK(H.delta(P.gen("b")) == legs(P, {{"a", "b", "3"}, {"b", "d", "3"}}));
}

TEST_CASE("determinant in SL and GL") {
  Instance sl = build_instance("slq2");
  CHECK(quantum_determinant(sl) == NCPoly::constant(Scalar(1)));

  Instance gl = build_instance("glq2");
  const Presentation& P = gl.base->pres();
  NCPoly det = quantum_determinant(gl);
  CHECK(gl.presented->alpha(det) == det);
  CHECK(gl.presented->alpha(P.gen("t")) == P.gen("t"));
  CHECK(P.multiply(P.gen("t"), det) == NCPoly::constant(Scalar(1)));
  CHECK(P.multiply(det, P.gen("t")) == NCPoly::constant(Scalar(1)));
}

TEST_CASE("twisting needs a bialgebra morphism") {
  Instance mq = build_instance("mq2");
  const Presentation& P = mq.base->pres();
  AlphaTable bad = mq.alpha;
  bad[P.generator_index("c")] = P.gen("c");
  CHECK_FALSE(verify_morphism(bad, *mq.base, 2).passed());
  try {
    twist_hom_bialgebra(*mq.base, bad);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == "rejected");
  }
  CHECK(verify_morphism(mq.alpha, *mq.base, 3).passed());

  Instance g = build_instance("group_bialgebra", {{"k", "2"}});
  CHECK(verify_morphism(g.alpha, *g.base, 4).passed());
}

TEST_CASE("Hom-bialgebra axioms") {
  CHECK(verify_hom_bialgebra(*build_instance("mq2", {{"lambda", "2"}}).presented, 3).passed());
  CHECK(verify_hom_bialgebra(*build_instance("slq2").presented, 3).passed());

  Instance mq = build_instance("mq2");
  HomBialgebra broken = mq.presented->with_untwisted_coproduct();
  Report r = verify_hom_bialgebra(broken, 2);
  CHECK(r.status("hom_bialgebra/hom_coassociativity") == Status::fail);
  CHECK(r.find("hom_bialgebra/hom_coassociativity")->witness.has_value());
}

TEST_CASE("twisted product is alpha after the plain product") {
  std::mt19937 rng(5);
  for (const char* name : {"mq2", "mq11", "uq_small"}) {
    CAPTURE(name);
    Instance inst = build_instance(name);
    const HomBialgebra& H = *inst.presented;
    const Presentation& P = H.pres();
    auto basis = graded_basis(P, 2);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const Monomial& x = basis[pick(rng)];
      const Monomial& y = basis[pick(rng)];
      CHECK(H.mu(x, y) == apply_endomorphism(P, inst.alpha, P.multiply(x, y)));
      CHECK(H.delta(x) == P.normal_form(inst.base->delta(apply_endomorphism(P, inst.alpha, NCPoly::monomial(x)))));
    }
  }
}

TEST_CASE("twisting by the identity changes nothing") {
  Instance mq = build_instance("mq2");
  const Presentation& P = mq.base->pres();
  AlphaTable id;
  for (int g = 0; g < P.ngens(); ++g) id[g] = NCPoly::monomial(gen_word(g));
  HomBialgebra same = twist_hom_bialgebra(*mq.base, id);
  for (const auto& x : graded_basis(P, 2)) {
    CHECK(same.delta(x) == mq.base->delta(x));
    for (const auto& y : graded_basis(P, 1)) CHECK(same.mu(x, y) == mq.base->mu(x, y));
  }
  Report a = verify_hom_bialgebra(same, 2), b = verify_hom_bialgebra(*mq.base, 2);
  CHECK(a.passed());
  CHECK(b.passed());
}

TEST_CASE("group-likes stay group-like") {
  struct Case {
    const char* instance;
    const char* gen;
  };
  for (auto [name, g] : {Case{"anyon", "g"}, Case{"glq2", "t"}, Case{"uq_small", "g"}, Case{"uq_reduced", "K"}}) {
    CAPTURE(name);
    Instance inst = build_instance(name);
    const HomBialgebra& H = *inst.presented;
    const Presentation& P = H.pres();
    NCPoly x = P.gen(g);
    NCPoly ax = H.alpha(x);
    CHECK(H.delta(x) == P.normal_form(tensor(ax, ax)));
  }
}

TEST_CASE("coproduct is multiplicative") {
  Instance mq = build_instance("mq11");
  const HomBialgebra& B = *mq.base;
  const Presentation& P = B.pres();
  for (const auto& x : graded_basis(P, 2))
    for (const auto& y : graded_basis(P, 1)) {
      TensorElement lhs = B.delta(P.multiply(x, y));
      TensorElement rhs = P.normal_form(P.multiply(B.delta(x), B.delta(y)));
      CHECK(P.normal_form(lhs) == rhs);
    }
  // b^2 = 0 forces Delta(b)^2 = 0
  CHECK(square(P, B.delta(P.gen("b"))).is_zero());
}

TEST_CASE("instance json round trip") {
  Instance gl = build_instance("glq2");
  json j = hom_bialgebra_to_json(*gl.presented);
  HomBialgebraPtr back = hom_bialgebra_from_instance_json(j);
  CHECK(hom_bialgebra_to_json(*back) == j);
  const Presentation& P = back->pres();
  for (const auto& x : graded_basis(P, 2)) CHECK(back->delta(x) == gl.presented->delta(x));
}
