#include <cstdlib>

#include "doctest.h"
#include "homq/catalog.hpp"

using namespace homq;

namespace {

Monomial group_word(int m) { return Monomial(static_cast<std::size_t>(std::abs(m)), m >= 0 ? '\0' : '\1'); }

void expect_parameter_error(const std::string& name, const Params& params, const std::string& hypothesis) {
  CAPTURE(name);
  try {
    build_instance(name, params);
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.kind() == "parameter");
    CHECK(std::string(e.what()).find(hypothesis) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("M_q(2) with lambda = 3") {
  Instance mq = build_instance("mq2", {{"lambda", "3"}});
  CHECK(mq.lambda == Scalar(3));
  CHECK(mq.params["lambda"] == "3");
  CHECK(verify_cobraided(*mq.cobraided, 3).passed());
  const Presentation& P = mq.cobraided->pres();
  const Scalar t = parse_scalar("t", mq.field);
  CHECK(mq.cobraided->eval(P.parse_monomial("a"), P.parse_monomial("a")) == t);
  CHECK(mq.cobraided->eval(P.parse_monomial("b"), P.parse_monomial("c")) == t - t.pow(-3));
}

TEST_CASE("cyclic anyon values") {
  Instance a = build_instance("anyon", {{"n", "5"}, {"k", "2"}, {"t", "1"}});
  const CobraidedHomBialgebra& C = *a.cobraided;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(C.eval(group_word(x), group_word(y)) == Scalar::zeta(a.field, (4 * x * y) % 5));

  Instance g = build_instance("group_bialgebra", {{"n", "5"}});
  CHECK(g.natural_degree == 4);
  CHECK(g.alpha.at(0) == NCPoly::monomial(group_word(1)));
}

TEST_CASE("integral anyon values") {
  for (int t : {1, 2}) {
    CAPTURE(t);
    Instance z = build_instance("integral_anyon", {{"k", "3"}, {"t", std::to_string(t)}});
    const CobraidedHomBialgebra& C = *z.cobraided;
    const CobraidedHomBialgebra plain = C.with_r_power(0);
    const Presentation& P = C.pres();
    const Scalar q = parse_scalar("q", z.field);
    const int kt = t == 1 ? 3 : 9;
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(C.eval(group_word(m), group_word(n)) == q.pow(kt * kt * m * n));
        // t-fold composition of the k-power map, then the untwisted form
        NCPoly u = NCPoly::monomial(group_word(m)), v = NCPoly::monomial(group_word(n));
        for (int i = 0; i < t; ++i) {
          u = apply_endomorphism(P, z.alpha, u);
          v = apply_endomorphism(P, z.alpha, v);
        }
        CHECK(C.eval(group_word(m), group_word(n)) == plain.eval(u, v));
      }
  }
}

TEST_CASE("small quantum group") {
  Instance u = build_instance("uq_small");
  REQUIRE(u.braided);
  CHECK(u.braided->dim() == 27);
  CHECK(u.braided->r_kind == RKind::element);
  CHECK(u.cobraided == nullptr);
  CHECK(u.params["l"] == 3);
}

TEST_CASE("determinant and GL invariants") {
  Instance mq = build_instance("mq2");
  const Presentation& P = mq.base->pres();
  CHECK(quantum_determinant(mq) == P.poly({{"ad", "1"}, {"bc", "-q^-1"}}));
  CHECK(quantum_determinant(build_instance("slq2")) == NCPoly::constant(Scalar(1)));

  Instance gl = build_instance("glq2");
  const Presentation& G = gl.base->pres();
  NCPoly det = quantum_determinant(gl);
  CHECK(gl.presented->alpha(det) == det);
  CHECK(gl.presented->alpha(G.gen("t")) == G.gen("t"));
  CHECK(G.multiply(G.gen("t"), det) == NCPoly::constant(Scalar(1)));
  CHECK_THROWS_AS(quantum_determinant(build_instance("mq11")), Error);
}

TEST_CASE("parameter hypotheses") {
  expect_parameter_error("mq2", {{"lambda", "0"}}, "lambda is invertible");
  expect_parameter_error("mpq2", {{"p", "0"}}, "p is invertible");
  expect_parameter_error("plane_standard", {{"lambda", "0"}}, "lambda is invertible");
  expect_parameter_error("uq_small", {{"l", "4"}}, "l odd");
  expect_parameter_error("uq_small", {{"l", "1"}}, "l odd");
  expect_parameter_error("uq_reduced", {{"r", "1"}}, "r > 1");
  expect_parameter_error("anyon", {{"n", "6"}, {"k", "2"}, {"t", "1"}}, "gcd(k, n) = 1");
  expect_parameter_error("anyon", {{"n", "5"}, {"k", "5"}}, "1 <= k <= n - 1");
  expect_parameter_error("integral_anyon", {{"k", "0"}}, "k != 0");
  expect_parameter_error("group_bialgebra", {{"n", "0"}}, "n >= 1");
  expect_parameter_error("mq2", {{"n", "3"}}, "takes no parameter");
  expect_parameter_error("anyon", {{"k", "two"}}, "must be an integer");
  try {
    build_instance("sl3");
    FAIL("expected unknown instance");
  } catch (const Error& e) {
    CHECK(e.kind() == "unknown_instance");
  }
}

TEST_CASE("default degrees") {
  unsetenv("HOMQ_DEFAULT_DEGREE");
  CHECK(default_degrees().degree == 3);
  CHECK(default_degrees().oqhybe == 2);
  setenv("HOMQ_DEFAULT_DEGREE", "1", 1);
  CHECK(default_degrees().degree == 1);
  CHECK(default_degrees().oqhybe == 1);
  setenv("HOMQ_DEFAULT_DEGREE", "5", 1);
  CHECK(default_degrees().degree == 5);
  CHECK(default_degrees().oqhybe == 2);
  setenv("HOMQ_DEFAULT_DEGREE", "x", 1);
  CHECK_THROWS_AS(default_degrees(), Error);
  unsetenv("HOMQ_DEFAULT_DEGREE");
}

TEST_CASE("instance output is deterministic") {
  for (const char* name : {"mq2", "glq2", "plane_mixed", "anyon", "uq_small"}) {
    CAPTURE(name);
    CHECK(instance_to_json(build_instance(name)).dump() == instance_to_json(build_instance(name)).dump());
  }
}

TEST_CASE("every instance passes its suite") {
  unsetenv("HOMQ_DEFAULT_DEGREE");
  const SuiteDegrees deg = default_degrees();
  for (const auto& name : instance_names()) {
    CAPTURE(name);
    Report r = verify_instance(build_instance(name), deg);
    CHECK(r.passed());
    CHECK(r.checks.size() > 3);
  }
}
