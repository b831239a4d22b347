#include "homq/catalog.hpp"

#include <cstdlib>
#include <numeric>
#include <set>

#include "homq/io.hpp"
#include "homq/qnumbers.hpp"

namespace homq {

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;

struct ParamReader {
  const std::string& instance;
  const Params& given;
  std::set<std::string> used;

  bool has(const std::string& k) const { return given.count(k) > 0; }

  int integer(const std::string& k, int fallback) {
    used.insert(k);
    auto it = given.find(k);
    if (it == given.end()) return fallback;
    try {
      std::size_t pos = 0;
      int v = std::stoi(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error("parameter", instance + ": parameter " + k + " must be an integer, got '" + it->second + "'");
    }
  }

  // value of a scalar parameter, or the formal variable of the same name
  Scalar scalar(const std::string& k, const FieldPtr& field) {
    used.insert(k);
    auto it = given.find(k);
    try {
      return parse_scalar(it == given.end() ? k : it->second, field);
    } catch (const Error& e) {
      throw Error("parameter", instance + ": parameter " + k + ": " + e.what());
    }
  }

  void finish() const {
    for (const auto& [k, v] : given)
      if (!used.count(k)) throw Error("parameter", instance + " takes no parameter '" + k + "'");
  }
};

[[noreturn]] void reject(const std::string& instance, const std::string& hypothesis) {
  throw Error("parameter", instance + ": hypothesis violated: " + hypothesis);
}

std::vector<std::string> formal(const ParamReader& pr, std::vector<std::string> base,
                                const std::vector<std::string>& scalars) {
  for (const auto& s : scalars)
    if (!pr.has(s)) base.push_back(s);
  return base;
}

Rule rule(const Presentation& names, const std::string& lhs, const Terms& rhs) {
  return Rule{names.parse_monomial(lhs), names.poly(rhs)};
}

TensorElement delta_terms(const Presentation& P, const std::vector<std::array<std::string, 3>>& terms) {
  TensorElement t(2);
  for (const auto& [l, r, c] : terms) t.add_term({P.parse_monomial(l), P.parse_monomial(r), ""}, P.scalar(c));
  return t;
}

std::string pow_word(const std::string& g, int e) {
  if (e == 0) return "1";
  return e == 1 ? g : g + "^" + std::to_string(e);
}

// ---------------------------------------------------------------- quantum matrices

enum class QMKind { mq2, slq2, glq2, mpq2, mq11 };

constexpr int kGlDRun = 16;

PresentationPtr quantum_matrix_presentation(QMKind kind, const FieldPtr& field) {
  // SL and GL order b < c < a < d so that the determinant rewrites stay finite
  const bool det = kind == QMKind::slq2 || kind == QMKind::glq2;
  std::vector<std::string> gens = det ? std::vector<std::string>{"b", "c", "a", "d"}
                                      : std::vector<std::string>{"a", "b", "c", "d"};
  std::vector<int> weights;
  if (det) {
    weights = {1, 1, 2, 2};
    if (kind == QMKind::glq2) {
      gens.push_back("t");
      weights.push_back(1);
    }
  }
  Presentation names(field, gens, {}, 4, weights);
  std::vector<Rule> rules;
  switch (kind) {
    case QMKind::mpq2:
      rules = {rule(names, "ba", {{"ab", "q"}}),
               rule(names, "db", {{"bd", "p"}}),
               rule(names, "ca", {{"ac", "p"}}),
               rule(names, "dc", {{"cd", "q"}}),
               rule(names, "cb", {{"bc", "p/q"}}),
               rule(names, "da", {{"ad", "1"}, {"bc", "-(q^-1 - p)"}})};
      break;
    case QMKind::mq11:
      rules = {rule(names, "ba", {{"ab", "q"}}),
               rule(names, "db", {{"bd", "-q^-1"}}),
               rule(names, "ca", {{"ac", "q"}}),
               rule(names, "dc", {{"cd", "-q^-1"}}),
               rule(names, "bb", {}),
               rule(names, "cc", {}),
               rule(names, "cb", {{"bc", "1"}}),
               rule(names, "da", {{"ad", "1"}, {"bc", "-(q^-1 - q)"}})};
      break;
    case QMKind::mq2:
      rules = {rule(names, "ba", {{"ab", "q"}}),
               rule(names, "db", {{"bd", "q"}}),
               rule(names, "ca", {{"ac", "q"}}),
               rule(names, "dc", {{"cd", "q"}}),
               rule(names, "cb", {{"bc", "1"}}),
               rule(names, "da", {{"ad", "1"}, {"bc", "-(q^-1 - q)"}})};
      break;
    case QMKind::slq2:
    case QMKind::glq2:
      rules = {rule(names, "ab", {{"ba", "q^-1"}}),
               rule(names, "db", {{"bd", "q"}}),
               rule(names, "ac", {{"ca", "q^-1"}}),
               rule(names, "dc", {{"cd", "q"}}),
               rule(names, "cb", {{"bc", "1"}})};
      if (kind == QMKind::slq2) {
        rules.push_back(rule(names, "ad", {{"1", "1"}, {"bc", "q^-1"}}));
        rules.push_back(rule(names, "da", {{"1", "1"}, {"bc", "q"}}));
      } else {
        rules.push_back(rule(names, "da", {{"ad", "1"}, {"bc", "-(q^-1 - q)"}}));
        for (const char* g : {"a", "b", "c", "d"})
          rules.push_back(rule(names, std::string("t") + g, {{std::string(g) + "t", "1"}}));
        // a d^l t = (ad t) d^{l-1}: one rule per run length up to kGlDRun
        for (int l = 1; l <= kGlDRun; ++l) {
          const std::string run = pow_word("d", l - 1) == "1" ? "" : pow_word("d", l - 1);
          rules.push_back(rule(names, "a" + pow_word("d", l) + "t",
                               {{run.empty() ? "1" : run, "1"}, {"bc" + run + "t", "q^-1"}}));
        }
      }
      break;
  }
  return std::make_shared<const Presentation>(field, gens, std::move(rules), 4, weights);
}

DeltaTable quantum_matrix_delta(const Presentation& P) {
  DeltaTable d;
  d[P.generator_index("a")] = delta_terms(P, {{"a", "a", "1"}, {"b", "c", "1"}});
  d[P.generator_index("b")] = delta_terms(P, {{"a", "b", "1"}, {"b", "d", "1"}});
  d[P.generator_index("c")] = delta_terms(P, {{"c", "a", "1"}, {"d", "c", "1"}});
  d[P.generator_index("d")] = delta_terms(P, {{"c", "b", "1"}, {"d", "d", "1"}});
  int t = P.generator_index("t");
  if (t >= 0) d[t] = delta_terms(P, {{"t", "t", "1"}});
  return d;
}

AlphaTable quantum_matrix_alpha(const Presentation& P, const Scalar& lambda) {
  AlphaTable a;
  a[P.generator_index("a")] = P.gen("a");
  a[P.generator_index("b")] = P.gen("b") * lambda;
  a[P.generator_index("c")] = P.gen("c") * lambda.inverse();
  a[P.generator_index("d")] = P.gen("d");
  int t = P.generator_index("t");
  if (t >= 0) a[t] = P.gen("t");
  return a;
}

QMKind qm_kind(const std::string& name) {
  if (name == "mq2") return QMKind::mq2;
  if (name == "slq2") return QMKind::slq2;
  if (name == "glq2") return QMKind::glq2;
  if (name == "mpq2") return QMKind::mpq2;
  return QMKind::mq11;
}

void build_quantum_matrices(Instance& inst, QMKind kind, ParamReader& pr) {
  std::vector<std::string> scalars{"lambda"};
  if (kind == QMKind::mpq2) scalars.insert(scalars.begin(), "p");
  inst.field = ScalarField::make(formal(pr, {"t"}, scalars));
  inst.lambda = pr.scalar("lambda", inst.field);
  if (inst.lambda.is_zero()) reject(inst.name, "lambda is invertible");
  inst.params["lambda"] = inst.lambda.str();
  if (kind == QMKind::mpq2) {
    Scalar p = pr.scalar("p", inst.field);
    if (p.is_zero()) reject(inst.name, "p is invertible");
    inst.params["p"] = p.str();
  }
  if (kind == QMKind::mq11) {
    Scalar q = parse_scalar("q", inst.field);
    if ((q * q + Scalar(1)).is_zero()) reject(inst.name, "q^2 != -1");
  }

  auto pres = quantum_matrix_presentation(kind, inst.field);
  inst.base = std::make_shared<const HomBialgebra>(pres, quantum_matrix_delta(*pres), AlphaTable{}, false);
  inst.alpha = quantum_matrix_alpha(*pres, inst.lambda);
  inst.presented = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(*inst.base, inst.alpha));

  const std::string spec = kind == QMKind::mpq2 ? "mpq" : kind == QMKind::mq11 ? "mq11" : "sl2";
  inst.rmatrix = catalog_rmatrix(spec, inst.field);
  std::vector<int> gen;
  for (const char* g : {"a", "b", "c", "d"}) gen.push_back(pres->generator_index(g));
  std::vector<bool> mask;
  if (kind == QMKind::glq2) mask = {true, true, true, true, false};
  inst.cobraided = std::make_shared<const CobraidedHomBialgebra>(
      inst.presented, frt_cobraiding_form(*inst.rmatrix, gen), 0, mask);
}

// ---------------------------------------------------------------- planes

void build_plane(Instance& inst, PlaneKind kind, ParamReader& pr) {
  inst.field = ScalarField::make(formal(pr, {"t"}, {"lambda", "xi"}));
  inst.lambda = pr.scalar("lambda", inst.field);
  inst.xi = pr.scalar("xi", inst.field);
  if (inst.lambda.is_zero()) reject(inst.name, "lambda is invertible");
  inst.params["lambda"] = inst.lambda.str();
  inst.params["xi"] = inst.xi.str();

  const QMKind host_kind = kind == PlaneKind::mixed ? QMKind::mq11 : QMKind::mq2;
  auto hpres = quantum_matrix_presentation(host_kind, inst.field);
  inst.base = std::make_shared<const HomBialgebra>(hpres, quantum_matrix_delta(*hpres), AlphaTable{}, false);
  inst.alpha = quantum_matrix_alpha(*hpres, inst.lambda);
  inst.rmatrix = catalog_rmatrix(kind == PlaneKind::mixed ? "mq11" : "sl2", inst.field);
  auto untwisted_host =
      std::make_shared<const CobraidedHomBialgebra>(inst.base, frt_cobraiding_form(*inst.rmatrix, {0, 1, 2, 3}));

  Presentation names(inst.field, {"x", "y"}, {}, 4);
  std::vector<Rule> rules;
  switch (kind) {
    case PlaneKind::standard: rules = {rule(names, "yx", {{"xy", "q"}})}; break;
    case PlaneKind::fermionic:
      rules = {rule(names, "xx", {}), rule(names, "yy", {}), rule(names, "yx", {{"xy", "-q^-1"}})};
      break;
    case PlaneKind::mixed: rules = {rule(names, "yy", {}), rule(names, "yx", {{"xy", "q"}})}; break;
  }
  auto ppres = std::make_shared<const Presentation>(inst.field, std::vector<std::string>{"x", "y"}, std::move(rules), 4);
  auto alg = std::make_shared<HomAlgebra>();
  alg->pres = ppres;

  std::map<int, TensorElement> rho;
  auto coaction_terms = [&](const std::vector<std::pair<std::string, std::string>>& terms) {
    TensorElement t(2);
    for (const auto& [h, v] : terms) t.add_term({hpres->parse_monomial(h), ppres->parse_monomial(v), ""}, Scalar(1));
    return t;
  };
  rho[0] = coaction_terms({{"a", "x"}, {"b", "y"}});
  rho[1] = coaction_terms({{"c", "x"}, {"d", "y"}});
  ComoduleAlgebra untwisted(untwisted_host, alg, rho);

  AlphaTable plane_alpha;
  plane_alpha[0] = ppres->gen("x") * inst.xi;
  plane_alpha[1] = ppres->gen("y") * (inst.lambda.inverse() * inst.xi);
  inst.plane = twist_comodule_algebra(untwisted, inst.alpha, plane_alpha);
  inst.plane_kind = kind;
  inst.cobraided = inst.plane->host();
  inst.presented = inst.cobraided->H_ptr();
}

// ---------------------------------------------------------------- group bialgebras

void build_cyclic(Instance& inst, int n, int s, int k, int t) {
  if (n < 1) reject(inst.name, "n >= 1");
  if (t < 0) reject(inst.name, "t >= 0");
  inst.field = ScalarField::make({}, n);
  inst.params["n"] = n;
  inst.params["s"] = s;
  inst.params["k"] = k;
  inst.params["t"] = t;
  const int maxdeg = std::max(4, n - 1);
  Presentation names(inst.field, {"g"}, {}, maxdeg);
  auto pres = std::make_shared<const Presentation>(inst.field, std::vector<std::string>{"g"},
                                                   std::vector<Rule>{rule(names, pow_word("g", n), {{"1", "1"}})}, maxdeg);
  DeltaTable d;
  d[0] = delta_terms(*pres, {{"g", "g", "1"}});
  inst.base = std::make_shared<const HomBialgebra>(pres, d, AlphaTable{}, false);
  int kk = ((k % n) + n) % n;
  inst.alpha[0] = pres->normal_form(NCPoly::monomial(Monomial(static_cast<std::size_t>(kk), '\0')));
  inst.presented = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(*inst.base, inst.alpha));
  CobraidingForm R;
  R.gen_table[{0, 0}] = Scalar::zeta(inst.field, ((s % n) + n) % n);
  R.unit_left[0] = Scalar(1);
  R.unit_right[0] = Scalar(1);
  auto C = std::make_shared<const CobraidedHomBialgebra>(inst.presented, R);
  if (t > 0) {
    try {
      C = std::make_shared<const CobraidedHomBialgebra>(twist_R_power(*C, t));
    } catch (const Error& e) {
      if (e.kind() == "rejected") reject(inst.name, std::string("injective twisting map (") + e.what() + ")");
      throw;
    }
  }
  inst.cobraided = C;
  inst.natural_degree = std::max(1, n - 1);
}

void build_integral(Instance& inst, int k, int t) {
  if (k == 0) reject(inst.name, "k != 0");
  if (t < 0) reject(inst.name, "t >= 0");
  inst.field = ScalarField::make({"q"});
  inst.params["k"] = k;
  inst.params["t"] = t;
  Presentation names(inst.field, {"g", "h"}, {}, 4);
  auto pres = std::make_shared<const Presentation>(
      inst.field, std::vector<std::string>{"g", "h"},
      std::vector<Rule>{rule(names, "gh", {{"1", "1"}}), rule(names, "hg", {{"1", "1"}})}, 4);
  DeltaTable d;
  d[0] = delta_terms(*pres, {{"g", "g", "1"}});
  d[1] = delta_terms(*pres, {{"h", "h", "1"}});
  inst.base = std::make_shared<const HomBialgebra>(pres, d, AlphaTable{}, false);
  const int e = std::abs(k);
  inst.alpha[0] = NCPoly::monomial(Monomial(static_cast<std::size_t>(e), k > 0 ? '\0' : '\1'));
  inst.alpha[1] = NCPoly::monomial(Monomial(static_cast<std::size_t>(e), k > 0 ? '\1' : '\0'));
  inst.presented = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(*inst.base, inst.alpha));
  const Scalar q = parse_scalar("q", inst.field);
  CobraidingForm R;
  R.gen_table[{0, 0}] = q;
  R.gen_table[{1, 1}] = q;
  R.gen_table[{0, 1}] = q.inverse();
  R.gen_table[{1, 0}] = q.inverse();
  for (int g : {0, 1}) {
    R.unit_left[g] = Scalar(1);
    R.unit_right[g] = Scalar(1);
  }
  auto C = std::make_shared<const CobraidedHomBialgebra>(inst.presented, R);
  if (t > 0) C = std::make_shared<const CobraidedHomBialgebra>(twist_R_power(*C, t));
  inst.cobraided = C;
}

// ---------------------------------------------------------------- small quantum groups

void build_uq_small(Instance& inst, ParamReader& pr) {
  const int l = pr.integer("l", 3);
  if (l <= 1 || l % 2 == 0) reject(inst.name, "l odd and > 1");
  inst.field = ScalarField::make(formal(pr, {}, {"lambda"}), l);
  inst.lambda = pr.scalar("lambda", inst.field);
  if (inst.lambda.is_zero()) reject(inst.name, "lambda is invertible");
  inst.params["l"] = l;
  inst.params["lambda"] = inst.lambda.str();
  const Scalar q = Scalar::zeta(inst.field, 1);
  const Scalar qq = q - q.inverse();

  std::vector<std::string> gens{"g", "E", "F"};
  std::vector<int> weights{1, l, l};
  Presentation names(inst.field, gens, {}, 4, weights);
  std::vector<Rule> rules;
  rules.push_back({names.parse_monomial("Eg"), names.multiply(names.gen("g"), names.gen("E")) * q.pow(-2)});
  rules.push_back({names.parse_monomial("Fg"), names.multiply(names.gen("g"), names.gen("F")) * q.pow(2)});
  {
    NCPoly rhs = names.multiply(names.gen("E"), names.gen("F"));
    NCPoly k = names.gen("g") - NCPoly::monomial(names.parse_monomial(pow_word("g", l - 1)));
    rhs -= k * qq.inverse();
    rules.push_back({names.parse_monomial("FE"), rhs});
  }
  rules.push_back({names.parse_monomial(pow_word("E", l)), NCPoly()});
  rules.push_back({names.parse_monomial(pow_word("F", l)), NCPoly()});
  rules.push_back({names.parse_monomial(pow_word("g", l)), NCPoly::constant(Scalar(1))});
  auto pres = std::make_shared<const Presentation>(inst.field, gens, std::move(rules), 4, weights);

  DeltaTable d;
  d[0] = delta_terms(*pres, {{"g", "g", "1"}});
  d[1] = delta_terms(*pres, {{"E", "g", "1"}, {"1", "E", "1"}});
  d[2] = delta_terms(*pres, {{"F", "1", "1"}, {pow_word("g", l - 1), "F", "1"}});
  inst.base = std::make_shared<const HomBialgebra>(pres, d, AlphaTable{}, false);
  inst.alpha[0] = pres->gen("g");
  inst.alpha[1] = pres->gen("E") * inst.lambda;
  inst.alpha[2] = pres->gen("F") * inst.lambda.inverse();
  inst.presented = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(*inst.base, inst.alpha));

  // (1/l sum q^{-2ab} g^a (x) g^b) (sum (q - q^{-1})^n / (n)_{q^{-2}}! E^n (x) F^n)
  TensorElement cartan(2), nilp(2);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      cartan.add_term({Monomial(a, '\0'), Monomial(b, '\0'), ""}, q.pow(-2L * a * b) / Scalar(l));
  for (int n = 0; n < l; ++n) {
    Scalar f = q_factorial(n, q.pow(-2));
    if (f.is_zero()) throw Error("pole", "q-factorial vanishes at n = " + std::to_string(n));
    nilp.add_term({Monomial(n, '\1'), Monomial(n, '\2'), ""}, qq.pow(n) / f);
  }
  TensorElement R = pres->multiply(cartan, nilp);
  inst.braided = materialize(*inst.presented, R);
}

void build_uq_reduced(Instance& inst, ParamReader& pr) {
  const int r = pr.integer("r", 2);
  if (r <= 1) reject(inst.name, "r > 1");
  const int N = 4 * r;
  inst.field = ScalarField::make(formal(pr, {}, {"lambda"}), N);
  inst.lambda = pr.scalar("lambda", inst.field);
  if (inst.lambda.is_zero()) reject(inst.name, "lambda is invertible");
  inst.params["r"] = r;
  inst.params["lambda"] = inst.lambda.str();
  const Scalar z = Scalar::zeta(inst.field, 1);
  const Scalar q = z * z;

  std::vector<std::string> gens{"K", "Xp", "Xm"};
  std::vector<int> weights{1, N, N};
  Presentation names(inst.field, gens, {}, 4, weights);
  const NCPoly K = names.gen("K"), Xp = names.gen("Xp"), Xm = names.gen("Xm");
  auto Kpow = [&](int e) { return NCPoly::monomial(Monomial(((e % N) + N) % N, '\0')); };
  std::vector<Rule> rules;
  rules.push_back({names.parse_monomial("Xp*K"), names.multiply(K, Xp) * q.inverse()});
  rules.push_back({names.parse_monomial("Xm*K"), names.multiply(K, Xm) * q});
  {
    NCPoly rhs = names.multiply(Xp, Xm);
    rhs -= (Kpow(2) - Kpow(N - 2)) * (q - q.inverse()).inverse();
    rules.push_back({names.parse_monomial("Xm*Xp"), rhs});
  }
  rules.push_back({Monomial(r, '\1'), NCPoly()});
  rules.push_back({Monomial(r, '\2'), NCPoly()});
  rules.push_back({Monomial(N, '\0'), NCPoly::constant(Scalar(1))});
  auto pres = std::make_shared<const Presentation>(inst.field, gens, std::move(rules), 4, weights);

  DeltaTable d;
  d[0] = tensor(K, K);
  d[1] = tensor(Xp, K);
  d[1] += tensor(Kpow(N - 1), Xp);
  d[2] = tensor(Xm, K);
  d[2] += tensor(Kpow(N - 1), Xm);
  inst.base = std::make_shared<const HomBialgebra>(pres, d, AlphaTable{}, false);
  inst.alpha[0] = K;
  inst.alpha[1] = Xp * inst.lambda;
  inst.alpha[2] = Xm * inst.lambda.inverse();
  inst.presented = std::make_shared<const HomBialgebra>(twist_hom_bialgebra(*inst.base, inst.alpha));

  // R_K sum (1 - q^{-2})^m / (m)_{q^{-2}}! (K X+)^m (x) (K^{-1} X-)^m, R_K = 1/4r sum zeta^{-ab} K^a (x) K^b
  TensorElement cartan(2), nilp(2);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) cartan.add_term({Monomial(a, '\0'), Monomial(b, '\0'), ""}, z.pow(-1L * a * b) / Scalar(N));
  const NCPoly KX = pres->multiply(K, Xp), KinvX = pres->multiply(Kpow(N - 1), Xm);
  NCPoly left = NCPoly::constant(Scalar(1)), right = NCPoly::constant(Scalar(1));
  for (int m = 0; m < r; ++m) {
    Scalar f = q_factorial(m, q.pow(-2));
    if (f.is_zero()) throw Error("pole", "q-factorial vanishes at m = " + std::to_string(m));
    TensorElement t = tensor(left, right);
    t *= (Scalar(1) - q.pow(-2)).pow(m) / f;
    nilp += t;
    left = pres->multiply(left, KX);
    right = pres->multiply(right, KinvX);
  }
  TensorElement R = pres->multiply(cartan, nilp);
  inst.braided = materialize(*inst.presented, R);
}

}  // namespace

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names{"mq2",   "slq2",           "glq2",         "mpq2",         "mq11",
                                              "plane_standard",  "plane_fermionic", "plane_mixed", "group_bialgebra",
                                              "anyon", "integral_anyon", "uq_small",     "uq_reduced"};
  return names;
}

RMatrixSpec catalog_rmatrix(const std::string& name, const FieldPtr& field) {
  RMatrixSpec s;
  s.dim = 2;
  s.field = field;
  auto v = [&](const char* text) { return parse_scalar(text, field); };
  if (name == "sl2") {
    s.c[{0, 0, 0, 0}] = v("t");
    s.c[{1, 1, 1, 1}] = v("t");
    s.c[{0, 1, 1, 0}] = v("t^-1");
    s.c[{1, 0, 0, 1}] = v("t^-1");
    s.c[{1, 0, 1, 0}] = v("t^-1*(q - q^-1)");
  } else if (name == "mpq") {
    s.c[{0, 0, 0, 0}] = v("t");
    s.c[{1, 1, 1, 1}] = v("t");
    s.c[{0, 1, 1, 0}] = v("t/p");
    s.c[{1, 0, 0, 1}] = v("t^-1");
    s.c[{1, 0, 1, 0}] = v("t - 1/(p*t)");
  } else if (name == "mq11") {
    s.c[{0, 0, 0, 0}] = v("t");
    s.c[{1, 1, 1, 1}] = v("-t^-3");
    s.c[{0, 1, 1, 0}] = v("t^-1");
    s.c[{1, 0, 0, 1}] = v("t^-1");
    s.c[{1, 0, 1, 0}] = v("t^-1*(q - q^-1)");
  } else {
    throw Error("config", "unknown R-matrix '" + name + "' (expected sl2, mpq or mq11)");
  }
  return s;
}

Instance build_instance(const std::string& name, const Params& params) {
  Instance inst;
  inst.name = name;
  ParamReader pr{name, params, {}};
  if (name == "mq2" || name == "slq2" || name == "glq2" || name == "mpq2" || name == "mq11") {
    build_quantum_matrices(inst, qm_kind(name), pr);
  } else if (name == "plane_standard") {
    build_plane(inst, PlaneKind::standard, pr);
  } else if (name == "plane_fermionic") {
    build_plane(inst, PlaneKind::fermionic, pr);
  } else if (name == "plane_mixed") {
    build_plane(inst, PlaneKind::mixed, pr);
  } else if (name == "group_bialgebra") {
    int n = pr.integer("n", 5), s = pr.integer("s", 1), k = pr.integer("k", 1), t = pr.integer("t", 0);
    build_cyclic(inst, n, s, k, t);
  } else if (name == "anyon") {
    int n = pr.integer("n", 5), k = pr.integer("k", 2), t = pr.integer("t", 1);
    if (n < 2) reject(name, "n >= 2");
    if (k < 1 || k > n - 1) reject(name, "1 <= k <= n - 1");
    if (t > 0 && std::gcd(k, n) != 1) reject(name, "gcd(k, n) = 1");
    build_cyclic(inst, n, 1, k, t);
    inst.params.erase("s");
  } else if (name == "integral_anyon") {
    int k = pr.integer("k", 3), t = pr.integer("t", 1);
    build_integral(inst, k, t);
  } else if (name == "uq_small") {
    build_uq_small(inst, pr);
  } else if (name == "uq_reduced") {
    build_uq_reduced(inst, pr);
  } else {
    throw Error("unknown_instance", "unknown instance '" + name + "'");
  }
  pr.finish();
  return inst;
}

Comodule instance_frt_comodule(const Instance& inst, bool twisted) {
  if (!inst.rmatrix || !inst.cobraided) throw Error("config", inst.name + " carries no FRT comodule");
  if (twisted) return matrix_comodule(inst.cobraided, 2, {inst.lambda, Scalar(1)});
  auto plain = std::make_shared<const CobraidedHomBialgebra>(inst.cobraided->with_hom_bialgebra(inst.base));
  return matrix_comodule(plain, 2);
}

NCPoly quantum_determinant(const Instance& inst) {
  if (inst.name != "mq2" && inst.name != "slq2" && inst.name != "glq2")
    throw Error("config", "quantum determinant is defined for mq2, slq2 and glq2");
  const Presentation& P = inst.base->pres();
  return P.normal_form(P.poly({{"ad", "1"}, {"bc", "-q^-1"}}));
}

SuiteDegrees default_degrees() {
  SuiteDegrees d;
  if (const char* env = std::getenv("HOMQ_DEFAULT_DEGREE")) {
    try {
      d.degree = std::stoi(env);
    } catch (const std::exception&) {
      throw Error("config", std::string("HOMQ_DEFAULT_DEGREE must be an integer, got '") + env + "'");
    }
    if (d.degree < 0) throw Error("config", "HOMQ_DEFAULT_DEGREE must be nonnegative");
    d.oqhybe = std::min(d.degree, 2);
  }
  return d;
}

Report verify_instance(const Instance& inst, const SuiteDegrees& deg) {
  Report rep;
  const int cdeg = inst.natural_degree.value_or(deg.degree);
  const int odeg = inst.natural_degree ? std::min(*inst.natural_degree, std::max(deg.oqhybe, 2)) : deg.oqhybe;
  const Presentation& P = inst.base->pres();
  rep.merge(check_local_confluence(P, std::min(4, P.max_degree())), "presentation");
  rep.merge(verify_morphism(inst.alpha, *inst.base, cdeg));

  if (inst.braided) {
    const FinDimHomBialgebra& B = *inst.braided;
    rep.merge(verify_findim_hom_bialgebra(B));
    rep.merge(verify_braided(B));
    rep.merge(check_r_alpha_invariance(B));
    FinDimHomBialgebra D = dualize(B);
    rep.merge(verify_findim_hom_bialgebra(D), "dual");
    rep.merge(verify_cobraided_tensor(D), "dual");
    rep.merge(check_r_alpha_invariance(D), "dual");
    CheckBuilder dd("duality/double_dual", 1);
    dd.count();
    if (!(dualize(D) == B)) dd.fail({{"reason", "double dual differs from the original"}});
    rep.add(dd.finish());
    rep.sort();
    return rep;
  }

  if (inst.plane) {
    const ComoduleAlgebra& M = *inst.plane;
    rep.merge(verify_comodule_hom_algebra(M, cdeg));
    for (int d = 1; d <= 2; ++d) {
      Comodule piece = M.piece(d);
      rep.merge(verify_hybe(b_alpha_operator(piece), piece.alpha), "piece_" + std::to_string(d));
    }
    const PlaneKind kind = *inst.plane_kind;
    CheckBuilder cf("closed_form/coaction", cdeg);
    for (int total = 0; total <= cdeg && !cf.failed(); ++total)
      for (int i = total; i >= 0; --i) {
        int j = total - i;
        if (kind == PlaneKind::fermionic && (i > 1 || j > 1)) continue;
        if (kind == PlaneKind::mixed && j > 1) continue;
        cf.count();
        const Presentation& AP = *M.algebra().pres;
        Monomial m = Monomial(i, static_cast<char>(AP.generator_index("x"))) +
                     Monomial(j, static_cast<char>(AP.generator_index("y")));
        TensorElement lhs = M.coaction(NCPoly::monomial(m));
        TensorElement rhs = closed_form_coaction(M, kind, i, j, inst.lambda, inst.xi);
        if (lhs != rhs) {
          cf.fail({{"i", i}, {"j", j}, {"computed", M.render(lhs)}, {"closed_form", M.render(rhs)}});
          break;
        }
      }
    rep.add(cf.finish());
    rep.sort();
    return rep;
  }

  rep.merge(verify_hom_bialgebra(*inst.presented, cdeg));
  const CobraidedHomBialgebra& C = *inst.cobraided;
  rep.merge(verify_cobraided(C, cdeg));
  rep.merge(verify_oqhybe(C, odeg));
  if (inst.rmatrix) rep.merge(check_alpha_invariance(C, cdeg));
  if (C.r_power() > 0) rep.merge(injectivity_certificate(C.H(), C.pres().max_degree()));

  if (inst.name == "anyon" || inst.name == "group_bialgebra") {
    // R^{alpha^t}(g^a, g^b) = zeta^{s k^{2t} ab}
    const int n = inst.params.at("n").get<int>(), s = inst.params.value("s", 1), k = inst.params.at("k").get<int>(),
              t = inst.params.at("t").get<int>();
    long e = s;
    for (int i = 0; i < 2 * t; ++i) e = (e * k) % n;
    CheckBuilder vals("r_power/values", n - 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        vals.count();
        Scalar got = C.eval(Monomial(a, '\0'), Monomial(b, '\0'));
        Scalar want = Scalar::zeta(inst.field, static_cast<int>((e * a % n) * b % n));
        if (got != want && !vals.failed())
          vals.fail({{"a", a}, {"b", b}, {"value", got.str()}, {"expected", want.str()}});
      }
    rep.add(vals.finish());
  }
  if (inst.name == "integral_anyon") {
    // R^{alpha^t}(m, n) = q^{k^{2t} mn}, with g^{-1} = h
    const int k = inst.params.at("k").get<int>(), t = inst.params.at("t").get<int>();
    long e = 1;
    for (int i = 0; i < 2 * t; ++i) e *= k;
    const Scalar q = parse_scalar("q", inst.field);
    auto word = [](int m) { return m >= 0 ? Monomial(m, '\0') : Monomial(-m, '\1'); };
    CheckBuilder vals("r_power/values", 2);
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        vals.count();
        Scalar got = C.eval(word(m), word(n)), want = q.pow(e * m * n);
        if (got != want && !vals.failed())
          vals.fail({{"m", m}, {"n", n}, {"value", got.str()}, {"expected", want.str()}});
      }
    rep.add(vals.finish());
  }
  rep.sort();
  return rep;
}

json instance_to_json(const Instance& inst) {
  json j = json::object();
  j["instance"] = inst.name;
  j["params"] = inst.params;
  if (inst.braided) {
    j["findim"] = inst.braided->to_json();
    return j;
  }
  const json base = cobraided_to_json(*inst.cobraided);
  for (const auto& [k, v] : base.items()) j[k] = v;
  if (inst.plane) j["plane"] = inst.plane->to_json();
  return j;
}

}  // namespace homq
