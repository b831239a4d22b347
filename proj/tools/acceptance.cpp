// Acceptance run: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "homq/catalog.hpp"

using namespace homq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Report& r, const std::string& what) {
    if (r.passed()) return;
    std::string first;
    for (const auto& c : r.checks)
      if (c.status == Status::fail) {
        first = c.name;
        break;
      }
    require(false, what + ": " + first);
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> run;
};

std::vector<Monomial> words_upto(int ngens, int len) {
  std::vector<Monomial> out{Monomial()}, layer{Monomial()};
  for (int l = 1; l <= len; ++l) {
    std::vector<Monomial> next;
    for (const auto& w : layer)
      for (int g = 0; g < ngens; ++g) next.push_back(w + static_cast<char>(g));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Monomial power(int e) { return Monomial(static_cast<std::size_t>(e), '\0'); }

void frt_equivalence(Outcome& o) {
  auto f = ScalarField::make({"t"});
  FrtAlgebra A = frt_construct(catalog_rmatrix("sl2", f));
  const Presentation& P = A.cobraided->pres();
  Instance mq = build_instance("mq2");
  Presentation Q = presentation_from_json(mq.base->pres().to_json(), f);
  o.require(P.generators() == Q.generators(), "generator names differ");
  if (!o.ok) return;
  int n = 0;
  for (const auto& w : words_upto(4, 4)) {
    o.require(P.to_json(P.normal_form(w)) == Q.to_json(Q.normal_form(w)), "normal forms differ on " + P.monomial_text(w));
    ++n;
  }
  o.detail = o.ok ? std::to_string(n) + " words" : o.detail;
}

void gamma_recovery(Outcome& o) {
  for (const char* name : {"sl2", "mpq", "mq11"}) {
    auto start = std::chrono::steady_clock::now();
    auto f = ScalarField::make(std::string(name) == "mpq" ? std::vector<std::string>{"t", "p"}
                                                          : std::vector<std::string>{"t"});
    RMatrixSpec spec = catalog_rmatrix(name, f);
    Comodule V = frt_comodule(frt_construct(spec));
    o.require(bvw_operator(V, V) == spec.gamma(), std::string(name) + ": B differs from gamma");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(s < 5.0, std::string(name) + ": over 5 s");
  }
}

void cobraided_axioms(Outcome& o) {
  for (const char* name : {"mq2", "slq2", "mpq2", "mq11"}) {
    Instance inst = build_instance(name);
    o.require(verify_cobraided(*inst.cobraided, 3), name);
    o.require(verify_oqhybe(*inst.cobraided, 2), name);
  }
}

void r_power_closure(Outcome& o) {
  for (int t : {1, 2}) {
    Instance a = build_instance("anyon", {{"n", "5"}, {"k", "2"}, {"t", std::to_string(t)}});
    const CobraidedHomBialgebra& C = *a.cobraided;
    const std::string tag = "t=" + std::to_string(t);
    o.require(verify_hom_bialgebra(C.H(), 4), tag);
    o.require(verify_cobraided(C, 4), tag);
    o.require(verify_oqhybe(C, 2), tag);
    const int k2t = t == 1 ? 4 : 16;
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        o.require(C.eval(power(x), power(y)) == Scalar::zeta(a.field, (k2t * x * y) % 5),
                  tag + ": R value at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
}

void duality(Outcome& o) {
  Instance u = build_instance("uq_small");
  const FinDimHomBialgebra& B = *u.braided;
  o.require(B.dim() == 27, "u_q dimension");
  o.require(verify_findim_hom_bialgebra(B), "u_q");
  o.require(verify_braided(B), "u_q");
  FinDimHomBialgebra D = dualize(B);
  o.require(verify_findim_hom_bialgebra(D), "dual");
  o.require(verify_cobraided_tensor(D), "dual");
  o.require(dualize(D) == B, "double dual differs");

  Mat flat(B.dim(), B.dim());
  flat(0, 0) = Scalar(1);
  FinDimHomBialgebra bad = with_r(B, RKind::element, flat);
  o.require(!verify_braided(bad).passed(), "corrupted R passes the braided axioms");
  o.require(!verify_cobraided_tensor(dualize(bad)).passed(), "corrupted R passes on the dual");

  Instance r = build_instance("uq_reduced");
  o.require(r.braided->dim() == 32, "U_q^(2) dimension");
  o.require(verify_braided(*r.braided), "U_q^(2)");
}

void hybe(Outcome& o) {
  Instance mq = build_instance("mq2");
  Comodule V = instance_frt_comodule(mq, true);
  o.require(verify_hybe(bvw_operator(V, V), V.alpha), "FRT comodule");
  for (const char* name : {"plane_standard", "plane_fermionic", "plane_mixed"}) {
    Instance p = build_instance(name);
    for (int d = 1; d <= 2; ++d) {
      Comodule piece = p.plane->piece(d);
      o.require(verify_hybe(b_alpha_operator(piece), piece.alpha), std::string(name) + " piece " + std::to_string(d));
    }
  }
}

void mixed_hybe(Outcome& o) {
  Instance p = build_instance("plane_standard");
  Comodule F = matrix_comodule(p.plane->host(), 2, {p.lambda, Scalar(1)});
  o.require(verify_mixed_hybe(F, p.plane->piece(1), p.plane->piece(2)), "FRT, piece 1, piece 2");
}

void closed_forms(Outcome& o) {
  struct Range {
    const char* name;
    PlaneKind kind;
    int imax, jmax, total;
  };
  int n = 0;
  for (const auto& [name, kind, imax, jmax, total] :
       {Range{"plane_standard", PlaneKind::standard, 4, 4, 4}, Range{"plane_fermionic", PlaneKind::fermionic, 1, 1, 2},
        Range{"plane_mixed", PlaneKind::mixed, 3, 1, 4}}) {
    Instance p = build_instance(name);
    for (int i = 0; i <= imax; ++i)
      for (int j = 0; j <= jmax && i + j <= total; ++j) {
        NCPoly w = NCPoly::monomial(Monomial(i, '\0') + Monomial(j, '\1'));
        o.require(closed_form_coaction(*p.plane, kind, i, j, p.lambda, p.xi) == p.plane->coaction(w),
                  std::string(name) + " at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        ++n;
      }
  }

  Instance f = build_instance("plane_fermionic");
  const Presentation& H = f.base->pres();
  const Presentation& A = *f.plane->algebra().pres;
  const Scalar q = parse_scalar("q", f.field), l = f.lambda.inverse(), xi = f.xi;
  TensorElement det(2);
  det.add_term({H.parse_monomial("ad"), A.parse_monomial("xy"), ""}, l * xi * xi);
  det.add_term({H.parse_monomial("bc"), A.parse_monomial("xy"), ""}, Scalar(-1) * q.inverse() * l * xi * xi);
  o.require(f.plane->coaction(A.poly({{"xy", "1"}})) == det, "fermionic rho(xy)");

  const HomAlgebra& M = f.plane->algebra();
  const std::vector<NCPoly> e = {NCPoly::constant(Scalar(1)), A.gen("x"), A.gen("y"), A.poly({{"xy", "1"}})};
  const std::vector<std::vector<NCPoly>> table = {
      {e[0], e[1] * xi, e[2] * (l * xi), e[3] * (l * xi * xi)},
      {e[1] * xi, NCPoly(), e[3] * (l * xi * xi), NCPoly()},
      {e[2] * (l * xi), e[3] * (Scalar(-1) * q.inverse() * l * xi * xi), NCPoly(), NCPoly()},
      {e[3] * (l * xi * xi), NCPoly(), NCPoly(), NCPoly()},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      o.require(M.mu(e[i], e[j]) == table[i][j],
                "fermionic product table at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  if (o.ok) o.detail = std::to_string(n) + " coactions, 16 products";
}

void confluence(Outcome& o) {
  int n = 0;
  for (const auto& name : instance_names()) {
    Instance inst = build_instance(name);
    o.require(check_local_confluence(inst.base->pres(), 4), name);
    ++n;
    if (inst.plane) {
      o.require(check_local_confluence(*inst.plane->algebra().pres, 4), name + " plane");
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " presentations";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "frt_equivalence", 30, frt_equivalence},
      {2, "gamma_recovery", 15, gamma_recovery},
      {3, "cobraided_axioms", 300, cobraided_axioms},
      {4, "r_power_closure", 5, r_power_closure},
      {5, "duality", 600, duality},
      {6, "hybe", 120, hybe},
      {7, "mixed_hybe", 120, mixed_hybe},
      {8, "closed_forms", 60, closed_forms},
      {9, "confluence", 60, confluence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && s > c.limit_s) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    if (!o.ok) ++failed;
    std::printf("%s %d %-18s %8.2fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
