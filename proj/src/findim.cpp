#include "homq/findim.hpp"

#include "homq/io.hpp"

namespace homq {

namespace {

template <class Map>
void add_to(Map& m, const typename Map::key_type& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string label_of(const FinDimHomBialgebra& B, int i) { return B.labels[i].empty() ? "1" : B.labels[i]; }

std::string render(const FinDimHomBialgebra& B, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + label_of(B, i);
  }
  return s;
}

template <std::size_t N>
std::string render(const FinDimHomBialgebra& B, const std::map<std::array<int, N>, Scalar>& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*";
    for (std::size_t x = 0; x < N; ++x) s += (x ? " (x) " : "") + label_of(B, k[x]);
  }
  return s;
}

// precomputed sparse views of the structure maps
struct Ops {
  const FinDimHomBialgebra& B;
  std::vector<SparseVec> alpha;  // alpha(e_i)

  explicit Ops(const FinDimHomBialgebra& b) : B(b), alpha(b.dim()) {
    for (int j = 0; j < B.dim(); ++j)
      for (int i = 0; i < B.dim(); ++i)
        if (!B.alpha(i, j).is_zero()) alpha[j][i] = B.alpha(i, j);
  }

  SparseVec mul(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        const Scalar xy = x * y;
        for (const auto& [k, c] : B.mu[i][j]) add_to(out, k, xy * c);
      }
    return out;
  }
  SparseVec mul(int i, int j) const { return B.mu[i][j]; }
  SparseVec alph(const SparseVec& a) const {
    SparseVec out;
    for (const auto& [i, x] : a)
      for (const auto& [k, c] : alpha[i]) add_to(out, k, x * c);
    return out;
  }
  Sparse2 delta(const SparseVec& a) const {
    Sparse2 out;
    for (const auto& [i, x] : a)
      for (const auto& [k, c] : B.delta[i]) add_to(out, k, x * c);
    return out;
  }
  // value of the form on two vectors
  Scalar form(const SparseVec& u, const SparseVec& v) const {
    Scalar s;
    for (const auto& [i, x] : u)
      for (const auto& [j, y] : v)
        if (!B.r(i, j).is_zero()) s += x * y * B.r(i, j);
    return s;
  }
};

SparseVec unit_vec(int i) { return SparseVec{{i, Scalar(1)}}; }

std::vector<std::pair<std::array<int, 2>, Scalar>> r_terms(const FinDimHomBialgebra& B) {
  std::vector<std::pair<std::array<int, 2>, Scalar>> out;
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j)
      if (!B.r(i, j).is_zero()) out.push_back({{i, j}, B.r(i, j)});
  return out;
}

}  // namespace

bool FinDimHomBialgebra::operator==(const FinDimHomBialgebra& o) const {
  return labels == o.labels && mu == o.mu && delta == o.delta && alpha == o.alpha && r_kind == o.r_kind &&
         (r_kind == RKind::none || r == o.r);
}

json FinDimHomBialgebra::to_json() const {
  json j = json::object();
  j["field"] = field_to_json(*field);
  j["labels"] = labels;
  json m = json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      for (const auto& [k, c] : mu[a][b]) m.push_back({a, b, k, c.str()});
  j["mu"] = m;
  json d = json::array();
  for (int a = 0; a < dim(); ++a)
    for (const auto& [k, c] : delta[a]) d.push_back({a, k[0], k[1], c.str()});
  j["delta"] = d;
  json al = json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      if (!alpha(a, b).is_zero()) al.push_back({a, b, alpha(a, b).str()});
  j["alpha"] = al;
  if (r_kind != RKind::none) {
    json rr = json::array();
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b)
        if (!r(a, b).is_zero()) rr.push_back({a, b, r(a, b).str()});
    j["r"] = {{"kind", r_kind == RKind::element ? "element" : "form"}, {"entries", rr}};
  }
  return j;
}

FinDimHomBialgebra findim_from_json(const json& j) {
  try {
    FinDimHomBialgebra B;
    B.field = field_from_json(j.at("field"));
    B.labels = j.at("labels").get<std::vector<std::string>>();
    const int n = B.dim();
    auto idx = [&](const json& x) {
      int i = x.get<int>();
      if (i < 0 || i >= n) throw Error("malformed_json", "basis index out of range");
      return i;
    };
    auto val = [&](const json& x) { return parse_scalar(x.get<std::string>(), B.field); };
    B.mu.assign(n, std::vector<SparseVec>(n));
    for (const auto& e : j.at("mu")) add_to(B.mu[idx(e.at(0))][idx(e.at(1))], idx(e.at(2)), val(e.at(3)));
    B.delta.assign(n, Sparse2{});
    for (const auto& e : j.at("delta")) add_to(B.delta[idx(e.at(0))], {idx(e.at(1)), idx(e.at(2))}, val(e.at(3)));
    B.alpha = Mat(n, n);
    for (const auto& e : j.at("alpha")) B.alpha(idx(e.at(0)), idx(e.at(1))) = val(e.at(2));
    B.r = Mat(n, n);
    if (j.contains("r")) {
      std::string kind = j.at("r").at("kind").get<std::string>();
      if (kind == "element")
        B.r_kind = RKind::element;
      else if (kind == "form")
        B.r_kind = RKind::form;
      else
        throw Error("malformed_json", "R kind must be \"element\" or \"form\"");
      for (const auto& e : j.at("r").at("entries")) B.r(idx(e.at(0)), idx(e.at(1))) = val(e.at(2));
    }
    return B;
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("finite-dimensional instance: ") + e.what());
  }
}

FinDimHomBialgebra materialize(const HomBialgebra& H, int cap) {
  const Presentation& P = H.pres();
  const std::vector<Monomial> basis = finite_basis(P, cap);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int n = static_cast<int>(basis.size());
  auto at = [&](const Monomial& m) {
    auto it = index.find(m);
    if (it == index.end()) throw Error("config", "normal form leaves the basis: " + P.monomial_text(m));
    return it->second;
  };

  FinDimHomBialgebra B;
  B.field = H.field();
  for (const auto& m : basis) B.labels.push_back(P.monomial_text(m));
  B.mu.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [m, c] : H.mu(basis[i], basis[j]).terms()) add_to(B.mu[i][j], at(m), c);
  B.delta.assign(n, Sparse2{});
  B.alpha = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [legs, c] : H.delta(basis[i]).terms()) add_to(B.delta[i], {at(legs[0]), at(legs[1])}, c);
    for (const auto& [m, c] : H.alpha(basis[i]).terms()) B.alpha(at(m), i) = c;
  }
  B.r = Mat(n, n);
  return B;
}

FinDimHomBialgebra materialize(const HomBialgebra& H, const TensorElement& R, int cap) {
  FinDimHomBialgebra B = materialize(H, cap);
  const Presentation& P = H.pres();
  std::map<std::string, int> index;
  for (int i = 0; i < B.dim(); ++i) index[B.labels[i]] = i;
  TensorElement nf = P.normal_form(R);
  for (const auto& [legs, c] : nf.terms()) {
    auto a = index.find(P.monomial_text(legs[0])), b = index.find(P.monomial_text(legs[1]));
    if (a == index.end() || b == index.end()) throw Error("config", "R leaves the basis");
    B.r(a->second, b->second) += c;
  }
  B.r_kind = RKind::element;
  return B;
}

FinDimHomBialgebra materialize(const CobraidedHomBialgebra& C, int cap) {
  FinDimHomBialgebra B = materialize(C.H(), cap);
  const std::vector<Monomial> basis = finite_basis(C.pres(), cap);
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) B.r(i, j) = C.eval(basis[i], basis[j]);
  B.r_kind = RKind::form;
  return B;
}

FinDimHomBialgebra with_r(const FinDimHomBialgebra& B, RKind kind, Mat r) {
  if (kind != RKind::none && (r.rows() != B.dim() || r.cols() != B.dim()))
    throw Error("config", "R matrix has the wrong size");
  FinDimHomBialgebra out = B;
  out.r_kind = kind;
  out.r = kind == RKind::none ? Mat(B.dim(), B.dim()) : std::move(r);
  return out;
}

Report verify_findim_hom_bialgebra(const FinDimHomBialgebra& B) {
  Ops op(B);
  const int n = B.dim();
  CheckBuilder mult("hom_bialgebra/multiplicativity", 1);
  CheckBuilder assoc("hom_bialgebra/hom_associativity", 1);
  CheckBuilder comult("hom_bialgebra/comultiplicativity", 1);
  CheckBuilder coassoc("hom_bialgebra/hom_coassociativity", 1);
  CheckBuilder compat("hom_bialgebra/compatibility", 1);

  for (int x = 0; x < n; ++x) {
    // Delta alpha = (alpha (x) alpha) Delta
    comult.count();
    Sparse2 l = op.delta(op.alpha[x]), r;
    for (const auto& [k, c] : B.delta[x])
      for (const auto& [i, a] : op.alpha[k[0]])
        for (const auto& [j, b] : op.alpha[k[1]]) add_to(r, {i, j}, c * a * b);
    if (l != r && !comult.failed()) comult.fail({{"x", label_of(B, x)}, {"lhs", render(B, l)}, {"rhs", render(B, r)}});

    // (alpha (x) Delta) Delta = (Delta (x) alpha) Delta
    coassoc.count();
    Sparse3 l3, r3;
    for (const auto& [k, c] : B.delta[x]) {
      for (const auto& [i, a] : op.alpha[k[0]])
        for (const auto& [jk, b] : B.delta[k[1]]) add_to(l3, {i, jk[0], jk[1]}, c * a * b);
      for (const auto& [ij, b] : B.delta[k[0]])
        for (const auto& [m, a] : op.alpha[k[1]]) add_to(r3, {ij[0], ij[1], m}, c * a * b);
    }
    if (l3 != r3 && !coassoc.failed())
      coassoc.fail({{"x", label_of(B, x)}, {"lhs", render(B, l3)}, {"rhs", render(B, r3)}});
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mult.count();
      SparseVec l = op.alph(B.mu[x][y]), r = op.mul(op.alpha[x], op.alpha[y]);
      if (l != r && !mult.failed())
        mult.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"lhs", render(B, l)}, {"rhs", render(B, r)}});

      // Delta(xy) = sum x1 y1 (x) x2 y2
      compat.count();
      Sparse2 dl = op.delta(B.mu[x][y]), dr;
      for (const auto& [kx, cx] : B.delta[x])
        for (const auto& [ky, cy] : B.delta[y]) {
          const SparseVec& p = B.mu[kx[0]][ky[0]];
          if (p.empty()) continue;
          const SparseVec& s = B.mu[kx[1]][ky[1]];
          for (const auto& [i, a] : p)
            for (const auto& [j, b] : s) add_to(dr, {i, j}, cx * cy * a * b);
        }
      if (dl != dr && !compat.failed())
        compat.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"lhs", render(B, dl)}, {"rhs", render(B, dr)}});

      if (assoc.failed()) continue;
      for (int z = 0; z < n; ++z) {
        assoc.count();
        SparseVec al = op.mul(op.alpha[x], B.mu[y][z]);
        SparseVec ar = op.mul(B.mu[x][y], op.alpha[z]);
        if (al != ar) {
          assoc.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"z", label_of(B, z)}, {"lhs", render(B, al)},
                      {"rhs", render(B, ar)}});
          break;
        }
      }
    }
  Report rep;
  for (auto* c : {&mult, &assoc, &comult, &coassoc, &compat}) rep.add(c->finish());
  return rep;
}

Report verify_braided(const FinDimHomBialgebra& B) {
  if (B.r_kind != RKind::element) throw Error("config", "braided axioms need an R element");
  Ops op(B);
  const int n = B.dim();
  const auto R = r_terms(B);

  CheckBuilder left("braided/delta_left", 1);
  CheckBuilder right("braided/delta_right", 1);
  CheckBuilder comm("braided/almost_cocommutativity", 1);

  // (Delta (x) alpha) R = sum alpha(s_i) (x) alpha(s_j) (x) t_i t_j
  // (alpha (x) Delta) R = sum s_i s_j (x) alpha(t_j) (x) alpha(t_i)
  Sparse3 la, ra, lb, rb;
  for (const auto& [st, c] : R) {
    for (const auto& [k, d] : B.delta[st[0]])
      for (const auto& [m, a] : op.alpha[st[1]]) add_to(la, {k[0], k[1], m}, c * d * a);
    for (const auto& [m, a] : op.alpha[st[0]])
      for (const auto& [k, d] : B.delta[st[1]]) add_to(lb, {m, k[0], k[1]}, c * d * a);
  }
  for (const auto& [st1, c1] : R)
    for (const auto& [st2, c2] : R) {
      const Scalar c = c1 * c2;
      const SparseVec& tt = B.mu[st1[1]][st2[1]];
      if (!tt.empty())
        for (const auto& [i, a] : op.alpha[st1[0]])
          for (const auto& [j, b] : op.alpha[st2[0]])
            for (const auto& [k, e] : tt) add_to(ra, {i, j, k}, c * a * b * e);
      const SparseVec& ss = B.mu[st1[0]][st2[0]];
      if (!ss.empty())
        for (const auto& [k, e] : ss)
          for (const auto& [j, b] : op.alpha[st2[1]])
            for (const auto& [i, a] : op.alpha[st1[1]]) add_to(rb, {k, j, i}, c * a * b * e);
    }
  left.count();
  if (la != ra) {
    // report the first differing coefficient
    Sparse3 diff = la;
    for (const auto& [k, c] : ra) add_to(diff, k, -c);
    const auto& [k, c] = *diff.begin();
    left.fail({{"component", {label_of(B, k[0]), label_of(B, k[1]), label_of(B, k[2])}},
               {"lhs", la.count(k) ? la.at(k).str() : "0"}, {"rhs", ra.count(k) ? ra.at(k).str() : "0"}});
  }
  right.count();
  if (lb != rb) {
    Sparse3 diff = lb;
    for (const auto& [k, c] : rb) add_to(diff, k, -c);
    const auto& [k, c] = *diff.begin();
    right.fail({{"component", {label_of(B, k[0]), label_of(B, k[1]), label_of(B, k[2])}},
                {"lhs", lb.count(k) ? lb.at(k).str() : "0"}, {"rhs", rb.count(k) ? rb.at(k).str() : "0"}});
  }

  // (tau Delta(x)) R = R Delta(x)
  for (int x = 0; x < n && !comm.failed(); ++x) {
    comm.count();
    Sparse2 l, r;
    for (const auto& [k, c] : B.delta[x])
      for (const auto& [st, e] : R) {
        const SparseVec& p = B.mu[k[1]][st[0]];
        const SparseVec& q = B.mu[k[0]][st[1]];
        for (const auto& [i, a] : p)
          for (const auto& [j, b] : q) add_to(l, {i, j}, c * e * a * b);
        const SparseVec& p2 = B.mu[st[0]][k[0]];
        const SparseVec& q2 = B.mu[st[1]][k[1]];
        for (const auto& [i, a] : p2)
          for (const auto& [j, b] : q2) add_to(r, {i, j}, c * e * a * b);
      }
    if (l != r) comm.fail({{"x", label_of(B, x)}, {"lhs", render(B, l)}, {"rhs", render(B, r)}});
  }
  Report rep;
  rep.add(left.finish());
  rep.add(right.finish());
  rep.add(comm.finish());
  return rep;
}

Report verify_cobraided_tensor(const FinDimHomBialgebra& B) {
  if (B.r_kind != RKind::form) throw Error("config", "cobraided axioms need an R form");
  Ops op(B);
  const int n = B.dim();
  CheckBuilder left("cobraided/left_multiplicativity", 1);
  CheckBuilder right("cobraided/right_multiplicativity", 1);
  CheckBuilder comm("cobraided/almost_commutativity", 1);

  // R(alpha u (x) v) and R(u (x) alpha v) on basis pairs
  Mat ra(n, n), rb(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ra(i, j) = op.form(op.alpha[i], unit_vec(j));
      rb(i, j) = op.form(unit_vec(i), op.alpha[j]);
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (left.failed() && right.failed()) break;
        if (!left.failed()) {
          left.count();
          Scalar l = op.form(B.mu[x][y], op.alpha[z]), r;
          for (const auto& [k, c] : B.delta[z]) r += c * ra(x, k[0]) * ra(y, k[1]);
          if (l != r)
            left.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"z", label_of(B, z)}, {"lhs", l.str()},
                       {"rhs", r.str()}});
        }
        if (!right.failed()) {
          right.count();
          Scalar l = op.form(op.alpha[x], B.mu[y][z]), r;
          for (const auto& [k, c] : B.delta[x]) r += c * rb(k[0], z) * rb(k[1], y);
          if (l != r)
            right.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"z", label_of(B, z)}, {"lhs", l.str()},
                        {"rhs", r.str()}});
        }
      }

  for (int x = 0; x < n && !comm.failed(); ++x)
    for (int y = 0; y < n; ++y) {
      comm.count();
      SparseVec l, r;
      for (const auto& [kx, cx] : B.delta[x])
        for (const auto& [ky, cy] : B.delta[y]) {
          const Scalar c = cx * cy;
          const Scalar e1 = B.r(kx[1], ky[1]);
          if (!e1.is_zero())
            for (const auto& [k, a] : B.mu[ky[0]][kx[0]]) add_to(l, k, c * e1 * a);
          const Scalar e2 = B.r(kx[0], ky[0]);
          if (!e2.is_zero())
            for (const auto& [k, a] : B.mu[kx[1]][ky[1]]) add_to(r, k, c * e2 * a);
        }
      if (l != r) {
        comm.fail({{"x", label_of(B, x)}, {"y", label_of(B, y)}, {"lhs", render(B, l)}, {"rhs", render(B, r)}});
        break;
      }
    }
  Report rep;
  rep.add(left.finish());
  rep.add(right.finish());
  rep.add(comm.finish());
  return rep;
}

Report check_r_alpha_invariance(const FinDimHomBialgebra& B) {
  if (B.r_kind == RKind::none) throw Error("config", "no R attached");
  Mat twisted = B.r_kind == RKind::element ? B.alpha * B.r * B.alpha.transpose() : B.alpha.transpose() * B.r * B.alpha;
  CheckBuilder check("alpha_invariance", 1);
  check.count(static_cast<long>(B.dim()) * B.dim());
  for (int i = 0; i < B.dim() && !check.failed(); ++i)
    for (int j = 0; j < B.dim(); ++j)
      if (twisted(i, j) != B.r(i, j)) {
        check.fail({{"component", {label_of(B, i), label_of(B, j)}}, {"twisted", twisted(i, j).str()},
                    {"original", B.r(i, j).str()}});
        break;
      }
  Report rep;
  rep.add(check.finish());
  return rep;
}

FinDimHomBialgebra dualize(const FinDimHomBialgebra& B) {
  const int n = B.dim();
  FinDimHomBialgebra D;
  D.field = B.field;
  D.labels = B.labels;
  D.mu.assign(n, std::vector<SparseVec>(n));
  D.delta.assign(n, Sparse2{});
  // e^i e^j = sum_k <Delta(e_k), e_i (x) e_j> e^k
  for (int k = 0; k < n; ++k)
    for (const auto& [ij, c] : B.delta[k]) add_to(D.mu[ij[0]][ij[1]], k, c);
  // Delta(e^k) = sum_{i,j} <e_i e_j, e_k> e^i (x) e^j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : B.mu[i][j]) add_to(D.delta[k], {i, j}, c);
  D.alpha = B.alpha.transpose();
  D.r = B.r;
  D.r_kind = B.r_kind == RKind::element ? RKind::form : B.r_kind == RKind::form ? RKind::element : RKind::none;
  return D;
}

}  // namespace homq
