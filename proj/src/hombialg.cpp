#include "homq/hombialg.hpp"

namespace homq {

namespace {

const char kSep = '\xff';

}  // namespace

HomBialgebra::HomBialgebra(PresentationPtr pres, DeltaTable delta, AlphaTable alpha, bool twisted)
    : pres_(std::move(pres)),
      delta_(std::move(delta)),
      alpha_(std::move(alpha)),
      twisted_(twisted),
      twist_coproduct_(twisted) {
  for (int g = 0; g < pres_->ngens(); ++g)
    if (!delta_.count(g))
      throw Error("config", "no coproduct given for generator '" + pres_->generators()[g] + "'");
  for (auto& [g, t] : delta_) {
    if (g < 0 || g >= pres_->ngens()) throw Error("config", "coproduct table names an unknown generator");
    if (t.arity() != 2) throw Error("config", "coproduct values must be 2-tensors");
    t = pres_->normal_form(t);
  }
  for (auto& [g, p] : alpha_) {
    if (g < 0 || g >= pres_->ngens()) throw Error("config", "twisting table names an unknown generator");
    p = pres_->normal_form(p);
  }
  if (!twisted_ && !alpha_is_identity())
    throw Error("config", "an untwisted bialgebra must have the identity twisting map");
}

bool HomBialgebra::alpha_is_identity() const {
  for (const auto& [g, p] : alpha_)
    if (p != NCPoly::monomial(gen_word(g))) return false;
  return true;
}

HomBialgebra HomBialgebra::with_untwisted_coproduct() const {
  HomBialgebra h(pres_, delta_, alpha_, twisted_);
  h.twist_coproduct_ = false;
  return h;
}

NCPoly HomBialgebra::alpha(const Monomial& m) const {
  if (m.empty()) return NCPoly::monomial(m);
  if (m.size() == 1) {
    auto it = alpha_.find(letter(m, 0));
    return it == alpha_.end() ? NCPoly::monomial(m) : it->second;
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->alpha.find(m);
    if (it != cache_->alpha.end()) return it->second;
  }
  NCPoly r = pres_->multiply(alpha(m.substr(0, m.size() - 1)), alpha(m.substr(m.size() - 1)));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->alpha.emplace(m, r);
  return r;
}

NCPoly HomBialgebra::alpha(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) out += alpha(m) * c;
  return out;
}

NCPoly HomBialgebra::alpha_power(const NCPoly& p, int n) const {
  NCPoly out = p;
  for (int i = 0; i < n; ++i) out = alpha(out);
  return out;
}

TensorElement HomBialgebra::alpha(const TensorElement& t) const {
  TensorElement out(t.arity());
  for (const auto& [legs, c] : t.terms()) {
    if (t.arity() == 1) {
      for (const auto& [a, x] : alpha(legs[0]).terms()) out.add_term({a, "", ""}, c * x);
    } else if (t.arity() == 2) {
      NCPoly b = alpha(legs[1]);
      for (const auto& [a, x] : alpha(legs[0]).terms())
        for (const auto& [bb, y] : b.terms()) out.add_term({a, bb, ""}, c * x * y);
    } else {
      NCPoly b = alpha(legs[1]), d = alpha(legs[2]);
      for (const auto& [a, x] : alpha(legs[0]).terms())
        for (const auto& [bb, y] : b.terms())
          for (const auto& [dd, z] : d.terms()) out.add_term({a, bb, dd}, c * x * y * z);
    }
  }
  return out;
}

TensorElement HomBialgebra::delta_plain(const Monomial& m) const {
  if (m.empty()) return TensorElement::pure({"", "", ""}, 2);
  if (m.size() == 1) return delta_.at(letter(m, 0));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->delta.find(m);
    if (it != cache_->delta.end()) return it->second;
  }
  TensorElement r = pres_->multiply(delta_plain(m.substr(0, m.size() - 1)), delta_.at(letter(m, m.size() - 1)));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->delta.emplace(m, r);
  return r;
}

TensorElement HomBialgebra::delta_plain(const NCPoly& p) const {
  TensorElement out(2);
  for (const auto& [m, c] : p.terms()) {
    TensorElement t = delta_plain(m);
    t *= c;
    out += t;
  }
  return out;
}

NCPoly HomBialgebra::mu(const Monomial& a, const Monomial& b) const {
  if (!twisted_) return pres_->multiply(a, b);
  const std::string key = a + kSep + b;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->product.find(key);
    if (it != cache_->product.end()) return it->second;
  }
  NCPoly r = alpha(pres_->multiply(a, b));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->product.emplace(key, r);
  return r;
}

NCPoly HomBialgebra::mu(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [m, c] : a.terms())
    for (const auto& [n, d] : b.terms()) out += mu(m, n) * (c * d);
  return out;
}

TensorElement HomBialgebra::delta(const Monomial& m) const {
  if (!twist_coproduct_) return delta_plain(m);
  return delta_plain(alpha(m));
}

TensorElement HomBialgebra::delta(const NCPoly& p) const {
  TensorElement out(2);
  for (const auto& [m, c] : p.terms()) {
    TensorElement t = delta(m);
    t *= c;
    out += t;
  }
  return out;
}

TensorElement HomBialgebra::mu(const TensorElement& a, const TensorElement& b) const {
  if (a.arity() != b.arity()) throw Error("config", "tensor arity mismatch");
  TensorElement out(a.arity());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      Scalar c = ca * cb;
      NCPoly p0 = mu(la[0], lb[0]);
      if (a.arity() == 1) {
        for (const auto& [m, x] : p0.terms()) out.add_term({m, "", ""}, c * x);
        continue;
      }
      NCPoly p1 = mu(la[1], lb[1]);
      if (a.arity() == 2) {
        for (const auto& [m, x] : p0.terms())
          for (const auto& [n, y] : p1.terms()) out.add_term({m, n, ""}, c * x * y);
        continue;
      }
      NCPoly p2 = mu(la[2], lb[2]);
      for (const auto& [m, x] : p0.terms())
        for (const auto& [n, y] : p1.terms())
          for (const auto& [o, z] : p2.terms()) out.add_term({m, n, o}, c * x * y * z);
    }
  return out;
}

json HomBialgebra::to_json() const {
  json j = pres_->to_json();
  json d = json::object();
  for (const auto& [g, t] : delta_) {
    json terms = json::array();
    for (const auto& [legs, c] : t.terms())
      terms.push_back({{"legs", {pres_->monomial_text(legs[0]), pres_->monomial_text(legs[1])}}, {"coef", c.str()}});
    d[pres_->generators()[g]] = terms;
  }
  j["delta"] = d;
  json a = json::object();
  for (const auto& [g, p] : alpha_) a[pres_->generators()[g]] = pres_->to_json(p);
  j["alpha"] = a;
  j["twisted"] = twisted_;
  return j;
}

// ---------------------------------------------------------------- operations

NCPoly apply_endomorphism(const Presentation& pres, const AlphaTable& endo, const NCPoly& p) {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) {
    NCPoly img = NCPoly::constant(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto it = endo.find(letter(m, i));
      img = pres.multiply(img, it == endo.end() ? NCPoly::monomial(m.substr(i, 1)) : it->second);
    }
    out += img;
  }
  return out;
}

TensorElement delta(const HomBialgebra& H, const NCPoly& p) { return H.delta(p); }

NCPoly apply_alpha(const HomBialgebra& H, const NCPoly& p) { return H.alpha(p); }

Report verify_morphism(const AlphaTable& endo, const HomBialgebra& H, int degree) {
  const Presentation& P = H.pres();
  CheckBuilder rel("morphism/relations", degree);
  for (const auto& r : P.rules()) {
    rel.count();
    NCPoly diff = apply_endomorphism(P, endo, NCPoly::monomial(r.lhs)) - apply_endomorphism(P, endo, r.rhs);
    if (!diff.is_zero()) {
      rel.fail({{"relation", P.monomial_text(r.lhs) + " -> " + P.render(r.rhs)},
                {"image_difference", P.render(diff)}});
      break;
    }
  }
  CheckBuilder co("morphism/coproduct", degree);
  for (int g = 0; g < P.ngens(); ++g) {
    co.count();
    const TensorElement& d = H.delta_table().at(g);
    TensorElement lhs(2);
    for (const auto& [legs, c] : d.terms()) {
      NCPoly a = apply_endomorphism(P, endo, NCPoly::monomial(legs[0]));
      NCPoly b = apply_endomorphism(P, endo, NCPoly::monomial(legs[1]));
      TensorElement t = tensor(a, b);
      t *= c;
      lhs += t;
    }
    auto it = endo.find(g);
    NCPoly image = it == endo.end() ? NCPoly::monomial(gen_word(g)) : it->second;
    TensorElement rhs = H.delta_plain(image);
    if (lhs != rhs) {
      co.fail({{"generator", P.generators()[g]}, {"lhs", P.render(lhs)}, {"rhs", P.render(rhs)}});
      break;
    }
  }
  Report rep;
  rep.add(rel.finish());
  rep.add(co.finish());
  return rep;
}

HomBialgebra twist_hom_bialgebra(const HomBialgebra& B, const AlphaTable& endo) {
  if (B.twisted()) throw Error("config", "twisting expects an untwisted bialgebra");
  Report r = verify_morphism(endo, B, B.pres().max_degree());
  if (!r.passed()) {
    for (const auto& c : r.checks)
      if (c.status == Status::fail)
        throw Error("rejected", "twisting map is not a bialgebra morphism (" + c.name + "): " + c.witness->dump());
  }
  return HomBialgebra(B.pres_ptr(), B.delta_table(), endo, true);
}

std::vector<Monomial> verification_basis(const Presentation& pres, int degree, const std::vector<bool>& allowed) {
  std::vector<Monomial> out;
  for (auto& m : graded_basis(pres, degree)) {
    bool ok = true;
    if (!allowed.empty())
      for (std::size_t i = 0; i < m.size() && ok; ++i) ok = allowed[letter(m, i)];
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

Report verify_hom_bialgebra(const HomBialgebra& H, int degree) {
  const Presentation& P = H.pres();
  const auto basis = verification_basis(P, degree);
  auto txt = [&](const Monomial& m) { return P.monomial_text(m); };

  std::vector<NCPoly> A;
  std::vector<TensorElement> D;
  for (const auto& x : basis) {
    A.push_back(H.alpha(x));
    D.push_back(H.delta(x));
  }
  const std::size_t n = basis.size();

  CheckBuilder mult("hom_bialgebra/multiplicativity", degree);
  CheckBuilder compat("hom_bialgebra/compatibility", degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly xy = H.mu(basis[i], basis[j]);
      if (!mult.failed()) {
        mult.count();
        NCPoly l = H.alpha(xy), r = H.mu(A[i], A[j]);
        if (l != r) mult.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"lhs", P.render(l)}, {"rhs", P.render(r)}});
      }
      if (!compat.failed()) {
        compat.count();
        TensorElement l = H.delta(xy), r = H.mu(D[i], D[j]);
        if (l != r)
          compat.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"lhs", P.render(l)}, {"rhs", P.render(r)}});
      }
    }

  CheckBuilder assoc("hom_bialgebra/hom_associativity", degree);
  for (std::size_t i = 0; i < n && !assoc.failed(); ++i)
    for (std::size_t j = 0; j < n && !assoc.failed(); ++j) {
      NCPoly xy = H.mu(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k) {
        assoc.count();
        NCPoly l = H.mu(A[i], H.mu(basis[j], basis[k]));
        NCPoly r = H.mu(xy, A[k]);
        if (l != r) {
          assoc.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"z", txt(basis[k])},
                      {"lhs", P.render(l)}, {"rhs", P.render(r)}});
          break;
        }
      }
    }

  CheckBuilder comult("hom_bialgebra/comultiplicativity", degree);
  CheckBuilder coassoc("hom_bialgebra/hom_coassociativity", degree);
  for (std::size_t i = 0; i < n; ++i) {
    if (!comult.failed()) {
      comult.count();
      TensorElement l = H.delta(A[i]), r = H.alpha(D[i]);
      if (l != r) comult.fail({{"x", txt(basis[i])}, {"lhs", P.render(l)}, {"rhs", P.render(r)}});
    }
    if (!coassoc.failed()) {
      coassoc.count();
      TensorElement l(3), r(3);
      for (const auto& [legs, c] : D[i].terms()) {
        // (alpha (x) Delta) and (Delta (x) alpha)
        NCPoly a1 = H.alpha(legs[0]);
        TensorElement d2 = H.delta(legs[1]);
        for (const auto& [m, x] : a1.terms())
          for (const auto& [dl, y] : d2.terms()) l.add_term({m, dl[0], dl[1]}, c * x * y);
        TensorElement d1 = H.delta(legs[0]);
        NCPoly a2 = H.alpha(legs[1]);
        for (const auto& [dl, y] : d1.terms())
          for (const auto& [m, x] : a2.terms()) r.add_term({dl[0], dl[1], m}, c * x * y);
      }
      if (l != r) coassoc.fail({{"x", txt(basis[i])}, {"lhs", P.render(l)}, {"rhs", P.render(r)}});
    }
  }

  Report rep;
  for (auto* c : {&mult, &assoc, &comult, &coassoc, &compat}) rep.add(c->finish());
  return rep;
}

HomBialgebra hom_bialgebra_from_json(const json& j, const PresentationPtr& pres) {
  try {
    const Presentation& P = *pres;
    DeltaTable delta;
    for (const auto& [name, terms] : j.at("delta").items()) {
      int g = P.generator_index(name);
      if (g < 0) throw Error("malformed_json", "delta names unknown generator '" + name + "'");
      TensorElement t(2);
      for (const auto& term : terms) {
        const auto& legs = term.at("legs");
        if (legs.size() != 2) throw Error("malformed_json", "delta legs must have two entries");
        t.add_term({P.parse_monomial(legs[0].get<std::string>()), P.parse_monomial(legs[1].get<std::string>()), ""},
                   P.scalar(term.at("coef").get<std::string>()));
      }
      delta[g] = t;
    }
    AlphaTable alpha;
    if (j.contains("alpha"))
      for (const auto& [name, terms] : j.at("alpha").items()) {
        int g = P.generator_index(name);
        if (g < 0) throw Error("malformed_json", "alpha names unknown generator '" + name + "'");
        NCPoly p;
        for (const auto& term : terms)
          p.add_term(P.parse_monomial(term.at("mono").get<std::string>()), P.scalar(term.at("coef").get<std::string>()));
        alpha[g] = p;
      }
    return HomBialgebra(pres, delta, alpha, j.value("twisted", false));
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("instance: ") + e.what());
  }
}

}  // namespace homq
