#include "homq/cobraid.hpp"

namespace homq {

namespace {

const char kSep = '\xff';

std::string pair_text(const Presentation& P, int g, int h) {
  return "(" + P.generators()[g] + ", " + P.generators()[h] + ")";
}

}  // namespace

json CobraidingForm::to_json(const Presentation& pres) const {
  json j = json::object();
  json table = json::array();
  for (const auto& [gh, v] : gen_table)
    table.push_back({{"left", pres.generators()[gh.first]}, {"right", pres.generators()[gh.second]}, {"value", v.str()}});
  j["gen_table"] = table;
  json ul = json::object(), ur = json::object();
  for (const auto& [g, v] : unit_left) ul[pres.generators()[g]] = v.str();
  for (const auto& [g, v] : unit_right) ur[pres.generators()[g]] = v.str();
  j["unit_left"] = ul;
  j["unit_right"] = ur;
  j["unit_unit"] = unit_unit.str();
  return j;
}

CobraidingForm cobraiding_form_from_json(const json& j, const Presentation& pres) {
  try {
    CobraidingForm R;
    auto gen = [&](const std::string& name) {
      int g = pres.generator_index(name);
      if (g < 0) throw Error("malformed_json", "R table names unknown generator '" + name + "'");
      return g;
    };
    for (const auto& e : j.at("gen_table"))
      R.gen_table[{gen(e.at("left").get<std::string>()), gen(e.at("right").get<std::string>())}] =
          pres.scalar(e.at("value").get<std::string>());
    if (j.contains("unit_left"))
      for (const auto& [k, v] : j.at("unit_left").items()) R.unit_left[gen(k)] = pres.scalar(v.get<std::string>());
    if (j.contains("unit_right"))
      for (const auto& [k, v] : j.at("unit_right").items()) R.unit_right[gen(k)] = pres.scalar(v.get<std::string>());
    if (j.contains("unit_unit")) R.unit_unit = pres.scalar(j.at("unit_unit").get<std::string>());
    return R;
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("R: ") + e.what());
  }
}

CobraidedHomBialgebra::CobraidedHomBialgebra(HomBialgebraPtr H, CobraidingForm R, int r_power,
                                             std::vector<bool> r_generators)
    : H_(std::move(H)), R_(std::move(R)), r_power_(r_power), r_generators_(std::move(r_generators)) {
  if (r_power_ < 0) throw Error("config", "R power must be nonnegative");
  if (!r_generators_.empty() && static_cast<int>(r_generators_.size()) != H_->pres().ngens())
    throw Error("config", "generator mask has the wrong length");
  for (const auto& [g, t] : H_->delta_table())
    for (const auto& [legs, c] : t.terms())
      if (legs[0].size() > 1 || legs[1].size() > 1)
        throw Error("config", "R recursion needs coproducts of generators with legs of length <= 1 (generator '" +
                                  H_->pres().generators()[g] + "')");
}

Scalar CobraidedHomBialgebra::eval_base(const Monomial& m, const Monomial& n, RecursionOrder order) const {
  const Presentation& P = H_->pres();
  if (m.empty()) {
    if (n.empty()) return R_.unit_unit;
    Scalar r(1);
    for (std::size_t i = 0; i < n.size(); ++i) {
      auto it = R_.unit_left.find(letter(n, i));
      if (it == R_.unit_left.end())
        throw Error("config", "R(1, " + P.generators()[letter(n, i)] + ") is not given");
      r *= it->second;
    }
    return r;
  }
  if (n.empty()) {
    Scalar r(1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto it = R_.unit_right.find(letter(m, i));
      if (it == R_.unit_right.end())
        throw Error("config", "R(" + P.generators()[letter(m, i)] + ", 1) is not given");
      r *= it->second;
    }
    return r;
  }
  if (m.size() == 1 && n.size() == 1) {
    auto it = R_.gen_table.find({letter(m, 0), letter(n, 0)});
    if (it == R_.gen_table.end())
      throw Error("config", "R has no value on the generator pair " + pair_text(P, letter(m, 0), letter(n, 0)));
    return it->second;
  }

  std::string key;
  key.reserve(m.size() + n.size() + 2);
  key += order == RecursionOrder::left_first ? 'L' : 'R';
  key += m;
  key += kSep;
  key += n;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->base.find(key);
    if (it != cache_->base.end()) return it->second;
  }

  Scalar r;
  bool split_right = order == RecursionOrder::left_first ? m.size() == 1 : n.size() >= 2;
  if (split_right) {
    // R(x (x) y z) = sum R(x1 (x) z) R(x2 (x) y), y the first letter
    const Monomial y = n.substr(0, 1), z = n.substr(1);
    for (const auto& [legs, c] : H_->delta_plain(m).terms()) {
      Scalar a = eval_base(legs[0], z, order);
      if (a.is_zero()) continue;
      Scalar b = eval_base(legs[1], y, order);
      if (!b.is_zero()) r += c * a * b;
    }
  } else {
    // R(g m' (x) n) = sum R(g (x) n1) R(m' (x) n2)
    const Monomial g = m.substr(0, 1), rest = m.substr(1);
    for (const auto& [legs, c] : H_->delta_plain(n).terms()) {
      Scalar a = eval_base(g, legs[0], order);
      if (a.is_zero()) continue;
      Scalar b = eval_base(rest, legs[1], order);
      if (!b.is_zero()) r += c * a * b;
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->base.emplace(std::move(key), r);
  return r;
}

Scalar CobraidedHomBialgebra::eval(const Monomial& m, const Monomial& n) const {
  if (r_power_ == 0) return eval_base(m, n);
  const std::string key = m + kSep + n;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->twisted.find(key);
    if (it != cache_->twisted.end()) return it->second;
  }
  NCPoly u = H_->alpha_power(NCPoly::monomial(m), r_power_);
  NCPoly v = H_->alpha_power(NCPoly::monomial(n), r_power_);
  Scalar r;
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      Scalar e = eval_base(a, b);
      if (!e.is_zero()) r += x * y * e;
    }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->twisted.emplace(key, r);
  return r;
}

Scalar CobraidedHomBialgebra::eval(const Monomial& m, const NCPoly& v) const {
  Scalar r;
  for (const auto& [b, y] : v.terms()) {
    Scalar e = eval(m, b);
    if (!e.is_zero()) r += y * e;
  }
  return r;
}

Scalar CobraidedHomBialgebra::eval(const NCPoly& u, const Monomial& n) const {
  Scalar r;
  for (const auto& [a, x] : u.terms()) {
    Scalar e = eval(a, n);
    if (!e.is_zero()) r += x * e;
  }
  return r;
}

Scalar CobraidedHomBialgebra::eval(const NCPoly& u, const NCPoly& v) const {
  Scalar r;
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      Scalar e = eval(a, b);
      if (!e.is_zero()) r += x * y * e;
    }
  return r;
}

CobraidedHomBialgebra CobraidedHomBialgebra::with_form(CobraidingForm R) const {
  return CobraidedHomBialgebra(H_, std::move(R), r_power_, r_generators_);
}

CobraidedHomBialgebra CobraidedHomBialgebra::with_hom_bialgebra(HomBialgebraPtr H) const {
  return CobraidedHomBialgebra(std::move(H), R_, r_power_, r_generators_);
}

CobraidedHomBialgebra CobraidedHomBialgebra::with_r_power(int n) const {
  return CobraidedHomBialgebra(H_, R_, n, r_generators_);
}

json CobraidedHomBialgebra::to_json() const {
  json j = H_->to_json();
  j["R"] = R_.to_json(H_->pres());
  if (r_power_ != 0) j["r_power"] = r_power_;
  if (!r_generators_.empty()) {
    json g = json::array();
    for (int i = 0; i < H_->pres().ngens(); ++i)
      if (r_generators_[i]) g.push_back(H_->pres().generators()[i]);
    j["r_generators"] = g;
  }
  return j;
}

Scalar eval_R(const CobraidedHomBialgebra& C, const NCPoly& u, const NCPoly& v) { return C.eval(u, v); }

// ---------------------------------------------------------------- checks

Report verify_cobraided(const CobraidedHomBialgebra& C, int degree) {
  const HomBialgebra& H = C.H();
  const Presentation& P = H.pres();
  const auto basis = verification_basis(P, degree, C.r_generators());
  const std::size_t n = basis.size();
  auto txt = [&](const Monomial& m) { return P.monomial_text(m); };

  std::vector<NCPoly> A;
  std::vector<TensorElement> D;
  for (const auto& x : basis) {
    A.push_back(H.alpha(x));
    D.push_back(H.delta(x));
  }

  CheckBuilder left("cobraided/left_multiplicativity", degree);
  CheckBuilder right("cobraided/right_multiplicativity", degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly xy = H.mu(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (!left.failed()) {
          // R(xy (x) alpha z) = sum R(alpha x (x) z1) R(alpha y (x) z2)
          left.count();
          Scalar l = C.eval(xy, A[k]);
          Scalar r;
          for (const auto& [legs, c] : D[k].terms()) {
            Scalar a = C.eval(A[i], legs[0]);
            if (a.is_zero()) continue;
            r += c * a * C.eval(A[j], legs[1]);
          }
          if (l != r)
            left.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"z", txt(basis[k])}, {"lhs", l.str()}, {"rhs", r.str()}});
        }
        if (!right.failed()) {
          // R(alpha x (x) y z) = sum R(x1 (x) alpha z) R(x2 (x) alpha y)
          right.count();
          Scalar l = C.eval(A[i], H.mu(basis[j], basis[k]));
          Scalar r;
          for (const auto& [legs, c] : D[i].terms()) {
            Scalar a = C.eval(legs[0], A[k]);
            if (a.is_zero()) continue;
            r += c * a * C.eval(legs[1], A[j]);
          }
          if (l != r)
            right.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"z", txt(basis[k])}, {"lhs", l.str()}, {"rhs", r.str()}});
        }
      }
    }

  CheckBuilder comm("cobraided/almost_commutativity", degree);
  for (std::size_t i = 0; i < n && !comm.failed(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // sum y1 x1 R(x2 (x) y2) = sum R(x1 (x) y1) x2 y2
      comm.count();
      NCPoly l, r;
      for (const auto& [lx, cx] : D[i].terms())
        for (const auto& [ly, cy] : D[j].terms()) {
          Scalar c = cx * cy;
          Scalar e1 = C.eval(lx[1], ly[1]);
          if (!e1.is_zero()) l += H.mu(ly[0], lx[0]) * (c * e1);
          Scalar e2 = C.eval(lx[0], ly[0]);
          if (!e2.is_zero()) r += H.mu(lx[1], ly[1]) * (c * e2);
        }
      if (l != r) {
        comm.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"lhs", P.render(l)}, {"rhs", P.render(r)}});
        break;
      }
    }

  Report rep;
  rep.add(left.finish());
  rep.add(right.finish());
  rep.add(comm.finish());
  return rep;
}

Report verify_oqhybe(const CobraidedHomBialgebra& C, int degree) {
  const HomBialgebra& H = C.H();
  const Presentation& P = H.pres();
  const auto basis = verification_basis(P, degree, C.r_generators());
  const std::size_t n = basis.size();
  auto txt = [&](const Monomial& m) { return P.monomial_text(m); };

  std::vector<TensorElement> D;
  for (const auto& x : basis) D.push_back(H.delta(x));
  // R(u (x) alpha v) and R(alpha u (x) v) on coproduct legs
  auto r_alpha_right = [&](const Monomial& u, const Monomial& v) { return C.eval(u, H.alpha(v)); };
  auto r_alpha_left = [&](const Monomial& u, const Monomial& v) { return C.eval(H.alpha(u), v); };

  CheckBuilder first("oqhybe/first", degree);
  CheckBuilder second("oqhybe/second", degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (first.failed() && second.failed()) break;
        Scalar l1, r1, l2, r2;
        for (const auto& [lx, cx] : D[i].terms())
          for (const auto& [ly, cy] : D[j].terms()) {
            Scalar cxy = cx * cy;
            // first: R(x1, a y1) R(x2, a z1) R(y2, z2) = R(y1, z1) R(x1, a z2) R(x2, a y2)
            Scalar fa = first.failed() ? Scalar() : r_alpha_right(lx[0], ly[0]);
            Scalar fb = first.failed() ? Scalar() : r_alpha_right(lx[1], ly[1]);
            // second: R(x1, y1) R(a x2, z1) R(a y2, z2) = R(a y1, z1) R(a x1, z2) R(x2, y2)
            Scalar sa = second.failed() ? Scalar() : C.eval(lx[0], ly[0]);
            Scalar sb = second.failed() ? Scalar() : C.eval(lx[1], ly[1]);
            for (const auto& [lz, cz] : D[k].terms()) {
              Scalar c = cxy * cz;
              if (!fa.is_zero()) {
                Scalar t = C.eval(ly[1], lz[1]);
                if (!t.is_zero()) {
                  Scalar u = r_alpha_right(lx[1], lz[0]);
                  if (!u.is_zero()) l1 += c * fa * u * t;
                }
              }
              if (!fb.is_zero()) {
                Scalar t = C.eval(ly[0], lz[0]);
                if (!t.is_zero()) {
                  Scalar u = r_alpha_right(lx[0], lz[1]);
                  if (!u.is_zero()) r1 += c * t * u * fb;
                }
              }
              if (!sa.is_zero()) {
                Scalar u = r_alpha_left(lx[1], lz[0]);
                if (!u.is_zero()) {
                  Scalar t = r_alpha_left(ly[1], lz[1]);
                  if (!t.is_zero()) l2 += c * sa * u * t;
                }
              }
              if (!sb.is_zero()) {
                Scalar u = r_alpha_left(ly[0], lz[0]);
                if (!u.is_zero()) {
                  Scalar t = r_alpha_left(lx[0], lz[1]);
                  if (!t.is_zero()) r2 += c * u * t * sb;
                }
              }
            }
          }
        if (!first.failed()) {
          first.count();
          if (l1 != r1)
            first.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"z", txt(basis[k])}, {"lhs", l1.str()}, {"rhs", r1.str()}});
        }
        if (!second.failed()) {
          second.count();
          if (l2 != r2)
            second.fail({{"x", txt(basis[i])}, {"y", txt(basis[j])}, {"z", txt(basis[k])}, {"lhs", l2.str()}, {"rhs", r2.str()}});
        }
      }
  Report rep;
  rep.add(first.finish());
  rep.add(second.finish());
  return rep;
}

Report check_alpha_invariance(const CobraidedHomBialgebra& C, int degree) {
  const HomBialgebra& H = C.H();
  const Presentation& P = H.pres();
  const auto basis = verification_basis(P, degree, C.r_generators());
  std::vector<NCPoly> A;
  for (const auto& x : basis) A.push_back(H.alpha(x));
  CheckBuilder check("alpha_invariance", degree);
  for (std::size_t i = 0; i < basis.size() && !check.failed(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      check.count();
      Scalar l = C.eval(A[i], A[j]), r = C.eval(basis[i], basis[j]);
      if (l != r) {
        check.fail({{"x", P.monomial_text(basis[i])}, {"y", P.monomial_text(basis[j])},
                    {"R(alpha x, alpha y)", l.str()}, {"R(x, y)", r.str()}});
        break;
      }
    }
  Report rep;
  rep.add(check.finish());
  return rep;
}

Report injectivity_certificate(const HomBialgebra& H, int degree) {
  const Presentation& P = H.pres();
  const auto basis = graded_basis(P, degree);
  CheckBuilder check("alpha_injective", degree);
  // sparse rows reduced against pivots keyed by their leading monomial
  std::map<Monomial, NCPoly> pivots;
  for (const auto& b : basis) {
    check.count();
    NCPoly row = H.alpha(b);
    while (!row.is_zero()) {
      const Monomial lead = row.terms().begin()->first;
      const Scalar c = row.terms().begin()->second;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, row * c.inverse());
        break;
      }
      row -= it->second * c;
    }
    if (row.is_zero()) {
      check.fail({{"word", P.monomial_text(b)},
                  {"reason", "image under alpha lies in the span of images of earlier basis words"}});
      break;
    }
  }
  Report rep;
  rep.add(check.finish());
  return rep;
}

CobraidedHomBialgebra twist_R_power(const CobraidedHomBialgebra& C, int n) {
  if (n < 0) throw Error("config", "R power must be nonnegative");
  if (n == 0) return C;
  Report cert = injectivity_certificate(C.H(), C.pres().max_degree());
  if (!cert.passed())
    throw Error("rejected", "twisting map is not injective: " + cert.checks.front().witness->dump());
  return C.with_r_power(C.r_power() + n);
}

}  // namespace homq
