#include "homq/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace homq {

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::monomial(const Monomial& m, const Scalar& c) {
  NCPoly p;
  p.add_term(m, c);
  return p;
}

Scalar NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

// ---------------------------------------------------------------- tensors

TensorElement TensorElement::pure(const Legs& legs, int arity, const Scalar& c) {
  TensorElement t(arity);
  t.add_term(legs, c);
  return t;
}

void TensorElement::add_term(const Legs& legs, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

TensorElement tensor(const NCPoly& a, const NCPoly& b) {
  TensorElement t(2);
  for (const auto& [m, c] : a.terms())
    for (const auto& [n, d] : b.terms()) t.add_term({m, n, ""}, c * d);
  return t;
}

TensorElement tensor(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  TensorElement t(3);
  for (const auto& [m, x] : a.terms())
    for (const auto& [n, y] : b.terms())
      for (const auto& [o, z] : c.terms()) t.add_term({m, n, o}, x * y * z);
  return t;
}

// ---------------------------------------------------------------- presentations

Presentation::Presentation(FieldPtr field, std::vector<std::string> generators,
                           std::vector<Rule> rules, int max_degree, std::vector<int> weights)
    : field_(std::move(field)),
      gens_(std::move(generators)),
      rules_(std::move(rules)),
      max_degree_(max_degree),
      weights_(std::move(weights)) {
  if (gens_.empty()) throw Error("config", "a presentation needs at least one generator");
  if (gens_.size() > 250) throw Error("config", "too many generators");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.empty() || !std::isalpha(static_cast<unsigned char>(g[0])))
      throw Error("config", "invalid generator name '" + g + "'");
    for (char c : g)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error("config", "invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error("config", "duplicate generator '" + g + "'");
    if (g.size() > 1) single_char_names_ = false;
  }
  if (weights_.empty()) weights_.assign(gens_.size(), 1);
  if (weights_.size() != gens_.size()) throw Error("config", "one weight per generator is required");
  for (int w : weights_)
    if (w < 1) throw Error("config", "generator weights must be positive");

  rules_by_last_.assign(gens_.size(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.empty()) throw Error("config", "rule with an empty left side");
    for (std::size_t k = 0; k < r.lhs.size(); ++k)
      if (letter(r.lhs, k) >= ngens()) throw Error("config", "rule uses an unknown generator");
    for (const auto& [m, c] : r.rhs.terms()) {
      for (std::size_t k = 0; k < m.size(); ++k)
        if (letter(m, k) >= ngens()) throw Error("config", "rule uses an unknown generator");
      if (!less(m, r.lhs))
        throw Error("config", "rule " + monomial_text(r.lhs) + " -> " + render(r.rhs) +
                                  " does not decrease: " + monomial_text(m) +
                                  " is not below the left side");
    }
    rules_by_last_[letter(r.lhs, r.lhs.size() - 1)].push_back(static_cast<int>(i));
  }
}

int Presentation::generator_index(const std::string& name) const {
  for (int i = 0; i < ngens(); ++i)
    if (gens_[i] == name) return i;
  return -1;
}

int Presentation::weight(const Monomial& m) const {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += weights_[letter(m, i)];
  return w;
}

bool Presentation::less(const Monomial& a, const Monomial& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

Monomial Presentation::parse_monomial(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1" || s.empty()) return Monomial();
  Monomial out;
  std::size_t i = 0;
  auto power = [&](int g) {
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw ParseError("syntax", i, "expected an exponent in monomial '" + text + "'");
      e = std::stoi(s.substr(start, i - start));
    }
    out.append(static_cast<std::size_t>(e), static_cast<char>(g));
  };
  while (i < s.size()) {
    if (s[i] == '*') {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::string name;
    if (single_char_names_) {
      name = s.substr(i++, 1);
    } else {
      while (i < s.size() && s[i] != '*' && s[i] != '^') ++i;
      name = s.substr(start, i - start);
    }
    int g = generator_index(name);
    if (g < 0) throw ParseError("syntax", start, "unknown generator '" + name + "' in monomial '" + text + "'");
    power(g);
  }
  return out;
}

std::string Presentation::monomial_text(const Monomial& m) const {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i && !single_char_names_) s += "*";
    s += gens_[letter(m, i)];
  }
  return s;
}

namespace {

std::string coefficient_prefix(const Scalar& c) {
  std::string s = c.str();
  bool simple = s.find_first_of("+-/ ", 1) == std::string::npos;
  return simple ? s : "(" + s + ")";
}

}  // namespace

std::string Presentation::render(const NCPoly& p) const {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& x, const auto& y) { return less(y.first, x.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string piece;
    if (c.is_one()) {
      piece = monomial_text(m);
    } else if ((-c).is_one()) {
      piece = "-" + monomial_text(m);
    } else {
      piece = coefficient_prefix(c) + (m.empty() ? "" : "*" + monomial_text(m));
    }
    if (!out.empty()) out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
  }
  return out;
}

std::string Presentation::render(const TensorElement& t) const {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [legs, c] : t.terms()) {
    std::string piece;
    for (int k = 0; k < t.arity(); ++k) piece += (k ? " (x) " : "") + monomial_text(legs[k]);
    if (!c.is_one()) piece = coefficient_prefix(c) + "*[" + piece + "]";
    out += (out.empty() ? "" : " + ") + piece;
  }
  return out;
}

json Presentation::to_json(const NCPoly& p) const {
  json arr = json::array();
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& x, const auto& y) { return less(y.first, x.first); });
  for (const auto& [m, c] : terms) arr.push_back({{"mono", monomial_text(m)}, {"coef", c.str()}});
  return arr;
}

NCPoly Presentation::gen(const std::string& name) const {
  int g = generator_index(name);
  if (g < 0) throw Error("config", "unknown generator '" + name + "'");
  return NCPoly::monomial(gen_word(g));
}

NCPoly Presentation::poly(const std::vector<std::pair<std::string, std::string>>& terms) const {
  NCPoly p;
  for (const auto& [mono, coef] : terms) p.add_term(parse_monomial(mono), scalar(coef));
  return p;
}

bool Presentation::is_normal(const Monomial& m) const {
  for (const auto& r : rules_)
    if (m.find(r.lhs) != Monomial::npos) return false;
  return true;
}

// Rewrites w = (prefix)(last letter). The prefix is reduced first, so a rule
// can only match at the end of a normal prefix followed by the last letter.
NCPoly Presentation::reduce_word(const Monomial& w) const {
  if (w.empty()) return NCPoly::monomial(w);
  const Monomial prefix = w.substr(0, w.size() - 1);
  const char g = w.back();
  NCPoly p = prefix.empty() ? NCPoly::monomial(prefix) : normal_form(prefix);
  bool prefix_normal = p.size() == 1 && p.terms().begin()->first == prefix &&
                       p.terms().begin()->second.is_one();
  if (prefix_normal) {
    for (int ri : rules_by_last_[static_cast<unsigned char>(g)]) {
      const Rule& r = rules_[ri];
      if (r.lhs.size() > w.size() || w.compare(w.size() - r.lhs.size(), r.lhs.size(), r.lhs) != 0)
        continue;
      const Monomial pre = w.substr(0, w.size() - r.lhs.size());
      NCPoly out;
      for (const auto& [m, c] : r.rhs.terms()) out += normal_form(pre + m) * c;
      return out;
    }
    return NCPoly::monomial(w);
  }
  NCPoly out;
  for (const auto& [u, c] : p.terms()) out += normal_form(u + g) * c;
  return out;
}

NCPoly Presentation::normal_form(const Monomial& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->nf.find(w);
    if (it != cache_->nf.end()) return it->second;
  }
  NCPoly r = reduce_word(w);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->nf.emplace(w, r);
  return r;
}

NCPoly Presentation::normal_form(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) out += normal_form(m) * c;
  return out;
}

NCPoly Presentation::multiply(const Monomial& a, const Monomial& b) const { return normal_form(a + b); }

NCPoly Presentation::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [m, c] : a.terms())
    for (const auto& [n, d] : b.terms()) out += normal_form(m + n) * (c * d);
  return out;
}

namespace {

void expand_legs(const std::array<NCPoly, 3>& legs, int arity, const Scalar& coef, TensorElement& out) {
  if (arity == 1) {
    for (const auto& [m, c] : legs[0].terms()) out.add_term({m, "", ""}, coef * c);
  } else if (arity == 2) {
    for (const auto& [m, c] : legs[0].terms())
      for (const auto& [n, d] : legs[1].terms()) out.add_term({m, n, ""}, coef * c * d);
  } else {
    for (const auto& [m, c] : legs[0].terms())
      for (const auto& [n, d] : legs[1].terms())
        for (const auto& [o, e] : legs[2].terms()) out.add_term({m, n, o}, coef * c * d * e);
  }
}

}  // namespace

TensorElement Presentation::normal_form(const TensorElement& t) const {
  TensorElement out(t.arity());
  for (const auto& [legs, c] : t.terms()) {
    std::array<NCPoly, 3> nf;
    for (int k = 0; k < t.arity(); ++k) nf[k] = normal_form(legs[k]);
    expand_legs(nf, t.arity(), c, out);
  }
  return out;
}

TensorElement Presentation::multiply(const TensorElement& a, const TensorElement& b) const {
  if (a.arity() != b.arity()) throw Error("config", "tensor arity mismatch");
  TensorElement out(a.arity());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      std::array<NCPoly, 3> nf;
      for (int k = 0; k < a.arity(); ++k) nf[k] = normal_form(la[k] + lb[k]);
      expand_legs(nf, a.arity(), ca * cb, out);
    }
  return out;
}

json Presentation::to_json() const {
  json j = json::object();
  j["generators"] = gens_;
  if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w != 1; })) j["weights"] = weights_;
  json rules = json::array();
  for (const auto& r : rules_) rules.push_back({{"lhs", monomial_text(r.lhs)}, {"rhs", to_json(r.rhs)}});
  j["rules"] = rules;
  j["max_degree"] = max_degree_;
  return j;
}

NCPoly normal_form(const NCPoly& p, const Presentation& pres) { return pres.normal_form(p); }

NCPoly multiply(const NCPoly& p, const NCPoly& r, const Presentation& pres) { return pres.multiply(p, r); }

// ---------------------------------------------------------------- bases

namespace {

// normal words of each length; an appended letter can only create a rule
// match at the end
std::vector<std::vector<Monomial>> grow_basis(const Presentation& pres, int max_len, bool stop_when_empty) {
  std::vector<std::vector<Monomial>> levels{{Monomial()}};
  for (int d = 1; d <= max_len; ++d) {
    std::vector<Monomial> next;
    for (const auto& u : levels.back())
      for (int g = 0; g < pres.ngens(); ++g) {
        Monomial w = u + static_cast<char>(g);
        bool reducible = false;
        for (const auto& r : pres.rules())
          if (r.lhs.size() <= w.size() && w.compare(w.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            reducible = true;
            break;
          }
        if (!reducible) next.push_back(std::move(w));
      }
    if (next.empty() && stop_when_empty) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<Monomial> graded_basis(const Presentation& pres, int degree) {
  std::vector<Monomial> out;
  for (auto& level : grow_basis(pres, degree, true))
    for (auto& m : level) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return pres.less(a, b); });
  return out;
}

std::vector<Monomial> finite_basis(const Presentation& pres, int cap) {
  auto levels = grow_basis(pres, cap + 1, true);
  if (static_cast<int>(levels.size()) > cap + 1)
    throw Error("rejected", "normal monomials keep growing past length " + std::to_string(cap) +
                                "; the algebra is not finite-dimensional within the cap");
  std::vector<Monomial> out;
  for (auto& level : levels)
    for (auto& m : level) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return pres.less(a, b); });
  return out;
}

// ---------------------------------------------------------------- confluence

Report check_local_confluence(const Presentation& pres, int degree) {
  CheckBuilder check("local_confluence", degree);
  struct Critical {
    Monomial word;
    NCPoly left, right;  // the two one-step reducts
  };
  std::vector<Critical> pairs;
  const auto& rules = pres.rules();
  auto mono = [](const Monomial& m) { return NCPoly::monomial(m); };
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Monomial& li = rules[i].lhs;
      const Monomial& lj = rules[j].lhs;
      // suffix of li overlaps prefix of lj
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
        Monomial tail = lj.substr(k), head = li.substr(0, li.size() - k);
        pairs.push_back({li + tail, pres.multiply(rules[i].rhs, mono(tail)),
                         pres.multiply(mono(head), rules[j].rhs)});
      }
      // lj inside li
      if (i == j) continue;
      for (std::size_t p = li.find(lj); p != Monomial::npos; p = li.find(lj, p + 1)) {
        Monomial head = li.substr(0, p), tail = li.substr(p + lj.size());
        pairs.push_back({li, rules[i].rhs, pres.multiply(pres.multiply(mono(head), rules[j].rhs), mono(tail))});
      }
    }

  // every ambient word u . w . v within the degree bound
  std::vector<std::vector<Monomial>> words{{Monomial()}};
  long skipped = 0;
  for (const auto& cp : pairs) {
    int room = degree - static_cast<int>(cp.word.size());
    if (room < 0) {
      ++skipped;
      continue;
    }
    while (static_cast<int>(words.size()) <= room) {
      std::vector<Monomial> next;
      for (const auto& u : words.back())
        for (int g = 0; g < pres.ngens(); ++g) next.push_back(u + static_cast<char>(g));
      words.push_back(std::move(next));
    }
    for (int lu = 0; lu <= room && !check.failed(); ++lu)
      for (int lv = 0; lu + lv <= room && !check.failed(); ++lv)
        for (const auto& u : words[lu])
          for (const auto& v : words[lv]) {
            check.count();
            NCPoly a = pres.multiply(pres.multiply(mono(u), cp.left), mono(v));
            NCPoly b = pres.multiply(pres.multiply(mono(u), cp.right), mono(v));
            if (a != b) {
              check.fail({{"critical_pair", pres.monomial_text(cp.word)},
                          {"context", {pres.monomial_text(u), pres.monomial_text(v)}},
                          {"left", pres.render(a)},
                          {"right", pres.render(b)}});
              break;
            }
          }
  }
  check.note(std::to_string(pairs.size()) + " critical pairs, " + std::to_string(skipped) +
             " longer than the degree bound");
  Report r;
  r.add(check.finish());
  return r;
}

// ---------------------------------------------------------------- JSON

Presentation presentation_from_json(const json& j, const FieldPtr& field) {
  try {
    std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<int> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<int>>();
    int max_degree = j.value("max_degree", 4);
    // parse rules against a rule-free presentation that knows the names
    Presentation names(field, gens, {}, max_degree, weights);
    std::vector<Rule> rules;
    for (const auto& r : j.at("rules")) {
      Rule rule;
      rule.lhs = names.parse_monomial(r.at("lhs").get<std::string>());
      for (const auto& t : r.at("rhs"))
        rule.rhs.add_term(names.parse_monomial(t.at("mono").get<std::string>()),
                          parse_scalar(t.at("coef").get<std::string>(), field));
      rules.push_back(std::move(rule));
    }
    return Presentation(field, gens, std::move(rules), max_degree, weights);
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("presentation: ") + e.what());
  }
}

}  // namespace homq
