// homq: build catalog instances or JSON inputs, run verification suites,
// emit operators and presentations as JSON.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homq/catalog.hpp"
#include "homq/io.hpp"

using namespace homq;

namespace {

struct Options {
  int degree = -1;
  std::vector<std::string> params;
  std::string out;
  std::string format = "json";
  bool timings = false;
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("usage", "--param expects key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq);
    if (p.count(key)) throw Error("usage", "parameter '" + key + "' given twice");
    p[key] = kv.substr(eq + 1);
  }
  return p;
}

std::optional<json> read_json_target(const std::string& target) {
  if (!std::filesystem::is_regular_file(target)) return std::nullopt;
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error("malformed_json", target + ": " + e.what());
  }
}

SuiteDegrees degrees(const Options& o) {
  SuiteDegrees d = default_degrees();
  if (o.degree >= 0) {
    d.degree = o.degree;
    d.oqhybe = std::min(o.degree, 2);
  }
  return d;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// an emitted instance ("findim"), a dualize result ("dual"), or a bare tensor dump
bool is_findim(const json& j) { return j.contains("findim") || j.contains("dual") || j.contains("mu"); }
const json& findim_body(const json& j) {
  if (j.contains("findim")) return j.at("findim");
  if (j.contains("dual")) return j.at("dual");
  return j;
}

Report findim_suite(const FinDimHomBialgebra& B) {
  Report rep = verify_findim_hom_bialgebra(B);
  if (B.r_kind == RKind::element) rep.merge(verify_braided(B));
  if (B.r_kind == RKind::form) rep.merge(verify_cobraided_tensor(B));
  rep.sort();
  return rep;
}

json with_report(json head, const Report& rep, bool timings) {
  json r = rep.to_json(timings);
  for (auto it = r.begin(); it != r.end(); ++it) head[it.key()] = it.value();
  return head;
}

// ---------------------------------------------------------------- commands

int cmd_verify(const std::string& target, const Options& o, json& out) {
  const SuiteDegrees deg = degrees(o);
  if (auto j = read_json_target(target)) {
    if (!o.params.empty()) throw Error("usage", "--param applies to catalog instances only");
    Report rep;
    if (is_findim(*j)) {
      rep = findim_suite(findim_from_json(findim_body(*j)));
    } else {
      CobraidedPtr C = cobraided_from_json(*j);
      rep.merge(check_local_confluence(C->pres(), std::min(4, C->pres().max_degree())), "presentation");
      rep.merge(verify_hom_bialgebra(C->H(), deg.degree));
      rep.merge(verify_cobraided(*C, deg.degree));
      rep.merge(verify_oqhybe(*C, deg.oqhybe));
      rep.sort();
    }
    out = with_report({{"source", target}, {"degree", deg.degree}}, rep, o.timings);
    return rep.passed() ? 0 : 1;
  }
  Instance inst = build_instance(target, parse_params(o.params));
  Report rep = verify_instance(inst, deg);
  out = with_report({{"instance", inst.name}, {"params", inst.params}, {"degree", inst.natural_degree.value_or(deg.degree)}},
                    rep, o.timings);
  return rep.passed() ? 0 : 1;
}

RMatrixSpec load_rmatrix(const std::string& source) {
  if (auto j = read_json_target(source)) return rmatrix_from_json(*j);
  if (source == "sl2" || source == "mq11") return catalog_rmatrix(source, ScalarField::make({"t"}));
  if (source == "mpq") return catalog_rmatrix(source, ScalarField::make({"t", "p"}));
  throw Error("unknown_instance", "'" + source + "' is neither a file nor a catalog R-matrix (sl2, mpq, mq11)");
}

std::vector<Scalar> parse_lambda(const std::string& text, const FieldPtr& field) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_scalar(part, field));
  return out;
}

int cmd_frt(const std::string& action, const std::string& source, const std::string& lambda, const Options& o,
            json& out) {
  RMatrixSpec spec = load_rmatrix(source);
  if (action == "ybe") {
    Report rep = verify_ybe(spec);
    out = with_report({{"source", source}, {"dim", spec.dim}}, rep, o.timings);
    return rep.passed() ? 0 : 1;
  }
  FrtAlgebra A = lambda.empty() ? frt_construct(spec) : frt_twist(spec, parse_lambda(lambda, spec.field));
  out = json::object();
  out["source"] = source;
  out["relations_retained"] = A.relations_retained;
  if (!A.lambda.empty()) {
    json l = json::array();
    for (const auto& s : A.lambda) l.push_back(s.str());
    out["lambda"] = l;
  }
  out["algebra"] = cobraided_to_json(*A.cobraided);
  out = with_report(out, A.certificates, o.timings);
  return A.certificates.passed() ? 0 : 1;
}

// plane:<kind> names the plane over the host instance, or confirms a plane instance's kind
std::string plane_target(const std::string& target, const std::string& kind_name) {
  const PlaneKind kind = plane_kind_from_name(kind_name);
  const std::string plane = "plane_" + plane_kind_name(kind);
  const std::string host = kind == PlaneKind::mixed ? "mq11" : "mq2";
  if (target == plane || target == host) return plane;
  throw Error("config", "--comodule plane:" + kind_name + " needs the instance " + host + " or " + plane);
}

int cmd_hybe(const std::string& target, std::string comodule, bool emit, const Options& o, json& out) {
  std::string name = target;
  if (comodule.rfind("plane:", 0) == 0) {
    name = plane_target(target, comodule.substr(6));
    comodule = "plane";
  }
  Instance inst = build_instance(name, parse_params(o.params));
  out = json::object();
  out["instance"] = inst.name;
  out["params"] = inst.params;
  out["comodule"] = comodule;
  Report rep;
  if (comodule == "frt") {
    if (o.degree > 1) throw Error("config", "the FRT comodule lives in degree 1");
    out["degree"] = 1;
    Comodule plain = instance_frt_comodule(inst, false), twisted = instance_frt_comodule(inst, true);
    Mat B = bvw_operator(plain, plain), Ba = bvw_operator(twisted, twisted);
    rep.merge(verify_hybe(B, plain.alpha), "untwisted");
    rep.merge(verify_hybe(Ba, twisted.alpha), "twisted");
    CheckBuilder gamma("gamma_recovery", 1);
    gamma.count();
    if (B != inst.rmatrix->gamma()) gamma.fail({{"computed", matrix_json(B)}, {"gamma", matrix_json(inst.rmatrix->gamma())}});
    rep.add(gamma.finish());
    if (emit) {
      out["matrix"] = matrix_json(B);
      out["alpha_matrix"] = matrix_json(Ba);
    }
  } else if (comodule == "plane") {
    if (!inst.plane) throw Error("config", inst.name + " carries no comodule algebra");
    const int d = o.degree < 0 ? 1 : o.degree;
    out["degree"] = d;
    Comodule piece = inst.plane->piece(d);
    Mat B = b_alpha_operator(piece);
    rep.merge(verify_hybe(B, piece.alpha));
    CheckBuilder agree("hybe/structure_map_agreement", d);
    agree.count();
    if (bvw_operator(piece, piece) != B) agree.fail({{"reason", "B from the structure maps differs from B_alpha"}});
    rep.add(agree.finish());
    if (emit) {
      json labels = piece.labels;
      out["basis"] = labels;
      out["matrix"] = matrix_json(B);
    }
  } else if (comodule == "mixed") {
    if (!inst.plane) throw Error("config", inst.name + " carries no comodule algebra");
    rep = verify_mixed_hybe(instance_frt_comodule(inst, true), inst.plane->piece(1), inst.plane->piece(2));
  } else {
    throw Error("usage", "--comodule must be frt, plane or mixed");
  }
  rep.sort();
  out = with_report(out, rep, o.timings);
  return rep.passed() ? 0 : 1;
}

int cmd_dualize(const std::string& target, const Options& o, json& out) {
  FinDimHomBialgebra B;
  if (auto j = read_json_target(target)) {
    if (!is_findim(*j)) throw Error("config", target + " is not a finite-dimensional Hom-bialgebra");
    B = findim_from_json(findim_body(*j));
  } else {
    Instance inst = build_instance(target, parse_params(o.params));
    B = inst.braided ? *inst.braided : materialize(*inst.cobraided);
  }
  FinDimHomBialgebra D = dualize(B);
  Report rep = findim_suite(D);
  out = with_report({{"source", target}, {"dual", D.to_json()}}, rep, o.timings);
  return rep.passed() ? 0 : 1;
}

int cmd_emit(const std::string& target, const std::string& what, const Options& o, json& out) {
  Instance inst = build_instance(target, parse_params(o.params));
  if (what == "instance") {
    out = instance_to_json(inst);
  } else if (what == "determinant") {
    NCPoly det = quantum_determinant(inst);
    out = {{"instance", inst.name}, {"determinant", inst.base->pres().render(det)}};
  } else if (what == "rmatrix") {
    if (!inst.rmatrix) throw Error("config", inst.name + " has no R-matrix spec");
    out = inst.rmatrix->to_json();
  } else {
    throw Error("usage", "--what must be instance, determinant or rmatrix");
  }
  return 0;
}

void write(const json& j, const Options& o) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("io", "cannot write " + o.out);
  f << text;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-quantum group verification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--degree", o.degree, "truncation degree (default 3, or HOMQ_DEFAULT_DEGREE)")->check(CLI::NonNegativeNumber);
  app.add_option("--param", o.params, "instance parameter key=value (repeatable)");
  app.add_option("--out", o.out, "write the JSON result here instead of stdout");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  app.add_flag("--timings", o.timings, "include per-check wall times");

  std::string target, frt_action, frt_source, lambda, comodule = "frt", what = "instance";
  bool emit_matrix = false;

  auto* verify = app.add_subcommand("verify", "run the verification suite of an instance or JSON file");
  verify->add_option("target", target, "catalog instance name or JSON file")->required();

  auto* frt = app.add_subcommand("frt", "FRT construction from an R-matrix spec");
  frt->add_option("action", frt_action, "build or ybe")->required()->check(CLI::IsMember({"build", "ybe"}));
  frt->add_option("spec", frt_source, "R-matrix JSON file or sl2, mpq, mq11")->required();
  frt->add_option("--lambda", lambda, "comma-separated scaling values for the twist");

  auto* hybe = app.add_subcommand("hybe", "Hom-Yang-Baxter operators of comodules");
  hybe->add_option("target", target, "catalog instance name")->required();
  hybe->add_option("--comodule", comodule, "frt, plane, plane:<standard|fermionic|mixed> or mixed");
  hybe->add_flag("--emit-matrix", emit_matrix, "include the operator matrices");

  auto* dual = app.add_subcommand("dualize", "dual of a finite-dimensional instance");
  dual->add_option("target", target, "catalog instance name or JSON file")->required();

  auto* emit = app.add_subcommand("emit", "emit an instance as JSON");
  emit->add_option("target", target, "catalog instance name")->required();
  emit->add_option("--what", what, "instance, determinant or rmatrix");

  for (auto* sub : {verify, frt, hybe, dual, emit}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("usage", e.what()).dump(2) << "\n";
    return 2;
  }

  json out;
  try {
    int code = 0;
    if (*verify) code = cmd_verify(target, o, out);
    else if (*frt) code = cmd_frt(frt_action, frt_source, lambda, o, out);
    else if (*hybe) code = cmd_hybe(target, comodule, emit_matrix, o, out);
    else if (*dual) code = cmd_dualize(target, o, out);
    else code = cmd_emit(target, what, o, out);
    write(out, o);
    return code;
  } catch (const Error& e) {
    std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
  } catch (const json::exception& e) {
    std::cout << error_json("malformed_json", e.what()).dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e.what()).dump(2) << "\n";
  }
  return 2;
}
