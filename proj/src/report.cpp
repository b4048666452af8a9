#include "levifol/report.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>

#include "levifol/errors.hpp"
#include "levifol/holonomy.hpp"
#include "levifol/levinorm.hpp"

namespace levifol {

const std::vector<std::string>& report_commands() {
  static const std::vector<std::string> commands{"check-involutive", "isotropy",   "filtration",
                                                 "linear-holonomy",  "levi",       "artin-rees",
                                                 "linearize",        "radical-foliation", "verify"};
  return commands;
}

std::string input_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr int kDefaultOrder = 4;

struct Context {
  const FoliationSpec& spec;
  const RunOptions& options;
  Json certification = Json::object();
};

Json rat(const Rational& q) { return to_string(q); }

Json vec(const Vec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat(q));
  return out;
}

Json matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec(m.row(r)));
  return out;
}

Json subspace(const Subspace& s) {
  Json out = Json::array();
  for (const auto& b : s.basis()) out.push_back(vec(b));
  return out;
}

Json field(const PolyVectorField& x, const Context& ctx) { return x.to_string(ctx.spec.variables); }

Json fields(const std::vector<PolyVectorField>& xs, const Context& ctx) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(field(x, ctx));
  return out;
}

Json polys(const std::vector<Polynomial>& ps, const Context& ctx) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string(ctx.spec.variables));
  return out;
}

/// Nonzero brackets of basis elements, 1-based.
Json structure(const LieAlgebra& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vec b = g.bracket_basis(i, j);
      if (is_zero(b)) continue;
      out.push_back(Json{{"pair", {i + 1, j + 1}}, {"bracket", vec(b)}});
    }
  return out;
}

Json algebra(const LieAlgebra& g) {
  return Json{{"dimension", g.dim()}, {"abelian", g.is_abelian()}, {"brackets", structure(g)}};
}

FoliationModule module_of(const Context& ctx) { return FoliationModule(ctx.spec.generators); }

int option_or(const std::optional<int>& flag, const FoliationSpec& spec, const std::string& key, int fallback) {
  if (flag) return *flag;
  auto it = spec.options.find(key);
  return it != spec.options.end() ? it->second : fallback;
}

int order_of(const Context& ctx) {
  int n = option_or(ctx.options.order, ctx.spec, "order", kDefaultOrder);
  if (n < 2) throw PreconditionError("order must be at least 2");
  return n;
}

Json check_involutive_payload(Context& ctx) {
  FoliationModule f = module_of(ctx);
  InvolutivityResult res = check_involutive(f);
  Json out{{"involutive", res.involutive}};
  if (res.involutive) {
    Json certs = Json::array();
    std::size_t k = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j, ++k)
        certs.push_back(Json{{"pair", {i + 1, j + 1}},
                             {"bracket", field(lie_bracket(f[i], f[j]), ctx)},
                             {"coefficients", polys(res.certificates[k].coefficients, ctx)}});
    out["certificates"] = certs;
  } else {
    const InvolutivityWitness& w = *res.witness;
    out["witness"] = Json{{"pair", {w.i + 1, w.j + 1}},
                          {"bracket", field(w.bracket, ctx)},
                          {"normal_form", field(w.certificate.remainder, ctx)}};
  }
  ctx.certification["pairs_checked"] = f.size() * (f.size() - 1) / 2;
  return out;
}

Json isotropy_payload(Context& ctx) {
  IsotropyData iso = isotropy_algebra(module_of(ctx));
  Json reps = Json::array();
  for (std::size_t a = 0; a < iso.dim(); ++a)
    reps.push_back(Json{{"generator", iso.representative_generators[a] + 1},
                        {"field", field(iso.representatives[a], ctx)},
                        {"linear_part", matrix(iso.linearization[a])}});
  Json classes = Json::array();
  for (const auto& c : iso.generator_classes) classes.push_back(vec(c));
  Json dims = Json::array();
  for (const auto& s : iso.filtration) dims.push_back(s.dim());
  ctx.certification["filtration_cap"] = iso.filtration_cap;
  ctx.certification["checks"] = Json::array({"bracket law of the filtration", "kernel of linearization is g^2"});
  return Json{{"algebra", algebra(iso.algebra)},
              {"representatives", reps},
              {"generator_classes", classes},
              {"filtration_dims", dims},
              {"linear_holonomy_dim", iso.lin_quotient.algebra.dim()},
              {"radical_dim", iso.radical.dim()},
              {"semisimple_dim", iso.ss_quotient.algebra.dim()}};
}

Json filtration_payload(Context& ctx) {
  FoliationModule f = module_of(ctx);
  int cap = option_or(ctx.options.max_degree, ctx.spec, "max_degree", default_degree_cap(f));
  IsotropyData iso = isotropy_algebra(f, std::max(cap, 1));
  Filtration fil = holonomy_filtration(iso, cap);
  Json pieces = Json::array();
  for (std::size_t i = 0; i < fil.pieces.size(); ++i)
    pieces.push_back(Json{{"index", i}, {"dimension", fil.pieces[i].dim()}, {"basis", subspace(fil.pieces[i])}});
  ctx.certification["cap"] = cap;
  return Json{{"isotropy_dim", iso.dim()},
              {"pieces", pieces},
              {"vanishes_at", fil.vanishes_at ? Json(*fil.vanishes_at) : Json(nullptr)}};
}

Json linear_holonomy_payload(Context&ctx) {
  IsotropyData iso = isotropy_algebra(module_of(ctx));
  LinearHolonomy lin = linear_holonomy(iso);
  Json real = Json::array();
  for (const auto& m : lin.realization) real.push_back(matrix(m));
  ctx.certification["checks"] = Json::array({"realization reproduces the bracket", "kernel of linearization is g^2"});
  return Json{{"algebra", algebra(lin.algebra)}, {"realization", real}, {"projection", matrix(lin.projection)}};
}

Json levi_payload(Context& ctx) {
  IsotropyData iso = isotropy_algebra(module_of(ctx));
  SemisimpleHolonomy ss = semisimple_holonomy(iso);
  LeviData levi = levi_subalgebra(iso.algebra);
  ctx.certification["checks"] =
      Json::array({"g^2 nilpotent and inside the radical", "g -> g^lin -> g^s commutes", "g^s semisimple",
                   "section preserves brackets"});
  return Json{{"isotropy_dim", iso.dim()},
              {"radical", subspace(ss.radical)},
              {"semisimple", algebra(ss.algebra)},
              {"from_isotropy", matrix(ss.from_isotropy)},
              {"from_linear", matrix(ss.from_linear)},
              {"levi_subalgebra", subspace(levi.levi)},
              {"section", matrix(levi.section)}};
}

Json artin_rees_payload(Context& ctx) {
  FoliationModule f = module_of(ctx);
  int cap = option_or(ctx.options.max_degree, ctx.spec, "max_degree", default_degree_cap(f));
  ArtinReesCertificate cert = artin_rees_certify(f, cap);
  Json degrees = Json::array();
  for (const auto& d : cert.degrees)
    degrees.push_back(Json{{"degree", d.degree}, {"initial_dim", d.initial_dim}, {"product_dim", d.product_dim}});
  Json out{{"bounded", cert.bounded}};
  if (cert.bounded) {
    out["bound"] = cert.bound;
  } else {
    out["bound"] = nullptr;
    out["message"] = "unbounded up to " + std::to_string(cap);
  }
  out["degrees"] = degrees;
  if (cert.witness) {
    out["witness"] = Json{{"field", field(*cert.witness, ctx)},
                          {"coefficients", polys(cert.witness_coefficients, ctx)},
                          {"in_ideal_times_module", cert.witness_certificate->member},
                          {"normal_form", field(cert.witness_certificate->remainder, ctx)}};
  } else {
    out["witness"] = nullptr;
  }
  ctx.certification["checked_up_to"] = cert.checked_up_to;
  return out;
}

Json defect_rows(const ConnectionReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"degree", r.degree}, {"linearity", r.linearity}, {"flatness", r.flatness}});
  return rows;
}

Json connection_json(const LeviConnection& conn, const Context& ctx) {
  std::vector<PolyVectorField> images;
  for (const auto& x : conn.images) images.push_back(x.field());
  return Json{{"order", conn.truncation_order()}, {"images", fields(images, ctx)},
              {"euler", field(conn.euler.field(), ctx)}};
}

Json linearize_payload(Context& ctx) {
  int n = order_of(ctx);
  FoliationModule f = module_of(ctx);
  IsotropyData iso = isotropy_algebra(f);
  LeviConnection conn = linearize(iso, n);
  ConnectionReport rep = verify_connection(conn, f, n);
  Json steps = Json::array();
  for (const auto& h : conn.history)
    steps.push_back(Json{{"degree", h.degree},
                         {"quotient_dim", h.quotient_dim},
                         {"defect_classes", h.defect_classes},
                         {"euler_changed", h.euler_changed},
                         {"images_changed", h.images_changed}});
  ctx.certification["statement"] = "flat and linear through order " + std::to_string(conn.certified_order);
  ctx.certification["certified_order"] = conn.certified_order;
  ctx.certification["defect_free_through_degree"] = conn.certified_order - 1;
  ctx.certification["step_checks_passed"] = conn.history.size();
  return Json{{"semisimple", algebra(conn.semisimple)},
              {"connection", connection_json(conn, ctx)},
              {"steps", steps},
              {"defects", defect_rows(rep)},
              {"images_in_module", rep.images_in_module},
              {"section_is_homomorphic", section_is_homomorphic(conn, iso)}};
}

Json radical_payload(Context& ctx) {
  int n = order_of(ctx);
  FoliationModule f = module_of(ctx);
  IsotropyData iso = isotropy_algebra(f);
  LeviConnection conn = linearize(iso, n);
  RadicalFoliation r = radical_foliation(iso, conn, n);
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back(Json{{"degree", d.degree},
                           {"module_dim", d.module_dim},
                           {"section_dim", d.section_dim},
                           {"radical_dim", d.radical_dim}});
  ctx.certification["order"] = n;
  ctx.certification["connection_certified_order"] = conn.certified_order;
  return Json{{"generators", fields(r.generators, ctx)},
              {"degrees", degrees},
              {"direct_sum", r.direct_sum},
              {"invariant", r.invariant},
              {"degraded", r.degraded}};
}

Json verify_payload(Context& ctx) {
  if (!ctx.options.connection) throw PreconditionError("verify needs --connection");
  ConnectionFile file = parse_connection(*ctx.options.connection, ctx.spec.variables);
  FoliationModule f = module_of(ctx);
  IsotropyData iso = isotropy_algebra(f);
  int trunc = file.order ? *file.order : order_of(ctx);
  int n = ctx.options.order ? *ctx.options.order : trunc;
  if (trunc < 1 || n < 1) throw PreconditionError("orders must be positive");
  if (file.images.size() != iso.ss_quotient.algebra.dim())
    throw PreconditionError("connection has " + std::to_string(file.images.size()) + " images but g^s has dimension " +
                            std::to_string(iso.ss_quotient.algebra.dim()));
  LeviConnection conn;
  conn.semisimple = iso.ss_quotient.algebra;
  for (const auto& x : file.images) conn.images.emplace_back(x, trunc);
  conn.euler = JetField(file.euler, trunc);
  ConnectionReport rep = verify_connection(conn, f, n);
  conn.certified_order = rep.certified_order;
  Json out{{"defects", defect_rows(rep)},
           {"images_in_module", rep.images_in_module},
           {"images_vanish", rep.images_vanish},
           {"euler_like", rep.euler_like},
           {"certified_order", rep.certified_order}};
  out["section_is_homomorphic"] =
      rep.images_in_module ? Json(section_is_homomorphic(conn, iso)) : Json(nullptr);
  ctx.certification["checked_through_degree"] = rep.checked_through;
  return out;
}

const std::map<std::string, std::function<Json(Context&)>>& handlers() {
  static const std::map<std::string, std::function<Json(Context&)>> table{
      {"check-involutive", check_involutive_payload},
      {"isotropy", isotropy_payload},
      {"filtration", filtration_payload},
      {"linear-holonomy", linear_holonomy_payload},
      {"levi", levi_payload},
      {"artin-rees", artin_rees_payload},
      {"linearize", linearize_payload},
      {"radical-foliation", radical_payload},
      {"verify", verify_payload}};
  return table;
}

}  // namespace

ConnectionFile parse_connection(const std::string& text, const std::vector<std::string>& vars) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("connection file is not valid JSON: ") + e.what());
  }
  if (doc.contains("result")) doc = doc["result"];
  if (doc.contains("connection")) doc = doc["connection"];
  if (!doc.is_object() || !doc.contains("images") || !doc.contains("euler"))
    throw InputError("connection file needs \"images\" and \"euler\"");
  ConnectionFile out;
  try {
    for (const auto& s : doc["images"]) out.images.push_back(parse_field(s.get<std::string>(), vars));
    out.euler = parse_field(doc["euler"].get<std::string>(), vars);
    if (doc.contains("order")) out.order = doc["order"].get<int>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed connection file: ") + e.what());
  }
  return out;
}

RunOutcome run(const std::string& command, const std::string& source, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  Json& rep = out.report;
  rep["command"] = command;
  Json opts = Json::object();
  if (options.max_degree) opts["max_degree"] = *options.max_degree;
  if (options.order) opts["order"] = *options.order;
  if (options.connection) opts["connection_hash"] = input_hash(*options.connection);
  rep["options"] = opts;
  rep["input_hash"] = input_hash(source);
  try {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw InputError("unknown command '" + command + "'");
    FoliationSpec spec = parse_spec(source);
    Context ctx{spec, options};
    Json payload = it->second(ctx);
    rep["status"] = "ok";
    rep["variables"] = spec.variables;
    rep["result"] = std::move(payload);
    rep["certification"] = std::move(ctx.certification);
    out.exit_code = 0;
  } catch (const InputError& e) {
    rep["status"] = "rejected";
    rep["error"] = e.what();
    out.exit_code = 2;
  } catch (const InvariantViolation& e) {
    rep["status"] = "internal-error";
    rep["error"] = e.what();
    out.exit_code = 3;
  } catch (const std::bad_alloc&) {
    throw;
  } catch (const std::exception& e) {
    rep["status"] = "internal-error";
    rep["error"] = e.what();
    out.exit_code = 3;
  }
  if (options.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    rep["timing_us"] = us.count();
  }
  return out;
}

}  // namespace levifol
