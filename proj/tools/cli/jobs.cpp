#include "jobs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string_view>
#include <thread>

#include "critconf/conjugate_maps.hpp"
#include "critconf/criticality.hpp"
#include "critconf/error.hpp"
#include "critconf/fundamental.hpp"
#include "critconf/quadric_pencil.hpp"

namespace critconf::cli {
namespace {

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

struct Context {
  NumberMode mode;
  CriticalityOptions options;
};

// ---- input -----------------------------------------------------------------

const Json& field(const Json& obj, const std::string& key, const std::string& locus = {}) {
  if (!obj.is_object()) invalid_input("expected an object", locus);
  auto it = obj.find(key);
  if (it == obj.end()) invalid_input("missing field '" + key + "'", locus.empty() ? key : locus + "." + key);
  return *it;
}

Rational number(const Json& j, const Context& ctx, const std::string& locus) {
  try {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
      return Rational::parse(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_float()) {
      if (ctx.mode == NumberMode::Exact) {
        invalid_input("floating-point literal in exact mode; write it as a decimal or \"p/q\" string", locus);
      }
      const double v = j.get<double>();
      if (!std::isfinite(v)) invalid_input("non-finite number", locus);
      return Rational::from_double(v);
    }
  } catch (const GeometryError& e) {
    if (!e.locus().empty()) throw;
    invalid_input(e.what(), locus);
  }
  invalid_input("expected a number, a decimal string or a \"p/q\" string", locus);
}

Vec vector_of(const Json& j, std::size_t n, const Context& ctx, const std::string& locus) {
  if (!j.is_array() || j.size() != n) invalid_input("expected an array of " + std::to_string(n) + " numbers", locus);
  Vec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(number(j[i], ctx, at(locus, i)));
  return out;
}

Matrix matrix_of(const Json& j, std::size_t rows, std::size_t cols, const Context& ctx, const std::string& locus) {
  if (!j.is_array() || j.size() != rows) {
    invalid_input("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " array", locus);
  }
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(vector_of(j[i], cols, ctx, at(locus, i)));
  return Matrix::from_rows(r);
}

HVector point_of(const Json& j, std::size_t n, const Context& ctx, const std::string& locus) {
  Vec v = vector_of(j, n, ctx, locus);
  if (is_zero(v)) invalid_input("the zero vector is not a point", locus);
  return HVector(std::move(v));
}

template <class F>
auto with_locus(const std::string& locus, F&& f) {
  try {
    return f();
  } catch (const GeometryError& e) {
    if (!e.locus().empty()) throw;
    throw GeometryError(e.code(), e.what(), locus);
  }
}

Camera camera_of(const Json& j, const Context& ctx, const std::string& locus) {
  Matrix m = matrix_of(j, 3, 4, ctx, locus);
  return with_locus(locus, [&] { return Camera(std::move(m)); });
}

CameraPair cameras_of(const Json& obj, const Context& ctx, const std::string& prefix = {}) {
  const std::string locus = prefix.empty() ? "cameras" : prefix + ".cameras";
  const Json& j = field(obj, "cameras", prefix);
  if (!j.is_array() || j.size() != 2) invalid_input("expected two cameras", locus);
  Camera a = camera_of(j[0], ctx, at(locus, 0));
  Camera b = camera_of(j[1], ctx, at(locus, 1));
  return with_locus(locus, [&] { return CameraPair(a, b); });
}

std::vector<HVector> points_of(const Json& obj, const Context& ctx, bool required, const std::string& prefix = {}) {
  const std::string locus = prefix.empty() ? "points" : prefix + ".points";
  if (!obj.contains("points")) {
    if (required) invalid_input("missing field 'points'", locus);
    return {};
  }
  const Json& j = obj.at("points");
  if (!j.is_array()) invalid_input("expected an array of points", locus);
  std::vector<HVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_of(j[i], 4, ctx, at(locus, i)));
  return out;
}

Quadric quadric_of(const Json& obj, const Context& ctx) {
  Matrix m = matrix_of(field(obj, "quadric"), 4, 4, ctx, "quadric");
  return with_locus("quadric", [&] { return Quadric(std::move(m)); });
}

Configuration configuration_of(const Json& obj, const Context& ctx, const std::string& prefix = {}) {
  CameraPair pair = cameras_of(obj, ctx, prefix);
  std::vector<HVector> points = points_of(obj, ctx, true, prefix);
  try {
    return Configuration(std::move(pair), std::move(points));
  } catch (const GeometryError& e) {
    if (prefix.empty() || e.locus().empty()) throw;
    throw GeometryError(e.code(), e.what(), prefix + "." + e.locus());
  }
}

double positive_double(const Json& j, const std::string& locus) {
  double v = 0;
  if (j.is_number()) {
    v = j.get<double>();
  } else if (j.is_string()) {
    v = Rational::parse(j.get<std::string>()).to_double();
  } else {
    invalid_input("expected a number or a decimal string", locus);
  }
  if (!(v > 0) || !std::isfinite(v)) invalid_input("must be positive", locus);
  return v;
}

Context context_of(const Json& job, const Defaults& defaults) {
  Context ctx{defaults.mode, {defaults.samples, defaults.seed, defaults.tolerance}};
  if (!job.contains("options")) return ctx;
  const Json& o = job.at("options");
  if (!o.is_object()) invalid_input("expected an object", "options");
  if (o.contains("mode")) {
    const Json& m = o.at("mode");
    if (m == "exact") {
      ctx.mode = NumberMode::Exact;
    } else if (m == "float") {
      ctx.mode = NumberMode::Float;
    } else {
      invalid_input("mode is \"exact\" or \"float\"", "options.mode");
    }
  }
  if (o.contains("tolerance")) ctx.options.tolerance = positive_double(o.at("tolerance"), "options.tolerance");
  if (o.contains("samples")) {
    const Json& s = o.at("samples");
    if (!s.is_number_integer() || s.get<std::int64_t>() < 1) invalid_input("expected a positive integer", "options.samples");
    ctx.options.samples = s.get<std::size_t>();
  }
  if (o.contains("seed")) {
    const Json& s = o.at("seed");
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0) invalid_input("expected a non-negative integer", "options.seed");
    ctx.options.seed = s.get<std::uint64_t>();
  }
  return ctx;
}

// ---- output ----------------------------------------------------------------

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const HVector& v) { return to_json(v.coords()); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

template <class Derived>
Json dense(const Eigen::MatrixBase<Derived>& m) {
  if (m.cols() == 1) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(m(i, 0));
    return out;
  }
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

Json to_json(const CameraPair& p) { return Json::array({to_json(p.first().matrix()), to_json(p.second().matrix())}); }

Json to_json(const SpaceLine& l) { return to_json(l.covectors()); }

Json to_json(const RootProfile& p) {
  Json roots = Json::array();
  for (const auto& r : p.roots) {
    Json j{{"multiplicity", r.multiplicity}, {"exact", r.exact}};
    if (r.exact) {
      j["root"] = Json::array({r.alpha.str(), r.beta.str()});
    } else {
      j["interval"] = Json::array({r.interval.lo.str(), r.interval.hi.str()});
    }
    roots.push_back(j);
  }
  return Json{{"degree", p.degree},       {"real_simple", p.real_simple},
              {"real_double", p.real_double}, {"real_triple", p.real_triple},
              {"complex_pairs", p.complex_pairs}, {"roots", roots}};
}

Json to_json(const CriticalClass& c) {
  Json j{{"kind", to_string(c.kind)},
         {"conjugate_count", to_string(c.conjugate_count)},
         {"critical", c.critical()}};
  j["conjugate_kind"] = c.conjugate_kind ? Json(to_string(*c.conjugate_kind)) : Json();
  return j;
}

Json to_json(const AppendixCase& c) {
  Json j{{"tag", to_string(c.tag)},
         {"determinant", to_json(c.determinant.high_first())},
         {"line_in_locus", c.line_in_locus()}};
  j["intersection"] = c.intersection ? to_json(*c.intersection) : Json();
  j["rank_one_locus"] = c.rank_one_locus ? to_json(c.rank_one_locus->high_first()) : Json();
  j["rank_one_profile"] = c.rank_one_profile ? to_json(*c.rank_one_profile) : Json();
  j["shared_kernel"] = to_string(c.shared_kernel);
  return j;
}

Json to_json(const PermissibleReport& r) {
  return Json{{"on_quadric_through_centers", r.on_quadric_through_centers},
              {"intersection_singular", r.intersection_singular},
              {"singular_points_shared", r.singular_points_shared},
              {"same_plane", r.same_plane},
              {"distinct", r.distinct},
              {"permissible", r.permissible()}};
}

Json to_json(const ImageComparison& v) {
  Json points = Json::array();
  for (const auto& m : v.points) points.push_back(Json{{"match", m.match}, {"residual", m.residual}});
  return Json{{"all_match", v.all_match()},
              {"max_residual", v.max_residual()},
              {"mismatches", v.mismatches()},
              {"points", points}};
}

Json to_json(const Conjugate& c, const std::optional<Quadric>& s, const CameraPair& original) {
  Json j{{"mode", to_string(c.mode)}, {"verified", c.verified}};
  if (c.mode == RealizationMode::Exact) {
    j["form"] = to_json(c.form->matrix());
    j["cameras"] = to_json(*c.pair);
    j["parameter"] = c.parameter ? Json::array({c.parameter->first.str(), c.parameter->second.str()}) : Json();
    if (s) {
      auto lines = epipolar_lines(original, *c.form);
      j["epipolar_lines"] = Json::array({to_json(lines.first), to_json(lines.second)});
      j["permissible"] = to_json(permissible_check(*s, {original.first().center(), original.second().center()},
                                                   lines.first, lines.second));
    }
  } else {
    j["form"] = dense(c.realized->form);
    j["parameter_approx"] = static_cast<double>(c.realized->parameter);
    j["interval"] = Json::array({c.interval->lo.str(), c.interval->hi.str()});
    j["determinant_residual"] = c.realized->determinant_residual;
    j["second_singular_value"] = c.realized->second_singular_value;
    j["cameras"] = Json::array({dense(c.numeric_pair->first), dense(c.numeric_pair->second)});
  }
  Json points = Json::array();
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto& p = c.points[i];
    Json pj{{"index", i}, {"status", to_string(p.status)}};
    if (p.exact) {
      pj["point"] = to_json(*p.exact);
    } else if (p.numeric) {
      pj["point"] = dense(*p.numeric);
    } else {
      pj["point"] = Json();
    }
    points.push_back(pj);
  }
  j["points"] = points;
  j["verification"] = to_json(c.verification);
  return j;
}

Json to_json(const QuadricConjugates& q, const CameraPair& pair) {
  Json conjugates = Json::array();
  for (const auto& c : q.conjugates) conjugates.push_back(to_json(c, q.quadric, pair));
  return Json{{"quadric", to_json(q.quadric.matrix())},
              {"pencil", Json{{"base", to_json(q.pencil.base().matrix())},
                              {"generator", to_json(q.pencil.generator().matrix())}}},
              {"case", to_json(q.appendix_case)},
              {"verdict", to_json(q.verdict)},
              {"conjugates", conjugates}};
}

// ---- commands --------------------------------------------------------------

Json cmd_fundamental(const Json& job, const Context& ctx) {
  CameraPair pair = cameras_of(job, ctx);
  BilinearForm f = fundamental_form(pair);
  return Json{{"matrix", to_json(f.matrix())},
              {"rank", f.rank()},
              {"epipoles", Json{{"e12", to_json(epipole(pair, 1, 2).point.normalized())},
                                {"e21", to_json(epipole(pair, 2, 1).point.normalized())}}}};
}

Json cmd_classify(const Json& job, const Context& ctx) {
  CameraPair pair = cameras_of(job, ctx);
  Quadric s = quadric_of(job, ctx);
  FormPencil pencil = with_locus("quadric", [&] { return form_line_from_quadric(s, pair); });
  AppendixCase c = classify_pencil(pencil);
  CriticalClass verdict = criticality_verdict(c);
  return Json{{"case", to_json(c)},
              {"tag", to_string(c.tag)},
              {"verdict", to_json(verdict)},
              {"conjugate_count", to_string(verdict.conjugate_count)},
              {"pencil", Json{{"base", to_json(pencil.base().matrix())},
                              {"generator", to_json(pencil.generator().matrix())}}}};
}

Json cmd_is_critical(const Json& job, const Context& ctx) {
  Configuration config = configuration_of(job, ctx);
  ConjugateReport r = is_critical(config, ctx.options);
  Json family = Json::array();
  for (const auto& q : r.family) family.push_back(to_json(q.matrix()));
  Json j{{"status", to_string(r.status)},
         {"critical", r.critical()},
         {"family_dimension", r.family_dimension},
         {"family", family},
         {"trivial_flag", r.trivial_flag},
         {"warnings", r.warnings}};
  j["witness"] = r.witness ? to_json(*r.witness, config.pair()) : Json();
  return j;
}

Json cmd_conjugates(const Json& job, const Context& ctx) {
  CameraPair pair = cameras_of(job, ctx);
  Quadric s = quadric_of(job, ctx);
  Configuration config(pair, points_of(job, ctx, false));
  QuadricConjugates q = conjugates_of_quadric(s, config, ctx.options);
  Json j = to_json(q, pair);
  if (job.contains("correspondence")) {
    if (!job.at("correspondence").is_boolean()) invalid_input("expected a boolean", "correspondence");
    if (job.at("correspondence").get<bool>()) {
      PermissibleCorrespondence c = conjugates_from_permissible(s, pair, ctx.options);
      j["correspondence"] = Json{{"injective", c.injective}, {"all_permissible", c.all_permissible()}};
    }
  }
  return j;
}

numeric::Configuration numeric_configuration_of(const Json& obj, const Context& ctx, const std::string& prefix) {
  numeric::Configuration out;
  const std::string cl = prefix + ".cameras";
  const Json& cams = field(obj, "cameras", prefix);
  if (!cams.is_array() || cams.size() != 2) invalid_input("expected two cameras", cl);
  out.pair.first = numeric::to_eigen(matrix_of(cams[0], 3, 4, ctx, at(cl, 0)));
  out.pair.second = numeric::to_eigen(matrix_of(cams[1], 3, 4, ctx, at(cl, 1)));
  for (const auto& x : points_of(obj, ctx, true, prefix)) out.points.emplace_back(numeric::to_eigen(x));
  return out;
}

Json cmd_verify(const Json& job, const Context& ctx) {
  const Json& a = field(job, "first");
  const Json& b = field(job, "second");
  ImageComparison v;
  if (ctx.mode == NumberMode::Exact) {
    Configuration ca = configuration_of(a, ctx, "first");
    Configuration cb = configuration_of(b, ctx, "second");
    if (ca.points().size() != cb.points().size()) invalid_input("configurations differ in length", "second.points");
    v = verify_same_images(ca, cb);
  } else {
    auto ca = numeric_configuration_of(a, ctx, "first");
    auto cb = numeric_configuration_of(b, ctx, "second");
    if (ca.points.size() != cb.points.size()) invalid_input("configurations differ in length", "second.points");
    v = verify_same_images(ca, cb, ctx.options.tolerance);
  }
  Json j = to_json(v);
  j["mode"] = ctx.mode == NumberMode::Exact ? "exact" : "float";
  return j;
}

std::vector<int> type_of(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) invalid_input("expected " + std::to_string(n) + " integers", "type");
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_number_integer()) invalid_input("expected an integer", at("type", i));
    out.push_back(j[i].get<int>());
  }
  return out;
}

Json cmd_curve_map(const Json& job, const Context&) {
  const Json& c = field(job, "case");
  if (!c.is_string()) invalid_input("expected a string", "case");
  const std::string name = c.get<std::string>();
  if (name == "quadric" || name == "smooth" || name == "cone") {
    auto t = type_of(field(job, "type"), 4);
    auto m = curve_type_conjugate_quadric({t[0], t[1], t[2], t[3]});
    return Json{{"type", {m.a, m.b, m.c1, m.c2}}};
  }
  if (name == "planes") {
    auto t = type_of(field(job, "type"), 5);
    auto m = curve_type_conjugate_planes({t[0], t[1], t[2], t[3], t[4]});
    return Json{{"type", {m.a, m.b, m.c0, m.c1, m.c2}}};
  }
  invalid_input("case is \"quadric\", \"smooth\", \"cone\" or \"planes\"", "case");
}

Json cmd_one_view(const Json& job, const Context& ctx) {
  Camera camera = camera_of(field(job, "camera"), ctx, "camera");
  std::vector<HVector> points = points_of(job, ctx, true);
  const int dim = span_dimension(camera, points);
  return Json{{"critical", one_view_critical(camera, points)}, {"span_dim", dim}};
}

using Command = Json (*)(const Json&, const Context&);

Command find_command(std::string_view name) {
  static const std::pair<std::string_view, Command> table[] = {
      {"fundamental", cmd_fundamental},   {"classify-quadric", cmd_classify},
      {"is-critical", cmd_is_critical},   {"conjugates", cmd_conjugates},
      {"verify-images", cmd_verify},      {"curve-map", cmd_curve_map},
      {"one-view", cmd_one_view},
  };
  for (const auto& [n, f] : table) {
    if (n == name) return f;
  }
  return nullptr;
}

JobResult failure(Json command, std::string_view code, const std::string& message, const std::string& locus,
                  int exit_code) {
  Json report{{"status", "error"},
              {"command", std::move(command)},
              {"error", Json{{"code", code}, {"message", message}, {"locus", locus}}}};
  return {report, exit_code};
}

}  // namespace

JobResult run_job(const Json& job, const Defaults& defaults) {
  Json command;
  try {
    if (!job.is_object()) invalid_input("a job is a JSON object");
    if (job.contains("command") || defaults.command.empty()) {
      const Json& c = field(job, "command");
      if (!c.is_string()) invalid_input("expected a string", "command");
      command = c;
      if (!defaults.command.empty() && c != defaults.command) {
        invalid_input("job command '" + c.get<std::string>() + "' conflicts with subcommand '" + defaults.command + "'",
                      "command");
      }
    } else {
      command = defaults.command;
    }
    Command f = find_command(command.get<std::string>());
    if (f == nullptr) invalid_input("unknown command '" + command.get<std::string>() + "'", "command");
    Context ctx = context_of(job, defaults);
    return {Json{{"status", "ok"}, {"command", command}, {"result", f(job, ctx)}}, 0};
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::UndefinedCase) return failure(command, "undefined-case", e.what(), e.locus(), 2);
    return failure(command, "invalid-input", e.what(), e.locus(), 1);
  } catch (const Json::exception& e) {
    return failure(command, "invalid-input", e.what(), "", 1);
  } catch (const std::exception& e) {
    return failure(command, "invalid-input", e.what(), "", 1);
  }
}

std::vector<JobResult> run_batch(const Json& jobs, const Defaults& defaults) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(jobs[i], defaults);
  };
  const std::size_t n = std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

JobResult run_text(const std::string& text, bool batch, const Defaults& defaults) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return failure(Json(), "invalid-input", e.what(), "input", 1);
  }
  if (!batch) return run_job(doc, defaults);
  if (!doc.is_array()) return failure(Json(), "invalid-input", "--batch expects a JSON array of jobs", "input", 1);
  JobResult out{Json::array(), 0};
  for (auto& r : run_batch(doc, defaults)) {
    out.report.push_back(std::move(r.report));
    out.exit_code = std::max(out.exit_code, r.exit_code);
  }
  return out;
}

}  // namespace critconf::cli
