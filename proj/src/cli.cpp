#include "hullfn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hullfn/acceptance.hpp"
#include "hullfn/directions.hpp"
#include "hullfn/extensions.hpp"
#include "hullfn/hull_functions.hpp"
#include "hullfn/illumination.hpp"
#include "hullfn/io.hpp"
#include "hullfn/projection.hpp"
#include "hullfn/random_bodies.hpp"

namespace hullfn::cli {

bool RunReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass.value_or(true); });
}

std::string to_csv(const RunReport& report) {
  std::string s = "name,value,tolerance,pass\n";
  for (const CheckRow& r : report.rows) {
    s += r.name + ',' + format_number(r.value) + ',';
    if (r.tolerance) s += format_number(*r.tolerance);
    s += ',';
    if (r.pass) s += *r.pass ? "true" : "false";
    s += '\n';
  }
  return s;
}

std::string to_json(const RunReport& report) {
  using nlohmann::json;
  auto rounded = [](double v) { return std::stod(format_number(v)); };
  json doc;
  doc["command"] = report.command;
  doc["seed"] = report.seed;
  json rows = json::array();
  for (const CheckRow& r : report.rows) {
    json row;
    row["name"] = r.name;
    row["value"] = rounded(r.value);
    row["tolerance"] = r.tolerance ? json(rounded(*r.tolerance)) : json(nullptr);
    row["pass"] = r.pass ? json(*r.pass) : json(nullptr);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["artifacts"] = report.artifacts;
  return doc.dump(2) + "\n";
}

namespace {

struct Options {
  std::string body_path;
  double delta = 0.0;
  double lambda = 0.0;
  std::string t;
  int k = 1;
  int l = 1;
  int dirs = 0;
  int n = 200;
  std::uint64_t seed = 7;
  std::string svg;
  std::string off;
  std::string json_path;
  std::string report;
  bool strict = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--t expects comma-separated numbers, got '" + text + "'");
    }
  }
  return out;
}

void add(RunReport& r, std::string name, double value) { r.rows.push_back({std::move(name), value, {}, {}}); }
void add_check(RunReport& r, std::string name, double value, double tol, bool pass) {
  r.rows.push_back({std::move(name), value, tol, pass});
}

void add_homothety(RunReport& r, const std::string& prefix, const HomothetyReport& h) {
  add(r, prefix + "_ratio", h.ratio);
  add(r, prefix + "_defect", h.defect);
  add(r, prefix + "_is_homothet", h.is_homothet ? 1.0 : 0.0);
}

BodyFile load(const Options& o) { return parse_body_file(read_text_file(o.body_path), o.strict); }

void emit_artifact(RunReport& r, const std::string& path, std::string_view text) {
  write_text_file(path, text);
  r.artifacts.push_back(path);
}

template <class K>
double vertex_level_residual(const K& p, const LevelSet<K>& ls) {
  double worst = 0.0;
  for (const auto& v : vertices_of(ls.body)) {
    worst = std::max(worst, std::abs(g0_closed_form(p, v).value - ls.level) / ls.level);
  }
  return worst;
}

void cmd_eval(const Options& o, RunReport& r) {
  const Body body = load(o).body;
  const std::vector<double> t = parse_vector(o.t);
  if (static_cast<int>(t.size()) != body.dim()) throw UsageError("--t must have one coordinate per dimension");
  add(r, "volume", body.volume());
  add(r, "G_K", chf(body, t));
  add(r, "G_K_lambda", homothetic_chf(body, o.lambda, t));
  const auto g0 = g0_closed_form(body, t);
  add(r, "G_0", g0.value);
  add(r, "active_facets", static_cast<double>(g0.active_facets.size()));
  std::vector<double> scaled;
  for (double x : t) scaled.push_back(x / (1.0 - o.lambda));
  const double direct = g0_closed_form(body, scaled).value;
  const double rel = std::abs(lambda_reduce(body, o.lambda, t) - direct) / direct;
  add_check(r, "lambda_reduction_rel_error", rel, 1e-9, rel <= 1e-9);
}

template <class K>
void illum_impl(const K& p, const Options& o, const std::string& name, RunReport& r) {
  const LevelSet<K> ls = illumination_body(p, o.delta);
  add(r, "delta", o.delta);
  add(r, "level", ls.level);
  add(r, "vertex_count", static_cast<double>(vertices_of(ls.body).size()));
  const double res = vertex_level_residual(p, ls);
  add_check(r, "max_vertex_level_residual", res, 1e-9, res < 1e-9);
  add(r, "coincident_candidates", static_cast<double>(ls.coincident_candidates));
  add_homothety(r, "homothety", homothety_fit(p, ls.body));
  const Body out(ls.body);
  if (!o.json_path.empty()) emit_artifact(r, o.json_path, serialize_body(out, name));
  if (!o.off.empty()) emit_artifact(r, o.off, to_off(out));
  if (!o.svg.empty()) {
    if constexpr (K::kDim == 2) {
      SvgScene scene;
      scene.base = p;
      scene.level_curves.push_back(ls.body);
      emit_artifact(r, o.svg, to_svg(scene));
    } else {
      throw UsageError("--svg is only available for planar bodies");
    }
  }
}

void cmd_illum(const Options& o, RunReport& r) {
  const BodyFile file = load(o);
  const std::string name = file.name.empty() ? "illumination_body" : file.name + "_illumination";
  file.body.visit([&](const auto& p) { illum_impl(p, o, name, r); });
}

std::string off_variant(const std::string& path, const std::string& tag) {
  std::filesystem::path p(path);
  const std::string ext = p.has_extension() ? p.extension().string() : std::string(".off");
  p.replace_extension();
  return p.string() + "." + tag + ext;
}

template <class K>
void projbody_impl(const K& k, const Options& o, RunReport& r) {
  const K proj = projection_body(k);
  const K polar_proj = polar(proj);
  const K diff = difference_body(k);
  add(r, "volume", volume(k));
  add(r, "projection_body_volume", volume(proj));
  add(r, "polar_projection_body_volume", volume(polar_proj));
  add(r, "difference_body_volume", volume(diff));
  double worst = 0.0;
  if constexpr (K::kDim == 2) {
    for (const Vec2& u : circle_directions(200)) {
      worst = std::max(worst, std::abs(support(proj, u) - brightness(k, u)) / brightness(k, u));
    }
  } else {
    for (const Vec3& u : fibonacci_sphere(200)) {
      worst = std::max(worst, std::abs(support(proj, u) - brightness(k, u)) / brightness(k, u));
    }
  }
  add_check(r, "projection_support_vs_brightness", worst, 1e-9, worst <= 1e-9);
  add_homothety(r, "polar_projection_vs_difference", homothety_fit(diff, polar_proj));
  if (!o.json_path.empty()) {
    nlohmann::json doc;
    doc["projection_body"] = nlohmann::json::parse(serialize_body(Body(proj)));
    doc["polar_projection_body"] = nlohmann::json::parse(serialize_body(Body(polar_proj)));
    doc["difference_body"] = nlohmann::json::parse(serialize_body(Body(diff)));
    emit_artifact(r, o.json_path, doc.dump() + "\n");
  }
  if (!o.off.empty()) {
    emit_artifact(r, off_variant(o.off, "projection"), to_off(Body(proj)));
    emit_artifact(r, off_variant(o.off, "polar_projection"), to_off(Body(polar_proj)));
    emit_artifact(r, off_variant(o.off, "difference"), to_off(Body(diff)));
  }
}

void cmd_projbody(const Options& o, RunReport& r) {
  const Body body = load(o).body;
  body.visit([&](const auto& k) { projbody_impl(k, o, r); });
}

void cmd_tcvp(const Options& o, RunReport& r) {
  const Body body = load(o).body;
  const int n_dirs = o.dirs > 0 ? o.dirs : (body.dim() == 2 ? 3600 : 4096);
  const TcvpReport rep = tcvp_check(body, n_dirs);
  add(r, "directions", n_dirs);
  add(r, "delta_min", rep.delta_min);
  add(r, "delta_max", rep.delta_max);
  add(r, "delta_mean", rep.delta_mean);
  add(r, "relative_spread", rep.relative_spread);
  add(r, "passes", rep.passes ? 1.0 : 0.0);
  add_homothety(r, "polar_projection", rep.polar_projection_homothety);
  const bool agree = rep.passes == rep.polar_projection_homothety.is_homothet;
  add_check(r, "tcvp_polar_projection_agree", agree ? 1.0 : 0.0, kTcvpTolerance, agree);
  const double ctr = ctr_constant(body, n_dirs);
  add(r, "c_tr", ctr);
  // 1 + 2 v_{n-1} / v_n: 1 + 4/pi in the plane, 5/2 in space.
  const double bound = body.dim() == 2 ? 1.0 + 4.0 / std::numbers::pi : 2.5;
  add_check(r, "c_tr_lower_bound_margin", ctr - bound, 1e-3, ctr >= bound - 1e-3);
}

void cmd_extend(const Options& o, RunReport& r) {
  const Body body = load(o).body;
  if (!body.is_polygon()) throw UsageError("extend needs a planar body");
  const Polygon& p = body.polygon();
  const ExtensionCurve curve = kl_extension(p, o.k, o.l);
  add(r, "k", o.k);
  add(r, "l", o.l);
  const bool admissible = extension_admissible(static_cast<int>(p.size()), o.k, o.l);
  add(r, "homothety_check_admissible", admissible ? 1.0 : 0.0);
  SvgScene scene;
  scene.base = p;
  scene.extensions.push_back(curve.vertices);
  if (admissible) {
    const ExtensionCheck check = extension_homothety_check(p, o.k, o.l);
    add_homothety(r, "extension", check.homothety);
    add(r, "extension_level", check.level);
    add(r, "level_residual", check.level_residual);
    if (check.level > p.area()) {
      const LevelSet<Polygon> ls = illumination_body(p, check.level - p.area());
      scene.level_curves.push_back(ls.body);
      if (check.homothety.is_homothet) {
        const double h = hausdorff_distance(convex_hull(curve.vertices), ls.body) / ls.body.diameter();
        add_check(r, "extension_vs_illumination_hausdorff", h, 1e-7, h < 1e-7);
      }
    }
  }
  const RegularityReport reg = is_affinely_regular(p);
  add(r, "tau", reg.tau);
  add(r, "regularity_residual", reg.max_residual);
  add(r, "is_affinely_regular", reg.is_affinely_regular ? 1.0 : 0.0);
  if (!o.json_path.empty()) {
    nlohmann::json doc;
    doc["k"] = curve.k;
    doc["l"] = curve.l;
    nlohmann::json verts = nlohmann::json::array();
    for (const Vec2& v : curve.vertices) verts.push_back({v.x, v.y});
    doc["vertices"] = std::move(verts);
    emit_artifact(r, o.json_path, doc.dump() + "\n");
  }
  if (!o.svg.empty()) emit_artifact(r, o.svg, to_svg(scene));
}

struct SearchResult {
  int vertices = 0;
  double min_defect = 0.0;
  std::string error;
};

void cmd_search(const Options& o, RunReport& r) {
  if (o.n < 1) throw UsageError("--n must be positive");
  const auto n = static_cast<std::size_t>(o.n);
  std::vector<SearchResult> results(n);
  auto work = [&](std::size_t i) {
    try {
      Rng rng = Rng::derive(o.seed, i);
      const int nv = rng.integer(6, 12);
      const Polytope3 p = random_polytope(rng, nv);
      double best = std::numeric_limits<double>::infinity();
      for (double factor : {0.05, 0.5, 2.0}) {
        const LevelSet<Polytope3> ls = illumination_body(p, factor * p.volume());
        best = std::min(best, homothety_fit(p, ls.body).defect);
      }
      results[i] = {nv, best, {}};
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) work(i);
    });
  }
  for (auto& t : pool) t.join();

  double overall = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (!results[i].error.empty()) {
      throw std::runtime_error("instance " + std::to_string(i) + ": " + results[i].error);
    }
    const double d = results[i].min_defect;
    add_check(r, "instance_" + std::to_string(i) + "_v" + std::to_string(results[i].vertices), d, 1e-3, d > 1e-3);
    overall = std::min(overall, d);
  }
  add_check(r, "min_defect", overall, 1e-3, overall > 1e-3);
}

void cmd_selftest(std::ostream& out, RunReport& r) {
  for (const CriterionResult& c : run_acceptance(out)) {
    r.rows.push_back({"criterion_" + std::to_string(c.id), c.pass ? 1.0 : 0.0, {}, c.pass});
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex hull function, illumination body and projection body toolkit", "hullfn"};
  app.require_subcommand(1);
  Options o;

  auto body_arg = [&](CLI::App* sub) {
    sub->add_option("body", o.body_path, "Body file (JSON)")->required();
    sub->add_flag("--strict", o.strict, "Reject input points that are not extreme");
    sub->add_option("--report", o.report, "Write the run report as JSON");
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate G_K, G_{K,lambda} and G_0 at t");
  body_arg(eval);
  eval->add_option("--t", o.t, "Translation vector x,y[,z]")->required();
  eval->add_option("--lambda", o.lambda, "Homothety ratio in [0, 1)");

  CLI::App* illum = app.add_subcommand("illum", "Construct the illumination body P^delta");
  body_arg(illum);
  illum->add_option("--delta", o.delta, "Volume excess delta > 0")->required();
  illum->add_option("--svg", o.svg, "SVG drawing (planar bodies)");
  illum->add_option("--off", o.off, "OFF mesh");
  illum->add_option("--json", o.json_path, "Body JSON");

  CLI::App* proj = app.add_subcommand("projbody", "Projection, polar projection and difference bodies");
  body_arg(proj);
  proj->add_option("--json", o.json_path, "JSON with all three bodies");
  proj->add_option("--off", o.off, "OFF path stem; one file per body");

  CLI::App* tcvp = app.add_subcommand("tcvp", "Translative constant volume property report");
  body_arg(tcvp);
  tcvp->add_option("--dirs", o.dirs, "Number of sample directions (>= 16)");

  CLI::App* extend = app.add_subcommand("extend", "(k,l)-extension of a polygon and its checks");
  body_arg(extend);
  extend->add_option("--k", o.k, "k >= 0");
  extend->add_option("--l", o.l, "l >= 0");
  extend->add_option("--svg", o.svg, "SVG drawing");
  extend->add_option("--json", o.json_path, "Extension curve JSON");

  CLI::App* search = app.add_subcommand("search", "Illumination homothety defects of random 3-polytopes");
  search->add_option("--n", o.n, "Number of instances");
  search->add_option("--seed", o.seed, "Random seed");
  search->add_option("--report", o.report, "Write the run report as JSON");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--report", o.report, "Write the run report as JSON");

  std::vector<const char*> argv{"hullfn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  RunReport report;
  for (const std::string& a : args) report.command += (report.command.empty() ? "" : " ") + a;
  report.seed = o.seed;
  try {
    if (eval->parsed()) cmd_eval(o, report);
    if (illum->parsed()) cmd_illum(o, report);
    if (proj->parsed()) cmd_projbody(o, report);
    if (tcvp->parsed()) cmd_tcvp(o, report);
    if (extend->parsed()) cmd_extend(o, report);
    if (search->parsed()) cmd_search(o, report);
    if (selftest->parsed()) cmd_selftest(out, report);
    if (!o.report.empty()) emit_artifact(report, o.report, to_json(report));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << to_csv(report);
  return report.all_pass() ? 0 : 2;
}

}  // namespace hullfn::cli
