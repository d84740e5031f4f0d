#include "dfw_cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "dfw/errors.hpp"
#include "dfw/fractional.hpp"
#include "dfw/green.hpp"
#include "dfw/kernel_config.hpp"
#include "dfw/kernels.hpp"
#include "dfw/mr.hpp"
#include "dfw/point_cloud.hpp"
#include "dfw/series.hpp"
#include "dfw/sigmoid.hpp"
#include "dfw/text_io.hpp"
#include "dfw/transform.hpp"

namespace dfw::cli {
namespace {

// Key/value parameters with tracking of which keys a command consumed, so
// typos are reported instead of silently ignored.
class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& values) : values_(values) {}

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string str(const std::string& key, const std::string& fallback = "") {
    used_.insert(key);
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  std::string require(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required parameter '" + key + "'");
    return str(key);
  }

  double num(const std::string& key, double fallback) {
    return has(key) ? parse_double(str(key), key) : (used_.insert(key), fallback);
  }

  long integer(const std::string& key, long fallback) {
    return has(key) ? parse_long(str(key), key) : (used_.insert(key), fallback);
  }

  std::vector<double> list(const std::string& key) {
    return has(key) ? parse_double_list(str(key)) : (used_.insert(key), std::vector<double>{});
  }

  /// Consumes every kernel key present.
  KernelSpec kernel() {
    KernelSpec spec;
    for (const auto& [key, value] : values_) {
      if (apply_kernel_key(spec, key, value)) used_.insert(key);
    }
    spec.validate();
    return spec;
  }

  void mark(const std::string& key) { used_.insert(key); }

  void check_all_used() const {
    for (const auto& [key, value] : values_) {
      if (!used_.count(key)) throw ConfigError("unknown parameter '" + key + "'");
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

// Outputs are buffered and written only after a command succeeds, so a
// failing run never leaves a truncated file behind.
struct Context {
  const RunConfig& config;
  Params params;
  std::ostringstream primary;  // --out file, or the out stream
  std::ostringstream report;   // always the out stream
  std::map<std::string, std::string> extra_files;
  std::ostream& err;

  const std::string& input(std::size_t i, const char* what) const {
    if (config.inputs.size() <= i) throw ConfigError(std::string("missing --input for ") + what);
    return config.inputs[i];
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << content;
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  return in;
}

std::vector<Point> read_points_csv(const std::string& path) {
  const PointCloud cloud = read_point_cloud_file(path);
  return cloud.points;
}

std::vector<Point> centers_from(Params& p, const PointCloud& cloud) {
  const std::string spec = p.str("centers", "data");
  if (spec == "data") return cloud.points;
  return read_points_csv(spec);
}

std::shared_ptr<const HarmonicModel> harmonic_from(Params& p) {
  if (!p.has("harmonic")) {
    p.mark("harmonic");
    return nullptr;
  }
  auto in = open_input(p.str("harmonic"));
  return std::make_shared<const HarmonicModel>(read_harmonic_model(in));
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> linspace(double lo, double hi, long steps) {
  if (steps < 1) throw ConfigError("steps must be >= 1");
  std::vector<double> v;
  for (long i = 0; i < steps; ++i) {
    v.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return v;
}

bool is_time_space(Family f) {
  return f == Family::HEAT || f == Family::SCHRODINGER || f == Family::GEODESIC_HEAT;
}

std::size_t table_dimension(Params& p, const KernelSpec& spec, const std::vector<double>& center) {
  if (p.has("dim")) {
    const long d = p.integer("dim", 1);
    if (d < 1) throw ConfigError("dim must be >= 1");
    return static_cast<std::size_t>(d);
  }
  p.mark("dim");
  if (!center.empty()) return center.size();
  if (!spec.direction.empty()) return spec.direction.size();
  if (spec.anisotropy) return spec.anisotropy->dim();
  if (spec.family == Family::AXISYM_LAPLACE || spec.family == Family::TRANSLATE_HARMONIC) return 2;
  if (spec.n == std::floor(spec.n)) return static_cast<std::size_t>(spec.n);
  return 1;
}

int cmd_kernel_table(Context& ctx) {
  Params& p = ctx.params;
  const KernelSpec spec = p.kernel();
  const auto r = linspace(p.num("rmin", 0.0), p.num("rmax", 1.0), p.integer("steps", 11));
  const std::vector<double> center_coords = p.list("center");
  const double dt = p.num("dt", 1.0);
  const bool radial = is_radial(spec.family) && spec.distance_mode == DistanceMode::EUCLIDEAN;
  const std::size_t dim = table_dimension(p, spec, center_coords);
  p.check_all_used();

  std::vector<double> c = center_coords.empty() ? std::vector<double>(dim, 0.0) : center_coords;
  if (c.size() != dim) throw ConfigError("center dimension does not match dim");
  Point center = is_time_space(spec.family) ? Point(c, 0.0) : Point(c);

  write_csv_header(ctx.primary, {"r", "re", "im"});
  for (double ri : r) {
    KernelValue v;
    if (radial) {
      v = evaluate_radial(spec, ri);
    } else {
      std::vector<double> x = c;
      x[0] += ri;
      v = evaluate(spec, is_time_space(spec.family) ? Point(x, dt) : Point(x), center);
    }
    if (v.singular) {
      throw SingularEvaluationError("kernel is singular at r = " + format_double(ri));
    }
    write_csv_row(ctx.primary, {ri, v.re, v.im});
  }
  return kOk;
}

int cmd_fit(Context& ctx) {
  Params& p = ctx.params;
  const PointCloud cloud = read_point_cloud_file(ctx.input(0, "fit"));
  const KernelSpec spec = p.kernel();
  const std::vector<Point> centers = centers_from(p, cloud);
  const double reg = p.num("reg", 0.0);
  auto harmonic = harmonic_from(p);
  p.check_all_used();
  if (ctx.config.output.empty()) throw ConfigError("fit needs --out for the model file");

  const SeriesModel model = fit(cloud, centers, {spec}, reg, harmonic);
  write_series_model(ctx.primary, model);
  write_csv_header(ctx.report, {"residual_rms", "condition_estimate", "regularization", "n_terms"});
  write_csv_row(ctx.report, {model.fit_report.residual_rms, model.fit_report.condition_estimate,
                          model.fit_report.regularization, static_cast<double>(model.terms.size())});
  return kOk;
}

int cmd_predict(Context& ctx) {
  Params& p = ctx.params;
  auto model_in = open_input(p.require("model"));
  const SeriesModel model = read_series_model(model_in);
  const PointCloud cloud = read_point_cloud_file(ctx.input(0, "predict"));
  p.check_all_used();

  std::vector<std::string> header;
  for (std::size_t d = 0; d < cloud.dim(); ++d) header.push_back("x" + std::to_string(d + 1));
  if (cloud.has_time()) header.push_back("t");
  header.push_back("value");
  if (cloud.has_values()) {
    header.push_back("f");
    header.push_back("residual");
  }
  write_csv_header(ctx.primary, header);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point& x = cloud.points[i];
    std::vector<double> row = x.coords();
    if (x.has_time()) row.push_back(*x.t());
    const double value = evaluate(model, x);
    row.push_back(value);
    if (cloud.has_values()) {
      row.push_back(cloud.values[i]);
      row.push_back(value - cloud.values[i]);
    }
    write_csv_row(ctx.primary, row);
  }
  return kOk;
}

BoundaryMesh mesh_from_params(Params& p, std::size_t default_n) {
  const std::string shape = p.str("shape", "circle");
  const long n = p.integer("N", static_cast<long>(default_n));
  if (n < 3) throw ConfigError("N must be >= 3");
  if (shape == "circle") {
    const double cx = p.num("cx", 0.0);
    const double cy = p.num("cy", 0.0);
    const double radius = p.num("radius", 1.0);
    if (!(radius > 0.0)) throw ConfigError("radius must be > 0");
    return discretize_circle(cx, cy, radius, static_cast<std::size_t>(n));
  }
  if (shape == "polygon") {
    std::vector<std::array<double, 2>> vertices;
    for (const auto& pair : split(p.require("vertices"), ';')) {
      const auto xy = parse_double_list(pair);
      if (xy.size() != 2) throw ConfigError("polygon vertices are 'x,y;x,y;...'");
      vertices.push_back({xy[0], xy[1]});
    }
    return discretize_polygon(vertices, static_cast<std::size_t>(n));
  }
  throw ConfigError("shape must be circle or polygon");
}

int cmd_bvp_harmonic(Context& ctx) {
  Params& p = ctx.params;
  std::vector<BoundarySample> samples;
  {
    auto in = open_input(ctx.input(0, "bvp-harmonic"));
    samples = read_boundary_csv(in);
  }
  const BoundaryMesh mesh = mesh_from_params(p, samples.size());
  const std::string probes = p.str("probes");
  const std::string values_path = p.str("values");
  p.check_all_used();
  if (ctx.config.output.empty()) throw ConfigError("bvp-harmonic needs --out for the model file");

  const HarmonicModel model = solve_dirichlet(mesh, match_boundary_samples(mesh, samples));
  {
      write_harmonic_model(ctx.primary, model);
  }
  if (probes.empty()) {
    write_csv_header(ctx.report, {"elements", "perimeter", "constant"});
    write_csv_row(ctx.report, {static_cast<double>(mesh.size()), mesh.perimeter(), model.constant});
    return kOk;
  }
  const std::vector<Point> points = read_points_csv(probes);
  std::ostringstream values;
  write_csv_header(values, {"x1", "x2", "value", "near_boundary"});
  for (const auto& x : points) {
    if (x.dim() != 2) throw DimensionError("probe points must be 2D");
    const InteriorValue v = eval_interior(model, x);
    write_csv_row(values, {x[0], x[1], v.value, v.near_boundary ? 1.0 : 0.0});
  }
  if (values_path.empty()) {
    ctx.report << values.str();
  } else {
    ctx.extra_files[values_path] = values.str();
  }
  return kOk;
}

int cmd_mr_decompose(Context& ctx) {
  Params& p = ctx.params;
  const PointCloud cloud = read_point_cloud_file(ctx.input(0, "mr-decompose"));
  const LadderFamily family = parse_ladder_family(p.str("family", cloud.dim() == 2 ? "LAPLACE_2D" : "LAPLACE_3D"));
  const std::vector<Point> centers = centers_from(p, cloud);
  MROptions options;
  options.max_order = static_cast<int>(p.integer("max_order", 3));
  options.tol = p.num("tol", 0.0);
  options.threshold = p.num("threshold", 0.0);
  options.regularization = p.num("reg", 0.0);
  options.harmonic = harmonic_from(p);
  p.check_all_used();

  const MRLadder ladder = mr_decompose(cloud, family, centers, options);
  write_ladder_report(ctx.primary, ladder);
  ctx.err << "terminated_reason=" << to_string(ladder.terminated_reason) << '\n';
  return kOk;
}

TransformKind parse_transform_kind(const std::string& s) {
  if (s == "KERNEL") return TransformKind::KERNEL;
  if (s == "WEYL") return TransformKind::WEYL;
  if (s == "HILBERT") return TransformKind::HILBERT;
  if (s == "ABEL") return TransformKind::ABEL;
  if (s == "STIELTJES") return TransformKind::STIELTJES;
  throw ConfigError("unknown transform kind '" + s + "'");
}

ParameterAxis parse_axis(const std::string& s) {
  if (s == "SCALE") return ParameterAxis::SCALE;
  if (s == "DIMENSION") return ParameterAxis::DIMENSION;
  if (s == "ORDER") return ParameterAxis::ORDER;
  throw ConfigError("unknown parameter axis '" + s + "'");
}

Quadrature parse_quadrature(const std::string& s) {
  if (s == "MIDPOINT") return Quadrature::MIDPOINT;
  if (s == "TRAPEZOID") return Quadrature::TRAPEZOID;
  throw ConfigError("unknown quadrature '" + s + "'");
}

AnalysisMode parse_analysis(const std::string& s) {
  if (s == "plain" || s == "PLAIN") return AnalysisMode::PLAIN;
  if (s == "reciprocal" || s == "RECIPROCAL") return AnalysisMode::RECIPROCAL;
  throw ConfigError("analysis must be plain or reciprocal");
}

int cmd_transform(Context& ctx) {
  Params& p = ctx.params;
  const PointCloud f = read_point_cloud_file(ctx.input(0, "transform"));
  TransformOptions options;
  options.kind = parse_transform_kind(p.str("kind", "KERNEL"));
  options.axis = parse_axis(p.str("axis", "SCALE"));
  options.analysis = parse_analysis(p.str("analysis", "plain"));
  options.stieltjes_p = p.num("p", 1.0);
  options.kernel = p.kernel();
  std::vector<double> parameters = p.list("parameters");
  const double pmin = p.num("pmin", 1.0);
  const double pmax = p.num("pmax", 1.0);
  const long psteps = p.integer("psteps", 1);
  if (parameters.empty()) parameters = linspace(pmin, pmax, psteps);
  std::vector<Point> translates;
  if (p.has("translates")) {
    translates = read_points_csv(p.str("translates"));
  } else if (p.has("xi")) {
    for (const auto& item : split(p.str("xi"), ';')) translates.emplace_back(parse_double_list(item));
  } else {
    p.mark("translates");
    p.mark("xi");
    translates.emplace_back(std::vector<double>(f.dim(), 0.0));
  }
  const Quadrature quadrature = parse_quadrature(p.str("quadrature", "MIDPOINT"));
  p.check_all_used();

  const TransformGrid grid = TransformGrid::make(parameters, translates, quadrature);
  const TransformResult result = forward_transform(f, grid, options);
  if (result.coarse_grid) {
    ctx.err << "warning: fewer than 8 samples across the analysis kernel width\n";
  }
  std::vector<std::string> header = {"parameter", "translate"};
  for (std::size_t d = 0; d < f.dim(); ++d) header.push_back("xi" + std::to_string(d + 1));
  header.push_back("re");
  header.push_back("im");
  write_csv_header(ctx.primary, header);
  for (Eigen::Index a = 0; a < result.values.rows(); ++a) {
    for (Eigen::Index b = 0; b < result.values.cols(); ++b) {
      std::vector<double> row = {grid.parameters[static_cast<std::size_t>(a)], static_cast<double>(b)};
      for (double xi : grid.translates[static_cast<std::size_t>(b)].coords()) row.push_back(xi);
      row.push_back(result.values(a, b).real());
      row.push_back(result.values(a, b).imag());
      write_csv_row(ctx.primary, row);
    }
  }
  return kOk;
}

int cmd_frac(Context& ctx) {
  Params& p = ctx.params;
  const int dim = static_cast<int>(p.integer("dim", 1));
  const int n = static_cast<int>(p.integer("n", 8));
  const double h = p.num("h", 1.0);
  const double y = parse_double(p.require("y"), "y");
  p.check_all_used();

  const GridOperator op = build_discrete_laplacian(dim, n, h);
  Eigen::VectorXd vec(op.size());
  if (!ctx.config.inputs.empty()) {
    const CsvTable table = read_csv_file(ctx.config.inputs[0]);
    const std::size_t col = table.column("p");
    if (static_cast<Eigen::Index>(table.rows.size()) != op.size()) {
      throw DimensionError("vector has " + std::to_string(table.rows.size()) + " rows; grid has " +
                           std::to_string(op.size()) + " unknowns");
    }
    for (Eigen::Index i = 0; i < op.size(); ++i) vec(i) = table.rows[static_cast<std::size_t>(i)][col];
  } else {
    std::mt19937_64 rng(ctx.config.seed);
    for (Eigen::Index i = 0; i < op.size(); ++i) vec(i) = 2.0 * unit_uniform(rng) - 1.0;
  }
  const Eigen::VectorXd result = apply_fractional_laplacian(op, y, vec);
  write_csv_header(ctx.primary, {"index", "p", "result"});
  for (Eigen::Index i = 0; i < op.size(); ++i) {
    write_csv_row(ctx.primary, {static_cast<double>(i), vec(i), result(i)});
  }
  return kOk;
}

int cmd_powerlaw_fit(Context& ctx) {
  Params& p = ctx.params;
  std::vector<AttenuationSample> samples;
  const bool synthetic = ctx.config.inputs.empty();
  const double alpha0 = p.num("alpha0", 0.5);
  const double y = p.num("y", 1.3);
  const long count = p.integer("count", 20);
  const double omega_min = p.num("omega_min", 1.0);
  const double omega_max = p.num("omega_max", 100.0);
  const double noise = p.num("noise", 0.0);
  const std::string samples_out = p.str("samples_out");
  p.check_all_used();

  if (synthetic) {
    if (count < 2) throw ConfigError("count must be >= 2");
    if (!(omega_min > 0.0) || !(omega_max > omega_min)) throw ConfigError("need 0 < omega_min < omega_max");
    if (!(noise >= 0.0) || noise >= 1.0) throw ConfigError("noise must be in [0, 1)");
    std::mt19937_64 rng(ctx.config.seed);
    const double ratio = std::log(omega_max / omega_min);
    for (long i = 0; i < count; ++i) {
      const double omega = omega_min * std::exp(ratio * static_cast<double>(i) / static_cast<double>(count - 1));
      double alpha = alpha0 * std::pow(omega, y);
      if (noise > 0.0) alpha *= 1.0 + noise * (2.0 * unit_uniform(rng) - 1.0);
      samples.push_back({omega, alpha});
    }
    if (!samples_out.empty()) {
      std::ostringstream text;
      write_attenuation_csv(text, samples);
      ctx.extra_files[samples_out] = text.str();
    }
  } else {
    samples = read_attenuation_csv_file(ctx.config.inputs[0]);
  }
  const PowerLawFit fit_result = fit_power_law(samples);
  if (fit_result.out_of_range) ctx.err << "warning: fitted exponent y is outside [0, 2]\n";
  write_csv_header(ctx.primary, {"alpha0", "y", "rms_log_residual", "out_of_range", "samples"});
  write_csv_row(ctx.primary, {fit_result.alpha0, fit_result.y, fit_result.rms_log_residual,
                        fit_result.out_of_range ? 1.0 : 0.0, static_cast<double>(samples.size())});
  return kOk;
}

int cmd_sigmoid_table(Context& ctx) {
  Params& p = ctx.params;
  const std::string function = p.str("function", "sigmoid");
  SigmoidSpec spec;
  spec.family = parse_sigmoid_family(p.str("family", "LOGISTIC"));
  spec.n = p.num("n", 1.0);
  spec.s = p.num("s", 1.0);
  spec.w = p.list("w");
  spec.D = p.num("D", 1.0);
  spec.projection = p.num("projection", 0.0);
  spec.alpha = p.num("alpha", 1.0);
  spec.time_lag = p.num("time_lag", 1.0);
  const auto A = linspace(p.num("amin", 0.1), p.num("amax", 10.0), p.integer("steps", 100));
  p.check_all_used();

  if (function == "sigmoid") {
    write_csv_header(ctx.primary, {"A", "sigma"});
    for (double a : A) write_csv_row(ctx.primary, {a, sigmoid(spec, a)});
    return kOk;
  }
  const HyperbolicKind kind = parse_hyperbolic_kind(function);
  write_csv_header(ctx.primary, {"r", function, "flag"});
  for (double r : A) {
    const FlaggedValue v = hyperbolic_g(kind, spec.n, spec.s, r);
    write_csv_row(ctx.primary, {r, v.ok() ? v.value : std::nan(""), static_cast<double>(v.flag)});
  }
  return kOk;
}

int cmd_plot(Context& ctx) {
  Params& p = ctx.params;
  PlotOptions options;
  options.x_column = p.str("x");
  for (const auto& name : split(p.str("y"), ',')) {
    if (!trim(name).empty()) options.y_columns.emplace_back(trim(name));
  }
  const std::string style = p.str("style", "line");
  if (style != "line" && style != "scatter") throw ConfigError("style must be line or scatter");
  options.scatter = style == "scatter";
  options.width = static_cast<int>(p.integer("width", 640));
  options.height = static_cast<int>(p.integer("height", 480));
  options.title = p.str("title");
  p.check_all_used();

  auto in = open_input(ctx.input(0, "plot"));
  write_svg_plot(ctx.primary, in, options);
  return kOk;
}

using Command = std::function<int(Context&)>;

const std::map<std::string, std::pair<Command, std::string>>& commands() {
  static const std::map<std::string, std::pair<Command, std::string>> table = {
      {"kernel-table", {cmd_kernel_table, "evaluate a kernel spec on an r grid"}},
      {"fit", {cmd_fit, "fit a kernel series to a point cloud"}},
      {"predict", {cmd_predict, "evaluate a fitted series model at points"}},
      {"bvp-harmonic", {cmd_bvp_harmonic, "solve a 2D Dirichlet problem on a boundary mesh"}},
      {"mr-decompose", {cmd_mr_decompose, "stagewise multiple-reciprocity decomposition"}},
      {"transform", {cmd_transform, "forward transform of gridded samples"}},
      {"frac", {cmd_frac, "apply a fractional power of the discrete Laplacian"}},
      {"powerlaw-fit", {cmd_powerlaw_fit, "fit alpha = alpha0 omega^y"}},
      {"sigmoid-table", {cmd_sigmoid_table, "tabulate a kernel sigmoid or hyperbolic function"}},
      {"plot", {cmd_plot, "render CSV columns as an SVG chart"}},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : commands()) names.push_back(name);
  return names;
}

RunConfig parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"dfw: distance function wavelet kernel toolkit", "dfw"};
  RunConfig config;
  std::string config_path;
  std::vector<std::string> positional;
  app.add_option("command", config.command, "subcommand")->required();
  app.add_option("params", positional, "key=value parameters");
  app.add_option("-i,--input", config.inputs, "input file (repeatable)");
  app.add_option("-o,--out", config.output, "output file");
  app.add_option("-c,--config", config_path, "key=value config file");
  app.add_option("-s,--seed", config.seed, "seed for synthetic data");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (!commands().count(config.command)) throw ConfigError("unknown command '" + config.command + "'");
  if (!config_path.empty()) config.params = parse_key_values_file(config_path);
  for (const auto& token : positional) {
    auto [key, value] = split_key_value(token);
    config.params[key] = value;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto it = commands().find(config.command);
    if (it == commands().end()) throw ConfigError("unknown command '" + config.command + "'");
    Context ctx{config, Params(config.params), {}, {}, {}, err};
    const int code = it->second.first(ctx);
    if (code != kOk) return code;
    if (config.output.empty()) {
      out << ctx.primary.str();
    } else {
      write_file(config.output, ctx.primary.str());
    }
    for (const auto& [path, content] : ctx.extra_files) write_file(path, content);
    out << ctx.report.str();
    return kOk;
  } catch (const NumericError& e) {
    err << "dfw " << config.command << ": numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const PoleError& e) {
    err << "dfw " << config.command << ": numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const RangeError& e) {
    err << "dfw " << config.command << ": numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const Error& e) {
    err << "dfw " << config.command << ": " << e.what() << '\n';
    return kConfigError;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "-h" || args[0] == "--help" || args[0] == "help") {
    out << "usage: dfw <command> [key=value ...] [--input FILE] [--out FILE] [--config FILE] [--seed N]\n\n";
    for (const auto& [name, entry] : commands()) out << "  " << name << "  " << entry.second << '\n';
    return args.empty() ? kConfigError : kOk;
  }
  RunConfig config;
  try {
    config = parse_command_line(args);
  } catch (const Error& e) {
    err << "dfw: " << e.what() << '\n';
    return kConfigError;
  }
  return run(config, out, err);
}

}  // namespace dfw::cli
