#include "dfw/series.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "dfw/errors.hpp"
#include "dfw/kernel_config.hpp"
#include "dfw/text_io.hpp"

namespace dfw {

std::vector<KernelSpec> broadcast_specs(const std::vector<KernelSpec>& specs, std::size_t count) {
  if (specs.size() == count) return specs;
  if (specs.size() == 1) return std::vector<KernelSpec>(count, specs.front());
  throw ConfigError("need one kernel spec per center or a single shared spec");
}

Eigen::MatrixXd assemble(const std::vector<Point>& points, const std::vector<Point>& centers,
                         const std::vector<KernelSpec>& specs_in) {
  const std::vector<KernelSpec> specs = broadcast_specs(specs_in, centers.size());
  std::vector<std::string> keys;
  keys.reserve(specs.size());
  for (const auto& spec : specs) {
    if (spec.family == Family::SCHRODINGER) {
      throw ConfigError("the Schroedinger kernel is evaluation-only and cannot be used in a series");
    }
    spec.validate();
    keys.push_back(kernel_spec_to_inline(spec));
  }
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      if (keys[a] == keys[b] && centers[a].dim() == centers[b].dim() &&
          euclidean(centers[a], centers[b]) < 1e-12 && centers[a].t() == centers[b].t()) {
        throw ConfigError("duplicate center " + std::to_string(b) + " (same as " +
                          std::to_string(a) + ")");
      }
    }
  }
  const auto rows = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(centers.size());
  Eigen::MatrixXd A(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const KernelValue v = evaluate(specs[ju], points[static_cast<std::size_t>(i)], centers[ju]);
      if (v.singular || !std::isfinite(v.re)) {
        throw SingularEvaluationError(static_cast<std::size_t>(i), ju);
      }
      A(i, j) = v.re;
    }
  }
  return A;
}

double condition_number(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return 1.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& f,
                                    double regularization, double* condition_estimate) {
  if (!(regularization >= 0.0) || !std::isfinite(regularization)) {
    throw ConfigError("regularization must be >= 0");
  }
  if (A.rows() != f.size()) throw DimensionError("right-hand side size does not match the matrix");
  if (A.cols() == 0) return Eigen::VectorXd();
  const double cond = condition_number(A);
  if (condition_estimate) *condition_estimate = cond;
  if (regularization == 0.0) {
    if (A.rows() < A.cols()) {
      throw SingularSystemError("underdetermined system needs regularization > 0", cond);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < A.cols()) {
      throw SingularSystemError("rank-deficient system (rank " + std::to_string(qr.rank()) + " of " +
                                    std::to_string(A.cols()) + "); set regularization > 0",
                                cond);
    }
    return qr.solve(f);
  }
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  Eigen::MatrixXd aug(m + n, n);
  aug.topRows(m) = A;
  aug.bottomRows(n) = std::sqrt(regularization) * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + n);
  rhs.head(m) = f;
  return Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(aug).solve(rhs);
}

SeriesModel fit(const PointCloud& cloud, const std::vector<Point>& centers,
                const std::vector<KernelSpec>& specs_in, double regularization,
                std::shared_ptr<const HarmonicModel> harmonic_part) {
  cloud.check();
  if (!cloud.has_values()) throw ConfigError("fitting needs sample values (column f)");
  const std::vector<KernelSpec> specs = broadcast_specs(specs_in, centers.size());
  const Eigen::MatrixXd A = assemble(cloud.points, centers, specs);
  Eigen::VectorXd f(static_cast<Eigen::Index>(cloud.size()));
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double target = cloud.values[i];
    if (harmonic_part) target -= eval_interior(*harmonic_part, cloud.points[i]).value;
    f(static_cast<Eigen::Index>(i)) = target;
  }
  SeriesModel model;
  model.harmonic_part = std::move(harmonic_part);
  model.fit_report.regularization = regularization;
  const Eigen::VectorXd beta =
      solve_least_squares(A, f, regularization, &model.fit_report.condition_estimate);
  for (std::size_t j = 0; j < centers.size(); ++j) {
    model.terms.push_back({centers[j], specs[j], beta(static_cast<Eigen::Index>(j))});
  }
  std::vector<double> residual(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    residual[i] = evaluate(model, cloud.points[i]) - cloud.values[i];
  }
  model.fit_report.residual_rms = rms(residual);
  return model;
}

double evaluate(const SeriesModel& model, const Point& x) {
  double value = 0.0;
  if (model.harmonic_part) value = eval_interior(*model.harmonic_part, x).value;
  for (const auto& term : model.terms) {
    const KernelValue k = evaluate(term.spec, x, term.center);
    if (k.singular) throw SingularEvaluationError("series evaluated on a kernel singularity");
    value += term.coefficient * k.re;
  }
  return value;
}

std::vector<double> evaluate(const SeriesModel& model, const std::vector<Point>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(evaluate(model, p));
  return out;
}

void write_series_model(std::ostream& out, const SeriesModel& model) {
  out << "dfw-series-model v1\n";
  out << "terms " << model.terms.size() << '\n';
  out << "residual_rms " << format_double(model.fit_report.residual_rms) << '\n';
  out << "condition_estimate " << format_double(model.fit_report.condition_estimate) << '\n';
  out << "regularization " << format_double(model.fit_report.regularization) << '\n';
  for (const auto& term : model.terms) {
    out << "term coef=" << format_double(term.coefficient) << " center=";
    const auto& c = term.center.coords();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << format_double(c[i]);
    if (term.center.has_time()) out << " center_t=" << format_double(*term.center.t());
    out << ' ' << kernel_spec_to_inline(term.spec) << '\n';
  }
  out << "harmonic " << (model.harmonic_part ? 1 : 0) << '\n';
  if (model.harmonic_part) write_harmonic_model(out, *model.harmonic_part);
}

SeriesModel read_series_model(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!trim(line).empty()) return std::string(trim(line));
    }
    throw ConfigError("truncated series model");
  };
  auto header_value = [&](const std::string& name) {
    std::istringstream s(next_line());
    std::string key;
    std::string value;
    s >> key >> value;
    if (key != name) throw ConfigError("series model: expected '" + name + "', got '" + key + "'");
    return value;
  };
  if (next_line() != "dfw-series-model v1") throw ConfigError("not a series model file");
  SeriesModel model;
  const long count = parse_long(header_value("terms"), "term count");
  model.fit_report.residual_rms = parse_double(header_value("residual_rms"));
  model.fit_report.condition_estimate = parse_double(header_value("condition_estimate"));
  model.fit_report.regularization = parse_double(header_value("regularization"));
  for (long t = 0; t < count; ++t) {
    std::istringstream tokens(next_line());
    std::string word;
    tokens >> word;
    if (word != "term") throw ConfigError("series model: expected 'term'");
    std::map<std::string, std::string> kv;
    while (tokens >> word) {
      auto [key, value] = split_key_value(word);
      kv[key] = value;
    }
    if (!kv.count("coef") || !kv.count("center")) throw ConfigError("term needs coef and center");
    SeriesTerm term;
    term.coefficient = parse_double(kv["coef"], "coef");
    std::optional<double> t_center;
    if (kv.count("center_t")) t_center = parse_double(kv["center_t"], "center_t");
    term.center = Point(parse_double_list(kv["center"]), t_center);
    kv.erase("coef");
    kv.erase("center");
    kv.erase("center_t");
    term.spec = kernel_spec_from_map(kv);
    model.terms.push_back(std::move(term));
  }
  const std::string harmonic = header_value("harmonic");
  if (harmonic == "1") {
    model.harmonic_part = std::make_shared<const HarmonicModel>(read_harmonic_model(in));
  } else if (harmonic != "0") {
    throw ConfigError("series model: harmonic flag must be 0 or 1");
  }
  return model;
}

}  // namespace dfw
