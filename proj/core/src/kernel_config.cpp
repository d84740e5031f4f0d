#include "dfw/kernel_config.hpp"

#include <cmath>
#include <sstream>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"

namespace dfw {
namespace {

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

void parse_distance_mode(KernelSpec& spec, const std::string& value) {
  const auto colon = value.find(':');
  const std::string name = value.substr(0, colon);
  if (name == "EUCLIDEAN") {
    if (colon != std::string::npos) throw ConfigError("EUCLIDEAN takes no parameter");
    spec.distance_mode = DistanceMode::EUCLIDEAN;
    return;
  }
  if (colon == std::string::npos) throw ConfigError("distance_mode " + name + " needs ':<param>'");
  const double param = parse_double(value.substr(colon + 1), "distance_mode parameter");
  if (name == "FRACTIONAL") {
    spec.distance_mode = DistanceMode::FRACTIONAL;
  } else if (name == "WAVE_CONE") {
    spec.distance_mode = DistanceMode::WAVE_CONE;
  } else if (name == "PSEUDO_EUCLIDEAN") {
    spec.distance_mode = DistanceMode::PSEUDO_EUCLIDEAN;
  } else {
    throw ConfigError("unknown distance_mode '" + name + "'");
  }
  spec.distance_param = param;
}

}  // namespace

bool apply_kernel_key(KernelSpec& spec, const std::string& key, const std::string& value) {
  if (key == "family") {
    spec.family = parse_family(value);
  } else if (key == "kind") {
    spec.kind = parse_kind(value);
  } else if (key == "n") {
    spec.n = parse_double(value, "n");
  } else if (key == "m") {
    spec.m = static_cast<int>(parse_long(value, "m"));
  } else if (key == "scale") {
    spec.scale = parse_double(value, "scale");
  } else if (key == "v") {
    spec.direction = parse_double_list(value);
  } else if (key == "D") {
    spec.D = parse_double(value, "D");
  } else if (key == "k") {
    spec.k = parse_double(value, "k");
  } else if (key == "conductivity") {
    spec.conductivity = parse_double(value, "conductivity");
  } else if (key == "c") {
    spec.c = parse_double(value, "c");
  } else if (key == "C") {
    spec.C = parse_double(value, "C");
  } else if (key == "kappa") {
    const auto entries = parse_double_list(value);
    const auto dim = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
    if (dim == 0 || static_cast<std::size_t>(dim * dim) != entries.size()) {
      throw ConfigError("kappa needs a square number of entries");
    }
    Eigen::MatrixXd kappa(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) kappa(i, j) = entries[static_cast<std::size_t>(i * dim + j)];
    }
    try {
      spec.anisotropy = AnisotropyMatrix(kappa);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("kappa: ") + e.what());
    }
  } else if (key == "distance_mode") {
    parse_distance_mode(spec, value);
  } else if (key == "normalization") {
    spec.normalization = parse_normalization(value);
  } else if (key == "exponent_sign") {
    spec.exponent_sign = parse_double(value, "exponent_sign");
  } else if (key == "variant") {
    spec.variant = parse_variant(value);
  } else if (key == "mass") {
    spec.mass = parse_double(value, "mass");
  } else if (key == "hbar") {
    spec.hbar = parse_double(value, "hbar");
  } else {
    return false;
  }
  return true;
}

KernelSpec kernel_spec_from_map(const std::map<std::string, std::string>& values,
                                bool allow_unknown) {
  KernelSpec spec;
  for (const auto& [key, value] : values) {
    if (!apply_kernel_key(spec, key, value) && !allow_unknown) {
      throw ConfigError("unknown kernel key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

std::vector<std::pair<std::string, std::string>> kernel_spec_to_pairs(const KernelSpec& spec) {
  std::vector<std::pair<std::string, std::string>> out = {
      {"family", to_string(spec.family)},
      {"kind", to_string(spec.kind)},
      {"n", format_double(spec.n)},
      {"m", std::to_string(spec.m)},
      {"scale", format_double(spec.scale)},
  };
  if (!spec.direction.empty()) out.emplace_back("v", join(spec.direction));
  out.emplace_back("D", format_double(spec.D));
  out.emplace_back("k", format_double(spec.k));
  out.emplace_back("conductivity", format_double(spec.conductivity));
  out.emplace_back("c", format_double(spec.c));
  out.emplace_back("C", format_double(spec.C));
  if (spec.anisotropy) {
    const auto& K = spec.anisotropy->kappa();
    std::vector<double> entries;
    for (Eigen::Index i = 0; i < K.rows(); ++i) {
      for (Eigen::Index j = 0; j < K.cols(); ++j) entries.push_back(K(i, j));
    }
    out.emplace_back("kappa", join(entries));
  }
  std::string mode = to_string(spec.distance_mode);
  if (spec.distance_mode != DistanceMode::EUCLIDEAN) mode += ":" + format_double(spec.distance_param);
  out.emplace_back("distance_mode", mode);
  out.emplace_back("normalization", to_string(spec.normalization));
  out.emplace_back("exponent_sign", format_double(spec.exponent_sign));
  out.emplace_back("variant", to_string(spec.variant));
  out.emplace_back("mass", format_double(spec.mass));
  out.emplace_back("hbar", format_double(spec.hbar));
  return out;
}

std::string kernel_spec_to_inline(const KernelSpec& spec) {
  std::string out;
  for (const auto& [key, value] : kernel_spec_to_pairs(spec)) {
    if (!out.empty()) out += ' ';
    out += key + '=' + value;
  }
  return out;
}

KernelSpec kernel_spec_from_inline(std::string_view text) {
  std::istringstream in{std::string(text)};
  return kernel_spec_from_map(parse_key_values(in));
}

}  // namespace dfw
