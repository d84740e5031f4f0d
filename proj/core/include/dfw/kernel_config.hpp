#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfw/kernels.hpp"

namespace dfw {

/// Flat key=value form of a KernelSpec.
///
/// Keys: family, kind, n, m, scale, v (comma list), D, k, conductivity, c, C,
/// kappa (row-major comma list), distance_mode (EUCLIDEAN, FRACTIONAL:s,
/// WAVE_CONE:c, PSEUDO_EUCLIDEAN:c), normalization (PLAIN, MU_SCALED),
/// exponent_sign (+1/-1), variant (QUADRATIC, LINEAR), mass, hbar.

/// Applies one key. Returns false for keys that are not kernel keys; throws
/// ConfigError for malformed values.
bool apply_kernel_key(KernelSpec& spec, const std::string& key, const std::string& value);

/// Builds and validates a spec. With `allow_unknown` false any non-kernel key
/// is a ConfigError.
KernelSpec kernel_spec_from_map(const std::map<std::string, std::string>& values,
                                bool allow_unknown = false);

/// Canonical key/value list (full precision, fixed key order).
std::vector<std::pair<std::string, std::string>> kernel_spec_to_pairs(const KernelSpec& spec);

/// Single-line form: `family=LAPLACE kind=FUNDAMENTAL n=2 ...`.
std::string kernel_spec_to_inline(const KernelSpec& spec);
KernelSpec kernel_spec_from_inline(std::string_view text);

}  // namespace dfw
