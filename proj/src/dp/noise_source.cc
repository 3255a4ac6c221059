// Copyright 2026 The aggpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aggpriv/dp/noise_source.h"

#include <cmath>
#include <string>

#include "aggpriv/errors.h"

namespace aggpriv {

NoiseSource::NoiseSource(std::uint64_t seed, NoiseMode mode)
    : seed_(seed), mode_(mode), engine_(seed) {}

double bits_to_open_unit(std::uint64_t bits) {
  // 52 significant bits, offset by half a step so 0 and 1 are unreachable.
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

double NoiseSource::uniform() { return bits_to_open_unit(engine_()); }

double laplace_inverse_cdf(double u, double scale) {
  const double centered = u - 0.5;
  if (centered == 0.0) return 0.0;
  const double sign = centered > 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::abs(centered));
}

double NoiseSource::laplace(double scale) {
  if (noise_off()) {
    if (scale < 0.0 || std::isnan(scale)) {
      throw ParameterError("laplace: negative scale");
    }
    return 0.0;
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ParameterError("laplace: scale must be positive and finite, got " +
                         std::to_string(scale));
  }
  return laplace_inverse_cdf(uniform(), scale);
}

double laplace_sample(double scale, NoiseSource& src) {
  return src.laplace(scale);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace aggpriv
