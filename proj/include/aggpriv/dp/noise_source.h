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

#pragma once

#include <cstdint>
#include <random>

namespace aggpriv {

enum class NoiseMode { kNoisy, kNoiseOff };

// Seeded randomness for every mechanism. In kNoiseOff mode Laplace draws are
// exactly zero (and consume nothing) and selection mechanisms return their
// argmax; uniform draws used for rounding are unaffected.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed, NoiseMode mode = NoiseMode::kNoisy);

  std::uint64_t seed() const { return seed_; }
  NoiseMode mode() const { return mode_; }
  bool noise_off() const { return mode_ == NoiseMode::kNoiseOff; }

  // Raw 64 random bits.
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1); endpoints are never returned.
  double uniform();

  // Lap(scale). Throws ParameterError on scale <= 0 in noisy mode.
  double laplace(double scale);

 private:
  std::uint64_t seed_;
  NoiseMode mode_;
  std::mt19937_64 engine_;
};

// Inverse CDF of Lap(scale) at u in (0, 1).
double laplace_inverse_cdf(double u, double scale);

double laplace_sample(double scale, NoiseSource& src);

// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform on (0, 1) from 64 random bits, with the same mapping as
// NoiseSource::uniform.
double bits_to_open_unit(std::uint64_t bits);

}  // namespace aggpriv
