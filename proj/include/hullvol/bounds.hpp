// Copyright 2026 The hullvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HULLVOL_BOUNDS_HPP_
#define HULLVOL_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hullvol/random_stream.hpp"
#include "hullvol/sampling.hpp"

namespace hullvol::bounds {

inline constexpr double kEulerGamma = 0.57721566490153286061;
// Base of the exponential sample-size threshold that guarantees coverage.
inline constexpr double kCoverageBase = 300.0;

// Lower-tail bound for W = W_1 + ... + W_m with W_i exponential of rate a_i:
// P(W <= lambda mu) <= exp(-a_min mu (lambda - 1 - log lambda)).
struct JansonInput {
  std::vector<double> rates;
  double lambda = 1.0;
};

struct JansonResult {
  double bound = 1.0;
  double mean = 0.0;      // mu = sum 1/a_i
  double min_rate = 0.0;  // a_min
  // Set when lambda > 1: the same exponent applied to the upper tail
  // P(W >= lambda mu), a regime the lower-tail statement does not cover.
  bool extended = false;
};

JansonResult janson_bound(const JansonInput& input, bool allow_extended = false);

// psi(t) = t - 1 - log t; +inf at t = 0.
double psi(double t);

struct PsiValues {
  double psi = 0.0;
  double psi1 = 0.0;  // psi on (0, 1], zero beyond
  double psi2 = 0.0;  // psi on (1, inf), zero before
  double f = 0.0;     // psi1(t / (1 - delta)) + psi2(t / (1 + delta))
};

PsiValues psi_family(double t, double delta);

// -log d + sum_i psi(d x_i): a lower bound on the Legendre transform of the
// log-MGF of a uniform point of the orthogonal simplex. Requires d >= 7.
// Returns +inf when some coordinate is zero.
double lambda_star_lower(std::span<const double> x, std::size_t d);

// d * prod_i 1 / (1 - theta_i / d) >= E exp(<theta, q>) for q uniform on the
// orthogonal simplex. Requires d >= 7 and theta_i < d.
double mgf_bound(std::span<const double> theta, std::size_t d);

// min(1, exp(-lambda_star_lower(x, d))): dominates the halfspace depth of x.
double xi_chernoff_upper(std::span<const double> x, std::size_t d);

// n unit directions in d-space drawn from `stream` (prefix-stable: the first
// k directions do not depend on n). In one dimension they alternate +1, -1.
std::vector<Point> random_directions(std::size_t d, std::size_t n,
                                     RandomStream& stream);

// min over directions theta of the share of samples q with <q - x, theta> >= 0.
double xi_empirical(std::span<const double> x, std::span<const Point> samples,
                    std::span<const Point> directions);

// Samples and directions drawn from independent substreams of `stream`'s seed.
double xi_empirical(std::span<const double> x, const BodySpec& body,
                    std::size_t n_directions, std::size_t n_samples,
                    RandomStream& stream);

struct DfmInputs {
  double vol_a = 0.0;  // normalised volume of A
  std::uint64_t n = 0;
  std::size_t d = 0;
  double sup_xi_outside = 0.0;
  double vol_outside_support = 0.0;  // normalised volume of A^c with xi > 0
  double inf_xi_inside = 0.0;
};

struct DfmBounds {
  double upper = 1.0;
  double lower = 0.0;
};

// upper = vol_A + N sup xi vol_rest;
// lower = vol_A (1 - 2 C(N, d) (1 - inf xi)^(N - d)); both clamped to [0, 1].
DfmBounds dfm_bounds(const DfmInputs& in);

struct DeltaD {
  double value = 0.0;
  bool valid = false;    // 5 alpha < gamma
  bool vacuous = true;   // value <= 0
};

// (1 - 5 alpha / gamma)^((1 - gamma) d) - d exp(-1e-4 d).
DeltaD delta_d(double alpha, double gamma, std::size_t d);

struct LowerBoundReport {
  double euler_integral = 0.0;      // int_0^inf psi(t) e^-t dt
  double remainder_integral = 0.0;  // int_0^1 psi e^-t + int_1^inf psi t e^-t
  double mean_f = 0.0;              // int_0^inf f(t) e^-t dt
  double delta = 0.0;
  double error_estimate = 0.0;      // quadrature error plus truncated tails
};

// Adaptive quadrature split at the kinks, truncated at t = 50 with an
// analytic tail bound. Throws NonConvergence if the error exceeds 1e-9.
LowerBoundReport verify_lower_bound_integrals(double delta);

struct ThresholdPrediction {
  double log_lower = 0.0;  // (gamma_EM - eps) d
  double log_upper = 0.0;  // d log 300
};

ThresholdPrediction threshold_predictions(std::size_t d, double epsilon_margin);

// 1 - janson_bound for P(sum of m unit exponentials < 4d/5); zero when the
// Janson regime does not apply.
double event_b_lower_bound(std::size_t summands, std::size_t d);

}  // namespace hullvol::bounds

#endif  // HULLVOL_BOUNDS_HPP_
