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

#include "hullvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hullvol/errors.hpp"

namespace hullvol::bounds {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTruncation = 50.0;
constexpr double kQuadratureTolerance = 1e-9;

void require_min_dimension(std::size_t d) {
  if (d < 7) throw InvalidArgument("bound requires d >= 7");
}

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
Integral integrate_singular(F f, double a, double b) {
  // Double-exponential rule copes with the log singularity at 0.
  boost::math::quadrature::tanh_sinh<double> rule;
  double error = 0.0;
  double l1 = 0.0;
  const double value = rule.integrate(f, a, b, 1e-14, &error, &l1);
  return {value, error};
}

template <class F>
Integral integrate_smooth(F f, double a, double b) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          f, a, b, 15, 1e-14, &error);
  return {value, error};
}

}  // namespace

JansonResult janson_bound(const JansonInput& input, bool allow_extended) {
  if (input.rates.empty()) throw InvalidArgument("no rates given");
  if (!(input.lambda > 0.0)) throw InvalidArgument("lambda must be > 0");
  JansonResult r;
  r.min_rate = kInf;
  for (double a : input.rates) {
    if (!(a > 0.0)) throw InvalidArgument("rates must be > 0");
    r.mean += 1.0 / a;
    r.min_rate = std::min(r.min_rate, a);
  }
  if (input.lambda > 1.0) {
    if (!allow_extended) {
      throw InvalidArgument("lambda > 1 needs the extended (upper-tail) mode");
    }
    r.extended = true;
  }
  r.bound = std::exp(-r.min_rate * r.mean * psi(input.lambda));
  return r;
}

double psi(double t) {
  if (t < 0.0) throw InvalidArgument("psi is defined for t >= 0");
  if (t == 0.0) return kInf;
  return t - 1.0 - std::log(t);
}

PsiValues psi_family(double t, double delta) {
  if (t < 0.0) throw InvalidArgument("psi is defined for t >= 0");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in [0, 1)");
  }
  PsiValues v;
  v.psi = psi(t);
  v.psi1 = t <= 1.0 ? v.psi : 0.0;
  v.psi2 = t > 1.0 ? v.psi : 0.0;
  const double lo = t / (1.0 - delta);
  const double hi = t / (1.0 + delta);
  v.f = (lo <= 1.0 ? psi(lo) : 0.0) + (hi > 1.0 ? psi(hi) : 0.0);
  return v;
}

double lambda_star_lower(std::span<const double> x, std::size_t d) {
  require_min_dimension(d);
  if (x.size() != d) throw InvalidArgument("point dimension mismatch");
  const double dd = static_cast<double>(d);
  double total = -std::log(dd);
  for (double xi : x) {
    if (xi < 0.0) throw InvalidArgument("point has a negative coordinate");
    if (xi == 0.0) return kInf;
    total += psi(xi * dd);
  }
  return total;
}

double mgf_bound(std::span<const double> theta, std::size_t d) {
  require_min_dimension(d);
  if (theta.size() != d) throw InvalidArgument("theta dimension mismatch");
  const double dd = static_cast<double>(d);
  double log_bound = std::log(dd);
  for (double t : theta) {
    if (!(t < dd)) throw InvalidArgument("every theta_i must be < d");
    log_bound -= std::log1p(-t / dd);
  }
  return std::exp(log_bound);
}

double xi_chernoff_upper(std::span<const double> x, std::size_t d) {
  const double lower = lambda_star_lower(x, d);
  if (lower == kInf) return 0.0;
  return std::min(1.0, std::exp(-lower));
}

std::vector<Point> random_directions(std::size_t d, std::size_t n,
                                     RandomStream& stream) {
  if (d == 0) throw InvalidArgument("dimension must be >= 1");
  std::vector<Point> dirs;
  dirs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Point u(d);
    if (d == 1) {
      u[0] = (k % 2 == 0) ? 1.0 : -1.0;
    } else {
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (auto& v : u) {
          v = stream.normal();
          norm2 += v * v;
        }
      } while (norm2 == 0.0);
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& v : u) v *= inv;
    }
    dirs.push_back(std::move(u));
  }
  return dirs;
}

double xi_empirical(std::span<const double> x, std::span<const Point> samples,
                    std::span<const Point> directions) {
  if (samples.empty() || directions.empty()) {
    throw InvalidArgument("need at least one sample and one direction");
  }
  const std::size_t d = x.size();
  double best = 1.0;
  for (const auto& theta : directions) {
    if (theta.size() != d) throw InvalidArgument("direction dimension mismatch");
    double threshold = 0.0;
    for (std::size_t j = 0; j < d; ++j) threshold += theta[j] * x[j];
    std::size_t count = 0;
    for (const auto& q : samples) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += theta[j] * q[j];
      if (s >= threshold) ++count;
    }
    best = std::min(best, static_cast<double>(count) /
                              static_cast<double>(samples.size()));
  }
  return best;
}

double xi_empirical(std::span<const double> x, const BodySpec& body,
                    std::size_t n_directions, std::size_t n_samples,
                    RandomStream& stream) {
  if (n_directions == 0 || n_samples == 0) {
    throw InvalidArgument("n_directions and n_samples must be >= 1");
  }
  const std::size_t d = body.dimension();
  if (x.size() != d) throw InvalidArgument("point dimension mismatch");
  RandomStream sample_stream =
      make_stream(stream.seed(), StreamDomain::kTestPoints, stream.substream());
  RandomStream direction_stream =
      make_stream(stream.seed(), StreamDomain::kDirections, stream.substream());
  std::vector<Point> samples;
  samples.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    samples.push_back(sampling::sample_body(body, sample_stream));
  }
  const auto dirs = random_directions(d, n_directions, direction_stream);
  return xi_empirical(x, samples, dirs);
}

DfmBounds dfm_bounds(const DfmInputs& in) {
  auto unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
    }
  };
  unit(in.vol_a, "vol_a");
  unit(in.sup_xi_outside, "sup_xi_outside");
  unit(in.vol_outside_support, "vol_outside_support");
  unit(in.inf_xi_inside, "inf_xi_inside");
  if (in.d == 0) throw InvalidArgument("d must be >= 1");

  DfmBounds out;
  const double n = static_cast<double>(in.n);
  out.upper = std::clamp(in.vol_a + n * in.sup_xi_outside * in.vol_outside_support,
                         0.0, 1.0);
  if (in.n < in.d) {
    out.lower = 0.0;
    return out;
  }
  const double dd = static_cast<double>(in.d);
  const double gap = n - dd;
  double failure = 0.0;
  if (in.inf_xi_inside >= 1.0 && gap > 0.0) {
    failure = 0.0;
  } else {
    const double log_binom =
        std::lgamma(n + 1.0) - std::lgamma(dd + 1.0) - std::lgamma(gap + 1.0);
    const double log_tail =
        gap > 0.0 ? gap * std::log1p(-in.inf_xi_inside) : 0.0;
    failure = std::exp(std::log(2.0) + log_binom + log_tail);
  }
  out.lower = std::clamp(in.vol_a * (1.0 - failure), 0.0, 1.0);
  return out;
}

DeltaD delta_d(double alpha, double gamma, std::size_t d) {
  if (!(alpha >= 0.0)) throw InvalidArgument("alpha must be >= 0");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1)");
  }
  if (d == 0) throw InvalidArgument("d must be >= 1");
  const double dd = static_cast<double>(d);
  const double base = 1.0 - 5.0 * alpha / gamma;
  DeltaD out;
  out.valid = base > 0.0;
  const double penalty = dd * std::exp(-1e-4 * dd);
  if (out.valid) {
    out.value = std::exp((1.0 - gamma) * dd * std::log(base)) - penalty;
  } else {
    out.value = std::numeric_limits<double>::quiet_NaN();
  }
  out.vacuous = !(out.value > 0.0);
  return out;
}

LowerBoundReport verify_lower_bound_integrals(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1)");
  }
  auto psi_exp = [](double t) { return psi(t) * std::exp(-t); };
  auto psi_t_exp = [](double t) { return psi(t) * t * std::exp(-t); };

  LowerBoundReport report;
  report.delta = delta;

  const Integral head = integrate_singular(psi_exp, 0.0, 1.0);
  const Integral body = integrate_smooth(psi_exp, 1.0, kTruncation);
  // int_T^inf psi(t) e^-t <= int_T^inf t e^-t = (T + 1) e^-T.
  const double tail = (kTruncation + 1.0) * std::exp(-kTruncation);
  report.euler_integral = head.value + body.value;

  const Integral weighted = integrate_smooth(psi_t_exp, 1.0, kTruncation);
  // int_T^inf t^2 e^-t = (T^2 + 2T + 2) e^-T.
  const double weighted_tail =
      (kTruncation * kTruncation + 2.0 * kTruncation + 2.0) *
      std::exp(-kTruncation);
  report.remainder_integral = head.value + weighted.value;

  const double lo = 1.0 - delta;
  const double hi = 1.0 + delta;
  auto f_low = [lo](double t) { return psi(t / lo) * std::exp(-t); };
  auto f_high = [hi](double t) { return psi(t / hi) * std::exp(-t); };
  const Integral f1 = integrate_singular(f_low, 0.0, lo);
  const Integral f2 = integrate_smooth(f_high, hi, kTruncation);
  report.mean_f = f1.value + f2.value;

  report.error_estimate =
      head.error + body.error + weighted.error + f1.error + f2.error + tail +
      weighted_tail;
  if (!(report.error_estimate <= kQuadratureTolerance)) {
    throw NonConvergence("quadrature error estimate " +
                         std::to_string(report.error_estimate) +
                         " exceeds tolerance");
  }
  return report;
}

ThresholdPrediction threshold_predictions(std::size_t d, double epsilon_margin) {
  if (d == 0) throw InvalidArgument("d must be >= 1");
  const double dd = static_cast<double>(d);
  return {(kEulerGamma - epsilon_margin) * dd, dd * std::log(kCoverageBase)};
}

double event_b_lower_bound(std::size_t summands, std::size_t d) {
  if (summands == 0) return 0.0;
  const double lambda =
      (4.0 * static_cast<double>(d) / 5.0) / static_cast<double>(summands);
  if (lambda > 1.0) return 0.0;
  const JansonResult r =
      janson_bound({std::vector<double>(summands, 1.0), lambda});
  return 1.0 - r.bound;
}

}  // namespace hullvol::bounds
