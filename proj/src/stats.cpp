// Copyright 2024 the iceberg-qed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iceberg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iceberg/rng.hpp"

namespace iceberg {

double mean(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  double m = mean(values);
  double s = 0.0;
  for (double v : values) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(values.size() - 1));
}

namespace {
double median_sorted(const std::vector<double>& v, size_t lo, size_t hi) {
  size_t n = hi - lo;
  size_t mid = lo + n / 2;
  return n % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}
}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(values.begin(), values.end());
  return median_sorted(values, 0, values.size());
}

Quartiles quartiles(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("quartiles of empty sample");
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  size_t half = n / 2;
  Quartiles q;
  q.med = median_sorted(values, 0, n);
  if (n == 1) {
    q.q1 = q.q3 = values[0];
    return q;
  }
  // Tukey hinges include the middle element in both halves for odd n.
  q.q1 = median_sorted(values, 0, n % 2 == 1 ? half + 1 : half);
  q.q3 = median_sorted(values, half, n);
  return q;
}

BoxStats box_stats(std::vector<double> values) {
  BoxStats b;
  b.q = quartiles(values);
  double iqr = b.q.q3 - b.q.q1;
  double lo = b.q.q1 - 1.5 * iqr;
  double hi = b.q.q3 + 1.5 * iqr;
  std::sort(values.begin(), values.end());
  b.whisker_lo = b.q.q1;
  b.whisker_hi = b.q.q3;
  for (double v : values) {
    if (v < lo || v > hi) {
      b.outliers.push_back(v);
    } else {
      b.whisker_lo = std::min(b.whisker_lo, v);
      b.whisker_hi = std::max(b.whisker_hi, v);
    }
  }
  return b;
}

namespace {

template <typename Stat>
std::vector<double> bootstrap_stats(const std::vector<double>& values,
                                    int resamples, uint64_t seed, Stat stat) {
  if (values.empty())
    throw std::invalid_argument("bootstrap on an empty sample");
  Rng rng(seed);
  std::vector<double> out(static_cast<size_t>(resamples));
  std::vector<double> draw(values.size());
  for (int r = 0; r < resamples; ++r) {
    for (auto& d : draw) d = values[rng.below(values.size())];
    out[static_cast<size_t>(r)] = stat(draw);
  }
  return out;
}

}  // namespace

Interval bootstrap_mean_pm2sd(const std::vector<double>& values, int resamples,
                              uint64_t seed) {
  auto means = bootstrap_stats(values, resamples, seed,
                               [](std::vector<double>& v) { return mean(v); });
  double m = mean(values);
  double sd = sample_std(means);
  return Interval{m - 2 * sd, m + 2 * sd};
}

Interval bootstrap_median_percentile(const std::vector<double>& values,
                                     int resamples, double level,
                                     uint64_t seed) {
  auto meds = bootstrap_stats(
      values, resamples, seed,
      [](std::vector<double>& v) { return median(v); });
  std::sort(meds.begin(), meds.end());
  double alpha = (1.0 - level) / 2.0;
  auto pick = [&](double p) {
    double idx = p * static_cast<double>(meds.size() - 1);
    return meds[static_cast<size_t>(std::llround(idx))];
  };
  return Interval{pick(alpha), pick(1.0 - alpha)};
}

}  // namespace iceberg
