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

#pragma once

#include <cstdint>
#include <vector>

namespace iceberg {

double mean(const std::vector<double>& values);
double sample_std(const std::vector<double>& values);
/// Median of a copy; even-sized inputs average the two middle order
/// statistics.
double median(std::vector<double> values);

struct Quartiles {
  double q1;
  double med;
  double q3;
};

/// Tukey hinges: medians of the lower and upper halves (the middle element
/// is shared when the count is odd).
Quartiles quartiles(std::vector<double> values);

struct BoxStats {
  Quartiles q{};
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers;  // beyond 1.5x IQR from the hinges
};

BoxStats box_stats(std::vector<double> values);

struct Interval {
  double lo;
  double hi;
};

/// Mean +- 2 standard deviations of bootstrap resample means.
Interval bootstrap_mean_pm2sd(const std::vector<double>& values,
                              int resamples, uint64_t seed);

/// Percentile bootstrap interval on the median at the given confidence
/// level (e.g. 0.99).
Interval bootstrap_median_percentile(const std::vector<double>& values,
                                     int resamples, double level,
                                     uint64_t seed);

}  // namespace iceberg
