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

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "iceberg/circuit.hpp"
#include "iceberg/code.hpp"
#include "iceberg/rng.hpp"
#include "iceberg/statevector.hpp"

namespace iceberg {

/// Stochastic error model: bit flips after initialisation and before
/// measurement, uniform depolarizing after one- and two-qubit gates.
struct NoiseModel {
  double p_init_flip = 4e-4;
  double p_meas_flip = 3e-3;
  double p_1q = 4e-4;
  double p_2q = 3e-3;

  static NoiseModel zero() { return NoiseModel{0.0, 0.0, 0.0, 0.0}; }
  bool is_zero() const {
    return p_init_flip == 0.0 && p_meas_flip == 0.0 && p_1q == 0.0 &&
           p_2q == 0.0;
  }
};

void to_json(nlohmann::json& j, const NoiseModel& m);
void from_json(const nlohmann::json& j, NoiseModel& m);

enum class RunMode : uint8_t {
  /// Samples every measurement with Born probabilities (the hardware
  /// protocol; used for the volume test).
  Shot,
  /// Projects every check measurement onto the accepting outcome and
  /// tracks the cumulative accept probability; data measurements keep their
  /// readout noise but leave the state for exact decoding.
  PostSelect,
};

/// One sampled Kraus branch (identity branches are not recorded).
struct NoiseEvent {
  int instr_index;
  Pauli p0;
  Pauli p1;  // Pauli::I for single-qubit locations
};

struct TrialOutcome {
  bool fully_discarded = false;
  double accept_prob = 1.0;               // cumulative, over check projections
  std::vector<double> check_accepts;      // per check bit, in circuit order
  std::vector<uint8_t> bits;              // classical register
  std::optional<StateVector> state;       // PostSelect mode only
  std::vector<NoiseEvent> noise_log;      // filled when requested
};

TrialOutcome run_trajectory(const Circuit& circuit, const NoiseModel& noise,
                            Rng& rng, RunMode mode, bool record_noise = false,
                            int max_qubits = StateVector::kDefaultMaxQubits);

struct SurvivalMass {
  double good;      // decodes to s_z = +1 and every logical Z = +1
  double sz_minus;  // decodes to s_z = -1 (discarded at readout)
};

/// Decodes a final state over the data qubits (any further qubits must
/// already be projected out).
SurvivalMass survival_probability(const StateVector& state,
                                  const CodeLayout& layout);

/// Probability mass on the all-zeros computational state.
double unencoded_survival(const StateVector& state);

struct ExperimentStats {
  double mean_survival = 0.0;
  double discard_rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  int trials = 0;
  int fully_discarded = 0;
  uint64_t seed = 0;
  std::vector<double> per_trial_survival;
  std::vector<double> per_trial_retained;
};

void to_json(nlohmann::json& j, const ExperimentStats& s);

/// Monte-Carlo estimate over independent trials in PostSelect mode; each
/// trial draws its own stream from (seed, stream_tag, trial), so results do
/// not depend on `jobs`.
ExperimentStats estimate_encoded(const Circuit& circuit,
                                 const CodeLayout& layout,
                                 const NoiseModel& noise, int trials,
                                 uint64_t seed, uint64_t stream_tag = 0,
                                 int jobs = 1);

ExperimentStats estimate_unencoded(const Circuit& circuit,
                                   const NoiseModel& noise, int trials,
                                   uint64_t seed, uint64_t stream_tag = 0,
                                   int jobs = 1);

}  // namespace iceberg
