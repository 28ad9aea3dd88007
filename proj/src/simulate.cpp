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

#include "iceberg/simulate.hpp"

#include <bit>
#include <cmath>

#include "iceberg/parallel.hpp"
#include "iceberg/stats.hpp"

namespace iceberg {

namespace {
constexpr double kDeterministic = 1e-12;
constexpr double kFullDiscard = 1e-15;

void apply_depol1(StateVector& sv, int instr_index, int q, double p, Rng& rng,
                  bool record, std::vector<NoiseEvent>& log) {
  if (p <= 0.0 || !rng.bernoulli(p)) return;
  Pauli e = static_cast<Pauli>(1 + rng.below(3));
  sv.apply_pauli(q, e);
  if (record) log.push_back(NoiseEvent{instr_index, e, Pauli::I});
}

void apply_depol2(StateVector& sv, int instr_index, int q0, int q1, double p,
                  Rng& rng, bool record, std::vector<NoiseEvent>& log) {
  if (p <= 0.0 || !rng.bernoulli(p)) return;
  // One of the 15 nontrivial two-qubit Paulis, uniformly.
  int idx = 1 + static_cast<int>(rng.below(15));
  Pauli e0 = static_cast<Pauli>(idx & 3);
  Pauli e1 = static_cast<Pauli>(idx >> 2);
  sv.apply_pauli(q0, e0);
  sv.apply_pauli(q1, e1);
  if (record) log.push_back(NoiseEvent{instr_index, e0, e1});
}

void apply_flip(StateVector& sv, int instr_index, int q, double p, Rng& rng,
                bool record, std::vector<NoiseEvent>& log) {
  if (p <= 0.0 || !rng.bernoulli(p)) return;
  sv.apply_x(q);
  if (record) log.push_back(NoiseEvent{instr_index, Pauli::X, Pauli::I});
}

// Born-samples qubit q, projects and renormalizes; deterministic outcomes
// skip the random draw.
int sample_and_project(StateVector& sv, int q, Rng& rng) {
  double p1 = sv.prob_one(q);
  int outcome;
  if (p1 < kDeterministic)
    outcome = 0;
  else if (p1 > 1.0 - kDeterministic)
    outcome = 1;
  else
    outcome = rng.bernoulli(p1) ? 1 : 0;
  sv.project(q, outcome);
  sv.renormalize();
  return outcome;
}

}  // namespace

void to_json(nlohmann::json& j, const NoiseModel& m) {
  j = nlohmann::json{{"p_init_flip", m.p_init_flip},
                     {"p_meas_flip", m.p_meas_flip},
                     {"p_1q", m.p_1q},
                     {"p_2q", m.p_2q}};
}

void from_json(const nlohmann::json& j, NoiseModel& m) {
  m.p_init_flip = j.value("p_init_flip", m.p_init_flip);
  m.p_meas_flip = j.value("p_meas_flip", m.p_meas_flip);
  m.p_1q = j.value("p_1q", m.p_1q);
  m.p_2q = j.value("p_2q", m.p_2q);
}

TrialOutcome run_trajectory(const Circuit& circuit, const NoiseModel& noise,
                            Rng& rng, RunMode mode, bool record_noise,
                            int max_qubits) {
  TrialOutcome out;
  out.bits.assign(circuit.bits.size(), 0);
  StateVector sv(circuit.n_qubits, max_qubits);

  for (int idx = 0; idx < static_cast<int>(circuit.instructions.size());
       ++idx) {
    const Instruction& instr = circuit.instructions[idx];
    switch (instr.op) {
      case Op::Reset: {
        int v = sample_and_project(sv, instr.q0, rng);
        if (v) sv.apply_x(instr.q0);
        apply_flip(sv, idx, instr.q0, noise.p_init_flip, rng, record_noise,
                   out.noise_log);
        break;
      }
      case Op::MeasureZ: {
        apply_flip(sv, idx, instr.q0, noise.p_meas_flip, rng, record_noise,
                   out.noise_log);
        const BitInfo& info = circuit.bits[instr.bit];
        if (mode == RunMode::PostSelect) {
          if (info.role == BitRole::Check) {
            double accept = 1.0 - sv.prob_one(instr.q0);
            out.check_accepts.push_back(accept);
            out.accept_prob *= accept;
            if (accept < kFullDiscard) {
              out.fully_discarded = true;
              out.accept_prob = 0.0;
              return out;
            }
            sv.project(instr.q0, 0);
            sv.renormalize();
          }
          // Data measurements keep the state for exact decoding.
        } else {
          out.bits[instr.bit] =
              static_cast<uint8_t>(sample_and_project(sv, instr.q0, rng));
        }
        break;
      }
      default: {
        sv.apply(instr);
        if (op_is_single_qubit_gate(instr.op))
          apply_depol1(sv, idx, instr.q0, noise.p_1q, rng, record_noise,
                       out.noise_log);
        else
          apply_depol2(sv, idx, instr.q0, instr.q1, noise.p_2q, rng,
                       record_noise, out.noise_log);
        break;
      }
    }
  }
  if (mode == RunMode::PostSelect) out.state.emplace(std::move(sv));
  return out;
}

SurvivalMass survival_probability(const StateVector& state,
                                  const CodeLayout& layout) {
  const int n = layout.n();
  if (state.n_qubits() < n)
    throw std::invalid_argument("state does not cover the data qubits");
  const uint64_t data_mask = (uint64_t{1} << n) - 1;
  const uint64_t logical_mask = (uint64_t{1} << layout.k) - 1;
  SurvivalMass mass{0.0, 0.0};
  for (uint64_t i = 0; i < state.dim(); ++i) {
    double p = std::norm(state.amp(i));
    if (p == 0.0) continue;
    uint64_t v = i & data_mask;
    if (std::popcount(v) & 1) {
      mass.sz_minus += p;
      continue;
    }
    uint64_t bb = (v >> layout.b()) & 1;
    if ((v & logical_mask) == (bb ? logical_mask : 0)) mass.good += p;
  }
  return mass;
}

double unencoded_survival(const StateVector& state) {
  return std::norm(state.amp(0));
}

void to_json(nlohmann::json& j, const ExperimentStats& s) {
  j = nlohmann::json{{"mean_survival", s.mean_survival},
                     {"discard_rate", s.discard_rate},
                     {"ci_lo", s.ci_lo},
                     {"ci_hi", s.ci_hi},
                     {"trials", s.trials},
                     {"fully_discarded", s.fully_discarded},
                     {"seed", s.seed}};
}

namespace {

ExperimentStats estimate_impl(const Circuit& circuit,
                              const CodeLayout* layout,
                              const NoiseModel& noise, int trials,
                              uint64_t seed, uint64_t stream_tag, int jobs) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  ExperimentStats stats;
  stats.trials = trials;
  stats.seed = seed;
  std::vector<double> survival(static_cast<size_t>(trials), -1.0);
  std::vector<double> retained(static_cast<size_t>(trials), 0.0);

  parallel_for(jobs, trials, [&](int t) {
    Rng rng = derive_stream(seed, stream_tag, static_cast<uint64_t>(t));
    TrialOutcome out =
        run_trajectory(circuit, noise, rng, RunMode::PostSelect);
    if (out.fully_discarded) return;
    if (layout != nullptr) {
      SurvivalMass mass = survival_probability(*out.state, *layout);
      double kept = 1.0 - mass.sz_minus;
      retained[static_cast<size_t>(t)] = out.accept_prob * kept;
      if (kept > kFullDiscard)
        survival[static_cast<size_t>(t)] = mass.good / kept;
    } else {
      retained[static_cast<size_t>(t)] = 1.0;
      survival[static_cast<size_t>(t)] = unencoded_survival(*out.state);
    }
  });

  std::vector<double> kept_survival;
  kept_survival.reserve(survival.size());
  for (double s : survival) {
    if (s < 0.0)
      ++stats.fully_discarded;
    else
      kept_survival.push_back(s);
  }
  stats.per_trial_survival = kept_survival;
  stats.per_trial_retained = retained;
  stats.discard_rate = 1.0 - mean(retained);
  if (!kept_survival.empty()) {
    stats.mean_survival = mean(kept_survival);
    Interval ci = bootstrap_mean_pm2sd(
        kept_survival, 1000, detail::splitmix64(seed ^ stream_tag));
    stats.ci_lo = ci.lo;
    stats.ci_hi = ci.hi;
  }
  return stats;
}

}  // namespace

ExperimentStats estimate_encoded(const Circuit& circuit,
                                 const CodeLayout& layout,
                                 const NoiseModel& noise, int trials,
                                 uint64_t seed, uint64_t stream_tag,
                                 int jobs) {
  return estimate_impl(circuit, &layout, noise, trials, seed, stream_tag,
                       jobs);
}

ExperimentStats estimate_unencoded(const Circuit& circuit,
                                   const NoiseModel& noise, int trials,
                                   uint64_t seed, uint64_t stream_tag,
                                   int jobs) {
  return estimate_impl(circuit, nullptr, noise, trials, seed, stream_tag,
                       jobs);
}

}  // namespace iceberg
