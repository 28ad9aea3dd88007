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

#include "iceberg/compile.hpp"

#include <cmath>

namespace iceberg {

void to_json(nlohmann::json& j, const LogicalCircuit& c) {
  nlohmann::json rots = nlohmann::json::array();
  for (const auto& r : c.rotations) {
    nlohmann::json e;
    e["pauli"] = r.generator.op.str().substr(1);  // letters only
    e["sign"] = r.generator.sign;
    e["angle"] = r.angle;
    e["layer"] = r.layer;
    rots.push_back(std::move(e));
  }
  j = nlohmann::json{{"format", "iceberg-logical"},
                     {"version", 1},
                     {"k", c.k},
                     {"rotations", std::move(rots)}};
}

void from_json(const nlohmann::json& j, LogicalCircuit& c) {
  if (j.value("format", "") != "iceberg-logical")
    throw std::invalid_argument("not an iceberg-logical document");
  if (j.value("version", 0) != 1)
    throw std::invalid_argument("unsupported logical schema version");
  c.k = j.at("k").get<int>();
  c.rotations.clear();
  for (const auto& e : j.at("rotations")) {
    LogicalRotation r;
    r.generator.op = PauliString::parse(e.at("pauli").get<std::string>());
    if (r.generator.op.n_qubits() != c.k)
      throw std::invalid_argument("rotation acts on the wrong register");
    r.generator.sign = e.value("sign", 1);
    if (r.generator.sign != 1 && r.generator.sign != -1)
      throw std::invalid_argument("rotation sign must be +1 or -1");
    r.angle = e.at("angle").get<double>();
    r.layer = e.value("layer", -1);
    c.rotations.push_back(std::move(r));
  }
}

namespace {

// Basis change D with D Z D^dagger = basis; emitted before the MS kernel as
// D^dagger and after it as D.
void pre_basis_change(Circuit& c, int q, Pauli basis) {
  if (basis == Pauli::X) {
    c.h(q);
  } else if (basis == Pauli::Y) {
    c.sdg(q);
    c.h(q);
  }
}

void post_basis_change(Circuit& c, int q, Pauli basis) {
  if (basis == Pauli::X) {
    c.h(q);
  } else if (basis == Pauli::Y) {
    c.h(q);
    c.s(q);
  }
}

}  // namespace

void append_pair_rotation(Circuit& c, Pauli basis, int i, int j,
                          double theta) {
  if (basis == Pauli::I)
    throw std::invalid_argument("rotation basis must be X, Y or Z");
  pre_basis_change(c, i, basis);
  pre_basis_change(c, j, basis);
  c.ms(i, j, theta);
  post_basis_change(c, i, basis);
  post_basis_change(c, j, basis);
}

Circuit compile_pair_rotation(int n_qubits, Pauli basis, int i, int j,
                              double theta, int sign) {
  Circuit c(n_qubits);
  append_pair_rotation(c, basis, i, j, theta * sign);
  return c;
}

void append_phase_gadget(Circuit& c, const PauliString& generator,
                         double theta) {
  std::vector<int> support;
  for (int q = 0; q < generator.n_qubits(); ++q)
    if (generator.at(q) != Pauli::I) support.push_back(q);
  if (support.empty())
    throw std::invalid_argument("phase gadget needs a nontrivial generator");

  for (int q : support) pre_basis_change(c, q, generator.at(q));
  const int w = static_cast<int>(support.size());
  if (w == 1) {
    c.rz(support[0], theta);
  } else if (w == 2) {
    c.ms(support[0], support[1], theta);
  } else {
    // Parity ladder onto the next-to-last support qubit, MS on the last
    // pair, then uncompute.
    for (int s = 0; s + 2 < w; ++s) c.cnot(support[s], support[s + 1]);
    c.ms(support[w - 2], support[w - 1], theta);
    for (int s = w - 3; s >= 0; --s) c.cnot(support[s], support[s + 1]);
  }
  for (int q : support) post_basis_change(c, q, generator.at(q));
}

Circuit compile_phase_gadget(int n_qubits, const PauliString& generator,
                             double theta) {
  Circuit c(n_qubits);
  append_phase_gadget(c, generator, theta);
  return c;
}

namespace {

Eigen::Matrix2cd rz_matrix(double a) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(std::complex<double>(0, -a / 2));
  m(1, 1) = std::exp(std::complex<double>(0, a / 2));
  return m;
}

Eigen::Matrix2cd rx_matrix(double a) {
  Eigen::Matrix2cd m;
  const std::complex<double> s(0, -std::sin(a / 2));
  m << std::cos(a / 2), s, s, std::cos(a / 2);
  return m;
}

// Wraps an angle into (-pi, pi], flipping the tracked phase sign per 2*pi.
double wrap_angle(double a, std::complex<double>& phase) {
  while (a > M_PI) {
    a -= 2 * M_PI;
    phase *= -1.0;
  }
  while (a <= -M_PI) {
    a += 2 * M_PI;
    phase *= -1.0;
  }
  return a;
}

}  // namespace

ZxzAngles zxz_decompose(const Eigen::Matrix2cd& u) {
  if ((u * u.adjoint() - Eigen::Matrix2cd::Identity()).norm() > 1e-9)
    throw std::invalid_argument("zxz_decompose needs a unitary input");
  // Normalize to SU(2).
  std::complex<double> det = u.determinant();
  std::complex<double> root = std::exp(std::complex<double>(0, std::arg(det) / 2));
  Eigen::Matrix2cd v = u / root;
  ZxzAngles out{};
  out.phase = root;
  // v00 = cos(x/2) e^{-i(zf+zl)/2}, v10 = -i sin(x/2) e^{i(zl-zf)/2}.
  out.x = 2 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  double sum = std::abs(v(0, 0)) < 1e-12 ? 0.0 : -2 * std::arg(v(0, 0));
  double diff =
      std::abs(v(1, 0)) < 1e-12 ? 0.0 : -2 * (std::arg(v(1, 0)) + M_PI / 2);
  out.z_first = (sum + diff) / 2;
  out.z_last = (sum - diff) / 2;
  Eigen::Matrix2cd rec =
      rz_matrix(out.z_last) * rx_matrix(out.x) * rz_matrix(out.z_first);
  if ((rec + v).norm() <= 1e-9) out.phase = -root;
  if ((rec - v).norm() > 1e-9 && (rec + v).norm() > 1e-9)
    throw std::runtime_error("zxz decomposition failed to converge");
  return out;
}

SquashedRun squash_axis_angles(const std::vector<AxisAngle>& run) {
  if (run.empty())
    throw std::invalid_argument("cannot squash an empty rotation run");
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const AxisAngle& g : run) {
    if (g.axis == Op::Rz)
      m = rz_matrix(g.angle) * m;
    else if (g.axis == Op::Rx)
      m = rx_matrix(g.angle) * m;
    else
      throw std::invalid_argument("squash handles Rz/Rx rotations only");
  }
  ZxzAngles e = zxz_decompose(m);
  SquashedRun out;
  out.phase = e.phase;
  double z1 = wrap_angle(e.z_first, out.phase);
  double x = wrap_angle(e.x, out.phase);
  double z2 = wrap_angle(e.z_last, out.phase);
  const double eps = 1e-12;
  if (std::abs(x) < eps) {
    // Pure Z rotation: merge the two Z angles.
    double z = wrap_angle(z1 + z2, out.phase);
    if (std::abs(z) >= eps) out.gates.push_back({Op::Rz, z});
  } else {
    if (std::abs(z1) >= eps) out.gates.push_back({Op::Rz, z1});
    out.gates.push_back({Op::Rx, x});
    if (std::abs(z2) >= eps) out.gates.push_back({Op::Rz, z2});
  }
  return out;
}

namespace {

bool is_single_qubit_rotation(const LogicalRotation& r, int* qubit,
                              AxisAngle* gate) {
  if (r.generator.op.weight() != 1) return false;
  for (int q = 0; q < r.generator.op.n_qubits(); ++q) {
    Pauli p = r.generator.op.at(q);
    if (p == Pauli::I) continue;
    if (p == Pauli::Y) return false;
    *qubit = q;
    *gate = AxisAngle{p == Pauli::Z ? Op::Rz : Op::Rx,
                      r.angle * r.generator.sign};
    return true;
  }
  return false;
}

LogicalRotation make_1q_rotation(int k, int qubit, const AxisAngle& g,
                                 int layer) {
  LogicalRotation r;
  r.generator.op = PauliString::single(
      k, qubit, g.axis == Op::Rz ? Pauli::Z : Pauli::X);
  r.generator.sign = 1;
  r.angle = g.angle;
  r.layer = layer;
  return r;
}

}  // namespace

LogicalCircuit squash_1q(const LogicalCircuit& lc) {
  LogicalCircuit out;
  out.k = lc.k;
  std::vector<std::vector<AxisAngle>> pending(lc.k);
  std::vector<int> pending_layer(lc.k, -1);

  auto flush = [&](int q) {
    if (pending[q].empty()) return;
    SquashedRun run = squash_axis_angles(pending[q]);
    for (const AxisAngle& g : run.gates)
      out.rotations.push_back(
          make_1q_rotation(lc.k, q, g, pending_layer[q]));
    pending[q].clear();
  };

  for (const LogicalRotation& r : lc.rotations) {
    int q;
    AxisAngle g;
    if (is_single_qubit_rotation(r, &q, &g)) {
      if (pending[q].empty()) pending_layer[q] = r.layer;
      pending[q].push_back(g);
      continue;
    }
    for (int t = 0; t < lc.k; ++t)
      if (r.generator.op.at(t) != Pauli::I) flush(t);
    out.rotations.push_back(r);
  }
  for (int q = 0; q < lc.k; ++q) flush(q);
  return out;
}

LogicalCircuit strip_boundary_z(const LogicalCircuit& lc) {
  std::vector<bool> keep(lc.rotations.size(), true);
  auto is_z_rotation = [&](const LogicalRotation& r, int* q) {
    int qubit;
    AxisAngle g;
    if (!is_single_qubit_rotation(r, &qubit, &g)) return false;
    if (g.axis != Op::Rz) return false;
    *q = qubit;
    return true;
  };
  // Leading Z rotations: nothing before them has touched the qubit.
  std::vector<bool> touched(lc.k, false);
  for (size_t i = 0; i < lc.rotations.size(); ++i) {
    int q;
    if (is_z_rotation(lc.rotations[i], &q) && !touched[q]) {
      keep[i] = false;
      continue;
    }
    for (int t = 0; t < lc.k; ++t)
      if (lc.rotations[i].generator.op.at(t) != Pauli::I) touched[t] = true;
  }
  // Trailing Z rotations: nothing after them touches the qubit.
  std::fill(touched.begin(), touched.end(), false);
  for (size_t ri = lc.rotations.size(); ri-- > 0;) {
    int q;
    if (keep[ri] && is_z_rotation(lc.rotations[ri], &q) && !touched[q]) {
      keep[ri] = false;
      continue;
    }
    if (keep[ri])
      for (int t = 0; t < lc.k; ++t)
        if (lc.rotations[ri].generator.op.at(t) != Pauli::I) touched[t] = true;
  }
  LogicalCircuit out;
  out.k = lc.k;
  for (size_t i = 0; i < lc.rotations.size(); ++i)
    if (keep[i]) out.rotations.push_back(lc.rotations[i]);
  return out;
}

Circuit lower_unencoded_body(const LogicalCircuit& lc) {
  Circuit c(lc.k);
  for (const LogicalRotation& r : lc.rotations) {
    int q;
    AxisAngle g;
    if (is_single_qubit_rotation(r, &q, &g)) {
      if (g.axis == Op::Rz)
        c.rz(q, g.angle);
      else
        c.rx(q, g.angle);
    } else {
      append_phase_gadget(c, r.generator.op, r.angle * r.generator.sign);
    }
  }
  return c;
}

Circuit lower_unencoded(const LogicalCircuit& lc) {
  Circuit c(lc.k);
  c.kind = CircuitKind::Composite;
  for (int q = 0; q < lc.k; ++q) c.reset(q);
  c.append(lower_unencoded_body(lc));
  for (int q = 0; q < lc.k; ++q)
    c.measure_z(q, BitInfo{BitRole::Data, -1, q});
  return c;
}

namespace {

int compiled_gate_count(const LogicalRotation& r) {
  // MS kernel plus the basis-change Cliffords; used only to balance chunks.
  int w = r.generator.op.weight();
  return w <= 1 ? 1 : 5;
}

std::vector<size_t> chunk_boundaries(const LogicalCircuit& lc,
                                     const SyndromePolicy& policy) {
  std::vector<size_t> cuts;  // indices into rotations: round before each cut
  const size_t m = lc.rotations.size();
  switch (policy.kind) {
    case SyndromePolicy::Kind::None:
      break;
    case SyndromePolicy::Kind::Rounds: {
      if (policy.value < 0)
        throw std::invalid_argument("negative syndrome round count");
      long total = 0;
      std::vector<long> cumulative(m + 1, 0);
      for (size_t i = 0; i < m; ++i) {
        total += compiled_gate_count(lc.rotations[i]);
        cumulative[i + 1] = total;
      }
      for (int r = 1; r <= policy.value; ++r) {
        double target =
            static_cast<double>(total) * r / (policy.value + 1);
        size_t cut = m;
        for (size_t i = 0; i <= m; ++i)
          if (static_cast<double>(cumulative[i]) >= target) {
            cut = i;
            break;
          }
        cuts.push_back(cut);
      }
      break;
    }
    case SyndromePolicy::Kind::EveryLayers: {
      if (policy.value <= 0)
        throw std::invalid_argument("layer period must be positive");
      for (size_t i = 0; i + 1 < m; ++i) {
        int la = lc.rotations[i].layer;
        int lb = lc.rotations[i + 1].layer;
        if (la >= 0 && lb >= 0 &&
            la / policy.value < lb / policy.value)
          cuts.push_back(i + 1);
      }
      break;
    }
  }
  return cuts;
}

}  // namespace

Circuit encode_logical_circuit(const LogicalCircuit& lc,
                               const CodeLayout& layout,
                               const SyndromePolicy& policy,
                               const FtTemplate& tmpl) {
  if (lc.k != layout.k)
    throw std::invalid_argument("logical circuit does not match the layout");
  std::vector<size_t> cuts = chunk_boundaries(lc, policy);

  Circuit c = build_init(layout, tmpl, 0);
  c.kind = CircuitKind::Composite;
  int round = 1;
  size_t next_cut = 0;
  for (size_t i = 0; i < lc.rotations.size(); ++i) {
    while (next_cut < cuts.size() && cuts[next_cut] == i) {
      c.append(build_syndrome(layout, tmpl, round++));
      ++next_cut;
    }
    const LogicalRotation& r = lc.rotations[i];
    PhysicalPair pair = physical_from_logical(layout, r.generator);
    append_pair_rotation(c, pair.basis, pair.i, pair.j,
                         r.angle * pair.sign);
  }
  while (next_cut < cuts.size()) {
    c.append(build_syndrome(layout, tmpl, round++));
    ++next_cut;
  }
  c.append(build_final(layout, tmpl, round));
  return c;
}

}  // namespace iceberg
