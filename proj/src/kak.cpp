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

#include "iceberg/kak.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <stdexcept>

namespace iceberg {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}
Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}
Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
Eigen::Matrix2cd sgate() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, kI;
  return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& hi,
                       const Eigen::Matrix2cd& lo) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = hi(r >> 1, c >> 1) * lo(r & 1, c & 1);
  return out;
}

// Magic basis: conjugation maps SU(2) x SU(2) onto SO(4) and diagonalizes
// the canonical interaction.
const Eigen::Matrix4cd& magic_basis() {
  static const Eigen::Matrix4cd m = [] {
    Eigen::Matrix4cd b;
    const double s = 1.0 / std::sqrt(2.0);
    b << s, 0, 0, kI * s,
        0, kI * s, s, 0,
        0, kI * s, -s, 0,
        s, 0, 0, -kI * s;
    return b;
  }();
  return m;
}

// Diagonals of M^dagger (P (x) P) M for P in {X, Y, Z}; +-1 vectors that
// sum to zero and are mutually orthogonal.
const std::array<Eigen::Vector4d, 3>& interaction_frame() {
  static const std::array<Eigen::Vector4d, 3> f = [] {
    std::array<Eigen::Vector4d, 3> out;
    const Eigen::Matrix4cd& m = magic_basis();
    const Eigen::Matrix2cd ps[3] = {pauli_x(), pauli_y(), pauli_z()};
    for (int a = 0; a < 3; ++a) {
      Eigen::Matrix4cd d = m.adjoint() * kron2(ps[a], ps[a]) * m;
      for (int j = 0; j < 4; ++j) out[a](j) = d(j, j).real() > 0 ? 1.0 : -1.0;
    }
    return out;
  }();
  return f;
}

// Real orthogonal P with P^T (A + iB) P diagonal, for commuting symmetric
// A and B. Deterministic candidate mixings handle degenerate spectra.
Eigen::Matrix4d joint_diagonalize(const Eigen::Matrix4d& a,
                                  const Eigen::Matrix4d& b) {
  auto try_candidate = [&](double c, Eigen::Matrix4d* p) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(a + c * b);
    *p = solver.eigenvectors();
    Eigen::Matrix4d da = p->transpose() * a * (*p);
    Eigen::Matrix4d db = p->transpose() * b * (*p);
    double off = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int q = 0; q < 4; ++q)
        if (r != q) off += std::abs(da(r, q)) + std::abs(db(r, q));
    return off < 1e-9;
  };
  const double candidates[] = {1.0,    0.0,      0.37840981, 2.0, -1.0,
                               0.5,    0.1234,   -0.98765,   3.21};
  Eigen::Matrix4d p;
  for (double c : candidates)
    if (try_candidate(c, &p)) return p;
  throw std::runtime_error("failed to jointly diagonalize the interaction");
}

}  // namespace

Eigen::Matrix4cd canonical_interaction(double xx, double yy, double zz) {
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  auto rot = [&](const Eigen::Matrix4cd& g, double t) {
    return std::cos(t / 2) * id - kI * std::sin(t / 2) * g;
  };
  return rot(kron2(pauli_x(), pauli_x()), xx) *
         rot(kron2(pauli_y(), pauli_y()), yy) *
         rot(kron2(pauli_z(), pauli_z()), zz);
}

void factor_tensor_product(const Eigen::Matrix4cd& m, Eigen::Matrix2cd* hi,
                           Eigen::Matrix2cd* lo, std::complex<double>* phase) {
  // The 2x2 block at (r, c) equals hi(r, c) * lo; take the largest block as
  // the lo representative and project the rest onto it.
  double best = -1.0;
  Eigen::Matrix2cd block;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Eigen::Matrix2cd cand = m.block<2, 2>(2 * r, 2 * c);
      if (cand.norm() > best) {
        best = cand.norm();
        block = cand;
      }
    }
  Eigen::Matrix2cd hi_raw;
  double denom = block.squaredNorm();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      hi_raw(r, c) =
          (block.conjugate().cwiseProduct(m.block<2, 2>(2 * r, 2 * c))).sum() /
          denom;
  cplx dl = block.determinant();
  cplx dh = hi_raw.determinant();
  if (std::abs(dl) < 1e-12 || std::abs(dh) < 1e-12)
    throw std::runtime_error("matrix does not factor into a tensor product");
  Eigen::Matrix2cd lo_n = block / std::sqrt(dl);
  Eigen::Matrix2cd hi_n = hi_raw / std::sqrt(dh);
  Eigen::Matrix4cd prod = kron2(hi_n, lo_n);
  int pr = 0, pc = 0;
  double amax = -1.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (std::abs(prod(r, c)) > amax) {
        amax = std::abs(prod(r, c));
        pr = r;
        pc = c;
      }
  cplx ph = m(pr, pc) / prod(pr, pc);
  if ((m - ph * prod).norm() > 1e-8)
    throw std::runtime_error("matrix does not factor into a tensor product");
  *hi = hi_n;
  *lo = lo_n;
  *phase = ph;
}

Eigen::Matrix4cd kak_recompose(const KakDecomposition& d) {
  return d.phase * kron2(d.hi_post, d.lo_post) *
         canonical_interaction(d.xx, d.yy, d.zz) * kron2(d.hi_pre, d.lo_pre);
}

KakDecomposition kak_decompose(const Eigen::Matrix4cd& u) {
  if ((u * u.adjoint() - Eigen::Matrix4cd::Identity()).norm() > 1e-10)
    throw std::invalid_argument("kak_decompose needs a unitary input");

  KakDecomposition out;
  cplx det = u.determinant();
  cplx phase0 = std::exp(kI * (std::arg(det) / 4.0));
  Eigen::Matrix4cd su = u / phase0;
  out.phase = phase0;

  const Eigen::Matrix4cd& m = magic_basis();
  Eigen::Matrix4cd v = m.adjoint() * su * m;
  Eigen::Matrix4cd m2 = v.transpose() * v;

  // m2 = P e^{2i Theta} P^T with real orthogonal P.
  Eigen::Matrix4d p;
  double offdiag = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) offdiag += std::abs(m2(r, c));
  if (offdiag < 1e-11) {
    p = Eigen::Matrix4d::Identity();
  } else {
    p = joint_diagonalize(m2.real(), m2.imag());
    // Deterministic eigenvector signs, then restore det(P) = +1.
    for (int c = 0; c < 4; ++c) {
      int arg = 0;
      for (int r = 1; r < 4; ++r)
        if (std::abs(p(r, c)) > std::abs(p(arg, c))) arg = r;
      if (p(arg, c) < 0) p.col(c) *= -1.0;
    }
    if (p.determinant() < 0) p.col(3) *= -1.0;
  }

  Eigen::Vector4d theta;
  Eigen::Matrix4cd d2 = p.cast<cplx>().transpose() * m2 * p.cast<cplx>();
  for (int j = 0; j < 4; ++j) theta(j) = std::arg(d2(j, j)) / 2.0;
  // The thetas must sum to a multiple of 2 pi so that the residual
  // orthogonal factor has determinant +1 and factors into local unitaries.
  if (std::lround(theta.sum() / M_PI) % 2 != 0) theta(0) -= M_PI;

  Eigen::Vector4cd eig;
  for (int j = 0; j < 4; ++j) eig(j) = std::exp(kI * theta(j));
  Eigen::Matrix4cd w = v * p.cast<cplx>() * eig.cwiseInverse().asDiagonal();
  if (w.imag().norm() > 1e-8)
    throw std::runtime_error("orthogonal factor is not real");

  Eigen::Matrix4cd k1 = m * w * m.adjoint();
  Eigen::Matrix4cd k2 = m * p.transpose().cast<cplx>() * m.adjoint();

  // Interaction angles: theta_j = -(F c)_j / 2 - sigma with the +-1 frame F
  // and a global phase e^{i sigma}, sigma = sum(theta) / 4.
  const auto& frame = interaction_frame();
  double cs[3];
  for (int a = 0; a < 3; ++a) cs[a] = -theta.dot(frame[a]) / 2.0;
  double sigma = theta.sum() / 4.0;
  out.phase *= std::exp(kI * sigma);

  cplx ph1, ph2;
  factor_tensor_product(k1, &out.hi_post, &out.lo_post, &ph1);
  factor_tensor_product(k2, &out.hi_pre, &out.lo_pre, &ph2);
  out.phase *= ph1 * ph2;

  // --- canonicalization: reduce mod pi, order by magnitude, fix signs ----
  const Eigen::Matrix2cd paulis[3] = {pauli_x(), pauli_y(), pauli_z()};

  // Shifting an angle by s*pi multiplies the interaction on the right by
  // (-i)^s (P (x) P)^s; fold the Pauli into the pre factors.
  auto shift_into_range = [&](int a) {
    int shifts = 0;
    while (cs[a] > M_PI / 2) {
      cs[a] -= M_PI;
      ++shifts;
    }
    while (cs[a] <= -M_PI / 2) {
      cs[a] += M_PI;
      --shifts;
    }
    int mod = ((shifts % 4) + 4) % 4;
    if (mod == 0) return;
    static const cplx factors[4] = {1.0, -kI, -1.0, kI};  // (-i)^mod
    out.phase *= factors[mod];
    if (mod % 2 == 1) {
      out.hi_pre = paulis[a] * out.hi_pre;
      out.lo_pre = paulis[a] * out.lo_pre;
    }
  };
  for (int a = 0; a < 3; ++a) shift_into_range(a);

  // Transposition Cliffords: conjugating with C (x) C swaps two interaction
  // axes (the induced signs cancel because both qubits carry C).
  auto swap_axes = [&](int a, int b) {
    Eigen::Matrix2cd c;
    if ((a == 0 && b == 2) || (a == 2 && b == 0))
      c = hadamard();  // X <-> Z
    else if ((a == 0 && b == 1) || (a == 1 && b == 0))
      c = sgate();  // X <-> Y
    else
      c = hadamard() * sgate() * hadamard();  // Y <-> Z
    out.hi_post = out.hi_post * c;
    out.lo_post = out.lo_post * c;
    out.hi_pre = c.adjoint() * out.hi_pre;
    out.lo_pre = c.adjoint() * out.lo_pre;
    std::swap(cs[a], cs[b]);
  };
  for (int pass = 0; pass < 2; ++pass) {
    if (std::abs(cs[0]) > std::abs(cs[1])) swap_axes(0, 1);
    if (std::abs(cs[1]) > std::abs(cs[2])) swap_axes(1, 2);
  }

  // A Pauli on the high qubit flips the two other angles; use it to make
  // yy and zz non-negative (any residual sign stays on xx).
  auto flip_others = [&](int axis) {
    out.hi_post = out.hi_post * paulis[axis];
    out.hi_pre = paulis[axis] * out.hi_pre;
    for (int a = 0; a < 3; ++a)
      if (a != axis) cs[a] = -cs[a];
  };
  if (cs[2] < 0 && cs[1] < 0)
    flip_others(0);
  else if (cs[2] < 0)
    flip_others(1);
  else if (cs[1] < 0)
    flip_others(2);
  // Sign flips can land an angle exactly on -pi/2; refold it to +pi/2.
  for (int a = 0; a < 3; ++a)
    if (cs[a] <= -M_PI / 2 + 1e-15) shift_into_range(a);

  out.xx = cs[0];
  out.yy = cs[1];
  out.zz = cs[2];

  if ((kak_recompose(out) - u).norm() > 1e-9)
    throw std::runtime_error("kak recomposition check failed");
  return out;
}

}  // namespace iceberg
