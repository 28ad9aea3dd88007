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
#include <string>
#include <string_view>
#include <vector>

namespace iceberg {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// An n-qubit Pauli operator with exact phase tracking.
///
/// The operator is i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}, where x and z
/// are binary vectors. A qubit with x = z = 1 displays as the letter Y
/// (Y = i X Z), so the displayed prefix of e.g. "-iYY" differs from
/// phase_exp by the number of Y letters. Values are immutable in spirit:
/// all mutating operations are on freshly constructed values, so sharing
/// across threads is safe once built.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);

  static PauliString identity(int n_qubits) { return PauliString(n_qubits); }
  static PauliString single(int n_qubits, int qubit, Pauli p);
  /// Parses text of the form "+XIZY", "-iYY", "ZZ". The leftmost letter is
  /// qubit 0. Exact inverse of str().
  static PauliString parse(std::string_view text);

  int n_qubits() const { return n_; }
  /// Power of i in the X/Z normal form.
  int phase_exp() const { return phase_; }
  void set_phase_exp(int e) { phase_ = ((e % 4) + 4) % 4; }
  /// Displayed prefix as a power of i: 0 -> "+", 1 -> "+i", 2 -> "-", 3 -> "-i".
  int prefix_exp() const;

  bool x_bit(int q) const { return bit(xw_, q); }
  bool z_bit(int q) const { return bit(zw_, q); }
  Pauli at(int q) const;
  /// Sets the displayed letter at qubit q, leaving the displayed prefix and
  /// all other letters unchanged.
  void set(int q, Pauli p);

  /// Number of non-identity letters.
  int weight() const;
  bool is_identity_letters() const { return weight() == 0; }

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool commutes_with(const PauliString& other) const;
  bool equal_letters(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  std::string str() const;

  // In-place Clifford conjugation primitives: this <- U this U^dagger.
  void conj_h(int q);
  void conj_s(int q);
  void conj_sdg(int q);
  void conj_x(int q);
  void conj_cnot(int control, int target);
  /// MS(theta) = exp(-i theta Z_a Z_b / 2); only Clifford angles (multiples
  /// of pi/2) are accepted.
  void conj_ms(int a, int b, double theta);

  /// Drops any error component on qubit q (used when a qubit is measured or
  /// reset during fault propagation).
  void clear_qubit(int q);

  /// Letters restricted to qubits [0, m), displayed prefix reset to "+".
  PauliString restricted(int m) const;

 private:
  static bool bit(const std::vector<uint64_t>& w, int q) {
    return (w[static_cast<size_t>(q) >> 6] >> (q & 63)) & 1;
  }
  static void set_bit(std::vector<uint64_t>& w, int q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v)
      w[static_cast<size_t>(q) >> 6] |= mask;
    else
      w[static_cast<size_t>(q) >> 6] &= ~mask;
  }
  void check_qubit(int q) const;
  // Multiplies the single-qubit factor (x, z) with extra phase i^e into
  // qubit q of this string, on the left of the existing factor.
  void left_mul_local(int q, bool x, bool z, int e);

  int n_ = 0;
  int phase_ = 0;  // power of i, 0..3
  std::vector<uint64_t> xw_, zw_;
};

}  // namespace iceberg
