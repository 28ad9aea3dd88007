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

#include "iceberg/ft.hpp"

#include "iceberg/verify.hpp"

namespace iceberg {

namespace {

int resolve_pos(int pos, int n) {
  int p = pos < 0 ? n + pos : pos;
  if (p < 0 || p >= n) throw std::invalid_argument("bad init check position");
  return p;
}

void emit_block(Circuit& c, const CodeLayout& layout, int q, BlockOrder order) {
  if (order == BlockOrder::A) {
    c.cnot(layout.a2(), q);
    c.cnot(q, layout.a1());
  } else {
    c.cnot(q, layout.a1());
    c.cnot(layout.a2(), q);
  }
}

}  // namespace

Circuit build_init(const CodeLayout& layout, const FtTemplate& tmpl,
                   int round) {
  const int n = layout.n();
  Circuit c(layout.total_qubits());
  c.kind = CircuitKind::Init;
  for (int q = 0; q < n; ++q) c.reset(q);
  c.reset(layout.a1());
  // GHZ ladder in label order 1..k, t, b.
  c.h(0);
  for (int q = 0; q + 1 < n; ++q) c.cnot(q, q + 1);
  // Any single ladder fault that spreads X onto a suffix of the ladder flips
  // the parity of this pair.
  int pa = resolve_pos(tmpl.init_check_a, n);
  int pb = resolve_pos(tmpl.init_check_b, n);
  if (pa == pb) throw std::invalid_argument("init check needs two qubits");
  c.cnot(pa, layout.a1());
  c.cnot(pb, layout.a1());
  c.measure_z(layout.a1(), BitInfo{BitRole::Check, round, -1});
  return c;
}

Circuit build_syndrome(const CodeLayout& layout, const FtTemplate& tmpl,
                       int round) {
  const int n = layout.n();
  Circuit c(layout.total_qubits());
  c.kind = CircuitKind::Syndrome;
  c.reset(layout.a1());
  c.reset(layout.a2());
  c.h(layout.a2());
  for (int q = 0; q < n; ++q) {
    BlockOrder order = tmpl.middle_block;
    if (q == 0) order = tmpl.first_block;
    if (q == n - 1) order = tmpl.last_block;
    emit_block(c, layout, q, order);
  }
  c.h(layout.a2());
  c.measure_z(layout.a2(), BitInfo{BitRole::Check, round, -1});
  c.measure_z(layout.a1(), BitInfo{BitRole::Check, round, -1});
  return c;
}

Circuit build_final(const CodeLayout& layout, const FtTemplate& tmpl,
                    int round) {
  const int n = layout.n();
  Circuit c(layout.total_qubits());
  c.kind = CircuitKind::Final;
  c.reset(layout.a1());
  c.reset(layout.a2());
  c.h(layout.a2());
  if (tmpl.final_leading_flag) c.cnot(layout.a2(), layout.a1());
  for (int q = 0; q < n; ++q) c.cnot(layout.a2(), q);
  if (tmpl.final_trailing_flag) c.cnot(layout.a2(), layout.a1());
  c.h(layout.a2());
  c.measure_z(layout.a2(), BitInfo{BitRole::Check, round, -1});
  c.measure_z(layout.a1(), BitInfo{BitRole::Check, round, -1});
  for (int q = 0; q < n; ++q)
    c.measure_z(q, BitInfo{BitRole::Data, round, q});
  return c;
}

std::vector<FtTemplate> enumerate_templates() {
  std::vector<FtTemplate> out;
  const BlockOrder orders[2] = {BlockOrder::A, BlockOrder::B};
  const BlockOrder middles[2] = {BlockOrder::B, BlockOrder::A};
  const std::pair<int, int> checks[3] = {{0, -1}, {0, 1}, {-2, -1}};
  const std::pair<bool, bool> flags[3] = {
      {true, true}, {false, true}, {true, false}};
  for (BlockOrder first : orders)
    for (BlockOrder middle : middles)
      for (BlockOrder last : orders)
        for (auto [ca, cb] : checks)
          for (auto [lead, trail] : flags) {
            FtTemplate t;
            t.first_block = first;
            t.middle_block = middle;
            t.last_block = last;
            t.init_check_a = ca;
            t.init_check_b = cb;
            t.final_leading_flag = lead;
            t.final_trailing_flag = trail;
            out.push_back(t);
          }
  return out;
}

std::optional<FtTemplate> find_ft_template(int k_max) {
  for (const FtTemplate& t : enumerate_templates()) {
    bool ok = true;
    for (int k = 2; ok && k <= k_max; k += 2) {
      CodeLayout layout(k);
      ok = verify(build_init(layout, t), layout).pass &&
           verify(build_syndrome(layout, t), layout).pass &&
           verify(build_final(layout, t), layout).pass;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace iceberg
