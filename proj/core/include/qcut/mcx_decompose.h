// Copyright 2026 The qcut Authors
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

#ifndef QCUT_MCX_DECOMPOSE_H
#define QCUT_MCX_DECOMPOSE_H

#include <optional>
#include <string_view>
#include <vector>

#include "qcut/ir.h"

namespace qcut {

/// Ways to rewrite a boundary-crossing MCX. Naming the two sides of the cut
/// "control side" (holds controls A only) and "target side" (holds controls
/// B and target t):
///   DEC1            MCX(A->a) | wire a across | MCX(a,B->t) | wire a back | MCX(A->a)
///   DEC2A           MCX(A->a0) CX(a0->a1) MCX(a1,B->t) CX(a0->a1) MCX(A->a0)
///   DEC2AD          MCX(A->a) CX(a->b) MCX(b,B->t), a and b left dirty
///   DEC2AD_CLEAN_A  DEC2AD followed by MCX(A->a), only b left dirty
///   BASELINE        partition-oblivious Toffoli ladder lowered to CX
enum class Strategy : uint8_t { DEC1, DEC2A, DEC2AD, DEC2AD_CLEAN_A, BASELINE };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
inline constexpr Strategy kAllStrategies[] = {Strategy::DEC1, Strategy::DEC2A, Strategy::DEC2AD,
                                              Strategy::DEC2AD_CLEAN_A, Strategy::BASELINE};

struct AncillaRef {
    QubitIndex qubit;
    bool dirty;
    bool operator==(const AncillaRef &) const = default;
};

struct DecompositionResult {
    Circuit circuit;
    /// Ancillas appended after the original qubits, in append order.
    std::vector<AncillaRef> ancillas;
    size_t crossing_gate_count;
    size_t crossing_wire_count;
};

struct DecomposeOptions {
    /// DEC2AD with no target-side controls: drop b and emit CX(a->t).
    bool fuse_b = false;
};

/// Replaces the MCX/CCX/CX at `gate_index`. Crossing counts are those of
/// validate_partition on the whole output circuit.
///
/// Throws NotAnMcx, PartitionMissing, NoCutNeeded (all qubits on one side, or
/// the non-target side holds no control).
DecompositionResult decompose_mcx(const Circuit &c, size_t gate_index, Strategy strategy,
                                  const DecomposeOptions &options = {});

/// Lowers every CCX to the 6-CX Clifford+T construction and every MCX(m>=3)
/// to a compute/uncompute Toffoli ladder over m-2 fresh clean ancillas (placed
/// on the target's current side), then lowers those Toffolis as well.
Circuit lower_to_cx(const Circuit &c);

size_t count_cx(const Circuit &c);

struct VerificationReport {
    double max_deviation;
    bool ancilla_states_ok;
    size_t inputs_checked;
};

/// Exhaustive basis-input comparison of the decomposition of an MCX with m1
/// controls on the control side and m2 controls beside the target against
/// the native MCX. Clean strategies must return every ancilla to |0>; DEC2AD
/// must leave a = b = AND(A); DEC2AD_CLEAN_A must leave a = 0, b = AND(A).
/// Throws SizeLimitExceeded.
VerificationReport verify_decomposition(unsigned m1, unsigned m2, Strategy strategy);

}  // namespace qcut

#endif
