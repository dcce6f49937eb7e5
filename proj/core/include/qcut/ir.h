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

#ifndef QCUT_IR_H
#define QCUT_IR_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcut {

/// Position of a qubit in a circuit's qubit list. Qubit 0 is the least
/// significant bit of every computational-basis label.
using QubitIndex = uint32_t;

enum class Side : uint8_t { A, B };

inline Side other(Side s) {
    return s == Side::A ? Side::B : Side::A;
}
char side_char(Side s);

enum class GateKind : uint8_t {
    X,
    H,
    S,
    SDG,
    T,
    TDG,
    RZ,
    CX,
    CZ,
    CCX,
    MCX,
    MEASURE_Z,
    PREP,
    /// Marks the point where a wire crosses to the other partition.
    WIRE_CUT,
};

enum class PrepState : uint8_t { ZERO, ONE, PLUS, MINUS, PLUS_I, MINUS_I };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::string_view prep_state_name(PrepState state);
std::optional<PrepState> prep_state_from_name(std::string_view name);

/// One instruction. Controlled gates list their controls first and the target
/// last; `angle` is only meaningful for RZ, `cbit` for MEASURE_Z and `state`
/// for PREP.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<QubitIndex> qubits;
    double angle = 0;
    std::optional<uint32_t> cbit;
    PrepState state = PrepState::ZERO;

    static Gate single(GateKind kind, QubitIndex q);
    static Gate rz(QubitIndex q, double angle);
    static Gate cx(QubitIndex control, QubitIndex target);
    static Gate cz(QubitIndex a, QubitIndex b);
    static Gate ccx(QubitIndex c0, QubitIndex c1, QubitIndex target);
    static Gate mcx(std::vector<QubitIndex> controls, QubitIndex target);
    static Gate measure_z(QubitIndex q, uint32_t cbit);
    static Gate prep(QubitIndex q, PrepState state);
    static Gate wire_cut(QubitIndex q);

    /// Controlled-X with the narrowest kind: CX for one control, CCX for two.
    static Gate controlled_x(std::span<const QubitIndex> controls, QubitIndex target);

    bool is_controlled_x() const;
    bool operator==(const Gate &) const = default;
};

struct Circuit {
    std::vector<std::string> qubit_names;
    std::vector<Gate> gates;
    /// Side of each qubit at the start of the circuit. A WIRE_CUT moves its
    /// qubit to the other side for every later gate.
    std::optional<std::vector<Side>> partition;

    size_t num_qubits() const {
        return qubit_names.size();
    }
    /// Number of classical bits addressed by MEASURE_Z gates.
    size_t num_classbits() const;

    /// Appends a qubit and returns its index. The side is required iff the
    /// circuit is partitioned.
    QubitIndex add_qubit(std::string name, std::optional<Side> side = std::nullopt);
    /// A name not yet used by any qubit, derived from `base`.
    std::string fresh_name(std::string_view base) const;

    /// Throws ValidationError if any structural invariant is violated.
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

enum class Pauli : uint8_t { I, X, Y, Z };

struct PauliObservable {
    std::map<QubitIndex, Pauli> factors;

    /// Parses "Z3", "Z0*Z2", "X1*Y4". Throws ValidationError.
    static PauliObservable parse(std::string_view text);
    std::string str() const;
    bool is_trivial() const;
    bool operator==(const PauliObservable &) const = default;
};

struct WireCrossing {
    size_t gate_index;
    QubitIndex qubit;
    bool operator==(const WireCrossing &) const = default;
};

struct PartitionCrossings {
    std::vector<size_t> gates;
    std::vector<WireCrossing> wires;
};

/// Side of every qubit immediately before gate `gate_index` executes.
std::vector<Side> sides_before(const Circuit &c, size_t gate_index);

/// Every gate whose qubits sit on both sides when it executes, and every
/// WIRE_CUT marker. Throws PartitionMissing.
PartitionCrossings validate_partition(const Circuit &c);

Circuit parse_circuit(std::string_view json_text);
std::string serialize_circuit(const Circuit &c);

}  // namespace qcut

#endif
