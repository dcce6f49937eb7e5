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

#include "qcut/mcx_decompose.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcut/errors.h"
#include "qcut/sim.h"

namespace qcut {

namespace {

// Standard 6-CX Clifford+T Toffoli; exact, no global phase.
void emit_toffoli(std::vector<Gate> &out, QubitIndex a, QubitIndex b, QubitIndex t) {
    auto one = [&](GateKind k, QubitIndex q) {
        out.push_back(Gate::single(k, q));
    };
    one(GateKind::H, t);
    out.push_back(Gate::cx(b, t));
    one(GateKind::TDG, t);
    out.push_back(Gate::cx(a, t));
    one(GateKind::T, t);
    out.push_back(Gate::cx(b, t));
    one(GateKind::TDG, t);
    out.push_back(Gate::cx(a, t));
    one(GateKind::T, b);
    one(GateKind::T, t);
    one(GateKind::H, t);
    out.push_back(Gate::cx(a, b));
    one(GateKind::T, a);
    one(GateKind::TDG, b);
    out.push_back(Gate::cx(a, b));
}

// Lowers one gate into `out`, appending ladder ancillas to `c` as needed.
void lower_gate(Circuit &c, const Gate &g, const std::vector<Side> *sides, std::vector<Gate> &out,
                std::vector<AncillaRef> *ancillas) {
    if (g.kind == GateKind::CCX || (g.kind == GateKind::MCX && g.qubits.size() == 3)) {
        emit_toffoli(out, g.qubits[0], g.qubits[1], g.qubits[2]);
        return;
    }
    if (g.kind != GateKind::MCX || g.qubits.size() == 2) {
        out.push_back(g.kind == GateKind::MCX ? Gate::cx(g.qubits[0], g.qubits[1]) : g);
        return;
    }
    std::vector<QubitIndex> controls(g.qubits.begin(), g.qubits.end() - 1);
    const QubitIndex target = g.qubits.back();
    const size_t m = controls.size();
    std::optional<Side> side;
    if (sides) {
        side = (*sides)[target];
    }
    std::vector<QubitIndex> ladder;
    for (size_t k = 0; k + 2 < m; k++) {
        ladder.push_back(c.add_qubit(c.fresh_name("l" + std::to_string(k)), side));
        if (ancillas) {
            ancillas->push_back({ladder.back(), false});
        }
    }
    std::vector<Gate> compute;
    compute.push_back(Gate::ccx(controls[0], controls[1], ladder[0]));
    for (size_t k = 2; k + 1 < m; k++) {
        compute.push_back(Gate::ccx(controls[k], ladder[k - 2], ladder[k - 1]));
    }
    for (const auto &t : compute) {
        emit_toffoli(out, t.qubits[0], t.qubits[1], t.qubits[2]);
    }
    emit_toffoli(out, controls[m - 1], ladder[m - 3], target);
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
        emit_toffoli(out, it->qubits[0], it->qubits[1], it->qubits[2]);
    }
}

std::vector<QubitIndex> with(QubitIndex first, const std::vector<QubitIndex> &rest) {
    std::vector<QubitIndex> v{first};
    v.insert(v.end(), rest.begin(), rest.end());
    return v;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::DEC1:
            return "dec1";
        case Strategy::DEC2A:
            return "dec2a";
        case Strategy::DEC2AD:
            return "dec2ad";
        case Strategy::DEC2AD_CLEAN_A:
            return "dec2ad-clean-a";
        case Strategy::BASELINE:
            return "baseline";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    for (auto s : kAllStrategies) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

DecompositionResult decompose_mcx(const Circuit &c, size_t gate_index, Strategy strategy,
                                  const DecomposeOptions &options) {
    if (gate_index >= c.gates.size()) {
        throw NotAnMcx("no gate at index " + std::to_string(gate_index));
    }
    const Gate &g = c.gates[gate_index];
    if (!g.is_controlled_x()) {
        throw NotAnMcx("gate " + std::to_string(gate_index) + " is " + std::string(gate_name(g.kind)) +
                       ", not a multi-controlled X");
    }
    if (!c.partition) {
        throw PartitionMissing();
    }
    const std::vector<Side> sides = sides_before(c, gate_index);
    const QubitIndex t = g.qubits.back();
    const Side target_side = sides[t];
    const Side control_side = other(target_side);
    std::vector<QubitIndex> ctl_a;
    std::vector<QubitIndex> ctl_b;
    for (size_t k = 0; k + 1 < g.qubits.size(); k++) {
        (sides[g.qubits[k]] == target_side ? ctl_b : ctl_a).push_back(g.qubits[k]);
    }
    if (ctl_a.empty()) {
        throw NoCutNeeded("gate " + std::to_string(gate_index) + " already lies on one side of the partition");
    }

    DecompositionResult r;
    r.circuit.qubit_names = c.qubit_names;
    r.circuit.partition = c.partition;
    auto ancilla = [&](std::string_view name, Side side, bool dirty) {
        QubitIndex q = r.circuit.add_qubit(r.circuit.fresh_name(name), side);
        r.ancillas.push_back({q, dirty});
        return q;
    };

    std::vector<Gate> emitted;
    auto cx_n = [&](const std::vector<QubitIndex> &controls, QubitIndex target) {
        emitted.push_back(Gate::controlled_x(controls, target));
    };
    switch (strategy) {
        case Strategy::DEC1: {
            QubitIndex a = ancilla("a", control_side, false);
            cx_n(ctl_a, a);
            emitted.push_back(Gate::wire_cut(a));
            cx_n(with(a, ctl_b), t);
            emitted.push_back(Gate::wire_cut(a));
            cx_n(ctl_a, a);
            break;
        }
        case Strategy::DEC2A: {
            QubitIndex a0 = ancilla("a0", control_side, false);
            QubitIndex a1 = ancilla("a1", target_side, false);
            cx_n(ctl_a, a0);
            emitted.push_back(Gate::cx(a0, a1));
            cx_n(with(a1, ctl_b), t);
            emitted.push_back(Gate::cx(a0, a1));
            cx_n(ctl_a, a0);
            break;
        }
        case Strategy::DEC2AD:
        case Strategy::DEC2AD_CLEAN_A: {
            const bool clean_a = strategy == Strategy::DEC2AD_CLEAN_A;
            QubitIndex a = ancilla("a", control_side, !clean_a);
            cx_n(ctl_a, a);
            if (options.fuse_b && ctl_b.empty()) {
                emitted.push_back(Gate::cx(a, t));
            } else {
                QubitIndex b = ancilla("b", target_side, true);
                emitted.push_back(Gate::cx(a, b));
                cx_n(with(b, ctl_b), t);
            }
            if (clean_a) {
                cx_n(ctl_a, a);
            }
            break;
        }
        case Strategy::BASELINE:
            lower_gate(r.circuit, g, &sides, emitted, &r.ancillas);
            break;
    }

    r.circuit.gates.assign(c.gates.begin(), c.gates.begin() + static_cast<std::ptrdiff_t>(gate_index));
    r.circuit.gates.insert(r.circuit.gates.end(), emitted.begin(), emitted.end());
    r.circuit.gates.insert(r.circuit.gates.end(), c.gates.begin() + static_cast<std::ptrdiff_t>(gate_index) + 1,
                           c.gates.end());

    auto crossings = validate_partition(r.circuit);
    r.crossing_gate_count = crossings.gates.size();
    r.crossing_wire_count = crossings.wires.size();
    return r;
}

Circuit lower_to_cx(const Circuit &c) {
    Circuit out;
    out.qubit_names = c.qubit_names;
    out.partition = c.partition;
    std::vector<Side> sides;
    if (c.partition) {
        sides = *c.partition;
    }
    for (const auto &g : c.gates) {
        lower_gate(out, g, c.partition ? &sides : nullptr, out.gates, nullptr);
        if (g.kind == GateKind::WIRE_CUT && c.partition) {
            sides[g.qubits[0]] = other(sides[g.qubits[0]]);
        }
    }
    return out;
}

size_t count_cx(const Circuit &c) {
    return std::count_if(c.gates.begin(), c.gates.end(), [](const Gate &g) {
        return g.kind == GateKind::CX || (g.kind == GateKind::MCX && g.qubits.size() == 2);
    });
}

VerificationReport verify_decomposition(unsigned m1, unsigned m2, Strategy strategy) {
    if (m1 == 0) {
        throw ValidationError("the control side needs at least one control");
    }
    Circuit c;
    c.partition.emplace();
    std::vector<QubitIndex> controls;
    for (unsigned k = 0; k < m1; k++) {
        controls.push_back(c.add_qubit("qa" + std::to_string(k), Side::A));
    }
    for (unsigned k = 0; k < m2; k++) {
        controls.push_back(c.add_qubit("qb" + std::to_string(k), Side::B));
    }
    QubitIndex t = c.add_qubit("t", Side::B);
    c.gates.push_back(Gate::controlled_x(controls, t));
    const size_t n_orig = c.num_qubits();

    DecompositionResult r = decompose_mcx(c, 0, strategy);
    const size_t n_total = r.circuit.num_qubits();
    if (n_total > max_qubits()) {
        throw SizeLimitExceeded("verification needs " + std::to_string(n_total) + " qubits, limit is " +
                                std::to_string(max_qubits()));
    }

    VerificationReport report{0.0, true, 0};
    const uint64_t a_mask = (uint64_t{1} << m1) - 1;
    for (uint64_t x = 0; x < (uint64_t{1} << n_orig); x++) {
        StateVector reference = StateVector::basis(n_orig, x);
        reference.apply_circuit_unitaries(c);
        StateVector actual = StateVector::basis(n_total, x);
        actual.apply_circuit_unitaries(r.circuit);

        const bool and_a = (x & a_mask) == a_mask;
        uint64_t ancilla_bits = 0;
        if (strategy == Strategy::DEC2AD && and_a) {
            for (const auto &anc : r.ancillas) {
                ancilla_bits |= uint64_t{1} << anc.qubit;
            }
        } else if (strategy == Strategy::DEC2AD_CLEAN_A && and_a) {
            ancilla_bits |= uint64_t{1} << r.ancillas.back().qubit;
        }

        std::vector<Amplitude> expected(actual.amplitudes().size(), Amplitude{0, 0});
        for (uint64_t i = 0; i < reference.amplitudes().size(); i++) {
            expected[i | ancilla_bits] = reference.amplitude(i);
        }
        const uint64_t ancilla_mask = ((uint64_t{1} << n_total) - 1) & ~((uint64_t{1} << n_orig) - 1);
        double mass_on_expected_ancillas = 0;
        for (uint64_t i = 0; i < expected.size(); i++) {
            report.max_deviation = std::max(report.max_deviation, std::abs(actual.amplitude(i) - expected[i]));
            if ((i & ancilla_mask) == ancilla_bits) {
                mass_on_expected_ancillas += std::norm(actual.amplitude(i));
            }
        }
        if (mass_on_expected_ancillas < 1 - 1e-12) {
            report.ancilla_states_ok = false;
        }
        report.inputs_checked++;
    }
    return report;
}

}  // namespace qcut
