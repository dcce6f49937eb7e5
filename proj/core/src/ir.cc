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

#include "qcut/ir.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>

#include "qcut/errors.h"

namespace qcut {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 14> kGateNames{{
    {GateKind::X, "x"},
    {GateKind::H, "h"},
    {GateKind::S, "s"},
    {GateKind::SDG, "sdg"},
    {GateKind::T, "t"},
    {GateKind::TDG, "tdg"},
    {GateKind::RZ, "rz"},
    {GateKind::CX, "cx"},
    {GateKind::CZ, "cz"},
    {GateKind::CCX, "ccx"},
    {GateKind::MCX, "mcx"},
    {GateKind::MEASURE_Z, "measure_z"},
    {GateKind::PREP, "prep"},
    {GateKind::WIRE_CUT, "wire_cut"},
}};

constexpr std::array<std::pair<PrepState, std::string_view>, 6> kPrepNames{{
    {PrepState::ZERO, "zero"},
    {PrepState::ONE, "one"},
    {PrepState::PLUS, "plus"},
    {PrepState::MINUS, "minus"},
    {PrepState::PLUS_I, "plus_i"},
    {PrepState::MINUS_I, "minus_i"},
}};

// Required qubit count for fixed-arity kinds; 0 for MCX.
size_t fixed_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
            return 2;
        case GateKind::CCX:
            return 3;
        case GateKind::MCX:
            return 0;
        default:
            return 1;
    }
}

Gate make(GateKind kind, std::vector<QubitIndex> qubits) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    return g;
}

}  // namespace

char side_char(Side s) {
    return s == Side::A ? 'A' : 'B';
}

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view prep_state_name(PrepState state) {
    for (const auto &[s, name] : kPrepNames) {
        if (s == state) {
            return name;
        }
    }
    return "?";
}

std::optional<PrepState> prep_state_from_name(std::string_view name) {
    for (const auto &[s, n] : kPrepNames) {
        if (n == name) {
            return s;
        }
    }
    return std::nullopt;
}

Gate Gate::single(GateKind kind, QubitIndex q) {
    return make(kind, {q});
}

Gate Gate::rz(QubitIndex q, double angle) {
    Gate g = make(GateKind::RZ, {q});
    g.angle = angle;
    return g;
}

Gate Gate::cx(QubitIndex control, QubitIndex target) {
    return make(GateKind::CX, {control, target});
}

Gate Gate::cz(QubitIndex a, QubitIndex b) {
    return make(GateKind::CZ, {a, b});
}

Gate Gate::ccx(QubitIndex c0, QubitIndex c1, QubitIndex target) {
    return make(GateKind::CCX, {c0, c1, target});
}

Gate Gate::mcx(std::vector<QubitIndex> controls, QubitIndex target) {
    controls.push_back(target);
    return make(GateKind::MCX, std::move(controls));
}

Gate Gate::measure_z(QubitIndex q, uint32_t cbit) {
    Gate g = make(GateKind::MEASURE_Z, {q});
    g.cbit = cbit;
    return g;
}

Gate Gate::prep(QubitIndex q, PrepState state) {
    Gate g = make(GateKind::PREP, {q});
    g.state = state;
    return g;
}

Gate Gate::wire_cut(QubitIndex q) {
    return make(GateKind::WIRE_CUT, {q});
}

Gate Gate::controlled_x(std::span<const QubitIndex> controls, QubitIndex target) {
    switch (controls.size()) {
        case 0:
            return single(GateKind::X, target);
        case 1:
            return cx(controls[0], target);
        case 2:
            return ccx(controls[0], controls[1], target);
        default:
            return mcx({controls.begin(), controls.end()}, target);
    }
}

bool Gate::is_controlled_x() const {
    return kind == GateKind::CX || kind == GateKind::CCX || kind == GateKind::MCX;
}

size_t Circuit::num_classbits() const {
    size_t n = 0;
    for (const auto &g : gates) {
        if (g.kind == GateKind::MEASURE_Z && g.cbit) {
            n = std::max<size_t>(n, *g.cbit + 1);
        }
    }
    return n;
}

QubitIndex Circuit::add_qubit(std::string name, std::optional<Side> side) {
    qubit_names.push_back(std::move(name));
    if (partition) {
        if (!side) {
            throw ValidationError("partitioned circuit needs a side for new qubit '" + qubit_names.back() + "'");
        }
        partition->push_back(*side);
    }
    return static_cast<QubitIndex>(qubit_names.size() - 1);
}

std::string Circuit::fresh_name(std::string_view base) const {
    auto taken = [&](const std::string &n) {
        return std::find(qubit_names.begin(), qubit_names.end(), n) != qubit_names.end();
    };
    std::string name(base);
    for (int k = 2; taken(name); k++) {
        name = std::string(base) + "_" + std::to_string(k);
    }
    return name;
}

void Circuit::validate() const {
    std::set<std::string_view> names;
    for (const auto &n : qubit_names) {
        if (!names.insert(n).second) {
            throw ValidationError("duplicate qubit name '" + n + "'");
        }
    }
    if (partition && partition->size() != qubit_names.size()) {
        throw ValidationError("partition does not cover every qubit");
    }

    std::set<uint32_t> cbits;
    std::vector<bool> touched(num_qubits(), false);
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate &g = gates[i];
        auto where = " (gate " + std::to_string(i) + ", " + std::string(gate_name(g.kind)) + ")";
        size_t arity = fixed_arity(g.kind);
        if (arity == 0 ? g.qubits.size() < 2 : g.qubits.size() != arity) {
            throw ValidationError("wrong number of qubits" + where);
        }
        for (size_t k = 0; k < g.qubits.size(); k++) {
            if (g.qubits[k] >= num_qubits()) {
                throw ValidationError("qubit index out of range" + where);
            }
            for (size_t j = 0; j < k; j++) {
                if (g.qubits[j] == g.qubits[k]) {
                    throw ValidationError("duplicate qubit" + where);
                }
            }
        }
        if (g.kind == GateKind::RZ && !std::isfinite(g.angle)) {
            throw ValidationError("non-finite angle" + where);
        }
        if (g.kind == GateKind::MEASURE_Z) {
            if (!g.cbit) {
                throw ValidationError("measurement without classical bit" + where);
            }
            if (!cbits.insert(*g.cbit).second) {
                throw ValidationError("classical bit written twice" + where);
            }
        } else if (g.cbit) {
            throw ValidationError("classical bit on non-measurement" + where);
        }
        if (g.kind == GateKind::PREP && touched[g.qubits[0]]) {
            throw ValidationError("prep must be the first operation on its qubit" + where);
        }
        for (auto q : g.qubits) {
            touched[q] = true;
        }
    }
}

std::string PauliObservable::str() const {
    std::string out;
    for (const auto &[q, p] : factors) {
        if (p == Pauli::I) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "IXYZ"[static_cast<int>(p)];
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

bool PauliObservable::is_trivial() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto &f) {
        return f.second == Pauli::I;
    });
}

PauliObservable PauliObservable::parse(std::string_view text) {
    PauliObservable obs;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('*', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view tok = text.substr(pos, end - pos);
        if (tok.size() < 2) {
            throw ValidationError("bad observable factor '" + std::string(tok) + "'");
        }
        Pauli p;
        switch (tok[0]) {
            case 'I':
                p = Pauli::I;
                break;
            case 'X':
                p = Pauli::X;
                break;
            case 'Y':
                p = Pauli::Y;
                break;
            case 'Z':
                p = Pauli::Z;
                break;
            default:
                throw ValidationError("bad Pauli letter in '" + std::string(tok) + "'");
        }
        uint64_t q = 0;
        for (char ch : tok.substr(1)) {
            if (ch < '0' || ch > '9' || q > 1'000'000) {
                throw ValidationError("bad qubit index in '" + std::string(tok) + "'");
            }
            q = q * 10 + static_cast<uint64_t>(ch - '0');
        }
        if (!obs.factors.emplace(static_cast<QubitIndex>(q), p).second) {
            throw ValidationError("qubit repeated in observable '" + std::string(text) + "'");
        }
        pos = end + 1;
        if (end + 1 == text.size()) {
            throw ValidationError("trailing '*' in observable");
        }
    }
    if (obs.factors.empty()) {
        throw ValidationError("empty observable");
    }
    return obs;
}

std::vector<Side> sides_before(const Circuit &c, size_t gate_index) {
    if (!c.partition) {
        throw PartitionMissing();
    }
    std::vector<Side> sides = *c.partition;
    for (size_t i = 0; i < gate_index && i < c.gates.size(); i++) {
        if (c.gates[i].kind == GateKind::WIRE_CUT) {
            auto q = c.gates[i].qubits[0];
            sides[q] = other(sides[q]);
        }
    }
    return sides;
}

PartitionCrossings validate_partition(const Circuit &c) {
    if (!c.partition) {
        throw PartitionMissing();
    }
    PartitionCrossings out;
    std::vector<Side> sides = *c.partition;
    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate &g = c.gates[i];
        if (g.kind == GateKind::WIRE_CUT) {
            auto q = g.qubits[0];
            out.wires.push_back({i, q});
            sides[q] = other(sides[q]);
            continue;
        }
        bool has_a = false;
        bool has_b = false;
        for (auto q : g.qubits) {
            (sides[q] == Side::A ? has_a : has_b) = true;
        }
        if (has_a && has_b) {
            out.gates.push_back(i);
        }
    }
    return out;
}

}  // namespace qcut
