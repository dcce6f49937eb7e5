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

#ifndef QCUT_TESTS_CIRCUIT_GEN_H
#define QCUT_TESTS_CIRCUIT_GEN_H

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qcut/ir.h"

namespace qcut::gen {

inline Gate random_1q(std::mt19937_64 &rng, QubitIndex q) {
    static const GateKind kinds[] = {GateKind::X,   GateKind::H, GateKind::S, GateKind::SDG,
                                     GateKind::T,   GateKind::TDG, GateKind::RZ};
    std::uniform_int_distribution<int> pick(0, 6);
    GateKind k = kinds[pick(rng)];
    if (k == GateKind::RZ) {
        return Gate::rz(q, std::uniform_real_distribution<double>(-M_PI, M_PI)(rng));
    }
    return Gate::single(k, q);
}

/// Arbitrary valid circuit over the whole gate set (for serialization tests).
inline Circuit random_circuit(std::mt19937_64 &rng, size_t max_qubits = 6, size_t max_gates = 25) {
    std::uniform_int_distribution<size_t> nq(3, max_qubits);
    std::uniform_int_distribution<size_t> ng(0, max_gates);
    Circuit c;
    const size_t n = nq(rng);
    for (size_t q = 0; q < n; q++) {
        c.qubit_names.push_back("q" + std::to_string(q));
    }
    if (rng() & 1) {
        c.partition.emplace();
        for (size_t q = 0; q < n; q++) {
            c.partition->push_back((rng() & 1) ? Side::A : Side::B);
        }
    }
    std::vector<QubitIndex> order(n);
    for (size_t q = 0; q < n; q++) {
        order[q] = static_cast<QubitIndex>(q);
    }
    std::vector<bool> touched(n, false);
    uint32_t cbit = 0;
    const size_t count = ng(rng);
    for (size_t i = 0; i < count; i++) {
        std::shuffle(order.begin(), order.end(), rng);
        Gate g;
        switch (rng() % 8) {
            case 0:
                g = Gate::cx(order[0], order[1]);
                break;
            case 1:
                g = Gate::cz(order[0], order[1]);
                break;
            case 2:
                g = Gate::ccx(order[0], order[1], order[2]);
                break;
            case 3: {
                size_t m = 1 + rng() % (n - 1);
                g = Gate::mcx({order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m)}, order[m]);
                break;
            }
            case 4:
                g = Gate::measure_z(order[0], cbit++);
                break;
            case 5:
                if (!touched[order[0]]) {
                    g = Gate::prep(order[0], static_cast<PrepState>(rng() % 6));
                } else {
                    g = Gate::wire_cut(order[0]);
                }
                break;
            default:
                g = random_1q(rng, order[0]);
        }
        for (auto q : g.qubits) {
            touched[q] = true;
        }
        c.gates.push_back(std::move(g));
    }
    return c;
}

struct CutCircuit {
    Circuit circuit;
    size_t gate_cuts = 0;
    size_t wire_cuts = 0;
};

/// Partitioned circuit of local gates with exactly `gate_cuts` crossing
/// CX/CZ gates and `wire_cuts` WIRE_CUT markers. Each cut wire sees at least
/// one more gate after its marker.
inline CutCircuit random_cut_circuit(std::mt19937_64 &rng, size_t n, size_t gate_cuts, size_t wire_cuts,
                                     size_t local_gates = 16) {
    CutCircuit out;
    Circuit &c = out.circuit;
    c.partition.emplace();
    for (size_t q = 0; q < n; q++) {
        c.add_qubit("q" + std::to_string(q), q < n / 2 ? Side::A : Side::B);
    }
    std::vector<Side> sides = *c.partition;
    for (QubitIndex q = 0; q < n; q++) {
        c.gates.push_back(random_1q(rng, q));
        c.gates.push_back(Gate::single(GateKind::H, q));
    }

    // Interleave the cut events among the local gates.
    std::vector<int> events(local_gates, 0);
    events.insert(events.end(), gate_cuts, 1);
    events.insert(events.end(), wire_cuts, 2);
    std::shuffle(events.begin(), events.end(), rng);
    std::uniform_int_distribution<QubitIndex> pick(0, static_cast<QubitIndex>(n - 1));

    auto pair_on = [&](bool same_side) {
        for (;;) {
            QubitIndex a = pick(rng);
            QubitIndex b = pick(rng);
            if (a != b && (sides[a] == sides[b]) == same_side) {
                return std::pair{a, b};
            }
        }
    };
    auto has_local_pair = [&] {
        size_t na = std::count(sides.begin(), sides.end(), Side::A);
        return na >= 2 || n - na >= 2;
    };
    auto has_cross_pair = [&] {
        size_t na = std::count(sides.begin(), sides.end(), Side::A);
        return na >= 1 && n - na >= 1;
    };

    for (int e : events) {
        if (e == 2) {
            QubitIndex q = pick(rng);
            c.gates.push_back(Gate::wire_cut(q));
            sides[q] = other(sides[q]);
            c.gates.push_back(random_1q(rng, q));
            out.wire_cuts++;
        } else if (e == 1 && has_cross_pair()) {
            auto [a, b] = pair_on(false);
            c.gates.push_back((rng() & 1) ? Gate::cx(a, b) : Gate::cz(a, b));
            out.gate_cuts++;
        } else if (e == 0) {
            if ((rng() & 1) && has_local_pair()) {
                auto [a, b] = pair_on(true);
                c.gates.push_back((rng() & 1) ? Gate::cx(a, b) : Gate::cz(a, b));
            } else {
                c.gates.push_back(random_1q(rng, pick(rng)));
            }
        }
    }
    return out;
}

}  // namespace qcut::gen

#endif
