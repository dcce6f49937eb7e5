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

#include "qcut/sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qcut/errors.h"

namespace qcut {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Amplitude kI{0, 1};

// Branches below this probability are not renormalized or simulated further.
constexpr double kZeroBranch = 1e-24;

void check_size(size_t n) {
    if (n > max_qubits()) {
        throw SizeLimitExceeded("circuit needs " + std::to_string(n) + " qubits, limit is " +
                                std::to_string(max_qubits()));
    }
}

size_t count_measurements(const Circuit &c) {
    return std::count_if(c.gates.begin(), c.gates.end(), [](const Gate &g) {
        return g.kind == GateKind::MEASURE_Z;
    });
}

void check_circuit(const Circuit &c, const StateVector &initial) {
    if (initial.num_qubits() != c.num_qubits()) {
        throw ValidationError("initial state has " + std::to_string(initial.num_qubits()) +
                              " qubits, circuit has " + std::to_string(c.num_qubits()));
    }
    if (count_measurements(c) > kMaxExactMeasurements) {
        throw TooManyBranches("more than " + std::to_string(kMaxExactMeasurements) + " measurements");
    }
}

struct Walker {
    const Circuit &c;
    size_t num_classbits;
    std::vector<Branch> &out;

    void walk(size_t gate, StateVector state, double weight, std::vector<uint8_t> bits) {
        for (; gate < c.gates.size(); gate++) {
            const Gate &g = c.gates[gate];
            if (g.kind != GateKind::MEASURE_Z) {
                if (weight > kZeroBranch) {
                    state.apply(g);
                }
                continue;
            }
            QubitIndex q = g.qubits[0];
            double p1 = weight > kZeroBranch ? std::clamp(state.probability_one(q), 0.0, 1.0) : 0.0;
            for (int outcome = 0; outcome < 2; outcome++) {
                double p = outcome ? p1 : 1.0 - p1;
                double w = weight > kZeroBranch ? weight * p : 0.0;
                StateVector next = state;
                if (w > kZeroBranch) {
                    next.collapse(q, outcome, p);
                }
                auto next_bits = bits;
                next_bits[*g.cbit] = static_cast<uint8_t>(outcome);
                walk(gate + 1, std::move(next), w, std::move(next_bits));
            }
            return;
        }
        out.push_back(Branch{weight, std::move(bits), std::move(state)});
    }
};

}  // namespace

size_t max_qubits() {
    if (const char *env = std::getenv("QCUT_MAX_QUBITS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40) {
            return static_cast<size_t>(v);
        }
    }
    return 24;
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits);
    amps_.assign(size_t{1} << num_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::basis(size_t num_qubits, uint64_t label) {
    StateVector s(num_qubits);
    if (label >= s.amps_.size()) {
        throw QubitOutOfRange("basis label out of range");
    }
    s.amps_[0] = 0;
    s.amps_[label] = 1;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    size_t n = 0;
    while ((size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if ((size_t{1} << n) != amplitudes.size()) {
        throw ValidationError("amplitude count is not a power of two");
    }
    StateVector s(n);
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm_squared() const {
    double t = 0;
    for (const auto &a : amps_) {
        t += std::norm(a);
    }
    return t;
}

void StateVector::apply_1q(QubitIndex q, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    const uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            continue;
        }
        Amplitude a0 = amps_[i];
        Amplitude a1 = amps_[i | bit];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[i | bit] = m10 * a0 + m11 * a1;
    }
}

void StateVector::apply_diag(QubitIndex q, Amplitude d0, Amplitude d1) {
    const uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        amps_[i] *= (i & bit) ? d1 : d0;
    }
}

void StateVector::apply_controlled_x(std::span<const QubitIndex> controls, QubitIndex target) {
    uint64_t cmask = 0;
    for (auto c : controls) {
        cmask |= uint64_t{1} << c;
    }
    const uint64_t tbit = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & cmask) == cmask && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply(const Gate &g) {
    for (auto q : g.qubits) {
        if (q >= num_qubits_) {
            throw QubitOutOfRange("gate " + std::string(gate_name(g.kind)) + " addresses qubit " + std::to_string(q));
        }
    }
    const QubitIndex q = g.qubits.empty() ? 0 : g.qubits.front();
    switch (g.kind) {
        case GateKind::X:
            apply_controlled_x({}, q);
            break;
        case GateKind::H:
            apply_1q(q, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
            break;
        case GateKind::S:
            apply_diag(q, 1, kI);
            break;
        case GateKind::SDG:
            apply_diag(q, 1, -kI);
            break;
        case GateKind::T:
            apply_diag(q, 1, std::polar(1.0, M_PI / 4));
            break;
        case GateKind::TDG:
            apply_diag(q, 1, std::polar(1.0, -M_PI / 4));
            break;
        case GateKind::RZ:
            apply_diag(q, std::polar(1.0, -g.angle / 2), std::polar(1.0, g.angle / 2));
            break;
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            apply_controlled_x(std::span(g.qubits).first(g.qubits.size() - 1), g.qubits.back());
            break;
        case GateKind::CZ: {
            const uint64_t mask = (uint64_t{1} << g.qubits[0]) | (uint64_t{1} << g.qubits[1]);
            for (uint64_t i = 0; i < amps_.size(); i++) {
                if ((i & mask) == mask) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        }
        case GateKind::PREP:
            switch (g.state) {
                case PrepState::ZERO:
                    break;
                case PrepState::ONE:
                    apply(Gate::single(GateKind::X, q));
                    break;
                case PrepState::PLUS:
                    apply(Gate::single(GateKind::H, q));
                    break;
                case PrepState::MINUS:
                    apply(Gate::single(GateKind::X, q));
                    apply(Gate::single(GateKind::H, q));
                    break;
                case PrepState::PLUS_I:
                    apply(Gate::single(GateKind::H, q));
                    apply(Gate::single(GateKind::S, q));
                    break;
                case PrepState::MINUS_I:
                    apply(Gate::single(GateKind::H, q));
                    apply(Gate::single(GateKind::SDG, q));
                    break;
            }
            break;
        case GateKind::WIRE_CUT:
            break;
        case GateKind::MEASURE_Z:
            throw ValidationError("measure_z is not unitary; use run_exact_branches or run_shots");
    }
}

void StateVector::apply_circuit_unitaries(const Circuit &c) {
    for (const auto &g : c.gates) {
        apply(g);
    }
}

double StateVector::probability_one(QubitIndex q) const {
    const uint64_t bit = uint64_t{1} << q;
    double p = 0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

void StateVector::collapse(QubitIndex q, bool outcome, double probability) {
    const uint64_t bit = uint64_t{1} << q;
    const double scale = probability > kZeroBranch ? 1.0 / std::sqrt(probability) : 1.0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (static_cast<bool>(i & bit) != outcome) {
            amps_[i] = 0;
        } else {
            amps_[i] *= scale;
        }
    }
}

std::vector<Branch> run_exact_branches(const Circuit &c, const StateVector &initial) {
    check_circuit(c, initial);
    std::vector<Branch> out;
    Walker w{c, c.num_classbits(), out};
    w.walk(0, initial, 1.0, std::vector<uint8_t>(w.num_classbits, 0));
    return out;
}

std::vector<Branch> run_exact_branches(const Circuit &c, uint64_t basis_label) {
    return run_exact_branches(c, StateVector::basis(c.num_qubits(), basis_label));
}

ShotSampler::ShotSampler(const Circuit &c, const StateVector &initial) : num_qubits_(c.num_qubits()) {
    double total = 0;
    for (auto &b : run_exact_branches(c, initial)) {
        if (b.weight <= kZeroBranch) {
            continue;
        }
        Path p;
        p.classbits = std::move(b.classbits);
        p.cumulative.reserve(b.final_state.amplitudes().size());
        double acc = 0;
        for (const auto &a : b.final_state.amplitudes()) {
            acc += std::norm(a);
            p.cumulative.push_back(acc);
        }
        total += b.weight;
        paths_.push_back(std::move(p));
        path_cumulative_.push_back(total);
    }
}

namespace {

size_t pick(const std::vector<double> &cumulative, double u) {
    double target = u * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    return std::min<size_t>(it - cumulative.begin(), cumulative.size() - 1);
}

}  // namespace

ExecutionOutcome ShotSampler::sample(CounterRng &rng) const {
    const Path &p = paths_[pick(path_cumulative_, rng.uniform())];
    return ExecutionOutcome{p.classbits, pick(p.cumulative, rng.uniform())};
}

std::vector<ExecutionOutcome> run_shots(const Circuit &c, const StateVector &initial, uint64_t shots, uint64_t seed) {
    ShotSampler sampler(c, initial);
    std::vector<ExecutionOutcome> out;
    out.reserve(shots);
    for (uint64_t k = 0; k < shots; k++) {
        CounterRng rng(seed, k);
        out.push_back(sampler.sample(rng));
    }
    return out;
}

double expectation(const StateVector &state, const PauliObservable &obs) {
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    int num_y = 0;
    for (const auto &[q, p] : obs.factors) {
        if (q >= state.num_qubits()) {
            throw QubitOutOfRange("observable factor on qubit " + std::to_string(q) + " but state has " +
                                  std::to_string(state.num_qubits()) + " qubits");
        }
        const uint64_t bit = uint64_t{1} << q;
        if (p == Pauli::X || p == Pauli::Y) {
            xmask |= bit;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            zmask |= bit;
        }
        num_y += p == Pauli::Y;
    }
    // Y = i X Z, so P|i> = i^{#Y} (-1)^{popcount(i & zmask)} |i ^ xmask>.
    static const Amplitude kYPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Amplitude global = kYPhase[num_y % 4];
    auto amps = state.amplitudes();
    Amplitude total = 0;
    for (uint64_t i = 0; i < amps.size(); i++) {
        Amplitude term = std::conj(amps[i ^ xmask]) * amps[i];
        total += (std::popcount(i & zmask) & 1) ? -term : term;
    }
    return (global * total).real();
}

}  // namespace qcut
