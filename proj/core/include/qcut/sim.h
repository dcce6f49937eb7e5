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

#ifndef QCUT_SIM_H
#define QCUT_SIM_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcut/ir.h"
#include "qcut/rng.h"

namespace qcut {

using Amplitude = std::complex<double>;

/// Qubit ceiling for dense simulation: 24, or QCUT_MAX_QUBITS when set.
size_t max_qubits();

/// Maximum number of MEASURE_Z gates accepted by exact branch enumeration.
inline constexpr size_t kMaxExactMeasurements = 12;

/// Dense little-endian statevector: amplitude i holds basis label i, whose
/// bit q is the value of qubit q.
class StateVector {
   public:
    /// |0...0>. Throws SizeLimitExceeded above max_qubits().
    explicit StateVector(size_t num_qubits);
    static StateVector basis(size_t num_qubits, uint64_t label);
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(uint64_t label) const {
        return amps_[label];
    }
    double norm_squared() const;

    /// Applies a unitary gate. PREP assumes its qubit is still |0> (the
    /// circuit validator guarantees PREP is the first operation on a wire);
    /// WIRE_CUT is a no-op. MEASURE_Z is rejected: use the run_* functions.
    void apply(const Gate &g);
    void apply_circuit_unitaries(const Circuit &c);

    double probability_one(QubitIndex q) const;
    /// Projects qubit q onto `outcome` and divides by sqrt(probability).
    /// A zero-probability projection is left unnormalized.
    void collapse(QubitIndex q, bool outcome, double probability);

    bool operator==(const StateVector &) const = default;

   private:
    void apply_1q(QubitIndex q, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11);
    void apply_diag(QubitIndex q, Amplitude d0, Amplitude d1);
    void apply_controlled_x(std::span<const QubitIndex> controls, QubitIndex target);

    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// One measurement-outcome branch of a circuit run.
struct Branch {
    /// Born probability of this outcome sequence.
    double weight;
    /// Indexed by classical bit; bits never written stay 0.
    std::vector<uint8_t> classbits;
    StateVector final_state;
};

/// Every branch over all MEASURE_Z outcomes, zero-probability branches
/// included with weight 0. Branch order is lexicographic in measurement
/// order, outcome 0 first. Throws TooManyBranches above
/// kMaxExactMeasurements measurements.
std::vector<Branch> run_exact_branches(const Circuit &c, const StateVector &initial);
std::vector<Branch> run_exact_branches(const Circuit &c, uint64_t basis_label = 0);

struct ExecutionOutcome {
    std::vector<uint8_t> classbits;
    /// Final computational-basis readout of every qubit.
    uint64_t bitstring;
    bool operator==(const ExecutionOutcome &) const = default;
};

/// Precomputes the branch structure of a circuit once, then draws shots from
/// it by the Born rule. Immutable after construction.
class ShotSampler {
   public:
    ShotSampler(const Circuit &c, const StateVector &initial);

    ExecutionOutcome sample(CounterRng &rng) const;
    size_t num_qubits() const {
        return num_qubits_;
    }

   private:
    struct Path {
        std::vector<uint8_t> classbits;
        std::vector<double> cumulative;  // over final basis labels
    };
    size_t num_qubits_;
    std::vector<Path> paths_;
    std::vector<double> path_cumulative_;
};

/// Shot k draws from CounterRng(seed, k), so the list is a pure function of
/// the arguments.
std::vector<ExecutionOutcome> run_shots(const Circuit &c, const StateVector &initial, uint64_t shots, uint64_t seed);

/// <psi|O|psi>. Throws QubitOutOfRange for factors beyond the register.
double expectation(const StateVector &state, const PauliObservable &obs);

}  // namespace qcut

#endif
