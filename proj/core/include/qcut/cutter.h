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

#ifndef QCUT_CUTTER_H
#define QCUT_CUTTER_H

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qcut/ir.h"
#include "qcut/qpd.h"

namespace qcut {

struct Cut {
    CutKind kind;
    /// Index of the crossing CX/CZ, or of the WIRE_CUT marker.
    size_t gate_index;
    /// The cut wire (WIRE) or the first qubit of the cut gate (GATE_CX).
    QubitIndex qubit;
    const QpdBasis *basis;
};

struct CutPlan {
    std::vector<Cut> cuts;

    /// Product of per-cut gamma.
    double gamma() const;
    /// Product of per-cut term counts, saturating at UINT64_MAX.
    uint64_t num_assignments() const;
};

/// One cut per crossing reported by validate_partition, in gate order.
/// Throws PartitionMissing, UncuttableCrossing (a crossing that is neither
/// CX, CZ nor a WIRE_CUT marker).
CutPlan plan_cuts(const Circuit &c);

struct TermAssignment {
    std::vector<size_t> indices;
    bool operator==(const TermAssignment &) const = default;
};

/// Mixed-radix decoding of `ordinal`; the last cut varies fastest.
TermAssignment assignment_from_ordinal(const CutPlan &plan, uint64_t ordinal);

struct SignRule {
    uint32_t classbit;
    Side side;
    bool operator==(const SignRule &) const = default;
};

/// One contiguous piece of an original wire between cuts.
struct WireSegment {
    QubitIndex original;
    Side side;
    QubitIndex local;
};

struct QubitMapping {
    std::vector<WireSegment> segments;
    /// Per original qubit: index into `segments` of its last piece.
    std::vector<size_t> final_segment;
    /// Per original qubit: the wire's last operation is a WIRE_CUT.
    std::vector<bool> ends_at_cut;
};

struct SubcircuitPair {
    Circuit a;
    Circuit b;
    /// Product of the chosen terms' coefficients.
    double coefficient;
    /// Measurements whose outcome 1 negates this pair's contribution.
    std::vector<SignRule> sign_rules;
    QubitMapping mapping;

    const Circuit &side(Side s) const {
        return s == Side::A ? a : b;
    }
};

/// Replaces every cut with its chosen term's local operations and splits the
/// circuit into two independent circuits. Qubits in each half are ordered by
/// (original index, segment). Throws InvalidAssignment.
SubcircuitPair instantiate(const Circuit &c, const CutPlan &plan, const TermAssignment &t);

/// Visits every term assignment in ordinal order.
void enumerate_all(const Circuit &c, const CutPlan &plan,
                   const std::function<void(const TermAssignment &, const SubcircuitPair &)> &visit);

/// Translates an observable on the original qubits into one factor per half.
/// Throws ObservableSpansCut when a factor sits on a wire whose last
/// operation is a cut, QubitOutOfRange for unknown qubits.
std::pair<PauliObservable, PauliObservable> split_observable(const PauliObservable &obs, const QubitMapping &m);

}  // namespace qcut

#endif
