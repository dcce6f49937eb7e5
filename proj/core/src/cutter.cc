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

#include "qcut/cutter.h"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "qcut/errors.h"

namespace qcut {

namespace {

bool is_cx_like(const Gate &g) {
    return g.kind == GateKind::CX || (g.kind == GateKind::MCX && g.qubits.size() == 2);
}

QubitMapping build_mapping(const Circuit &c) {
    const size_t n = c.num_qubits();
    std::vector<size_t> pieces(n, 1);
    std::vector<bool> ends_at_cut(n, false);
    for (const auto &g : c.gates) {
        for (auto q : g.qubits) {
            ends_at_cut[q] = g.kind == GateKind::WIRE_CUT;
        }
        if (g.kind == GateKind::WIRE_CUT) {
            pieces[g.qubits[0]]++;
        }
    }

    QubitMapping m;
    m.ends_at_cut = ends_at_cut;
    QubitIndex next_local[2] = {0, 0};
    for (QubitIndex q = 0; q < n; q++) {
        Side s = (*c.partition)[q];
        for (size_t k = 0; k < pieces[q]; k++) {
            auto &counter = next_local[static_cast<int>(s)];
            m.segments.push_back({q, s, counter++});
            s = other(s);
        }
        m.final_segment.push_back(m.segments.size() - 1);
    }
    return m;
}

class Splitter {
   public:
    Splitter(const Circuit &c, SubcircuitPair &out) : out_(out) {
        out_.mapping = build_mapping(c);
        size_t seg = 0;
        for (QubitIndex q = 0; q < c.num_qubits(); q++) {
            current_.push_back(seg);
            seg = out_.mapping.final_segment[q] + 1;
        }
        for (Side s : {Side::A, Side::B}) {
            Circuit &half = circuit(s);
            half.partition.emplace();
        }
        const auto &segments = out_.mapping.segments;
        for (size_t k = 0; k < segments.size(); k++) {
            const WireSegment &segment = segments[k];
            size_t piece = k - current_[segment.original];
            std::string name = c.qubit_names[segment.original];
            if (piece > 0) {
                name += "@" + std::to_string(piece);
            }
            circuit(segment.side).add_qubit(std::move(name), segment.side);
        }
    }

    Side side_of(QubitIndex q) const {
        return out_.mapping.segments[current_[q]].side;
    }
    QubitIndex local(QubitIndex q) const {
        return out_.mapping.segments[current_[q]].local;
    }
    void advance(QubitIndex q) {
        current_[q]++;
    }

    Circuit &circuit(Side s) {
        return s == Side::A ? out_.a : out_.b;
    }

    uint32_t new_classbit(Side s) {
        return next_cbit_[static_cast<int>(s)]++;
    }

    void emit_local(const Gate &g) {
        Side s = side_of(g.qubits[0]);
        Gate mapped = g;
        for (auto &q : mapped.qubits) {
            q = local(q);
        }
        if (mapped.kind == GateKind::MEASURE_Z) {
            mapped.cbit = new_classbit(s);
        }
        circuit(s).gates.push_back(std::move(mapped));
    }

    /// Emits a term's local op onto original qubit q; returns the classical
    /// bit of its measurement, if any.
    std::optional<uint32_t> emit_op(const LocalOp &op, QubitIndex q, bool h_wrap) {
        Side s = side_of(q);
        QubitIndex lq = local(q);
        std::optional<uint32_t> measured;
        auto &gates = circuit(s).gates;
        if (h_wrap) {
            gates.push_back(Gate::single(GateKind::H, lq));
        }
        for (Gate g : op.gates) {
            g.qubits = {lq};
            if (g.kind == GateKind::MEASURE_Z) {
                g.cbit = new_classbit(s);
                measured = g.cbit;
            }
            gates.push_back(std::move(g));
        }
        if (h_wrap) {
            gates.push_back(Gate::single(GateKind::H, lq));
        }
        return measured;
    }

   private:
    SubcircuitPair &out_;
    std::vector<size_t> current_;
    uint32_t next_cbit_[2] = {0, 0};
};

}  // namespace

double CutPlan::gamma() const {
    double g = 1;
    for (const auto &cut : cuts) {
        g *= cut.basis->gamma;
    }
    return g;
}

uint64_t CutPlan::num_assignments() const {
    uint64_t n = 1;
    for (const auto &cut : cuts) {
        uint64_t k = cut.basis->terms.size();
        if (n > std::numeric_limits<uint64_t>::max() / k) {
            return std::numeric_limits<uint64_t>::max();
        }
        n *= k;
    }
    return n;
}

CutPlan plan_cuts(const Circuit &c) {
    PartitionCrossings crossings = validate_partition(c);
    CutPlan plan;
    for (size_t i : crossings.gates) {
        const Gate &g = c.gates[i];
        if (is_cx_like(g)) {
            plan.cuts.push_back({CutKind::GATE_CX, i, g.qubits[0], &cx_cut_basis()});
        } else if (g.kind == GateKind::CZ) {
            plan.cuts.push_back({CutKind::GATE_CX, i, g.qubits[0], &cz_cut_basis()});
        } else {
            throw UncuttableCrossing("gate " + std::to_string(i) + " (" + std::string(gate_name(g.kind)) +
                                     ") crosses the partition; decompose it first");
        }
    }
    for (const auto &w : crossings.wires) {
        plan.cuts.push_back({CutKind::WIRE, w.gate_index, w.qubit, &wire_cut_basis()});
    }
    std::sort(plan.cuts.begin(), plan.cuts.end(), [](const Cut &x, const Cut &y) {
        return x.gate_index < y.gate_index;
    });
    return plan;
}

TermAssignment assignment_from_ordinal(const CutPlan &plan, uint64_t ordinal) {
    TermAssignment t;
    t.indices.resize(plan.cuts.size());
    for (size_t k = plan.cuts.size(); k-- > 0;) {
        uint64_t radix = plan.cuts[k].basis->terms.size();
        t.indices[k] = static_cast<size_t>(ordinal % radix);
        ordinal /= radix;
    }
    if (ordinal != 0) {
        throw InvalidAssignment("ordinal exceeds the number of assignments");
    }
    return t;
}

SubcircuitPair instantiate(const Circuit &c, const CutPlan &plan, const TermAssignment &t) {
    if (!c.partition) {
        throw PartitionMissing();
    }
    if (t.indices.size() != plan.cuts.size()) {
        throw InvalidAssignment("assignment has " + std::to_string(t.indices.size()) + " indices for " +
                                std::to_string(plan.cuts.size()) + " cuts");
    }
    std::map<size_t, size_t> cut_at;
    for (size_t k = 0; k < plan.cuts.size(); k++) {
        const Cut &cut = plan.cuts[k];
        if (t.indices[k] >= cut.basis->terms.size()) {
            throw InvalidAssignment("term index " + std::to_string(t.indices[k]) + " out of range for cut " +
                                    std::to_string(k));
        }
        if (cut.gate_index >= c.gates.size()) {
            throw InvalidAssignment("cut " + std::to_string(k) + " points past the end of the circuit");
        }
        cut_at[cut.gate_index] = k;
    }

    SubcircuitPair out;
    out.coefficient = 1;
    Splitter split(c, out);

    auto apply_term = [&](const QpdTerm &term, QubitIndex first, QubitIndex second, bool h_wrap_second,
                          bool advance_between) {
        Side first_side = split.side_of(first);
        auto m1 = split.emit_op(term.first, first, false);
        if (advance_between) {
            split.advance(first);
        }
        Side second_side = split.side_of(second);
        auto m2 = split.emit_op(term.second, second, h_wrap_second);
        if (term.sign_rule == OutcomeSignRule::SIGN_FROM_MEASUREMENT) {
            auto bit = term.sign_on_first ? m1 : m2;
            out.sign_rules.push_back({*bit, term.sign_on_first ? first_side : second_side});
        }
        out.coefficient *= term.coefficient;
    };

    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate &g = c.gates[i];
        auto planned = cut_at.find(i);
        if (g.kind == GateKind::WIRE_CUT) {
            if (planned == cut_at.end() || plan.cuts[planned->second].kind != CutKind::WIRE) {
                throw InvalidAssignment("wire cut at gate " + std::to_string(i) + " is not in the plan");
            }
            const Cut &cut = plan.cuts[planned->second];
            const QpdTerm &term = cut.basis->terms[t.indices[planned->second]];
            QubitIndex q = g.qubits[0];
            apply_term(term, q, q, false, true);
            continue;
        }
        bool crosses = std::any_of(g.qubits.begin(), g.qubits.end(), [&](QubitIndex q) {
            return split.side_of(q) != split.side_of(g.qubits[0]);
        });
        if (!crosses) {
            if (planned != cut_at.end()) {
                throw InvalidAssignment("plan cuts gate " + std::to_string(i) + ", which does not cross");
            }
            split.emit_local(g);
            continue;
        }
        if (planned == cut_at.end() || plan.cuts[planned->second].kind != CutKind::GATE_CX) {
            throw InvalidAssignment("crossing gate " + std::to_string(i) + " is not in the plan");
        }
        if (!is_cx_like(g) && g.kind != GateKind::CZ) {
            throw InvalidAssignment("gate " + std::to_string(i) + " cannot be cut as a two-qubit gate");
        }
        const Cut &cut = plan.cuts[planned->second];
        const QpdTerm &term = cut.basis->terms[t.indices[planned->second]];
        apply_term(term, g.qubits[0], g.qubits[1], cut.basis->conjugate_second_with_h, false);
    }
    return out;
}

void enumerate_all(const Circuit &c, const CutPlan &plan,
                   const std::function<void(const TermAssignment &, const SubcircuitPair &)> &visit) {
    const uint64_t n = plan.num_assignments();
    for (uint64_t k = 0; k < n; k++) {
        TermAssignment t = assignment_from_ordinal(plan, k);
        visit(t, instantiate(c, plan, t));
    }
}

std::pair<PauliObservable, PauliObservable> split_observable(const PauliObservable &obs, const QubitMapping &m) {
    std::pair<PauliObservable, PauliObservable> halves;
    for (const auto &[q, p] : obs.factors) {
        if (q >= m.final_segment.size()) {
            throw QubitOutOfRange("observable names qubit " + std::to_string(q) + " outside the circuit");
        }
        if (p == Pauli::I) {
            continue;
        }
        if (m.ends_at_cut[q]) {
            throw ObservableSpansCut("observable factor on qubit " + std::to_string(q) +
                                     ", whose wire ends at a cut");
        }
        const WireSegment &seg = m.segments[m.final_segment[q]];
        (seg.side == Side::A ? halves.first : halves.second).factors[seg.local] = p;
    }
    return halves;
}

}  // namespace qcut
