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

#include "qcut/estimate.h"

#include <bit>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>

#include "parallel.h"
#include "qcut/errors.h"
#include "qcut/sim.h"

namespace qcut {

namespace {

constexpr uint64_t kChunk = 1 << 14;
constexpr uint64_t kMaxCachedPairs = 4096;

int sign_of(const Branch &b, const std::vector<SignRule> &rules, Side side) {
    int s = 1;
    for (const auto &r : rules) {
        if (r.side == side && b.classbits[r.classbit]) {
            s = -s;
        }
    }
    return s;
}

// Signed expectation of one half: sum_b weight_b * sign_b * <obs>_b.
double half_value(const Circuit &half, const PauliObservable &obs, const std::vector<SignRule> &rules, Side side) {
    double v = 0;
    for (const auto &b : run_exact_branches(half, 0)) {
        if (b.weight > 0) {
            v += b.weight * sign_of(b, rules, side) * expectation(b.final_state, obs);
        }
    }
    return v;
}

void check_observable(const Circuit &c, const PauliObservable &obs) {
    for (const auto &[q, p] : obs.factors) {
        if (q >= c.num_qubits()) {
            throw QubitOutOfRange("observable names qubit " + std::to_string(q) + " outside the circuit");
        }
    }
}

// Basis changes so that a Z readout measures the given Pauli factors; returns
// the readout mask.
uint64_t append_readout(Circuit &half, const PauliObservable &obs) {
    uint64_t mask = 0;
    for (const auto &[q, p] : obs.factors) {
        if (p == Pauli::I) {
            continue;
        }
        if (p == Pauli::Y) {
            half.gates.push_back(Gate::single(GateKind::SDG, q));
        }
        if (p == Pauli::X || p == Pauli::Y) {
            half.gates.push_back(Gate::single(GateKind::H, q));
        }
        mask |= uint64_t{1} << q;
    }
    return mask;
}

struct PreparedPair {
    double coefficient_sign;
    std::vector<uint32_t> sign_bits[2];
    uint64_t readout[2];
    std::unique_ptr<ShotSampler> sampler[2];

    PreparedPair(const SubcircuitPair &pair, const PauliObservable &obs) {
        coefficient_sign = pair.coefficient < 0 ? -1.0 : 1.0;
        auto [obs_a, obs_b] = split_observable(obs, pair.mapping);
        const PauliObservable *half_obs[2] = {&obs_a, &obs_b};
        for (Side s : {Side::A, Side::B}) {
            int k = static_cast<int>(s);
            Circuit half = pair.side(s);
            readout[k] = append_readout(half, *half_obs[k]);
            sampler[k] = std::make_unique<ShotSampler>(half, StateVector(half.num_qubits()));
        }
        for (const auto &r : pair.sign_rules) {
            sign_bits[static_cast<int>(r.side)].push_back(r.classbit);
        }
    }

    double score(CounterRng &rng) const {
        double s = coefficient_sign;
        for (int k = 0; k < 2; k++) {
            ExecutionOutcome out = sampler[k]->sample(rng);
            for (auto bit : sign_bits[k]) {
                if (out.classbits[bit]) {
                    s = -s;
                }
            }
            if (std::popcount(out.bitstring & readout[k]) & 1) {
                s = -s;
            }
        }
        return s;
    }
};

}  // namespace

double uncut_expectation(const Circuit &c, const PauliObservable &obs) {
    check_observable(c, obs);
    double v = 0;
    for (const auto &b : run_exact_branches(c, 0)) {
        if (b.weight > 0) {
            v += b.weight * expectation(b.final_state, obs);
        }
    }
    return v;
}

Estimate reconstruct_exact(const Circuit &c, const CutPlan &plan, const PauliObservable &obs,
                           const ExecOptions &options) {
    check_observable(c, obs);
    const uint64_t n = plan.num_assignments();
    if (n > kMaxExactAssignments) {
        throw IntractableEnumeration(std::to_string(plan.cuts.size()) + " cuts give more than " +
                                     std::to_string(kMaxExactAssignments) + " subcircuit pairs");
    }
    // Validates the observable against the cut structure before any work.
    split_observable(obs, instantiate(c, plan, assignment_from_ordinal(plan, 0)).mapping);

    std::vector<double> terms(n);
    detail::parallel_for(n, options.jobs, [&](size_t k) {
        SubcircuitPair pair = instantiate(c, plan, assignment_from_ordinal(plan, k));
        auto [obs_a, obs_b] = split_observable(obs, pair.mapping);
        double va = half_value(pair.a, obs_a, pair.sign_rules, Side::A);
        double vb = half_value(pair.b, obs_b, pair.sign_rules, Side::B);
        terms[k] = pair.coefficient * va * vb;
    });
    double total = 0;
    for (double t : terms) {
        total += t;
    }
    return Estimate{total, 0.0, plan.gamma(), 0};
}

Estimate reconstruct_mc(const Circuit &c, const CutPlan &plan, const PauliObservable &obs, uint64_t samples,
                        uint64_t seed, const ExecOptions &options) {
    check_observable(c, obs);
    if (samples == 0) {
        throw ValidationError("at least one sample is required");
    }
    const uint64_t num_pairs = plan.num_assignments();
    split_observable(obs, instantiate(c, plan, assignment_from_ordinal(plan, 0)).mapping);
    const double gamma = plan.gamma();

    // Per-cut cumulative |c| tables for term selection.
    std::vector<std::vector<double>> cumulative;
    for (const auto &cut : plan.cuts) {
        std::vector<double> acc;
        double t = 0;
        for (const auto &term : cut.basis->terms) {
            t += std::abs(term.coefficient);
            acc.push_back(t);
        }
        cumulative.push_back(std::move(acc));
    }

    std::vector<std::unique_ptr<PreparedPair>> cache;
    if (num_pairs <= kMaxCachedPairs) {
        cache.resize(num_pairs);
        detail::parallel_for(num_pairs, options.jobs, [&](size_t k) {
            cache[k] = std::make_unique<PreparedPair>(instantiate(c, plan, assignment_from_ordinal(plan, k)), obs);
        });
    }

    const uint64_t num_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::pair<double, double>> partial(num_chunks);
    detail::parallel_for(num_chunks, options.jobs, [&](size_t chunk) {
        double sum = 0;
        double sum_sq = 0;
        const uint64_t end = std::min(samples, (chunk + 1) * kChunk);
        for (uint64_t s = chunk * kChunk; s < end; s++) {
            CounterRng rng(seed, s);
            TermAssignment t;
            uint64_t ordinal = 0;
            for (size_t k = 0; k < plan.cuts.size(); k++) {
                const auto &acc = cumulative[k];
                double u = rng.uniform() * acc.back();
                size_t j = std::upper_bound(acc.begin(), acc.end(), u) - acc.begin();
                j = std::min(j, acc.size() - 1);
                t.indices.push_back(j);
                ordinal = ordinal * acc.size() + j;
            }
            double score;
            if (!cache.empty()) {
                score = cache[ordinal]->score(rng);
            } else {
                PreparedPair pp(instantiate(c, plan, t), obs);
                score = pp.score(rng);
            }
            double x = gamma * score;
            sum += x;
            sum_sq += x * x;
        }
        partial[chunk] = {sum, sum_sq};
    });

    double sum = 0;
    double sum_sq = 0;
    for (const auto &[s, sq] : partial) {
        sum += s;
        sum_sq += sq;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    double stderr_ = 0;
    if (samples > 1) {
        double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
        stderr_ = std::sqrt(var / n);
    }
    return Estimate{mean, stderr_, gamma, samples};
}

double analytic_gamma(const CutPlan &plan, bool classical_comm) {
    double g = 1;
    for (const auto &cut : plan.cuts) {
        g *= std::sqrt(overhead_per_cut(cut.kind, classical_comm).value);
    }
    return g;
}

namespace {

BigInt power(unsigned base, unsigned exponent) {
    return boost::multiprecision::pow(BigInt(base), exponent);
}

// gamma^2 of cutting one MCX directly with the multi-controlled-Z
// decomposition of prior work (gamma = 6); not executed here.
constexpr unsigned kPriorWorkPerGate = 36;

}  // namespace

OverheadReport overhead_table(unsigned n, std::span<const std::string> strategies) {
    if (n == 0) {
        throw ValidationError("overhead table needs n >= 1");
    }
    std::vector<std::string> selected(strategies.begin(), strategies.end());
    if (selected.empty()) {
        selected.assign(std::begin(kOverheadStrategies), std::end(kOverheadStrategies));
    }

    const auto gate_no_cc = static_cast<unsigned>(overhead_per_cut(CutKind::GATE_CX, false).value);
    const auto gate_cc = static_cast<unsigned>(overhead_per_cut(CutKind::GATE_CX, true).value);
    const auto wire_no_cc = static_cast<unsigned>(overhead_per_cut(CutKind::WIRE, false).value);
    const auto wire_cc = static_cast<unsigned>(overhead_per_cut(CutKind::WIRE, true).value);

    OverheadReport report;
    for (const auto &name : selected) {
        OverheadRow row{name, 0, n, 0, 0, 0, 0, "cc"};
        if (name == "prior_work") {
            row.cut_gates = n;
            row.overhead_no_cc = power(kPriorWorkPerGate, n);
            row.overhead_cc = row.overhead_no_cc;
            row.analytic_flag = "all";
        } else if (name == "dec2a") {
            row.extra_qubits = 2;
            row.cut_gates = 2 * n;
            row.overhead_no_cc = power(gate_no_cc, 2 * n);
            row.overhead_cc = power(gate_cc, 2 * n);
        } else if (name == "dec2ad") {
            row.extra_qubits = 2;
            row.cut_gates = n;
            row.overhead_no_cc = power(gate_no_cc, n);
            row.overhead_cc = power(gate_cc, n);
        } else if (name == "dec1") {
            row.extra_qubits = 1;
            row.cut_wires = 2 * n;
            row.overhead_no_cc = power(wire_no_cc, 2 * n);
            row.overhead_cc = power(wire_cc, 2 * n);
        } else {
            throw ValidationError("unknown overhead strategy '" + name + "'");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string OverheadReport::to_csv() const {
    std::ostringstream out;
    out << "strategy,extra_qubits,n,overhead_no_cc,overhead_cc,analytic_flag\n";
    for (const auto &r : rows) {
        out << r.strategy << ',' << r.extra_qubits << ',' << r.n << ',' << r.overhead_no_cc << ',' << r.overhead_cc
            << ',' << r.analytic_flag << '\n';
    }
    return out.str();
}

}  // namespace qcut
