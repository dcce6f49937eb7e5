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

#ifndef QCUT_ESTIMATE_H
#define QCUT_ESTIMATE_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcut/cutter.h"
#include "qcut/ir.h"

namespace qcut {

struct ExecOptions {
    /// Worker threads. Results do not depend on this value.
    unsigned jobs = 1;
};

struct Estimate {
    double value;
    /// Zero for exact reconstruction.
    double standard_error;
    /// Product of per-cut gamma of the executed decompositions.
    double gamma;
    uint64_t samples_used;
};

/// Above this many term assignments exact reconstruction refuses to run.
inline constexpr uint64_t kMaxExactAssignments = uint64_t{1} << 16;

/// Exact expectation of `obs` on the circuit run from |0...0>, ignoring the
/// partition. Measurements inside the circuit are averaged over exactly.
double uncut_expectation(const Circuit &c, const PauliObservable &obs);

/// Sum over all term assignments and measurement branches of
/// coefficient * weight * sign * <obs_A> * <obs_B>.
/// Throws ObservableSpansCut, IntractableEnumeration.
Estimate reconstruct_exact(const Circuit &c, const CutPlan &plan, const PauliObservable &obs,
                           const ExecOptions &options = {});

/// Quasi-probability Monte Carlo: sample s draws its term assignment with
/// probability prod |c_i| / gamma_i from CounterRng(seed, s), runs one shot of
/// each half and scores gamma * sign(coefficient) * outcome signs * the
/// observable's eigenvalue. Identical output for every `options.jobs`.
Estimate reconstruct_mc(const Circuit &c, const CutPlan &plan, const PauliObservable &obs, uint64_t samples,
                        uint64_t seed, const ExecOptions &options = {});

/// prod sqrt(overhead_per_cut) over the plan's cuts.
double analytic_gamma(const CutPlan &plan, bool classical_comm);

using BigInt = boost::multiprecision::cpp_int;

struct OverheadRow {
    std::string strategy;
    unsigned extra_qubits;
    unsigned n;
    size_t cut_gates;
    size_t cut_wires;
    BigInt overhead_no_cc;
    BigInt overhead_cc;
    /// "all": nothing here is executed by the toolkit; "cc": only the
    /// classical-communication column is analytic.
    std::string analytic_flag;
};

struct OverheadReport {
    std::vector<OverheadRow> rows;

    /// Header: strategy,extra_qubits,n,overhead_no_cc,overhead_cc,analytic_flag
    std::string to_csv() const;
};

inline constexpr std::string_view kOverheadStrategies[] = {"prior_work", "dec2a", "dec2ad", "dec1"};

/// Sampling overhead of cutting n boundary-crossing MCX gates under each
/// strategy. An empty selection means all of kOverheadStrategies.
/// Throws ValidationError for n == 0 or unknown strategy names.
OverheadReport overhead_table(unsigned n, std::span<const std::string> strategies = {});

}  // namespace qcut

#endif
