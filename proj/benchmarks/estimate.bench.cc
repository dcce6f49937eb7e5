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

#include <benchmark/benchmark.h>

#include <cmath>

#include "qcut/cutter.h"
#include "qcut/estimate.h"
#include "qcut/mcx_decompose.h"

using namespace qcut;

namespace {

Circuit cut_cccx(Strategy s) {
    Circuit c;
    c.partition.emplace();
    for (int q = 0; q < 4; q++) {
        c.add_qubit("q" + std::to_string(q), q < 2 ? Side::A : Side::B);
    }
    for (QubitIndex q = 0; q < 4; q++) {
        c.gates.push_back(Gate::single(GateKind::H, q));
        c.gates.push_back(Gate::rz(q, 0.3 + q));
        c.gates.push_back(Gate::single(GateKind::H, q));
    }
    c.gates.push_back(Gate::mcx({0, 1, 2}, 3));
    return decompose_mcx(c, c.gates.size() - 1, s).circuit;
}

}  // namespace

static void decompose_cccx(benchmark::State &state) {
    Circuit c;
    c.partition.emplace();
    for (int q = 0; q < 4; q++) {
        c.add_qubit("q" + std::to_string(q), q < 2 ? Side::A : Side::B);
    }
    c.gates.push_back(Gate::mcx({0, 1, 2}, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_mcx(c, 0, Strategy::DEC2A));
    }
}
BENCHMARK(decompose_cccx);

static void reconstruct_exact_dec1(benchmark::State &state) {
    Circuit c = cut_cccx(Strategy::DEC1);
    CutPlan plan = plan_cuts(c);
    PauliObservable obs = PauliObservable::parse("Z3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_exact(c, plan, obs));
    }
}
BENCHMARK(reconstruct_exact_dec1);

static void reconstruct_mc_dec2ad(benchmark::State &state) {
    Circuit c = cut_cccx(Strategy::DEC2AD);
    CutPlan plan = plan_cuts(c);
    PauliObservable obs = PauliObservable::parse("Z3");
    const auto samples = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_mc(c, plan, obs, samples, 7));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples));
}
BENCHMARK(reconstruct_mc_dec2ad)->Arg(10000)->Arg(100000);

static void overhead_large_n(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(overhead_table(200));
    }
}
BENCHMARK(overhead_large_n);
