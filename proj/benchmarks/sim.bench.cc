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

#include "qcut/sim.h"

using namespace qcut;

static void sim_hadamard(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    StateVector s(n);
    Gate h = Gate::single(GateKind::H, static_cast<QubitIndex>(n / 2));
    for (auto _ : state) {
        s.apply(h);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(sim_hadamard)->Arg(10)->Arg(16)->Arg(20);

static void sim_cx(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    StateVector s(n);
    s.apply(Gate::single(GateKind::H, 0));
    Gate cx = Gate::cx(0, static_cast<QubitIndex>(n - 1));
    for (auto _ : state) {
        s.apply(cx);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(sim_cx)->Arg(10)->Arg(16)->Arg(20);

static void sim_mcx(benchmark::State &state) {
    const size_t n = 20;
    StateVector s(n);
    Gate g = Gate::mcx({0, 1, 2, 3, 4}, 19);
    for (auto _ : state) {
        s.apply(g);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(sim_mcx);

static void sim_expectation(benchmark::State &state) {
    StateVector s(18);
    for (QubitIndex q = 0; q < 18; q++) {
        s.apply(Gate::single(GateKind::H, q));
    }
    PauliObservable obs = PauliObservable::parse("X0*Y5*Z17");
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(s, obs));
    }
}
BENCHMARK(sim_expectation);

static void sim_shots(benchmark::State &state) {
    Circuit c;
    for (int q = 0; q < 8; q++) {
        c.qubit_names.push_back("q" + std::to_string(q));
        c.gates.push_back(Gate::single(GateKind::H, static_cast<QubitIndex>(q)));
    }
    c.gates.push_back(Gate::measure_z(0, 0));
    c.gates.push_back(Gate::cx(0, 7));
    ShotSampler sampler(c, StateVector(8));
    uint64_t k = 0;
    for (auto _ : state) {
        CounterRng rng(1, k++);
        benchmark::DoNotOptimize(sampler.sample(rng));
    }
}
BENCHMARK(sim_shots);
