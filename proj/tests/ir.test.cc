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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "circuit_gen.h"
#include "qcut/errors.h"

using namespace qcut;

TEST(ir, parse_minimal_document) {
    Circuit c = parse_circuit(R"({"qubits":["q0","q1"],"gates":[{"gate":"cx","qubits":[0,1]}]})");
    ASSERT_EQ(c.num_qubits(), 2u);
    ASSERT_EQ(c.gates.size(), 1u);
    ASSERT_EQ(c.gates[0], Gate::cx(0, 1));
    ASSERT_FALSE(c.partition.has_value());
}

TEST(ir, parse_rejects_duplicate_qubit_in_gate) {
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"cx","qubits":[0,0]}]})"), ValidationError);
}

TEST(ir, parse_cccx_is_mcx3) {
    Circuit c = parse_circuit(R"({"qubits":["q0","q1","q2","q3"],"gates":[{"gate":"mcx","qubits":[0,1,2,3]}]})");
    const Gate &g = c.gates[0];
    ASSERT_EQ(g.kind, GateKind::MCX);
    ASSERT_EQ(g.qubits.size() - 1, 3u);
    ASSERT_EQ(g.qubits.back(), 3u);
}

TEST(ir, parse_errors) {
    ASSERT_THROW(parse_circuit("{"), SchemaError);
    ASSERT_THROW(parse_circuit("[]"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"gates":[]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"swap","qubits":[0]}]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"rz","qubits":[0]}]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"h","qubits":[0],"angle":1}]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"measure_z","qubits":[0]}]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"prep","qubits":[0],"state":"up"}]})"),
                 SchemaError);
    ASSERT_THROW(parse_circuit(R"({"format":"qcut-2","qubits":[],"gates":[]})"), SchemaError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a","b"],"gates":[],"partition":{"a":"C","b":"A"}})"), SchemaError);

    ASSERT_THROW(parse_circuit(R"({"qubits":["a","a"],"gates":[]})"), ValidationError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"x","qubits":[1]}]})"), ValidationError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a","b"],"gates":[{"gate":"cx","qubits":[0]}]})"), ValidationError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a"],"gates":[{"gate":"mcx","qubits":[0]}]})"), ValidationError);
    ASSERT_THROW(parse_circuit(R"({"qubits":["a","b"],"gates":[],"partition":{"a":"A"}})"), ValidationError);
    ASSERT_THROW(
        parse_circuit(
            R"({"qubits":["a"],"gates":[{"gate":"measure_z","qubits":[0],"cbit":0},{"gate":"measure_z","qubits":[0],"cbit":0}]})"),
        ValidationError);
    ASSERT_THROW(
        parse_circuit(
            R"({"qubits":["a"],"gates":[{"gate":"h","qubits":[0]},{"gate":"prep","qubits":[0],"state":"plus"}]})"),
        ValidationError);
}

TEST(ir, serialize_empty_circuit) {
    Circuit c;
    c.qubit_names = {"q0", "q1"};
    std::string text = serialize_circuit(c);
    ASSERT_NE(text.find("\"gates\": []"), std::string::npos);
    ASSERT_EQ(parse_circuit(text), c);
}

TEST(ir, serialize_fields) {
    Circuit c;
    c.partition.emplace();
    c.add_qubit("x", Side::A);
    c.add_qubit("y", Side::B);
    c.gates = {Gate::prep(1, PrepState::MINUS_I), Gate::rz(0, 0.25), Gate::measure_z(1, 3)};
    std::string text = serialize_circuit(c);
    ASSERT_NE(text.find("\"format\": \"qcut-1\""), std::string::npos);
    ASSERT_NE(text.find("\"state\": \"minus_i\""), std::string::npos);
    ASSERT_NE(text.find("\"angle\": 0.25"), std::string::npos);
    ASSERT_NE(text.find("\"cbit\": 3"), std::string::npos);
    ASSERT_NE(text.find("\"y\": \"B\""), std::string::npos);
}

TEST(ir, round_trip_random_circuits) {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 300; trial++) {
        Circuit c = qcut::gen::random_circuit(rng);
        ASSERT_NO_THROW(c.validate());
        Circuit back = parse_circuit(serialize_circuit(c));
        ASSERT_EQ(back, c) << serialize_circuit(c);
    }
}

TEST(ir, validate_partition_examples) {
    Circuit c = parse_circuit(
        R"({"qubits":["q0","q1"],"gates":[{"gate":"cx","qubits":[0,1]}],"partition":{"q0":"A","q1":"B"}})");
    auto x = validate_partition(c);
    ASSERT_EQ(x.gates, std::vector<size_t>{0});
    ASSERT_TRUE(x.wires.empty());

    c.partition = std::vector<Side>{Side::A, Side::A};
    ASSERT_TRUE(validate_partition(c).gates.empty());

    Circuit cccx = parse_circuit(R"({"qubits":["q0","q1","q2","q3"],"gates":[{"gate":"mcx","qubits":[0,1,2,3]}],
        "partition":{"q0":"A","q1":"A","q2":"B","q3":"B"}})");
    ASSERT_EQ(validate_partition(cccx).gates, std::vector<size_t>{0});

    c.partition.reset();
    ASSERT_THROW(validate_partition(c), PartitionMissing);
}

TEST(ir, wire_cut_moves_qubit) {
    Circuit c;
    c.partition.emplace();
    c.add_qubit("a", Side::A);
    c.add_qubit("b", Side::B);
    c.gates = {Gate::single(GateKind::H, 0), Gate::wire_cut(0), Gate::cx(0, 1), Gate::wire_cut(0), Gate::cx(0, 1)};
    auto x = validate_partition(c);
    ASSERT_EQ(x.gates, std::vector<size_t>{4});
    ASSERT_EQ(x.wires, (std::vector<WireCrossing>{{1, 0}, {3, 0}}));
    ASSERT_EQ(sides_before(c, 3), (std::vector<Side>{Side::B, Side::B}));
}

TEST(ir, validate_partition_matches_brute_force) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        Circuit c = qcut::gen::random_circuit(rng);
        if (!c.partition) {
            continue;
        }
        auto got = validate_partition(c);
        std::vector<size_t> expected;
        for (size_t i = 0; i < c.gates.size(); i++) {
            if (c.gates[i].kind == GateKind::WIRE_CUT) {
                continue;
            }
            std::vector<Side> sides = sides_before(c, i);
            std::set<Side> seen;
            for (auto q : c.gates[i].qubits) {
                seen.insert(sides[q]);
            }
            if (seen.size() == 2) {
                expected.push_back(i);
            }
        }
        ASSERT_EQ(got.gates, expected);
    }
}

TEST(ir, observable_parse) {
    auto o = PauliObservable::parse("Z0*X2*Y11");
    ASSERT_EQ(o.factors.size(), 3u);
    ASSERT_EQ(o.factors.at(11), Pauli::Y);
    ASSERT_EQ(o.str(), "Z0*X2*Y11");
    ASSERT_THROW(PauliObservable::parse(""), ValidationError);
    ASSERT_THROW(PauliObservable::parse("Z"), ValidationError);
    ASSERT_THROW(PauliObservable::parse("Q1"), ValidationError);
    ASSERT_THROW(PauliObservable::parse("Z1*Z1"), ValidationError);
    ASSERT_THROW(PauliObservable::parse("Z1*"), ValidationError);
    ASSERT_TRUE(PauliObservable::parse("I3").is_trivial());
}

TEST(ir, controlled_x_normalizes) {
    std::vector<QubitIndex> one{0};
    std::vector<QubitIndex> two{0, 1};
    std::vector<QubitIndex> three{0, 1, 2};
    ASSERT_EQ(Gate::controlled_x(one, 5).kind, GateKind::CX);
    ASSERT_EQ(Gate::controlled_x(two, 5).kind, GateKind::CCX);
    ASSERT_EQ(Gate::controlled_x(three, 5).kind, GateKind::MCX);
}

TEST(ir, fresh_name) {
    Circuit c;
    c.qubit_names = {"a", "a_2"};
    ASSERT_EQ(c.fresh_name("b"), "b");
    ASSERT_EQ(c.fresh_name("a"), "a_3");
}
