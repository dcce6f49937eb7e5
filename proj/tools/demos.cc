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

#include <string>

#include "cli.h"

namespace qcut::cli {

namespace {

constexpr const char *kCccx = R"JSON({
  "format": "qcut-1",
  "qubits": ["q0", "q1", "q2", "q3"],
  "gates": [
    {"gate": "mcx", "qubits": [0, 1, 2, 3]}
  ]
}
)JSON";

// Controls q0 q1 | q2 and target q3, split between q1 and q2. The X gates
// prepare |0111> (q0 = q1 = q2 = 1), so the MCX flips q3.
constexpr const char *kCccxSplit = R"JSON({
  "format": "qcut-1",
  "qubits": ["q0", "q1", "q2", "q3"],
  "gates": [
    {"gate": "x", "qubits": [0]},
    {"gate": "x", "qubits": [1]},
    {"gate": "x", "qubits": [2]},
    {"gate": "mcx", "qubits": [0, 1, 2, 3]}
  ],
  "partition": {"q0": "A", "q1": "A", "q2": "B", "q3": "B"}
}
)JSON";

constexpr const char *kMcx6 = R"JSON({
  "format": "qcut-1",
  "qubits": ["q0", "q1", "q2", "q3", "q4", "q5"],
  "gates": [
    {"gate": "h", "qubits": [0]},
    {"gate": "h", "qubits": [1]},
    {"gate": "h", "qubits": [2]},
    {"gate": "h", "qubits": [3]},
    {"gate": "h", "qubits": [4]},
    {"gate": "mcx", "qubits": [0, 1, 2, 3, 4, 5]}
  ],
  "partition": {"q0": "A", "q1": "A", "q2": "A", "q3": "B", "q4": "B", "q5": "B"}
}
)JSON";

}  // namespace

std::optional<std::string> demo_circuit(std::string_view name) {
    if (name == "cccx") {
        return kCccx;
    }
    if (name == "cccx-split") {
        return kCccxSplit;
    }
    if (name == "mcx6") {
        return kMcx6;
    }
    return std::nullopt;
}

}  // namespace qcut::cli
