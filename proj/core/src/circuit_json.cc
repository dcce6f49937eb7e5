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

#include <algorithm>
#include <string>

#include "json.hpp"
#include "qcut/errors.h"
#include "qcut/ir.h"

namespace qcut {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "qcut-1";

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(std::string("missing field '") + key + "'");
    }
    return *it;
}

Gate parse_gate(const json &j, size_t index) {
    auto where = " in gate " + std::to_string(index);
    if (!j.is_object()) {
        throw SchemaError("gate entry is not an object" + where);
    }
    const json &name = require(j, "gate");
    if (!name.is_string()) {
        throw SchemaError("'gate' must be a string" + where);
    }
    auto kind = gate_kind_from_name(name.get<std::string>());
    if (!kind) {
        throw SchemaError("unknown gate kind '" + name.get<std::string>() + "'" + where);
    }
    Gate g;
    g.kind = *kind;

    const json &qubits = require(j, "qubits");
    if (!qubits.is_array()) {
        throw SchemaError("'qubits' must be an array" + where);
    }
    for (const auto &q : qubits) {
        if (!q.is_number_integer() || q.get<int64_t>() < 0) {
            throw SchemaError("qubit references must be non-negative integers" + where);
        }
        g.qubits.push_back(static_cast<QubitIndex>(q.get<int64_t>()));
    }

    for (const auto &[key, value] : j.items()) {
        if (key == "gate" || key == "qubits") {
            continue;
        }
        if (key == "angle" && g.kind == GateKind::RZ) {
            if (!value.is_number()) {
                throw SchemaError("'angle' must be a number" + where);
            }
            g.angle = value.get<double>();
        } else if (key == "cbit" && g.kind == GateKind::MEASURE_Z) {
            if (!value.is_number_integer() || value.get<int64_t>() < 0) {
                throw SchemaError("'cbit' must be a non-negative integer" + where);
            }
            g.cbit = static_cast<uint32_t>(value.get<int64_t>());
        } else if (key == "state" && g.kind == GateKind::PREP) {
            auto s = value.is_string() ? prep_state_from_name(value.get<std::string>()) : std::nullopt;
            if (!s) {
                throw SchemaError("unknown prep state" + where);
            }
            g.state = *s;
        } else {
            throw SchemaError("unexpected field '" + key + "'" + where);
        }
    }
    if (g.kind == GateKind::RZ && !j.contains("angle")) {
        throw SchemaError("rz requires 'angle'" + where);
    }
    if (g.kind == GateKind::MEASURE_Z && !j.contains("cbit")) {
        throw SchemaError("measure_z requires 'cbit'" + where);
    }
    if (g.kind == GateKind::PREP && !j.contains("state")) {
        throw SchemaError("prep requires 'state'" + where);
    }
    return g;
}

}  // namespace

Circuit parse_circuit(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("top level must be an object");
    }
    if (auto it = doc.find("format"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != kFormat) {
            throw SchemaError("unsupported format, expected '" + std::string(kFormat) + "'");
        }
    }

    Circuit c;
    const json &qubits = require(doc, "qubits");
    if (!qubits.is_array()) {
        throw SchemaError("'qubits' must be an array");
    }
    for (const auto &q : qubits) {
        if (!q.is_string()) {
            throw SchemaError("qubit names must be strings");
        }
        c.qubit_names.push_back(q.get<std::string>());
    }

    const json &gates = require(doc, "gates");
    if (!gates.is_array()) {
        throw SchemaError("'gates' must be an array");
    }
    for (size_t i = 0; i < gates.size(); i++) {
        c.gates.push_back(parse_gate(gates[i], i));
    }

    if (auto it = doc.find("partition"); it != doc.end()) {
        if (!it->is_object()) {
            throw SchemaError("'partition' must be an object");
        }
        std::vector<std::optional<Side>> sides(c.num_qubits());
        for (const auto &[name, label] : it->items()) {
            auto pos = std::find(c.qubit_names.begin(), c.qubit_names.end(), name);
            if (pos == c.qubit_names.end()) {
                throw ValidationError("partition names unknown qubit '" + name + "'");
            }
            if (!label.is_string() || (label != "A" && label != "B")) {
                throw SchemaError("partition labels must be \"A\" or \"B\"");
            }
            sides[pos - c.qubit_names.begin()] = label == "A" ? Side::A : Side::B;
        }
        c.partition.emplace();
        for (size_t q = 0; q < sides.size(); q++) {
            if (!sides[q]) {
                throw ValidationError("partition does not cover qubit '" + c.qubit_names[q] + "'");
            }
            c.partition->push_back(*sides[q]);
        }
    }

    c.validate();
    return c;
}

std::string serialize_circuit(const Circuit &c) {
    using ojson = nlohmann::ordered_json;
    ojson doc;
    doc["format"] = kFormat;
    doc["qubits"] = c.qubit_names;
    doc["gates"] = ojson::array();
    for (const auto &g : c.gates) {
        ojson jg;
        jg["gate"] = gate_name(g.kind);
        jg["qubits"] = g.qubits;
        if (g.kind == GateKind::RZ) {
            jg["angle"] = g.angle;
        }
        if (g.kind == GateKind::MEASURE_Z && g.cbit) {
            jg["cbit"] = *g.cbit;
        }
        if (g.kind == GateKind::PREP) {
            jg["state"] = prep_state_name(g.state);
        }
        doc["gates"].push_back(std::move(jg));
    }
    if (c.partition) {
        ojson part = ojson::object();
        for (size_t q = 0; q < c.num_qubits(); q++) {
            part[c.qubit_names[q]] = std::string(1, side_char((*c.partition)[q]));
        }
        doc["partition"] = std::move(part);
    }
    return doc.dump(2) + "\n";
}

}  // namespace qcut
