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

#include "qcut/qpd.h"

#include <cmath>

#include "json.hpp"

namespace qcut {

namespace {

Gate g1(GateKind kind) {
    return Gate::single(kind, 0);
}

LocalOp op(std::vector<Gate> gates) {
    return LocalOp{std::move(gates)};
}

const LocalOp kIdentity{};
const LocalOp kMeasure = op({Gate::measure_z(0, 0)});

double sum_abs(const std::vector<QpdTerm> &terms) {
    double g = 0;
    for (const auto &t : terms) {
        g += std::abs(t.coefficient);
    }
    return g;
}

QpdBasis make_cz_basis() {
    constexpr auto SIGN = OutcomeSignRule::SIGN_FROM_MEASUREMENT;
    const LocalOp s = op({g1(GateKind::S)});
    const LocalOp sdg = op({g1(GateKind::SDG)});
    const LocalOp z = op({g1(GateKind::S), g1(GateKind::S)});
    std::vector<QpdTerm> terms{
        {+0.5, s, s},
        {+0.5, sdg, sdg},
        {+0.5, kIdentity, kMeasure, SIGN, false},
        {-0.5, z, kMeasure, SIGN, false},
        {+0.5, kMeasure, kIdentity, SIGN, true},
        {-0.5, kMeasure, z, SIGN, true},
    };
    double gamma = sum_abs(terms);
    return QpdBasis{"cz", CutKind::GATE_CX, std::move(terms), gamma, false};
}

QpdBasis make_wire_basis() {
    constexpr auto SIGN = OutcomeSignRule::SIGN_FROM_MEASUREMENT;
    const LocalOp mx = op({g1(GateKind::H), Gate::measure_z(0, 0)});
    const LocalOp my = op({g1(GateKind::SDG), g1(GateKind::H), Gate::measure_z(0, 0)});
    auto prep = [](PrepState s) {
        return op({Gate::prep(0, s)});
    };
    std::vector<QpdTerm> terms{
        {+0.5, kIdentity, prep(PrepState::ZERO)},
        {+0.5, kIdentity, prep(PrepState::ONE)},
        {+0.5, mx, prep(PrepState::PLUS), SIGN, true},
        {-0.5, mx, prep(PrepState::MINUS), SIGN, true},
        {+0.5, my, prep(PrepState::PLUS_I), SIGN, true},
        {-0.5, my, prep(PrepState::MINUS_I), SIGN, true},
        {+0.5, kMeasure, prep(PrepState::ZERO), SIGN, true},
        {-0.5, kMeasure, prep(PrepState::ONE), SIGN, true},
    };
    double gamma = sum_abs(terms);
    return QpdBasis{"wire", CutKind::WIRE, std::move(terms), gamma, false};
}

nlohmann::ordered_json local_op_json(const LocalOp &op) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &g : op.gates) {
        std::string s(gate_name(g.kind));
        if (g.kind == GateKind::PREP) {
            s += "(" + std::string(prep_state_name(g.state)) + ")";
        }
        arr.push_back(s);
    }
    return arr;
}

}  // namespace

bool LocalOp::measures() const {
    for (const auto &g : gates) {
        if (g.kind == GateKind::MEASURE_Z) {
            return true;
        }
    }
    return false;
}

const QpdBasis &cz_cut_basis() {
    static const QpdBasis basis = make_cz_basis();
    return basis;
}

const QpdBasis &cx_cut_basis() {
    static const QpdBasis basis = [] {
        QpdBasis b = make_cz_basis();
        b.name = "cx";
        b.conjugate_second_with_h = true;
        return b;
    }();
    return basis;
}

const QpdBasis &wire_cut_basis() {
    static const QpdBasis basis = make_wire_basis();
    return basis;
}

PerCutOverhead overhead_per_cut(CutKind kind, bool classical_comm) {
    if (kind == CutKind::GATE_CX) {
        return classical_comm ? PerCutOverhead{4, true} : PerCutOverhead{9, false};
    }
    return PerCutOverhead{16, classical_comm};
}

std::string dump_basis_json(const QpdBasis &basis) {
    nlohmann::ordered_json doc;
    doc["basis"] = basis.name;
    doc["kind"] = basis.kind == CutKind::GATE_CX ? "gate_cx" : "wire";
    doc["gamma"] = basis.gamma;
    doc["conjugate_second_with_h"] = basis.conjugate_second_with_h;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto &t : basis.terms) {
        nlohmann::ordered_json jt;
        jt["coefficient"] = t.coefficient;
        jt["first"] = local_op_json(t.first);
        jt["second"] = local_op_json(t.second);
        if (t.sign_rule == OutcomeSignRule::SIGN_FROM_MEASUREMENT) {
            jt["sign_from_measurement"] = t.sign_on_first ? "first" : "second";
        } else {
            jt["sign_from_measurement"] = nullptr;
        }
        doc["terms"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

}  // namespace qcut
