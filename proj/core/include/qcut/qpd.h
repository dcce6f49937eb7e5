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

#ifndef QCUT_QPD_H
#define QCUT_QPD_H

#include <string>
#include <vector>

#include "qcut/ir.h"

namespace qcut {

enum class CutKind : uint8_t { GATE_CX, WIRE };

/// Local operation on one endpoint of a cut. Gates address placeholder qubit
/// 0; a MEASURE_Z carries placeholder classical bit 0.
struct LocalOp {
    std::vector<Gate> gates;
    bool measures() const;
};

enum class OutcomeSignRule : uint8_t {
    NONE,
    /// A MEASURE_Z outcome of 1 negates the term's contribution.
    SIGN_FROM_MEASUREMENT,
};

/// One term c * (F_first (x) F_second). For gate cuts "first" is the control
/// endpoint and "second" the target endpoint; for wire cuts "first" is the
/// upstream segment and "second" the downstream segment.
struct QpdTerm {
    double coefficient;
    LocalOp first;
    LocalOp second;
    OutcomeSignRule sign_rule = OutcomeSignRule::NONE;
    /// Which endpoint holds the signed measurement (when sign_rule is set).
    bool sign_on_first = true;
};

struct QpdBasis {
    std::string name;
    CutKind kind;
    std::vector<QpdTerm> terms;
    /// Sum of |coefficient| over terms.
    double gamma;
    /// Wrap the second endpoint's operations in H (turns the CZ-form terms
    /// into a CX decomposition).
    bool conjugate_second_with_h = false;
};

/// Six-term decomposition of the CZ channel:
///   1/2 S(x)S + 1/2 Sdg(x)Sdg + 1/2 I(x)M - 1/2 Z(x)M + 1/2 M(x)I - 1/2 M(x)Z
/// where M is a Z measurement whose outcome 1 negates the sample.
const QpdBasis &cz_cut_basis();
/// The CZ-form terms with H conjugation on the target endpoint.
const QpdBasis &cx_cut_basis();
/// Eight-term measure-and-prepare decomposition of the identity channel:
///   rho = 1/2 [ Tr(rho)(|0><0| + |1><1|) + sum_{P in X,Y,Z} Tr(P rho)(|p+><p+| - |p-><p-|) ].
const QpdBasis &wire_cut_basis();

struct PerCutOverhead {
    /// gamma^2 for one cut.
    double value;
    /// True when the value is accounted for but the corresponding protocol is
    /// not executed by this toolkit.
    bool analytic_only;
};

/// gamma^2 per cut: CX cuts 9 without and 4 with classical communication;
/// wire cuts 16 either way (no joint-cut reduction).
PerCutOverhead overhead_per_cut(CutKind kind, bool classical_comm);

/// JSON dump of a term table.
std::string dump_basis_json(const QpdBasis &basis);

}  // namespace qcut

#endif
