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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcut/cutter.h"
#include "qcut/errors.h"
#include "qcut/estimate.h"
#include "qcut/ir.h"
#include "qcut/mcx_decompose.h"
#include "qcut/qpd.h"
#include "qcut/sim.h"

namespace qcut::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Failure that maps straight onto an exit code.
struct CommandError : std::runtime_error {
    CommandError(int code, const std::string &what) : std::runtime_error(what), code(code) {
    }
    int code;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CommandError(kFailed, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw CommandError(kFailed, "cannot write '" + path.string() + "'");
    }
}

Circuit load_circuit(const std::string &path) {
    return parse_circuit(read_file(path));
}

PauliObservable load_observable(const std::string &text) {
    try {
        return PauliObservable::parse(text);
    } catch (const ValidationError &e) {
        throw CommandError(kObservable, e.what());
    }
}

std::string bits_msb_first(uint64_t value, size_t width) {
    std::string s(width, '0');
    for (size_t k = 0; k < width; k++) {
        if ((value >> k) & 1) {
            s[width - 1 - k] = '1';
        }
    }
    return s;
}

std::string classbits_str(const std::vector<uint8_t> &bits) {
    std::string s;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        s += *it ? '1' : '0';
    }
    return s;
}

ojson circuit_json(const Circuit &c) {
    return ojson::parse(serialize_circuit(c));
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string in;
    std::string out;
    std::string strategy = "dec2ad";
    std::optional<size_t> gate;
    bool fuse_b = false;
};

int cmd_decompose(const DecomposeArgs &args, std::ostream &out) {
    Circuit c = load_circuit(args.in);
    if (!c.partition) {
        throw PartitionMissing();
    }
    auto strategy = strategy_from_name(args.strategy);
    if (!strategy) {
        throw CommandError(kValidation, "unknown strategy '" + args.strategy + "'");
    }

    std::vector<size_t> targets;
    if (args.gate) {
        targets.push_back(*args.gate);
    } else {
        PartitionCrossings crossings = validate_partition(c);
        for (size_t i : crossings.gates) {
            const Gate &g = c.gates[i];
            if (g.is_controlled_x() && g.qubits.size() >= 3) {
                targets.push_back(i);
            }
        }
        if (targets.empty()) {
            throw NoCutNeeded("no multi-controlled X gate crosses the partition");
        }
    }

    // Later gates first, so earlier indices stay valid.
    std::sort(targets.rbegin(), targets.rend());
    std::vector<AncillaRef> ancillas;
    const size_t original_qubits = c.num_qubits();
    DecompositionResult r{c, {}, 0, 0};
    for (size_t index : targets) {
        r = decompose_mcx(r.circuit, index, *strategy, DecomposeOptions{args.fuse_b});
        ancillas.insert(ancillas.end(), r.ancillas.begin(), r.ancillas.end());
    }
    std::sort(ancillas.begin(), ancillas.end(), [](const AncillaRef &x, const AncillaRef &y) {
        return x.qubit < y.qubit;
    });

    write_file(args.out, serialize_circuit(r.circuit));

    ojson report;
    report["strategy"] = strategy_name(*strategy);
    report["decomposed_gates"] = std::vector<size_t>(targets.rbegin(), targets.rend());
    report["crossing_gates"] = r.crossing_gate_count;
    report["crossing_wires"] = r.crossing_wire_count;
    report["qubits"] = r.circuit.num_qubits();
    report["extra_qubits"] = r.circuit.num_qubits() - original_qubits;
    ojson anc = ojson::array();
    for (const auto &a : ancillas) {
        ojson ja;
        ja["name"] = r.circuit.qubit_names[a.qubit];
        ja["side"] = std::string(1, side_char((*r.circuit.partition)[a.qubit]));
        ja["dirty"] = a.dirty;
        anc.push_back(std::move(ja));
    }
    report["ancillas"] = std::move(anc);
    report["cx_count_lowered"] = count_cx(lower_to_cx(r.circuit));
    out << report.dump() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- cut

struct CutArgs {
    std::string in;
    std::string out;
};

int cmd_cut(const CutArgs &args, std::ostream &out) {
    Circuit c = load_circuit(args.in);
    CutPlan plan = plan_cuts(c);
    const uint64_t n = plan.num_assignments();
    if (n > kMaxExactAssignments) {
        throw IntractableEnumeration(std::to_string(n) + " subcircuit pairs exceed the limit of " +
                                     std::to_string(kMaxExactAssignments));
    }
    std::filesystem::path dir(args.out);
    std::filesystem::create_directories(dir);

    ojson manifest;
    manifest["format"] = "qcut-manifest-1";
    manifest["gamma"] = plan.gamma();
    ojson cuts = ojson::array();
    for (const auto &cut : plan.cuts) {
        ojson jc;
        jc["kind"] = cut.kind == CutKind::GATE_CX ? "gate_cx" : "wire";
        jc["gate"] = cut.gate_index;
        jc["qubit"] = cut.qubit;
        jc["basis"] = cut.basis->name;
        cuts.push_back(std::move(jc));
    }
    manifest["cuts"] = std::move(cuts);

    ojson pairs = ojson::array();
    bool mapping_written = false;
    char name[32];
    enumerate_all(c, plan, [&](const TermAssignment &t, const SubcircuitPair &pair) {
        std::snprintf(name, sizeof(name), "pair_%05zu.json", pairs.size());
        ojson sign_rules = ojson::array();
        for (const auto &r : pair.sign_rules) {
            sign_rules.push_back({{"cbit", r.classbit}, {"side", std::string(1, side_char(r.side))}});
        }
        ojson file;
        file["format"] = "qcut-pair-1";
        file["assignment"] = t.indices;
        file["coefficient"] = pair.coefficient;
        file["sign_rules"] = sign_rules;
        file["a"] = circuit_json(pair.a);
        file["b"] = circuit_json(pair.b);
        write_file(dir / name, file.dump(2) + "\n");

        ojson entry;
        entry["file"] = name;
        entry["assignment"] = t.indices;
        entry["coefficient"] = pair.coefficient;
        entry["sign_rules"] = std::move(sign_rules);
        pairs.push_back(std::move(entry));

        if (!mapping_written) {
            ojson mapping = ojson::array();
            for (QubitIndex q = 0; q < c.num_qubits(); q++) {
                ojson segs = ojson::array();
                size_t first = q == 0 ? 0 : pair.mapping.final_segment[q - 1] + 1;
                for (size_t k = first; k <= pair.mapping.final_segment[q]; k++) {
                    const auto &s = pair.mapping.segments[k];
                    segs.push_back({{"side", std::string(1, side_char(s.side))}, {"local", s.local}});
                }
                mapping.push_back({{"qubit", c.qubit_names[q]}, {"segments", std::move(segs)}});
            }
            manifest["mapping"] = std::move(mapping);
            mapping_written = true;
        }
    });
    manifest["pairs"] = std::move(pairs);
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << n << " subcircuit pairs to " << dir.string() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- run

struct RunArgs {
    std::string in;
    std::string observable;
    uint64_t shots = 0;
    uint64_t seed = 0;
};

int cmd_run(const RunArgs &args, std::ostream &out) {
    Circuit c = load_circuit(args.in);
    ojson doc;
    doc["qubits"] = c.num_qubits();
    if (args.shots == 0) {
        ojson branches = ojson::array();
        for (const auto &b : run_exact_branches(c, 0)) {
            branches.push_back({{"classbits", classbits_str(b.classbits)}, {"weight", b.weight}});
        }
        doc["branches"] = std::move(branches);
        if (!args.observable.empty()) {
            PauliObservable obs = load_observable(args.observable);
            try {
                doc["expectation"] = uncut_expectation(c, obs);
            } catch (const QubitOutOfRange &e) {
                throw CommandError(kObservable, e.what());
            }
        }
    } else {
        std::map<std::string, uint64_t> counts;
        for (const auto &o : run_shots(c, StateVector(c.num_qubits()), args.shots, args.seed)) {
            std::string key = bits_msb_first(o.bitstring, c.num_qubits());
            if (!o.classbits.empty()) {
                key = classbits_str(o.classbits) + " " + key;
            }
            counts[key]++;
        }
        doc["shots"] = args.shots;
        doc["seed"] = args.seed;
        doc["counts"] = counts;
    }
    out << doc.dump() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
    std::string in;
    std::string observable;
    uint64_t samples = 0;
    uint64_t seed = 0;
    unsigned jobs = 1;
    bool classical_comm = false;
    bool no_cut = false;
};

int cmd_estimate(const EstimateArgs &args, std::ostream &out) {
    Circuit c = load_circuit(args.in);
    PauliObservable obs = load_observable(args.observable);
    ojson doc;
    try {
        if (args.no_cut) {
            doc["value"] = uncut_expectation(c, obs);
            doc["std_error"] = 0.0;
            doc["gamma"] = 1.0;
            doc["samples"] = 0;
        } else {
            CutPlan plan = plan_cuts(c);
            ExecOptions options{args.jobs};
            Estimate e = args.samples == 0 ? reconstruct_exact(c, plan, obs, options)
                                           : reconstruct_mc(c, plan, obs, args.samples, args.seed, options);
            doc["value"] = e.value;
            doc["std_error"] = e.standard_error;
            doc["gamma"] = args.classical_comm ? analytic_gamma(plan, true) : e.gamma;
            doc["samples"] = e.samples_used;
            if (args.classical_comm) {
                doc["warning"] =
                    "analytic: gamma assumes classical communication; the estimate was executed without it";
            }
        }
    } catch (const QubitOutOfRange &e) {
        throw CommandError(kObservable, e.what());
    }
    out << doc.dump() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- overhead / verify / qpd / demo

int cmd_overhead(unsigned n, const std::vector<std::string> &strategies, std::ostream &out) {
    out << overhead_table(n, strategies).to_csv();
    return kOk;
}

int cmd_verify(unsigned m1, unsigned m2, const std::string &strategy_text, std::ostream &out) {
    auto strategy = strategy_from_name(strategy_text);
    if (!strategy) {
        throw CommandError(kValidation, "unknown strategy '" + strategy_text + "'");
    }
    VerificationReport r = verify_decomposition(m1, m2, *strategy);
    const bool pass = r.max_deviation <= 1e-12 && r.ancilla_states_ok;
    char dev[32];
    std::snprintf(dev, sizeof(dev), "%.3e", r.max_deviation);
    out << (pass ? "PASS" : "FAIL") << " strategy=" << strategy_name(*strategy) << " m1=" << m1 << " m2=" << m2
        << " inputs=" << r.inputs_checked << " max_deviation=" << dev
        << " ancilla_states_ok=" << (r.ancilla_states_ok ? "true" : "false") << "\n";
    return pass ? kOk : kFailed;
}

int cmd_qpd(const std::string &basis, bool dump, std::ostream &out) {
    std::vector<const QpdBasis *> selected;
    for (const QpdBasis *b : {&cx_cut_basis(), &cz_cut_basis(), &wire_cut_basis()}) {
        if (basis.empty() || basis == b->name) {
            selected.push_back(b);
        }
    }
    if (selected.empty()) {
        throw CommandError(kValidation, "unknown basis '" + basis + "' (expected cx, cz or wire)");
    }
    for (const QpdBasis *b : selected) {
        if (dump) {
            out << dump_basis_json(*b);
        } else {
            out << b->name << ": " << b->terms.size() << " terms, gamma " << b->gamma << "\n";
        }
    }
    return kOk;
}

int cmd_demo(const std::string &name, const std::string &out_path, std::ostream &out) {
    auto text = demo_circuit(name);
    if (!text) {
        throw CommandError(kValidation, "unknown demo '" + name + "' (expected cccx, cccx-split or mcx6)");
    }
    if (out_path.empty()) {
        out << *text;
    } else {
        write_file(out_path, *text);
    }
    return kOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qcut: partition-aware MCX decomposition and circuit cutting"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto *decompose = app.add_subcommand("decompose", "Rewrite boundary-crossing MCX gates");
    decompose->add_option("--in", dec.in, "Input circuit JSON")->required();
    decompose->add_option("--out", dec.out, "Output circuit JSON")->required();
    decompose->add_option("--strategy", dec.strategy, "dec1|dec2a|dec2ad|dec2ad-clean-a|baseline")
        ->capture_default_str();
    decompose->add_option("--gate", dec.gate, "Only decompose the gate at this index");
    decompose->add_flag("--fuse-b", dec.fuse_b, "dec2ad without target-side controls: cut CX(a->t) directly");

    CutArgs cut_args;
    auto *cut = app.add_subcommand("cut", "Write every subcircuit pair and a manifest");
    cut->add_option("--in", cut_args.in, "Input circuit JSON")->required();
    cut->add_option("--out", cut_args.out, "Output directory")->required();

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Simulate a circuit without cutting");
    run_cmd->add_option("--in", run_args.in, "Input circuit JSON")->required();
    run_cmd->add_option("--observable", run_args.observable, "Pauli string, e.g. Z3 or Z0*X2");
    run_cmd->add_option("--shots", run_args.shots, "0 for exact branch enumeration")->capture_default_str();
    run_cmd->add_option("--seed", run_args.seed)->capture_default_str();

    EstimateArgs est;
    auto *estimate = app.add_subcommand("estimate", "Reconstruct an expectation value from cut subcircuits");
    estimate->add_option("--in", est.in, "Input circuit JSON")->required();
    estimate->add_option("--observable", est.observable, "Pauli string, e.g. Z3 or Z0*Z2")->required();
    estimate->add_option("--samples", est.samples, "0 for exact reconstruction")->capture_default_str();
    estimate->add_option("--seed", est.seed)->capture_default_str();
    estimate->add_option("--jobs", est.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
    estimate->add_flag("--classical-comm", est.classical_comm, "Report gamma with classical communication");
    estimate->add_flag("--no-cut", est.no_cut, "Simulate the uncut circuit instead");

    unsigned overhead_n = 1;
    std::vector<std::string> overhead_strategies;
    auto *overhead = app.add_subcommand("overhead", "Sampling-overhead table as CSV");
    overhead->add_option("--n", overhead_n, "Number of MCX gates cut")->capture_default_str()->check(
        CLI::PositiveNumber);
    overhead->add_option("--strategies", overhead_strategies, "Subset of prior_work,dec2a,dec2ad,dec1")
        ->delimiter(',');

    unsigned m1 = 1;
    unsigned m2 = 0;
    std::string verify_strategy = "dec2ad";
    auto *verify = app.add_subcommand("verify", "Exhaustively check a decomposition against the native MCX");
    verify->add_option("--m1", m1, "Controls on the control-only side")->capture_default_str();
    verify->add_option("--m2", m2, "Controls beside the target")->capture_default_str();
    verify->add_option("--strategy", verify_strategy)->capture_default_str();

    std::string basis;
    bool dump = false;
    auto *qpd = app.add_subcommand("qpd", "Show quasi-probability term tables");
    qpd->add_option("--basis", basis, "cx, cz or wire (default: all)");
    qpd->add_flag("--dump", dump, "Print full term tables as JSON");

    std::string demo_name;
    std::string demo_out;
    auto *demo = app.add_subcommand("demo", "Print a bundled demo circuit");
    demo->add_option("--name", demo_name, "cccx, cccx-split or mcx6")->required();
    demo->add_option("--out", demo_out, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*decompose) {
            return cmd_decompose(dec, out);
        }
        if (*cut) {
            return cmd_cut(cut_args, out);
        }
        if (*run_cmd) {
            return cmd_run(run_args, out);
        }
        if (*estimate) {
            return cmd_estimate(est, out);
        }
        if (*overhead) {
            return cmd_overhead(overhead_n, overhead_strategies, out);
        }
        if (*verify) {
            return cmd_verify(m1, m2, verify_strategy, out);
        }
        if (*qpd) {
            return cmd_qpd(basis, dump, out);
        }
        if (*demo) {
            return cmd_demo(demo_name, demo_out, out);
        }
    } catch (const CommandError &e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const UnsupportedSplit &e) {
        err << "error: " << e.what() << "\n";
        return kUnsupportedSplit;
    } catch (const ObservableSpansCut &e) {
        err << "error: " << e.what() << "\n";
        return kObservable;
    } catch (const SizeLimitExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const TooManyBranches &e) {
        err << "error: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const IntractableEnumeration &e) {
        err << "error: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kFailed;
}

}  // namespace qcut::cli
