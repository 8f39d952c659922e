// Copyright 2026 The mubgf Authors
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

#include "mub/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mub/pauli_engine.h"
#include "mub/solver.h"
#include "mub/table_document.h"

namespace mub {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::array<const char *, 8> kSeedFlags = {"a11", "b11", "a12", "b12", "a21", "b21", "a22", "b22"};
constexpr std::array<const char *, 5> kFixedFlags = {"a11", "b11", "a21", "b21", "b12"};

FieldElement parse_flag(const FieldCtx &field, const std::string &flag, const std::string &text) {
    try {
        return field.parse_element(text);
    } catch (const std::invalid_argument &e) {
        throw InputError("--" + flag + ": " + e.what());
    }
}

FieldCtx parse_field(const std::string &poly) {
    FieldCtx field = FieldCtx::gf4();
    try {
        field = FieldCtx::parse(poly);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("--poly: ") + e.what());
    }
    if (field.degree() != 2) {
        throw InputError("--poly: two-qubit tables need a degree-2 field, got " + poly);
    }
    return field;
}

FieldElement &fixed_slot(FixedFive &f, const std::string &name) {
    if (name == "a11") return f.a11;
    if (name == "b11") return f.b11;
    if (name == "a21") return f.a21;
    if (name == "b21") return f.b21;
    return f.b12;
}

FieldElement &seed_slot(SeedParams &s, const std::string &name) {
    int r = name[1] - '1';
    int c = name[2] - '1';
    return name[0] == 'a' ? s.a[r][c] : s.b[r][c];
}

std::string solution_label(size_t index) {
    std::string label;
    index++;
    while (index > 0) {
        index--;
        label.insert(label.begin(), static_cast<char>('A' + index % 26));
        index /= 26;
    }
    return label;
}

std::string fixed_to_string(const FixedFive &f) {
    return "a11=" + f.a11.to_string() + " b11=" + f.b11.to_string() + " a21=" + f.a21.to_string() +
           " b21=" + f.b21.to_string() + " b12=" + f.b12.to_string();
}

json fixed_to_json(const FixedFive &f) {
    json j;
    j["a11"] = f.a11.to_string();
    j["b11"] = f.b11.to_string();
    j["a21"] = f.a21.to_string();
    j["b21"] = f.b21.to_string();
    j["b12"] = f.b12.to_string();
    return j;
}

bool is_standard(const MubTable &table) {
    static const MubTable standard = canonicalize(standard_table());
    return canonicalize(table) == standard;
}

void render_table(std::ostream &out, const MubTable &table, const std::string &indent) {
    for (int r = 1; r <= 5; r++) {
        std::string points;
        std::string ops;
        for (int c = 1; c <= 3; c++) {
            if (c > 1) {
                points += "; ";
                ops += "; ";
            }
            points += table.at(r, c).to_string();
            ops += point_to_operator(table.at(r, c)).name();
        }
        out << indent << r << ". " << std::left << std::setw(27) << points << ops;
        if (!table.row_commutes(r)) {
            out << "   [does not commute]";
        }
        out << "\n";
    }
}

void render_seeds(std::ostream &out, const SeedParams &s) {
    out << "seeds:";
    for (const char *name : kSeedFlags) {
        SeedParams copy = s;
        out << " " << name << "=" << seed_slot(copy, name).to_string();
    }
    out << "\n";
}

std::string validity(const MubTable &table) {
    if (table.valid()) {
        return is_standard(table) ? "valid, standard set" : "valid";
    }
    std::string why;
    if (!table.rows_commute()) {
        why = "rows do not commute";
    }
    if (!table.partition()) {
        why += std::string(why.empty() ? "" : ", ") + "not a partition";
    }
    return "invalid: " + why;
}

void render_solutions(std::ostream &out, const FixedFive &fixed, const std::vector<Solution> &solutions) {
    size_t valid = std::count_if(solutions.begin(), solutions.end(), [](const Solution &s) { return s.valid(); });
    out << "fixed: " << fixed_to_string(fixed) << "\n";
    out << "solutions: " << solutions.size() << " (" << valid << " valid)\n";
    for (size_t i = 0; i < solutions.size(); i++) {
        const Solution &s = solutions[i];
        out << "\nSolution " << solution_label(i) << ": a12=" << s.triple.a12.to_string()
            << " a22=" << s.triple.a22.to_string() << " b22=" << s.triple.b22.to_string() << "  ["
            << validity(s.table) << "]\n";
        render_table(out, s.table, "  ");
    }
}

json solutions_to_json(const FieldCtx &field, const FixedFive &fixed, const std::vector<Solution> &solutions) {
    json j;
    j["field"] = field.to_string();
    j["fixed"] = fixed_to_json(fixed);
    json list = json::array();
    size_t valid = 0;
    for (size_t i = 0; i < solutions.size(); i++) {
        const Solution &s = solutions[i];
        valid += s.valid();
        json js;
        js["label"] = solution_label(i);
        js["a12"] = s.triple.a12.to_string();
        js["a22"] = s.triple.a22.to_string();
        js["b22"] = s.triple.b22.to_string();
        js["valid"] = s.valid();
        js["standard_set"] = s.valid() && is_standard(s.table);
        js["table"] = to_json(make_document(s.table));
        list.push_back(js);
    }
    j["solutions"] = list;
    j["valid_count"] = valid;
    return j;
}

json basis_to_json(const Basis &basis, bool numeric) {
    json vectors = json::array();
    for (const auto &v : basis) {
        json jv;
        json amps = json::array();
        for (const auto &a : v.amps) {
            amps.push_back(a.to_string());
        }
        jv["amps"] = amps;
        jv["norm2"] = v.norm2;
        if (numeric) {
            json values = json::array();
            for (const auto &z : v.to_complex()) {
                values.push_back({z.real(), z.imag()});
            }
            jv["numeric"] = values;
        }
        vectors.push_back(jv);
    }
    return vectors;
}

std::string numeric_string(const BasisVector &v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << "[";
    auto values = v.to_complex();
    for (size_t j = 0; j < values.size(); j++) {
        out << (j ? ", " : "") << values[j].real() << (values[j].imag() < 0 ? "-" : "+")
            << std::abs(values[j].imag()) << "i";
    }
    out << "]";
    return out.str();
}

void render_report(std::ostream &out, const MubReport &report) {
    auto yes = [](bool b) { return b ? "ok" : "FAIL"; };
    out << "row commutation: " << yes(report.rows_commute()) << "\n";
    out << "commutation routes agree: " << yes(report.routes_agree) << "\n";
    out << "partition: " << yes(report.partition) << "\n";
    out << "orthonormal bases: " << yes(report.all_orthonormal()) << "\n";
    size_t quarter = 0;
    for (const auto &o : report.overlaps) {
        for (const auto &row : o.values) {
            quarter += std::count(row.begin(), row.end(), Rational(1, 4));
        }
    }
    out << "unbiased: " << yes(report.unbiased) << " (" << quarter << "/160 overlaps equal 1/4)\n";
    out << "signature: (" << report.separable << "," << report.entangled << ")";
    if (report.anomalous) {
        out << " plus " << report.anomalous << " mixed";
    }
    out << "\n";
    for (int r = 0; r < 5; r++) {
        if (report.separability[r]) {
            out << "  basis " << r + 1 << ": " << to_string(*report.separability[r]) << "\n";
        }
    }
    out << "verdict: " << (report.valid ? "VALID" : "INVALID") << "\n";
    auto failures = report.failures();
    if (!failures.empty()) {
        out << "failures:\n";
        for (const auto &f : failures) {
            out << "  - " << f << "\n";
        }
    }
}

// Options shared by table/bases: either eight seed flags or --input.
struct TableSource {
    std::map<std::string, std::string> seeds;
    std::string input;

    void attach(CLI::App *cmd) {
        for (const char *name : kSeedFlags) {
            cmd->add_option(std::string("--") + name, seeds[name],
                            std::string("seed symbol ") + name + " (letter, then row, then column)");
        }
        cmd->add_option("--input", input, "read a table document instead of seed flags");
    }

    MubTable load(CLI::App *cmd, const FieldCtx &field) const {
        bool any_seed = false;
        for (const char *name : kSeedFlags) {
            any_seed = any_seed || cmd->count(std::string("--") + name) > 0;
        }
        if (!input.empty()) {
            if (any_seed) {
                throw InputError("give either --input or seed flags, not both");
            }
            try {
                return read_document(input).table();
            } catch (const DocumentError &e) {
                throw InputError(e.what());
            }
        }
        SeedParams s;
        for (const char *name : kSeedFlags) {
            if (cmd->count(std::string("--") + name) == 0) {
                throw InputError(std::string("missing seed flag --") + name);
            }
            seed_slot(s, name) = parse_flag(field, name, seeds.at(name));
        }
        return build_table(s);
    }
};

std::function<bool(const FixedFive &)> parse_fixed_filter(const std::string &spec, const FieldCtx &field) {
    std::map<std::string, FieldElement> wanted;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        std::string name = item.substr(0, eq);
        if (eq == std::string::npos ||
            std::find(kFixedFlags.begin(), kFixedFlags.end(), name) == kFixedFlags.end()) {
            throw InputError("--fixed: expected name=value with name in a11,b11,a21,b21,b12, got '" + item + "'");
        }
        wanted[name] = parse_flag(field, name, item.substr(eq + 1));
    }
    return [wanted](const FixedFive &f) {
        FixedFive copy = f;
        for (const auto &[name, value] : wanted) {
            if (fixed_slot(copy, name) != value) {
                return false;
            }
        }
        return true;
    };
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mutually unbiased bases for two qubits from seed points over GF(4)", "mubgf"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string poly = "x^2+x+1";
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--poly", poly, "irreducible polynomial of the field")->capture_default_str();

    std::map<std::string, std::string> fixed_flags;
    auto *solve = app.add_subcommand(
        "solve", "solve for a12, a22, b22 given the five free symbols (aRC: row R, column C)");
    for (const char *name : kFixedFlags) {
        solve->add_option(std::string("--") + name, fixed_flags[name], std::string("free symbol ") + name)
            ->required();
    }

    TableSource table_source;
    auto *table_cmd = app.add_subcommand("table", "complete and print the 5x3 table");
    table_source.attach(table_cmd);

    TableSource bases_source;
    bool numeric = false;
    auto *bases_cmd = app.add_subcommand("bases", "print the joint eigenbasis of every row");
    bases_source.attach(bases_cmd);
    bases_cmd->add_flag("--numeric", numeric, "also print floating-point amplitudes");

    std::string verify_path;
    auto *verify = app.add_subcommand("verify", "verify a table document");
    verify->add_option("document", verify_path, "table document (JSON)")->required();

    std::string scan_fixed;
    std::string dump_dir;
    auto *scan = app.add_subcommand("scan", "solve every choice of the five free symbols");
    scan->add_option("--fixed", scan_fixed, "restrict the sweep, e.g. a11=u2,b11=u");
    scan->add_option("--dump", dump_dir, "write every distinct valid table to this directory");

    auto *independence = app.add_subcommand("independence", "audit the 15 commutation relations");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        FieldCtx field = parse_field(poly);

        if (*solve) {
            FixedFive fixed;
            for (const char *name : kFixedFlags) {
                fixed_slot(fixed, name) = parse_flag(field, name, fixed_flags[name]);
            }
            auto solutions = solve_system(fixed);
            if (as_json) {
                out << solutions_to_json(field, fixed, solutions).dump(2) << "\n";
            } else {
                render_solutions(out, fixed, solutions);
            }
            bool any_valid = std::any_of(solutions.begin(), solutions.end(), [](const Solution &s) {
                return s.valid();
            });
            return any_valid ? kExitOk : kExitNoValidSolution;
        }

        if (*table_cmd) {
            MubTable table = table_source.load(table_cmd, field);
            if (as_json) {
                out << serialize(make_document(table));
            } else {
                out << "field: " << field.to_string() << "\n";
                if (table.seeds()) {
                    render_seeds(out, *table.seeds());
                }
                render_table(out, table, "");
                out << "status: " << validity(table) << "\n";
            }
            return kExitOk;
        }

        if (*bases_cmd) {
            MubTable table = bases_source.load(bases_cmd, field);
            bool complete = true;
            json jbases = json::array();
            if (!as_json) {
                render_table(out, table, "");
            }
            for (int r = 1; r <= 5; r++) {
                json jrow;
                jrow["row"] = r;
                try {
                    Basis basis = joint_eigenbasis(table.rows()[r - 1]);
                    Separability kind = classify_basis(basis);
                    jrow["separability"] = to_string(kind);
                    jrow["vectors"] = basis_to_json(basis, numeric);
                    if (!as_json) {
                        out << "\nbasis " << r << " (" << to_string(kind) << "):\n";
                        for (const auto &v : basis) {
                            out << "  " << v.to_string();
                            if (numeric) {
                                out << "  " << numeric_string(v);
                            }
                            out << "\n";
                        }
                    }
                } catch (const std::invalid_argument &e) {
                    complete = false;
                    jrow["error"] = e.what();
                    if (!as_json) {
                        out << "\nbasis " << r << ": unavailable: " << e.what() << "\n";
                    }
                }
                jbases.push_back(jrow);
            }
            if (as_json) {
                json j = to_json(make_document(table));
                j["bases"] = jbases;
                out << j.dump(2) << "\n";
            }
            return complete ? kExitOk : kExitVerificationFailed;
        }

        if (*verify) {
            TableDocument doc;
            try {
                doc = read_document(verify_path);
            } catch (const DocumentError &e) {
                throw InputError(e.what());
            }
            MubTable table = doc.table();
            MubReport report = verify_mub(table);
            if (as_json) {
                out << serialize(make_document(table, report));
            } else {
                render_table(out, table, "");
                render_report(out, report);
            }
            return report.valid ? kExitOk : kExitVerificationFailed;
        }

        if (*scan) {
            std::function<bool(const FixedFive &)> filter;
            if (!scan_fixed.empty()) {
                filter = parse_fixed_filter(scan_fixed, field);
            }
            if (!dump_dir.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(dump_dir, ec);
                if (ec || !std::filesystem::is_directory(dump_dir)) {
                    throw InputError("--dump: cannot create directory " + dump_dir);
                }
            }
            Catalog catalog = scan_all(filter);

            if (!dump_dir.empty()) {
                for (size_t i = 0; i < catalog.distinct_valid_tables.size(); i++) {
                    const MubTable &t = catalog.distinct_valid_tables[i];
                    std::ostringstream name;
                    name << "table_" << std::setw(4) << std::setfill('0') << i + 1 << ".json";
                    std::ofstream file(std::filesystem::path(dump_dir) / name.str());
                    file << serialize(make_document(t, verify_mub(t)));
                    if (!file) {
                        throw InputError("--dump: cannot write " + name.str());
                    }
                }
            }

            if (as_json) {
                json j;
                j["field"] = field.to_string();
                j["fixed_choices"] = catalog.invocations();
                j["raw_solutions"] = catalog.raw_solutions;
                j["raw_valid"] = catalog.raw_valid;
                j["raw_invalid"] = catalog.raw_invalid;
                j["distinct_tables"] = catalog.distinct_tables.size();
                j["distinct_valid_tables"] = catalog.distinct_valid_tables.size();
                json hist = json::object();
                for (const auto &[k, v] : catalog.solution_count_histogram) {
                    hist[std::to_string(k)] = v;
                }
                j["solution_count_histogram"] = hist;
                json vhist = json::object();
                for (const auto &[k, v] : catalog.valid_count_histogram) {
                    vhist[std::to_string(k)] = v;
                }
                j["valid_count_histogram"] = vhist;
                if (filter) {
                    json entries = json::array();
                    for (const auto &e : catalog.entries) {
                        entries.push_back(solutions_to_json(field, e.fixed, e.solutions));
                    }
                    j["entries"] = entries;
                }
                out << j.dump(2) << "\n";
            } else {
                if (filter) {
                    for (const auto &e : catalog.entries) {
                        render_solutions(out, e.fixed, e.solutions);
                        out << "\n";
                    }
                }
                out << "fixed choices scanned: " << catalog.invocations() << "\n";
                out << "solutions: " << catalog.raw_solutions << " raw, " << catalog.raw_valid << " valid, "
                    << catalog.raw_invalid << " invalid\n";
                out << "distinct tables: " << catalog.distinct_tables.size() << " ("
                    << catalog.distinct_valid_tables.size() << " valid)\n";
                out << "fixed choices by solution count:";
                for (const auto &[k, v] : catalog.solution_count_histogram) {
                    out << " " << k << ":" << v;
                }
                out << "\nfixed choices by valid solution count:";
                for (const auto &[k, v] : catalog.valid_count_histogram) {
                    out << " " << k << ":" << v;
                }
                out << "\n";
                if (!dump_dir.empty()) {
                    out << "dumped " << catalog.distinct_valid_tables.size() << " tables to " << dump_dir << "\n";
                }
            }
            return kExitOk;
        }

        if (*independence) {
            IndependenceReport report = independence_check();
            if (as_json) {
                json j;
                j["assignments"] = report.assignments_checked;
                j["core_satisfied"] = report.core_satisfied;
                j["all_satisfied"] = report.all_satisfied;
                j["implication_holds"] = report.implication_holds;
                j["minimal"] = report.minimal();
                json witnesses = json::array();
                for (const auto &w : report.minimality_witnesses) {
                    if (!w) {
                        witnesses.push_back(nullptr);
                        continue;
                    }
                    json jw;
                    jw["subset"] = w->subset;
                    jw["seeds"] = seeds_to_json(w->seeds);
                    jw["violated"] = w->violated;
                    witnesses.push_back(jw);
                }
                j["witnesses"] = witnesses;
                out << j.dump(2) << "\n";
            } else {
                out << report.assignments_checked << " assignments; 4 ⇒ 15: "
                    << (report.implication_holds ? "holds" : "fails") << "; minimal: "
                    << (report.minimal() ? "yes" : "no") << "\n";
                out << "relations 1,4,7,10 hold for " << report.core_satisfied << " assignments; all 15 for "
                    << report.all_satisfied << "\n";
                for (const auto &w : report.minimality_witnesses) {
                    if (!w) {
                        continue;
                    }
                    out << "relations " << w->subset[0] << "," << w->subset[1] << "," << w->subset[2]
                        << " hold but " << w->violated << " fails at ";
                    render_seeds(out, w->seeds);
                }
            }
            return kExitOk;
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace mub
