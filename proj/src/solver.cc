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

#include "mub/solver.h"

#include <algorithm>
#include <set>

namespace mub {

namespace {

bool tr_eq(const FieldElement &lhs, const FieldElement &rhs) {
    return trace_bit(lhs) == trace_bit(rhs);
}

bool all_true(const auto &range) {
    return std::all_of(range.begin(), range.end(), [](bool b) { return b; });
}

}  // namespace

SeedParams assemble(const FixedFive &fixed, const SolutionTriple &triple) {
    SeedParams s;
    s.a = {{{fixed.a11, triple.a12}, {fixed.a21, triple.a22}}};
    s.b = {{{fixed.b11, fixed.b12}, {fixed.b21, triple.b22}}};
    return s;
}

std::array<bool, 4> system_relations(const SeedParams &seeds) {
    const FieldElement a11 = seeds.a[0][0], a12 = seeds.a[0][1];
    const FieldElement a21 = seeds.a[1][0], a22 = seeds.a[1][1];
    const FieldElement b11 = seeds.b[0][0], b12 = seeds.b[0][1];
    const FieldElement b21 = seeds.b[1][0], b22 = seeds.b[1][1];
    return {
        tr_eq(a11 * b12, a12 * b11),
        tr_eq(a21 * b22, a22 * b21),
        tr_eq(a11 * b22 + a21 * b12, a12 * b21 + a22 * b11),
        tr_eq(a21 * b11 + a21 * b12 + a12 * b22, a22 * b12 + a11 * b21 + a12 * b21),
    };
}

std::vector<Solution> solve_system(const FixedFive &fixed) {
    FieldCtx field = fixed.a11.ctx();
    std::vector<Solution> out;
    for (const auto &a12 : field.elements()) {
        for (const auto &a22 : field.elements()) {
            for (const auto &b22 : field.elements()) {
                SolutionTriple triple{a12, a22, b22};
                SeedParams seeds = assemble(fixed, triple);
                if (all_true(system_relations(seeds))) {
                    out.push_back({triple, build_table(seeds)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Solution &x, const Solution &y) { return x.triple < y.triple; });
    return out;
}

bool IndependenceReport::minimal() const {
    return std::all_of(minimality_witnesses.begin(), minimality_witnesses.end(), [](const auto &w) {
        return w.has_value();
    });
}

SeedParams seed_assignment(std::uint32_t index) {
    FieldCtx f = FieldCtx::gf4();
    auto digit = [&](int position) { return f.element((index >> (2 * (7 - position))) & 3); };
    SeedParams s;
    s.a[0][0] = digit(0);
    s.b[0][0] = digit(1);
    s.a[0][1] = digit(2);
    s.b[0][1] = digit(3);
    s.a[1][0] = digit(4);
    s.b[1][0] = digit(5);
    s.a[1][1] = digit(6);
    s.b[1][1] = digit(7);
    return s;
}

IndependenceReport independence_check(const std::function<bool(const SeedParams &)> &filter) {
    IndependenceReport report;
    for (std::uint32_t index = 0; index < kSeedAssignments; index++) {
        SeedParams seeds = seed_assignment(index);
        if (filter && !filter(seeds)) {
            continue;
        }
        report.assignments_checked++;
        std::array<bool, 15> rel = appendix_relations(seeds);
        bool all = all_true(rel);
        if (all) {
            report.all_satisfied++;
        }

        std::array<bool, 4> core;
        for (size_t k = 0; k < 4; k++) {
            core[k] = rel[kCoreRelations[k] - 1];
        }
        if (all_true(core)) {
            report.core_satisfied++;
            if (!all && report.implication_holds) {
                report.implication_holds = false;
                report.implication_counterexample = seeds;
            }
        }
        if (all) {
            continue;
        }
        int violated = static_cast<int>(std::find(rel.begin(), rel.end(), false) - rel.begin()) + 1;
        for (size_t dropped = 0; dropped < 4; dropped++) {
            if (report.minimality_witnesses[dropped]) {
                continue;
            }
            MinimalityWitness w{{}, seeds, violated};
            bool holds = true;
            size_t j = 0;
            for (size_t k = 0; k < 4; k++) {
                if (k == dropped) {
                    continue;
                }
                w.subset[j++] = kCoreRelations[k];
                holds = holds && core[k];
            }
            if (holds) {
                report.minimality_witnesses[dropped] = w;
            }
        }
    }
    return report;
}

FixedFive fixed_choice(std::uint32_t index) {
    FieldCtx f = FieldCtx::gf4();
    auto digit = [&](int position) { return f.element((index >> (2 * (4 - position))) & 3); };
    return {digit(0), digit(1), digit(2), digit(3), digit(4)};
}

Catalog scan_all(const std::function<bool(const FixedFive &)> &filter) {
    Catalog catalog;
    std::set<std::array<Row, 5>> distinct;
    std::set<std::array<Row, 5>> distinct_valid;
    for (std::uint32_t index = 0; index < kFixedChoices; index++) {
        FixedFive fixed = fixed_choice(index);
        if (filter && !filter(fixed)) {
            continue;
        }
        CatalogEntry entry{fixed, solve_system(fixed)};
        std::size_t valid = 0;
        for (const Solution &s : entry.solutions) {
            MubTable canonical = canonicalize(s.table);
            distinct.insert(canonical.rows());
            if (s.valid()) {
                valid++;
                distinct_valid.insert(canonical.rows());
            }
        }
        catalog.raw_solutions += entry.solutions.size();
        catalog.raw_valid += valid;
        catalog.raw_invalid += entry.solutions.size() - valid;
        catalog.solution_count_histogram[entry.solutions.size()]++;
        catalog.valid_count_histogram[valid]++;
        catalog.entries.push_back(std::move(entry));
    }
    for (const auto &rows : distinct) {
        catalog.distinct_tables.emplace_back(rows);
    }
    for (const auto &rows : distinct_valid) {
        catalog.distinct_valid_tables.emplace_back(rows);
    }
    return catalog;
}

}  // namespace mub
