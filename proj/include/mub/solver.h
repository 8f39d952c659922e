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

#pragma once

// Exhaustive solving of the four-relation seed system over GF(4), the
// 15-relation independence audit, and the sweep over every free choice.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mub/phase_space.h"

namespace mub {

/// The five freely chosen seed symbols.
struct FixedFive {
    FieldElement a11;
    FieldElement b11;
    FieldElement a21;
    FieldElement b21;
    FieldElement b12;

    bool operator==(const FixedFive &other) const = default;
};

/// The three seed symbols determined by the system: a12, a22, b22.
struct SolutionTriple {
    FieldElement a12;
    FieldElement a22;
    FieldElement b22;

    bool operator==(const SolutionTriple &other) const = default;
    auto operator<=>(const SolutionTriple &other) const = default;
};

SeedParams assemble(const FixedFive &fixed, const SolutionTriple &triple);

/// The four relations in reduced form:
///   tr[a11 b12] = tr[a12 b11]
///   tr[a21 b22] = tr[a22 b21]
///   tr[a11 b22 + a21 b12] = tr[a12 b21 + a22 b11]
///   tr[a21 b11 + a21 b12 + a12 b22] = tr[a22 b12 + a11 b21 + a12 b21]
std::array<bool, 4> system_relations(const SeedParams &seeds);

struct Solution {
    SolutionTriple triple;
    MubTable table;

    bool valid() const {
        return table.valid();
    }
};

/// Every triple satisfying system_relations, in increasing triple order.
/// Degenerate solutions are kept; check Solution::valid().
std::vector<Solution> solve_system(const FixedFive &fixed);

/// Appendix relation numbers (1-based) of the four solved relations.
inline constexpr std::array<int, 4> kCoreRelations = {1, 4, 7, 10};

struct MinimalityWitness {
    /// The three core relations (1-based) that hold.
    std::array<int, 3> subset;
    SeedParams seeds;
    /// First appendix relation (1-based) violated by `seeds`.
    int violated;
};

struct IndependenceReport {
    std::uint64_t assignments_checked = 0;
    /// Assignments on which all four core relations hold.
    std::uint64_t core_satisfied = 0;
    /// Assignments on which all 15 relations hold.
    std::uint64_t all_satisfied = 0;
    bool implication_holds = true;
    std::optional<SeedParams> implication_counterexample;
    /// One entry per 3-subset of the core, dropping relation 1, 4, 7, 10 in turn.
    std::array<std::optional<MinimalityWitness>, 4> minimality_witnesses;

    bool minimal() const;
};

/// Seed assignment number `index` in [0, 4^8). Digits in base 4, most
/// significant first, fill a11, b11, a12, b12, a21, b21, a22, b22; digit
/// value k is the GF(4) element with coefficient bits k.
SeedParams seed_assignment(std::uint32_t index);
inline constexpr std::uint32_t kSeedAssignments = 1u << 16;

/// Sweeps every seed assignment accepted by `filter` (all when empty) in
/// index order. Witnesses are the first found in that order.
IndependenceReport independence_check(const std::function<bool(const SeedParams &)> &filter = {});

/// FixedFive number `index` in [0, 4^5): digits fill a11, b11, a21, b21, b12.
FixedFive fixed_choice(std::uint32_t index);
inline constexpr std::uint32_t kFixedChoices = 1u << 10;

struct CatalogEntry {
    FixedFive fixed;
    std::vector<Solution> solutions;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    /// Number of fixed choices with a given number of solutions.
    std::map<std::size_t, std::size_t> solution_count_histogram;
    std::map<std::size_t, std::size_t> valid_count_histogram;
    std::size_t raw_solutions = 0;
    std::size_t raw_valid = 0;
    std::size_t raw_invalid = 0;
    /// Distinct canonical tables, sorted.
    std::vector<MubTable> distinct_tables;
    std::vector<MubTable> distinct_valid_tables;

    std::size_t invocations() const {
        return entries.size();
    }
};

/// Runs solve_system for every fixed choice accepted by `filter` (all 1024
/// when empty), in fixed_choice index order.
Catalog scan_all(const std::function<bool(const FixedFive &)> &filter = {});

}  // namespace mub
