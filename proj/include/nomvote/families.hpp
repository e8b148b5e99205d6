/*
 * Copyright 2026 The nomvote Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NOMVOTE_FAMILIES_HPP
#define NOMVOTE_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "nomvote/domain.hpp"
#include "nomvote/error.hpp"
#include "nomvote/rules.hpp"

// Exhaustive enumerators over rule families at fixed sizes, in a
// deterministic order. Sweeps and the acceptance suite run on these.

namespace nomvote {

/// Every nondecreasing alpha in X^(n-1), lexicographic.
inline std::vector<Rule> all_median_schemes(std::size_t agents, std::size_t alternatives)
{
    if (agents < 2) {
        throw InvalidArgument("all_median_schemes: need n >= 2");
    }
    std::vector<Rule> out;
    std::vector<Alternative> alpha(agents - 1, 0);
    const std::function<void(std::size_t, Alternative)> fill = [&](std::size_t j, Alternative from) {
        if (j == alpha.size()) {
            out.push_back(Rule::median(alternatives, alpha));
            return;
        }
        for (Alternative x = from; x < alternatives; ++x) {
            alpha[j] = x;
            fill(j + 1, x);
        }
    };
    fill(0, 0);
    return out;
}

/// Every monotonic family of fixed ballots with p_N = a and p_{} = b,
/// lexicographic in the ballot vector (coalitions in mask order).
inline std::vector<Rule> all_ballot_families(std::size_t agents, std::size_t alternatives,
                                             std::size_t limit = 1'000'000)
{
    if (agents < 2 || agents > 4) {
        throw InvalidArgument("all_ballot_families: supported for 2 <= n <= 4");
    }
    const Coalition count = Coalition{1} << agents;
    const Coalition all = count - 1;
    std::vector<Alternative> p(count, 0);
    p[0] = static_cast<Alternative>(alternatives - 1);
    p[all] = 0;
    std::vector<Rule> out;
    // Proper subsets of s have smaller masks, so each is assigned before s.
    const std::function<void(Coalition)> fill = [&](Coalition s) {
        if (s == all) {
            if (out.size() >= limit) {
                throw BudgetExceeded("all_ballot_families: more than " + std::to_string(limit) + " families");
            }
            out.push_back(Rule::generalized_median(agents, alternatives, p));
            return;
        }
        Alternative ceiling = static_cast<Alternative>(alternatives - 1);
        for (std::size_t i = 0; i < agents; ++i) {
            const Coalition bit = Coalition{1} << i;
            if (s & bit) {
                ceiling = std::min(ceiling, p[s & ~bit]);
            }
        }
        for (Alternative x = 0; x <= ceiling; ++x) {
            p[s] = x;
            fill(s + 1);
        }
    };
    fill(1);
    return out;
}

/// Every committee for `agents` agents: nonempty antichains of nonempty
/// coalitions, each listed in ascending mask order.
inline std::vector<std::vector<Coalition>> all_committees(std::size_t agents)
{
    if (agents < 2 || agents > 5) {
        throw InvalidArgument("all_committees: supported for 2 <= n <= 5");
    }
    const Coalition count = Coalition{1} << agents;
    std::vector<std::vector<Coalition>> out;
    std::vector<Coalition> chosen;
    const std::function<void(Coalition)> extend = [&](Coalition from) {
        for (Coalition c = from; c < count; ++c) {
            bool comparable = false;
            for (Coalition d : chosen) {
                comparable = comparable || is_subset(c, d) || is_subset(d, c);
            }
            if (comparable) {
                continue;
            }
            chosen.push_back(c);
            out.push_back(chosen);
            extend(c + 1);
            chosen.pop_back();
        }
    };
    extend(1);
    return out;
}

/// Every voting-by-committees rule: one committee per object, all combinations.
inline std::vector<Rule> all_committee_families(std::size_t agents, std::size_t objects)
{
    const auto committees = all_committees(agents);
    std::vector<Rule> out;
    std::vector<std::size_t> pick(objects, 0);
    while (true) {
        std::vector<std::vector<Coalition>> minimal;
        for (std::size_t k = 0; k < objects; ++k) {
            minimal.push_back(committees[pick[k]]);
        }
        out.push_back(Rule::committees(agents, objects, std::move(minimal)));
        std::size_t k = objects;
        while (k > 0 && ++pick[k - 1] == committees.size()) {
            pick[--k] = 0;
        }
        if (k == 0) {
            return out;
        }
    }
}

/// Every quota vector in [1, n]^K, lexicographic.
inline std::vector<Rule> all_quota_families(std::size_t agents, std::size_t objects)
{
    std::vector<Rule> out;
    std::vector<std::size_t> q(objects, 1);
    while (true) {
        out.push_back(Rule::quota(agents, q));
        std::size_t k = objects;
        while (k > 0 && ++q[k - 1] > agents) {
            q[--k] = 1;
        }
        if (k == 0) {
            return out;
        }
    }
}

/// Every tops-only table on a linear space (m^(m^n) rules).
inline std::vector<Rule> all_tables(std::size_t agents, std::size_t alternatives, const Budget& budget = {})
{
    const std::uint64_t cells = top_vector_count(alternatives, agents);
    const std::uint64_t rules = detail::saturating_pow(alternatives, cells);
    budget.require_profiles(rules, "all_tables");
    std::vector<Rule> out;
    std::vector<Alternative> outcomes(static_cast<std::size_t>(cells), 0);
    const auto space = AlternativeSpace::linear(alternatives);
    while (true) {
        out.push_back(Rule::table(agents, space, outcomes));
        std::size_t j = outcomes.size();
        while (j > 0 && ++outcomes[j - 1] == alternatives) {
            outcomes[--j] = 0;
        }
        if (j == 0) {
            return out;
        }
    }
}

/// `count` tables drawn uniformly from the onto tops-only tables on a linear
/// space (rejection sampling), reproducible from `seed`.
inline std::vector<Rule> random_onto_tables(std::size_t agents, std::size_t alternatives, std::size_t count,
                                            std::uint64_t seed)
{
    const std::uint64_t cells = top_vector_count(alternatives, agents);
    if (cells < alternatives) {
        throw InvalidArgument("random_onto_tables: fewer top vectors than alternatives");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Alternative> pick(0, static_cast<Alternative>(alternatives - 1));
    const auto space = AlternativeSpace::linear(alternatives);
    std::vector<Rule> out;
    std::vector<Alternative> outcomes(static_cast<std::size_t>(cells));
    while (out.size() < count) {
        AlternativeSet hit(alternatives);
        for (auto& x : outcomes) {
            x = pick(rng);
            hit.insert(x);
        }
        if (hit.size() == alternatives) {
            out.push_back(Rule::table(agents, space, outcomes));
        }
    }
    return out;
}

} // namespace nomvote

#endif // NOMVOTE_FAMILIES_HPP
