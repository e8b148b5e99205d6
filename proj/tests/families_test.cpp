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

#include <gtest/gtest.h>

#include <set>

#include "nomvote/families.hpp"
#include "support/brute.hpp"

using namespace nomvote;

TEST(Families, CommitteeCountsMatchAntichainFilter)
{
    for (std::size_t n : {2U, 3U, 4U}) {
        const auto fast = all_committees(n);
        const auto slow = brute::antichains(n);
        EXPECT_EQ(fast.size(), slow.size()) << "n=" << n;
        std::set<std::vector<Coalition>> a;
        std::set<std::vector<Coalition>> b;
        for (auto c : fast) {
            std::sort(c.begin(), c.end());
            a.insert(c);
        }
        for (auto c : slow) {
            std::sort(c.begin(), c.end());
            b.insert(c);
        }
        EXPECT_EQ(a, b);
    }
    EXPECT_EQ(all_committees(2).size(), 4U);
    EXPECT_EQ(all_committees(3).size(), 18U);
    EXPECT_EQ(all_committee_families(3, 2).size(), 324U);
}

TEST(Families, EnumeratedRulesAreValidAndDistinct)
{
    const auto check = [](const std::vector<Rule>& rules) {
        std::set<std::vector<Alternative>> seen;
        for (const auto& rule : rules) {
            ASSERT_TRUE(validate(rule).empty()) << rule.tag();
            std::vector<Alternative> outcomes;
            for_each_top_vector(rule.alternatives(), rule.agents(),
                                [&](const TopVector& t) { outcomes.push_back(eval(rule, t)); });
            seen.insert(outcomes);
        }
        EXPECT_EQ(seen.size(), rules.size());
    };
    check(all_median_schemes(3, 4));
    check(all_ballot_families(2, 4));
    check(all_ballot_families(3, 3));
    check(all_quota_families(3, 2));
    check(all_committee_families(2, 2));
}

TEST(Families, SmallCountsAndBudget)
{
    EXPECT_EQ(all_median_schemes(3, 3).size(), 6U);
    EXPECT_EQ(all_ballot_families(2, 3).size(), 9U);
    EXPECT_EQ(all_quota_families(3, 2).size(), 9U);
    EXPECT_EQ(all_tables(2, 2).size(), 16U);
    EXPECT_THROW(all_tables(2, 3, Budget{40320, 1000}), BudgetExceeded);
}

TEST(Families, RandomOntoTablesAreDeterministicAndOnto)
{
    const auto a = random_onto_tables(2, 3, 50, 7);
    const auto b = random_onto_tables(2, 3, 50, 7);
    const auto c = random_onto_tables(2, 3, 50, 8);
    ASSERT_EQ(a.size(), 50U);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& ta = a[i].get_if<TopsOnlyTable>()->outcomes;
        EXPECT_EQ(ta, b[i].get_if<TopsOnlyTable>()->outcomes);
        differs = differs || ta != c[i].get_if<TopsOnlyTable>()->outcomes;
        EXPECT_TRUE(is_onto_tops(a[i]));
    }
    EXPECT_TRUE(differs);
}
