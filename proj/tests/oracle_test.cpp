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

#include "nomvote/families.hpp"
#include "nomvote/oracle.hpp"

using namespace nomvote;

namespace {

void expect_confirmed(const Rule& rule, const AxiomVerdict& verdict)
{
    ASSERT_FALSE(verdict.holds);
    ASSERT_TRUE(verdict.counterexample.has_value());
    EXPECT_TRUE(confirms(rule, *verdict.counterexample));
}

} // namespace

TEST(StrategyProof, MedianOnSinglePeakedDomain)
{
    const auto rule = Rule::median(3, {1});
    EXPECT_TRUE(is_strategy_proof(rule, single_peaked_domain(rule.space())).holds);
    const auto universal = is_strategy_proof(rule, universal_domain());
    expect_confirmed(rule, universal);
    EXPECT_TRUE(std::holds_alternative<ManipulationCounterexample>(*universal.counterexample));
}

TEST(StrategyProof, QuotaOnSeparableDomain)
{
    const auto rule = Rule::quota(3, {2, 2});
    EXPECT_TRUE(is_strategy_proof(rule, separable_domain(rule.space())).holds);
    expect_confirmed(rule, is_strategy_proof(rule, universal_domain()));
}

TEST(StrategyProof, RestrictedDomainSweeps)
{
    for (std::size_t n : {2U, 3U}) {
        for (std::size_t m : {3U, 4U}) {
            for (const auto& rule : all_median_schemes(n, m)) {
                ASSERT_TRUE(is_strategy_proof(rule, single_peaked_domain(rule.space())).holds);
            }
        }
    }
    for (const auto& rule : all_ballot_families(2, 3)) {
        ASSERT_TRUE(is_strategy_proof(rule, single_peaked_domain(rule.space())).holds);
    }
    for (const auto& rule : all_committee_families(3, 2)) {
        ASSERT_TRUE(is_strategy_proof(rule, separable_domain(rule.space())).holds);
    }
}

TEST(StrategyProof, NonDictatorialOntoRulesAreManipulable)
{
    // Three or more alternatives and the universal domain.
    for (const auto& rule : all_ballot_families(2, 3)) {
        const bool dictatorial = is_dictatorial(rule).holds;
        const auto verdict = is_strategy_proof(rule, universal_domain());
        EXPECT_EQ(verdict.holds, dictatorial);
        if (!verdict.holds) {
            EXPECT_TRUE(confirms(rule, *verdict.counterexample));
        }
    }
}

TEST(StrategyProof, RespectsBudget)
{
    Budget tight;
    tight.max_profiles = 100;
    EXPECT_THROW(is_strategy_proof(Rule::median(3, {1, 1}), universal_domain(), tight), BudgetExceeded);
}

TEST(Efficiency, Examples)
{
    EXPECT_TRUE(is_efficient(Rule::dictatorship(2, AlternativeSpace::linear(3), 0)).holds);
    const auto sq = Rule::status_quo(2, AlternativeSpace::linear(3), 0);
    const auto verdict = is_efficient(sq);
    expect_confirmed(sq, verdict);
    const auto& cx = std::get<EfficiencyCounterexample>(*verdict.counterexample);
    EXPECT_EQ(cx.outcome, 0U);
    EXPECT_TRUE(is_efficient(Rule::median(3, {0, 2})).holds);
    expect_confirmed(Rule::median(3, {1}), is_efficient(Rule::median(3, {1})));
}

TEST(Efficiency, RefusesBeyondBudget)
{
    Budget tight;
    tight.max_profiles = 1000;
    EXPECT_THROW(is_efficient(Rule::quota(3, {2, 2}), tight), BudgetExceeded);
}

TEST(Anonymity, Examples)
{
    for (const auto& rule : all_median_schemes(3, 4)) {
        EXPECT_TRUE(is_anonymous(rule).holds);
    }
    const auto dict = Rule::dictatorship(3, AlternativeSpace::linear(2), 1);
    const auto verdict = is_anonymous(dict);
    expect_confirmed(dict, verdict);
    const auto& cx = std::get<AnonymityCounterexample>(*verdict.counterexample);
    std::size_t moved = 0;
    for (std::size_t j = 0; j < cx.tops.size(); ++j) {
        moved += cx.tops[j] != cx.permuted[j] ? 1 : 0;
    }
    EXPECT_EQ(moved, 2U);

    const auto gmv = Rule::generalized_median(2, 3, {2, 1, 2, 0});
    expect_confirmed(gmv, is_anonymous(gmv));
}

TEST(Dictatorial, Examples)
{
    const auto dict = is_dictatorial(Rule::dictatorship(3, AlternativeSpace::linear(3), 2));
    EXPECT_TRUE(dict.holds);
    EXPECT_EQ(dict.dictator, std::optional<Agent>(2));

    const auto median = Rule::median(3, {1});
    expect_confirmed(median, is_dictatorial(median));

    // p_{1} = a and p_{N\1} = p_{2} = b.
    const auto gmv = is_dictatorial(Rule::generalized_median(2, 3, {2, 0, 2, 0}));
    EXPECT_TRUE(gmv.holds);
    EXPECT_EQ(gmv.dictator, std::optional<Agent>(0));
}

TEST(NomBrute, Examples)
{
    EXPECT_TRUE(is_nom_brute(Rule::status_quo(3, AlternativeSpace::linear(3), 1)).holds);
    EXPECT_TRUE(is_nom_brute(Rule::dictatorship(2, AlternativeSpace::linear(4), 1)).holds);
    const auto median = Rule::median(3, {0, 0});
    const auto verdict = is_nom_brute(median);
    expect_confirmed(median, verdict);
}

TEST(Counterexamples, AlwaysReverify)
{
    for (const auto& rule : all_median_schemes(3, 3)) {
        for (const auto& verdict : {is_efficient(rule), is_anonymous(rule), is_dictatorial(rule), is_nom_brute(rule),
                                    is_strategy_proof(rule, universal_domain())}) {
            EXPECT_EQ(verdict.holds, !verdict.counterexample.has_value());
            if (verdict.counterexample) {
                EXPECT_TRUE(confirms(rule, *verdict.counterexample));
            }
        }
    }
    for (const auto& rule : all_quota_families(3, 2)) {
        for (const auto& verdict : {is_efficient(rule), is_anonymous(rule), is_nom_brute(rule)}) {
            if (verdict.counterexample) {
                EXPECT_TRUE(confirms(rule, *verdict.counterexample));
            }
        }
    }
}

TEST(Counterexamples, TamperedWitnessIsRejected)
{
    const auto rule = Rule::median(3, {1});
    auto verdict = is_efficient(rule);
    ASSERT_FALSE(verdict.holds);
    auto cx = std::get<EfficiencyCounterexample>(*verdict.counterexample);
    cx.dominating = cx.outcome;
    EXPECT_FALSE(confirms(rule, Counterexample{cx}));
}
