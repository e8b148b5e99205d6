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

#include "nomvote/characterization.hpp"
#include "nomvote/families.hpp"

using namespace nomvote;

TEST(NomPredicateMvs, Examples)
{
    EXPECT_TRUE(nom_predicate_mvs(MedianScheme{{1, 2}}, 4).nom);
    const auto bad = nom_predicate_mvs(MedianScheme{{2, 3}}, 4);
    EXPECT_FALSE(bad.nom);
    EXPECT_EQ(bad.rationale, "alpha_1=2 not in {0,1}");
    EXPECT_TRUE(nom_predicate_mvs(MedianScheme{{1}}, 3).nom);
    const auto high = nom_predicate_mvs(MedianScheme{{0, 1}}, 4);
    EXPECT_FALSE(high.nom);
    EXPECT_EQ(high.rationale, "alpha_2=1 not in {2,3}");
}

TEST(NomPredicateGmv, Examples)
{
    // Ballots in mask order: {}, {1}, {2}, N.
    EXPECT_TRUE(nom_predicate_gmv(BallotFamily{{2, 1, 1, 0}}, 2, 3).nom);

    const auto dict = nom_predicate_gmv(BallotFamily{{2, 0, 2, 0}}, 2, 3);
    EXPECT_TRUE(dict.nom);
    EXPECT_TRUE(dict.dictatorial);
    EXPECT_EQ(dict.dictator, std::optional<Agent>(0));

    const auto bad = nom_predicate_gmv(BallotFamily{{3, 1, 2, 0}}, 2, 4);
    EXPECT_FALSE(bad.nom);
    EXPECT_FALSE(bad.dictatorial);
    EXPECT_NE(bad.rationale.find("agent 0"), std::string::npos);
    EXPECT_FALSE(is_nom_brute(Rule::generalized_median(2, 4, {3, 1, 2, 0})).holds);
}

TEST(NomPredicateVbc, Examples)
{
    const std::vector<Coalition> majority{0b011, 0b101, 0b110};
    EXPECT_TRUE(nom_predicate_vbc(CommitteeFamily{{majority, majority}}, 3).nom);

    const auto dict = nom_predicate_vbc(CommitteeFamily{{{0b001}, {0b001}}}, 3);
    EXPECT_TRUE(dict.nom);
    EXPECT_TRUE(dict.dictatorial);
    EXPECT_EQ(dict.dictator, std::optional<Agent>(0));

    const auto singleton = nom_predicate_vbc(CommitteeFamily{{{0b001, 0b110}, majority}}, 3);
    EXPECT_FALSE(singleton.nom);
    EXPECT_EQ(singleton.rationale, "singleton {0} wins object 0");

    const auto common = nom_predicate_vbc(CommitteeFamily{{{0b011, 0b101}, majority}}, 3);
    EXPECT_FALSE(common.nom);
    EXPECT_EQ(common.rationale, "agent 0 belongs to every winning coalition of object 0");
}

TEST(NomPredicateQuota, Examples)
{
    EXPECT_TRUE(nom_predicate_quota(QuotaFamily{{2, 2}}, 3).nom);
    EXPECT_FALSE(nom_predicate_quota(QuotaFamily{{1, 2}}, 3).nom);
    EXPECT_TRUE(nom_predicate_quota(QuotaFamily{{2, 3}}, 4).nom);
    for (const auto& rule : all_quota_families(2, 2)) {
        EXPECT_FALSE(nom_predicate(rule)->nom);
        EXPECT_FALSE(is_nom_brute(rule).holds);
    }
}

TEST(NomPredicateQuota, AgreesWithCommitteePredicate)
{
    for (std::size_t n : {2U, 3U, 4U}) {
        for (const auto& rule : all_quota_families(n, 2)) {
            const auto& q = *rule.get_if<QuotaFamily>();
            EXPECT_EQ(nom_predicate_quota(q, n).nom, nom_predicate_vbc(quota_to_committees(q, n), n).nom);
        }
    }
}

TEST(NomPredicate, AgreesWithBothOraclesOnSmallSweeps)
{
    std::vector<Rule> rules;
    for (auto& r : all_median_schemes(3, 3)) {
        rules.push_back(std::move(r));
    }
    for (auto& r : all_ballot_families(3, 3)) {
        rules.push_back(std::move(r));
    }
    for (auto& r : all_quota_families(4, 2)) {
        rules.push_back(std::move(r));
    }
    for (const auto& rule : rules) {
        const auto predicate = nom_predicate(rule);
        ASSERT_TRUE(predicate.has_value());
        EXPECT_FALSE(predicate->rationale.empty());
        const bool brute = is_nom_brute(rule).holds;
        ASSERT_EQ(predicate->nom, brute) << rule.tag() << " " << predicate->rationale;
        ASSERT_EQ(is_nom_veto(rule), brute);
    }
}

TEST(NomPredicate, BoundaryFamilies)
{
    EXPECT_TRUE(nom_predicate(Rule::status_quo(2, AlternativeSpace::linear(3), 0))->nom);
    EXPECT_TRUE(nom_predicate(Rule::dictatorship(2, AlternativeSpace::linear(3), 1))->dictatorial);
    EXPECT_FALSE(nom_predicate(Rule::table(2, AlternativeSpace::linear(2), {0, 0, 1, 1})).has_value());
}

TEST(EfficientNomTest, Examples)
{
    EXPECT_TRUE(nom_corollary_efficient(Rule::dictatorship(2, AlternativeSpace::linear(3), 0)).nom);
    EXPECT_TRUE(nom_corollary_efficient(Rule::median(3, {0, 2})).nom);
    EXPECT_THROW(nom_corollary_efficient(Rule::status_quo(2, AlternativeSpace::linear(3), 0)), HypothesisNotVerified);

    // Agents 0 and 1 each strongly veto a different alternative.
    VetoReport two;
    for (Alternative x : {Alternative{0}, Alternative{2}}) {
        AgentVetoes a{AlternativeSet::of(3, {x}), AlternativeSet::of(3, {x}), {}};
        two.agents.push_back(a);
    }
    const auto verdict = nom_corollary_efficient(two);
    EXPECT_FALSE(verdict.nom);
    EXPECT_FALSE(verdict.rationale.empty());
}

TEST(AnonymousEfficientNomTest, Examples)
{
    EXPECT_TRUE(nom_corollary_anon_efficient(Rule::median(3, {0, 2})).nom);
    EXPECT_THROW(nom_corollary_anon_efficient(Rule::dictatorship(2, AlternativeSpace::linear(3), 0)),
                 HypothesisNotVerified);

    const auto strong = [](std::initializer_list<Alternative> xs) {
        return AgentVetoes{AlternativeSet::of(3, xs), AlternativeSet::of(3, xs), {}};
    };
    EXPECT_FALSE(nom_corollary_anon_efficient(VetoReport{{strong({1}), strong({})}}).nom);
    EXPECT_TRUE(nom_corollary_anon_efficient(VetoReport{{strong({1}), strong({1})}}).nom);
    EXPECT_TRUE(nom_corollary_anon_efficient(VetoReport{{strong({}), strong({})}}).nom);
}

TEST(EfficientNomTests, AgreeWithOraclesWhenHypothesesHold)
{
    std::size_t applied = 0;
    for (std::size_t m : {3U, 4U}) {
        for (const auto& rule : all_median_schemes(3, m)) {
            if (!is_efficient(rule).holds) {
                EXPECT_THROW(nom_corollary_efficient(rule), HypothesisNotVerified);
                continue;
            }
            const bool brute = is_nom_brute(rule).holds;
            EXPECT_EQ(nom_corollary_efficient(rule).nom, brute);
            EXPECT_EQ(nom_corollary_anon_efficient(rule).nom, brute);
            ++applied;
        }
    }
    EXPECT_GT(applied, 0U);
}
