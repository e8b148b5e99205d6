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

#include "nomvote/analysis.hpp"
#include "nomvote/families.hpp"
#include "support/brute.hpp"

using namespace nomvote;

namespace {

AlternativeSet set_of(std::size_t m, std::initializer_list<Alternative> xs) { return AlternativeSet::of(m, xs); }

AlternativeSet to_set(std::size_t m, const std::set<Alternative>& xs)
{
    AlternativeSet out(m);
    for (Alternative x : xs) {
        out.insert(x);
    }
    return out;
}

} // namespace

TEST(OptionSet, Examples)
{
    EXPECT_EQ(option_set(Rule::median(3, {1, 1}), 0, 0).members, set_of(3, {0, 1}));
    const auto space = AlternativeSpace::linear(4);
    for (Alternative a = 0; a < 4; ++a) {
        for (Alternative t = 0; t < 4; ++t) {
            const auto sq = Rule::status_quo(3, space, a);
            EXPECT_EQ(option_set(sq, 2, t).members, set_of(4, {a, t}));
        }
    }
    for (Alternative x = 0; x < 4; ++x) {
        EXPECT_EQ(option_set(Rule::dictatorship(2, space, 1), 1, x).members, set_of(4, {x}));
    }
    EXPECT_THROW(option_set(Rule::median(3, {1, 1}), 3, 0), InvalidArgument);
}

TEST(OptionSet, MatchesEvalBasedEnumeration)
{
    for (const auto& rule : all_committee_families(3, 2)) {
        for (Agent i = 0; i < 3; ++i) {
            for (Alternative t = 0; t < 4; ++t) {
                ASSERT_EQ(option_set(rule, i, t).members, to_set(4, brute::option_set(rule, i, t)));
            }
        }
    }
}

TEST(OptionSet, DependsOnlyOnTheTop)
{
    const auto rule = Rule::median(4, {1, 2});
    const auto space = rule.space();
    for (const auto& p : enumerate_preferences(space)) {
        const auto q = canonical_preference(p.top(), space);
        for (Agent i = 0; i < 3; ++i) {
            EXPECT_EQ(option_set(rule, i, p), option_set(rule, i, q));
        }
    }
}

TEST(OptionSetClosed, MedianExamples)
{
    EXPECT_EQ(option_set_closed_mvs(MedianScheme{{1, 1}}, 3, 0), set_of(3, {0, 1}));
    EXPECT_EQ(option_set_closed_mvs(MedianScheme{{1, 1}}, 3, 2), set_of(3, {1, 2}));
    EXPECT_EQ(option_set_closed_mvs(MedianScheme{{0, 2}}, 3, 1), set_of(3, {0, 1, 2}));
}

TEST(OptionSetClosed, MedianMatchesBruteForce)
{
    for (std::size_t n : {2U, 3U}) {
        for (std::size_t m : {3U, 4U}) {
            for (const auto& rule : all_median_schemes(n, m)) {
                for (Agent i = 0; i < n; ++i) {
                    for (Alternative t = 0; t < m; ++t) {
                        ASSERT_EQ(option_set_closed(rule, i, t), option_set(rule, i, t));
                    }
                }
            }
        }
    }
}

TEST(OptionSetClosed, GeneralizedMedianMatchesBruteForceUnderAssumption)
{
    std::size_t checked = 0;
    for (std::size_t n : {2U, 3U}) {
        for (const auto& rule : all_ballot_families(n, 3)) {
            const auto& p = *rule.get_if<BallotFamily>();
            for (Agent i = 0; i < n; ++i) {
                const Coalition self = Coalition{1} << i;
                if (p.at(grand_coalition(n) & ~self) > p.at(self)) {
                    EXPECT_THROW(option_set_closed(rule, i, 0), AssumptionViolated);
                    continue;
                }
                for (Alternative t = 0; t < 3; ++t) {
                    ASSERT_EQ(option_set_closed(rule, i, t), option_set(rule, i, t));
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 0U);
}

TEST(OptionSetClosed, UnsupportedFamilies)
{
    EXPECT_THROW(option_set_closed(Rule::quota(3, {2, 2}), 0, 1), UnsupportedFamily);
    EXPECT_THROW(option_set_closed(Rule::status_quo(2, AlternativeSpace::linear(3), 0), 0, 1), UnsupportedFamily);
}

TEST(VetoSets, StatusQuoVetoesEverythingButTheStatusQuo)
{
    for (std::size_t n : {2U, 3U}) {
        for (Alternative a = 0; a < 3; ++a) {
            const auto report = veto_sets(Rule::status_quo(n, AlternativeSpace::linear(3), a));
            for (const auto& agent : report.agents) {
                EXPECT_EQ(agent.vetoed, AlternativeSet::of(3, {a}).complement());
                EXPECT_EQ(agent.strongly_vetoed, agent.vetoed);
            }
        }
    }
}

TEST(VetoSets, MedianOutsideTheBallots)
{
    const auto report = veto_sets(Rule::median(3, {1, 1}));
    for (const auto& agent : report.agents) {
        EXPECT_EQ(agent.vetoed, set_of(3, {0, 2}));
        EXPECT_EQ(agent.vetoing_tops[0], (std::vector<Alternative>{1, 2}));
    }
    EXPECT_TRUE(veto_sets(Rule::median(3, {0, 2})).no_vetoers());
}

TEST(VetoSets, MajorityQuotaHasNoVetoers)
{
    EXPECT_TRUE(veto_sets(Rule::quota(3, {2, 2})).no_vetoers());
    EXPECT_TRUE(is_nom_veto(Rule::quota(3, {2, 2})));
}

TEST(VetoSets, StrongVetoesAreVetoes)
{
    for (const auto& rule : all_tables(2, 2)) {
        for (const auto& agent : veto_sets(rule).agents) {
            EXPECT_TRUE(agent.strongly_vetoed.is_subset_of(agent.vetoed));
        }
    }
    for (const auto& rule : all_committee_families(3, 2)) {
        for (const auto& agent : veto_sets(rule).agents) {
            ASSERT_TRUE(agent.strongly_vetoed.is_subset_of(agent.vetoed));
        }
    }
}

TEST(VetoSetsClosed, GeneralizedMedianWithInvertedExtremes)
{
    // p_{1} = 0 < p_{N\1} = p_{2} = 2: agent 0 vetoes every alternative.
    const auto rule = Rule::generalized_median(2, 3, {2, 0, 2, 0});
    const auto closed = veto_sets_closed(rule);
    EXPECT_EQ(closed.agents[0].vetoed, AlternativeSet::full(3));
    EXPECT_EQ(closed, veto_sets(rule));
}

TEST(VetoSetsClosed, SingletonCommitteeVetoesSetsWithoutTheObject)
{
    // Agent 0 alone wins object 0: every S without object 0 is vetoed.
    const auto rule = Rule::committees(3, 2, {{0b001, 0b110}, {0b011, 0b101, 0b110}});
    const auto closed = veto_sets_closed(rule);
    for (Alternative s = 0; s < 4; ++s) {
        if ((s & 1U) == 0) {
            EXPECT_TRUE(closed.agents[0].vetoed.contains(s));
        }
    }
    EXPECT_EQ(closed, veto_sets(rule));
}

TEST(VetoSetsClosed, MedianWithExtremeBallots)
{
    EXPECT_TRUE(veto_sets_closed(Rule::median(3, {0, 2})).no_vetoers());
}

TEST(VetoSetsClosed, MatchesBruteForceOnFamilySweeps)
{
    for (std::size_t n : {2U, 3U}) {
        for (std::size_t m : {3U, 4U}) {
            for (const auto& rule : all_median_schemes(n, m)) {
                ASSERT_EQ(veto_sets_closed(rule), veto_sets(rule));
            }
        }
        for (const auto& rule : all_ballot_families(n, 3)) {
            ASSERT_EQ(veto_sets_closed(rule), veto_sets(rule));
        }
    }
    for (const auto& rule : all_committee_families(3, 2)) {
        ASSERT_EQ(veto_sets_closed(rule), veto_sets(rule));
    }
    for (std::size_t n : {2U, 3U, 4U}) {
        for (const auto& rule : all_quota_families(n, 2)) {
            ASSERT_EQ(veto_sets_closed(rule), veto_sets(rule));
        }
    }
}

TEST(VetoSetsClosed, UnsupportedFamilies)
{
    EXPECT_THROW(veto_sets_closed(Rule::status_quo(2, AlternativeSpace::linear(3), 0)), UnsupportedFamily);
    EXPECT_THROW(veto_sets_closed(Rule::dictatorship(2, AlternativeSpace::linear(3), 0)), UnsupportedFamily);
    EXPECT_THROW(veto_sets_closed(Rule::table(2, AlternativeSpace::linear(2), {0, 0, 1, 1})), UnsupportedFamily);
}

TEST(ProfitableManipulations, DictatorNeverGains)
{
    const auto rule = Rule::dictatorship(2, AlternativeSpace::linear(3), 0);
    for (const auto& p : enumerate_preferences(rule.space())) {
        for (Agent i = 0; i < 2; ++i) {
            EXPECT_TRUE(find_profitable_manipulations(rule, i, p).empty());
        }
    }
}

TEST(ProfitableManipulations, StatusQuoScan)
{
    // Truth (1 2 0) under status quo 0: reporting 2 yields 2 exactly when the
    // other agent also reports 2, where truth would give 0; 2 beats 0.
    const auto rule = Rule::status_quo(2, AlternativeSpace::linear(3), 0);
    const auto found = find_profitable_manipulations(rule, 0, Preference({1, 2, 0}));
    ASSERT_EQ(found.size(), 1U);
    EXPECT_EQ(found[0].misreport.top(), 2U);
    EXPECT_EQ(found[0].others, (TopVector{2}));
    EXPECT_EQ(found[0].truthful_outcome, 0U);
    EXPECT_EQ(found[0].manipulated_outcome, 2U);
}

TEST(ProfitableManipulations, MedianScanIsSound)
{
    const auto rule = Rule::median(3, {0});
    const Preference truth({2, 1, 0});
    const auto found = find_profitable_manipulations(rule, 0, truth);
    for (const auto& w : found) {
        EXPECT_TRUE(truth.prefers(eval(rule, w.manipulated_tops()), eval(rule, w.truthful_tops())));
    }
    // median{2,s,0} = s, while a report r < 2 yields min(r,s) <= s.
    EXPECT_TRUE(found.empty());
    std::size_t total = 0;
    for (const auto& p : enumerate_preferences(rule.space())) {
        total += find_profitable_manipulations(rule, 0, p).size();
    }
    EXPECT_GT(total, 0U);
}

TEST(ObviousManipulations, StatusQuoAndDictatorshipAreNom)
{
    for (Alternative a = 0; a < 3; ++a) {
        EXPECT_TRUE(find_obvious_manipulations(Rule::status_quo(2, AlternativeSpace::linear(3), a)).empty());
        EXPECT_TRUE(find_obvious_manipulations(Rule::status_quo(3, AlternativeSpace::linear(3), a)).empty());
    }
    EXPECT_TRUE(find_obvious_manipulations(Rule::dictatorship(3, AlternativeSpace::linear(3), 2)).empty());
}

TEST(ObviousManipulations, MedianWithLowBallotsIsNotNom)
{
    const auto rule = Rule::median(3, {0, 0});
    const auto scan = find_obvious_manipulations(rule);
    EXPECT_FALSE(scan.empty());
    EXPECT_GT(scan.count(ManipulationKind::worst_case), 0U);
    EXPECT_FALSE(is_nom_veto(rule));
    for (const auto& w : scan.witnesses) {
        EXPECT_TRUE(w.truth.prefers(w.manipulated_outcome, w.truthful_outcome));
        EXPECT_EQ(eval(rule, w.truthful_tops()), w.truthful_outcome);
        EXPECT_EQ(eval(rule, w.manipulated_tops()), w.manipulated_outcome);
    }
    // First witness is the first in scan order for agent 0.
    EXPECT_EQ(scan.witnesses.front().agent, 0U);
    EXPECT_EQ(scan.first(0, scan.witnesses.front().kind), &scan.witnesses.front());
}

TEST(ObviousManipulations, AgreesWithFullMisreportDefinition)
{
    const auto check = [](const Rule& rule) {
        const auto scan = find_obvious_manipulations(rule);
        const auto reference = brute::obvious_manipulations(rule);
        ASSERT_EQ(scan.empty(), reference.nom()) << rule.tag();
        ASSERT_EQ(scan.count(ManipulationKind::worst_case) == 0, reference.worst == 0);
        ASSERT_EQ(scan.count(ManipulationKind::best_case) == 0, reference.best == 0);
    };
    for (const auto& rule : all_tables(2, 2)) {
        check(rule);
    }
    for (const auto& rule : all_median_schemes(3, 3)) {
        check(rule);
    }
    for (const auto& rule : all_ballot_families(2, 3)) {
        check(rule);
    }
    for (const auto& rule : all_quota_families(3, 2)) {
        check(rule);
    }
}

TEST(ObviousManipulations, RefusesBeyondBudget)
{
    Budget tight;
    tight.max_preferences = 5;
    EXPECT_THROW(find_obvious_manipulations(Rule::median(3, {0, 0}), tight), BudgetExceeded);
}

// The veto test over every tops-only table at n=2, m=2 and every onto table at
// n=2, m=3. Non-onto tables at m=3 fall outside the ontoness hypothesis;
// full enumeration finds exactly 6 of 19683 where the veto test and the
// definition disagree, and those same 6 are the only tables with a
// best-case witness but no worst-case witness.
TEST(VetoCharacterization, VetoTestMatchesDefinitionOnEveryTable)
{
    for (const auto& rule : all_tables(2, 2)) {
        const auto scan = find_obvious_manipulations(rule);
        ASSERT_EQ(is_nom_veto(rule), scan.empty());
        ASSERT_FALSE(scan.count(ManipulationKind::best_case) > 0 && scan.count(ManipulationKind::worst_case) == 0);
    }
    std::size_t non_onto_disagreements = 0;
    std::size_t non_onto_best_only = 0;
    for (const auto& rule : all_tables(2, 3)) {
        const auto table = OutcomeTable::tabulate(rule);
        const auto scan = find_obvious_manipulations(rule, table);
        const bool veto = veto_sets(table).every_veto_strong();
        const bool best_only =
            scan.count(ManipulationKind::best_case) > 0 && scan.count(ManipulationKind::worst_case) == 0;
        if (is_onto_tops(rule)) {
            ASSERT_EQ(veto, scan.empty());
            ASSERT_FALSE(best_only);
        } else {
            non_onto_disagreements += veto != scan.empty() ? 1 : 0;
            non_onto_best_only += best_only ? 1 : 0;
        }
    }
    EXPECT_EQ(non_onto_disagreements, 6U);
    EXPECT_EQ(non_onto_best_only, 6U);
}

TEST(VetoCharacterization, NoVetoersImpliesNom)
{
    for (const auto& rule : all_committee_families(3, 2)) {
        if (veto_sets(rule).no_vetoers()) {
            ASSERT_TRUE(find_obvious_manipulations(rule).empty());
        }
    }
}
