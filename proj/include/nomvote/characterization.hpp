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

#ifndef NOMVOTE_CHARACTERIZATION_HPP
#define NOMVOTE_CHARACTERIZATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nomvote/analysis.hpp"
#include "nomvote/domain.hpp"
#include "nomvote/oracle.hpp"
#include "nomvote/rules.hpp"

namespace nomvote {

/// Verdict of a closed-form NOM test on rule parameters.
struct NomVerdict
{
    NomVerdict() = default;
    NomVerdict(bool nom_, std::string rationale_, bool dictatorial_ = false, std::optional<Agent> dictator_ = {})
        : nom(nom_), rationale(std::move(rationale_)), dictatorial(dictatorial_), dictator(dictator_)
    {
    }

    bool nom = false;
    /// Which clause decided the verdict; never empty.
    std::string rationale;
    bool dictatorial = false;
    std::optional<Agent> dictator;
};

namespace detail {

inline std::string braces(Alternative x, Alternative y) { return "{" + std::to_string(x) + "," + std::to_string(y) + "}"; }

/// x in {lo, lo+1}.
inline bool near_low(Alternative x, Alternative lo) { return x == lo || x == lo + 1; }

/// x in {hi-1, hi}.
inline bool near_high(Alternative x, Alternative hi) { return x == hi || x + 1 == hi; }

} // namespace detail

/// Median voter scheme: NOM iff alpha_1 in {a, a+1} and alpha_{n-1} in {b-1, b}.
inline NomVerdict nom_predicate_mvs(const MedianScheme& median, std::size_t alternatives)
{
    if (median.alpha.empty() || alternatives < 2) {
        throw InvalidArgument("nom_predicate_mvs: bad arguments");
    }
    const Alternative a = 0;
    const Alternative b = static_cast<Alternative>(alternatives - 1);
    const Alternative first = median.alpha.front();
    const Alternative last = median.alpha.back();
    const std::string n1 = std::to_string(median.alpha.size());
    if (!detail::near_low(first, a)) {
        return {false, "alpha_1=" + std::to_string(first) + " not in " + detail::braces(a, a + 1)};
    }
    if (!detail::near_high(last, b)) {
        return {false, "alpha_" + n1 + "=" + std::to_string(last) + " not in " + detail::braces(b - 1, b)};
    }
    return {true, "alpha_1=" + std::to_string(first) + " in " + detail::braces(a, a + 1) + " and alpha_" + n1 + "=" +
                      std::to_string(last) + " in " + detail::braces(b - 1, b)};
}

/**
 * Generalized median voter scheme. Dictatorial families (p_{{i}} = a and
 * p_{N\{i}} = b for some i) are NOM; otherwise NOM iff for each agent,
 * p_{N\{i}} in {a, a+1} and p_{{i}} in {b-1, b}.
 */
inline NomVerdict nom_predicate_gmv(const BallotFamily& p, std::size_t agents, std::size_t alternatives)
{
    if (agents < 2 || agents > max_agents || p.ballots.size() != (std::size_t{1} << agents)) {
        throw InvalidArgument("nom_predicate_gmv: bad arguments");
    }
    const Alternative a = 0;
    const Alternative b = static_cast<Alternative>(alternatives - 1);
    const Coalition all = grand_coalition(agents);
    for (Agent i = 0; i < agents; ++i) {
        const Coalition self = Coalition{1} << i;
        if (p.at(self) == a && p.at(all & ~self) == b) {
            return {true, "dictatorial: agent " + std::to_string(i) + " has p_{i}=a and p_{N\\i}=b", true, i};
        }
    }
    for (Agent i = 0; i < agents; ++i) {
        const Coalition self = Coalition{1} << i;
        const Alternative without = p.at(all & ~self);
        const Alternative alone = p.at(self);
        const std::string who = "agent " + std::to_string(i) + ": ";
        if (!detail::near_low(without, a)) {
            return {false, who + "p_{N\\i}=" + std::to_string(without) + " not in " + detail::braces(a, a + 1)};
        }
        if (!detail::near_high(alone, b)) {
            return {false, who + "p_{i}=" + std::to_string(alone) + " not in " + detail::braces(b - 1, b)};
        }
    }
    return {true, "every agent has p_{N\\i} in " + detail::braces(a, a + 1) + " and p_{i} in " +
                      detail::braces(b - 1, b)};
}

/**
 * Voting by committees. Dictatorial families (W_k = {{i}} for every k) are
 * NOM; otherwise NOM iff for every object no agent belongs to all winning
 * coalitions and no singleton wins.
 */
inline NomVerdict nom_predicate_vbc(const CommitteeFamily& w, std::size_t agents)
{
    if (agents < 2 || agents > max_agents || w.minimal.empty()) {
        throw InvalidArgument("nom_predicate_vbc: bad arguments");
    }
    for (Agent i = 0; i < agents; ++i) {
        const Coalition self = Coalition{1} << i;
        bool dictator = true;
        for (const auto& committee : w.minimal) {
            dictator = dictator && committee.size() == 1 && committee.front() == self;
        }
        if (dictator) {
            return {true, "dictatorial: every committee is {{" + std::to_string(i) + "}}", true, i};
        }
    }
    for (std::size_t k = 0; k < w.minimal.size(); ++k) {
        Coalition common = grand_coalition(agents);
        for (Coalition m : w.minimal[k]) {
            common &= m;
            if (coalition_size(m) == 1) {
                return {false, "singleton {" + std::to_string(std::countr_zero(m)) + "} wins object " +
                                   std::to_string(k)};
            }
        }
        if (common != 0) {
            return {false, "agent " + std::to_string(std::countr_zero(common)) +
                               " belongs to every winning coalition of object " + std::to_string(k)};
        }
    }
    return {true, "every committee has empty intersection and no winning singleton"};
}

/// Voting by quota: NOM iff 2 <= q_k <= n-1 for every object.
inline NomVerdict nom_predicate_quota(const QuotaFamily& q, std::size_t agents)
{
    for (std::size_t k = 0; k < q.quotas.size(); ++k) {
        if (q.quotas[k] < 2 || q.quotas[k] + 1 > agents) {
            return {false, "q_" + std::to_string(k) + "=" + std::to_string(q.quotas[k]) + " not in [2," +
                               std::to_string(agents - 1) + "]"};
        }
    }
    return {true, "every quota lies in [2," + std::to_string(agents - 1) + "]"};
}

/**
 * Family predicate for a rule, where one exists: the four closed forms,
 * plus status quo rules (always NOM) and dictatorships (trivially NOM).
 * Tables have none.
 */
inline std::optional<NomVerdict> nom_predicate(const Rule& rule)
{
    require_valid(rule);
    if (const auto* f = rule.get_if<MedianScheme>()) {
        return nom_predicate_mvs(*f, rule.alternatives());
    }
    if (const auto* f = rule.get_if<BallotFamily>()) {
        return nom_predicate_gmv(*f, rule.agents(), rule.alternatives());
    }
    if (const auto* f = rule.get_if<CommitteeFamily>()) {
        return nom_predicate_vbc(*f, rule.agents());
    }
    if (const auto* f = rule.get_if<QuotaFamily>()) {
        return nom_predicate_quota(*f, rule.agents());
    }
    if (rule.get_if<StatusQuo>() != nullptr) {
        return NomVerdict{true, "status quo rule: every veto is strong"};
    }
    if (const auto* f = rule.get_if<Dictatorship>()) {
        return NomVerdict{true, "dictatorship", true, f->dictator};
    }
    return std::nullopt;
}

namespace detail {

inline void require_onto(const Rule& rule, const Budget& budget)
{
    if (!is_onto_tops(rule, budget)) {
        throw HypothesisNotVerified("rule is not onto");
    }
}

inline void require_efficient(const Rule& rule, const Budget& budget)
{
    if (!is_efficient(rule, budget).holds) {
        throw HypothesisNotVerified("rule is not efficient");
    }
}

} // namespace detail

/// NOM test from a veto report, for rules already known to be
/// efficient, onto and tops-only: (i) at most one agent vetoes anything and
/// its vetoes are strong, or (ii) some y has SV_i = V_i within {y} for all i.
inline NomVerdict nom_corollary_efficient(const VetoReport& vetoes)
{
    std::size_t vetoers = 0;
    bool all_strong = true;
    for (const auto& a : vetoes.agents) {
        vetoers += a.vetoed.empty() ? 0 : 1;
        all_strong = all_strong && a.every_veto_strong();
    }
    if (vetoers <= 1 && all_strong) {
        return {true, "clause (i): " + std::to_string(vetoers) + " vetoer(s), every veto strong"};
    }
    if (all_strong) {
        std::optional<Alternative> shared;
        bool single = true;
        for (const auto& a : vetoes.agents) {
            for (Alternative x : a.vetoed.members()) {
                if (shared && *shared != x) {
                    single = false;
                }
                shared = x;
            }
        }
        if (single) {
            return {true, "clause (ii): every V_i = SV_i within {" + std::to_string(shared.value_or(0)) + "}"};
        }
    }
    if (!all_strong) {
        return {false, "some veto is not strong"};
    }
    return {false, "several agents veto and vetoed alternatives differ"};
}

/// NOM test for efficient, anonymous rules: V_i empty for all i, or
/// some y with SV_i = V_i = {y} for all i.
inline NomVerdict nom_corollary_anon_efficient(const VetoReport& vetoes)
{
    if (vetoes.no_vetoers()) {
        return {true, "no agent vetoes"};
    }
    const auto& first = vetoes.agents.front();
    if (first.vetoed.size() == 1) {
        bool same = true;
        for (const auto& a : vetoes.agents) {
            same = same && a.vetoed == first.vetoed && a.strongly_vetoed == first.vetoed;
        }
        if (same) {
            const Alternative y = first.vetoed.members().front();
            return {true, "every agent has SV_i = V_i = {" + std::to_string(y) + "}"};
        }
    }
    return {false, "vetoes are neither absent nor a common strong veto of one alternative"};
}

/// Verifies efficiency and ontoness with the oracles, then applies the
/// corollary. Throws HypothesisNotVerified if a hypothesis fails.
inline NomVerdict nom_corollary_efficient(const Rule& rule, const Budget& budget = {})
{
    detail::require_onto(rule, budget);
    detail::require_efficient(rule, budget);
    return nom_corollary_efficient(veto_sets(rule, budget));
}

/// As above, additionally verifying anonymity.
inline NomVerdict nom_corollary_anon_efficient(const Rule& rule, const Budget& budget = {})
{
    detail::require_onto(rule, budget);
    detail::require_efficient(rule, budget);
    if (!is_anonymous(rule, budget).holds) {
        throw HypothesisNotVerified("rule is not anonymous");
    }
    return nom_corollary_anon_efficient(veto_sets(rule, budget));
}

} // namespace nomvote

#endif // NOMVOTE_CHARACTERIZATION_HPP
