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

#ifndef NOMVOTE_ORACLE_HPP
#define NOMVOTE_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nomvote/analysis.hpp"
#include "nomvote/domain.hpp"
#include "nomvote/error.hpp"
#include "nomvote/rules.hpp"

// Brute-force checkers for the axioms. These deliberately evaluate the
// definitions directly over (filtered) preference profiles; the only
// shortcut is the tops-only outcome table.

namespace nomvote {

/// Agent `agent` gains by reporting `misreport` at `profile`.
struct ManipulationCounterexample
{
    Agent agent = 0;
    Profile profile;
    Preference misreport;
    Alternative truthful_outcome = 0;
    Alternative manipulated_outcome = 0;
};

/// Every agent strictly prefers `dominating` to the rule's `outcome` at `profile`.
struct EfficiencyCounterexample
{
    Profile profile;
    Alternative outcome = 0;
    Alternative dominating = 0;
};

/// Swapping two agents' tops changes the outcome.
struct AnonymityCounterexample
{
    TopVector tops;
    TopVector permuted;
    Alternative outcome = 0;
    Alternative permuted_outcome = 0;
};

/// For each agent i, a top vector at which the outcome differs from i's top.
struct DictatorshipCounterexample
{
    std::vector<TopVector> per_agent;
};

struct ObviousManipulationCounterexample
{
    ManipulationWitness witness;
};

using Counterexample = std::variant<ManipulationCounterexample, EfficiencyCounterexample, AnonymityCounterexample,
                                    DictatorshipCounterexample, ObviousManipulationCounterexample>;

struct AxiomVerdict
{
    bool holds = true;
    std::optional<Counterexample> counterexample;
    /// Set by is_dictatorial when it holds.
    std::optional<Agent> dictator;
};

using PreferenceFilter = std::function<bool(const Preference&)>;

inline PreferenceFilter universal_domain()
{
    return [](const Preference&) { return true; };
}

inline PreferenceFilter single_peaked_domain(const AlternativeSpace& space)
{
    return [space](const Preference& p) { return is_single_peaked(p, space); };
}

inline PreferenceFilter separable_domain(const AlternativeSpace& space)
{
    return [space](const Preference& p) { return is_separable(p, space); };
}

namespace detail {

/// Odometer over index tuples in [0, radix)^length, lexicographic.
inline bool next_tuple(std::vector<std::size_t>& digits, std::size_t radix)
{
    for (std::size_t j = digits.size(); j-- > 0;) {
        if (++digits[j] < radix) {
            return true;
        }
        digits[j] = 0;
    }
    return false;
}

inline Profile make_profile(const std::vector<Preference>& domain, const std::vector<std::size_t>& digits)
{
    std::vector<Preference> prefs;
    prefs.reserve(digits.size());
    for (std::size_t d : digits) {
        prefs.push_back(domain[d]);
    }
    return Profile(std::move(prefs));
}

} // namespace detail

/**
 * Strategy-proofness on the domain cut out by `filter`: no agent, truthful
 * profile and misreport (both inside the domain) with
 * f(P'_i, P_-i) P_i f(P_i, P_-i). The counterexample is the first in
 * (profile, agent, misreport) lexicographic order.
 */
inline AxiomVerdict is_strategy_proof(const Rule& rule, const PreferenceFilter& filter, const Budget& budget = {})
{
    const auto table = OutcomeTable::tabulate(rule, budget);
    std::vector<Preference> domain;
    for (auto& p : enumerate_preferences(rule.space(), budget)) {
        if (filter(p)) {
            domain.push_back(std::move(p));
        }
    }
    if (domain.empty()) {
        return {};
    }
    const std::size_t n = rule.agents();
    budget.require_profiles(detail::saturating_pow(domain.size(), n), "is_strategy_proof");

    std::vector<std::size_t> digits(n, 0);
    TopVector tops(n);
    do {
        for (std::size_t j = 0; j < n; ++j) {
            tops[j] = domain[digits[j]].top();
        }
        const Alternative honest = table.at(tops);
        for (Agent i = 0; i < n; ++i) {
            const Preference& truth = domain[digits[i]];
            for (std::size_t d = 0; d < domain.size(); ++d) {
                if (domain[d].top() == truth.top()) {
                    continue;
                }
                TopVector lied_tops = tops;
                lied_tops[i] = domain[d].top();
                const Alternative lied = table.at(lied_tops);
                if (truth.prefers(lied, honest)) {
                    return {false,
                            ManipulationCounterexample{i, detail::make_profile(domain, digits), domain[d], honest, lied},
                            std::nullopt};
                }
            }
        }
    } while (detail::next_tuple(digits, domain.size()));
    return {};
}

/// No full preference profile admits an alternative every agent strictly
/// prefers to the outcome. Scans (m!)^n profiles.
inline AxiomVerdict is_efficient(const Rule& rule, const Budget& budget = {})
{
    const auto table = OutcomeTable::tabulate(rule, budget);
    const auto preferences = enumerate_preferences(rule.space(), budget);
    const std::size_t n = rule.agents();
    const std::size_t m = rule.alternatives();
    budget.require_profiles(detail::saturating_pow(preferences.size(), n), "is_efficient");

    std::vector<std::size_t> digits(n, 0);
    TopVector tops(n);
    do {
        for (std::size_t j = 0; j < n; ++j) {
            tops[j] = preferences[digits[j]].top();
        }
        const Alternative outcome = table.at(tops);
        for (Alternative x = 0; x < m; ++x) {
            bool unanimous = true;
            for (std::size_t j = 0; j < n && unanimous; ++j) {
                unanimous = preferences[digits[j]].prefers(x, outcome);
            }
            if (unanimous) {
                return {false, EfficiencyCounterexample{detail::make_profile(preferences, digits), outcome, x},
                        std::nullopt};
            }
        }
    } while (detail::next_tuple(digits, preferences.size()));
    return {};
}

/// Invariance under permutations of the agents. Transpositions generate
/// the symmetric group, so checking every swap of two tops suffices.
inline AxiomVerdict is_anonymous(const Rule& rule, const Budget& budget = {})
{
    const auto table = OutcomeTable::tabulate(rule, budget);
    const std::size_t n = rule.agents();
    std::optional<Counterexample> found;
    for (std::size_t index = 0; index < table.size() && !found; ++index) {
        const TopVector tops = top_vector_at(index, rule.alternatives(), n);
        for (std::size_t i = 0; i < n && !found; ++i) {
            for (std::size_t j = i + 1; j < n && !found; ++j) {
                if (tops[i] == tops[j]) {
                    continue;
                }
                TopVector swapped = tops;
                std::swap(swapped[i], swapped[j]);
                if (table.at(swapped) != table.at(index)) {
                    found = AnonymityCounterexample{tops, swapped, table.at(index), table.at(swapped)};
                }
            }
        }
    }
    if (found) {
        return {false, std::move(found), std::nullopt};
    }
    return {};
}

/// Some agent's top is selected at every top vector.
inline AxiomVerdict is_dictatorial(const Rule& rule, const Budget& budget = {})
{
    const auto table = OutcomeTable::tabulate(rule, budget);
    const std::size_t n = rule.agents();
    DictatorshipCounterexample cx;
    for (Agent i = 0; i < n; ++i) {
        std::optional<TopVector> miss;
        for (std::size_t index = 0; index < table.size(); ++index) {
            const TopVector tops = top_vector_at(index, rule.alternatives(), n);
            if (table.at(index) != tops[i]) {
                miss = tops;
                break;
            }
        }
        if (!miss) {
            return {true, std::nullopt, i};
        }
        cx.per_agent.push_back(std::move(*miss));
    }
    return {false, std::move(cx), std::nullopt};
}

/// NOM straight from the definition: no obvious manipulation exists.
inline AxiomVerdict is_nom_brute(const Rule& rule, const Budget& budget = {})
{
    auto scan = find_obvious_manipulations(rule, budget);
    if (scan.empty()) {
        return {};
    }
    return {false, ObviousManipulationCounterexample{std::move(scan.witnesses.front())}, std::nullopt};
}

namespace detail {

inline bool confirms(const Rule& rule, const ManipulationCounterexample& cx)
{
    const TopVector tops = cx.profile.tops();
    TopVector lied = tops;
    lied.at(cx.agent) = cx.misreport.top();
    const Alternative honest = eval(rule, tops);
    const Alternative gained = eval(rule, lied);
    return honest == cx.truthful_outcome && gained == cx.manipulated_outcome &&
           cx.profile[cx.agent].prefers(gained, honest);
}

inline bool confirms(const Rule& rule, const EfficiencyCounterexample& cx)
{
    if (eval(rule, cx.profile) != cx.outcome) {
        return false;
    }
    for (const auto& p : cx.profile.preferences()) {
        if (!p.prefers(cx.dominating, cx.outcome)) {
            return false;
        }
    }
    return true;
}

inline bool confirms(const Rule& rule, const AnonymityCounterexample& cx)
{
    auto sorted_a = cx.tops;
    auto sorted_b = cx.permuted;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    return sorted_a == sorted_b && eval(rule, cx.tops) == cx.outcome &&
           eval(rule, cx.permuted) == cx.permuted_outcome && cx.outcome != cx.permuted_outcome;
}

inline bool confirms(const Rule& rule, const DictatorshipCounterexample& cx)
{
    if (cx.per_agent.size() != rule.agents()) {
        return false;
    }
    for (Agent i = 0; i < rule.agents(); ++i) {
        if (eval(rule, cx.per_agent[i]) == cx.per_agent[i].at(i)) {
            return false;
        }
    }
    return true;
}

inline bool confirms(const Rule& rule, const ObviousManipulationCounterexample& cx)
{
    const auto& w = cx.witness;
    const Alternative honest = eval(rule, w.truthful_tops());
    const Alternative gained = eval(rule, w.manipulated_tops());
    if (!w.truth.prefers(gained, honest)) {
        return false;
    }
    const auto truthful = option_set(rule, w.agent, w.truth.top()).members;
    const auto lied = option_set(rule, w.agent, w.misreport.top()).members;
    if (truthful != w.truthful_options || lied != w.misreport_options) {
        return false;
    }
    switch (w.kind) {
    case ManipulationKind::worst_case:
        return w.truth.prefers(worst_in(w.truth, lied), worst_in(w.truth, truthful));
    case ManipulationKind::best_case:
        return w.truth.prefers(best_in(w.truth, lied), best_in(w.truth, truthful));
    case ManipulationKind::plain:
        return true;
    }
    return false;
}

} // namespace detail

/// Re-checks a counterexample against the definition it claims to violate,
/// evaluating the rule directly rather than through an outcome table.
inline bool confirms(const Rule& rule, const Counterexample& cx)
{
    return std::visit([&](const auto& c) { return detail::confirms(rule, c); }, cx);
}

} // namespace nomvote

#endif // NOMVOTE_ORACLE_HPP
