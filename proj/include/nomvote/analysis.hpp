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

#ifndef NOMVOTE_ANALYSIS_HPP
#define NOMVOTE_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nomvote/domain.hpp"
#include "nomvote/error.hpp"
#include "nomvote/rules.hpp"

namespace nomvote {

/**
 * A rule evaluated once at every top vector.
 *
 * All brute-force analyses work off this table: an agent's report and the
 * others' subprofile are recombined into a lexicographic index instead of
 * re-evaluating the rule.
 */
class OutcomeTable
{
public:
    static OutcomeTable tabulate(const Rule& rule, const Budget& budget = {})
    {
        require_valid(rule);
        budget.require_profiles(top_vector_count(rule.alternatives(), rule.agents()), "tabulate " + rule.tag());
        OutcomeTable table(rule.agents(), rule.alternatives());
        table.outcomes_.reserve(static_cast<std::size_t>(top_vector_count(rule.alternatives(), rule.agents())));
        for_each_top_vector(rule.alternatives(), rule.agents(),
                            [&](const TopVector& t) { table.outcomes_.push_back(eval(rule, t)); });
        return table;
    }

    std::size_t agents() const { return agents_; }
    std::size_t alternatives() const { return alternatives_; }
    std::size_t size() const { return outcomes_.size(); }

    Alternative at(std::size_t index) const { return outcomes_[index]; }
    Alternative at(std::span<const Alternative> tops) const { return outcomes_[top_vector_index(tops, alternatives_)]; }

    /// Number of subprofiles of the other agents, m^(n-1).
    std::size_t others_count() const { return outcomes_.size() / alternatives_; }

    /// Outcome when `agent` reports top `report` and the others report the
    /// subprofile with lexicographic rank `others`.
    Alternative with_report(Agent agent, Alternative report, std::size_t others) const
    {
        const std::size_t low_span = stride(agent);
        const std::size_t high = others / low_span;
        const std::size_t low = others % low_span;
        return outcomes_[(high * alternatives_ + report) * low_span + low];
    }

    TopVector others_at(std::size_t others) const { return top_vector_at(others, alternatives_, agents_ - 1); }

private:
    OutcomeTable(std::size_t agents, std::size_t alternatives) : agents_(agents), alternatives_(alternatives) {}

    // m^(n-1-agent): weight of `agent`'s digit in the full index.
    std::size_t stride(Agent agent) const
    {
        std::size_t s = 1;
        for (std::size_t j = agent + 1; j < agents_; ++j) {
            s *= alternatives_;
        }
        return s;
    }

    std::size_t agents_;
    std::size_t alternatives_;
    std::vector<Alternative> outcomes_;
};

/// O(P_i): outcomes reachable when agent `agent` reports a preference with top `top`.
struct OptionSet
{
    Agent agent = 0;
    Alternative top = 0;
    AlternativeSet members;

    friend bool operator==(const OptionSet&, const OptionSet&) = default;
};

/// Option sets of `agent` for every possible top, indexed by top.
inline std::vector<AlternativeSet> option_sets(const OutcomeTable& table, Agent agent)
{
    std::vector<AlternativeSet> out(table.alternatives(), AlternativeSet(table.alternatives()));
    for (Alternative t = 0; t < table.alternatives(); ++t) {
        for (std::size_t o = 0; o < table.others_count(); ++o) {
            out[t].insert(table.with_report(agent, t, o));
        }
    }
    return out;
}

inline OptionSet option_set(const Rule& rule, Agent agent, Alternative top, const Budget& budget = {})
{
    if (agent >= rule.agents() || !rule.space().contains(top)) {
        throw InvalidArgument("option_set: agent or top out of range");
    }
    const auto table = OutcomeTable::tabulate(rule, budget);
    AlternativeSet members(rule.alternatives());
    for (std::size_t o = 0; o < table.others_count(); ++o) {
        members.insert(table.with_report(agent, top, o));
    }
    return {agent, top, std::move(members)};
}

/// Preference-level entry point; depends on `truth` only through its top.
inline OptionSet option_set(const Rule& rule, Agent agent, const Preference& truth, const Budget& budget = {})
{
    return option_set(rule, agent, truth.top(), budget);
}

/// Closed-form option set of a median voter scheme (three-case interval).
inline AlternativeSet option_set_closed_mvs(const MedianScheme& median, std::size_t alternatives, Alternative top)
{
    if (median.alpha.empty() || top >= alternatives) {
        throw InvalidArgument("option_set_closed_mvs: bad arguments");
    }
    const Alternative low = median.alpha.front();
    const Alternative high = median.alpha.back();
    if (top < low) {
        return AlternativeSet::interval(alternatives, top, high);
    }
    if (top <= high) {
        return AlternativeSet::interval(alternatives, low, high);
    }
    return AlternativeSet::interval(alternatives, low, top);
}

/**
 * Closed-form option set of agent `agent` in a generalized median voter
 * scheme, with p_{N\{i}} and p_{{i}} in the roles of the extreme ballots.
 * Requires p_{N\{i}} <= p_{{i}}; throws AssumptionViolated otherwise.
 */
inline AlternativeSet option_set_closed_gmv(const BallotFamily& p, std::size_t agents, std::size_t alternatives,
                                            Agent agent, Alternative top)
{
    if (agent >= agents || top >= alternatives || p.ballots.size() != (std::size_t{1} << agents)) {
        throw InvalidArgument("option_set_closed_gmv: bad arguments");
    }
    const Coalition self = Coalition{1} << agent;
    const Alternative low = p.at(grand_coalition(agents) & ~self);
    const Alternative high = p.at(self);
    if (high < low) {
        throw AssumptionViolated("option_set_closed_gmv: p_{N\\{" + std::to_string(agent) + "}} = " +
                                 std::to_string(low) + " exceeds p_{{" + std::to_string(agent) +
                                 "}} = " + std::to_string(high));
    }
    if (top < low) {
        return AlternativeSet::interval(alternatives, top, high);
    }
    if (top <= high) {
        return AlternativeSet::interval(alternatives, low, high);
    }
    return AlternativeSet::interval(alternatives, low, top);
}

/// Closed-form option set for median and generalized median rules.
inline OptionSet option_set_closed(const Rule& rule, Agent agent, Alternative top)
{
    require_valid(rule);
    if (agent >= rule.agents() || !rule.space().contains(top)) {
        throw InvalidArgument("option_set_closed: agent or top out of range");
    }
    if (const auto* median = rule.get_if<MedianScheme>()) {
        return {agent, top, option_set_closed_mvs(*median, rule.alternatives(), top)};
    }
    if (const auto* p = rule.get_if<BallotFamily>()) {
        return {agent, top, option_set_closed_gmv(*p, rule.agents(), rule.alternatives(), agent, top)};
    }
    throw UnsupportedFamily("no closed-form option set for " + rule.tag() + " rules");
}

/// Veto structure of one agent.
struct AgentVetoes
{
    /// V_i: alternatives excluded from some option set of the agent.
    AlternativeSet vetoed;
    /// SV_i: alternatives excluded from the option set of every top other than themselves.
    AlternativeSet strongly_vetoed;
    /// For each alternative x, the tops t with x not in O(t) (empty when x is not vetoed).
    std::vector<std::vector<Alternative>> vetoing_tops;

    bool every_veto_strong() const { return vetoed == strongly_vetoed; }
    friend bool operator==(const AgentVetoes&, const AgentVetoes&) = default;
};

struct VetoReport
{
    std::vector<AgentVetoes> agents;

    bool every_veto_strong() const
    {
        return std::all_of(agents.begin(), agents.end(), [](const AgentVetoes& a) { return a.every_veto_strong(); });
    }

    bool no_vetoers() const
    {
        return std::all_of(agents.begin(), agents.end(), [](const AgentVetoes& a) { return a.vetoed.empty(); });
    }

    friend bool operator==(const VetoReport&, const VetoReport&) = default;
};

/// Veto structure of one agent from its option sets (indexed by top).
inline AgentVetoes vetoes_from_option_sets(const std::vector<AlternativeSet>& by_top)
{
    const std::size_t m = by_top.size();
    AgentVetoes out{AlternativeSet(m), AlternativeSet(m), std::vector<std::vector<Alternative>>(m)};
    for (Alternative x = 0; x < m; ++x) {
        bool excluded_by_every_other_top = true;
        for (Alternative t = 0; t < m; ++t) {
            const bool excluded = !by_top[t].contains(x);
            if (excluded) {
                out.vetoed.insert(x);
                out.vetoing_tops[x].push_back(t);
            } else if (t != x) {
                excluded_by_every_other_top = false;
            }
        }
        if (excluded_by_every_other_top) {
            out.strongly_vetoed.insert(x);
        }
    }
    return out;
}

inline VetoReport veto_sets(const OutcomeTable& table)
{
    VetoReport report;
    for (Agent i = 0; i < table.agents(); ++i) {
        report.agents.push_back(vetoes_from_option_sets(option_sets(table, i)));
    }
    return report;
}

/// Brute-force V_i and SV_i for every agent.
inline VetoReport veto_sets(const Rule& rule, const Budget& budget = {})
{
    return veto_sets(OutcomeTable::tabulate(rule, budget));
}

namespace detail {

inline AgentVetoes closed_vetoes_mvs(const MedianScheme& median, std::size_t m)
{
    std::vector<AlternativeSet> by_top;
    for (Alternative t = 0; t < m; ++t) {
        by_top.push_back(option_set_closed_mvs(median, m, t));
    }
    auto out = vetoes_from_option_sets(by_top);
    // x in V_i iff x < alpha_1 or x > alpha_{n-1}.
    out.vetoed = AlternativeSet(m);
    for (Alternative x = 0; x < m; ++x) {
        if (x < median.alpha.front() || x > median.alpha.back()) {
            out.vetoed.insert(x);
        }
    }
    return out;
}

inline AgentVetoes closed_vetoes_gmv(const Rule& rule, const BallotFamily& p, Agent agent, const Budget& budget)
{
    const std::size_t n = rule.agents();
    const std::size_t m = rule.alternatives();
    const Coalition self = Coalition{1} << agent;
    const Alternative low = p.at(grand_coalition(n) & ~self);
    const Alternative high = p.at(self);
    if (high < low) {
        // V_i = X; strong vetoes need the brute-force option sets.
        auto out = vetoes_from_option_sets(option_sets(OutcomeTable::tabulate(rule, budget), agent));
        out.vetoed = AlternativeSet::full(m);
        return out;
    }
    std::vector<AlternativeSet> by_top;
    for (Alternative t = 0; t < m; ++t) {
        by_top.push_back(option_set_closed_gmv(p, n, m, agent, t));
    }
    auto out = vetoes_from_option_sets(by_top);
    out.vetoed = AlternativeSet(m);
    for (Alternative x = 0; x < m; ++x) {
        if (x < low || x > high) {
            out.vetoed.insert(x);
        }
    }
    return out;
}

/// S in V_i iff some object k has either k in S and i in every winning
/// coalition, or k not in S and {i} winning.
inline AlternativeSet closed_vetoed_committees(const CommitteeFamily& w, std::size_t agents, std::size_t objects,
                                               Agent agent)
{
    const Coalition self = Coalition{1} << agent;
    std::vector<bool> in_every(objects);
    std::vector<bool> singleton_wins(objects);
    for (std::size_t k = 0; k < objects; ++k) {
        Coalition common = grand_coalition(agents);
        for (Coalition m : w.minimal[k]) {
            common &= m;
        }
        in_every[k] = (common & self) != 0;
        singleton_wins[k] = w.wins(k, self);
    }
    const std::size_t size = std::size_t{1} << objects;
    AlternativeSet out(size);
    for (Alternative s = 0; s < size; ++s) {
        for (std::size_t k = 0; k < objects; ++k) {
            const bool member = (s >> k) & 1U;
            if ((member && in_every[k]) || (!member && singleton_wins[k])) {
                out.insert(s);
                break;
            }
        }
    }
    return out;
}

} // namespace detail

/**
 * Veto sets from the closed-form characterizations of median, generalized
 * median, committee and quota rules. Strong vetoes come from closed-form
 * option sets where those exist and from brute force otherwise.
 */
inline VetoReport veto_sets_closed(const Rule& rule, const Budget& budget = {})
{
    require_valid(rule);
    VetoReport report;
    if (const auto* median = rule.get_if<MedianScheme>()) {
        for (Agent i = 0; i < rule.agents(); ++i) {
            report.agents.push_back(detail::closed_vetoes_mvs(*median, rule.alternatives()));
        }
        return report;
    }
    if (const auto* p = rule.get_if<BallotFamily>()) {
        for (Agent i = 0; i < rule.agents(); ++i) {
            report.agents.push_back(detail::closed_vetoes_gmv(rule, *p, i, budget));
        }
        return report;
    }
    if (rule.get_if<CommitteeFamily>() != nullptr || rule.get_if<QuotaFamily>() != nullptr) {
        const Rule committees = rule.get_if<QuotaFamily>() != nullptr ? quota_to_committees(rule) : rule;
        const auto& w = *committees.get_if<CommitteeFamily>();
        const auto table = OutcomeTable::tabulate(rule, budget);
        for (Agent i = 0; i < rule.agents(); ++i) {
            auto vetoes = vetoes_from_option_sets(option_sets(table, i));
            vetoes.vetoed = detail::closed_vetoed_committees(w, rule.agents(), rule.space().objects(), i);
            report.agents.push_back(std::move(vetoes));
        }
        return report;
    }
    throw UnsupportedFamily("no closed-form veto sets for " + rule.tag() + " rules");
}

/// Veto-based NOM test for tops-only rules: SV_i = V_i for every agent.
inline bool is_nom_veto(const Rule& rule, const Budget& budget = {}) { return veto_sets(rule, budget).every_veto_strong(); }

enum class ManipulationKind { plain, worst_case, best_case };

inline const char* to_string(ManipulationKind kind)
{
    switch (kind) {
    case ManipulationKind::plain:
        return "plain";
    case ManipulationKind::worst_case:
        return "worst_case";
    case ManipulationKind::best_case:
        return "best_case";
    }
    return "?";
}

/**
 * A profitable misreport by `agent` with true preference `truth`.
 *
 * `others` is the (first) subprofile of the other agents' tops at which the
 * misreport strictly profits. For worst/best witnesses the two option sets
 * being compared are carried along.
 */
struct ManipulationWitness
{
    Agent agent = 0;
    Preference truth;
    Preference misreport;
    ManipulationKind kind = ManipulationKind::plain;
    TopVector others;
    Alternative truthful_outcome = 0;
    Alternative manipulated_outcome = 0;
    AlternativeSet truthful_options;
    AlternativeSet misreport_options;

    /// The full top vector with the agent's truthful top inserted.
    TopVector truthful_tops() const
    {
        TopVector out = others;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(agent), truth.top());
        return out;
    }

    TopVector manipulated_tops() const
    {
        TopVector out = others;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(agent), misreport.top());
        return out;
    }
};

/// All obvious-manipulation witnesses of a rule in scan order
/// (agent, true preference lexicographic, misreport top, worst before best).
struct ManipulationScan
{
    std::vector<ManipulationWitness> witnesses;

    bool empty() const { return witnesses.empty(); }

    std::size_t count(ManipulationKind kind) const
    {
        return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(),
                                                      [&](const auto& w) { return w.kind == kind; }));
    }

    std::size_t count(Agent agent, ManipulationKind kind) const
    {
        return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(), [&](const auto& w) {
            return w.agent == agent && w.kind == kind;
        }));
    }

    /// Lexicographically first witness for (agent, kind), if any.
    const ManipulationWitness* first(Agent agent, ManipulationKind kind) const
    {
        for (const auto& w : witnesses) {
            if (w.agent == agent && w.kind == kind) {
                return &w;
            }
        }
        return nullptr;
    }
};

namespace detail {

/// First subprofile rank where reporting `report` instead of the truth strictly profits.
inline std::optional<std::size_t> first_profit(const OutcomeTable& table, Agent agent, const Preference& truth,
                                               Alternative report)
{
    for (std::size_t o = 0; o < table.others_count(); ++o) {
        if (truth.prefers(table.with_report(agent, report, o), table.with_report(agent, truth.top(), o))) {
            return o;
        }
    }
    return std::nullopt;
}

inline void check_preference_budget(const Rule& rule, const Budget& budget, const std::string& what)
{
    budget.require_preferences(detail::saturating_factorial(rule.alternatives()), what);
}

} // namespace detail

/**
 * Every (misreport, subprofile) pair at which agent `agent` with true
 * preference `truth` strictly gains. Misreports are scanned per distinct
 * top, each represented by its canonical preference.
 */
inline std::vector<ManipulationWitness> find_profitable_manipulations(const Rule& rule, Agent agent,
                                                                      const Preference& truth,
                                                                      const Budget& budget = {})
{
    if (agent >= rule.agents() || truth.size() != rule.alternatives()) {
        throw InvalidArgument("find_profitable_manipulations: agent or preference does not match the rule");
    }
    detail::check_preference_budget(rule, budget, "find_profitable_manipulations");
    const auto table = OutcomeTable::tabulate(rule, budget);
    std::vector<ManipulationWitness> out;
    for (Alternative report = 0; report < rule.alternatives(); ++report) {
        if (report == truth.top()) {
            continue;
        }
        for (std::size_t o = 0; o < table.others_count(); ++o) {
            const Alternative honest = table.with_report(agent, truth.top(), o);
            const Alternative lied = table.with_report(agent, report, o);
            if (truth.prefers(lied, honest)) {
                ManipulationWitness w;
                w.agent = agent;
                w.truth = truth;
                w.misreport = canonical_preference(report, rule.space());
                w.kind = ManipulationKind::plain;
                w.others = table.others_at(o);
                w.truthful_outcome = honest;
                w.manipulated_outcome = lied;
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

inline ManipulationScan find_obvious_manipulations(const Rule& rule, const OutcomeTable& table,
                                                   const Budget& budget = {})
{
    detail::check_preference_budget(rule, budget, "find_obvious_manipulations");
    const auto preferences = enumerate_preferences(rule.space(), budget);
    ManipulationScan scan;
    for (Agent i = 0; i < table.agents(); ++i) {
        const auto options = option_sets(table, i);
        for (const auto& truth : preferences) {
            const Alternative top = truth.top();
            const Alternative honest_worst = worst_in(truth, options[top]);
            const Alternative honest_best = best_in(truth, options[top]);
            for (Alternative report = 0; report < table.alternatives(); ++report) {
                if (report == top) {
                    continue;
                }
                const auto profit = detail::first_profit(table, i, truth, report);
                if (!profit) {
                    continue;
                }
                const bool worst = truth.prefers(worst_in(truth, options[report]), honest_worst);
                const bool best = truth.prefers(best_in(truth, options[report]), honest_best);
                if (!worst && !best) {
                    continue;
                }
                ManipulationWitness w;
                w.agent = i;
                w.truth = truth;
                w.misreport = canonical_preference(report, rule.space());
                w.others = table.others_at(*profit);
                w.truthful_outcome = table.with_report(i, top, *profit);
                w.manipulated_outcome = table.with_report(i, report, *profit);
                w.truthful_options = options[top];
                w.misreport_options = options[report];
                if (worst) {
                    w.kind = ManipulationKind::worst_case;
                    scan.witnesses.push_back(w);
                }
                if (best) {
                    w.kind = ManipulationKind::best_case;
                    scan.witnesses.push_back(std::move(w));
                }
            }
        }
    }
    return scan;
}

/// Exhaustive obvious-manipulation search; empty result iff the rule is NOM.
inline ManipulationScan find_obvious_manipulations(const Rule& rule, const Budget& budget = {})
{
    return find_obvious_manipulations(rule, OutcomeTable::tabulate(rule, budget), budget);
}

} // namespace nomvote

#endif // NOMVOTE_ANALYSIS_HPP
