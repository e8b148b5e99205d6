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

#ifndef NOMVOTE_RULES_HPP
#define NOMVOTE_RULES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "nomvote/domain.hpp"
#include "nomvote/error.hpp"

namespace nomvote {

/// Median of the agents' tops and n-1 fixed ballots `alpha` (nondecreasing).
struct MedianScheme
{
    std::vector<Alternative> alpha;
    friend bool operator==(const MedianScheme&, const MedianScheme&) = default;
};

/// Monotonic family of fixed ballots p_S, indexed by coalition mask
/// (2^n entries). p_N = lowest, p_{} = highest, T within Q implies p_Q <= p_T.
struct BallotFamily
{
    std::vector<Alternative> ballots;

    Alternative at(Coalition s) const { return ballots.at(s); }
    friend bool operator==(const BallotFamily&, const BallotFamily&) = default;
};

/// One committee per object, each stored as its minimal winning coalitions.
struct CommitteeFamily
{
    std::vector<std::vector<Coalition>> minimal;

    bool wins(std::size_t object, Coalition c) const
    {
        const auto& committee = minimal.at(object);
        return std::any_of(committee.begin(), committee.end(), [c](Coalition m) { return is_subset(m, c); });
    }

    friend bool operator==(const CommitteeFamily&, const CommitteeFamily&) = default;
};

/// Voting by quota: object k wins iff at least quotas[k] agents have it in their top.
struct QuotaFamily
{
    std::vector<std::size_t> quotas;
    friend bool operator==(const QuotaFamily&, const QuotaFamily&) = default;
};

/// Unanimous top wins, otherwise the status quo.
struct StatusQuo
{
    Alternative status_quo = 0;
    friend bool operator==(const StatusQuo&, const StatusQuo&) = default;
};

struct Dictatorship
{
    Agent dictator = 0;
    friend bool operator==(const Dictatorship&, const Dictatorship&) = default;
};

/// Arbitrary tops-only rule: one outcome per top vector, lexicographic order.
struct TopsOnlyTable
{
    std::vector<Alternative> outcomes;
    friend bool operator==(const TopsOnlyTable&, const TopsOnlyTable&) = default;
};

using RuleFamily =
    std::variant<MedianScheme, BallotFamily, CommitteeFamily, QuotaFamily, StatusQuo, Dictatorship, TopsOnlyTable>;

/// A tops-only voting rule over `agents` agents and a space of alternatives.
class Rule
{
public:
    Rule(std::size_t agents, AlternativeSpace space, RuleFamily family)
        : agents_(agents), space_(space), family_(std::move(family))
    {
    }

    static Rule median(std::size_t alternatives, std::vector<Alternative> alpha)
    {
        const std::size_t n = alpha.size() + 1;
        return Rule(n, AlternativeSpace::linear(alternatives), MedianScheme{std::move(alpha)});
    }

    static Rule generalized_median(std::size_t agents, std::size_t alternatives, std::vector<Alternative> ballots)
    {
        return Rule(agents, AlternativeSpace::linear(alternatives), BallotFamily{std::move(ballots)});
    }

    static Rule committees(std::size_t agents, std::size_t objects, std::vector<std::vector<Coalition>> minimal)
    {
        return Rule(agents, AlternativeSpace::subsets(objects), CommitteeFamily{std::move(minimal)});
    }

    static Rule quota(std::size_t agents, std::vector<std::size_t> quotas)
    {
        const std::size_t objects = quotas.size();
        return Rule(agents, AlternativeSpace::subsets(objects), QuotaFamily{std::move(quotas)});
    }

    static Rule status_quo(std::size_t agents, AlternativeSpace space, Alternative a)
    {
        return Rule(agents, space, StatusQuo{a});
    }

    static Rule dictatorship(std::size_t agents, AlternativeSpace space, Agent dictator)
    {
        return Rule(agents, space, Dictatorship{dictator});
    }

    static Rule table(std::size_t agents, AlternativeSpace space, std::vector<Alternative> outcomes)
    {
        return Rule(agents, space, TopsOnlyTable{std::move(outcomes)});
    }

    std::size_t agents() const { return agents_; }
    const AlternativeSpace& space() const { return space_; }
    std::size_t alternatives() const { return space_.size(); }
    const RuleFamily& family() const { return family_; }

    template <typename F>
    const F* get_if() const
    {
        return std::get_if<F>(&family_);
    }

    /// "median", "gmv", "committees", "quota", "status_quo", "dictatorship" or "table".
    std::string tag() const
    {
        static constexpr const char* names[] = {"median",     "gmv",          "committees", "quota",
                                                "status_quo", "dictatorship", "table"};
        return names[family_.index()];
    }

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    std::size_t agents_;
    AlternativeSpace space_;
    RuleFamily family_;
};

/// A failed invariant, addressed by the config field it came from.
struct Violation
{
    std::string path;
    std::string message;

    std::string to_string() const { return path + ": " + message; }
    friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {

inline std::string coalition_label(Coalition c, std::size_t agents)
{
    std::string out;
    for (std::size_t i = 0; i < agents; ++i) {
        out += ((c >> i) & 1U) ? '1' : '0';
    }
    return out;
}

inline void validate_alternative(std::vector<Violation>& out, const std::string& path, Alternative x,
                                 const AlternativeSpace& space)
{
    if (!space.contains(x)) {
        out.push_back({path, "alternative " + std::to_string(x) + " outside 0.." + std::to_string(space.size() - 1)});
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const MedianScheme& f)
{
    const auto& space = rule.space();
    if (!space.is_linear()) {
        out.push_back({"space", "median voter schemes need a linear space"});
    }
    if (f.alpha.size() + 1 != rule.agents()) {
        out.push_back({"alpha", "expected n-1 = " + std::to_string(rule.agents() - 1) + " fixed ballots, got " +
                                    std::to_string(f.alpha.size())});
    }
    for (std::size_t j = 0; j < f.alpha.size(); ++j) {
        validate_alternative(out, "alpha[" + std::to_string(j) + "]", f.alpha[j], space);
        if (j > 0 && f.alpha[j] < f.alpha[j - 1]) {
            out.push_back({"alpha[" + std::to_string(j) + "]", "alpha must be nondecreasing"});
        }
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const BallotFamily& f)
{
    const auto& space = rule.space();
    const std::size_t n = rule.agents();
    if (!space.is_linear()) {
        out.push_back({"space", "generalized median voter schemes need a linear space"});
    }
    if (n > max_agents) {
        return;
    }
    const std::size_t count = std::size_t{1} << n;
    if (f.ballots.size() != count) {
        out.push_back({"ballots", "expected 2^n = " + std::to_string(count) + " ballots, got " +
                                      std::to_string(f.ballots.size())});
        return;
    }
    const auto path = [n](Coalition s) { return "ballots." + coalition_label(s, n); };
    for (Coalition s = 0; s < count; ++s) {
        validate_alternative(out, path(s), f.ballots[s], space);
    }
    const Coalition all = grand_coalition(n);
    if (f.ballots[all] != space.lowest()) {
        out.push_back({path(all), "p_N must equal a (" + std::to_string(space.lowest()) + ")"});
    }
    if (f.ballots[0] != space.highest()) {
        out.push_back({path(0), "p_{} must equal b (" + std::to_string(space.highest()) + ")"});
    }
    // Covering relation of the subset lattice suffices for monotonicity.
    for (Coalition s = 0; s < count; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Coalition bit = Coalition{1} << i;
            if ((s & bit) == 0 && f.ballots[s | bit] > f.ballots[s]) {
                out.push_back({path(s | bit), "monotonicity: p_" + coalition_label(s | bit, n) + " > p_" +
                                                  coalition_label(s, n)});
            }
        }
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const CommitteeFamily& f)
{
    const auto& space = rule.space();
    const std::size_t n = rule.agents();
    if (!space.is_subsets()) {
        out.push_back({"space", "voting by committees needs a subset space"});
        return;
    }
    if (f.minimal.size() != space.objects()) {
        out.push_back({"committees", "expected one committee per object (" + std::to_string(space.objects()) +
                                         "), got " + std::to_string(f.minimal.size())});
        return;
    }
    const Coalition all = n <= max_agents ? grand_coalition(n) : ~Coalition{0};
    for (std::size_t k = 0; k < f.minimal.size(); ++k) {
        const auto& committee = f.minimal[k];
        const std::string base = "committees[" + std::to_string(k) + "]";
        if (committee.empty()) {
            out.push_back({base, "committee must be nonempty"});
        }
        for (std::size_t j = 0; j < committee.size(); ++j) {
            const std::string path = base + "[" + std::to_string(j) + "]";
            const Coalition m = committee[j];
            if (m == 0) {
                out.push_back({path, "coalitions must be nonempty"});
            }
            if (!is_subset(m, all)) {
                out.push_back({path, "coalition names agents outside 1..n"});
            }
            for (std::size_t l = 0; l < j; ++l) {
                const Coalition other = committee[l];
                if (is_subset(other, m) || is_subset(m, other)) {
                    out.push_back({path, "minimal coalitions must form an antichain (comparable with entry " +
                                             std::to_string(l) + ")"});
                }
            }
        }
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const QuotaFamily& f)
{
    const auto& space = rule.space();
    if (!space.is_subsets()) {
        out.push_back({"space", "voting by quota needs a subset space"});
        return;
    }
    if (f.quotas.size() != space.objects()) {
        out.push_back({"quotas", "expected one quota per object (" + std::to_string(space.objects()) + "), got " +
                                     std::to_string(f.quotas.size())});
    }
    for (std::size_t k = 0; k < f.quotas.size(); ++k) {
        if (f.quotas[k] < 1 || f.quotas[k] > rule.agents()) {
            out.push_back({"quotas[" + std::to_string(k) + "]", "quota must lie in 1..n"});
        }
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const StatusQuo& f)
{
    validate_alternative(out, "status_quo", f.status_quo, rule.space());
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const Dictatorship& f)
{
    if (f.dictator >= rule.agents()) {
        out.push_back({"dictator", "agent index outside 0..n-1"});
    }
}

inline void validate_family(std::vector<Violation>& out, const Rule& rule, const TopsOnlyTable& f)
{
    const std::uint64_t count = top_vector_count(rule.alternatives(), rule.agents());
    if (f.outcomes.size() != count) {
        out.push_back({"table", "expected m^n = " + std::to_string(count) + " outcomes, got " +
                                    std::to_string(f.outcomes.size())});
    }
    for (std::size_t j = 0; j < f.outcomes.size(); ++j) {
        validate_alternative(out, "table[" + std::to_string(j) + "]", f.outcomes[j], rule.space());
    }
}

} // namespace detail

/// Checks every parameter invariant; empty result means valid. Never throws.
inline std::vector<Violation> validate(const Rule& rule)
{
    std::vector<Violation> out;
    if (rule.agents() < 2) {
        out.push_back({"n", "at least two agents are required"});
        return out;
    }
    if (rule.agents() > max_agents) {
        out.push_back({"n", "at most " + std::to_string(max_agents) + " agents are supported"});
        return out;
    }
    std::visit([&](const auto& f) { detail::validate_family(out, rule, f); }, rule.family());
    return out;
}

/// Throws InvalidArgument listing all violations, if any.
inline void require_valid(const Rule& rule)
{
    const auto violations = validate(rule);
    if (violations.empty()) {
        return;
    }
    std::string message = "invalid " + rule.tag() + " rule:";
    for (const auto& v : violations) {
        message += " [" + v.to_string() + "]";
    }
    throw InvalidArgument(message);
}

namespace detail {

/// Coalition of agents whose top contains `object`.
inline Coalition supporters(std::span<const Alternative> tops, std::size_t object)
{
    Coalition c = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        if ((tops[i] >> object) & 1U) {
            c |= Coalition{1} << i;
        }
    }
    return c;
}

inline Alternative eval_family(const Rule&, const MedianScheme& f, std::span<const Alternative> tops)
{
    std::vector<Alternative> values(tops.begin(), tops.end());
    values.insert(values.end(), f.alpha.begin(), f.alpha.end());
    const auto middle = values.begin() + static_cast<std::ptrdiff_t>(tops.size() - 1);
    std::nth_element(values.begin(), middle, values.end());
    return *middle;
}

inline Alternative eval_family(const Rule& rule, const BallotFamily& f, std::span<const Alternative> tops)
{
    // min over S of max({t_j : j in S} + {p_S}); S = {} contributes p_{} = b.
    const Coalition count = Coalition{1} << rule.agents();
    Alternative best = f.ballots[0];
    for (Coalition s = 1; s < count; ++s) {
        Alternative worst = f.ballots[s];
        for (std::size_t j = 0; j < tops.size(); ++j) {
            if ((s >> j) & 1U) {
                worst = std::max(worst, tops[j]);
            }
        }
        best = std::min(best, worst);
    }
    return best;
}

inline Alternative eval_family(const Rule& rule, const CommitteeFamily& f, std::span<const Alternative> tops)
{
    Alternative chosen = 0;
    for (std::size_t k = 0; k < rule.space().objects(); ++k) {
        if (f.wins(k, supporters(tops, k))) {
            chosen |= Alternative{1} << k;
        }
    }
    return chosen;
}

inline Alternative eval_family(const Rule& rule, const QuotaFamily& f, std::span<const Alternative> tops)
{
    Alternative chosen = 0;
    for (std::size_t k = 0; k < rule.space().objects(); ++k) {
        if (coalition_size(supporters(tops, k)) >= f.quotas[k]) {
            chosen |= Alternative{1} << k;
        }
    }
    return chosen;
}

inline Alternative eval_family(const Rule&, const StatusQuo& f, std::span<const Alternative> tops)
{
    const bool unanimous = std::all_of(tops.begin(), tops.end(), [&](Alternative t) { return t == tops[0]; });
    return unanimous ? tops[0] : f.status_quo;
}

inline Alternative eval_family(const Rule&, const Dictatorship& f, std::span<const Alternative> tops)
{
    return tops[f.dictator];
}

inline Alternative eval_family(const Rule& rule, const TopsOnlyTable& f, std::span<const Alternative> tops)
{
    return f.outcomes.at(top_vector_index(tops, rule.alternatives()));
}

} // namespace detail

/// Outcome of a valid rule at a top vector.
inline Alternative eval(const Rule& rule, std::span<const Alternative> tops)
{
    if (tops.size() != rule.agents()) {
        throw InvalidArgument("top vector has " + std::to_string(tops.size()) + " entries, rule has " +
                              std::to_string(rule.agents()) + " agents");
    }
    for (Alternative t : tops) {
        if (!rule.space().contains(t)) {
            throw InvalidArgument("top " + std::to_string(t) + " outside the alternative space");
        }
    }
    return std::visit([&](const auto& f) { return detail::eval_family(rule, f, tops); }, rule.family());
}

inline Alternative eval(const Rule& rule, const Profile& profile)
{
    const auto tops = profile.tops();
    return eval(rule, std::span<const Alternative>(tops));
}

/// True iff every alternative is selected at some top vector.
inline bool is_onto_tops(const Rule& rule, const Budget& budget = {})
{
    require_valid(rule);
    budget.require_profiles(top_vector_count(rule.alternatives(), rule.agents()), "is_onto_tops");
    AlternativeSet hit(rule.alternatives());
    for_each_top_vector(rule.alternatives(), rule.agents(), [&](const TopVector& t) { hit.insert(eval(rule, t)); });
    return hit.size() == rule.alternatives();
}

/// Minimal winning coalitions of |M| >= q_k: all coalitions of size exactly q_k.
inline CommitteeFamily quota_to_committees(const QuotaFamily& q, std::size_t agents)
{
    if (agents < 2 || agents > max_agents) {
        throw InvalidArgument("quota_to_committees: unsupported number of agents");
    }
    CommitteeFamily out;
    const Coalition count = Coalition{1} << agents;
    for (std::size_t quota : q.quotas) {
        if (quota < 1 || quota > agents) {
            throw InvalidArgument("quota_to_committees: quota outside 1..n");
        }
        std::vector<Coalition> committee;
        for (Coalition c = 1; c < count; ++c) {
            if (coalition_size(c) == quota) {
                committee.push_back(c);
            }
        }
        out.minimal.push_back(std::move(committee));
    }
    return out;
}

inline Rule quota_to_committees(const Rule& rule)
{
    const auto* q = rule.get_if<QuotaFamily>();
    if (q == nullptr) {
        throw InvalidArgument("quota_to_committees needs a quota rule");
    }
    return Rule(rule.agents(), rule.space(), quota_to_committees(*q, rule.agents()));
}

/**
 * Anonymous ballot family equivalent to a median voter scheme.
 *
 * p_S depends only on |S|: with 1-indexed alpha, p_S = alpha_{n-|S|} for
 * 0 < |S| < n, p_N = a and p_{} = b.
 */
inline BallotFamily gmv_from_median(const MedianScheme& median, std::size_t alternatives)
{
    const std::size_t n = median.alpha.size() + 1;
    if (n < 2 || n > max_agents || alternatives < 2) {
        throw InvalidArgument("gmv_from_median: unsupported dimensions");
    }
    BallotFamily out;
    const Coalition count = Coalition{1} << n;
    out.ballots.resize(count);
    for (Coalition s = 0; s < count; ++s) {
        const std::size_t size = coalition_size(s);
        if (size == 0) {
            out.ballots[s] = static_cast<Alternative>(alternatives - 1);
        } else if (size == n) {
            out.ballots[s] = 0;
        } else {
            out.ballots[s] = median.alpha[n - size - 1];
        }
    }
    return out;
}

inline Rule gmv_from_median(const Rule& rule)
{
    const auto* median = rule.get_if<MedianScheme>();
    if (median == nullptr) {
        throw InvalidArgument("gmv_from_median needs a median rule");
    }
    return Rule(rule.agents(), rule.space(), gmv_from_median(*median, rule.alternatives()));
}

} // namespace nomvote

#endif // NOMVOTE_RULES_HPP
