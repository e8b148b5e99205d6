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

#ifndef NOMVOTE_SWEEP_HPP
#define NOMVOTE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nomvote/analysis.hpp"
#include "nomvote/characterization.hpp"
#include "nomvote/families.hpp"
#include "nomvote/oracle.hpp"

namespace nomvote {

struct SweepOptions
{
    std::string family;
    std::size_t agents = 2;
    /// m for linear families, K for committees and quota.
    std::size_t size = 3;
    /// Number of random onto tables for the table family; 0 means every table.
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    Budget budget;
};

struct SweepRow
{
    std::string parameters;
    std::optional<bool> predicate;
    bool nom_veto = false;
    bool nom_brute = false;

    bool agree() const { return nom_veto == nom_brute && (!predicate || *predicate == nom_brute); }
};

struct SweepResult
{
    SweepOptions options;
    std::vector<SweepRow> rows;

    std::size_t discrepancies() const
    {
        std::size_t d = 0;
        for (const auto& r : rows) {
            d += r.agree() ? 0 : 1;
        }
        return d;
    }
};

/// Family parameters as one comma-free field, e.g. "alpha=0 2" or "W0=110|011 W1=111".
inline std::string sweep_parameters(const Rule& rule)
{
    const std::size_t n = rule.agents();
    const auto join = [](const auto& xs) {
        std::string out;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            out += (k == 0 ? "" : " ") + std::to_string(xs[k]);
        }
        return out;
    };
    return std::visit(
        [&](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, MedianScheme>) {
                return "alpha=" + join(f.alpha);
            } else if constexpr (std::is_same_v<F, BallotFamily>) {
                std::string out;
                for (std::size_t c = 0; c < f.ballots.size(); ++c) {
                    out += (c == 0 ? "" : " ") + detail::coalition_label(static_cast<Coalition>(c), n) + "=" +
                           std::to_string(f.ballots[c]);
                }
                return out;
            } else if constexpr (std::is_same_v<F, CommitteeFamily>) {
                std::string out;
                for (std::size_t k = 0; k < f.minimal.size(); ++k) {
                    out += (k == 0 ? "W" : " W") + std::to_string(k) + "=";
                    for (std::size_t j = 0; j < f.minimal[k].size(); ++j) {
                        out += (j == 0 ? "" : "|") + detail::coalition_label(f.minimal[k][j], n);
                    }
                }
                return out;
            } else if constexpr (std::is_same_v<F, QuotaFamily>) {
                return "q=" + join(f.quotas);
            } else if constexpr (std::is_same_v<F, StatusQuo>) {
                return "a=" + std::to_string(f.status_quo);
            } else if constexpr (std::is_same_v<F, Dictatorship>) {
                return "dictator=" + std::to_string(f.dictator);
            } else {
                std::string out = "table=";
                for (Alternative x : f.outcomes) {
                    out += std::to_string(x) + (f.outcomes.size() > 10 ? "." : "");
                }
                if (!out.empty() && out.back() == '.') {
                    out.pop_back();
                }
                return out;
            }
        },
        rule.family());
}

/// Every rule of a family at the requested sizes, in enumeration order.
inline std::vector<Rule> sweep_rules(const SweepOptions& o)
{
    if (o.family == "median") {
        return all_median_schemes(o.agents, o.size);
    }
    if (o.family == "gmv") {
        return all_ballot_families(o.agents, o.size);
    }
    if (o.family == "committees") {
        return all_committee_families(o.agents, o.size);
    }
    if (o.family == "quota") {
        return all_quota_families(o.agents, o.size);
    }
    if (o.family == "table") {
        if (o.samples == 0) {
            return all_tables(o.agents, o.size, o.budget);
        }
        return random_onto_tables(o.agents, o.size, o.samples, o.seed);
    }
    throw InvalidArgument("unknown sweep family '" + o.family + "'");
}

inline SweepResult run_sweep(const SweepOptions& options)
{
    SweepResult result{options, {}};
    for (const auto& rule : sweep_rules(options)) {
        SweepRow row;
        row.parameters = sweep_parameters(rule);
        if (auto p = nom_predicate(rule)) {
            row.predicate = p->nom;
        }
        const OutcomeTable table = OutcomeTable::tabulate(rule, options.budget);
        row.nom_veto = veto_sets(table).every_veto_strong();
        row.nom_brute = find_obvious_manipulations(rule, table, options.budget).empty();
        result.rows.push_back(std::move(row));
    }
    return result;
}

/// Comma-separated table with a header row and a "#" summary trailer.
inline void write_csv(std::ostream& out, const SweepResult& r)
{
    const auto b = [](bool v) { return v ? "true" : "false"; };
    out << "index,family,n,size,parameters,predicate,nom_veto,nom_brute,agree\n";
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const auto& row = r.rows[k];
        out << k << ',' << r.options.family << ',' << r.options.agents << ',' << r.options.size << ','
            << row.parameters << ',' << (row.predicate ? b(*row.predicate) : "na") << ',' << b(row.nom_veto) << ','
            << b(row.nom_brute) << ',' << b(row.agree()) << '\n';
    }
    out << "# rules=" << r.rows.size() << " discrepancies=" << r.discrepancies() << '\n';
}

} // namespace nomvote

#endif // NOMVOTE_SWEEP_HPP
