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

#ifndef NOMVOTE_REPORT_HPP
#define NOMVOTE_REPORT_HPP

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nomvote/analysis.hpp"
#include "nomvote/characterization.hpp"
#include "nomvote/config.hpp"
#include "nomvote/oracle.hpp"

namespace nomvote {

/// Axiom oracles a report can run besides the NOM checks.
enum class Axiom
{
    efficient,
    anonymous,
    dictatorial,
    strategy_proof,
    strategy_proof_single_peaked,
    strategy_proof_separable,
};

inline const char* to_string(Axiom a)
{
    switch (a) {
    case Axiom::efficient:
        return "efficient";
    case Axiom::anonymous:
        return "anonymous";
    case Axiom::dictatorial:
        return "dictatorial";
    case Axiom::strategy_proof:
        return "strategy_proof";
    case Axiom::strategy_proof_single_peaked:
        return "strategy_proof_single_peaked";
    case Axiom::strategy_proof_separable:
        return "strategy_proof_separable";
    }
    return "?";
}

inline Axiom parse_axiom(const std::string& name)
{
    for (Axiom a : {Axiom::efficient, Axiom::anonymous, Axiom::dictatorial, Axiom::strategy_proof,
                    Axiom::strategy_proof_single_peaked, Axiom::strategy_proof_separable}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    throw InvalidArgument("unknown axiom '" + name + "'");
}

inline AxiomVerdict check_axiom(const Rule& rule, Axiom a, const Budget& budget)
{
    switch (a) {
    case Axiom::efficient:
        return is_efficient(rule, budget);
    case Axiom::anonymous:
        return is_anonymous(rule, budget);
    case Axiom::dictatorial:
        return is_dictatorial(rule, budget);
    case Axiom::strategy_proof:
        return is_strategy_proof(rule, universal_domain(), budget);
    case Axiom::strategy_proof_single_peaked:
        return is_strategy_proof(rule, single_peaked_domain(rule.space()), budget);
    case Axiom::strategy_proof_separable:
        return is_strategy_proof(rule, separable_domain(rule.space()), budget);
    }
    throw InvalidArgument("unknown axiom");
}

struct ReportOptions
{
    Budget budget;
    std::size_t witness_cap = 10;
    std::vector<Axiom> axioms;
};

/// Every NOM verdict for one rule, with the evidence behind them.
struct AnalysisReport
{
    explicit AnalysisReport(Rule r) : rule(std::move(r)) {}

    Rule rule;
    bool nom_brute = false;
    bool nom_veto = false;
    std::optional<NomVerdict> predicate;
    std::vector<std::pair<Axiom, AxiomVerdict>> axioms;
    VetoReport vetoes;
    ManipulationScan scan;
    std::size_t witness_cap = 10;
    double seconds = 0.0;

    /// Some verdict source disagrees with the others.
    bool discrepancy() const
    {
        return nom_brute != nom_veto || (predicate && predicate->nom != nom_brute);
    }
};

inline AnalysisReport analyze(const Rule& rule, const ReportOptions& options = {})
{
    require_valid(rule);
    const auto start = std::chrono::steady_clock::now();
    const OutcomeTable table = OutcomeTable::tabulate(rule, options.budget);
    AnalysisReport report{rule};
    report.witness_cap = options.witness_cap;
    for (Axiom a : options.axioms) {
        report.axioms.emplace_back(a, check_axiom(rule, a, options.budget));
    }
    report.vetoes = veto_sets(table);
    report.nom_veto = report.vetoes.every_veto_strong();
    report.scan = find_obvious_manipulations(rule, table, options.budget);
    report.nom_brute = report.scan.empty();
    report.predicate = nom_predicate(rule);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace detail {

inline json alternatives_json(const AlternativeSet& s)
{
    json out = json::array();
    for (Alternative x : s.members()) {
        out.push_back(x);
    }
    return out;
}

inline json ranking_json(const Preference& p)
{
    json out = json::array();
    for (Alternative x : p.ranking()) {
        out.push_back(x);
    }
    return out;
}

inline std::string describe(const Rule& rule, const Counterexample& cx)
{
    const auto& space = rule.space();
    const auto tops = [&](const TopVector& t) {
        std::string out = "[";
        for (std::size_t i = 0; i < t.size(); ++i) {
            out += (i == 0 ? "" : " ") + space.label(t[i]);
        }
        return out + "]";
    };
    return std::visit(
        [&](const auto& c) -> std::string {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ManipulationCounterexample>) {
                return "agent " + std::to_string(c.agent) + " with " + c.profile[c.agent].to_string(space) +
                       " reports " + c.misreport.to_string(space) + ": " + space.label(c.truthful_outcome) +
                       " -> " + space.label(c.manipulated_outcome);
            } else if constexpr (std::is_same_v<C, EfficiencyCounterexample>) {
                return "outcome " + space.label(c.outcome) + " at tops " + tops(c.profile.tops()) +
                       " is dominated by " + space.label(c.dominating);
            } else if constexpr (std::is_same_v<C, AnonymityCounterexample>) {
                return "tops " + tops(c.tops) + " give " + space.label(c.outcome) + " but " + tops(c.permuted) +
                       " give " + space.label(c.permuted_outcome);
            } else if constexpr (std::is_same_v<C, DictatorshipCounterexample>) {
                std::string out;
                for (std::size_t i = 0; i < c.per_agent.size(); ++i) {
                    out += (i == 0 ? "" : "; ") + std::string("agent ") + std::to_string(i) + " overruled at " +
                           tops(c.per_agent[i]);
                }
                return out;
            } else {
                return std::string(to_string(c.witness.kind)) + " manipulation by agent " +
                       std::to_string(c.witness.agent);
            }
        },
        cx);
}

inline json witness_json(const ManipulationWitness& w)
{
    json out;
    out["agent"] = w.agent;
    out["kind"] = to_string(w.kind);
    out["truth"] = ranking_json(w.truth);
    out["misreport"] = ranking_json(w.misreport);
    out["others"] = w.others;
    out["truthful_outcome"] = w.truthful_outcome;
    out["manipulated_outcome"] = w.manipulated_outcome;
    out["truthful_options"] = alternatives_json(w.truthful_options);
    out["misreport_options"] = alternatives_json(w.misreport_options);
    return out;
}

inline std::string witness_text(const Rule& rule, const ManipulationWitness& w)
{
    const auto& space = rule.space();
    std::string others = "[";
    for (std::size_t k = 0; k < w.others.size(); ++k) {
        others += (k == 0 ? "" : " ") + space.label(w.others[k]);
    }
    others += "]";
    return "agent " + std::to_string(w.agent) + " " + to_string(w.kind) + ": truth " + w.truth.to_string(space) +
           " misreport " + w.misreport.to_string(space) + " options " + w.truthful_options.to_string(space) +
           " -> " + w.misreport_options.to_string(space) + "; others " + others + " outcome " +
           space.label(w.truthful_outcome) + " -> " + space.label(w.manipulated_outcome);
}

/// Witnesses in scan order, at most `cap` per (agent, kind).
inline std::vector<const ManipulationWitness*> capped_witnesses(const AnalysisReport& r)
{
    std::vector<const ManipulationWitness*> out;
    std::map<std::pair<Agent, ManipulationKind>, std::size_t> shown;
    for (const auto& w : r.scan.witnesses) {
        auto& k = shown[{w.agent, w.kind}];
        if (k < r.witness_cap) {
            out.push_back(&w);
            ++k;
        }
    }
    return out;
}

} // namespace detail

/// Structured report. Witness lists are capped; counts are always exact.
inline json to_json(const AnalysisReport& r)
{
    json out;
    out["discrepancy"] = r.discrepancy();
    out["rule"] = to_json(r.rule);
    json verdicts;
    verdicts["nom"] = r.nom_brute;
    verdicts["nom_brute"] = r.nom_brute;
    verdicts["nom_veto"] = r.nom_veto;
    if (r.predicate) {
        verdicts["family_predicate"] = {{"nom", r.predicate->nom},
                                        {"rationale", r.predicate->rationale},
                                        {"dictatorial", r.predicate->dictatorial}};
    } else {
        verdicts["family_predicate"] = nullptr;
    }
    json axioms = json::object();
    for (const auto& [a, v] : r.axioms) {
        json entry{{"holds", v.holds}};
        if (v.counterexample) {
            entry["counterexample"] = detail::describe(r.rule, *v.counterexample);
        }
        if (v.dictator) {
            entry["dictator"] = *v.dictator;
        }
        axioms[to_string(a)] = entry;
    }
    verdicts["axioms"] = axioms;
    out["verdicts"] = verdicts;

    json vetoes = json::array();
    for (Agent i = 0; i < r.vetoes.agents.size(); ++i) {
        const auto& a = r.vetoes.agents[i];
        vetoes.push_back({{"agent", i},
                          {"vetoed", detail::alternatives_json(a.vetoed)},
                          {"strongly_vetoed", detail::alternatives_json(a.strongly_vetoed)}});
    }
    out["vetoes"] = vetoes;

    json counts = json::object();
    for (ManipulationKind k : {ManipulationKind::worst_case, ManipulationKind::best_case}) {
        counts[to_string(k)] = r.scan.count(k);
    }
    json witnesses = json::array();
    for (const auto* w : detail::capped_witnesses(r)) {
        witnesses.push_back(detail::witness_json(*w));
    }
    out["witnesses"] = {{"total", r.scan.witnesses.size()}, {"counts", counts}, {"cap", r.witness_cap},
                        {"list", witnesses}};
    out["seconds"] = r.seconds;
    return out;
}

inline std::string to_text(const AnalysisReport& r)
{
    std::ostringstream out;
    const auto yes = [](bool b) { return b ? "true" : "false"; };
    if (r.discrepancy()) {
        out << "*** DISCREPANCY: verdict sources disagree ***\n";
    }
    out << "rule: " << to_json(r.rule).dump() << "\n";
    out << "nom_brute: " << yes(r.nom_brute) << "\n";
    out << "nom_veto: " << yes(r.nom_veto) << "\n";
    if (r.predicate) {
        out << "family_predicate: " << yes(r.predicate->nom) << " (" << r.predicate->rationale << ")\n";
    } else {
        out << "family_predicate: n/a\n";
    }
    for (const auto& [a, v] : r.axioms) {
        out << to_string(a) << ": " << yes(v.holds);
        if (v.counterexample) {
            out << " (" << detail::describe(r.rule, *v.counterexample) << ")";
        }
        out << "\n";
    }
    for (Agent i = 0; i < r.vetoes.agents.size(); ++i) {
        const auto& a = r.vetoes.agents[i];
        out << "agent " << i << ": V=" << a.vetoed.to_string(r.rule.space())
            << " SV=" << a.strongly_vetoed.to_string(r.rule.space()) << "\n";
    }
    out << "witnesses: " << r.scan.witnesses.size() << " (worst_case=" << r.scan.count(ManipulationKind::worst_case)
        << " best_case=" << r.scan.count(ManipulationKind::best_case) << ")\n";
    for (const auto* w : detail::capped_witnesses(r)) {
        out << "  " << detail::witness_text(r.rule, *w) << "\n";
    }
    out << "verdict: " << (r.nom_brute ? "NOM" : "NOT NOM") << "\n";
    return out.str();
}

} // namespace nomvote

#endif // NOMVOTE_REPORT_HPP
