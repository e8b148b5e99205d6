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

// nomvote: command-line front end for the obvious-manipulability checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nomvote/config.hpp"
#include "nomvote/report.hpp"
#include "nomvote/sweep.hpp"

using namespace nomvote;

namespace {

enum Exit
{
    exit_nom = 0,
    exit_not_nom = 1,
    exit_usage = 2,
    exit_budget = 3,
    exit_discrepancy = 4,
};

struct Globals
{
    std::string format = "text";
    std::uint64_t budget_profiles = 0;
    std::uint64_t seed = 1;
    std::string out;

    bool structured() const { return format == "structured"; }
};

Budget effective_budget(const Globals& g)
{
    Budget budget;
    if (const char* env = std::getenv("NOMVOTE_BUDGET")) {
        budget = parse_budget(env, budget);
    }
    if (g.budget_profiles != 0) {
        budget.max_profiles = g.budget_profiles;
    }
    return budget;
}

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
        throw InvalidArgument("cannot write " + g.out);
    }
    file << text;
}

std::string set_text(const AlternativeSet& s, const AlternativeSpace& space) { return s.to_string(space); }

int cmd_check(const Globals& g, const std::string& path, const std::vector<std::string>& axioms, std::size_t cap)
{
    const Rule rule = load_rule(path);
    ReportOptions options;
    options.budget = effective_budget(g);
    options.witness_cap = cap;
    for (const auto& a : axioms) {
        options.axioms.push_back(parse_axiom(a));
    }
    const auto report = analyze(rule, options);
    emit(g, g.structured() ? to_json(report).dump(2) + "\n" : to_text(report));
    if (report.discrepancy()) {
        return exit_discrepancy;
    }
    return report.nom_brute ? exit_nom : exit_not_nom;
}

int cmd_option_set(const Globals& g, const std::string& path, Agent agent, const std::string& top_text)
{
    const Rule rule = load_rule(path);
    if (agent >= rule.agents()) {
        throw InvalidArgument("--agent outside 0..n-1");
    }
    const Alternative top = parse_alternative(rule.space(), top_text);
    const auto brute = option_set(rule, agent, top, effective_budget(g)).members;
    std::optional<AlternativeSet> closed;
    std::string note;
    try {
        closed = option_set_closed(rule, agent, top).members;
    } catch (const UnsupportedFamily& e) {
        note = e.what();
    } catch (const AssumptionViolated& e) {
        note = e.what();
    }
    const bool agree = !closed || *closed == brute;
    if (g.structured()) {
        json j{{"agent", agent}, {"top", top}, {"brute_force", detail::alternatives_json(brute)}};
        j["closed_form"] = closed ? detail::alternatives_json(*closed) : json(nullptr);
        j["agreement"] = closed ? json(agree) : json(nullptr);
        if (!note.empty()) {
            j["note"] = note;
        }
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "agent " << agent << " top " << rule.space().label(top) << "\n";
        out << "brute_force: " << set_text(brute, rule.space()) << "\n";
        if (closed) {
            out << "closed_form: " << set_text(*closed, rule.space()) << "\n";
            out << "agreement: " << (agree ? "true" : "false") << "\n";
        } else {
            out << "closed_form: n/a (" << note << ")\n";
        }
        emit(g, out.str());
    }
    return agree ? exit_nom : exit_discrepancy;
}

int cmd_veto(const Globals& g, const std::string& path)
{
    const Rule rule = load_rule(path);
    const Budget budget = effective_budget(g);
    const VetoReport brute = veto_sets(rule, budget);
    std::optional<VetoReport> closed;
    std::string note;
    try {
        closed = veto_sets_closed(rule, budget);
    } catch (const UnsupportedFamily& e) {
        note = e.what();
    }
    const bool agree = !closed || *closed == brute;
    const bool nom = brute.every_veto_strong();
    if (g.structured()) {
        json agents = json::array();
        for (Agent i = 0; i < brute.agents.size(); ++i) {
            json a{{"agent", i},
                   {"vetoed", detail::alternatives_json(brute.agents[i].vetoed)},
                   {"strongly_vetoed", detail::alternatives_json(brute.agents[i].strongly_vetoed)}};
            agents.push_back(a);
        }
        json j{{"agents", agents}, {"nom_veto", nom}};
        j["closed_form_agreement"] = closed ? json(agree) : json(nullptr);
        if (!note.empty()) {
            j["note"] = note;
        }
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (Agent i = 0; i < brute.agents.size(); ++i) {
            out << "agent " << i << ": V=" << set_text(brute.agents[i].vetoed, rule.space())
                << " SV=" << set_text(brute.agents[i].strongly_vetoed, rule.space()) << "\n";
        }
        if (closed) {
            out << "closed_form_agreement: " << (agree ? "true" : "false") << "\n";
        } else {
            out << "closed_form: n/a (" << note << ")\n";
        }
        out << "nom_veto: " << (nom ? "true" : "false") << "\n";
        emit(g, out.str());
    }
    if (!agree) {
        return exit_discrepancy;
    }
    return nom ? exit_nom : exit_not_nom;
}

int cmd_witness(const Globals& g, const std::string& path, std::optional<Agent> agent, std::size_t cap)
{
    const Rule rule = load_rule(path);
    ManipulationScan scan = find_obvious_manipulations(rule, effective_budget(g));
    if (agent) {
        std::erase_if(scan.witnesses, [&](const ManipulationWitness& w) { return w.agent != *agent; });
    }
    AnalysisReport view{rule};
    view.scan = std::move(scan);
    view.witness_cap = cap;
    const auto shown = detail::capped_witnesses(view);
    if (g.structured()) {
        json list = json::array();
        for (const auto* w : shown) {
            list.push_back(detail::witness_json(*w));
        }
        json j{{"total", view.scan.witnesses.size()},
               {"worst_case", view.scan.count(ManipulationKind::worst_case)},
               {"best_case", view.scan.count(ManipulationKind::best_case)},
               {"cap", cap},
               {"list", list}};
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "witnesses: " << view.scan.witnesses.size() << "\n";
        for (const auto* w : shown) {
            out << detail::witness_text(rule, *w) << "\n";
        }
        emit(g, out.str());
    }
    return view.scan.empty() ? exit_nom : exit_not_nom;
}

int cmd_sweep(const Globals& g, SweepOptions options)
{
    options.seed = g.seed;
    options.budget = effective_budget(g);
    const auto result = run_sweep(options);
    std::ostringstream out;
    write_csv(out, result);
    emit(g, out.str());
    return result.discrepancies() == 0 ? exit_nom : exit_discrepancy;
}

int cmd_validate(const Globals& g, const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return exit_usage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        const Rule rule = parse_rule_text(buffer.str());
        emit(g, g.structured() ? json{{"valid", true}, {"rule", to_json(rule)}}.dump(2) + "\n" : "valid\n");
        return exit_nom;
    } catch (const ConfigError& e) {
        if (g.structured()) {
            emit(g, json{{"valid", false}, {"path", e.path()}, {"error", e.what()}}.dump(2) + "\n");
        } else {
            emit(g, std::string("invalid: ") + e.what() + "\n");
        }
        return exit_usage;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nomvote: obvious manipulability of tops-only voting rules"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--budget-profiles", g.budget_profiles, "Maximum profiles or top vectors to enumerate");
    app.add_option("--seed", g.seed, "Seed for sampled table sweeps");
    app.add_option("--out", g.out, "Write output to this file instead of stdout");

    std::string config;
    std::vector<std::string> axioms;
    std::size_t cap = 10;
    Agent agent = 0;
    std::string top;
    SweepOptions sweep;
    std::size_t m = 0;
    std::size_t objects = 0;

    auto* check = app.add_subcommand("check", "Run every NOM verdict on a rule config");
    check->add_option("config", config)->required();
    check->add_option("--axioms", axioms, "Axiom oracles to run")->delimiter(',');
    check->add_option("--witness-cap", cap, "Witnesses shown per (agent, kind)");

    auto* option = app.add_subcommand("option-set", "Option set of one agent for one top");
    option->add_option("config", config)->required();
    option->add_option("--agent", agent)->required();
    option->add_option("--top", top)->required();

    auto* veto = app.add_subcommand("veto", "Veto and strong veto sets");
    veto->add_option("config", config)->required();

    std::optional<Agent> witness_agent;
    auto* witness = app.add_subcommand("witness", "List obvious manipulations");
    witness->add_option("config", config)->required();
    witness->add_option("--agent", witness_agent);
    witness->add_option("--witness-cap", cap);

    auto* sweep_cmd = app.add_subcommand("sweep", "Compare verdicts over a whole family");
    sweep_cmd->add_option("--family", sweep.family)
        ->required()
        ->check(CLI::IsMember({"median", "gmv", "committees", "quota", "table"}));
    sweep_cmd->add_option("--n", sweep.agents)->required();
    auto* m_opt = sweep_cmd->add_option("--m", m, "Alternatives (linear families)");
    auto* k_opt = sweep_cmd->add_option("--K", objects, "Objects (committees, quota)");
    m_opt->excludes(k_opt);
    sweep_cmd->add_option("--samples", sweep.samples, "Random onto tables (table family; 0 = all)");

    auto* validate_cmd = app.add_subcommand("validate", "Check a rule config");
    validate_cmd->add_option("config", config)->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*check) {
            return cmd_check(g, config, axioms, cap);
        }
        if (*option) {
            return cmd_option_set(g, config, agent, top);
        }
        if (*veto) {
            return cmd_veto(g, config);
        }
        if (*witness) {
            return cmd_witness(g, config, witness_agent, cap);
        }
        if (*sweep_cmd) {
            sweep.size = m != 0 ? m : objects;
            if (sweep.size == 0) {
                throw InvalidArgument("sweep needs --m or --K");
            }
            return cmd_sweep(g, sweep);
        }
        return cmd_validate(g, config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
