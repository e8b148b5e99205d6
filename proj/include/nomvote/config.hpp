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

#ifndef NOMVOTE_CONFIG_HPP
#define NOMVOTE_CONFIG_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nomvote/rules.hpp"

namespace nomvote {

using json = nlohmann::ordered_json;

/// Malformed rule config. `path()` names the offending field, e.g. "alpha[1]".
class ConfigError : public InvalidArgument
{
public:
    ConfigError(std::string path, const std::string& message)
        : InvalidArgument(path + ": " + message), path_(std::move(path))
    {
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

namespace detail {

inline const json& require_field(const json& j, const std::string& key)
{
    if (!j.contains(key)) {
        throw ConfigError(key, "missing field");
    }
    return j.at(key);
}

inline std::uint64_t read_unsigned(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw ConfigError(path, "expected a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

inline std::vector<std::uint64_t> read_unsigned_list(const json& j, const std::string& path)
{
    if (!j.is_array()) {
        throw ConfigError(path, "expected a list");
    }
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        out.push_back(read_unsigned(j[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
}

inline std::vector<Alternative> to_alternatives(const std::vector<std::uint64_t>& xs, const std::string& path)
{
    std::vector<Alternative> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (xs[k] > std::numeric_limits<Alternative>::max()) {
            throw ConfigError(path + "[" + std::to_string(k) + "]", "out of range");
        }
        out.push_back(static_cast<Alternative>(xs[k]));
    }
    return out;
}

/// Parses a fixed-width agent bitstring, agent 1 leftmost.
inline Coalition parse_coalition(const json& j, std::size_t agents, const std::string& path)
{
    if (!j.is_string()) {
        throw ConfigError(path, "expected a bitstring");
    }
    const auto s = j.get<std::string>();
    if (s.size() != agents) {
        throw ConfigError(path, "bitstring must have " + std::to_string(agents) + " characters");
    }
    Coalition c = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            c |= Coalition{1} << i;
        } else if (s[i] != '0') {
            throw ConfigError(path, "bitstring may contain only 0 and 1");
        }
    }
    return c;
}

inline AlternativeSpace parse_space(const json& j)
{
    const bool has_m = j.contains("m");
    const bool has_k = j.contains("K");
    if (has_m == has_k) {
        throw ConfigError("space", "exactly one of m (linear) or K (subsets of K objects) is required");
    }
    try {
        if (has_m) {
            return AlternativeSpace::linear(read_unsigned(j.at("m"), "m"));
        }
        return AlternativeSpace::subsets(read_unsigned(j.at("K"), "K"));
    } catch (const ConfigError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw ConfigError(has_m ? "m" : "K", e.what());
    }
}

} // namespace detail

/// Builds a rule from its config tree. Field errors and rule invariant
/// violations both raise ConfigError with the field path.
inline Rule parse_rule(const json& j)
{
    if (!j.is_object()) {
        throw ConfigError("$", "config must be an object");
    }
    const auto& tag_field = detail::require_field(j, "family");
    if (!tag_field.is_string()) {
        throw ConfigError("family", "expected a string");
    }
    const std::string tag = tag_field.get<std::string>();
    const auto n = detail::read_unsigned(detail::require_field(j, "n"), "n");
    if (n < 2 || n > max_agents) {
        throw ConfigError("n", "need 2 <= n <= " + std::to_string(max_agents));
    }
    const AlternativeSpace space = detail::parse_space(j);

    RuleFamily family;
    if (tag == "median") {
        family = MedianScheme{detail::to_alternatives(
            detail::read_unsigned_list(detail::require_field(j, "alpha"), "alpha"), "alpha")};
    } else if (tag == "gmv") {
        const auto& map = detail::require_field(j, "ballots");
        if (!map.is_object()) {
            throw ConfigError("ballots", "expected an object keyed by bitstrings");
        }
        const std::size_t masks = std::size_t{1} << n;
        std::vector<Alternative> ballots(masks);
        std::vector<bool> seen(masks, false);
        for (const auto& [key, value] : map.items()) {
            const std::string path = "ballots." + key;
            const Coalition c = detail::parse_coalition(json(key), n, path);
            if (seen[c]) {
                throw ConfigError(path, "duplicate coalition");
            }
            seen[c] = true;
            ballots[c] = detail::to_alternatives({detail::read_unsigned(value, path)}, path).front();
        }
        for (std::size_t c = 0; c < masks; ++c) {
            if (!seen[c]) {
                throw ConfigError("ballots." + detail::coalition_label(static_cast<Coalition>(c), n),
                                  "missing ballot");
            }
        }
        family = BallotFamily{std::move(ballots)};
    } else if (tag == "committees") {
        const auto& list = detail::require_field(j, "committees");
        if (!list.is_array()) {
            throw ConfigError("committees", "expected a list of committees");
        }
        std::vector<std::vector<Coalition>> minimal;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string path = "committees[" + std::to_string(k) + "]";
            if (!list[k].is_array()) {
                throw ConfigError(path, "expected a list of bitstrings");
            }
            std::vector<Coalition> committee;
            for (std::size_t c = 0; c < list[k].size(); ++c) {
                committee.push_back(
                    detail::parse_coalition(list[k][c], n, path + "[" + std::to_string(c) + "]"));
            }
            minimal.push_back(std::move(committee));
        }
        family = CommitteeFamily{std::move(minimal)};
    } else if (tag == "quota") {
        const auto raw = detail::read_unsigned_list(detail::require_field(j, "quotas"), "quotas");
        family = QuotaFamily{std::vector<std::size_t>(raw.begin(), raw.end())};
    } else if (tag == "status_quo") {
        const auto a = detail::read_unsigned(detail::require_field(j, "status_quo"), "status_quo");
        family = StatusQuo{detail::to_alternatives({a}, "status_quo").front()};
    } else if (tag == "dictatorship") {
        family = Dictatorship{detail::read_unsigned(detail::require_field(j, "dictator"), "dictator")};
    } else if (tag == "table") {
        family = TopsOnlyTable{
            detail::to_alternatives(detail::read_unsigned_list(detail::require_field(j, "table"), "table"), "table")};
    } else {
        throw ConfigError("family", "unknown family '" + tag + "'");
    }

    Rule rule(n, space, std::move(family));
    const auto violations = validate(rule);
    if (!violations.empty()) {
        throw ConfigError(violations.front().path, violations.front().message);
    }
    return rule;
}

/// Parses JSON text; syntax errors are reported at path "$".
inline Rule parse_rule_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("$", std::string("not valid JSON: ") + e.what());
    }
    return parse_rule(j);
}

inline Rule load_rule(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("$", "cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_rule_text(buffer.str());
}

/// Config tree for a rule; parse_rule(to_json(r)) == r for valid rules.
inline json to_json(const Rule& rule)
{
    json j;
    j["family"] = rule.tag();
    j["n"] = rule.agents();
    if (rule.space().is_linear()) {
        j["m"] = rule.alternatives();
    } else {
        j["K"] = rule.space().objects();
    }
    const std::size_t n = rule.agents();
    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, MedianScheme>) {
                j["alpha"] = f.alpha;
            } else if constexpr (std::is_same_v<F, BallotFamily>) {
                json map = json::object();
                for (std::size_t c = 0; c < f.ballots.size(); ++c) {
                    map[detail::coalition_label(static_cast<Coalition>(c), n)] = f.ballots[c];
                }
                j["ballots"] = map;
            } else if constexpr (std::is_same_v<F, CommitteeFamily>) {
                json list = json::array();
                for (const auto& committee : f.minimal) {
                    json labels = json::array();
                    for (Coalition c : committee) {
                        labels.push_back(detail::coalition_label(c, n));
                    }
                    list.push_back(labels);
                }
                j["committees"] = list;
            } else if constexpr (std::is_same_v<F, QuotaFamily>) {
                j["quotas"] = f.quotas;
            } else if constexpr (std::is_same_v<F, StatusQuo>) {
                j["status_quo"] = f.status_quo;
            } else if constexpr (std::is_same_v<F, Dictatorship>) {
                j["dictator"] = f.dictator;
            } else {
                j["table"] = f.outcomes;
            }
        },
        rule.family());
    return j;
}

/// Parses an alternative label: an index, or "{0,2}" on a subset space.
inline Alternative parse_alternative(const AlternativeSpace& space, const std::string& text)
{
    const auto bad = [&]() { return InvalidArgument("bad alternative '" + text + "'"); };
    Alternative x = 0;
    if (!text.empty() && text.front() == '{') {
        if (!space.is_subsets() || text.back() != '}') {
            throw bad();
        }
        std::stringstream in(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t k = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
            if (ec != std::errc{} || ptr != item.data() + item.size() || k >= space.objects()) {
                throw bad();
            }
            x |= Alternative{1} << k;
        }
    } else {
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
            throw bad();
        }
    }
    if (!space.contains(x)) {
        throw InvalidArgument("alternative '" + text + "' outside the space");
    }
    return x;
}

/**
 * Parses a budget override: either a bare profile count "N", or
 * comma-separated "profiles=N" and "preferences=M" settings.
 */
inline Budget parse_budget(const std::string& text, Budget base = {})
{
    const auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw InvalidArgument("bad budget value '" + std::string(s) + "'");
        }
        return v;
    };
    if (text.find('=') == std::string::npos) {
        base.max_profiles = number(text);
        return base;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("bad budget setting '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const auto value = number(std::string_view(item).substr(eq + 1));
        if (key == "profiles") {
            base.max_profiles = value;
        } else if (key == "preferences") {
            base.max_preferences = value;
        } else {
            throw InvalidArgument("unknown budget key '" + key + "'");
        }
    }
    return base;
}

} // namespace nomvote

#endif // NOMVOTE_CONFIG_HPP
