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

#ifndef NOMVOTE_DOMAIN_HPP
#define NOMVOTE_DOMAIN_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomvote/error.hpp"

namespace nomvote {

/// Alternatives are canonical indices 0..m-1. For subset spaces the index
/// is the characteristic number of the subset (object j contributes bit j).
using Alternative = std::uint32_t;

/// Agents are 0-based.
using Agent = std::size_t;

/// A set of agents as a bitmask: agent i contributes bit i.
using Coalition = std::uint32_t;

/// The n-tuple of agents' top alternatives.
using TopVector = std::vector<Alternative>;

inline constexpr std::size_t max_agents = 24;

inline std::size_t coalition_size(Coalition c) { return static_cast<std::size_t>(std::popcount(c)); }

inline Coalition grand_coalition(std::size_t agents) { return static_cast<Coalition>((1ULL << agents) - 1); }

inline bool is_subset(Coalition inner, Coalition outer) { return (inner & outer) == inner; }

class AlternativeSpace
{
public:
    enum class Kind { linear, subsets };

    static AlternativeSpace linear(std::size_t alternatives)
    {
        if (alternatives < 2 || alternatives > max_linear) {
            throw InvalidArgument("linear space needs 2 <= m <= " + std::to_string(max_linear) +
                                  ", got " + std::to_string(alternatives));
        }
        return AlternativeSpace(Kind::linear, alternatives, 0);
    }

    static AlternativeSpace subsets(std::size_t objects)
    {
        if (objects < 2 || objects > max_objects) {
            throw InvalidArgument("subset space needs 2 <= K <= " + std::to_string(max_objects) +
                                  ", got " + std::to_string(objects));
        }
        return AlternativeSpace(Kind::subsets, std::size_t{1} << objects, objects);
    }

    Kind kind() const { return kind_; }
    bool is_linear() const { return kind_ == Kind::linear; }
    bool is_subsets() const { return kind_ == Kind::subsets; }

    /// Number of alternatives m.
    std::size_t size() const { return size_; }

    /// Number of objects K; zero for linear spaces.
    std::size_t objects() const { return objects_; }

    bool contains(Alternative x) const { return x < size_; }

    Alternative lowest() const { return 0; }
    Alternative highest() const { return static_cast<Alternative>(size_ - 1); }

    /// "3" for linear alternatives, "{0,2}" for subsets.
    std::string label(Alternative x) const
    {
        if (is_linear()) {
            return std::to_string(x);
        }
        std::string out = "{";
        bool first = true;
        for (std::size_t k = 0; k < objects_; ++k) {
            if ((x >> k) & 1U) {
                if (!first) {
                    out += ',';
                }
                out += std::to_string(k);
                first = false;
            }
        }
        return out + "}";
    }

    friend bool operator==(const AlternativeSpace&, const AlternativeSpace&) = default;

    static constexpr std::size_t max_linear = 1U << 16;
    static constexpr std::size_t max_objects = 16;

private:
    AlternativeSpace(Kind kind, std::size_t size, std::size_t objects)
        : kind_(kind), size_(size), objects_(objects)
    {
    }

    Kind kind_;
    std::size_t size_;
    std::size_t objects_;
};

/// Subset of the alternatives of a space, stored as a membership mask.
class AlternativeSet
{
public:
    AlternativeSet() = default;

    explicit AlternativeSet(std::size_t universe) : members_(universe, false) {}

    static AlternativeSet full(std::size_t universe)
    {
        AlternativeSet s(universe);
        std::fill(s.members_.begin(), s.members_.end(), true);
        return s;
    }

    static AlternativeSet of(std::size_t universe, std::initializer_list<Alternative> xs)
    {
        AlternativeSet s(universe);
        for (Alternative x : xs) {
            s.insert(x);
        }
        return s;
    }

    /// The integer interval [lo, hi].
    static AlternativeSet interval(std::size_t universe, Alternative lo, Alternative hi)
    {
        AlternativeSet s(universe);
        for (Alternative x = lo; x <= hi; ++x) {
            s.insert(x);
        }
        return s;
    }

    std::size_t universe() const { return members_.size(); }

    void insert(Alternative x) { members_.at(x) = true; }
    void erase(Alternative x) { members_.at(x) = false; }
    bool contains(Alternative x) const { return x < members_.size() && members_[x]; }

    std::size_t size() const
    {
        return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
    }
    bool empty() const { return size() == 0; }

    /// Members in ascending order.
    std::vector<Alternative> members() const
    {
        std::vector<Alternative> out;
        for (std::size_t x = 0; x < members_.size(); ++x) {
            if (members_[x]) {
                out.push_back(static_cast<Alternative>(x));
            }
        }
        return out;
    }

    bool is_subset_of(const AlternativeSet& other) const
    {
        for (std::size_t x = 0; x < members_.size(); ++x) {
            if (members_[x] && !other.contains(static_cast<Alternative>(x))) {
                return false;
            }
        }
        return true;
    }

    AlternativeSet complement() const
    {
        AlternativeSet out(members_.size());
        for (std::size_t x = 0; x < members_.size(); ++x) {
            out.members_[x] = !members_[x];
        }
        return out;
    }

    std::string to_string(const AlternativeSpace& space) const
    {
        std::string out = "{";
        bool first = true;
        for (Alternative x : members()) {
            if (!first) {
                out += ", ";
            }
            out += space.label(x);
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

private:
    std::vector<bool> members_;
};

/// A strict linear order over the alternatives, best first.
class Preference
{
public:
    Preference() = default;

    explicit Preference(std::vector<Alternative> ranking) : ranking_(std::move(ranking))
    {
        if (ranking_.size() < 2) {
            throw InvalidArgument("a preference ranks at least two alternatives");
        }
        position_.assign(ranking_.size(), npos);
        for (std::size_t r = 0; r < ranking_.size(); ++r) {
            const Alternative x = ranking_[r];
            if (x >= ranking_.size() || position_[x] != npos) {
                throw InvalidArgument("ranking is not a permutation of 0..m-1");
            }
            position_[x] = r;
        }
    }

    std::size_t size() const { return ranking_.size(); }
    std::span<const Alternative> ranking() const { return ranking_; }

    Alternative top() const { return ranking_.front(); }
    Alternative bottom() const { return ranking_.back(); }

    /// 0 for the top, m-1 for the bottom.
    std::size_t rank_of(Alternative x) const { return position_.at(x); }

    /// Strict preference x P y.
    bool prefers(Alternative x, Alternative y) const { return position_.at(x) < position_.at(y); }

    /// Weak preference x R y.
    bool weakly_prefers(Alternative x, Alternative y) const { return x == y || prefers(x, y); }

    std::string to_string(const AlternativeSpace& space) const
    {
        std::string out = "(";
        for (std::size_t r = 0; r < ranking_.size(); ++r) {
            if (r != 0) {
                out += ' ';
            }
            out += space.label(ranking_[r]);
        }
        return out + ")";
    }

    friend bool operator==(const Preference& a, const Preference& b) { return a.ranking_ == b.ranking_; }
    friend auto operator<=>(const Preference& a, const Preference& b) { return a.ranking_ <=> b.ranking_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Alternative> ranking_;
    std::vector<std::size_t> position_;
};

/// One preference per agent, n >= 2.
class Profile
{
public:
    explicit Profile(std::vector<Preference> prefs) : prefs_(std::move(prefs))
    {
        if (prefs_.size() < 2) {
            throw InvalidArgument("a profile needs at least two agents");
        }
        for (const auto& p : prefs_) {
            if (p.size() != prefs_.front().size()) {
                throw InvalidArgument("profile preferences rank different numbers of alternatives");
            }
        }
    }

    std::size_t agents() const { return prefs_.size(); }
    const Preference& operator[](Agent i) const { return prefs_.at(i); }
    std::span<const Preference> preferences() const { return prefs_; }

    TopVector tops() const
    {
        TopVector out;
        out.reserve(prefs_.size());
        for (const auto& p : prefs_) {
            out.push_back(p.top());
        }
        return out;
    }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<Preference> prefs_;
};

/// All m! strict preferences, lexicographic by ranking.
inline std::vector<Preference> enumerate_preferences(const AlternativeSpace& space, const Budget& budget = {})
{
    const std::size_t m = space.size();
    budget.require_preferences(detail::saturating_factorial(m), "enumerate_preferences");
    std::vector<Alternative> ranking(m);
    std::iota(ranking.begin(), ranking.end(), Alternative{0});
    std::vector<Preference> out;
    do {
        out.emplace_back(ranking);
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return out;
}

/// The preference ranking `top` first, `bottom` last, everything else ascending.
inline Preference preference_with_top_and_bottom(Alternative top, Alternative bottom, const AlternativeSpace& space)
{
    if (!space.contains(top) || !space.contains(bottom)) {
        throw InvalidArgument("top or bottom outside the alternative space");
    }
    if (top == bottom) {
        throw InvalidArgument("top and bottom must differ");
    }
    std::vector<Alternative> ranking{top};
    for (Alternative x = 0; x < space.size(); ++x) {
        if (x != top && x != bottom) {
            ranking.push_back(x);
        }
    }
    ranking.push_back(bottom);
    return Preference(std::move(ranking));
}

/// Representative used for misreports with a given top: `top` first,
/// the rest ascending.
inline Preference canonical_preference(Alternative top, const AlternativeSpace& space)
{
    if (!space.contains(top)) {
        throw InvalidArgument("top outside the alternative space");
    }
    std::vector<Alternative> ranking{top};
    for (Alternative x = 0; x < space.size(); ++x) {
        if (x != top) {
            ranking.push_back(x);
        }
    }
    return Preference(std::move(ranking));
}

inline Alternative best_in(const Preference& p, std::span<const Alternative> ys)
{
    if (ys.empty()) {
        throw InvalidArgument("best_in: empty set");
    }
    return *std::min_element(ys.begin(), ys.end(),
                             [&](Alternative x, Alternative y) { return p.rank_of(x) < p.rank_of(y); });
}

inline Alternative worst_in(const Preference& p, std::span<const Alternative> ys)
{
    if (ys.empty()) {
        throw InvalidArgument("worst_in: empty set");
    }
    return *std::max_element(ys.begin(), ys.end(),
                             [&](Alternative x, Alternative y) { return p.rank_of(x) < p.rank_of(y); });
}

inline Alternative best_in(const Preference& p, const AlternativeSet& ys)
{
    const auto members = ys.members();
    return best_in(p, std::span<const Alternative>(members));
}

inline Alternative worst_in(const Preference& p, const AlternativeSet& ys)
{
    const auto members = ys.members();
    return worst_in(p, std::span<const Alternative>(members));
}

/// For all x < y < top and top < y < x: top P y P x.
inline bool is_single_peaked(const Preference& p, const AlternativeSpace& space)
{
    if (!space.is_linear()) {
        throw InvalidArgument("single-peakedness needs a linear space");
    }
    if (p.size() != space.size()) {
        throw InvalidArgument("preference does not match the space");
    }
    // Equivalent to: ranks strictly increase moving away from the peak on each side.
    const Alternative peak = p.top();
    for (Alternative y = peak; y > 0; --y) {
        if (!p.prefers(y, y - 1)) {
            return false;
        }
    }
    for (Alternative y = peak; y + 1 < space.size(); ++y) {
        if (!p.prefers(y, y + 1)) {
            return false;
        }
    }
    return true;
}

/// For every set S and object k not in S: (S + k) P S iff {k} P {}.
inline bool is_separable(const Preference& p, const AlternativeSpace& space)
{
    if (!space.is_subsets()) {
        throw InvalidArgument("separability needs a subset space");
    }
    if (p.size() != space.size()) {
        throw InvalidArgument("preference does not match the space");
    }
    for (std::size_t k = 0; k < space.objects(); ++k) {
        const Alternative object = Alternative{1} << k;
        const bool good = p.prefers(object, 0);
        for (Alternative s = 0; s < space.size(); ++s) {
            if ((s & object) != 0) {
                continue;
            }
            if (p.prefers(s | object, s) != good) {
                return false;
            }
        }
    }
    return true;
}

/// The set {k : {k} P {}} of objects that are good under `p`.
inline Alternative good_objects(const Preference& p, const AlternativeSpace& space)
{
    if (!space.is_subsets()) {
        throw InvalidArgument("good objects need a subset space");
    }
    Alternative out = 0;
    for (std::size_t k = 0; k < space.objects(); ++k) {
        const Alternative object = Alternative{1} << k;
        if (p.prefers(object, 0)) {
            out |= object;
        }
    }
    return out;
}

/// Number of top vectors, m^n (saturating).
inline std::uint64_t top_vector_count(std::size_t alternatives, std::size_t agents)
{
    return detail::saturating_pow(alternatives, agents);
}

/// Lexicographic rank of a top vector, first agent most significant.
inline std::size_t top_vector_index(std::span<const Alternative> tops, std::size_t alternatives)
{
    std::size_t index = 0;
    for (Alternative t : tops) {
        index = index * alternatives + t;
    }
    return index;
}

inline TopVector top_vector_at(std::size_t index, std::size_t alternatives, std::size_t agents)
{
    TopVector tops(agents);
    for (std::size_t j = agents; j-- > 0;) {
        tops[j] = static_cast<Alternative>(index % alternatives);
        index /= alternatives;
    }
    return tops;
}

/// Calls `fn(tops)` for each of the m^n top vectors in lexicographic order.
template <typename Fn>
void for_each_top_vector(std::size_t alternatives, std::size_t agents, Fn&& fn)
{
    TopVector tops(agents, 0);
    while (true) {
        fn(static_cast<const TopVector&>(tops));
        std::size_t j = agents;
        while (j > 0) {
            --j;
            if (++tops[j] < alternatives) {
                break;
            }
            tops[j] = 0;
            if (j == 0) {
                return;
            }
        }
        if (agents == 0) {
            return;
        }
    }
}

inline std::vector<TopVector> enumerate_top_vectors(const AlternativeSpace& space, std::size_t agents,
                                                    const Budget& budget = {})
{
    budget.require_profiles(top_vector_count(space.size(), agents), "enumerate_top_vectors");
    std::vector<TopVector> out;
    for_each_top_vector(space.size(), agents, [&](const TopVector& t) { out.push_back(t); });
    return out;
}

} // namespace nomvote

#endif // NOMVOTE_DOMAIN_HPP
