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

#ifndef NOMVOTE_ERROR_HPP
#define NOMVOTE_ERROR_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nomvote {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: equal top/bottom, empty sets, wrong space kind,
/// dimension mismatches, invalid rule parameters.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// An exhaustive scan would exceed the configured enumeration budget.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

/// A closed-form computation was requested for a family without one.
class UnsupportedFamily : public Error
{
public:
    using Error::Error;
};

/// The standing assumption of a closed form does not hold for the input.
class AssumptionViolated : public Error
{
public:
    using Error::Error;
};

/// A conditional characterization was requested for a rule whose
/// hypotheses could not be machine-verified.
class HypothesisNotVerified : public Error
{
public:
    using Error::Error;
};

namespace detail {

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a) {
        return saturated;
    }
    return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent)
{
    std::uint64_t result = 1;
    for (std::uint64_t e = 0; e < exponent; ++e) {
        result = saturating_mul(result, base);
    }
    return result;
}

inline std::uint64_t saturating_factorial(std::uint64_t n)
{
    std::uint64_t result = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
        result = saturating_mul(result, k);
    }
    return result;
}

} // namespace detail

/**
 * Hard caps on exhaustive enumeration.
 *
 * `max_preferences` bounds the number of strict orders (m!) a scan may
 * enumerate, `max_profiles` bounds the number of (top or preference)
 * profiles. Exceeding either raises BudgetExceeded; scans never truncate.
 */
struct Budget
{
    std::uint64_t max_preferences = 40320;
    std::uint64_t max_profiles = 10'000'000;

    void require_preferences(std::uint64_t count, const std::string& what) const
    {
        if (count > max_preferences) {
            throw BudgetExceeded(what + ": " + describe(count) + " preferences exceed budget of " +
                                 std::to_string(max_preferences));
        }
    }

    void require_profiles(std::uint64_t count, const std::string& what) const
    {
        if (count > max_profiles) {
            throw BudgetExceeded(what + ": " + describe(count) + " profiles exceed budget of " +
                                 std::to_string(max_profiles));
        }
    }

    friend bool operator==(const Budget&, const Budget&) = default;

private:
    static std::string describe(std::uint64_t count)
    {
        return count == detail::saturated ? std::string("more than 2^64") : std::to_string(count);
    }
};

} // namespace nomvote

#endif // NOMVOTE_ERROR_HPP
