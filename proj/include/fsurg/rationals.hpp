#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsurg {

using Int = std::int64_t;
using Wide = __int128;

// Largest |numerator| / denominator accepted from external input. All
// products of slope entries are evaluated in 128 bits.
inline constexpr Int kInputLimit = 1'000'000'000;

Int gcd_nonneg(Int a, Int b) noexcept;

// A normalized surgery coefficient p/q: p >= 0, q >= 1, gcd(p, q) = 1.
// Negative inputs fold to |p|/|q| (mirror slope); q = 0 is rejected here,
// infinity exists only as a Slope.
class SurgeryCoefficient {
public:
    SurgeryCoefficient() noexcept : p_(0), q_(1) {}

    static SurgeryCoefficient normalize(Int p, Int q);

    Int p() const noexcept { return p_; }
    Int q() const noexcept { return q_; }
    Int integer_part() const noexcept { return p_ / q_; }
    Int remainder() const noexcept { return p_ % q_; }
    bool is_integer() const noexcept { return q_ == 1; }

    friend bool operator==(const SurgeryCoefficient&,
                           const SurgeryCoefficient&) = default;

    // -1/0/+1 by rational value.
    static int compare(const SurgeryCoefficient& a, const SurgeryCoefficient& b) noexcept;

    std::string str() const;

private:
    SurgeryCoefficient(Int p, Int q) noexcept : p_(p), q_(q) {}
    Int p_;
    Int q_;
};

// Canonical regular continued fraction [a0; a1, ..., an]: a0 >= 0, ai >= 1,
// and an >= 2 whenever n >= 1. Plain Euclid produces this form directly;
// 0/1 expands to [0] and 1/1 to [1].
class ContinuedFraction {
public:
    static ContinuedFraction expand(const SurgeryCoefficient& x);

    const std::vector<Int>& quotients() const noexcept { return quotients_; }
    Int sum() const noexcept;
    SurgeryCoefficient evaluate() const;
    std::string str() const;

    // Evaluates an arbitrary quotient sequence (a0 >= 0, rest >= 1). Used to
    // compare the [..., an] and [..., an - 1, 1] tail conventions.
    static SurgeryCoefficient evaluate_quotients(const std::vector<Int>& quotients);

private:
    explicit ContinuedFraction(std::vector<Int> q) : quotients_(std::move(q)) {}
    std::vector<Int> quotients_;
};

// Sum of all partial quotients of p/q; s_sum(0/1) = 0.
Int s_sum(const SurgeryCoefficient& x);

// Parses "p/q" or "p" (strict; surrounding whitespace trimmed). "inf" is not
// a surgery coefficient, only a Slope.
SurgeryCoefficient parse_surgery_coefficient(const std::string& text);

}  // namespace fsurg
