#include "fsurg/rationals.hpp"

#include <limits>

namespace fsurg {

Int gcd_nonneg(Int a, Int b) noexcept {
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

SurgeryCoefficient SurgeryCoefficient::normalize(Int p, Int q) {
    if (q == 0) {
        if (p == 0)
            throw std::invalid_argument("surgery coefficient 0/0 is undefined");
        throw std::domain_error("infinite surgery coefficient not admitted");
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (p < 0)
        p = -p;  // 4_1(-p/q) and 4_1(p/q) are homeomorphic
    Int g = gcd_nonneg(p, q);
    return SurgeryCoefficient(p / g, q / g);
}

int SurgeryCoefficient::compare(const SurgeryCoefficient& a,
                                const SurgeryCoefficient& b) noexcept {
    Wide d = Wide(a.p_) * b.q_ - Wide(a.q_) * b.p_;
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

std::string SurgeryCoefficient::str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

ContinuedFraction ContinuedFraction::expand(const SurgeryCoefficient& x) {
    std::vector<Int> qs;
    Int num = x.p();
    Int den = x.q();
    for (;;) {
        qs.push_back(num / den);
        Int rem = num % den;
        if (rem == 0)
            break;
        num = den;
        den = rem;
    }
    return ContinuedFraction(std::move(qs));
}

Int ContinuedFraction::sum() const noexcept {
    Int s = 0;
    for (Int a : quotients_)
        s += a;
    return s;
}

SurgeryCoefficient ContinuedFraction::evaluate() const {
    return evaluate_quotients(quotients_);
}

SurgeryCoefficient ContinuedFraction::evaluate_quotients(const std::vector<Int>& quotients) {
    if (quotients.empty())
        throw std::invalid_argument("empty continued fraction");
    // Back-to-front: x_k = a_k + 1/x_{k+1}, tracked as num/den.
    Int num = 1;
    Int den = 0;
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
        Wide next = Wide(*it) * num + den;
        if (next > std::numeric_limits<Int>::max())
            throw std::overflow_error("continued fraction value exceeds 64-bit range");
        den = num;
        num = Int(next);
    }
    return SurgeryCoefficient::normalize(num, den);
}

std::string ContinuedFraction::str() const {
    std::string out = "[" + std::to_string(quotients_[0]);
    for (std::size_t i = 1; i < quotients_.size(); ++i)
        out += (i == 1 ? "; " : ", ") + std::to_string(quotients_[i]);
    out += "]";
    return out;
}

Int s_sum(const SurgeryCoefficient& x) {
    return ContinuedFraction::expand(x).sum();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Strict signed integer with magnitude bound; rejects empty/garbage.
Int parse_bounded_int(const std::string& tok) {
    if (tok.empty())
        throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (tok[0] == '-') {
        neg = true;
        i = 1;
        if (tok.size() == 1)
            throw std::invalid_argument("bare '-' is not a number");
    }
    Int v = 0;
    for (; i < tok.size(); ++i) {
        char c = tok[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid digit in '" + tok + "'");
        v = v * 10 + (c - '0');
        if (v > kInputLimit)
            throw std::out_of_range("'" + tok + "' exceeds the input limit of 10^9");
    }
    return neg ? -v : v;
}

}  // namespace

SurgeryCoefficient parse_surgery_coefficient(const std::string& text) {
    std::string t = trim(text);
    if (t == "inf" || t == "-inf")
        throw std::domain_error("infinite surgery coefficient not admitted");
    std::size_t slash = t.find('/');
    if (slash == std::string::npos)
        return SurgeryCoefficient::normalize(parse_bounded_int(t), 1);
    Int p = parse_bounded_int(t.substr(0, slash));
    Int q = parse_bounded_int(t.substr(slash + 1));
    return SurgeryCoefficient::normalize(p, q);
}

}  // namespace fsurg
