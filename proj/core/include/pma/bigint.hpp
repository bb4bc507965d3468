#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pma {

// Minimal unsigned big integer: just enough for exact binomial coefficients.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) : limbs_{v} {}

    void mul_u64(std::uint64_t m) {
        __uint128_t carry = 0;
        for (auto& limb : limbs_) {
            __uint128_t cur = static_cast<__uint128_t>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    }

    // Exact division by a small divisor; throws if a remainder is left.
    void divexact_u64(std::uint64_t d) {
        __uint128_t rem = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
            __uint128_t cur = (rem << 64) | *it;
            *it = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        if (rem != 0) throw std::logic_error("BigUint: division was not exact");
        trim();
    }

    // Mantissa-exponent view: value ~= mantissa * 2^exp2 with mantissa in [0.5, 1).
    void to_double_exp(double& mantissa, long& exp2) const {
        int top = static_cast<int>(limbs_.size()) - 1;
        while (top > 0 && limbs_[top] == 0) --top;
        double acc = 0;
        // Three limbs carry far more than double precision.
        for (int i = top; i >= 0 && i >= top - 2; --i)
            acc = acc * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
        int e;
        acc = std::frexp(acc, &e);
        mantissa = acc;
        exp2 = e + 64L * (top >= 2 ? top - 2 : 0);
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    // Exact ratio a/b as double; accurate to double precision for any magnitudes.
    static double ratio(const BigUint& a, const BigUint& b) {
        if (a.is_zero()) return 0.0;
        double ma, mb;
        long ea, eb;
        a.to_double_exp(ma, ea);
        b.to_double_exp(mb, eb);
        return std::ldexp(ma / mb, static_cast<int>(ea - eb));
    }

  private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;
};

// C(n, k) computed exactly (multiplicative form; each step divides exactly).
inline BigUint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint c(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        c.mul_u64(static_cast<std::uint64_t>(n - k + i));
        c.divexact_u64(static_cast<std::uint64_t>(i));
    }
    return c;
}

}  // namespace pma
