#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace nashpeer {

/// Traffic volume in whole traffic-units per accounting period.
using Volume = std::int64_t;

/// Exact money amount, stored as a signed count of micro-units
/// (1 currency unit == 1,000,000 micro-units).
///
/// Settlements must satisfy conservation and equal-gain identities exactly,
/// so all settlement arithmetic stays in integers. Halving an odd micro
/// count rounds half away from zero, which keeps half(-m) == -half(m).
class Money {
public:
    static constexpr std::int64_t kMicroPerUnit = 1'000'000;

    constexpr Money() = default;

    static constexpr Money from_micro(std::int64_t micro) { return Money(micro); }

    /// Converts a real-valued unit amount, rounding to the nearest micro.
    static Money from_units(double units) {
        if (!std::isfinite(units)) {
            throw std::domain_error("money amount must be finite");
        }
        return Money(static_cast<std::int64_t>(std::llround(units * kMicroPerUnit)));
    }

    static constexpr Money max() { return Money(std::numeric_limits<std::int64_t>::max()); }

    constexpr std::int64_t micro() const { return micro_; }
    constexpr double units() const { return static_cast<double>(micro_) / kMicroPerUnit; }

    constexpr Money half() const {
        if (micro_ % 2 == 0) return Money(micro_ / 2);
        return Money((micro_ + (micro_ > 0 ? 1 : -1)) / 2);
    }

    constexpr Money abs() const { return Money(micro_ < 0 ? -micro_ : micro_); }
    constexpr bool is_zero() const { return micro_ == 0; }
    constexpr bool is_negative() const { return micro_ < 0; }
    constexpr bool is_positive() const { return micro_ > 0; }

    constexpr Money operator-() const { return Money(-micro_); }
    constexpr Money operator+(Money o) const { return Money(micro_ + o.micro_); }
    constexpr Money operator-(Money o) const { return Money(micro_ - o.micro_); }
    constexpr Money operator*(std::int64_t k) const { return Money(micro_ * k); }
    Money& operator+=(Money o) { micro_ += o.micro_; return *this; }
    Money& operator-=(Money o) { micro_ -= o.micro_; return *this; }

    constexpr auto operator<=>(const Money&) const = default;

    /// Decimal rendering in currency units, e.g. "3", "-0.5", "1.25".
    std::string to_string() const {
        std::int64_t m = micro_;
        std::string sign = m < 0 ? "-" : "";
        std::uint64_t mag = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
        std::uint64_t whole = mag / kMicroPerUnit;
        std::uint64_t frac = mag % kMicroPerUnit;
        if (frac == 0) return sign + std::to_string(whole);
        std::string f = std::to_string(frac);
        f.insert(f.begin(), 6 - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        return sign + std::to_string(whole) + "." + f;
    }

private:
    constexpr explicit Money(std::int64_t micro) : micro_(micro) {}
    std::int64_t micro_ = 0;
};

constexpr Money operator*(std::int64_t k, Money m) { return m * k; }

}  // namespace nashpeer
