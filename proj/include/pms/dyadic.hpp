#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pms {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational num / 2^exp, kept in canonical form:
/// num odd or exp == 0 (and 0 is represented as 0 / 2^0).
class Dyadic {
public:
    Dyadic() = default;

    Dyadic(BigInt num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) {
        canonicalize();
    }

    Dyadic(std::int64_t n) : num_(n), exp_(0) {}  // NOLINT: implicit by design

    static Dyadic zero() { return Dyadic{}; }
    static Dyadic one() { return Dyadic{1}; }

    /// 1 / 2^k.
    static Dyadic half_pow(std::uint32_t k) { return Dyadic{BigInt{1}, k}; }

    const BigInt& num() const { return num_; }
    std::uint32_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const { return Dyadic{-num_, exp_}; }

    Dyadic operator+(const Dyadic& o) const {
        std::uint32_t e = std::max(exp_, o.exp_);
        return Dyadic{(num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e};
    }

    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    Dyadic operator*(const Dyadic& o) const {
        std::uint64_t e = static_cast<std::uint64_t>(exp_) + o.exp_;
        if (e > UINT32_MAX) throw std::overflow_error("dyadic exponent overflow");
        return Dyadic{num_ * o.num_, static_cast<std::uint32_t>(e)};
    }

    /// Value / 2^k.
    Dyadic scaled_down(std::uint32_t k) const { return Dyadic{num_, exp_ + k}; }

    /// Value * 2^k (exact; may raise the numerator).
    Dyadic scaled_up(std::uint32_t k) const {
        if (exp_ >= k) return Dyadic{num_, exp_ - k};
        return Dyadic{num_ << (k - exp_), 0};
    }

    Dyadic half() const { return scaled_down(1); }

    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    std::strong_ordering operator<=>(const Dyadic& o) const {
        std::uint32_t e = std::max(exp_, o.exp_);
        BigInt a = num_ << (e - exp_);
        BigInt b = o.num_ << (e - o.exp_);
        if (a < b) return std::strong_ordering::less;
        if (a > b) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool operator==(const Dyadic& o) const {
        return exp_ == o.exp_ && num_ == o.num_;
    }

    /// Canonical text form: "0", "3", "-1/2^1", "3/2^2".
    std::string str() const;

    /// Accepts "num/2^exp", plain integers, "0". Throws std::invalid_argument.
    static Dyadic parse(const std::string& text);

private:
    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_{0};
    std::uint32_t exp_{0};
};

inline Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

/// Exact nonnegative ratio of two dyadics, for Lipschitz-constant bookkeeping.
/// Compared by cross multiplication; never materialized as a dyadic.
struct DyadicRatio {
    BigInt num{0};
    BigInt den{1};

    static DyadicRatio of(const Dyadic& a, const Dyadic& b);

    bool operator<(const DyadicRatio& o) const { return num * o.den < o.num * den; }
    bool operator<=(const DyadicRatio& o) const { return num * o.den <= o.num * den; }
    bool operator==(const DyadicRatio& o) const { return num * o.den == o.num * den; }
};

}  // namespace pms
