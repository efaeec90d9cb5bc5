#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace graycat {

// Exact field scalar: rationals (p == 0) or a prime residue field Z/p (p > 0).
// The field is a runtime tag so the whole engine can switch fields via a flag.
class Scalar {
public:
    using Rational = boost::multiprecision::cpp_rational;

    Scalar() : p_(0), rat_(0), res_(0) {}

    static Scalar zero(uint32_t p) { return Scalar(p, 0); }
    static Scalar one(uint32_t p) { return Scalar(p, 1); }
    static Scalar from_int(long long v, uint32_t p) { return Scalar(p, v); }
    static Scalar from_rational(const Rational& r) {
        Scalar s;
        s.p_ = 0;
        s.rat_ = r;
        return s;
    }

    uint32_t characteristic() const { return p_; }

    bool is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
    bool is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        if (p_ == 0) return from_rational(rat_ + o.rat_);
        return residue(p_, res_ + o.res_);
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        if (p_ == 0) return from_rational(rat_ - o.rat_);
        return residue(p_, res_ + p_ - o.res_);
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        if (p_ == 0) return from_rational(rat_ * o.rat_);
        return residue(p_, (res_ * o.res_) % p_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar operator-() const {
        if (p_ == 0) return from_rational(-rat_);
        return residue(p_, res_ == 0 ? 0 : p_ - res_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        if (p_ == 0) return from_rational(1 / rat_);
        // extended Euclid for the modular inverse
        long long a = static_cast<long long>(res_), m = static_cast<long long>(p_);
        long long x0 = 0, x1 = 1, b = m;
        while (a > 1) {
            long long q = a / b;
            long long t = b;
            b = a - q * b;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        if (x1 < 0) x1 += m;
        return residue(p_, static_cast<uint64_t>(x1));
    }

    bool operator==(const Scalar& o) const {
        check(o);
        return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        if (p_ == 0) return rat_.str();
        return std::to_string(res_) + " (mod " + std::to_string(p_) + ")";
    }

    const Rational& rational() const {
        if (p_ != 0) throw std::logic_error("Scalar: not a rational");
        return rat_;
    }
    uint64_t residue_value() const { return res_; }

private:
    Scalar(uint32_t p, long long v) : p_(p), rat_(0), res_(0) {
        if (p == 0) {
            rat_ = v;
        } else {
            long long r = v % static_cast<long long>(p);
            if (r < 0) r += p;
            res_ = static_cast<uint64_t>(r);
        }
    }
    static Scalar residue(uint32_t p, uint64_t r) {
        Scalar s;
        s.p_ = p;
        s.res_ = r % p;
        return s;
    }
    void check(const Scalar& o) const {
        if (p_ != o.p_)
            throw std::logic_error("Scalar: mixed field characteristics " +
                                   std::to_string(p_) + " vs " + std::to_string(o.p_));
    }

    uint32_t p_;
    Rational rat_;
    uint64_t res_;
};

// Field descriptor passed around by the engine.
struct Field {
    uint32_t p = 0;  // 0 = rationals, otherwise a prime
    Scalar zero() const { return Scalar::zero(p); }
    Scalar one() const { return Scalar::one(p); }
    Scalar from_int(long long v) const { return Scalar::from_int(v, p); }
};

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace graycat
