#pragma once

// Exact rationals with a machine-word fast path.
//
// Values whose numerator and denominator fit in int64 are stored inline; anything
// larger is promoted to a shared, immutable GMP rational. Results are demoted back
// whenever they fit again, so the representation of a value is canonical.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

#include "pointed/errors.hpp"

namespace pointed {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool fits_i64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) { assign(detail::i128(n), detail::i128(d)); }

    explicit Rational(const mpq_class& q) { assign_big(q); }

    /// Parses "p", "-p", "p/q" with arbitrary-size decimal integers.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        mpq_class q;
        try {
            if (slash == std::string::npos) {
                q = mpq_class(mpz_class(s, 10));
            } else {
                mpz_class n(s.substr(0, slash), 10);
                mpz_class d(s.substr(slash + 1), 10);
                if (d == 0) throw DivisionByZero();
                q = mpq_class(n, d);
                q.canonicalize();
            }
        } catch (const std::invalid_argument&) {
            throw ValidationError("bad_rational", "cannot parse rational '" + s + "'");
        }
        return Rational(q);
    }

    static Rational from_strings(const std::string& num, const std::string& den) {
        return parse(num + "/" + den);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const noexcept {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
        return q;
    }

    std::string numerator_string() const {
        return big_ ? big_->get_num().get_str() : std::to_string(num_);
    }
    std::string denominator_string() const {
        return big_ ? big_->get_den().get_str() : std::to_string(den_);
    }
    std::string to_string() const {
        if (is_integer()) return numerator_string();
        return numerator_string() + "/" + denominator_string();
    }

    Rational operator-() const {
        if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
            Rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
        return Rational(mpq_class(-to_mpq()));
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (!big_) {
            Rational r;
            r.assign(detail::i128(den_), detail::i128(num_));
            return r;
        }
        return Rational(mpq_class(1 / *big_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            Rational r;
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(a.num_, b.num_, &s)) {
                    r.num_ = s;
                    return r;
                }
            }
            using detail::i128;
            i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
            i128 d = i128(a.den_) * b.den_;
            r.assign(n, d);
            return r;
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            Rational r;
            if (a.num_ == 0 || b.num_ == 0) return r;
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t p;
                if (!__builtin_mul_overflow(a.num_, b.num_, &p)) {
                    r.num_ = p;
                    return r;
                }
            }
            using detail::i128;
            r.assign(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
            return r;
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical: a big value never fits the inline form
    }

    friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }

private:
    void assign(detail::i128 n, detail::i128 d) {
        using namespace detail;
        if (d == 0) throw DivisionByZero();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        u128 un = n < 0 ? static_cast<u128>(-(n + 1)) + 1 : static_cast<u128>(n);
        u128 g = gcd_u128(un, static_cast<u128>(d));
        if (g > 1) {
            n /= static_cast<i128>(g);
            d /= static_cast<i128>(g);
        }
        if (fits_i64(n) && fits_i64(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
        } else {
            mpq_class q(to_mpz(n), to_mpz(d));
            big_ = std::make_shared<const mpq_class>(q);
            num_ = 0;
            den_ = 1;
        }
    }

    void assign_big(mpq_class q) {
        q.canonicalize();
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_shared<const mpq_class>(std::move(q));
            num_ = 0;
            den_ = 1;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace pointed
