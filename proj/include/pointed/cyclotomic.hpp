#pragma once

// The cyclotomic field Q(zeta_m), represented as Q[x]/(Phi_m).
//
// Elements carry a pointer to a shared field descriptor. Rationals are
// conductor-agnostic: an element whose power-basis expansion has length <= 1 mixes
// freely with elements of any conductor. Two genuinely irrational operands of
// different conductors are lifted to the lcm conductor.

#include <boost/container/small_vector.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "pointed/errors.hpp"
#include "pointed/rational.hpp"

namespace pointed {

using IntPoly = std::vector<long long>;  // coefficients, lowest degree first

namespace detail {

// Exact quotient of a by a monic divisor b; throws if the division is not exact.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (a.size() < b.size()) throw StructuralError("polynomial division: degree too small");
    IntPoly rem = a;
    IntPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long c = rem[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    for (long long r : rem) {
        if (r != 0) throw StructuralError("polynomial division is not exact");
    }
    return q;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace detail

/// Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline IntPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw ValidationError("bad_conductor", "cyclotomic polynomial needs m >= 1");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    IntPoly den{1};
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) den = detail::multiply(den, cyclotomic_polynomial(d));
    }
    IntPoly phi = detail::divide_exact(num, den);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, phi);
    return phi;
}

/// Descriptor of Q(zeta_m): reduction rows for x^k mod Phi_m and cached powers of zeta.
class CyclotomicField {
public:
    explicit CyclotomicField(int m) : m_(m), phi_poly_(cyclotomic_polynomial(m)) {
        degree_ = static_cast<int>(phi_poly_.size()) - 1;
        // rows_[k] = x^k mod Phi_m for 0 <= k <= max(2*degree-2, m-1)
        int top = std::max(2 * degree_ - 2, m_ - 1);
        rows_.assign(top + 1, std::vector<Rational>(degree_, Rational(0)));
        for (int k = 0; k <= top; ++k) {
            if (k < degree_) {
                rows_[k][k] = 1;
                continue;
            }
            // x * rows_[k-1], then replace x^degree by -(lower part of Phi)
            const auto& prev = rows_[k - 1];
            std::vector<Rational> next(degree_, Rational(0));
            Rational carry = prev[degree_ - 1];
            for (int i = degree_ - 1; i > 0; --i) next[i] = prev[i - 1];
            if (!carry.is_zero()) {
                for (int i = 0; i < degree_; ++i) next[i] -= carry * Rational(phi_poly_[i]);
            }
            rows_[k] = std::move(next);
        }
    }

    int conductor() const noexcept { return m_; }
    int degree() const noexcept { return degree_; }
    const IntPoly& modulus() const noexcept { return phi_poly_; }

    /// x^k reduced modulo Phi_m, as a dense row of length degree().
    const std::vector<Rational>& power_row(int k) const { return rows_.at(k); }
    int max_row() const noexcept { return static_cast<int>(rows_.size()) - 1; }

private:
    int m_;
    IntPoly phi_poly_;
    int degree_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

/// Process-wide registry; returned references stay valid for the program's lifetime.
inline const CyclotomicField& cyclotomic_field(int m) {
    if (m < 1) throw ValidationError("bad_conductor", "conductor must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[m];
    if (!slot) slot = std::make_unique<CyclotomicField>(m);
    return *slot;
}

namespace detail {
inline const CyclotomicField* rational_field() {
    static const CyclotomicField* q = &cyclotomic_field(1);
    return q;
}
}  // namespace detail

class CycScalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    CycScalar() : field_(detail::rational_field()) {}
    CycScalar(const Rational& r) : field_(detail::rational_field()) {  // NOLINT
        if (!r.is_zero()) c_.push_back(r);
    }
    CycScalar(int v) : CycScalar(Rational(v)) {}        // NOLINT
    CycScalar(long long v) : CycScalar(Rational(v)) {}  // NOLINT

    /// Element with the given power-basis coefficients in Q(zeta_m).
    static CycScalar from_coeffs(int m, const std::vector<Rational>& coeffs) {
        const CyclotomicField& f = cyclotomic_field(m);
        if (static_cast<int>(coeffs.size()) > f.degree())
            throw ValidationError("bad_scalar", "too many coefficients for conductor " + std::to_string(m));
        CycScalar r;
        r.field_ = &f;
        r.c_.assign(coeffs.begin(), coeffs.end());
        r.trim();
        return r;
    }

    /// omega^k with omega = zeta_m.
    static CycScalar root_of_unity(int m, long long k) {
        const CyclotomicField& f = cyclotomic_field(m);
        long long e = ((k % m) + m) % m;
        CycScalar r;
        r.field_ = &f;
        const auto& row = f.power_row(static_cast<int>(e));
        r.c_.assign(row.begin(), row.end());
        r.trim();
        return r;
    }

    int conductor() const noexcept { return field_->conductor(); }
    const CyclotomicField& field() const noexcept { return *field_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_rational() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }

    Rational rational_value() const {
        if (!is_rational()) throw StructuralError("scalar is not rational: " + to_string());
        return c_.empty() ? Rational(0) : c_[0];
    }

    /// Coefficient of zeta^i in the power basis (zero beyond the stored length).
    Rational coeff(int i) const {
        return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
    }

    /// Coefficients padded to the field degree.
    std::vector<Rational> dense_coeffs() const {
        std::vector<Rational> out(field_->degree(), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        return out;
    }

    CycScalar operator-() const {
        CycScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const CyclotomicField* f = common_field(a, b);
        CycScalar x = a.lifted(f), y = b.lifted(f);
        if (x.c_.size() < y.c_.size()) std::swap(x, y);
        for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        x.field_ = f;
        x.trim();
        return x;
    }

    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        if (a.is_zero() || b.is_zero()) return CycScalar();
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        const CyclotomicField* f = common_field(a, b);
        CycScalar x = a.lifted(f), y = b.lifted(f);
        std::size_t n = x.c_.size() + y.c_.size() - 1;
        std::vector<Rational> prod(n, Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j].is_zero()) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        return reduce(f, prod);
    }

    CycScalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return CycScalar(c_[0].inverse()).with_field(field_);
        // Extended Euclid: find u with u * a = 1 mod Phi.
        using Poly = std::vector<Rational>;
        Poly r0, r1(c_.begin(), c_.end());
        for (long long v : field_->modulus()) r0.push_back(Rational(v));
        Poly s0{Rational(0)}, s1{Rational(1)};
        auto trim = [](Poly& p) {
            while (!p.empty() && p.back().is_zero()) p.pop_back();
        };
        trim(r1);
        while (!(r1.size() == 1)) {
            // r0 = q r1 + rem
            Poly rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
            Rational lead_inv = r1.back().inverse();
            while (rem.size() >= r1.size() && !rem.empty()) {
                std::size_t shift = rem.size() - r1.size();
                Rational c = rem.back() * lead_inv;
                q[shift] = c;
                for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
                trim(rem);
            }
            // s2 = s0 - q s1
            Poly qs(q.size() + s1.size() - 1, Rational(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            Poly s2(std::max(s0.size(), qs.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) throw StructuralError("non-invertible element in cyclotomic field");
        }
        Rational k = r1[0].inverse();
        for (auto& x : s1) x *= k;
        return reduce(field_, s1);
    }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
    CycScalar& operator/=(const CycScalar& o) { return *this = *this / o; }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        if (a.c_.size() != b.c_.size() && (a.is_rational() || b.is_rational())) return false;
        if (a.is_rational() && b.is_rational()) return a.c_ == b.c_;
        if (a.field_ == b.field_) return a.c_ == b.c_;
        return (a - b).is_zero();
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Human-readable form in the power basis, e.g. "z^2 - 1" (z = zeta_m).
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& r = c_[i];
            if (r.is_zero()) continue;
            bool neg = r.sign() < 0;
            Rational a = neg ? -r : r;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
            if (mono.empty()) {
                out += a.to_string();
            } else if (a.is_one()) {
                out += mono;
            } else {
                out += a.to_string() + "*" + mono;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

private:
    CycScalar with_field(const CyclotomicField* f) const {
        CycScalar r = *this;
        r.field_ = f;
        return r;
    }

    CycScalar scaled(const Rational& k) const {
        CycScalar r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    static const CyclotomicField* common_field(const CycScalar& a, const CycScalar& b) {
        if (a.field_ == b.field_) return a.field_;
        if (a.is_rational()) return b.field_;
        if (b.is_rational()) return a.field_;
        int ma = a.conductor(), mb = b.conductor();
        return &cyclotomic_field(std::lcm(ma, mb));
    }

    CycScalar lifted(const CyclotomicField* f) const {
        if (field_ == f || is_rational()) return with_field(f);
        int step = f->conductor() / conductor();
        std::vector<Rational> acc(f->degree(), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const auto& row = f->power_row(static_cast<int>((i * step) % f->conductor()));
            for (int j = 0; j < f->degree(); ++j) {
                if (!row[j].is_zero()) acc[j] += c_[i] * row[j];
            }
        }
        CycScalar r;
        r.field_ = f;
        r.c_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    static CycScalar reduce(const CyclotomicField* f, const std::vector<Rational>& poly) {
        int d = f->degree();
        std::vector<Rational> acc(d, Rational(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (poly[k].is_zero()) continue;
            if (static_cast<int>(k) < d) {
                acc[k] += poly[k];
                continue;
            }
            const auto& row = f->power_row(static_cast<int>(k));
            for (int j = 0; j < d; ++j) {
                if (!row[j].is_zero()) acc[j] += poly[k] * row[j];
            }
        }
        CycScalar r;
        r.field_ = f;
        r.c_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const CyclotomicField* field_;
    Coeffs c_;
};

inline CycScalar root_of_unity(int m, long long k) { return CycScalar::root_of_unity(m, k); }

/// Evaluates an integer polynomial at a field element (Horner).
inline CycScalar evaluate(const IntPoly& p, const CycScalar& x) {
    CycScalar acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + CycScalar(p[i]);
    return acc;
}

}  // namespace pointed
