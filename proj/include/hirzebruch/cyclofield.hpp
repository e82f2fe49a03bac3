#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hirzebruch/errors.hpp"
#include "hirzebruch/rational.hpp"

namespace hirzebruch {

namespace detail {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

inline void trim(IntPoly& p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial; the remainder must vanish.
inline IntPoly divide_exact_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        mpz_class c = num[k];
        if (c == 0) continue;
        q[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw InternalContradiction("cyclotomic division left a remainder");
    trim(q);
    return q;
}

}  // namespace detail

/// Static data of the cyclotomic field Q(zeta_m): the modulus Phi_m and the
/// reductions of x^e modulo Phi_m needed by multiplication and conjugation.
class CyclotomicField {
public:
    /// Shared, write-once instance for order m (m >= 1).
    static const CyclotomicField& get(int m)
    {
        if (m < 1) throw InvalidParameter("cyclotomic order must be positive, got " + std::to_string(m));
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<const CyclotomicField>> cache;
        std::lock_guard lock(mutex);
        auto it = cache.find(m);
        if (it == cache.end())
            it = cache.emplace(m, std::unique_ptr<const CyclotomicField>(new CyclotomicField(m))).first;
        return *it->second;
    }

    int order() const { return order_; }
    std::size_t degree() const { return modulus_.size() - 1; }

    /// Phi_m with integer coefficients, lowest degree first; monic.
    const detail::IntPoly& modulus() const { return modulus_; }

    /// x^e reduced modulo Phi_m, for 0 <= e < power_table_size().
    const std::vector<Rational>& power(std::size_t e) const { return powers_.at(e); }
    std::size_t power_table_size() const { return powers_.size(); }

    /// Integer coefficients of Phi_m.
    static detail::IntPoly cyclotomic_polynomial(int m) { return get(m).modulus(); }

private:
    explicit CyclotomicField(int m) : order_(m)
    {
        modulus_ = compute_modulus(m);
        const std::size_t deg = degree();
        const std::size_t table = std::max<std::size_t>(static_cast<std::size_t>(m), 2 * deg);
        powers_.reserve(table);
        std::vector<Rational> cur(deg, Rational(0));
        if (deg > 0) cur[0] = 1;
        for (std::size_t e = 0; e < table; ++e) {
            powers_.push_back(cur);
            // multiply by x and reduce with the monic modulus
            Rational top = cur[deg - 1];
            for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * modulus_[i];
            cur[0] = -top * modulus_[0];
        }
    }

    static detail::IntPoly compute_modulus(int m)
    {
        detail::IntPoly p(static_cast<std::size_t>(m) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(m)] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) p = detail::divide_exact_monic(p, modulus_unlocked(d));
        return p;
    }

    // Divisor moduli are recomputed locally to avoid re-entering the cache lock.
    static detail::IntPoly modulus_unlocked(int d)
    {
        if (d == 1) return {mpz_class(-1), mpz_class(1)};
        return compute_modulus(d);
    }

    int order_;
    detail::IntPoly modulus_;
    std::vector<std::vector<Rational>> powers_;
};

/// Euler's totient, i.e. the degree of Q(zeta_m) over Q.
inline std::size_t euler_phi(int m) { return CyclotomicField::get(m).degree(); }

/// Numeric value of a field element together with a bound on its absolute error.
struct ComplexApprox {
    double re = 0;
    double im = 0;
    double err = 0;

    std::complex<double> value() const { return {re, im}; }
};

/// Exact element of Q(zeta_m), stored as the residue of a rational polynomial
/// in zeta_m modulo Phi_m. Equality is coefficient-wise.
class CycloElement {
public:
    explicit CycloElement(int order = 1) : order_(order), coeffs_(euler_phi(order), Rational(0)) {}

    static CycloElement from_rational(int order, const Rational& r)
    {
        CycloElement e(order);
        e.coeffs_[0] = r;
        return e;
    }

    static CycloElement from_int(int order, long v) { return from_rational(order, Rational(v)); }

    /// zeta_m^k for any integer k.
    static CycloElement zeta(int order, long k)
    {
        const auto& field = CyclotomicField::get(order);
        long e = k % order;
        if (e < 0) e += order;
        CycloElement out(order);
        out.coeffs_ = field.power(static_cast<std::size_t>(e));
        return out;
    }

    /// Polynomial sum_k coeffs[k] zeta^k of any length, reduced modulo Phi_m.
    static CycloElement from_coeffs(int order, std::span<const Rational> coeffs)
    {
        const auto& field = CyclotomicField::get(order);
        CycloElement out(order);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const std::size_t e = k % static_cast<std::size_t>(order);
            const auto& p = field.power(e);
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != 0) out.coeffs_[i] += coeffs[k] * p[i];
        }
        return out;
    }

    int order() const { return order_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    bool is_one() const { return is_rational() && coeffs_[0] == 1; }

    CycloElement& operator+=(const CycloElement& b)
    {
        check_order(b);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        return *this;
    }

    CycloElement& operator-=(const CycloElement& b)
    {
        check_order(b);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
        return *this;
    }

    CycloElement& operator*=(const CycloElement& b)
    {
        *this = *this * b;
        return *this;
    }

    CycloElement& operator/=(const CycloElement& b)
    {
        *this = *this * b.inverse();
        return *this;
    }

    CycloElement operator-() const
    {
        CycloElement out(*this);
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    CycloElement scaled(const Rational& r) const
    {
        CycloElement out(*this);
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }

    friend CycloElement operator*(const CycloElement& a, const CycloElement& b)
    {
        a.check_order(b);
        const auto& field = CyclotomicField::get(a.order_);
        const std::size_t deg = a.coeffs_.size();
        std::vector<Rational> prod(2 * deg - 1, Rational(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        CycloElement out(a.order_);
        for (std::size_t i = 0; i < deg; ++i) out.coeffs_[i] = prod[i];
        for (std::size_t k = deg; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const auto& p = field.power(k);
            for (std::size_t i = 0; i < deg; ++i)
                if (p[i] != 0) out.coeffs_[i] += prod[k] * p[i];
        }
        return out;
    }

    friend CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

    friend bool operator==(const CycloElement& a, const CycloElement& b)
    {
        a.check_order(b);
        return a.coeffs_ == b.coeffs_;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
    CycloElement inverse() const
    {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
        using Poly = std::vector<Rational>;
        auto trim = [](Poly& p) {
            while (p.size() > 1 && p.back() == 0) p.pop_back();
        };
        auto sub_mul = [&](const Poly& x, const Poly& q, const Poly& y) {
            Poly out(std::max(x.size(), q.size() + y.size() - 1), Rational(0));
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j) out[i + j] -= q[i] * y[j];
            trim(out);
            return out;
        };

        const auto& modulus = CyclotomicField::get(order_).modulus();
        Poly r0(modulus.begin(), modulus.end());
        Poly r1 = coeffs_;
        trim(r1);
        Poly s0{Rational(0)}, s1{Rational(1)};
        while (r1.size() > 1) {
            // polynomial long division r0 = q r1 + rem
            Poly rem = r0;
            Poly q(r0.size() - r1.size() + 1, Rational(0));
            const std::size_t dr = r1.size() - 1;
            for (std::size_t k = rem.size(); k > dr;) {
                --k;
                if (rem[k] == 0) continue;
                Rational c = rem[k] / r1.back();
                q[k - dr] = c;
                for (std::size_t i = 0; i <= dr; ++i) rem[k - dr + i] -= c * r1[i];
            }
            rem.resize(dr);
            trim(rem);
            Poly s = sub_mul(s0, q, s1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r1 is a nonzero constant since Phi_m is irreducible
        for (auto& c : s1) c /= r1[0];
        return from_coeffs(order_, s1);
    }

    /// Complex conjugation zeta -> zeta^(m-1).
    CycloElement conj() const
    {
        std::vector<Rational> image(static_cast<std::size_t>(order_), Rational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            std::size_t e = (static_cast<std::size_t>(order_) - k % static_cast<std::size_t>(order_)) %
                            static_cast<std::size_t>(order_);
            image[e] += coeffs_[k];
        }
        return from_coeffs(order_, image);
    }

    /// Evaluation at exp(2 pi i / m) in double precision with an error bound.
    ComplexApprox embed() const
    {
        constexpr double u = std::numeric_limits<double>::epsilon() / 2;
        const double m = static_cast<double>(order_);
        double re = 0, im = 0, magnitude = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const double c = coeffs_[k].get_d();
            const double theta = 2 * std::numbers::pi * static_cast<double>(k) / m;
            re += c * std::cos(theta);
            im += c * std::sin(theta);
            magnitude += std::abs(c);
        }
        // a lone rational term is exact whenever its conversion to double is
        if (is_rational()) return {re, 0.0, Rational(re) == coeffs_[0] ? 0.0 : std::abs(re) * u};
        const double err = magnitude * (16.0 + 2.0 * static_cast<double>(coeffs_.size())) * u;
        return {re, im, err};
    }

    /// Lexicographic order on coefficient vectors; used for canonical sorting.
    friend int compare(const CycloElement& a, const CycloElement& b)
    {
        a.check_order(b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }

private:
    void check_order(const CycloElement& b) const
    {
        if (order_ != b.order_)
            throw OrderMismatch("mixed cyclotomic orders " + std::to_string(order_) + " and " +
                                std::to_string(b.order_));
    }

    int order_;
    std::vector<Rational> coeffs_;
};

inline CycloElement add(const CycloElement& a, const CycloElement& b) { return a + b; }
inline CycloElement mul(const CycloElement& a, const CycloElement& b) { return a * b; }
inline CycloElement inv(const CycloElement& a) { return a.inverse(); }
inline CycloElement conj(const CycloElement& a) { return a.conj(); }
inline ComplexApprox embed(const CycloElement& a) { return a.embed(); }

/// Textual coefficient list ("p/q" strings, lowest degree first).
inline std::vector<std::string> to_strings(const CycloElement& a)
{
    std::vector<std::string> out;
    for (const auto& c : a.coeffs()) out.push_back(to_string(c));
    return out;
}

inline CycloElement from_strings(int order, const std::vector<std::string>& text)
{
    const std::size_t deg = euler_phi(order);
    if (text.size() != deg)
        throw ParseError("expected " + std::to_string(deg) + " coefficients for Q(zeta_" + std::to_string(order) +
                         "), got " + std::to_string(text.size()));
    std::vector<Rational> coeffs;
    coeffs.reserve(deg);
    for (const auto& s : text) coeffs.push_back(parse_rational(s));
    return CycloElement::from_coeffs(order, coeffs);
}

}  // namespace hirzebruch
