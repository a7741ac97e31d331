#pragma once

#include <compare>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "diracbrush/errors.hpp"

namespace diracbrush {

using Integer = mpz_class;
using ComplexF = std::complex<double>;

// Reduced fraction num/den with den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT: implicit by design, like mpq_class
    Rational(const Integer& n) : v_(n) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "p/q", and plain decimals such as "-1.732" (parsed exactly).
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    double to_double() const;
    Integer floor() const;
    // Representative of *this modulo m, in [0, m). m must be positive.
    Rational mod(const Rational& m) const;
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;
    std::string str() const { return v_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

class EighthRoot;

// e^{i pi phi}, phi kept in [0, 2).
class PhaseQ {
public:
    PhaseQ() = default;
    explicit PhaseQ(const Rational& phi);

    const Rational& phi() const { return phi_; }
    PhaseQ operator*(const PhaseQ& o) const { return PhaseQ(phi_ + o.phi_); }
    PhaseQ inverse() const { return PhaseQ(-phi_); }
    bool is_eighth_root() const;
    EighthRoot to_eighth_root() const;  // throws DomainError unless 4*phi is an integer
    ComplexF value() const;
    friend bool operator==(const PhaseQ& a, const PhaseQ& b) { return a.phi_ == b.phi_; }

private:
    Rational phi_;
};

// e^{i pi k / 4}, k in [0, 8).
class EighthRoot {
public:
    EighthRoot() = default;
    explicit EighthRoot(long k);
    static EighthRoot from_integer(const Integer& k);

    int k() const { return k_; }
    EighthRoot operator*(const EighthRoot& o) const { return EighthRoot(k_ + o.k_); }
    EighthRoot inverse() const { return EighthRoot(-k_); }
    PhaseQ to_phase() const { return PhaseQ(Rational(k_) / Rational(4)); }
    ComplexF value() const;
    friend bool operator==(const EighthRoot& a, const EighthRoot& b) { return a.k_ == b.k_; }

private:
    int k_ = 0;
};

// e^{i pi phi} with exact octant reduction of phi; the table part is exact.
ComplexF cispi(const Rational& phi);
ComplexF cispi(double phi);

class SL2Z {
public:
    SL2Z(Integer a, Integer b, Integer c, Integer d);  // throws DeterminantError
    static SL2Z identity();
    static SL2Z F1();                    // (0 1; -1 0)
    static SL2Z W(const Integer& j);     // (1 0; j 1)

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    SL2Z operator*(const SL2Z& o) const;
    SL2Z inverse() const;
    std::string str() const;
    friend bool operator==(const SL2Z& x, const SL2Z& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    Integer a_, b_, c_, d_;
};

struct ShiftClass {
    Integer q;
    Integer p;
    friend bool operator==(const ShiftClass& x, const ShiftClass& y) { return x.q == y.q && x.p == y.p; }
};

struct ExtGcd {
    Integer g, x, y;
};

ExtGcd gcd_ext(const Integer& a, const Integer& b);

// (c, d) with a d - b c = 1 and 0 < d <= |b|; (0, a) when b = 0.
std::pair<Integer, Integer> complete_to_sl2z(const Integer& a, const Integer& b);

bool shift_parity_check(const SL2Z& m, const ShiftClass& s);
void require_parity(const SL2Z& m, const ShiftClass& s);
// (ab mod 2, cd mod 2) in {0,1}^2.
ShiftClass default_shift(const SL2Z& m);

// Factor in mu(M;(q,p)) = factor * mu(M;(q',p')).
PhaseQ shift_change_phase(const Integer& q, const Integer& p, const Integer& q2, const Integer& p2);

bool is_even(const Integer& n);

}  // namespace diracbrush
