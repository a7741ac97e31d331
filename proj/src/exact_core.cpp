#include "diracbrush/exact_core.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace diracbrush {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(whole) + "'");
    Integer out;
    out.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10);
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// e^{i pi k/4} for k in [0,8)
ComplexF octant(int k)
{
    constexpr double h = 0.70710678118654752440;
    switch (k & 7) {
    case 0: return {1.0, 0.0};
    case 1: return {h, h};
    case 2: return {0.0, 1.0};
    case 3: return {-h, h};
    case 4: return {-1.0, 0.0};
    case 5: return {-h, -h};
    case 6: return {0.0, -1.0};
    default: return {h, -h};
    }
}

ComplexF times_octant(int k, double frac)
{
    if (frac == 0.0) return octant(k);
    const double x = std::numbers::pi * frac;
    return octant(k) * ComplexF(std::cos(x), std::sin(x));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer n = parse_integer(trim(s.substr(0, slash)), s);
        Integer d = parse_integer(trim(s.substr(slash + 1)), s);
        if (d == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        return Rational(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) {
            neg = ip.front() == '-';
            ip.remove_prefix(1);
        }
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("not a decimal: '" + std::string(s) + "'");
        Integer n;
        n.set_str(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        if (neg) n = -n;
        return Rational(n, d);
    }
    return Rational(parse_integer(s, s));
}

double Rational::to_double() const
{
    // mpq_get_d truncates; a single IEEE division of exact operands rounds correctly
    const mpz_srcptr n = v_.get_num_mpz_t();
    const mpz_srcptr d = v_.get_den_mpz_t();
    if (mpz_sizeinbase(n, 2) <= 53 && mpz_sizeinbase(d, 2) <= 53) return mpz_get_d(n) / mpz_get_d(d);
    return v_.get_d();
}

Integer Rational::floor() const
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return out;
}

Rational Rational::mod(const Rational& m) const
{
    if (m.sign() <= 0) throw DomainError("modulus must be positive");
    const Rational q = *this / m;
    return *this - m * Rational(q.floor());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }
Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }
Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

PhaseQ::PhaseQ(const Rational& phi) : phi_(phi.mod(Rational(2))) {}

bool PhaseQ::is_eighth_root() const { return (phi_ * Rational(4)).is_integer(); }

EighthRoot PhaseQ::to_eighth_root() const
{
    const Rational k = phi_ * Rational(4);
    if (!k.is_integer()) throw DomainError("phase " + phi_.str() + " is not an eighth root");
    return EighthRoot::from_integer(k.num());
}

ComplexF PhaseQ::value() const { return cispi(phi_); }

EighthRoot::EighthRoot(long k) : k_(static_cast<int>(((k % 8) + 8) % 8)) {}

EighthRoot EighthRoot::from_integer(const Integer& k)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), 8);
    return EighthRoot(r.get_si());
}

ComplexF EighthRoot::value() const { return octant(k_); }

ComplexF cispi(const Rational& phi)
{
    // phi = k/4 + f with |f| <= 1/8, f exact
    const Rational r = phi.mod(Rational(2));
    const Rational four_r = r * Rational(4);
    const Integer k = (four_r + Rational(Integer(1), Integer(2))).floor();
    const Rational f = r - Rational(k) / Rational(4);
    return times_octant(static_cast<int>(k.get_si() & 7), f.to_double());
}

ComplexF cispi(double phi)
{
    const double r = phi - 2.0 * std::floor(phi * 0.5);
    const double k = std::nearbyint(4.0 * r);
    return times_octant(static_cast<int>(k) & 7, r - 0.25 * k);
}

SL2Z::SL2Z(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    const Integer det = a_ * d_ - b_ * c_;
    if (det != 1) throw DeterminantError("determinant is " + det.get_str() + ", expected 1");
}

SL2Z SL2Z::identity() { return SL2Z(1, 0, 0, 1); }
SL2Z SL2Z::F1() { return SL2Z(0, 1, -1, 0); }
SL2Z SL2Z::W(const Integer& j) { return SL2Z(1, 0, j, 1); }

SL2Z SL2Z::operator*(const SL2Z& o) const
{
    return SL2Z(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

SL2Z SL2Z::inverse() const { return SL2Z(d_, -b_, -c_, a_); }

std::string SL2Z::str() const
{
    return "(" + a_.get_str() + " " + b_.get_str() + "; " + c_.get_str() + " " + d_.get_str() + ")";
}

ExtGcd gcd_ext(const Integer& a, const Integer& b)
{
    if (a == 0 && b == 0) throw DomainError("gcd_ext(0, 0) is undefined");
    ExtGcd out;
    mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::pair<Integer, Integer> complete_to_sl2z(const Integer& a, const Integer& b)
{
    const ExtGcd e = gcd_ext(a, b);
    if (e.g != 1)
        throw DomainError("(" + a.get_str() + ", " + b.get_str() + ") not coprime");
    if (b == 0) return {Integer(0), a};
    const Integer m = abs(b);
    Integer d;
    mpz_mod(d.get_mpz_t(), e.x.get_mpz_t(), m.get_mpz_t());  // a*x = 1 mod |b|
    if (d == 0) d = m;
    Integer c = (a * d - 1) / b;
    return {c, d};
}

bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

bool shift_parity_check(const SL2Z& m, const ShiftClass& s)
{
    return is_even(s.q - m.a() * m.b()) && is_even(s.p - m.c() * m.d());
}

void require_parity(const SL2Z& m, const ShiftClass& s)
{
    if (!shift_parity_check(m, s))
        throw ParityError("shift (" + s.q.get_str() + "," + s.p.get_str() + ") does not match parity of " + m.str());
}

ShiftClass default_shift(const SL2Z& m)
{
    return {Integer(is_even(m.a() * m.b()) ? 0 : 1), Integer(is_even(m.c() * m.d()) ? 0 : 1)};
}

PhaseQ shift_change_phase(const Integer& q, const Integer& p, const Integer& q2, const Integer& p2)
{
    if (!is_even(q - q2) || !is_even(p - p2))
        throw ParityError("shift representatives differ in parity");
    const Integer e = (p2 - p) * q2 - p * (q2 - q);
    return PhaseQ(Rational(e, Integer(4)));
}

}  // namespace diracbrush
