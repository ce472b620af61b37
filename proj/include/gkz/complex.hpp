#ifndef GKZ_COMPLEX_HPP
#define GKZ_COMPLEX_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "gkz/precision.hpp"

namespace gkz {

/// Complex scalar over the session-precision Real. std::complex is not
/// specified for user-defined floats, so the handful of operations we
/// need live here.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        if (d.is_zero())
            throw std::domain_error("complex division by zero");
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }

/// |a|^2
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

inline Real abs(const Complex& a) {
    using boost::multiprecision::hypot;
    return hypot(a.re, a.im);
}

inline Real arg(const Complex& a) {
    using boost::multiprecision::atan2;
    return atan2(a.im, a.re);
}

inline Complex from_polar(const Real& radius, const Real& angle) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    return Complex(radius * cos(angle), radius * sin(angle));
}

/// Integer power by repeated squaring.
inline Complex pow_n(const Complex& base, unsigned long n) {
    Complex acc(Real(1));
    Complex b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Complex sqrt(const Complex& a) {
    using boost::multiprecision::sqrt;
    Real m = abs(a);
    if (m.is_zero()) return Complex();
    Real u = sqrt((m + a.re) / 2);
    if (u.is_zero()) {
        // purely negative real axis
        return Complex(Real(0), sqrt(m));
    }
    return Complex(u, a.im / (2 * u));
}

inline bool is_finite(const Complex& a) {
    return mpfr_number_p(a.re.backend().data()) && mpfr_number_p(a.im.backend().data());
}

inline std::string to_string(const Complex& a) {
    return "(" + a.re.str(20) + ", " + a.im.str(20) + ")";
}

} // namespace gkz

#endif
