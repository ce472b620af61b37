#ifndef GKZ_POLYNOMIAL_HPP
#define GKZ_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gkz/combinatorics.hpp"
#include "gkz/complex.hpp"
#include "gkz/errors.hpp"

namespace gkz {

/// Dense univariate polynomial over Complex. Index j holds the coefficient
/// of z^j. An empty coefficient list is the zero polynomial; stored trailing
/// zeros are allowed and ignored by degree().
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Complex v) { return Polynomial({std::move(v)}); }

    /// z^n
    static Polynomial monomial(std::size_t n, Complex lead = Complex(Real(1))) {
        std::vector<Complex> c(n + 1);
        c[n] = std::move(lead);
        return Polynomial(std::move(c));
    }

    const std::vector<Complex>& coeffs() const { return c_; }

    Complex coeff(std::size_t j) const {
        return j < c_.size() ? c_[j] : Complex();
    }

    /// Highest index with a nonzero stored coefficient; nullopt for the
    /// zero polynomial.
    std::optional<std::size_t> degree() const {
        for (std::size_t j = c_.size(); j > 0; --j)
            if (!c_[j - 1].is_zero()) return j - 1;
        return std::nullopt;
    }

    bool is_zero() const { return !degree().has_value(); }

    /// Horner evaluation at the session precision.
    Complex evaluate(const Complex& x) const {
        Complex acc;
        for (std::size_t j = c_.size(); j > 0; --j) {
            acc *= x;
            acc += c_[j - 1];
        }
        if (!is_finite(acc))
            throw std::range_error("polynomial evaluation overflowed working precision");
        return acc;
    }

    /// Evaluates p and p' in one Horner pass.
    std::pair<Complex, Complex> evaluate_with_derivative(const Complex& x) const {
        Complex p, dp;
        for (std::size_t j = c_.size(); j > 0; --j) {
            dp *= x;
            dp += p;
            p *= x;
            p += c_[j - 1];
        }
        return {std::move(p), std::move(dp)};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Complex> d(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j)
            d[j - 1] = c_[j] * Complex(Real(static_cast<double>(j)));
        return Polynomial(std::move(d));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Complex> out(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Complex> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = coeff(j) + o.coeff(j);
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Complex> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = coeff(j) - o.coeff(j);
        return Polynomial(std::move(out));
    }

    Polynomial scaled(const Complex& s) const {
        std::vector<Complex> out(c_.size());
        for (std::size_t j = 0; j < c_.size(); ++j) out[j] = c_[j] * s;
        return Polynomial(std::move(out));
    }

    /// max_j |a_j|
    Real coeff_inf_norm() const {
        Real m(0);
        for (const auto& a : c_) {
            Real v = abs(a);
            if (v > m) m = v;
        }
        return m;
    }

private:
    std::vector<Complex> c_;
};

/// Dense expansion of (z - alpha)^n. Binomial coefficients are exact big
/// integers; each coefficient is rounded once when combined with the
/// scalar power.
inline Polynomial binomial_expand(const Complex& alpha, unsigned long n) {
    std::vector<Complex> c(n + 1);
    Complex neg_alpha = -alpha;
    Complex power(Real(1)); // (-alpha)^(n-j), built up from j = n downwards
    for (unsigned long j = n + 1; j > 0;) {
        --j;
        c[j] = power * Complex(to_real(binomial_exact(n, j)));
        if (j > 0) power *= neg_alpha;
    }
    return Polynomial(std::move(c));
}

/// prod (z - r_i), expanded incrementally.
inline Polynomial from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex(Real(1))};
    for (const auto& r : roots) {
        c.push_back(Complex());
        for (std::size_t j = c.size() - 1; j > 0; --j)
            c[j] = c[j - 1] - r * c[j];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

} // namespace gkz

#endif
