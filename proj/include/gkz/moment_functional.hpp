#ifndef GKZ_MOMENT_FUNCTIONAL_HPP
#define GKZ_MOMENT_FUNCTIONAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gkz/errors.hpp"
#include "gkz/polynomial.hpp"

namespace gkz {

/// A linear functional F on polynomials of degree <= K, stored as its
/// moment sequence m_k = F(z^k). All GKZ paths require m_0 = 1.
class MomentFunctional {
public:
    static constexpr std::size_t default_truncation = 512;

    /// moments[k] = F(z^k); m_0 must equal 1 up to 1e-12.
    static MomentFunctional from_moments(std::vector<Complex> moments) {
        if (moments.size() < 2)
            throw std::domain_error("moment functional needs truncation order K >= 1");
        if (abs(moments[0] - Complex(Real(1))) > Real(1e-12))
            throw std::domain_error("moment functional not normalized: F(1) must be 1");
        return MomentFunctional(std::move(moments));
    }

    /// F = delta_w, m_k = w^k.
    static MomentFunctional point_evaluation(const Complex& w, std::size_t truncation = default_truncation) {
        std::vector<Complex> m(truncation + 1);
        m[0] = Complex(Real(1));
        for (std::size_t k = 1; k <= truncation; ++k) m[k] = m[k - 1] * w;
        return MomentFunctional(std::move(m));
    }

    /// Convex combination of point evaluations; weights must sum to 1
    /// (that is exactly the m_0 = 1 normalization).
    static MomentFunctional mixture(const std::vector<std::pair<Real, Complex>>& atoms,
                                    std::size_t truncation = default_truncation) {
        if (atoms.empty())
            throw std::domain_error("mixture needs at least one atom");
        std::vector<Complex> m(truncation + 1);
        for (const auto& [weight, point] : atoms) {
            Complex pw(Real(1));
            for (std::size_t k = 0; k <= truncation; ++k) {
                m[k] += Complex(weight) * pw;
                pw *= point;
            }
        }
        return from_moments(std::move(m));
    }

    std::size_t truncation_order() const { return moments_.size() - 1; }

    const Complex& moment(std::size_t k) const {
        if (k >= moments_.size())
            throw TruncationError("moment index exceeds truncation order");
        return moments_[k];
    }

    const std::vector<Complex>& moments() const { return moments_; }

    /// F(p) = sum a_k m_k by linearity.
    Complex apply(const Polynomial& p) const {
        auto deg = p.degree();
        if (deg && *deg > truncation_order())
            throw TruncationError("polynomial degree exceeds functional truncation order");
        Complex acc;
        std::size_t top = deg ? *deg : 0;
        for (std::size_t k = 0; k <= top && k < p.coeffs().size(); ++k)
            acc += p.coeff(k) * moments_[k];
        return acc;
    }

private:
    explicit MomentFunctional(std::vector<Complex> m) : moments_(std::move(m)) {}
    std::vector<Complex> moments_;
};

} // namespace gkz

#endif
