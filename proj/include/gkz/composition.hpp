#ifndef GKZ_COMPOSITION_HPP
#define GKZ_COMPOSITION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "gkz/errors.hpp"
#include "gkz/moment_functional.hpp"
#include "gkz/polynomial.hpp"

namespace gkz {

/// Sample points inside the open unit disc.
struct SampleGrid {
    std::vector<Complex> points;

    static SampleGrid validated(std::vector<Complex> pts) {
        for (const auto& p : pts)
            if (!(abs(p) < 1))
                throw std::domain_error("sample grid points must lie inside the open unit disc");
        return SampleGrid{std::move(pts)};
    }

    /// Deterministic 8x8 polar lattice: radii 0.1..0.8, 8 uniform angles.
    static SampleGrid default_polar() {
        std::vector<Complex> pts;
        pts.reserve(64);
        const Real two_pi = 2 * boost::math::constants::pi<Real>();
        for (int ri = 1; ri <= 8; ++ri) {
            Real radius = Real(ri) / Real(10);
            for (int ai = 0; ai < 8; ++ai)
                pts.push_back(from_polar(radius, two_pi * Real(ai) / Real(8)));
        }
        return SampleGrid{std::move(pts)};
    }

    std::size_t size() const { return points.size(); }
};

/// A linear map T from degree-<=D polynomials to functions on the grid,
/// stored in the monomial basis: matrix[j][k] = (T z^k)(zeta_j).
struct SampledLinearMap {
    SampleGrid grid;
    std::size_t degree_cap = 0;
    std::vector<std::vector<Complex>> matrix; ///< rows = grid points, columns = 0..D

    static constexpr std::size_t default_degree_cap = 24;

    /// Builds T f = psi * (f o phi) from sample vectors of the symbols.
    static SampledLinearMap from_symbols(SampleGrid grid, const std::vector<Complex>& psi,
                                         const std::vector<Complex>& phi, std::size_t degree_cap) {
        if (psi.size() != grid.size() || phi.size() != grid.size())
            throw std::domain_error("symbol sample vectors must match the grid size");
        SampledLinearMap T;
        T.degree_cap = degree_cap;
        T.matrix.assign(grid.size(), std::vector<Complex>(degree_cap + 1));
        for (std::size_t j = 0; j < grid.size(); ++j) {
            Complex pw(Real(1));
            for (std::size_t k = 0; k <= degree_cap; ++k) {
                T.matrix[j][k] = psi[j] * pw;
                pw *= phi[j];
            }
        }
        T.grid = std::move(grid);
        return T;
    }

    /// T = identity: (T z^k)(zeta_j) = zeta_j^k.
    static SampledLinearMap identity(SampleGrid grid, std::size_t degree_cap = default_degree_cap) {
        std::vector<Complex> psi(grid.size(), Complex(Real(1)));
        std::vector<Complex> phi = grid.points;
        return from_symbols(std::move(grid), psi, phi, degree_cap);
    }

    /// Applies T to a polynomial: (Tf)(zeta_j) = sum_k a_k matrix[j][k].
    std::vector<Complex> apply(const Polynomial& f) const {
        auto deg = f.degree();
        if (deg && *deg > degree_cap)
            throw TruncationError("polynomial degree exceeds the map's degree cap");
        std::vector<Complex> out(grid.size());
        std::size_t top = deg ? *deg : 0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            Complex acc;
            for (std::size_t k = 0; k <= top && k < f.coeffs().size(); ++k)
                acc += f.coeff(k) * matrix[j][k];
            out[j] = acc;
        }
        return out;
    }

    Real matrix_inf_norm() const {
        Real m(0);
        for (const auto& row : matrix)
            for (const auto& v : row)
                m = std::max(m, abs(v));
        return m;
    }
};

/// Recovered symbols of a weighted composition operator, as samples on the
/// grid: psi = T1 and phi = (Tz)/psi.
struct SymbolPair {
    std::vector<Complex> psi_samples;
    std::vector<Complex> phi_samples;
    Real domain_radius{1};
};

struct DetectOptions {
    Real psi_zero_rel_tol = Real(1e-10); ///< relative to the max matrix entry
    Real phi_radius_slack = Real(1e-9);
};

/// Reads the symbols off the first two matrix columns and validates the
/// corollary's hypotheses numerically: psi nonvanishing on the grid and
/// |phi| < r everywhere.
inline SymbolPair detect_symbols(const SampledLinearMap& T, const Real& r,
                                 const DetectOptions& opt = DetectOptions()) {
    if (T.degree_cap < 1)
        throw std::domain_error("detect_symbols: degree cap must be at least 1");
    Real scale = T.matrix_inf_norm();
    SymbolPair s;
    s.domain_radius = r;
    s.psi_samples.reserve(T.grid.size());
    s.phi_samples.reserve(T.grid.size());
    for (std::size_t j = 0; j < T.grid.size(); ++j) {
        const Complex& psi = T.matrix[j][0];
        if (abs(psi) <= opt.psi_zero_rel_tol * scale)
            throw HypothesisViolation("detect_symbols: psi vanishes at grid point " + std::to_string(j) +
                                      " = " + to_string(T.grid.points[j]));
        Complex phi = T.matrix[j][1] / psi;
        if (!(abs(phi) < r * (Real(1) + opt.phi_radius_slack)))
            throw HypothesisViolation("detect_symbols: |phi| >= r at grid point " + std::to_string(j) +
                                      " = " + to_string(T.grid.points[j]));
        s.psi_samples.push_back(psi);
        s.phi_samples.push_back(phi);
    }
    return s;
}

/// The per-point functional T_zeta(f) = (Tf)(zeta_j)/psi(zeta_j), as a
/// normalized moment functional: m_k = matrix[j][k]/matrix[j][0].
inline MomentFunctional per_point_functional(const SampledLinearMap& T, std::size_t j) {
    if (j >= T.grid.size())
        throw std::domain_error("per_point_functional: grid index out of range");
    const Complex& psi = T.matrix[j][0];
    if (abs(psi) <= Real(1e-10) * T.matrix_inf_norm())
        throw HypothesisViolation("per_point_functional: psi vanishes at grid point " + std::to_string(j));
    std::vector<Complex> m(T.degree_cap + 1);
    m[0] = Complex(Real(1));
    for (std::size_t k = 1; k <= T.degree_cap; ++k)
        m[k] = T.matrix[j][k] / psi;
    return MomentFunctional::from_moments(std::move(m));
}

/// max_j |(Tf)(zeta_j) - psi(zeta_j) f(phi(zeta_j))| / (1 + |(Tf)(zeta_j)|).
inline Real verify_factorization(const SampledLinearMap& T, const SymbolPair& symbols,
                                 const Polynomial& f) {
    auto lhs = T.apply(f);
    Real worst(0);
    for (std::size_t j = 0; j < T.grid.size(); ++j) {
        Complex rhs = symbols.psi_samples[j] * f.evaluate(symbols.phi_samples[j]);
        Real rel = abs(lhs[j] - rhs) / (Real(1) + abs(lhs[j]));
        worst = std::max(worst, rel);
    }
    return worst;
}

} // namespace gkz

#endif
