#ifndef GKZ_GKZ_HPP
#define GKZ_GKZ_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gkz/combinatorics.hpp"
#include "gkz/moment_functional.hpp"
#include "gkz/roots.hpp"
#include "gkz/symmetric.hpp"

namespace gkz {

/// p(t) = F((t - z)^n) = sum_{j=0..n} (-1)^j C(n,j) m_j t^{n-j}.
/// Binomials are exact; one rounding per coefficient.
inline Polynomial gkz_polynomial(const MomentFunctional& F, std::size_t n) {
    if (n < 1)
        throw std::domain_error("gkz_polynomial: n must be positive");
    if (n > F.truncation_order())
        throw TruncationError("gkz_polynomial: n exceeds truncation order");
    std::vector<Complex> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Complex v = Complex(to_real(binomial_exact(n, j))) * F.moment(j);
        c[n - j] = (j % 2 == 0) ? v : -v;
    }
    return Polynomial(std::move(c));
}

/// F((z - alpha)^n), via the expanded test polynomial. Equals
/// (-1)^n * p(alpha) for p = gkz_polynomial(F, n); both routes exist so the
/// identity can be checked.
inline Complex apply_shifted_power(const MomentFunctional& F, const Complex& alpha, std::size_t n) {
    if (n > F.truncation_order())
        throw TruncationError("apply_shifted_power: n exceeds truncation order");
    return F.apply(binomial_expand(alpha, n));
}

struct Falsifier {
    std::size_t n;
    Complex alpha;      ///< root with |alpha| >= r, so F((z - alpha)^n) = 0
    Real residual;      ///< re-verified |F((z - alpha)^n)|
};

struct WitnessReport {
    Complex witness;    ///< always m_1 = F(z)
    Real radius;
    Real max_defect;    ///< max_{k <= nMax} |m_k - witness^k|
    bool scan_passed = false;
    std::vector<Falsifier> falsifiers;
};

/// Root options tuned for the scan. Certification subtracts the per-root
/// inclusion radius, so the scan never needs a fully polished root cluster:
/// once the backward error is small and corrections have slowed, further
/// contraction of a multiple-root cluster cannot change the certified
/// outcome. Falsifier roots are simple and still converge to the noise
/// floor; only wasted cluster sweeps are cut.
inline RootOptions scan_root_options() {
    RootOptions o;
    o.stagnation_ratio = 0.8;
    o.stagnation_window = 3;
    return o;
}

struct ScanOptions {
    /// |lambda| >= r*(1 - falsifier_slack) is the falsifier candidate test.
    Real falsifier_slack = Real(1e-9);
    /// Residual re-verification threshold, relative to the coefficient
    /// sup norm of the GKZ polynomial.
    Real residual_rel_tol = Real(1e-6);
    RootOptions root_options = scan_root_options();
};

/// Scans n = 1..n_max for roots of the GKZ polynomials outside the closed
/// disc of radius r. Such a root lambda gives F((z - lambda)^n) = 0 by the
/// factorization of p, falsifying the theorem's hypothesis at radius r.
///
/// A candidate root is reported only when it is *certified*: its
/// condition-aware inclusion radius must keep the whole inclusion disc at
/// modulus >= r. Without this, the root cluster of a near-point-evaluation
/// functional (all n roots at w, determined by the data only to relative
/// eps^(1/n)) would spill over any radius for moderate n.
inline WitnessReport hypothesis_scan(const MomentFunctional& F, const Real& r, std::size_t n_max,
                                     const ScanOptions& opt = ScanOptions()) {
    if (r <= 0)
        throw std::domain_error("hypothesis_scan: radius must be positive");
    if (n_max > F.truncation_order())
        throw TruncationError("hypothesis_scan: n_max exceeds truncation order");

    WitnessReport rep;
    rep.witness = F.moment(1);
    rep.radius = r;

    Complex wk(Real(1));
    rep.max_defect = Real(0);
    for (std::size_t k = 1; k <= n_max; ++k) {
        wk *= rep.witness;
        Real d = abs(F.moment(k) - wk);
        if (d > rep.max_defect) rep.max_defect = d;
    }

    const Real threshold = r * (Real(1) - opt.falsifier_slack);
    // GKZ polynomials are monic by construction (m_0 = 1), so the root
    // finder's leading-coefficient guard is vacuous here even when the
    // inner coefficients dwarf the lead.
    RootOptions ropt = opt.root_options;
    ropt.trust_leading_coefficient = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Polynomial p = gkz_polynomial(F, n);
        RootSet roots;
        try {
            roots = find_roots(p, ropt);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("hypothesis_scan: root finder failed at n = " + std::to_string(n) +
                                       " (" + e.what() + ")",
                                   e.partial);
        }
        Real inf_norm = p.coeff_inf_norm();
        std::vector<Falsifier> found;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const Complex& lambda = roots.roots[i];
            Real mod = abs(lambda);
            if (mod < threshold) continue;
            if (mod - roots.error_radii[i] < threshold) continue; // inclusion disc re-enters the open disc
            Real residual = abs(apply_shifted_power(F, lambda, n));
            if (residual > opt.residual_rel_tol * inf_norm) continue;
            found.push_back(Falsifier{n, lambda, residual});
        }
        std::sort(found.begin(), found.end(), [](const Falsifier& a, const Falsifier& b) {
            return arg(a.alpha) < arg(b.alpha);
        });
        for (auto& f : found) rep.falsifiers.push_back(std::move(f));
    }
    rep.scan_passed = rep.falsifiers.empty();
    return rep;
}

/// Residuals |e_k(lambda) - C(n,k) m_k| for k = 1..k_max, lambda = roots of
/// the GKZ polynomial at n. Exact algebra; residuals are numeric only.
inline std::vector<Real> vieta_check(const MomentFunctional& F, std::size_t n, std::size_t k_max,
                                     const RootOptions& ropt = RootOptions()) {
    if (k_max >= n)
        throw std::domain_error("vieta_check: requires k_max < n");
    RootOptions trusted = ropt;
    trusted.trust_leading_coefficient = true; // GKZ polynomials are monic
    RootSet roots = find_roots(gkz_polynomial(F, n), trusted);
    std::vector<Real> res;
    res.reserve(k_max);
    auto e = detail::elementary_symmetric_all(roots.roots, k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        Complex expected = Complex(to_real(binomial_exact(n, k))) * F.moment(k);
        res.push_back(abs(e[k] - expected));
    }
    return res;
}

struct DefectBound {
    Real defect; ///< |(n m_1)^k - k! C(n,k) m_k|
    Real bound;  ///< k! (C(n+k-1,n-1) - C(n,k)) r^k
};

/// The quantitative inequality behind F(z^k) -> F(z)^k. All integer factors
/// are exact; one rounding at the final combination.
inline DefectBound defect_and_bound(const MomentFunctional& F, std::size_t n, std::size_t k,
                                    const Real& r) {
    if (k < 1 || k >= n)
        throw std::domain_error("defect_and_bound: requires 1 <= k < n");
    if (n > F.truncation_order())
        throw TruncationError("defect_and_bound: n exceeds truncation order");
    if (r <= 0)
        throw std::domain_error("defect_and_bound: radius must be positive");

    Complex nm1 = Complex(Real(static_cast<double>(n))) * F.moment(1);
    Complex lhs = pow_n(nm1, k);
    BigInt kfac = factorial_exact(k);
    Complex rhs = Complex(to_real(kfac * binomial_exact(n, k))) * F.moment(k);
    Real defect = abs(lhs - rhs);

    BigInt count_gap = binomial_exact(n + k - 1, n - 1) - binomial_exact(n, k);
    Real rk(1);
    for (std::size_t i = 0; i < k; ++i) rk *= r;
    Real bound = to_real(kfac * count_gap) * rk;
    return DefectBound{defect, bound};
}

enum class RadiusMode {
    Fixed,          ///< a user radius r, one value for all n
    PerNRootBound,  ///< r = maxRootModulus(n) * (1 + 1e-9), hypothesis-free
};

struct ConvergenceRow {
    std::size_t n;
    Real defect_over_nk;
    Real bound_over_nk;
};

/// Normalized defect/bound table for fixed k across a list of n.
inline std::vector<ConvergenceRow> convergence_table(const MomentFunctional& F, std::size_t k,
                                                     const std::vector<std::size_t>& n_list,
                                                     RadiusMode mode, const Real& fixed_r = Real(1),
                                                     const RootOptions& ropt = RootOptions()) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    RootOptions trusted = ropt;
    trusted.trust_leading_coefficient = true; // GKZ polynomials are monic
    for (std::size_t n : n_list) {
        if (n <= k)
            throw std::domain_error("convergence_table: every n must exceed k");
        Real r = fixed_r;
        if (mode == RadiusMode::PerNRootBound) {
            RootSet roots = find_roots(gkz_polynomial(F, n), trusted);
            r = roots.max_modulus * (Real(1) + Real(1e-9));
            if (r <= 0) r = Real(1e-30); // all roots at the origin
        }
        DefectBound db = defect_and_bound(F, n, k, r);
        Real nk(1);
        for (std::size_t i = 0; i < k; ++i) nk *= Real(static_cast<double>(n));
        rows.push_back(ConvergenceRow{n, db.defect / nk, db.bound / nk});
    }
    return rows;
}

struct DefectRow {
    std::size_t k;
    Real defect;
    Real bound;
    bool holds; ///< defect <= bound; false flags a numerical fault
};

/// Per-n record of the proof's objects: the GKZ polynomial, its roots,
/// Vieta residuals and the defect/bound rows at the observed root radius.
struct GkzReport {
    std::size_t n = 0;
    Polynomial gkz_poly;
    RootSet roots;
    Real max_root_modulus{0};
    std::vector<Real> vieta_residuals; ///< k = 1..k_max
    std::vector<DefectRow> defect_rows; ///< k < n only
};

inline GkzReport make_gkz_report(const MomentFunctional& F, std::size_t n, std::size_t k_max,
                                 const RootOptions& ropt = RootOptions()) {
    if (n < 1)
        throw std::domain_error("make_gkz_report: n must be positive");
    GkzReport rep;
    rep.n = n;
    rep.gkz_poly = gkz_polynomial(F, n);
    RootOptions trusted = ropt;
    trusted.trust_leading_coefficient = true; // GKZ polynomials are monic
    rep.roots = find_roots(rep.gkz_poly, trusted);
    rep.max_root_modulus = rep.roots.max_modulus;

    std::size_t kv = std::min(k_max, n - 1);
    auto e = detail::elementary_symmetric_all(rep.roots.roots, kv);
    for (std::size_t k = 1; k <= kv; ++k) {
        Complex expected = Complex(to_real(binomial_exact(n, k))) * F.moment(k);
        rep.vieta_residuals.push_back(abs(e[k] - expected));
    }

    Real r = rep.max_root_modulus * (Real(1) + Real(1e-9));
    if (r <= 0) r = Real(1e-30);
    for (std::size_t k = 1; k <= kv; ++k) {
        DefectBound db = defect_and_bound(F, n, k, r);
        rep.defect_rows.push_back(DefectRow{k, db.defect, db.bound, db.defect <= db.bound});
    }
    return rep;
}

} // namespace gkz

#endif
