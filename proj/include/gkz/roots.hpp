#ifndef GKZ_ROOTS_HPP
#define GKZ_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "gkz/errors.hpp"
#include "gkz/polynomial.hpp"

namespace gkz {

/// All roots of a polynomial, with multiplicity. Roots inside a tight
/// cluster are reported individually; no merging.
struct RootSet {
    std::vector<Complex> roots;
    std::vector<Real> residuals;    ///< |p(root_i)| for the input polynomial, monic-normalized
    std::vector<Real> error_radii;  ///< per-root inclusion radius estimate (condition-aware)
    Real max_modulus{0};
    Real condition_factor{1};       ///< max_i S(|root_i|), S = sum |a_j||z|^j of the monic polynomial
    int sweeps = 0;

    std::size_t size() const { return roots.size(); }
};

struct RootOptions {
    Real correction_tol = Real(1e-12);
    int max_sweeps = 200;
    /// Adams-style stop: |p(z)| below this multiple of the working-precision
    /// evaluation noise means z is a root of the stored coefficients.
    double noise_floor_mult = 64.0;
    /// Cluster stop: corrections shrinking slower than this ratio over
    /// `stagnation_window` consecutive sweeps, with backward error already
    /// below `stagnation_backward_tol`, locks the approximation. Clustered
    /// zeros of multiplicity m contract only at rate (1 - 1/m) and cannot
    /// reach the correction tolerance at finite precision; the ratio must
    /// sit above that rate for every plausible m so the lock fires only
    /// once rounding noise has stopped the contraction.
    double stagnation_ratio = 0.98;
    int stagnation_window = 6;
    Real stagnation_backward_tol = Real(1e-8);
    bool use_double_stage = true;
    /// Skips the near-zero leading-coefficient guard. The guard protects
    /// against a leading coefficient that is only rounding residue of the
    /// other coefficients; callers whose polynomials are monic by
    /// construction (huge inner coefficients are then legitimate) set this.
    bool trust_leading_coefficient = false;
};

struct ConvergenceError : std::runtime_error {
    RootSet partial;
    ConvergenceError(const std::string& msg, RootSet p)
        : std::runtime_error(msg), partial(std::move(p)) {}
};

namespace detail {

inline double cabs(const std::complex<double>& z) { return std::abs(z); }
inline Real cabs(const Complex& z) { return abs(z); }

inline std::complex<double> cdiv(const std::complex<double>& a, const std::complex<double>& b) { return a / b; }
inline Complex cdiv(const Complex& a, const Complex& b) { return a / b; }

inline std::complex<double> to_cd(const std::complex<double>& z) { return z; }
inline std::complex<double> to_cd(const Complex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

inline std::complex<double> from_cd(const std::complex<double>& z, const std::complex<double>&) { return z; }
inline Complex from_cd(const std::complex<double>& z, const Complex&) {
    return Complex(Real(z.real()), Real(z.imag()));
}

/// Newton-polygon (upper convex hull of (j, log|a_j|)) initial moduli,
/// ascending coefficients, monic. Returns one starting point per root.
inline std::vector<std::pair<double, std::size_t>> newton_polygon_radii(const std::vector<double>& logabs) {
    const std::size_t n = logabs.size() - 1;
    std::vector<std::size_t> hull; // indices of upper hull vertices, left to right
    for (std::size_t j = 0; j <= n; ++j) {
        if (logabs[j] == -std::numeric_limits<double>::infinity()) continue;
        while (hull.size() >= 2) {
            std::size_t p = hull[hull.size() - 1], q = hull[hull.size() - 2];
            // drop p if it lies below segment q--j
            double lhs = (logabs[p] - logabs[q]) * double(j - q);
            double rhs = (logabs[j] - logabs[q]) * double(p - q);
            if (lhs <= rhs) hull.pop_back(); else break;
        }
        hull.push_back(j);
    }
    std::vector<std::pair<double, std::size_t>> groups; // (radius, count)
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        std::size_t k1 = hull[s], k2 = hull[s + 1];
        double rho = std::exp((logabs[k1] - logabs[k2]) / double(k2 - k1));
        groups.emplace_back(rho, k2 - k1);
    }
    return groups;
}

template <class Cplx>
std::vector<Cplx> initial_points(const std::vector<double>& logabs) {
    auto groups = newton_polygon_radii(logabs);
    std::vector<Cplx> z;
    std::size_t g = 0;
    for (const auto& [rho, count] : groups) {
        double r = std::isfinite(rho) && rho > 0 ? rho : 1.0;
        for (std::size_t i = 0; i < count; ++i) {
            double theta = 2.0 * 3.14159265358979323846 * (double(i) + 0.26894 * double(g)) / double(count) + 0.4242;
            z.push_back(Cplx(r * std::cos(theta), r * std::sin(theta)));
        }
        ++g;
    }
    return z;
}

template <class Cplx, class Rl>
struct AberthOutcome {
    std::vector<Cplx> z;
    std::vector<char> locked;
    int sweeps = 0;
    bool all_locked = false;
};

/// Ehrlich-Aberth simultaneous iteration, Gauss-Seidel updates.
/// `a` is monic, ascending. `eps` is the unit roundoff of Cplx arithmetic.
///
/// A root is hard-frozen only when its backward error reaches the
/// working-precision noise floor (it is then a root of the stored
/// coefficients). Everything else keeps moving: freezing on a small
/// correction alone distorts the remaining Gauss-Seidel system and the
/// multiset never settles on the stored polynomial's exact root
/// configuration (which is what makes the symmetric functions of the
/// output accurate). The iteration stops on the first sweep in which
/// every root is simultaneously done: frozen, below the correction
/// tolerance, or stagnating at the rounding-noise plateau.
template <class Cplx, class Rl>
AberthOutcome<Cplx, Rl> aberth_iterate(const std::vector<Cplx>& a, std::vector<Cplx> z,
                                       const Rl& eps, const Rl& correction_tol,
                                       int max_sweeps, const RootOptions& opt) {
    const std::size_t d = a.size() - 1;
    AberthOutcome<Cplx, Rl> out;
    out.locked.assign(d, 0);
    std::vector<Rl> prev_corr(d, Rl(0));
    std::vector<int> stagnant(d, 0);
    const Rl floor_mult = Rl(opt.noise_floor_mult * double(d)) * eps;
    const Rl stag_tol = Rl(opt.stagnation_backward_tol);

    // Double-precision shadows of |a_j| and of the current points. The
    // noise scale S only feeds stop thresholds and the repulsion sum K only
    // enters corr = N/(1 - N*K), so low relative accuracy suffices for
    // both; full precision is restored per root when double arithmetic
    // over/underflows.
    std::vector<double> absa(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) absa[j] = std::abs(to_cd(a[j]));
    std::vector<std::complex<double>> zd(d);
    for (std::size_t i = 0; i < d; ++i) zd[i] = to_cd(z[i]);

    for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (out.locked[i]) continue;
            Cplx p(0), dp(0);
            for (std::size_t j = a.size(); j > 0; --j) {
                dp = dp * z[i] + p;
                p = p * z[i] + a[j - 1];
            }
            // evaluation-noise scale S = sum |a_j||z|^j
            double zsd = std::abs(zd[i]);
            double sd = 0.0;
            for (std::size_t j = a.size(); j > 0; --j) sd = sd * zsd + absa[j - 1];
            Rl s;
            if (std::isfinite(sd) && sd > 0.0) {
                s = Rl(sd);
            } else {
                Rl zs = cabs(z[i]);
                s = Rl(0);
                for (std::size_t j = a.size(); j > 0; --j) s = s * zs + cabs(a[j - 1]);
            }
            Rl pm = cabs(p);
            if (pm <= floor_mult * s) {
                out.locked[i] = 1;
                continue;
            }
            if (cabs(dp) == Rl(0)) {
                // exactly at a critical point; nudge off it
                z[i] += Cplx(1e-3 * (1.0 + double(i)), 1e-3);
                zd[i] = to_cd(z[i]);
                all_done = false;
                continue;
            }
            Cplx newton = cdiv(p, dp);
            Cplx repel(0);
            std::complex<double> repel_d(0.0);
            bool need_full = false;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                std::complex<double> diff = zd[i] - zd[j];
                if (!(std::norm(diff) > 0.0)) { need_full = true; break; }
                repel_d += 1.0 / diff;
            }
            if (!need_full && !(std::isfinite(repel_d.real()) && std::isfinite(repel_d.imag())))
                need_full = true;
            if (need_full) {
                bool collision = false;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == i) continue;
                    Cplx diff = z[i] - z[j];
                    if (cabs(diff) == Rl(0)) { collision = true; break; }
                    repel += cdiv(Cplx(1), diff);
                }
                if (collision) {
                    z[i] += Cplx(1e-3, 1e-3 * (1.0 + double(i)));
                    zd[i] = to_cd(z[i]);
                    all_done = false;
                    continue;
                }
            } else {
                repel = from_cd(repel_d, z[i]);
            }
            Cplx denom = Cplx(1) - newton * repel;
            Cplx corr = cabs(denom) == Rl(0) ? newton : cdiv(newton, denom);
            z[i] -= corr;
            zd[i] = to_cd(z[i]);
            Rl ac = cabs(corr);
            Rl zscale = cabs(z[i]);
            if (zscale < Rl(1)) zscale = Rl(1);
            if (prev_corr[i] > Rl(0) && ac >= Rl(opt.stagnation_ratio) * prev_corr[i])
                ++stagnant[i];
            else
                stagnant[i] = 0;
            prev_corr[i] = ac;
            bool done = ac <= correction_tol * zscale ||
                        (stagnant[i] >= opt.stagnation_window && pm <= stag_tol * s);
            if (!done) all_done = false;
        }
        if (all_done) {
            for (auto& f : out.locked) f = 1;
            out.all_locked = true;
            break;
        }
    }
    if (!out.all_locked)
        out.all_locked = std::all_of(out.locked.begin(), out.locked.end(), [](char c) { return c != 0; });
    out.z = std::move(z);
    return out;
}

inline std::vector<double> log_abs_coeffs(const std::vector<Complex>& a) {
    std::vector<double> la(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero())
            la[j] = -std::numeric_limits<double>::infinity();
        else
            la[j] = static_cast<double>(log(abs(a[j])));
    }
    return la;
}

} // namespace detail

/// All complex roots of p by Ehrlich-Aberth simultaneous iteration.
/// Exact zero roots are deflated first; degrees 1 and 2 use closed forms.
/// Starting points come from the Newton polygon of the coefficients, with
/// a double-precision pre-stage when the scaled coefficients fit.
inline RootSet find_roots(const Polynomial& input, const RootOptions& opt = RootOptions()) {
    auto deg = input.degree();
    if (!deg)
        throw std::domain_error("find_roots: zero polynomial");
    if (*deg < 1)
        throw std::domain_error("find_roots: constant polynomial has no roots");

    std::vector<Complex> a(input.coeffs().begin(), input.coeffs().begin() + static_cast<std::ptrdiff_t>(*deg) + 1);
    Real maxc = input.coeff_inf_norm();
    Real lead = abs(a.back());
    Real eps = working_eps();
    if (!opt.trust_leading_coefficient && lead <= maxc * eps * Real(1024))
        throw IllConditionedError("find_roots: leading coefficient below conditioning tolerance");

    // monic normalize
    {
        Complex inv = Complex(Real(1)) / a.back();
        for (auto& c : a) c *= inv;
        a.back() = Complex(Real(1));
    }

    RootSet rs;

    // deflate exact zeros at the origin
    std::size_t zero_roots = 0;
    while (a.size() > 1 && a.front().is_zero()) {
        a.erase(a.begin());
        ++zero_roots;
    }
    for (std::size_t i = 0; i < zero_roots; ++i) {
        rs.roots.emplace_back();
        rs.residuals.emplace_back(0);
        rs.error_radii.emplace_back(0);
    }

    const std::size_t d = a.size() - 1;
    std::vector<Complex> found;
    int sweeps = 0;
    bool converged = true;

    if (d == 1) {
        found.push_back(-a[0]);
    } else if (d == 2) {
        // monic t^2 + b t + c
        const Complex& b = a[1];
        const Complex& c = a[0];
        Complex disc = sqrt(b * b - Complex(Real(4)) * c);
        Complex s1 = b + disc, s2 = b - disc;
        Complex big = abs(s1) >= abs(s2) ? s1 : s2;
        if (big.is_zero()) {
            found.emplace_back();
            found.emplace_back();
        } else {
            Complex r1 = -big / Complex(Real(2));
            found.push_back(r1);
            found.push_back(c / r1);
        }
    } else if (d >= 3) {
        auto la = detail::log_abs_coeffs(a);
        std::vector<Complex> z;

        if (opt.use_double_stage) {
            // rescale t = sigma * u so the double stage sees O(1) root moduli
            double sigma = 1.0;
            for (const auto& [rho, count] : detail::newton_polygon_radii(la))
                if (std::isfinite(rho)) sigma = std::max(sigma, rho);
            Real rsigma(sigma);
            std::vector<Complex> b(a.size());
            Complex pw(Real(1));
            for (std::size_t j = 0; j < a.size(); ++j) {
                b[j] = a[j] * pw;
                pw *= Complex(rsigma);
            }
            Real bmax(0);
            for (const auto& v : b) bmax = std::max(bmax, abs(v));
            bool fits = bmax > 0;
            std::vector<std::complex<double>> bd(b.size());
            for (std::size_t j = 0; j < b.size() && fits; ++j) {
                Complex v = b[j] / Complex(bmax);
                double re = static_cast<double>(v.re), im = static_cast<double>(v.im);
                double m = std::hypot(re, im);
                if (!b[j].is_zero() && (m < 1e-280 || m > 1e280)) fits = false;
                bd[j] = {re, im};
            }
            if (fits && !(std::abs(bd.back()) > 1e-60)) fits = false;
            if (fits) {
                auto leadd = bd.back();
                for (auto& v : bd) v /= leadd;
                std::vector<double> lad(bd.size());
                for (std::size_t j = 0; j < bd.size(); ++j)
                    lad[j] = std::abs(bd[j]) == 0.0 ? -std::numeric_limits<double>::infinity()
                                                    : std::log(std::abs(bd[j]));
                auto z0 = detail::initial_points<std::complex<double>>(lad);
                auto pre = detail::aberth_iterate<std::complex<double>, double>(
                    bd, std::move(z0), std::numeric_limits<double>::epsilon(), 1e-13, 500, opt);
                z.reserve(d);
                for (const auto& u : pre.z)
                    z.push_back(Complex(Real(u.real()), Real(u.imag())) * Complex(rsigma));
            }
        }
        if (z.empty())
            z = detail::initial_points<Complex>(la);

        auto res = detail::aberth_iterate<Complex, Real>(a, std::move(z), eps, opt.correction_tol,
                                                         opt.max_sweeps, opt);
        sweeps = res.sweeps;
        converged = res.all_locked;
        found = std::move(res.z);
    }

    Polynomial monic(a);
    Real dd(static_cast<double>(d));
    for (const auto& r : found) {
        auto [p, dp] = monic.evaluate_with_derivative(r);
        Real pm = abs(p), dpm = abs(dp);
        Real zs = abs(r);
        Real s(0);
        for (std::size_t j = a.size(); j > 0; --j)
            s = s * zs + abs(a[j - 1]);
        rs.roots.push_back(r);
        rs.residuals.push_back(pm);
        Real noise = dd * eps * s;
        if (dpm > 0)
            rs.error_radii.push_back(dd * (pm + noise) / dpm);
        else
            rs.error_radii.push_back(std::numeric_limits<double>::infinity());
        if (s > rs.condition_factor) rs.condition_factor = s;
    }
    for (const auto& r : rs.roots)
        rs.max_modulus = std::max(rs.max_modulus, abs(r));
    rs.sweeps = sweeps;

    if (!converged)
        throw ConvergenceError("find_roots: iteration cap reached before all roots converged",
                               std::move(rs));
    return rs;
}

} // namespace gkz

#endif
