#ifndef GKZ_HARDY_HPP
#define GKZ_HARDY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gkz/complex.hpp"
#include "gkz/errors.hpp"

namespace gkz {

/// Weight sequence beta for the weighted Hardy space H^2(beta):
/// ||z^n|| = beta_n, beta_0 = 1. Shift weights are w_n = beta_{n+1}/beta_n.
class WeightSequence {
public:
    enum class Generator { ExplicitList, Classical, FromShiftWeights };

    static constexpr std::size_t default_truncation = 2048;

    /// beta_n = 1 for all n: the classical Hardy space H^2.
    static WeightSequence classical(std::size_t n_top = default_truncation) {
        std::vector<Real> b(n_top + 1, Real(1));
        return WeightSequence(std::move(b), Generator::Classical);
    }

    static WeightSequence from_list(std::vector<Real> beta) {
        if (beta.size() < 2)
            throw std::domain_error("weight sequence needs at least beta_0 and beta_1");
        if (beta[0] != 1)
            throw std::domain_error("beta_0 must equal 1");
        for (const auto& v : beta)
            if (v <= 0)
                throw std::domain_error("weights must be positive");
        return WeightSequence(std::move(beta), Generator::ExplicitList);
    }

    /// beta_n = w_0 ... w_{n-1}, the running product of shift weights.
    static WeightSequence from_shift_weights(const std::vector<Real>& w) {
        std::vector<Real> b;
        b.reserve(w.size() + 1);
        b.emplace_back(1);
        for (const auto& v : w) {
            if (v <= 0)
                throw std::domain_error("shift weights must be positive");
            b.push_back(b.back() * v);
        }
        if (b.size() < 2)
            throw std::domain_error("weight sequence needs at least one shift weight");
        return WeightSequence(std::move(b), Generator::FromShiftWeights);
    }

    /// Donoghue-type example, w_n = 1/(n+1); beta_n = 1/n!.
    static WeightSequence reciprocal(std::size_t n_top = default_truncation) {
        std::vector<Real> w;
        w.reserve(n_top);
        for (std::size_t n = 0; n < n_top; ++n)
            w.push_back(Real(1) / Real(static_cast<double>(n + 1)));
        return from_shift_weights(w);
    }

    /// w_n = q, beta_n = q^n, 0 < q < 1.
    static WeightSequence geometric(const Real& q, std::size_t n_top = default_truncation) {
        if (!(q > 0 && q < 1))
            throw std::domain_error("geometric weight requires q in (0,1)");
        return from_shift_weights(std::vector<Real>(n_top, q));
    }

    std::size_t truncation() const { return beta_.size() - 1; } ///< N: indices run 0..N
    const std::vector<Real>& beta() const { return beta_; }
    const Real& operator[](std::size_t n) const { return beta_[n]; }
    Generator generator() const { return gen_; }

    Real shift_weight(std::size_t n) const { return beta_[n + 1] / beta_[n]; }

private:
    WeightSequence(std::vector<Real> b, Generator g) : beta_(std::move(b)), gen_(g) {}
    std::vector<Real> beta_;
    Generator gen_;
};

/// Finite truncation of a formal power series sum a_n z^n.
struct HardyElement {
    std::vector<Complex> coeffs;
};

/// sqrt(sum |a_n|^2 beta_n^2) over the truncation.
inline Real norm_beta(const HardyElement& f, const WeightSequence& beta) {
    if (f.coeffs.size() > beta.truncation() + 1)
        throw std::domain_error("norm_beta: element longer than the weight truncation");
    Real s(0);
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
        Real b = beta[n];
        s += norm(f.coeffs[n]) * b * b;
    }
    using boost::multiprecision::sqrt;
    return sqrt(s);
}

/// ||M_z|| over the truncation: max_n beta_{n+1}/beta_n.
inline Real shift_norm(const WeightSequence& beta) {
    Real m(0);
    for (std::size_t n = 0; n + 1 <= beta.truncation(); ++n)
        m = std::max(m, beta.shift_weight(n));
    return m;
}

/// Finite-sample proxy for liminf beta_n^{1/n}: min of beta_n^{1/n} over the
/// trailing window [N - window, N]. Reported together with the window used.
inline Real r0_estimate(const WeightSequence& beta, std::size_t window) {
    std::size_t n_top = beta.truncation();
    if (window > n_top)
        throw std::domain_error("r0_estimate: window larger than the data");
    using boost::multiprecision::pow;
    Real m(-1);
    for (std::size_t n = n_top - window; n <= n_top; ++n) {
        if (n == 0) continue;
        Real v = pow(beta[n], Real(1) / Real(static_cast<double>(n)));
        if (m < 0 || v < m) m = v;
    }
    return m;
}

/// (sup_{n <= N-kMax} beta_{n+kMax}/beta_n)^{1/kMax}, the k-th-root proxy for
/// the spectral radius of the shift.
inline Real spectral_radius_estimate(const WeightSequence& beta, std::size_t k_max) {
    std::size_t n_top = beta.truncation();
    if (k_max < 1 || k_max >= n_top)
        throw std::domain_error("spectral_radius_estimate: need 1 <= kMax < N");
    Real sup(0);
    for (std::size_t n = 0; n + k_max <= n_top; ++n)
        sup = std::max(sup, beta[n + k_max] / beta[n]);
    using boost::multiprecision::pow;
    return pow(sup, Real(1) / Real(static_cast<double>(k_max)));
}

struct StrictCyclicityVerdict {
    bool sufficient = false;     ///< both sub-verdicts hold
    bool non_increasing = false; ///< shift weights monotone non-increasing
    bool square_summable = false;///< tail-mass heuristic on sum w_n^2
    Real tail_ratio{0};          ///< last-quarter mass / total mass
};

/// Sufficient condition for strict cyclicity of M_z: shift weights
/// monotonically non-increasing and square-summable. Square-summability on
/// finite data uses a declared heuristic: the last quarter of the partial
/// sum must carry at most 1e-3 of the total.
inline StrictCyclicityVerdict strict_cyclicity_sufficient(const WeightSequence& beta) {
    std::size_t n_top = beta.truncation();
    if (n_top < 2)
        throw std::domain_error("strict_cyclicity_sufficient: need N >= 2");
    StrictCyclicityVerdict v;
    v.non_increasing = true;
    Real total(0), tail(0);
    std::size_t count = n_top; // shift weights w_0..w_{N-1}
    std::size_t tail_start = count - count / 4;
    Real prev(-1);
    for (std::size_t n = 0; n < count; ++n) {
        Real w = beta.shift_weight(n);
        if (prev >= 0 && w > prev * (Real(1) + Real(1e-15)))
            v.non_increasing = false;
        prev = w;
        Real w2 = w * w;
        total += w2;
        if (n >= tail_start) tail += w2;
    }
    v.tail_ratio = total > 0 ? Real(tail / total) : Real(0);
    v.square_summable = v.tail_ratio <= Real(1e-3);
    v.sufficient = v.non_increasing && v.square_summable;
    return v;
}

struct KernelNorm {
    Real value{0};
    bool converged = false; ///< last-quarter tail <= 1e-6 of the total
};

/// ||k_w|| = sqrt(sum |w|^{2n} / beta_n^2) over the truncation, with a tail
/// heuristic for convergence of the infinite series.
inline KernelNorm kernel_norm_at(const WeightSequence& beta, const Complex& w) {
    std::size_t n_top = beta.truncation();
    Real q = norm(w); // |w|^2
    Real term(1), total(0), tail(0);
    std::size_t tail_start = (n_top + 1) - (n_top + 1) / 4;
    for (std::size_t n = 0; n <= n_top; ++n) {
        Real b = beta[n];
        Real t = term / (b * b);
        total += t;
        if (n >= tail_start) tail += t;
        term *= q;
        if (!mpfr_number_p(term.backend().data()) || !mpfr_number_p(total.backend().data())) {
            using boost::multiprecision::sqrt;
            return KernelNorm{sqrt(total), false};
        }
    }
    using boost::multiprecision::sqrt;
    KernelNorm out;
    out.value = sqrt(total);
    out.converged = total > 0 && tail <= Real(1e-6) * total;
    return out;
}

struct PointValue {
    Complex value;
    bool trustworthy = false; ///< kernel norm converges at w, so |f(w)| <= ||f|| ||k_w||
};

/// Evaluates the truncated series at w by Horner; trustworthiness follows
/// the kernel-norm convergence test at the same point.
inline PointValue evaluate_element(const HardyElement& f, const Complex& w, const WeightSequence& beta) {
    Complex acc;
    for (std::size_t j = f.coeffs.size(); j > 0; --j) {
        acc *= w;
        acc += f.coeffs[j - 1];
    }
    return PointValue{acc, kernel_norm_at(beta, w).converged};
}

/// Aggregate diagnostics for the shift operator on H^2(beta).
struct ShiftDiagnostics {
    Real shift_norm{0};
    Real r0_estimate{0};
    std::size_t r0_window = 0;
    Real spectral_radius_estimate{0};
    std::size_t spectral_k = 0;
    StrictCyclicityVerdict strict_cyclicity;
    std::string kernel_radius; ///< sampled description of where ||k_w|| stays finite
};

inline ShiftDiagnostics shift_diagnostics(const WeightSequence& beta,
                                          std::size_t r0_window = 0, std::size_t spectral_k = 0) {
    std::size_t n_top = beta.truncation();
    if (r0_window == 0) r0_window = std::max<std::size_t>(1, n_top / 4);
    if (spectral_k == 0) spectral_k = std::max<std::size_t>(1, n_top / 2);

    ShiftDiagnostics d;
    d.shift_norm = shift_norm(beta);
    d.r0_window = r0_window;
    d.r0_estimate = r0_estimate(beta, r0_window);
    d.spectral_k = spectral_k;
    d.spectral_radius_estimate = spectral_radius_estimate(beta, spectral_k);
    d.strict_cyclicity = strict_cyclicity_sufficient(beta);

    // sample |w| on a coarse grid; report the largest radius with a
    // convergent kernel norm within the truncation heuristic
    Real best(-1);
    for (int i = 1; i <= 40; ++i) {
        Real radius = Real(i) / Real(20); // up to 2.0
        if (kernel_norm_at(beta, Complex(radius)).converged) best = radius;
    }
    if (best < 0)
        d.kernel_radius = "kernel norm diverges at every sampled radius >= 0.05 (truncation N=" +
                          std::to_string(n_top) + ")";
    else
        d.kernel_radius = "kernel norm converges for sampled |w| <= " + best.str(4) +
                          " (truncation N=" + std::to_string(n_top) + ")";
    return d;
}

} // namespace gkz

#endif
