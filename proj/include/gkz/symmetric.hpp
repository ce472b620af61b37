#ifndef GKZ_SYMMETRIC_HPP
#define GKZ_SYMMETRIC_HPP

#include <cstddef>
#include <tuple>
#include <vector>

#include "gkz/combinatorics.hpp"
#include "gkz/errors.hpp"
#include "gkz/roots.hpp"

namespace gkz {

namespace detail {

/// e_1..e_kmax via the coefficient recurrence: expand prod (x - v_i)
/// incrementally and read signed coefficients.
inline std::vector<Complex> elementary_symmetric_all(const std::vector<Complex>& v, std::size_t kmax) {
    std::vector<Complex> e(kmax + 1);
    e[0] = Complex(Real(1));
    std::size_t used = 0;
    for (const auto& x : v) {
        ++used;
        std::size_t top = std::min(used, kmax);
        for (std::size_t k = top; k >= 1; --k)
            e[k] += x * e[k - 1];
    }
    return e;
}

/// Direct enumeration of all k-subsets; reference path for small inputs.
inline Complex elementary_symmetric_enumerated(const std::vector<Complex>& v, std::size_t k) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Complex sum;
    while (true) {
        Complex prod(Real(1));
        for (std::size_t i = 0; i < k; ++i) prod *= v[idx[i]];
        sum += prod;
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return sum;
        }
    }
}

} // namespace detail

/// e_k(roots): sum over k-element index sets of the root products.
/// Uses the stable coefficient recurrence above 12 roots, direct
/// enumeration below.
inline Complex elementary_symmetric(const std::vector<Complex>& values, std::size_t k) {
    const std::size_t n = values.size();
    if (k < 1 || k > n)
        throw std::domain_error("elementary_symmetric: k out of range");
    if (n > 12)
        return detail::elementary_symmetric_all(values, k)[k];
    return detail::elementary_symmetric_enumerated(values, k);
}

inline Complex elementary_symmetric(const RootSet& roots, std::size_t k) {
    return elementary_symmetric(roots.roots, k);
}

struct MultinomialCheck {
    Complex lhs;   ///< (sum of roots)^k, direct power
    Complex rhs;   ///< multinomial expansion, brute-force over exponent vectors
    Real residual; ///< |lhs - rhs|
};

/// Checks the multinomial identity (sum lambda_i)^k =
/// sum over exponent vectors j (|j| = k) of k!/(j_1!...j_n!) prod lambda_i^{j_i}.
/// Enumeration is guarded by the weak-composition count.
inline MultinomialCheck multinomial_power_check(const RootSet& roots, unsigned long k) {
    const std::size_t n = roots.size();
    if (k < 1)
        throw std::domain_error("multinomial_power_check: k must be positive");
    BigInt a_count = binomial_exact(static_cast<unsigned long>(n) + k - 1,
                                    static_cast<unsigned long>(n) - 1);
    if (a_count > 1000000)
        throw SizeError("multinomial_power_check: enumeration guard exceeded (aCount > 10^6)");

    Complex sum;
    for (const auto& r : roots.roots) sum += r;
    Complex lhs = pow_n(sum, k);

    // powers lambda_i^j for j = 0..k, one table per root
    std::vector<std::vector<Complex>> pow_table(n, std::vector<Complex>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        pow_table[i][0] = Complex(Real(1));
        for (unsigned long j = 1; j <= k; ++j)
            pow_table[i][j] = pow_table[i][j - 1] * roots.roots[i];
    }
    BigInt k_fact = factorial_exact(k);

    Complex rhs;
    std::vector<unsigned long> expo(n, 0);
    // enumerate weak compositions of k into n parts
    auto visit = [&]() {
        BigInt denom(1);
        Complex prod(Real(1));
        for (std::size_t i = 0; i < n; ++i) {
            denom *= factorial_exact(expo[i]);
            prod *= pow_table[i][expo[i]];
        }
        BigInt coef = k_fact / denom; // exact: multinomial coefficient
        rhs += prod * Complex(to_real(coef));
    };
    auto recurse = [&](auto&& self, std::size_t idx, unsigned long remaining) -> void {
        if (idx + 1 == n) {
            expo[idx] = remaining;
            visit();
            return;
        }
        for (unsigned long t = 0; t <= remaining; ++t) {
            expo[idx] = t;
            self(self, idx + 1, remaining - t);
        }
    };
    recurse(recurse, 0, k);
    return {lhs, rhs, abs(lhs - rhs)};
}

} // namespace gkz

#endif
