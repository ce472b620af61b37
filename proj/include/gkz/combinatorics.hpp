#ifndef GKZ_COMBINATORICS_HPP
#define GKZ_COMBINATORICS_HPP

#include <utility>

#include "gkz/precision.hpp"

namespace gkz {

/// Exact binomial coefficient C(n, k); 0 when k > n.
inline BigInt binomial_exact(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.backend().data(), n, k);
    return out;
}

/// Exact k!
inline BigInt factorial_exact(unsigned long k) {
    BigInt out;
    mpz_fac_ui(out.backend().data(), k);
    return out;
}

struct MonomialTermCounts {
    BigInt a_count; ///< weak compositions of k into n parts: C(n+k-1, n-1)
    BigInt b_count; ///< k-subsets of n: C(n, k)
};

/// Term counts of the two sums whose difference drives the defect bound:
/// the full multinomial expansion of (x_1+...+x_n)^k versus the k-fold
/// products over distinct indices.
inline MonomialTermCounts count_monomial_terms(unsigned long n, unsigned long k) {
    return MonomialTermCounts{binomial_exact(n + k - 1, n - 1), binomial_exact(n, k)};
}

/// One rounding from exact integer to the session precision.
inline Real to_real(const BigInt& v) { return Real(v); }

} // namespace gkz

#endif
