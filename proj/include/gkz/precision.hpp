#ifndef GKZ_PRECISION_HPP
#define GKZ_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>

namespace gkz {

/// Arbitrary-precision binary float. Precision is configured per session
/// via set_precision_bits(); every freshly constructed Real picks up the
/// session precision.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Exact arbitrary-size integer, used for all factorials and binomials.
using BigInt = boost::multiprecision::mpz_int;

namespace detail {
inline unsigned& requested_bits() {
    static unsigned bits = 113;
    return bits;
}
}

/// Sets the session working precision. The underlying library rounds the
/// request up to a whole number of decimal digits, so the effective bit
/// count is at least `bits`.
inline void set_precision_bits(unsigned bits) {
    if (bits < 53)
        throw std::domain_error("working precision must be at least 53 bits");
    unsigned digits10 = static_cast<unsigned>((static_cast<unsigned long long>(bits) * 30103 + 99999) / 100000);
    Real::default_precision(digits10);
    detail::requested_bits() = bits;
}

/// Effective precision in bits of a freshly constructed Real.
inline unsigned precision_bits() {
    Real probe(0);
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

/// Unit roundoff at the session precision, 2^(1-p).
inline Real working_eps() {
    Real one(1);
    long p = mpfr_get_prec(one.backend().data());
    return ldexp(one, static_cast<int>(1 - p));
}

struct PrecisionInit {
    PrecisionInit() { set_precision_bits(113); }
};
namespace detail {
inline const PrecisionInit precision_init{};
}

} // namespace gkz

#endif
