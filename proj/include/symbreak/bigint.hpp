#ifndef SYMBREAK_BIGINT_HPP
#define SYMBREAK_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symbreak {

// All coloring counts are exact. k^(m*n) leaves 64 bits long before the
// graphs leave desk scale, so everything countable is an mpz.
using Int = mpz_class;

inline Int ipow(std::uint64_t base, std::uint64_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(std::uint64_t n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

} // namespace symbreak

#endif
