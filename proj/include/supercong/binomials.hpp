#pragma once

#include <supercong/exact.hpp>

namespace supercong {

// Generalized binomial coefficient: n(n-1)...(n-k+1)/k!, integer-valued for
// every integer n. Zero only when 0 <= n < k.
inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

inline Int central_binomial(unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * k, k);
    return r;
}

inline Int catalan(unsigned long k) {
    Int c = central_binomial(k);
    Int r;
    mpz_divexact_ui(r.get_mpz_t(), c.get_mpz_t(), k + 1);
    return r;
}

// Sum of 1/j over 1 <= j <= k with p not dividing j.
inline Rat restricted_harmonic(unsigned long k, long p) {
    if (p < 3 || !is_prime(p)) {
        throw ParameterError("restricted_harmonic: p must be an odd prime");
    }
    Rat sum = 0;
    for (unsigned long j = 1; j <= k; ++j) {
        if (j % static_cast<unsigned long>(p) == 0) continue;
        sum += make_rat(1, Int(j));
    }
    return sum;
}

namespace detail {

// C(a,b) mod p for 0 <= b <= a < p, by the falling-factorial product.
inline Int small_binomial_mod(const Int& a, const Int& b, const Int& p) {
    if (b > a) return 0;
    Int num = 1, den = 1;
    for (Int i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return num * mod_inv(den, p) % p;
}

} // namespace detail

// Lucas' theorem: C(n,k) mod p as the digit-wise product of base-p digit
// binomials. Mod p only; prime-power moduli go through the exact paths.
inline Int binomial_mod_lucas(Int n, Int k, long p) {
    if (n < 0 || k < 0) throw ParameterError("binomial_mod_lucas: n, k must be nonnegative");
    if (!is_prime(p)) throw ParameterError("binomial_mod_lucas: p must be prime");
    Int P(p);
    Int result = 1;
    while (k > 0 || n > 0) {
        Int nd = n % P, kd = k % P;
        result = result * detail::small_binomial_mod(nd, kd, P) % P;
        if (result == 0) return 0;
        n /= P;
        k /= P;
    }
    return result;
}

// ---------------------------------------------------------------------------
// BinomRowScanner: walks C(upper, k) for k = 0, 1, 2, ... in ValUnit form,
// one small multiply/divide per step. upper may be negative (generalized
// binomials never vanish there); for 0 <= upper < k the value is exactly zero
// and the scanner stays at zero while k keeps advancing.
// ---------------------------------------------------------------------------

class BinomRowScanner {
public:
    BinomRowScanner(Int upper, const ValUnitCtx& ctx)
        : upper_(std::move(upper)), value_(ValUnit::one(ctx)) {}

    unsigned long k() const { return k_; }
    const ValUnit& current() const { return value_; }

    // Advance to k+1 and return C(upper, k+1).
    const ValUnit& advance() {
        ++k_;
        value_.mul_fraction(upper_ - (k_ - 1), Int(k_));
        return value_;
    }

private:
    Int upper_;
    unsigned long k_ = 0;
    ValUnit value_;
};

inline ValUnit row_scan_next(BinomRowScanner& s) { return s.advance(); }

} // namespace supercong
