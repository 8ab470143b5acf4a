#pragma once

#include <supercong/binomials.hpp>
#include <supercong/exact.hpp>

namespace supercong {

// Guard large enough for every p-power divided out while scanning k < n:
// vp(k) and vp(C(2k,k)) are both below log_p(2n).
inline unsigned default_guard(long p, unsigned e, unsigned long n) {
    unsigned g = 0;
    Int pw = 1;
    while (pw < 2 * Int(static_cast<unsigned long>(n))) {
        pw *= p;
        ++g;
    }
    return g + e;
}

namespace detail {

// Residue mod p^e of sum over lo <= k < hi of C(2k,k) * (num/den)^k,
// scanned incrementally from k = 0.
inline Int central_weighted_range_mod(unsigned long lo, unsigned long hi, const Int& num,
                                      const Int& den, const PrimePowerCtx& ctx,
                                      unsigned extra_guard) {
    ValUnitCtx wctx(ctx, default_guard(ctx.p(), ctx.e(), hi ? hi : 1) + extra_guard);
    ValUnit term = ValUnit::one(wctx);
    Int acc = 0;
    const Int& M = ctx.modulus();
    if (lo == 0 && hi > 0) acc = 1 % M;
    for (unsigned long k = 1; k < hi; ++k) {
        term.mul_fraction(2 * (2 * Int(k) - 1) * num, Int(k) * den);
        if (k >= lo) acc = (acc + term.to_residue()) % M;
    }
    return acc;
}

} // namespace detail

// ---------------------------------------------------------------------------
// S(n,h) = sum_{k<n} C(hn-1,k) C(2k,k) (-h/2)^k
// ---------------------------------------------------------------------------

// Exact value; the denominator always divides 2^(n-1).
inline Rat sum_S(unsigned long n, const Int& h) {
    if (n < 1) throw ParameterError("sum_S: n must be positive");
    Int hn = h * static_cast<unsigned long>(n);
    Int b = 1, c = 1, w = 1; // C(hn-1,k), C(2k,k), (-h)^k
    Int acc = 1;             // running numerator over 2^k
    for (unsigned long k = 1; k < n; ++k) {
        b *= hn - k;
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k);
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        w *= -h;
        acc = 2 * acc + b * c * w;
    }
    return make_rat(acc, pow_ui(2, n - 1));
}

// Fast path: equals reduce(sum_S(n,h), ctx), computed term-incrementally.
inline Int sum_S_mod(unsigned long n, const Int& h, const PrimePowerCtx& ctx,
                     unsigned extra_guard = 0) {
    if (n < 1) throw ParameterError("sum_S_mod: n must be positive");
    Int hn = h * static_cast<unsigned long>(n);
    ValUnitCtx wctx(ctx, default_guard(ctx.p(), ctx.e(), n) + extra_guard);
    ValUnit term = ValUnit::one(wctx);
    const Int& M = ctx.modulus();
    Int acc = 1 % M;
    for (unsigned long k = 1; k < n; ++k) {
        // ratio of consecutive terms: (hn-k)(2k-1)(-h) / k^2
        term.mul_fraction((hn - k) * (2 * Int(k) - 1) * -h, Int(k) * Int(k));
        acc = (acc + term.to_residue()) % M;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// T(n,m) = sum_{k<n} C(2k,k) / m^k
// ---------------------------------------------------------------------------

inline Rat sum_T(unsigned long n, const Int& m) {
    if (n < 1) throw ParameterError("sum_T: n must be positive");
    if (m == 0) throw ParameterError("sum_T: m must be nonzero");
    Int c = 1, acc = 1;
    for (unsigned long k = 1; k < n; ++k) {
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        acc = acc * m + c;
    }
    return make_rat(acc, pow_ui(m, n - 1));
}

inline Int sum_T_mod(unsigned long n, const Int& m, const PrimePowerCtx& ctx,
                     unsigned extra_guard = 0) {
    if (n < 1) throw ParameterError("sum_T_mod: n must be positive");
    if (m == 0) throw ParameterError("sum_T_mod: m must be nonzero");
    return detail::central_weighted_range_mod(0, n, 1, m, ctx, extra_guard);
}

// Partial range lo <= k < hi of the same family (Lemma-style block pieces).
inline Int sum_T_range_mod(unsigned long lo, unsigned long hi, const Int& m,
                           const PrimePowerCtx& ctx, unsigned extra_guard = 0) {
    if (m == 0) throw ParameterError("sum_T_range_mod: m must be nonzero");
    return detail::central_weighted_range_mod(lo, hi, 1, m, ctx, extra_guard);
}

inline Rat sum_T_range(unsigned long lo, unsigned long hi, const Int& m) {
    if (m == 0) throw ParameterError("sum_T_range: m must be nonzero");
    Rat acc = 0;
    if (lo >= hi) return acc;
    Int c = central_binomial(lo);
    Int mp = pow_ui(m, lo);
    acc = make_rat(c, mp);
    for (unsigned long k = lo + 1; k < hi; ++k) {
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        mp *= m;
        acc += make_rat(c, mp);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// TW(n,m) = sum_{k<n} C(n-1,k) C(2k,k) / (-m)^k
// ---------------------------------------------------------------------------

inline Rat sum_TW(unsigned long n, const Int& m) {
    if (n < 1) throw ParameterError("sum_TW: n must be positive");
    if (m == 0) throw ParameterError("sum_TW: m must be nonzero");
    Int b = 1, c = 1, acc = 1;
    for (unsigned long k = 1; k < n; ++k) {
        b *= Int(static_cast<unsigned long>(n) - k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k);
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        acc = acc * -m + b * c;
    }
    return make_rat(acc, pow_ui(-m, n - 1));
}

inline Int sum_TW_mod(unsigned long n, const Int& m, const PrimePowerCtx& ctx,
                      unsigned extra_guard = 0) {
    if (n < 1) throw ParameterError("sum_TW_mod: n must be positive");
    if (m == 0) throw ParameterError("sum_TW_mod: m must be nonzero");
    ValUnitCtx wctx(ctx, default_guard(ctx.p(), ctx.e(), n) + extra_guard);
    ValUnit term = ValUnit::one(wctx);
    const Int& M = ctx.modulus();
    Int acc = 1 % M;
    for (unsigned long k = 1; k < n; ++k) {
        term.mul_fraction(2 * Int(static_cast<unsigned long>(n) - k) * (2 * Int(k) - 1),
                          Int(k) * Int(k) * -m);
        acc = (acc + term.to_residue()) % M;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Block sums over floor(k/p^alpha) = l of C(2k,k) (h/2)^k
// ---------------------------------------------------------------------------

inline Int block_sum(long p, unsigned alpha, unsigned long l, const Int& h,
                     const PrimePowerCtx& ctx, unsigned extra_guard = 0) {
    if (ctx.p() != p) throw ParameterError("block_sum: ctx prime differs from p");
    Int width = pow_ui(p, alpha);
    if (!width.fits_ulong_p()) throw ParameterError("block_sum: p^alpha too large");
    unsigned long w = width.get_ui();
    unsigned long lo = w * l, hi = lo + w;
    return detail::central_weighted_range_mod(lo, hi, h, 2, ctx, extra_guard);
}

inline Rat block_sum_exact(long p, unsigned alpha, unsigned long l, const Int& h) {
    Int width = pow_ui(p, alpha);
    if (!width.fits_ulong_p()) throw ParameterError("block_sum_exact: p^alpha too large");
    unsigned long w = width.get_ui();
    unsigned long lo = w * l, hi = lo + w;
    Int c = central_binomial(lo);
    Int hp = pow_ui(h, lo);
    Int acc = c * hp; // numerator over 2^k
    for (unsigned long k = lo + 1; k < hi; ++k) {
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        hp *= h;
        acc = 2 * acc + c * hp;
    }
    return make_rat(acc, pow_ui(2, hi - 1));
}

// ---------------------------------------------------------------------------
// H(a,h,p) = sum_{k<p^a} C(2k,k) (h/2)^k H'_k with H'_k the p-restricted
// harmonic sum; the statement is mod p, so this evaluates exactly and reduces.
// ---------------------------------------------------------------------------

inline Int sum_H(unsigned a, const Int& h, long p) {
    if (a < 1) throw ParameterError("sum_H: a must be positive");
    PrimePowerCtx ctx(p, 1);
    Int bound = pow_ui(p, a);
    if (!bound.fits_ulong_p()) throw ParameterError("sum_H: p^a too large");
    unsigned long n = bound.get_ui();
    Int c = 1, hp = 1;
    Rat harmonic = 0, acc = 0;
    for (unsigned long k = 1; k < n; ++k) {
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        hp *= h;
        if (k % static_cast<unsigned long>(p) != 0) harmonic += make_rat(1, Int(k));
        acc += make_rat(c * hp, pow_ui(2, k)) * harmonic;
    }
    return reduce(acc, ctx);
}

// ---------------------------------------------------------------------------
// Intro sums
// ---------------------------------------------------------------------------

// sum_{k<p} C(2k, k+d) for 0 <= d <= p
inline Int sum_shifted(long p, long d) {
    if (p < 3 || !is_prime(p)) throw ParameterError("sum_shifted: p must be an odd prime");
    if (d < 0 || d > p) throw ParameterError("sum_shifted: d must lie in [0, p]");
    Int acc = 0;
    for (long k = 0; k < p; ++k) {
        Int t;
        mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(2 * k),
                     static_cast<unsigned long>(k + d));
        acc += t;
    }
    return acc;
}

// sum_{k<n} C(2k,k)
inline Int sum_central(unsigned long n) {
    if (n < 1) throw ParameterError("sum_central: n must be positive");
    Int c = 1, acc = 1;
    for (unsigned long k = 1; k < n; ++k) {
        c *= 2 * (2 * Int(k) - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        acc += c;
    }
    return acc;
}

} // namespace supercong
