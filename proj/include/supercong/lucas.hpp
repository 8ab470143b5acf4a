#pragma once

#include <supercong/exact.hpp>

namespace supercong {

// Legendre symbol by Euler's criterion: a^((p-1)/2) mod p.
inline int legendre(const Int& a, long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw ParameterError("legendre: p must be an odd prime, got " + std::to_string(p));
    }
    Int P(p), r, exp((p - 1) / 2);
    mpz_powm(r.get_mpz_t(), Int(((a % P) + P) % P).get_mpz_t(), exp.get_mpz_t(), P.get_mpz_t());
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

inline int legendre(long a, long p) { return legendre(Int(a), p); }

// Jacobi symbol, the multiplicative extension to odd positive lower arguments.
inline int jacobi(const Int& a, const Int& n) {
    if (n <= 0 || n % 2 == 0) {
        throw ParameterError("jacobi: lower argument must be odd and positive");
    }
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

inline int jacobi(long a, long n) { return jacobi(Int(a), Int(n)); }

// ---------------------------------------------------------------------------
// Lucas sequences u_n(A,B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}.
// ---------------------------------------------------------------------------

struct LucasParams {
    Int A;
    Int B;

    Int discriminant() const { return A * A - 4 * B; }
};

// Fast doubling on the pair (u_k, u_{k+1}):
//   u_{2k}   = u_k (2 u_{k+1} - A u_k)
//   u_{2k+1} = u_{k+1}^2 - B u_k^2
inline Int lucas_u(unsigned long n, const LucasParams& params) {
    if (n == 0) return 0;
    Int u = 0, w = 1; // (u_k, u_{k+1}), k = 0
    int bits = 0;
    for (unsigned long m = n; m > 0; m >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        Int u2 = u * (2 * w - params.A * u);
        Int w2 = w * w - params.B * u * u;
        if ((n >> i) & 1) {
            u = w2;
            w = params.A * w2 - params.B * u2;
        } else {
            u = u2;
            w = w2;
        }
    }
    return u;
}

inline Int lucas_u(unsigned long n, const Int& A, const Int& B) {
    return lucas_u(n, LucasParams{A, B});
}

} // namespace supercong
