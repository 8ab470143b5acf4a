#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace supercong {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPAdicInteger : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingParam : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

inline Int pow_ui(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow_ui(long base, unsigned long exp) { return pow_ui(Int(base), exp); }

// GMP's BPSW-based test; no pseudoprimes are known below 2^64, which is far
// beyond desk scale.
inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline bool is_prime(long n) { return is_prime(Int(n)); }

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline std::string rat_string(const Rat& x) {
    return x.get_str();
}

// ---------------------------------------------------------------------------
// Valuation: an integer or +infinity (the value of vp at 0)
// ---------------------------------------------------------------------------

class Valuation {
public:
    constexpr Valuation() = default;
    constexpr Valuation(long v) : finite_(true), v_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.finite_ = false;
        return v;
    }

    constexpr bool is_infinite() const { return !finite_; }

    long value() const {
        if (!finite_) throw std::logic_error("Valuation: value() of +infinity");
        return v_;
    }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }

    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(a.v_ + b.v_);
    }

    friend constexpr Valuation operator+(const Valuation& a, long b) {
        return a + Valuation(b);
    }

    std::string to_string() const {
        return finite_ ? std::to_string(v_) : std::string("inf");
    }

private:
    bool finite_ = true;
    long v_ = 0;
};

// ---------------------------------------------------------------------------
// p-adic valuation of integers and rationals
// ---------------------------------------------------------------------------

namespace detail {

// valuation of a nonzero integer, no primality check
inline long vp_unchecked(const Int& x, const Int& p) {
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

inline void check_prime(const Int& p) {
    if (p < 2 || !is_prime(p)) {
        throw ParameterError("vp: " + p.get_str() + " is not prime");
    }
}

} // namespace detail

inline Valuation vp(const Int& x, const Int& p) {
    detail::check_prime(p);
    if (x == 0) return Valuation::infinity();
    return Valuation(detail::vp_unchecked(x, p));
}

inline Valuation vp(const Rat& x, const Int& p) {
    detail::check_prime(p);
    if (x == 0) return Valuation::infinity();
    return Valuation(detail::vp_unchecked(x.get_num(), p) -
                     detail::vp_unchecked(x.get_den(), p));
}

inline Valuation vp(const Int& x, long p) { return vp(x, Int(p)); }
inline Valuation vp(const Rat& x, long p) { return vp(x, Int(p)); }

// ---------------------------------------------------------------------------
// PrimePowerCtx: the ring Z/p^e for an odd prime p
// ---------------------------------------------------------------------------

class PrimePowerCtx {
public:
    PrimePowerCtx(long p, unsigned e) : p_(p), e_(e) {
        if (p < 3 || p % 2 == 0 || !is_prime(p)) {
            throw ParameterError("PrimePowerCtx: p must be an odd prime, got " +
                                 std::to_string(p));
        }
        if (e < 1) throw ParameterError("PrimePowerCtx: exponent must be >= 1");
        modulus_ = pow_ui(p, e);
    }

    long p() const { return p_; }
    unsigned e() const { return e_; }
    const Int& modulus() const { return modulus_; }

private:
    long p_;
    unsigned e_;
    Int modulus_;
};

// Inverse of a modulo an arbitrary modulus m >= 2.
inline Int mod_inv(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NotInvertible("mod_inv: " + a.get_str() + " has no inverse mod " + m.get_str());
    }
    return r;
}

inline Int mod_inv(const Int& a, const PrimePowerCtx& ctx) {
    return mod_inv(a, ctx.modulus());
}

// Least-nonnegative residue of a p-integral rational in Z/p^e.
inline Int reduce(const Rat& x, const PrimePowerCtx& ctx) {
    if (x == 0) return 0;
    // canonical form: vp(x) < 0 iff p divides the denominator
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(ctx.p()))) {
        throw NotPAdicInteger("reduce: " + rat_string(x) + " has negative " +
                              std::to_string(ctx.p()) + "-adic valuation");
    }
    Int num = x.get_num() % ctx.modulus();
    if (num < 0) num += ctx.modulus();
    return num * mod_inv(x.get_den() % ctx.modulus(), ctx) % ctx.modulus();
}

// Same, modulo an arbitrary modulus m >= 1 (used by the check DSL).
inline Int reduce_mod(const Rat& x, const Int& m) {
    if (m < 1) throw ParameterError("reduce_mod: modulus must be positive");
    if (m == 1) return 0;
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t());
    if (g != 1) {
        throw NotPAdicInteger("reduce_mod: denominator of " + rat_string(x) +
                              " shares factor " + g.get_str() + " with modulus");
    }
    Int num = x.get_num() % m;
    if (num < 0) num += m;
    return num * mod_inv(x.get_den() % m, m) % m;
}

// ---------------------------------------------------------------------------
// ValUnit: p^v * u with u a unit kept modulo p^(e+guard)
//
// The guard is the evaluation's declared bound on how deep the valuation
// offset may dip; exceeding it raises PrecisionExhausted rather than
// truncating.
// ---------------------------------------------------------------------------

class ValUnitCtx {
public:
    ValUnitCtx(PrimePowerCtx base, unsigned guard)
        : base_(std::move(base)), guard_(guard),
          work_modulus_(base_.modulus() * pow_ui(base_.p(), guard)) {}

    const PrimePowerCtx& base() const { return base_; }
    long p() const { return base_.p(); }
    unsigned e() const { return base_.e(); }
    unsigned guard() const { return guard_; }
    const Int& work_modulus() const { return work_modulus_; }

private:
    PrimePowerCtx base_;
    unsigned guard_;
    Int work_modulus_;
};

class ValUnit {
public:
    explicit ValUnit(const ValUnitCtx& ctx) : ctx_(&ctx), zero_(true) {}

    static ValUnit zero(const ValUnitCtx& ctx) { return ValUnit(ctx); }

    static ValUnit one(const ValUnitCtx& ctx) {
        ValUnit x(ctx);
        x.zero_ = false;
        x.v_ = 0;
        x.u_ = 1;
        return x;
    }

    static ValUnit from_integer(const ValUnitCtx& ctx, const Int& n) {
        ValUnit x = one(ctx);
        x.mul_fraction(n, 1);
        return x;
    }

    static ValUnit from_rational(const ValUnitCtx& ctx, const Rat& q) {
        ValUnit x = one(ctx);
        x.mul_fraction(q.get_num(), q.get_den());
        return x;
    }

    const ValUnitCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return zero_; }

    // valuation offset; only meaningful for nonzero values
    long v() const { return v_; }
    const Int& unit() const { return u_; }

    // Multiply by num/den exactly: p-powers move into v, unit parts into u.
    void mul_fraction(const Int& num, const Int& den) {
        if (zero_) return;
        if (den == 0) throw ParameterError("ValUnit: zero denominator");
        if (num == 0) {
            zero_ = true;
            v_ = 0;
            u_ = 0;
            return;
        }
        Int p(ctx_->p());
        Int nu, du;
        v_ += static_cast<long>(mpz_remove(nu.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
        v_ -= static_cast<long>(mpz_remove(du.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
        if (v_ < -static_cast<long>(ctx_->guard())) {
            throw PrecisionExhausted("ValUnit: valuation debt " + std::to_string(-v_) +
                                     " exceeds guard " + std::to_string(ctx_->guard()));
        }
        const Int& W = ctx_->work_modulus();
        u_ = u_ * (nu % W) % W;
        if (du != 1) u_ = u_ * mod_inv(du % W, W) % W;
        if (u_ < 0) u_ += W;
    }

    // Residue of the represented value in Z/p^e.
    Int to_residue() const {
        if (zero_) return 0;
        if (v_ < 0) {
            throw NotPAdicInteger("ValUnit: negative valuation " + std::to_string(v_));
        }
        if (v_ >= static_cast<long>(ctx_->e())) return 0;
        return u_ * pow_ui(ctx_->p(), static_cast<unsigned long>(v_)) % ctx_->base().modulus();
    }

    friend bool operator==(const ValUnit& a, const ValUnit& b) {
        if (a.zero_ != b.zero_) return false;
        if (a.zero_) return true;
        return a.v_ == b.v_ && a.u_ == b.u_;
    }

private:
    const ValUnitCtx* ctx_;
    bool zero_;
    long v_ = 0;
    Int u_ = 0;
};

// The spec-level op: x * factor with valuation bookkeeping.
inline ValUnit valunit_mul_div(ValUnit x, const Rat& factor) {
    x.mul_fraction(factor.get_num(), factor.get_den());
    return x;
}

} // namespace supercong
