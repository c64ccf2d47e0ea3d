#pragma once

#include "fps/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fps {

enum class FieldKind { rational, cyclotomic };

class FieldContext;
class FieldElement;

/// Contexts are immutable and shared read-only between all values built
/// from them.
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first,
/// monic. Computed by dividing x^n - 1 by Phi_d for every proper divisor
/// d of n; all divisions are exact over the integers.
std::vector<Integer> cyclotomic_polynomial(int n);

/// Descriptor of the coefficient field: the rationals, or Q(zeta_n)
/// represented as Q[x] mod Phi_n.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    static FieldContextPtr make_rational();
    static FieldContextPtr make_cyclotomic(int n);

    FieldKind kind() const noexcept { return kind_; }
    /// Cyclotomic index n; 1 for the rational field.
    int cyclotomic_index() const noexcept { return n_; }
    /// Extension degree over Q, i.e. phi(n) for cyclotomic contexts.
    int degree() const noexcept { return degree_; }
    /// Phi_n, lowest degree first, monic.
    const std::vector<Integer>& modulus() const noexcept { return phi_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x: a primitive n-th root of unity. Equals 1 in the
    /// rational context.
    FieldElement zeta() const;
    FieldElement from_rational(Rational q) const;
    FieldElement from_integer(long v) const;
    /// Builds an element from explicit coordinates (length must equal
    /// degree()).
    FieldElement element(std::vector<Rational> coords) const;

private:
    FieldContext(FieldKind kind, int n, std::vector<Integer> phi);

    FieldKind kind_;
    int n_;
    int degree_;
    std::vector<Integer> phi_;
};

/// Two contexts describe the same field iff kind and index agree;
/// elements interoperate exactly when their contexts do.
bool same_field(const FieldContext& a, const FieldContext& b) noexcept;

FieldContextPtr make_field(FieldKind kind, int n = 1);

/// An element of the coefficient field: coordinate vector in the power
/// basis 1, zeta, ..., zeta^(degree-1). Immutable in spirit; the mutating
/// operators exist for accumulation loops.
class FieldElement {
public:
    const FieldContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement operator-() const;

    /// *this += a * b, with the product reduced mod Phi_n. The workhorse
    /// of the series kernels; avoids materializing the product.
    FieldElement& add_mul(const FieldElement& a, const FieldElement& b);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs);
    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);
    friend bool operator!=(const FieldElement& lhs, const FieldElement& rhs) {
        return !(lhs == rhs);
    }

private:
    friend class FieldContext;
    FieldElement(FieldContextPtr ctx, std::vector<Rational> coords)
        : ctx_(std::move(ctx)), coords_(std::move(coords)) {}

    FieldContextPtr ctx_;
    std::vector<Rational> coords_;
};

/// Unreduced product accumulator of width 2*degree - 1. The series
/// kernels sum many coordinate products into one of these and reduce
/// mod Phi_n once per assembled coefficient; slots are reused across
/// attach() calls so the hot loops do not allocate.
class WideAccumulator {
public:
    WideAccumulator() = default;

    /// Binds the accumulator to a field and zeroes the slots.
    void attach(const FieldContextPtr& ctx);
    /// slots += a * b, unreduced.
    void add_product(const FieldElement& a, const FieldElement& b);
    /// Reduces mod Phi_n, returns the element, re-zeroes the slots.
    FieldElement take();

private:
    FieldContextPtr ctx_;
    std::vector<Rational> slots_;
};

/// Multiplicative inverse via extended Euclid on (coords, Phi_n).
FieldElement inv(const FieldElement& a);

/// a^e for any integer e (negative exponents via inv).
FieldElement pow(const FieldElement& a, long e);

/// Smallest m >= 1 with a^m = 1, or nullopt when a is not a root of
/// unity. Torsion units of Q(zeta_n) all have order dividing 2n, so only
/// divisors of 2n are searched (divisors of 2 in the rational context).
std::optional<int> multiplicative_order(const FieldElement& a);

/// True iff a has multiplicative order exactly n.
bool is_primitive_root(const FieldElement& a, int n);

} // namespace fps
