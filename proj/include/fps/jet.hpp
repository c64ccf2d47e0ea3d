#pragma once

#include "fps/field.hpp"

#include <vector>

namespace fps {

/// Truncated formal power series a1*z + ... + aN*z^N with zero constant
/// term. Coefficient k of z^k lives at coeffs()[k-1]. Immutable value
/// type; all operations are pure functions.
class Jet {
public:
    /// Zero jet at the given truncation order.
    Jet(FieldContextPtr ctx, int truncation);
    /// Jet from explicit coefficients (a1 first); N = coeffs.size().
    Jet(FieldContextPtr ctx, std::vector<FieldElement> coeffs);

    const FieldContextPtr& context() const noexcept { return ctx_; }
    int truncation() const noexcept { return static_cast<int>(coeffs_.size()); }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^k, 1 <= k <= N.
    const FieldElement& a(int k) const;
    const FieldElement& lead() const { return coeffs_.front(); }

    bool is_zero() const;
    /// Membership in G[[z]]: a1 != 0.
    bool is_group_element() const { return !lead().is_zero(); }

private:
    FieldContextPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

/// An element of G[[z]] (a1 != 0). The invariant is enforced at runtime
/// by the group operations rather than by the type.
using GroupJet = Jet;

/// id(z) = z.
Jet identity(const FieldContextPtr& ctx, int truncation);
/// l_w(z) = w*z, w != 0.
Jet linear(const FieldContextPtr& ctx, const FieldElement& w, int truncation);

/// Cauchy product truncated at N. Same context and N required.
Jet multiply(const Jet& p, const Jet& q);

/// (f o g)(z) = f(g(z)) mod z^(N+1), by Horner's scheme in g.
Jet compose(const Jet& f, const Jet& g);

/// Compositional inverse: compose(f, invert(f)) = id = compose(invert(f), f).
/// Triangular back-substitution against the precomputed powers of f; the
/// coefficient-k equation is linear in the unknown with slope a1^k.
Jet invert(const Jet& f);

/// f composed with itself m times; iterate(f, 0) = id.
Jet iterate(const Jet& f, int m);

/// True iff iterate(f, m) = id mod z^(N+1). The brute-force oracle behind
/// every finite-order claim.
bool is_identity_iterate(const Jet& f, int m);

/// Drops coefficients above M (1 <= M <= N); the result has truncation M.
Jet truncate(const Jet& f, int M);

/// Exact coefficientwise equality. Mixed contexts or truncations are an
/// error, not a miss.
bool equals(const Jet& p, const Jet& q);

inline bool operator==(const Jet& p, const Jet& q) { return equals(p, q); }
inline bool operator!=(const Jet& p, const Jet& q) { return !equals(p, q); }

} // namespace fps
