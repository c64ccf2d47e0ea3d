#pragma once

#include "fps/jet.hpp"

#include <map>
#include <optional>
#include <utility>

namespace fps {

/// Outcome of the compositional-order computation at truncation N.
///
/// finite: f^(order) = id mod z^(N+1), and order equals the
///   multiplicative order of a1.
/// infinite: a1 is not a root of unity, so no iterate can be id.
/// infinite_up_to_truncation: a1 is a root of unity of order m but
///   f^(m) != id at this N, which rules out finite order for every
///   series extending this jet.
struct OrderResult {
    enum class Kind { finite, infinite, infinite_up_to_truncation };

    Kind kind;
    std::optional<int> order;            // set iff kind == finite
    std::optional<int> multiplier_order; // multiplicative order of a1, when it exists

    bool is_finite() const noexcept { return kind == Kind::finite; }
};

OrderResult compositional_order(const Jet& f);

/// The averaged conjugator f* = (1/n) * sum_{j=1..n} w^(n-j) f^(j) of a
/// finite-order f. Has lead coefficient 1 and conjugates f to its linear
/// term.
Jet star(const Jet& f);

/// Returns (f*, a1) with compose(compose(f*, f), invert(f*)) = l_{a1}.
/// The intertwining identity f* o f = l_w o f* is checked internally and
/// its failure is an internal error.
std::pair<Jet, FieldElement> linearize_finite(const Jet& f);

/// Membership in the centralizer of l_w for w primitive of order n:
/// h commutes with l_w iff h is supported on exponents k = 1 (mod n).
bool in_centralizer(const Jet& h, int n);

/// All elements conjugating a fixed finite-order f to l_w: exactly the
/// products h o base with h supported on exponents = 1 (mod modulus).
struct ConjugatorFamily {
    Jet base;    // f*
    int modulus; // n

    /// True iff g o f o invert(g) = l_w, tested via compose(g, invert(base)).
    bool contains(const Jet& g) const;
};

ConjugatorFamily conjugators(const Jet& f);

/// The unique g with g o f o invert(g) = l_w whose coefficients at the
/// indices = 1 (mod n) equal the prescribed values. prescribed must cover
/// every index n*j+1 <= N and have prescribed[1] != 0.
Jet complete_conjugator(const Jet& f, const std::map<int, FieldElement>& prescribed, int N);

} // namespace fps
