#pragma once

#include "fps/jet.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fps {

/// The given data of an order-n construction: a primitive n-th root of
/// unity as lead coefficient and one free coefficient for every index
/// 2 <= k <= N with k != 1 (mod n). The indices k = n*j+1 are forced.
struct FreeCoefficientSpec {
    int n;
    FieldElement omega;
    int N;
    std::map<int, FieldElement> free;

    /// Fills unspecified free indices with 0 and validates the result.
    static FreeCoefficientSpec make(int n, FieldElement omega, int N,
                                    std::map<int, FieldElement> partial = {});

    /// Throws domain_error if omega is not primitive of order n or the
    /// free map does not cover exactly the non-forced indices.
    void validate() const;
};

/// Output of an order-n build: the series, the coefficients that were
/// forced, the evaluated P^(n)_k values behind them, and (for the
/// existence route) the helper h with h o f = l_w o h.
struct ConstructionRecord {
    Jet series;
    std::map<int, FieldElement> forced;
    std::map<int, FieldElement> p_values;
    std::optional<Jet> helper;
};

/// The unique value of a_k making [z^k] f^(n) vanish, given all lower
/// coefficients. k must be = 1 (mod n), k > 1, and the prefix lead must
/// be a primitive n-th root of unity. Returns (a_k, P^(n)_k) where
/// a_k = -(w/n) * P^(n)_k and P^(n)_k is evaluated as [z^k] f^(n) with
/// a_k set to 0.
std::pair<FieldElement, FieldElement> forced_coefficient(const Jet& prefix, int k, int n);

/// Direct route: one increasing-k sweep copying free coefficients and
/// forcing the rest via forced_coefficient.
ConstructionRecord build_unique(const FreeCoefficientSpec& spec);

/// Conjugation route: builds h and f simultaneously so that
/// h o f = l_w o h. At k != 1 (mod n), h_k = (a_k + Q_k)/(w - w^k); at
/// k = 1 (mod n), a_k = -Q_k and h_k is chosen freely (default 0).
/// Produces the same series as build_unique for the same spec; the two
/// sweeps share no code, which makes their agreement a strong check.
ConstructionRecord build_existence(const FreeCoefficientSpec& spec,
                                   const std::map<int, FieldElement>& free_h = {});

/// Solves Schroder's equation for an infinite-order multiplier: returns
/// h with h_1 = 1 and h o f o invert(h) = l_{a1}. Rejects any a1 that is
/// a root of unity (including a1 = 1).
Jet schroder_linearize(const Jet& f);

/// Muckenhoupt normal form for a torsion multiplier of order n: returns
/// (g, c) with g = c o f o invert(c) and g supported on exponents
/// k = 1 (mod n). Finite-order inputs come out as exactly l_w.
std::pair<Jet, Jet> normal_form(const Jet& f);

/// True iff f(-f(-z)) = z mod z^(N+1).
bool stanley_involution_check(const Jet& f);

/// Builds f = invert(g)(-g(-z)) from any g with g_1 = 1; every built f
/// passes stanley_involution_check.
Jet stanley_build(const Jet& g);

/// Coefficient growth of an order-two build, for display: exact build,
/// double-precision root magnitudes |a_k|^(1/k) for k = 2..N.
struct GrowthReport {
    ConstructionRecord record;
    std::vector<double> roots; // roots[i] corresponds to k = i + 2
    double bound;
    bool exceeded;
};

/// Requires a rational-field spec with n = 2, omega = -1.
GrowthReport growth_report(const FreeCoefficientSpec& spec, double bound);

} // namespace fps
