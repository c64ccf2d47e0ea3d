#include "fps/construct.hpp"

#include "fps/error.hpp"

#include <string>
#include <utility>

namespace fps {

namespace {

Jet prefix_jet(const FieldContextPtr& ctx, const std::vector<FieldElement>& coeffs, int upto) {
    return Jet(ctx, std::vector<FieldElement>(coeffs.begin(), coeffs.begin() + upto));
}

std::vector<FieldElement> multiplier_powers(const FieldElement& w, int upto) {
    std::vector<FieldElement> p;
    p.reserve(upto + 1);
    p.push_back(w.context()->one());
    for (int i = 1; i <= upto; ++i) p.push_back(p.back() * w);
    return p;
}

} // namespace

FreeCoefficientSpec FreeCoefficientSpec::make(int n, FieldElement omega, int N,
                                              std::map<int, FieldElement> partial) {
    FreeCoefficientSpec spec{n, std::move(omega), N, std::move(partial)};
    const FieldContextPtr& ctx = spec.omega.context();
    for (const auto& [k, v] : spec.free) {
        (void)v;
        if (k < 2 || k > N || (k - 1) % n == 0)
            throw domain_error("free coefficient index " + std::to_string(k) +
                               " is forced or out of range");
    }
    for (int k = 2; k <= N; ++k)
        if ((k - 1) % n != 0 && !spec.free.count(k)) spec.free.emplace(k, ctx->zero());
    spec.validate();
    return spec;
}

void FreeCoefficientSpec::validate() const {
    if (N < 1) throw domain_error("truncation order must be >= 1");
    if (n < 1) throw domain_error("order must be >= 1");
    if (!is_primitive_root(omega, n))
        throw domain_error("omega is not a primitive root of unity of order n");
    for (int k = 2; k <= N; ++k) {
        const bool forced = (k - 1) % n == 0;
        if (forced && free.count(k))
            throw domain_error("free coefficient given at forced index " + std::to_string(k));
        if (!forced && !free.count(k))
            throw domain_error("missing free coefficient at index " + std::to_string(k));
    }
    for (const auto& [k, v] : free) {
        if (k < 2 || k > N)
            throw domain_error("free coefficient index " + std::to_string(k) + " out of range");
        if (!same_field(*v.context(), *omega.context()))
            throw domain_error("free coefficient field context mismatch");
    }
}

std::pair<FieldElement, FieldElement> forced_coefficient(const Jet& prefix, int k, int n) {
    if (k < 2 || (k - 1) % n != 0)
        throw domain_error("forced coefficient index must satisfy k = 1 (mod n), k > 1");
    if (prefix.truncation() < k - 1)
        throw domain_error("prefix does not determine coefficients below " + std::to_string(k));
    const FieldContextPtr& ctx = prefix.context();
    const FieldElement w = prefix.lead();
    if (!is_primitive_root(w, n))
        throw domain_error("prefix lead coefficient is not a primitive root of order n");

    // [z^k] f^(n) is affine in a_k with slope n*w^(n-1) when k = 1 (mod n);
    // evaluating at a_k = 0 isolates P^(n)_k.
    std::vector<FieldElement> c(static_cast<std::size_t>(k), ctx->zero());
    for (int i = 1; i < k; ++i) c[i - 1] = prefix.a(i);
    const FieldElement p = iterate(Jet(ctx, std::move(c)), n).a(k);
    const FieldElement a = ctx->from_rational(Rational(-1, n)) * w * p;
    return {a, p};
}

ConstructionRecord build_unique(const FreeCoefficientSpec& spec) {
    spec.validate();
    const FieldContextPtr& ctx = spec.omega.context();
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(spec.N), ctx->zero());
    coeffs[0] = spec.omega;
    std::map<int, FieldElement> forced, p_values;
    for (int k = 2; k <= spec.N; ++k) {
        if ((k - 1) % spec.n == 0) {
            auto [a, p] = forced_coefficient(prefix_jet(ctx, coeffs, k - 1), k, spec.n);
            coeffs[k - 1] = a;
            forced.emplace(k, std::move(a));
            p_values.emplace(k, std::move(p));
        } else {
            coeffs[k - 1] = spec.free.at(k);
        }
    }
    Jet series(ctx, std::move(coeffs));
    if (!is_identity_iterate(series, spec.n))
        throw internal_error("unique construction did not produce a series of order n");
    return {std::move(series), std::move(forced), std::move(p_values), std::nullopt};
}

ConstructionRecord build_existence(const FreeCoefficientSpec& spec,
                                   const std::map<int, FieldElement>& free_h) {
    spec.validate();
    const FieldContextPtr& ctx = spec.omega.context();
    const FieldElement& w = spec.omega;
    for (const auto& [k, v] : free_h) {
        if (k < 2 || k > spec.N || (k - 1) % spec.n != 0)
            throw domain_error("free helper coefficient index " + std::to_string(k) +
                               " is not of the form n*j+1 within range");
        if (!same_field(*v.context(), *ctx))
            throw domain_error("free helper coefficient field context mismatch");
    }

    const std::vector<FieldElement> wpow = multiplier_powers(w, spec.N);
    std::vector<FieldElement> f(static_cast<std::size_t>(spec.N), ctx->zero());
    std::vector<FieldElement> h(static_cast<std::size_t>(spec.N), ctx->zero());
    f[0] = w;
    h[0] = ctx->one();
    std::map<int, FieldElement> forced, p_values;
    // w^(-1) = w^(n-1); used to recover P^(n)_k = -(n/w) a_k.
    const FieldElement w_inverse = spec.n == 1 ? ctx->one() : wpow[spec.n - 1];

    for (int k = 2; k <= spec.N; ++k) {
        const bool forced_index = (k - 1) % spec.n == 0;
        if (!forced_index) f[k - 1] = spec.free.at(k);
        // Residual of h o f = l_w o h at z^k with the unknowns zeroed:
        // equals a_k + Q_k at a free index, Q_k at a forced one.
        const FieldElement residual =
            compose(prefix_jet(ctx, h, k), prefix_jet(ctx, f, k)).a(k);
        if (forced_index) {
            FieldElement a = -residual;
            f[k - 1] = a;
            p_values.emplace(k, ctx->from_integer(-spec.n) * a * w_inverse);
            forced.emplace(k, std::move(a));
            if (auto it = free_h.find(k); it != free_h.end()) h[k - 1] = it->second;
        } else {
            h[k - 1] = residual * inv(w - wpow[k]);
        }
    }

    Jet series(ctx, std::move(f));
    Jet helper(ctx, std::move(h));
    const Jet conjugated =
        compose(invert(helper), compose(linear(ctx, w, spec.N), helper));
    if (conjugated != series)
        throw internal_error("existence construction does not satisfy invert(h) o l_w o h = f");
    return {std::move(series), std::move(forced), std::move(p_values), std::move(helper)};
}

Jet schroder_linearize(const Jet& f) {
    if (!f.is_group_element()) throw domain_error("schroder_linearize requires a1 != 0");
    const FieldElement w = f.lead();
    if (multiplicative_order(w))
        throw domain_error(
            "multiplier is a root of unity; use linearize_finite or normal_form");
    const FieldContextPtr& ctx = f.context();
    const int N = f.truncation();
    const std::vector<FieldElement> wpow = multiplier_powers(w, N);

    std::vector<FieldElement> h(static_cast<std::size_t>(N), ctx->zero());
    h[0] = ctx->one();
    for (int k = 2; k <= N; ++k) {
        const FieldElement residual = compose(prefix_jet(ctx, h, k), truncate(f, k)).a(k);
        h[k - 1] = residual * inv(w - wpow[k]);
    }
    Jet result(ctx, std::move(h));
    if (compose(result, f) != compose(linear(ctx, w, N), result))
        throw internal_error("Schroder recursion violated its defining equation");
    return result;
}

std::pair<Jet, Jet> normal_form(const Jet& f) {
    if (!f.is_group_element()) throw domain_error("normal_form requires a1 != 0");
    const FieldElement w = f.lead();
    std::optional<int> n = multiplicative_order(w);
    if (!n)
        throw domain_error("multiplier has infinite order; use schroder_linearize");
    const FieldContextPtr& ctx = f.context();
    const int N = f.truncation();
    const std::vector<FieldElement> wpow = multiplier_powers(w, N);

    std::vector<FieldElement> c(static_cast<std::size_t>(N), ctx->zero());
    std::vector<FieldElement> g(static_cast<std::size_t>(N), ctx->zero());
    c[0] = ctx->one();
    g[0] = w;
    // c o f = g o c coefficient by coefficient; at k != 1 (mod n) the
    // conjugator absorbs the residual, elsewhere it lands in g.
    for (int k = 2; k <= N; ++k) {
        const FieldElement lhs = compose(prefix_jet(ctx, c, k), truncate(f, k)).a(k);
        const FieldElement rhs = compose(prefix_jet(ctx, g, k), prefix_jet(ctx, c, k)).a(k);
        if ((k - 1) % *n == 0)
            g[k - 1] = lhs - rhs;
        else
            c[k - 1] = (lhs - rhs) * inv(w - wpow[k]);
    }
    Jet normal(ctx, std::move(g));
    Jet conjugator(ctx, std::move(c));
    if (normal != compose(compose(conjugator, f), invert(conjugator)))
        throw internal_error("normal form does not satisfy g = c o f o invert(c)");
    return {std::move(normal), std::move(conjugator)};
}

bool stanley_involution_check(const Jet& f) {
    const Jet neg = linear(f.context(), -f.context()->one(), f.truncation());
    return compose(f, compose(neg, compose(f, neg))) ==
           identity(f.context(), f.truncation());
}

Jet stanley_build(const Jet& g) {
    if (!g.lead().is_one()) throw domain_error("stanley_build requires g_1 = 1");
    const Jet neg = linear(g.context(), -g.context()->one(), g.truncation());
    return compose(invert(g), compose(neg, compose(g, neg)));
}

GrowthReport growth_report(const FreeCoefficientSpec& spec, double bound) {
    if (spec.omega.context()->kind() != FieldKind::rational)
        throw domain_error("growth_report requires the rational field");
    if (spec.n != 2 || spec.omega != spec.omega.context()->from_integer(-1))
        throw domain_error("growth_report requires n = 2 and omega = -1");
    GrowthReport report{build_unique(spec), {}, bound, false};
    for (int k = 2; k <= spec.N; ++k) {
        const double r = root_magnitude(report.record.series.a(k).coords()[0], k);
        report.roots.push_back(r);
        if (r > bound) report.exceeded = true;
    }
    return report;
}

} // namespace fps
