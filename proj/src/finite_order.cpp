#include "fps/finite_order.hpp"

#include "fps/error.hpp"

#include <string>
#include <vector>

namespace fps {

namespace {

// f*, together with the order it was computed from so callers do not
// re-derive it. Computes the iterates once: the order witness and the
// averaged sum come from the same sweep.
std::pair<Jet, int> star_with_order(const Jet& f) {
    if (!f.is_group_element()) throw domain_error("f* requires a1 != 0");
    const std::optional<int> m = multiplicative_order(f.lead());
    if (!m) throw domain_error("f* requires a series of finite compositional order");
    const int n = *m;
    const int trunc = f.truncation();
    const FieldContextPtr& ctx = f.context();
    const FieldElement w = f.lead();

    std::vector<FieldElement> acc(static_cast<std::size_t>(trunc), ctx->zero());
    std::vector<FieldElement> wpow;
    wpow.reserve(n);
    wpow.push_back(ctx->one());
    for (int i = 1; i < n; ++i) wpow.push_back(wpow.back() * w);

    Jet it = f;
    for (int j = 1; j <= n; ++j) {
        if (j > 1) it = compose(f, it);
        const FieldElement& c = wpow[(n - j) % n];
        for (int k = 1; k <= trunc; ++k) acc[k - 1].add_mul(c, it.a(k));
    }
    if (it != identity(ctx, trunc))
        throw domain_error("f* requires a series of finite compositional order");
    const FieldElement scale = ctx->from_rational(Rational(1, n));
    for (FieldElement& c : acc) c = c * scale;
    return {Jet(ctx, std::move(acc)), n};
}

} // namespace

OrderResult compositional_order(const Jet& f) {
    if (!f.is_group_element())
        throw domain_error("compositional order requires a1 != 0");
    std::optional<int> m = multiplicative_order(f.lead());
    if (!m) return {OrderResult::Kind::infinite, std::nullopt, std::nullopt};
    if (is_identity_iterate(f, *m)) return {OrderResult::Kind::finite, *m, *m};
    return {OrderResult::Kind::infinite_up_to_truncation, std::nullopt, *m};
}

Jet star(const Jet& f) {
    return star_with_order(f).first;
}

std::pair<Jet, FieldElement> linearize_finite(const Jet& f) {
    auto [s, n] = star_with_order(f);
    const FieldElement w = f.lead();
    if (compose(s, f) != compose(linear(f.context(), w, f.truncation()), s))
        throw internal_error("intertwining identity f* o f = l_w o f* failed");
    return {std::move(s), w};
}

bool in_centralizer(const Jet& h, int n) {
    if (n < 1) throw domain_error("in_centralizer requires n >= 1");
    for (int k = 2; k <= h.truncation(); ++k)
        if ((k - 1) % n != 0 && !h.a(k).is_zero()) return false;
    return true;
}

bool ConjugatorFamily::contains(const Jet& g) const {
    return in_centralizer(compose(g, invert(base)), modulus);
}

ConjugatorFamily conjugators(const Jet& f) {
    auto [s, n] = star_with_order(f);
    return {std::move(s), n};
}

Jet complete_conjugator(const Jet& f, const std::map<int, FieldElement>& prescribed, int N) {
    if (N < 1 || N > f.truncation())
        throw domain_error("completion order must satisfy 1 <= N <= truncation of f");
    auto [s, n] = star_with_order(N == f.truncation() ? f : truncate(f, N));
    const FieldContextPtr& ctx = f.context();

    for (const auto& [k, v] : prescribed) {
        (void)v;
        if (k < 1 || k > N || (k - 1) % n != 0)
            throw domain_error("prescribed coefficient index " + std::to_string(k) +
                               " is not of the form n*j+1 within the truncation order");
    }
    for (int k = 1; k <= N; k += n)
        if (!prescribed.count(k))
            throw domain_error("missing prescribed coefficient at index " + std::to_string(k));
    if (prescribed.at(1).is_zero())
        throw domain_error("prescribed g_1 must be nonzero");

    // Powers (f*)^j for j = 1 (mod n); powers_k[j][k] = [z^k] (f*)^j.
    std::vector<std::vector<FieldElement>> spow;
    {
        std::vector<FieldElement> cur(static_cast<std::size_t>(N) + 1, ctx->zero());
        for (int k = 1; k <= N; ++k) cur[k] = s.a(k);
        Jet sn = s; // multiplicative power (f*)^n
        for (int i = 2; i <= n; ++i) sn = multiply(sn, s);
        spow.push_back(cur);
        for (int j = 1 + n; j <= N; j += n) {
            std::vector<FieldElement> next(static_cast<std::size_t>(N) + 1, ctx->zero());
            for (int i = 0; i <= N; ++i) {
                if (spow.back()[i].is_zero()) continue;
                for (int m = 1; i + m <= N; ++m) next[i + m].add_mul(spow.back()[i], sn.a(m));
            }
            spow.push_back(std::move(next));
        }
    }

    // One increasing-k sweep solving g = h o f*: at k = 1 (mod n) the
    // unknown h_k enters with coefficient (b_1)^k = 1; elsewhere g_k is
    // read off from the already-known h coefficients.
    std::vector<FieldElement> h_known; // h_{1}, h_{n+1}, ... in order
    std::vector<FieldElement> g(static_cast<std::size_t>(N), ctx->zero());
    for (int k = 1; k <= N; ++k) {
        FieldElement sum = ctx->zero();
        for (std::size_t t = 0; t < h_known.size(); ++t) {
            const int j = 1 + static_cast<int>(t) * n;
            if (j >= k) break;
            sum.add_mul(h_known[t], spow[t][k]);
        }
        if ((k - 1) % n == 0) {
            h_known.push_back(prescribed.at(k) - sum);
            g[k - 1] = prescribed.at(k);
        } else {
            g[k - 1] = sum;
        }
    }
    return Jet(ctx, std::move(g));
}

} // namespace fps
