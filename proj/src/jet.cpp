#include "fps/jet.hpp"

#include "fps/error.hpp"

#include <optional>
#include <utility>

namespace fps {

namespace {

// Dense polynomial with a constant slot: p[i] is the coefficient of z^i,
// 0 <= i <= N. Horner intermediates need the constant slot; jets never
// have one.
using Poly = std::vector<FieldElement>;

Poly zero_poly(const FieldContextPtr& ctx, int n) {
    return Poly(static_cast<std::size_t>(n) + 1, ctx->zero());
}

Poly jet_poly(const Jet& f) {
    Poly p;
    p.reserve(f.truncation() + 1);
    p.push_back(f.context()->zero());
    for (const FieldElement& c : f.coeffs()) p.push_back(c);
    return p;
}

// r = p * q truncated at N; q must have a zero constant slot. Products
// are summed unreduced per output coefficient and reduced once, in
// thread-local accumulators that keep their allocations across calls.
Poly mul_trunc(const Poly& p, const Poly& q, int n, const FieldContextPtr& ctx) {
    thread_local std::vector<WideAccumulator> acc;
    if (static_cast<int>(acc.size()) < n + 1) acc.resize(n + 1);
    for (int k = 0; k <= n; ++k) acc[k].attach(ctx);
    for (int i = 0; i <= n; ++i) {
        if (p[i].is_zero()) continue;
        for (int j = 1; i + j <= n; ++j) {
            if (q[j].is_zero()) continue;
            acc[i + j].add_product(p[i], q[j]);
        }
    }
    Poly r;
    r.reserve(n + 1);
    for (int k = 0; k <= n; ++k) r.push_back(acc[k].take());
    return r;
}

void require_compatible(const Jet& p, const Jet& q) {
    if (!same_field(*p.context(), *q.context()))
        throw domain_error("jet field context mismatch");
    if (p.truncation() != q.truncation())
        throw domain_error("jet truncation order mismatch");
}

Jet from_poly(const FieldContextPtr& ctx, Poly p) {
    p.erase(p.begin());
    return Jet(ctx, std::move(p));
}

} // namespace

Jet::Jet(FieldContextPtr ctx, int truncation) : ctx_(std::move(ctx)) {
    if (truncation < 1) throw domain_error("jet truncation order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(truncation), ctx_->zero());
}

Jet::Jet(FieldContextPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("jet truncation order must be >= 1");
    for (const FieldElement& c : coeffs_)
        if (!same_field(*c.context(), *ctx_))
            throw domain_error("jet coefficient from a different field context");
}

const FieldElement& Jet::a(int k) const {
    if (k < 1 || k > truncation()) throw domain_error("jet coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k) - 1];
}

bool Jet::is_zero() const {
    for (const FieldElement& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Jet identity(const FieldContextPtr& ctx, int truncation) {
    return linear(ctx, ctx->one(), truncation);
}

Jet linear(const FieldContextPtr& ctx, const FieldElement& w, int truncation) {
    if (w.is_zero()) throw domain_error("linear jet requires a nonzero multiplier");
    Jet r(ctx, truncation);
    std::vector<FieldElement> c = r.coeffs();
    c[0] = w;
    return Jet(ctx, std::move(c));
}

Jet multiply(const Jet& p, const Jet& q) {
    require_compatible(p, q);
    return from_poly(p.context(), mul_trunc(jet_poly(p), jet_poly(q), p.truncation(), p.context()));
}

Jet compose(const Jet& f, const Jet& g) {
    require_compatible(f, g);
    const int n = f.truncation();
    const FieldContextPtr& ctx = f.context();
    int top = n;
    while (top >= 1 && f.a(top).is_zero()) --top;
    if (top == 0) return Jet(ctx, n);

    const Poly gp = jet_poly(g);
    Poly r = zero_poly(ctx, n);
    r[0] = f.a(top);
    for (int k = top - 1; k >= 0; --k) {
        r = mul_trunc(r, gp, n, ctx);
        if (k >= 1) r[0] += f.a(k);
    }
    return from_poly(ctx, std::move(r));
}

Jet invert(const Jet& f) {
    if (!f.is_group_element())
        throw domain_error("compositional inverse requires a1 != 0");
    const int n = f.truncation();
    const FieldContextPtr& ctx = f.context();

    // powers[j][k] = coefficient of z^k in f^(j+1)
    std::vector<Poly> powers;
    powers.reserve(n);
    powers.push_back(jet_poly(f));
    for (int j = 2; j <= n; ++j)
        powers.push_back(mul_trunc(powers.back(), powers.front(), n, ctx));

    // Solve g(f(z)) = z for g, coefficient by coefficient; the z^k
    // equation is g_k * a1^k + sum_{j<k} g_j * [z^k] f^j = [k == 1].
    const FieldElement inv_lead = inv(f.lead());
    FieldElement lead_power = ctx->one();
    std::vector<FieldElement> g;
    g.reserve(n);
    for (int k = 1; k <= n; ++k) {
        lead_power = lead_power * inv_lead;
        FieldElement acc = k == 1 ? ctx->one() : ctx->zero();
        for (int j = 1; j < k; ++j) acc -= g[j - 1] * powers[j - 1][k];
        g.push_back(acc * lead_power);
    }
    return Jet(ctx, std::move(g));
}

Jet iterate(const Jet& f, int m) {
    if (m < 0) throw domain_error("iterate requires m >= 0");
    if (m == 0) return identity(f.context(), f.truncation());
    // binary powering under composition; agrees with the recurrence
    // f^(m) = f o f^(m-1) by associativity mod z^(N+1)
    std::optional<Jet> result;
    Jet base = f;
    for (;;) {
        if (m & 1) result = result ? compose(base, *result) : base;
        m >>= 1;
        if (m == 0) break;
        base = compose(base, base);
    }
    return *result;
}

bool is_identity_iterate(const Jet& f, int m) {
    if (m < 1) throw domain_error("is_identity_iterate requires m >= 1");
    return iterate(f, m) == identity(f.context(), f.truncation());
}

Jet truncate(const Jet& f, int m) {
    if (m < 1 || m > f.truncation())
        throw domain_error("truncation target out of range");
    std::vector<FieldElement> c(f.coeffs().begin(), f.coeffs().begin() + m);
    return Jet(f.context(), std::move(c));
}

bool equals(const Jet& p, const Jet& q) {
    require_compatible(p, q);
    for (int k = 1; k <= p.truncation(); ++k)
        if (p.a(k) != q.a(k)) return false;
    return true;
}

} // namespace fps
