#include "fps/field.hpp"

#include "fps/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fps {

namespace {

// ---- integer polynomial helpers (lowest degree first) ----

// Exact division by a monic divisor; the remainder must vanish.
std::vector<Integer> div_exact_monic(std::vector<Integer> dividend,
                                     const std::vector<Integer>& divisor) {
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int dn = static_cast<int>(dividend.size()) - 1;
    if (dn < dd) throw internal_error("cyclotomic division underflow");
    std::vector<Integer> quotient(dn - dd + 1);
    for (int i = dn - dd; i >= 0; --i) {
        Integer c = dividend[i + dd];
        if (sgn(c) == 0) continue;
        quotient[i] = c;
        for (int j = 0; j <= dd; ++j) dividend[i + j] -= c * divisor[j];
    }
    for (const Integer& c : dividend)
        if (sgn(c) != 0) throw internal_error("cyclotomic division left a remainder");
    return quotient;
}

std::vector<int> divisors_of(long n) {
    std::vector<int> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.push_back(static_cast<int>(d));
        if (d != n / d) ds.push_back(static_cast<int>(n / d));
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// ---- rational polynomial helpers for the extended Euclid in inv() ----

using RPoly = std::vector<Rational>;

int rdeg(const RPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0) return i;
    return -1;
}

// (quotient, remainder) of a by b, b nonzero.
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
    const int db = rdeg(b);
    RPoly q(a.size());
    for (int i = rdeg(a); i >= db; i = rdeg(a)) {
        Rational c = a[i] / b[db];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return {std::move(q), std::move(a)};
}

RPoly rsub_mul(RPoly a, const RPoly& q, const RPoly& b) {
    // a - q*b
    const int dq = rdeg(q), db = rdeg(b);
    if (dq >= 0 && db >= 0) {
        if (static_cast<int>(a.size()) < dq + db + 1) a.resize(dq + db + 1);
        for (int i = 0; i <= dq; ++i) {
            if (sgn(q[i]) == 0) continue;
            for (int j = 0; j <= db; ++j) a[i + j] -= q[i] * b[j];
        }
    }
    return a;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw domain_error("cyclotomic_polynomial requires n >= 1");
    std::map<int, std::vector<Integer>> memo;
    for (int d : divisors_of(n)) {
        std::vector<Integer> p(d + 1);
        p[0] = -1;
        p[d] = 1;
        for (int e : divisors_of(d))
            if (e != d) p = div_exact_monic(std::move(p), memo.at(e));
        memo.emplace(d, std::move(p));
    }
    return memo.at(n);
}

FieldContext::FieldContext(FieldKind kind, int n, std::vector<Integer> phi)
    : kind_(kind), n_(n), degree_(static_cast<int>(phi.size()) - 1), phi_(std::move(phi)) {}

FieldContextPtr FieldContext::make_rational() {
    return FieldContextPtr(new FieldContext(FieldKind::rational, 1, cyclotomic_polynomial(1)));
}

FieldContextPtr FieldContext::make_cyclotomic(int n) {
    if (n < 1) throw domain_error("cyclotomic index must be >= 1");
    return FieldContextPtr(new FieldContext(FieldKind::cyclotomic, n, cyclotomic_polynomial(n)));
}

FieldContextPtr make_field(FieldKind kind, int n) {
    if (kind == FieldKind::rational) {
        if (n != 1) throw domain_error("rational field has no cyclotomic index");
        return FieldContext::make_rational();
    }
    return FieldContext::make_cyclotomic(n);
}

bool same_field(const FieldContext& a, const FieldContext& b) noexcept {
    return a.kind() == b.kind() && a.cyclotomic_index() == b.cyclotomic_index();
}

FieldElement FieldContext::zero() const {
    return FieldElement(shared_from_this(), std::vector<Rational>(degree_));
}

FieldElement FieldContext::one() const {
    std::vector<Rational> c(degree_);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::zeta() const {
    std::vector<Rational> c(degree_);
    if (degree_ >= 2) {
        c[1] = 1;
    } else {
        // x mod a linear Phi_n: x = -phi[0] (n = 1 gives 1, n = 2 gives -1)
        c[0] = Rational(-phi_[0]);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::from_rational(Rational q) const {
    std::vector<Rational> c(degree_);
    c[0] = std::move(q);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::from_integer(long v) const {
    return from_rational(Rational(v));
}

FieldElement FieldContext::element(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != degree_)
        throw domain_error("coordinate vector length does not match field degree");
    return FieldElement(shared_from_this(), std::move(coords));
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(*a.context(), *b.context()))
        throw domain_error("field context mismatch");
}

} // namespace

bool FieldElement::is_zero() const noexcept {
    for (const Rational& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool FieldElement::is_one() const noexcept {
    if (coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (Rational& c : r.coords_) c = -c;
    return r;
}

namespace {

// acc += a * b without gmpxx temporaries; the scratch value keeps its
// limbs across calls.
inline void fused_add_mul(Rational& acc, const Rational& a, const Rational& b) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

// In-place reduction of a wide coordinate vector mod Phi_n (monic, so
// x^d = -sum_{j<d} phi_j x^j needs no division).
void reduce_mod_phi(std::vector<Rational>& buf, const FieldContext& ctx,
                    int width = -1) {
    const int d = ctx.degree();
    const std::vector<Integer>& phi = ctx.modulus();
    thread_local Rational tmp;
    if (width < 0) width = static_cast<int>(buf.size());
    for (int i = width - 1; i >= d; --i) {
        if (sgn(buf[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(phi[j]) == 0) continue;
            mpq_set_z(tmp.get_mpq_t(), phi[j].get_mpz_t());
            mpq_mul(tmp.get_mpq_t(), tmp.get_mpq_t(), buf[i].get_mpq_t());
            mpq_sub(buf[i - d + j].get_mpq_t(), buf[i - d + j].get_mpq_t(), tmp.get_mpq_t());
        }
        buf[i] = 0;
    }
}

} // namespace

FieldElement& FieldElement::add_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(*this, a);
    require_same_field(*this, b);
    const int d = ctx_->degree();
    if (d == 1) {
        fused_add_mul(coords_[0], a.coords_[0], b.coords_[0]);
        return *this;
    }
    // Convolve into a reused scratch buffer, reduce mod Phi_n, accumulate.
    thread_local std::vector<Rational> buf;
    const int m = 2 * d - 1;
    if (static_cast<int>(buf.size()) < m) buf.resize(m);
    for (int i = 0; i < m; ++i) buf[i] = 0;
    for (int i = 0; i < d; ++i) {
        if (sgn(a.coords_[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.coords_[j]) == 0) continue;
            fused_add_mul(buf[i + j], a.coords_[i], b.coords_[j]);
        }
    }
    reduce_mod_phi(buf, *ctx_, m);
    for (int j = 0; j < d; ++j) coords_[j] += buf[j];
    return *this;
}

void WideAccumulator::attach(const FieldContextPtr& ctx) {
    ctx_ = ctx;
    const std::size_t width = static_cast<std::size_t>(2 * ctx->degree() - 1);
    if (slots_.size() < width) slots_.resize(width);
    for (Rational& s : slots_) s = 0;
}

void WideAccumulator::add_product(const FieldElement& a, const FieldElement& b) {
    const int d = ctx_->degree();
    if (d == 1) {
        fused_add_mul(slots_[0], a.coords()[0], b.coords()[0]);
        return;
    }
    for (int i = 0; i < d; ++i) {
        if (sgn(a.coords()[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.coords()[j]) == 0) continue;
            fused_add_mul(slots_[i + j], a.coords()[i], b.coords()[j]);
        }
    }
}

FieldElement WideAccumulator::take() {
    const int d = ctx_->degree();
    if (d > 1) reduce_mod_phi(slots_, *ctx_, 2 * d - 1);
    std::vector<Rational> coords(slots_.begin(), slots_.begin() + d);
    for (int i = 0; i < d; ++i) slots_[i] = 0;
    return ctx_->element(std::move(coords));
}

FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs) {
    FieldElement r = lhs.context()->zero();
    r.add_mul(lhs, rhs);
    return r;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
    require_same_field(lhs, rhs);
    return lhs.coords() == rhs.coords();
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw domain_error("division by zero in coefficient field");
    const FieldContextPtr& ctx = a.context();
    const int d = ctx->degree();
    if (d == 1) return ctx->from_rational(1 / a.coords()[0]);

    RPoly r0 = a.coords();
    RPoly r1(ctx->modulus().size());
    for (std::size_t i = 0; i < r1.size(); ++i) r1[i] = Rational(ctx->modulus()[i]);
    RPoly s0{Rational(1)}, s1{Rational(0)};
    while (rdeg(r1) >= 0) {
        auto [q, rem] = rdivmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RPoly next = rsub_mul(std::move(s0), q, s1);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (rdeg(r0) != 0 || rdeg(s0) >= d)
        throw internal_error("nonzero element has no inverse mod an irreducible modulus");
    std::vector<Rational> coords(d);
    for (int i = 0; i <= rdeg(s0); ++i) coords[i] = s0[i] / r0[0];
    return ctx->element(std::move(coords));
}

FieldElement pow(const FieldElement& a, long e) {
    if (e < 0) return pow(inv(a), -e);
    FieldElement result = a.context()->one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<int> multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw domain_error("multiplicative order of zero");
    const long bound =
        a.context()->kind() == FieldKind::cyclotomic ? 2L * a.context()->cyclotomic_index() : 2L;
    FieldElement p = a;
    for (long m = 1; m <= bound; ++m) {
        if (bound % m == 0 && p.is_one()) return static_cast<int>(m);
        if (m < bound) p = p * a;
    }
    return std::nullopt;
}

bool is_primitive_root(const FieldElement& a, int n) {
    if (n < 1) throw domain_error("is_primitive_root requires n >= 1");
    if (a.is_zero()) return false;
    return multiplicative_order(a) == n;
}

} // namespace fps
