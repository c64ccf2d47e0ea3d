#include "fps/rational.hpp"

#include "fps/error.hpp"

#include <cmath>

namespace fps {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

bool valid_signed_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return all_digits(s);
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_signed_integer(num) || !all_digits(den))
        throw parse_error("invalid rational literal: \"" + std::string(text) + "\"");
    Rational q(std::string(num) + "/" + std::string(den));
    if (sgn(q.get_den()) == 0)
        throw parse_error("zero denominator in rational literal: \"" + std::string(text) + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

double root_magnitude(const Rational& q, int k) {
    if (k < 1) throw domain_error("root_magnitude requires k >= 1");
    if (sgn(q) == 0) return 0.0;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    double log2q = (std::log2(std::fabs(mn)) + static_cast<double>(en)) -
                   (std::log2(std::fabs(md)) + static_cast<double>(ed));
    return std::exp2(log2q / static_cast<double>(k));
}

} // namespace fps
