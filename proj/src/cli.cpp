#include "fps/cli.hpp"

#include "fps/error.hpp"
#include "fps/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fps::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kParseError = 2;
constexpr int kDomainError = 3;
constexpr int kInternalError = 4;

std::string read_source(const std::string& src, std::istream& in) {
    if (src == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    if (!src.empty() && src.front() == '{') return src; // inline JSON
    std::ifstream file(src);
    if (!file) throw parse_error("cannot read input \"" + src + "\"");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_result(const std::string& text, const std::string& dst, std::ostream& out) {
    if (dst == "-") {
        out << text << "\n";
        return;
    }
    std::ofstream file(dst);
    if (!file) throw parse_error("cannot write output \"" + dst + "\"");
    file << text << "\n";
}

FieldContextPtr context_from_flag(const std::string& flag) {
    if (flag == "rational") return FieldContext::make_rational();
    if (flag.rfind("cyclotomic:", 0) == 0) {
        const std::string tail = flag.substr(11);
        for (char c : tail)
            if (c < '0' || c > '9') throw parse_error("invalid field flag \"" + flag + "\"");
        if (tail.empty()) throw parse_error("invalid field flag \"" + flag + "\"");
        return FieldContext::make_cyclotomic(std::stoi(tail));
    }
    throw parse_error("invalid field flag \"" + flag + "\" (use rational or cyclotomic:n)");
}

// Splits "2=-1,4=[\"0/1\",\"1/1\"]" at top-level commas only.
std::vector<std::string> split_assignments(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) items.push_back(cur);
    return items;
}

std::map<int, FieldElement> parse_assignments(const std::vector<std::string>& raw,
                                              const FieldContextPtr& ctx) {
    std::map<int, FieldElement> values;
    for (const std::string& chunk : raw) {
        for (const std::string& item : split_assignments(chunk)) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw parse_error("expected k=value, got \"" + item + "\"");
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(item.substr(0, eq), &used);
                if (used != eq) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw parse_error("invalid coefficient index in \"" + item + "\"");
            }
            if (!values.emplace(k, element_from_text(item.substr(eq + 1), ctx)).second)
                throw parse_error("duplicate assignment for index " + std::to_string(k));
        }
    }
    return values;
}

FieldElement default_omega(const FieldContextPtr& ctx, int n) {
    if (ctx->kind() == FieldKind::rational) {
        if (n == 1) return ctx->one();
        if (n == 2) return ctx->from_integer(-1);
        throw domain_error("the rational field has no root of unity of order " +
                           std::to_string(n) + "; use --field cyclotomic:" + std::to_string(n));
    }
    const int m = ctx->cyclotomic_index();
    if (m % n != 0)
        throw domain_error("Q(zeta_" + std::to_string(m) + ") has no primitive root of order " +
                           std::to_string(n));
    return pow(ctx->zeta(), m / n);
}

struct Output {
    std::string format = "json";
    std::string dst = "-";

    void jet(const Jet& f, std::ostream& out) const {
        write_result(format == "text" ? emit_series_text(f) : emit_series_json(f), dst, out);
    }
    void json(const Json& j, std::ostream& out) const {
        write_result(format == "text" ? j.dump(2) : j.dump(), dst, out);
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"exact arithmetic for formal power series under composition"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", output.dst, "output path or -");

    std::vector<std::string> inputs;
    std::vector<std::string> free_raw, free_h_raw;
    std::string field_flag, omega_text;
    int n_flag = 0, trunc_flag = 0, m_flag = 1, k_flag = 0;
    double bound = 1000.0;

    auto add_subcommand = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };
    auto add_inputs = [&](CLI::App* sub, int count) {
        sub->add_option("inputs", inputs, "series (path, -, or inline JSON)")
            ->expected(count);
        if (count == 1)
            sub->add_option("--in", inputs, "series input (alternative to the positional)");
    };
    auto add_order = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--order", n_flag, "compositional order n");
        if (required) opt->required();
    };

    CLI::App* compose_cmd = add_subcommand("compose", "f o g");
    add_inputs(compose_cmd, 2);
    CLI::App* invert_cmd = add_subcommand("invert", "compositional inverse");
    add_inputs(invert_cmd, 1);
    CLI::App* iterate_cmd = add_subcommand("iterate", "m-fold composition");
    add_inputs(iterate_cmd, 1);
    iterate_cmd->add_option("--m", m_flag, "iteration count")->required();
    CLI::App* order_cmd = add_subcommand("order", "compositional order");
    add_inputs(order_cmd, 1);
    CLI::App* star_cmd = add_subcommand("star", "averaged conjugator f*");
    add_inputs(star_cmd, 1);
    CLI::App* linearize_cmd =
        add_subcommand("linearize", "conjugate a finite-order series to its linear term");
    add_inputs(linearize_cmd, 1);
    CLI::App* centralizer_cmd =
        add_subcommand("centralizer", "membership in the centralizer of l_w");
    add_inputs(centralizer_cmd, 1);
    add_order(centralizer_cmd);
    CLI::App* complete_cmd = add_subcommand(
        "complete-conjugator", "unique conjugator with prescribed coefficients at n*j+1");
    add_inputs(complete_cmd, 1);
    complete_cmd->add_option("--free", free_raw, "prescribed g_(nj+1) as k=v[,k=v...]")
        ->required();
    complete_cmd->add_option("--N", trunc_flag, "completion order (default: N of f)");
    CLI::App* build_cmd = add_subcommand("build", "unique order-n series from free coefficients");
    add_order(build_cmd);
    build_cmd->add_option("--N", trunc_flag, "truncation order")->required();
    build_cmd->add_option("--field", field_flag, "rational | cyclotomic:n");
    build_cmd->add_option("--free", free_raw, "free coefficients as k=v[,k=v...]");
    build_cmd->add_option("--omega", omega_text, "lead coefficient (default: canonical root)");
    CLI::App* build_ex_cmd =
        add_subcommand("build-existence", "order-n series via the h o f = l_w o h sweep");
    add_order(build_ex_cmd);
    build_ex_cmd->add_option("--N", trunc_flag, "truncation order")->required();
    build_ex_cmd->add_option("--field", field_flag, "rational | cyclotomic:n");
    build_ex_cmd->add_option("--free", free_raw, "free coefficients as k=v[,k=v...]");
    build_ex_cmd->add_option("--free-h", free_h_raw, "helper coefficients at n*j+1 as k=v[,...]");
    build_ex_cmd->add_option("--omega", omega_text, "lead coefficient (default: canonical root)");
    CLI::App* forced_cmd =
        add_subcommand("forced", "forced coefficient a_k from a prefix");
    add_inputs(forced_cmd, 1);
    forced_cmd->add_option("--k", k_flag, "coefficient index")->required();
    add_order(forced_cmd);
    CLI::App* schroder_cmd =
        add_subcommand("schroder", "solve Schroder's equation (infinite-order multiplier)");
    add_inputs(schroder_cmd, 1);
    CLI::App* normalize_cmd =
        add_subcommand("normalize", "Muckenhoupt normal form for a torsion multiplier");
    add_inputs(normalize_cmd, 1);
    CLI::App* stanley_check_cmd =
        add_subcommand("stanley-check", "test f(-f(-z)) = z");
    add_inputs(stanley_check_cmd, 1);
    CLI::App* stanley_build_cmd =
        add_subcommand("stanley-build", "build invert(g)(-g(-z)) from g with g_1 = 1");
    add_inputs(stanley_build_cmd, 1);
    CLI::App* growth_cmd =
        add_subcommand("growth", "coefficient growth report for an order-two build");
    growth_cmd->add_option("--N", trunc_flag, "truncation order")->required();
    growth_cmd->add_option("--free", free_raw, "free coefficients as k=v[,k=v...]");
    growth_cmd->add_option("--bound", bound, "root-magnitude bound to flag");
    CLI::App* verify_cmd =
        add_subcommand("verify", "exit 0 iff f^(n) = id mod z^(N+1)");
    add_inputs(verify_cmd, 1);
    add_order(verify_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fps");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        auto load = [&](std::size_t i) { return parse_series(read_source(inputs.at(i), in)); };

        if (compose_cmd->parsed()) {
            output.jet(compose(load(0), load(1)), out);
        } else if (invert_cmd->parsed()) {
            output.jet(invert(load(0)), out);
        } else if (iterate_cmd->parsed()) {
            output.jet(iterate(load(0), m_flag), out);
        } else if (order_cmd->parsed()) {
            output.json(order_to_json(compositional_order(load(0))), out);
        } else if (star_cmd->parsed()) {
            output.jet(star(load(0)), out);
        } else if (linearize_cmd->parsed()) {
            auto [conjugator, omega] = linearize_finite(load(0));
            Json j;
            j["conjugator"] = jet_to_json(conjugator);
            j["omega"] = element_to_json(omega);
            output.json(j, out);
        } else if (centralizer_cmd->parsed()) {
            Json j;
            j["in_centralizer"] = in_centralizer(load(0), n_flag);
            output.json(j, out);
        } else if (complete_cmd->parsed()) {
            const Jet f = load(0);
            const auto prescribed = parse_assignments(free_raw, f.context());
            const int n = trunc_flag == 0 ? f.truncation() : trunc_flag;
            output.jet(complete_conjugator(f, prescribed, n), out);
        } else if (build_cmd->parsed() || build_ex_cmd->parsed()) {
            const FieldContextPtr ctx =
                field_flag.empty()
                    ? (n_flag <= 2 ? FieldContext::make_rational()
                                   : FieldContext::make_cyclotomic(n_flag))
                    : context_from_flag(field_flag);
            const FieldElement omega = omega_text.empty()
                                           ? default_omega(ctx, n_flag)
                                           : element_from_text(omega_text, ctx);
            const auto spec = FreeCoefficientSpec::make(n_flag, omega, trunc_flag,
                                                        parse_assignments(free_raw, ctx));
            const ConstructionRecord record =
                build_cmd->parsed()
                    ? build_unique(spec)
                    : build_existence(spec, parse_assignments(free_h_raw, ctx));
            output.json(record_to_json(record), out);
        } else if (forced_cmd->parsed()) {
            const Jet prefix = load(0);
            auto [a, p] = forced_coefficient(prefix, k_flag, n_flag);
            Json j;
            j["k"] = k_flag;
            j["a_k"] = element_to_json(a);
            j["p_value"] = element_to_json(p);
            output.json(j, out);
        } else if (schroder_cmd->parsed()) {
            output.jet(schroder_linearize(load(0)), out);
        } else if (normalize_cmd->parsed()) {
            auto [g, conjugator] = normal_form(load(0));
            Json j;
            j["g"] = jet_to_json(g);
            j["conjugator"] = jet_to_json(conjugator);
            output.json(j, out);
        } else if (stanley_check_cmd->parsed()) {
            Json j;
            j["stanley_involution"] = stanley_involution_check(load(0));
            output.json(j, out);
        } else if (stanley_build_cmd->parsed()) {
            output.jet(stanley_build(load(0)), out);
        } else if (growth_cmd->parsed()) {
            const FieldContextPtr ctx = FieldContext::make_rational();
            const auto spec = FreeCoefficientSpec::make(2, ctx->from_integer(-1), trunc_flag,
                                                        parse_assignments(free_raw, ctx));
            output.json(growth_to_json(growth_report(spec, bound)), out);
        } else if (verify_cmd->parsed()) {
            const bool verified = is_identity_iterate(load(0), n_flag);
            Json j;
            j["verified"] = verified;
            output.json(j, out);
            return verified ? kOk : kVerificationFailed;
        }
        return kOk;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace fps::cli
