#include "fps/serialize.hpp"

#include "fps/error.hpp"

#include <utility>

namespace fps {

namespace {

std::string coordinate_string(const Rational& q) {
    // Cyclotomic coordinates always carry the explicit denominator.
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

Json context_to_json(const FieldContext& ctx) {
    Json j;
    if (ctx.kind() == FieldKind::rational) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "cyclotomic";
        j["n"] = ctx.cyclotomic_index();
    }
    return j;
}

FieldContextPtr context_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw parse_error("field descriptor must be an object with a \"kind\" string");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldContext::make_rational();
    if (kind == "cyclotomic") {
        if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<int>() < 1)
            throw parse_error("cyclotomic field descriptor needs a positive integer \"n\"");
        return FieldContext::make_cyclotomic(j.at("n").get<int>());
    }
    throw parse_error("unknown field kind \"" + kind + "\"");
}

Json element_to_json(const FieldElement& e) {
    if (e.context()->kind() == FieldKind::rational) return to_string(e.coords()[0]);
    Json arr = Json::array();
    for (const Rational& c : e.coords()) arr.push_back(coordinate_string(c));
    return arr;
}

FieldElement element_from_json(const Json& j, const FieldContextPtr& ctx) {
    if (ctx->kind() == FieldKind::rational) {
        if (!j.is_string())
            throw parse_error("rational coefficient must be a string");
        return ctx->from_rational(parse_rational(j.get<std::string>()));
    }
    if (!j.is_array())
        throw parse_error("cyclotomic coefficient must be a coordinate array");
    if (static_cast<int>(j.size()) != ctx->degree())
        throw parse_error("coordinate array of length " + std::to_string(j.size()) +
                          ", expected degree " + std::to_string(ctx->degree()));
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            throw parse_error("coordinate " + std::to_string(i) + " must be a string");
        coords.push_back(parse_rational(j[i].get<std::string>()));
    }
    return ctx->element(std::move(coords));
}

FieldElement element_from_text(std::string_view text, const FieldContextPtr& ctx) {
    if (!text.empty() && text.front() == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw parse_error(std::string("invalid coordinate array: ") + e.what());
        }
        return element_from_json(j, ctx);
    }
    return ctx->from_rational(parse_rational(text));
}

Json jet_to_json(const Jet& f) {
    Json j;
    j["field"] = context_to_json(*f.context());
    j["N"] = f.truncation();
    Json arr = Json::array();
    for (const FieldElement& c : f.coeffs()) arr.push_back(element_to_json(c));
    j["coeffs"] = std::move(arr);
    return j;
}

Jet jet_from_json(const Json& j, bool require_group) {
    if (!j.is_object()) throw parse_error("series document must be a JSON object");
    for (const char* key : {"field", "N", "coeffs"})
        if (!j.contains(key))
            throw parse_error(std::string("series document is missing \"") + key + "\"");
    FieldContextPtr ctx = context_from_json(j.at("field"));
    if (!j.at("N").is_number_integer() || j.at("N").get<int>() < 1)
        throw parse_error("\"N\" must be a positive integer");
    const int n = j.at("N").get<int>();
    if (!j.at("coeffs").is_array() || static_cast<int>(j.at("coeffs").size()) != n)
        throw parse_error("\"coeffs\" must be an array of exactly N = " + std::to_string(n) +
                          " entries");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(n);
    for (int k = 1; k <= n; ++k) {
        try {
            coeffs.push_back(element_from_json(j.at("coeffs")[k - 1], ctx));
        } catch (const parse_error& e) {
            throw parse_error("coefficient a_" + std::to_string(k) + ": " + e.what());
        }
    }
    Jet jet(std::move(ctx), std::move(coeffs));
    if (require_group && !jet.is_group_element())
        throw domain_error("coefficient a_1 = 0 violates membership in G");
    return jet;
}

Jet parse_series(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return jet_from_json(j, true);
}

std::string emit_series_json(const Jet& f) {
    return jet_to_json(f).dump();
}

std::string emit_series_text(const Jet& f) {
    std::string out;
    for (int k = 1; k <= f.truncation(); ++k) {
        const FieldElement& c = f.a(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (f.context()->kind() == FieldKind::rational)
            out += to_string(c.coords()[0]);
        else
            out += element_to_json(c).dump();
        out += "·z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

Json record_to_json(const ConstructionRecord& r) {
    Json j;
    j["series"] = jet_to_json(r.series);
    Json forced = Json::object();
    for (const auto& [k, v] : r.forced) forced[std::to_string(k)] = element_to_json(v);
    j["forced"] = std::move(forced);
    Json pv = Json::object();
    for (const auto& [k, v] : r.p_values) pv[std::to_string(k)] = element_to_json(v);
    j["p_values"] = std::move(pv);
    j["helper"] = r.helper ? jet_to_json(*r.helper) : Json(nullptr);
    return j;
}

Json order_to_json(const OrderResult& r) {
    Json j;
    switch (r.kind) {
    case OrderResult::Kind::finite:
        j["order"] = *r.order;
        break;
    case OrderResult::Kind::infinite:
        j["order"] = "infinite";
        break;
    case OrderResult::Kind::infinite_up_to_truncation:
        j["order"] = "infinite-up-to-truncation";
        j["multiplier_order"] = *r.multiplier_order;
        break;
    }
    return j;
}

Json growth_to_json(const GrowthReport& r) {
    Json j;
    j["n"] = 2;
    j["N"] = r.record.series.truncation();
    Json roots = Json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        Json entry;
        entry["k"] = static_cast<int>(i) + 2;
        entry["root"] = r.roots[i];
        roots.push_back(std::move(entry));
    }
    j["roots"] = std::move(roots);
    j["bound"] = r.bound;
    j["exceeded"] = r.exceeded;
    j["record"] = record_to_json(r.record);
    return j;
}

} // namespace fps
