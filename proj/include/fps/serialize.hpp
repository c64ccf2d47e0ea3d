#pragma once

#include "fps/construct.hpp"
#include "fps/finite_order.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fps {

/// Insertion-ordered JSON so emitted documents are deterministic and
/// golden-file friendly.
using Json = nlohmann::ordered_json;

// FieldContext <-> {"kind":"rational"} | {"kind":"cyclotomic","n":4}
Json context_to_json(const FieldContext& ctx);
FieldContextPtr context_from_json(const Json& j);

// FieldElement <-> "p/q" (rational kind) | ["p/q", ...] (cyclotomic
// kind, lowest degree first). Parsing accepts "p" with or without the
// explicit denominator in both kinds.
Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Json& j, const FieldContextPtr& ctx);

/// Element from flag-style text: a rational literal, or a JSON
/// coordinate array for cyclotomic values.
FieldElement element_from_text(std::string_view text, const FieldContextPtr& ctx);

// Jet <-> {"field": ..., "N": int, "coeffs": [...]} with coeffs[0] = a1.
Json jet_to_json(const Jet& f);
Jet jet_from_json(const Json& j, bool require_group = true);

/// Decodes a series document; enforces membership in G (a1 != 0).
Jet parse_series(const std::string& text);

/// Compact JSON text; parse_series(emit_series_json(f)) round-trips
/// bit-exactly.
std::string emit_series_json(const Jet& f);

/// Aligned text form, e.g. "-1·z + -1·z^2 + -1·z^3".
std::string emit_series_text(const Jet& f);

Json record_to_json(const ConstructionRecord& r);
Json order_to_json(const OrderResult& r);
Json growth_to_json(const GrowthReport& r);

} // namespace fps
