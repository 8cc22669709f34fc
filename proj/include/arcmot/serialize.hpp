#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arcmot/factored_rational.hpp"

namespace arcmot {

enum class Format { Json, Latex, Csv };

nlohmann::ordered_json to_json(const FactoredRational& x);
/// Inverse of to_json. Throws ParseError on malformed input.
FactoredRational from_json(const nlohmann::ordered_json& j);

/// Compact JSON text; parse_json(emit_json(x)) == x structurally.
std::string emit_json(const FactoredRational& x);
FactoredRational parse_json(std::string_view text);

/// Display-only LaTeX, e.g. "\mathbb{L}^{-2}\left(\mathbb{L}^{2}-2\mathbb{L}+1\right)".
std::string emit_latex(const FactoredRational& x);

/// ASCII rendering used by CSV tables and diagnostics, e.g. "L^-2*(L^2-2*L+1)".
std::string emit_text(const FactoredRational& x);

/// Parses a signed monomial such as "L", "-1", "A*tau^4" or "L^-2*lam3".
SignedMonomial parse_signed_monomial(std::string_view text);

}  // namespace arcmot
