#pragma once

#include <string>

#include "aba/compliance.hpp"
#include "aba/semantics.hpp"

namespace aba {

/// Semantics name for reports: well_founded is reported as "grounded" for
/// flat frameworks.
std::string display_semantics(const ExtensionReport& report);

/// Stable-field JSON documents. Extensions render as arrays of token arrays,
/// assumption sets in declaration order, extension lists in bitmask order.
std::string json_extension_report(const Framework& f, const ExtensionReport& report);
std::string json_verdict(const Framework& f, const Verdict& verdict);

std::string text_extension_report(const Framework& f, const ExtensionReport& report);
std::string text_verdict(const Framework& f, const Verdict& verdict);

/// DOT export of the preference-aware attack graph between assumption sets.
/// scope "supports": sets occurring in some support family, plus singletons;
/// scope "all": every subset. The empty set and the full set are omitted,
/// following the usual drawing convention. Solid edges are normal attacks,
/// dashed edges reverse attacks; an edge that is both carries both=true.
std::string export_dot(const Framework& f, std::string_view scope, const Limits& limits = {});

}  // namespace aba
