#pragma once

#include <string>
#include <string_view>

#include "aba/framework.hpp"
#include "aba/related.hpp"

namespace aba {

/// Parses the line-oriented framework format:
///   assumption <name>
///   contrary <assumption> <sentence>
///   rule <head> <- [<body1> <body2> ...]
///   pref <a> <= <b>      pref <a> < <b>
///   lpref <s> <= <t>     lpref <s> < <t>
/// '#' starts a comment; tokens are whitespace-separated. Sentences starting
/// with '~' are classical complements and need their base declared somewhere
/// in the file. Assumptions without a contrary line get a fresh one.
Framework parse_framework(std::string_view text);

/// Canonical rendering; parse(render(parse(text))) is the identity up to
/// canonical ordering.
std::string render_framework(const Framework& f);

/// Parses the PAF format: arg <name>, att <src> <dst>,
/// pref <a> <= <b> / pref <a> < <b>.
Paf parse_paf(std::string_view text);

}  // namespace aba
