#pragma once

#include <string_view>

#include "aba/parser.hpp"

// The recurring desk examples: two referendum interlocutors (fz), the same
// with a trusted second speaker (fd), a missing-premise variant (fc), a
// framework with no preference-aware complete extension, a three-cycle broken
// by preferences, a four-assumption chain with two stable extensions, a web
// of symmetric conflicts whose argument-level views diverge, and a pair of
// contradictory facts.
namespace fixtures {

inline constexpr std::string_view fz = R"(# two mutually attacking assumptions
assumption alpha
assumption beta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
)";

inline constexpr std::string_view fz_plus = R"(assumption alpha
assumption beta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
pref alpha < beta
)";

inline constexpr std::string_view fd = R"(assumption alpha
assumption beta
assumption delta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
rule beta <- delta
)";

inline constexpr std::string_view fd_plus = R"(assumption alpha
assumption beta
assumption delta
contrary alpha stay
contrary beta leave
rule leave <- alpha
rule stay <- beta
rule beta <- delta
pref alpha < beta
)";

inline constexpr std::string_view fc_plus = R"(assumption alpha
assumption beta
assumption gamma
contrary alpha stay
contrary beta leave
rule leave <- alpha gamma
rule stay <- beta gamma
pref alpha < beta
pref alpha < gamma
)";

inline constexpr std::string_view no_complete = R"(assumption alpha
assumption beta
assumption gamma
contrary beta c_beta
rule c_beta <- alpha gamma
pref alpha < beta
pref beta <= gamma
pref gamma <= beta
)";

inline constexpr std::string_view three_cycle = R"(assumption alpha
assumption beta
assumption gamma
contrary alpha c_alpha
contrary beta c_beta
contrary gamma c_gamma
rule c_beta <- alpha
rule c_gamma <- beta
rule c_alpha <- gamma
pref gamma < beta
pref beta < alpha
)";

inline constexpr std::string_view four_cycle = R"(assumption alpha
assumption beta
assumption gamma
assumption delta
contrary alpha c_alpha
contrary beta c_beta
contrary gamma c_gamma
contrary delta c_delta
rule c_alpha <- delta
rule c_beta <- alpha
rule c_gamma <- beta
rule c_delta <- gamma
rule c_gamma <- delta
pref delta < alpha
pref gamma < beta
lpref delta < alpha
lpref gamma < beta
)";

inline constexpr std::string_view web = R"(assumption alpha
assumption beta
assumption beta_p
assumption epsilon
contrary alpha c_alpha
contrary beta c_beta
contrary beta_p c_beta_p
contrary epsilon c_epsilon
rule c_epsilon <- beta beta_p
rule c_beta <- epsilon beta_p
rule c_beta_p <- epsilon beta
rule c_beta <- beta
rule c_beta_p <- beta_p
rule c_alpha <- beta beta_p
rule c_beta <- alpha beta_p
rule c_beta_p <- alpha beta
pref beta < epsilon
)";

inline constexpr std::string_view consistency_pair = R"(assumption a
contrary a p
rule p <-
rule ~p <-
)";

inline aba::Framework parse(std::string_view text) { return aba::parse_framework(text); }

}  // namespace fixtures
