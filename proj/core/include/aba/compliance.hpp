#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aba/semantics.hpp"

namespace aba {

/// The classical complement at the token level: ~t and t pair up. Only
/// sentences whose complement token is in the language map to an id.
class Complement {
 public:
  static Complement token_convention(const Framework& f);
  static std::string complement_token(std::string_view token);

  std::optional<SentenceId> of(SentenceId s) const {
    return map_[s] < 0 ? std::nullopt : std::optional<SentenceId>(static_cast<SentenceId>(map_[s]));
  }

 private:
  std::vector<int> map_;
};

/// Outcome of an axiom or principle check. A violated verdict carries
/// re-checkable counterexamples; not_applicable only occurs for checks
/// with preconditions.
struct Verdict {
  enum class Status { holds, violated, not_applicable };

  struct Witness {
    std::vector<AssumptionSet> sets;
    std::vector<SentenceId> sentences;
    std::vector<int> assumptions;  // assumption indices
    std::string note;
  };

  std::string subject;
  Status status = Status::holds;
  std::vector<Witness> witnesses;
  std::string notes;

  bool holds() const { return status == Status::holds; }
};

const char* to_string(Verdict::Status s);

/// Weak contraposition: whenever a deduction of an assumption's contrary
/// leans on strictly less preferred assumptions, some least preferred one of
/// them is counter-deducible from the rest plus the attacked assumption.
Verdict check_wcp(const Framework& f, const Limits& limits = {});

/// Full contraposition: every member of every such deduction is
/// counter-deducible from the rest plus the attacked assumption.
Verdict check_contraposition(const Framework& f, const Limits& limits = {});

/// No sentence and its complement are both derivable from no assumptions.
Verdict check_axiom_consistency(const Framework& f, const Complement& c, const Limits& limits = {});

/// Every deduction from a non-empty assumption set uses an assumption whose
/// contrary is the complement of the conclusion. Single-node deductions of
/// assumptions count, so the check also requires contrary(a) = ~a.
Verdict check_axiom_negation(const Framework& f, const Complement& c, const Limits& limits = {});

/// No member's contrary is itself a member.
bool directly_consistent(const Framework& f, AssumptionSet e);

/// The conclusions of e are directly consistent.
bool indirectly_consistent(const Framework& f, AssumptionSet e);

enum class PrincipleId {
  conflict_preservation = 1,
  empty_preferences = 2,
  maximal_elements = 3,
  rationality_postulates = 4,
  classical_consistency = 5,
};

Verdict check_principle(const Framework& f, PrincipleId which, Semantics sem, const Limits& limits = {});

/// Closure, direct consistency and indirect consistency of every
/// preference-aware extension under the given semantics.
Verdict check_postulates(const Framework& f, Semantics sem, const Limits& limits = {});

}  // namespace aba
