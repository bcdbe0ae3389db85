#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aba/attacks.hpp"
#include "aba/framework.hpp"

namespace aba {

enum class Semantics { admissible, preferred, complete, stable, well_founded, ideal };
enum class Mode { plain, preference_aware };

const char* to_string(Semantics s);
const char* to_string(Mode m);

/// Accepts the six canonical names plus "grounded" as an alias for
/// well_founded. Dashes and underscores are interchangeable.
std::optional<Semantics> parse_semantics(std::string_view name);
std::optional<Mode> parse_mode(std::string_view name);

struct ExtensionReport {
  Semantics semantics = Semantics::complete;
  Mode mode = Mode::plain;
  bool exists = false;
  std::vector<AssumptionSet> extensions;                // sorted by bitmask
  std::vector<std::vector<SentenceId>> conclusions;     // aligned with extensions
  // Advisory flags for the well-founded report; a non-flat intersection may
  // fail either property.
  bool well_founded_closed = true;
  bool well_founded_admissible = true;
  // Report the extension family under the conventional name "grounded" when
  // the framework is flat.
  bool grounded_alias = false;
};

/// No self-attack under the mode's relation.
bool is_conflict_free(const Framework& f, AssumptionSet e, Mode mode);

/// Every closed attacker of `a` under the mode's relation is counter-attacked
/// by e. Quantifies over closed sets only.
bool defends(const Framework& f, AssumptionSet e, AssumptionSet a, Mode mode, const Limits& limits = {});

/// Exact enumeration over closed subsets of the assumptions.
ExtensionReport extensions(const Framework& f, Semantics sem, Mode mode, const Limits& limits = {});

/// Least fixed point of the defence operator from the empty set. Requires a
/// flat framework; under weak contraposition it coincides with the
/// well-founded report (the caller checks weak contraposition).
AssumptionSet grounded_fixpoint(const Framework& f, const Limits& limits = {});

/// A finite abstract argumentation graph: opaque nodes and attack edges.
struct AAGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Dung semantics by exact enumeration; well_founded/grounded via the
/// defence-operator fixed point. Returns sorted node-index sets.
std::vector<std::vector<int>> aa_extensions(const AAGraph& g, Semantics sem, const Limits& limits = {});

}  // namespace aba
