#include "aba/semantics.hpp"

#include <algorithm>
#include <bit>

#include "aba/deduction.hpp"

namespace aba {

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::admissible: return "admissible";
    case Semantics::preferred: return "preferred";
    case Semantics::complete: return "complete";
    case Semantics::stable: return "stable";
    case Semantics::well_founded: return "well_founded";
    case Semantics::ideal: return "ideal";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::plain ? "plain" : "preference_aware"; }

std::optional<Semantics> parse_semantics(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "admissible") return Semantics::admissible;
  if (n == "preferred") return Semantics::preferred;
  if (n == "complete") return Semantics::complete;
  if (n == "stable") return Semantics::stable;
  if (n == "well_founded" || n == "grounded") return Semantics::well_founded;
  if (n == "ideal") return Semantics::ideal;
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "plain") return Mode::plain;
  if (name == "plus" || name == "preference_aware") return Mode::preference_aware;
  return std::nullopt;
}

namespace {

// Attack structure over n atoms, tabulated per subset mask.
// attacks(a, b) == (fwd[a] & b) || (rev[b] & a): fwd[m] holds the atoms whose
// singleton m attacks from the source side, rev[m] the atoms whose singleton
// attacks m from the target side (reverse attacks; zero in plain mode).
struct SubsetModel {
  int n = 0;
  std::vector<std::uint32_t> closure_of;
  std::vector<std::uint32_t> closed;  // ascending list of closed masks
  std::vector<std::uint32_t> fwd, rev;

  bool is_closed(std::uint32_t m) const { return closure_of[m] == m; }
  bool attacks(std::uint32_t a, std::uint32_t b) const {
    return (fwd[a] & b) != 0 || (rev[b] & a) != 0;
  }
};

void check_cap(int n, const Limits& limits, const char* what) {
  if (n > limits.assumption_cap)
    throw CapacityError(std::string(what) + " count " + std::to_string(n) +
                        " exceeds enumeration cap of " + std::to_string(limits.assumption_cap));
}

SubsetModel build_model(const Framework& f, Mode mode) {
  SubsetModel m;
  m.n = f.assumption_count();
  std::size_t size = std::size_t(1) << m.n;
  m.closure_of.resize(size);
  m.fwd.assign(size, 0);
  m.rev.assign(size, 0);

  // One chaining pass per mask yields both the closure and the set of
  // assumptions whose contrary the mask derives.
  std::vector<std::uint32_t> derives_contrary(size, 0);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    SentenceSet cn = conclusions(f, mask);
    std::uint32_t cl = 0, dc = 0;
    for (int i = 0; i < m.n; ++i) {
      if (cn[f.assumption_sentence(i)]) cl |= 1u << i;
      if (cn[f.contrary(i)]) dc |= 1u << i;
    }
    m.closure_of[mask] = cl;
    derives_contrary[mask] = dc;
    if (cl == mask) m.closed.push_back(mask);
  }

  if (mode == Mode::plain || !f.pref().has_pairs()) {
    m.fwd = std::move(derives_contrary);
    return m;
  }

  std::vector<std::uint32_t> lessers(m.n);
  for (int i = 0; i < m.n; ++i) lessers[i] = f.pref().lessers_mask(i);

  for (std::uint32_t mask = 0; mask < size; ++mask) {
    std::uint32_t nt = 0, rv = 0;
    for (int i = 0; i < m.n; ++i) {
      if (derives_contrary[mask & ~lessers[i]] >> i & 1u) nt |= 1u << i;
      std::uint32_t taint = mask & lessers[i];
      // Reverse attacks need a deduction inside `mask` that uses an
      // assumption below i; prune by plain derivability first.
      if (taint && (derives_contrary[mask] >> i & 1u) &&
          tainted_derivable(f, mask, taint, f.contrary(i)))
        rv |= 1u << i;
    }
    m.fwd[mask] = nt;
    m.rev[mask] = rv;
  }
  return m;
}

SubsetModel build_model(const AAGraph& g) {
  SubsetModel m;
  m.n = g.node_count();
  std::size_t size = std::size_t(1) << m.n;
  m.closure_of.resize(size);
  m.rev.assign(size, 0);
  std::vector<std::uint32_t> node_targets(m.n, 0);
  for (auto [u, v] : g.edges) node_targets[u] |= 1u << v;
  m.fwd.assign(size, 0);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    int low = std::countr_zero(mask);
    m.fwd[mask] = m.fwd[mask & (mask - 1)] | node_targets[low];
  }
  m.closed.reserve(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    m.closure_of[mask] = mask;
    m.closed.push_back(mask);
  }
  return m;
}

bool self_defending(const SubsetModel& m, std::uint32_t e) {
  for (std::uint32_t b : m.closed)
    if (m.attacks(b, e) && !m.attacks(e, b)) return false;
  return true;
}

std::vector<std::uint32_t> admissible_sets(const SubsetModel& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e : m.closed)
    if (!m.attacks(e, e) && self_defending(m, e)) out.push_back(e);
  return out;
}

std::vector<std::uint32_t> maximal_sets(const std::vector<std::uint32_t>& sets) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : sets) {
    bool maximal = true;
    for (std::uint32_t b : sets)
      if (a != b && (a & b) == a) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

// Closed attackers of each singleton, for the pointwise checks.
std::vector<std::vector<std::uint32_t>> singleton_attackers(const SubsetModel& m) {
  std::vector<std::vector<std::uint32_t>> att(m.n);
  for (std::uint32_t b : m.closed) {
    std::uint32_t hit = m.fwd[b];
    for (int i = 0; i < m.n; ++i)
      if ((m.rev[std::uint32_t(1) << i] & b) != 0) hit |= 1u << i;
    for (int i = 0; i < m.n; ++i)
      if (hit >> i & 1u) att[i].push_back(b);
  }
  return att;
}

bool defends_singleton(const SubsetModel& m, const std::vector<std::vector<std::uint32_t>>& att,
                       std::uint32_t e, int i) {
  for (std::uint32_t b : att[i])
    if (!m.attacks(e, b)) return false;
  return true;
}

// Complete = admissible and containing every singleton it defends; by attack
// monotonicity in the target this covers every defended set.
std::vector<std::uint32_t> complete_sets(const SubsetModel& m,
                                         const std::vector<std::uint32_t>& admissible,
                                         const std::vector<std::vector<std::uint32_t>>& att) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e : admissible) {
    bool complete = true;
    for (int i = 0; i < m.n && complete; ++i)
      if (!(e >> i & 1u) && defends_singleton(m, att, e, i)) complete = false;
    if (complete) out.push_back(e);
  }
  return out;
}

std::vector<std::uint32_t> stable_sets(const SubsetModel& m) {
  std::vector<std::uint32_t> out;
  std::uint32_t all = m.n >= 32 ? 0xffffffffu : ((std::uint32_t(1) << m.n) - 1);
  for (std::uint32_t e : m.closed) {
    if (m.attacks(e, e)) continue;
    bool stable = true;
    std::uint32_t outside = all & ~e;
    for (int i = 0; i < m.n && stable; ++i)
      if (outside >> i & 1u)
        if (!m.attacks(e, std::uint32_t(1) << i)) stable = false;
    if (stable) out.push_back(e);
  }
  return out;
}

std::vector<std::uint32_t> ideal_sets(const std::vector<std::uint32_t>& admissible,
                                      const std::vector<std::uint32_t>& preferred) {
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t a : admissible) {
    bool contained = true;
    for (std::uint32_t p : preferred)
      if ((a & p) != a) {
        contained = false;
        break;
      }
    if (contained) candidates.push_back(a);
  }
  return maximal_sets(candidates);
}

std::uint32_t defence_fixpoint(const SubsetModel& m,
                               const std::vector<std::vector<std::uint32_t>>& att) {
  std::uint32_t s = 0;
  while (true) {
    std::uint32_t next = 0;
    for (int i = 0; i < m.n; ++i)
      if (defends_singleton(m, att, s, i)) next |= 1u << i;
    if (next == s) return s;
    s = next;
  }
}

struct EngineResult {
  std::vector<std::uint32_t> sets;
  bool exists = false;
  bool wf_closed = true;
  bool wf_admissible = true;
};

EngineResult run_engine(const SubsetModel& m, Semantics sem) {
  EngineResult r;
  switch (sem) {
    case Semantics::admissible:
      r.sets = admissible_sets(m);
      break;
    case Semantics::preferred:
      r.sets = maximal_sets(admissible_sets(m));
      break;
    case Semantics::complete:
      r.sets = complete_sets(m, admissible_sets(m), singleton_attackers(m));
      break;
    case Semantics::stable:
      r.sets = stable_sets(m);
      break;
    case Semantics::well_founded: {
      auto completes = complete_sets(m, admissible_sets(m), singleton_attackers(m));
      if (completes.empty()) {
        r.exists = false;
        return r;
      }
      std::uint32_t inter = completes.front();
      for (std::uint32_t e : completes) inter &= e;
      r.sets = {inter};
      r.wf_closed = m.is_closed(inter);
      r.wf_admissible = r.wf_closed && !m.attacks(inter, inter) && self_defending(m, inter);
      break;
    }
    case Semantics::ideal: {
      auto admissible = admissible_sets(m);
      r.sets = ideal_sets(admissible, maximal_sets(admissible));
      break;
    }
  }
  r.exists = !r.sets.empty();
  std::sort(r.sets.begin(), r.sets.end());
  return r;
}

}  // namespace

bool is_conflict_free(const Framework& f, AssumptionSet e, Mode mode) {
  if (mode == Mode::plain) return !aba_attacks(f, e, e);
  return !plus_attacks(f, e, e).any();
}

bool defends(const Framework& f, AssumptionSet e, AssumptionSet a, Mode mode, const Limits& limits) {
  check_cap(f.assumption_count(), limits, "assumption");
  std::uint32_t size = std::uint32_t(1) << f.assumption_count();
  for (std::uint32_t b = 0; b < size; ++b) {
    if (!is_closed(f, b)) continue;
    bool attacks_a = mode == Mode::plain ? aba_attacks(f, b, a) : plus_attacks(f, b, a).any();
    if (!attacks_a) continue;
    bool countered = mode == Mode::plain ? aba_attacks(f, e, b) : plus_attacks(f, e, b).any();
    if (!countered) return false;
  }
  return true;
}

ExtensionReport extensions(const Framework& f, Semantics sem, Mode mode, const Limits& limits) {
  check_cap(f.assumption_count(), limits, "assumption");
  SubsetModel model = build_model(f, mode);
  EngineResult res = run_engine(model, sem);

  ExtensionReport report;
  report.semantics = sem;
  report.mode = mode;
  report.exists = res.exists;
  report.extensions = std::move(res.sets);
  report.well_founded_closed = res.wf_closed;
  report.well_founded_admissible = res.wf_admissible;
  report.grounded_alias = is_flat(f);
  report.conclusions.reserve(report.extensions.size());
  for (AssumptionSet e : report.extensions) report.conclusions.push_back(conclusion_list(f, e));
  return report;
}

AssumptionSet grounded_fixpoint(const Framework& f, const Limits& limits) {
  if (!is_flat(f)) throw PreconditionError("grounded fixpoint requires a flat framework");
  check_cap(f.assumption_count(), limits, "assumption");
  SubsetModel model = build_model(f, Mode::preference_aware);
  return defence_fixpoint(model, singleton_attackers(model));
}

std::vector<std::vector<int>> aa_extensions(const AAGraph& g, Semantics sem, const Limits& limits) {
  check_cap(g.node_count(), limits, "argument node");
  SubsetModel model = build_model(g);
  std::vector<std::uint32_t> sets;
  if (sem == Semantics::well_founded) {
    sets = {defence_fixpoint(model, singleton_attackers(model))};
  } else {
    sets = run_engine(model, sem).sets;
  }
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (std::uint32_t mask : sets) {
    std::vector<int> nodes;
    for (int i = 0; i < model.n; ++i)
      if (mask >> i & 1u) nodes.push_back(i);
    out.push_back(std::move(nodes));
  }
  return out;
}

}  // namespace aba
