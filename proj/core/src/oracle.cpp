#include "aba/oracle.hpp"

#include <algorithm>

namespace aba {

namespace {

void dedup(std::vector<AssumptionSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<AssumptionSet> expand(const Framework& f, SentenceId phi, int depth, long long& budget) {
  if (--budget < 0) throw CapacityError("derivation oracle exceeded its node budget");
  std::vector<AssumptionSet> out;
  if (f.is_assumption(phi)) out.push_back(1u << f.assumption_index(phi));
  if (depth > 1) {
    for (const Rule& r : f.rules()) {
      if (r.head != phi) continue;
      std::vector<AssumptionSet> acc{0};
      for (SentenceId b : r.body) {
        std::vector<AssumptionSet> sub = expand(f, b, depth - 1, budget);
        if (sub.empty()) {
          acc.clear();
          break;
        }
        std::vector<AssumptionSet> next;
        next.reserve(acc.size() * sub.size());
        for (AssumptionSet left : acc)
          for (AssumptionSet right : sub) {
            if (--budget < 0) throw CapacityError("derivation oracle exceeded its node budget");
            next.push_back(left | right);
          }
        dedup(next);
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
    }
  }
  dedup(out);
  return out;
}

}  // namespace

std::vector<AssumptionSet> derivation_oracle(const Framework& f, SentenceId phi, int depth_cap,
                                             const Limits& limits) {
  if (depth_cap < 1) throw PreconditionError("depth cap must be at least 1");
  long long budget = limits.oracle_node_budget;
  return expand(f, phi, depth_cap, budget);
}

}  // namespace aba
