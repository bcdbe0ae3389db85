#pragma once

#include <random>

#include "aba/framework.hpp"
#include "aba/related.hpp"

namespace testgen {

struct GenOptions {
  int min_assumptions = 1;
  int max_assumptions = 6;
  int max_extra_sentences = 4;
  int max_rules = 10;
  int max_body = 3;
  int max_pref_pairs = 5;
  bool flat_only = false;
  bool empty_pref = false;
  bool with_lpref = false;
  // Rules come in symmetric exclusion clusters, so the full contraposition
  // axiom holds by construction.
  bool contraposed_clusters = false;
};

aba::Framework random_framework(std::mt19937& rng, const GenOptions& opt);

aba::Paf random_paf(std::mt19937& rng, int max_args);

/// Deterministic corpus driver: seeds base..base+count-1.
template <typename Fn>
void corpus(unsigned base_seed, int count, const GenOptions& opt, Fn&& fn) {
  for (int i = 0; i < count; ++i) {
    std::mt19937 rng(base_seed + static_cast<unsigned>(i));
    fn(random_framework(rng, opt), base_seed + static_cast<unsigned>(i));
  }
}

}  // namespace testgen
