#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "aba/deduction.hpp"
#include "aba/framework.hpp"

namespace testutil {

inline aba::AssumptionSet mask_of(const aba::Framework& f, std::initializer_list<const char*> tokens) {
  aba::AssumptionSet m = 0;
  for (const char* t : tokens) {
    auto s = f.find(t);
    if (!s || !f.is_assumption(*s)) throw std::runtime_error(std::string("not an assumption: ") + t);
    m |= 1u << f.assumption_index(*s);
  }
  return m;
}

inline std::vector<std::string> conclusion_tokens(const aba::Framework& f, aba::AssumptionSet e) {
  std::vector<std::string> out;
  for (aba::SentenceId s : aba::conclusion_list(f, e)) out.push_back(f.token(s));
  return out;
}

inline bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace testutil
