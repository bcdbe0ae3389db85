#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aba {

/// Index of an interned sentence token. Equal tokens share one id.
using SentenceId = std::uint32_t;

/// A set of assumptions, as a bitmask over declaration-order indices.
/// Bit i set means the i-th declared assumption is a member.
using AssumptionSet = std::uint32_t;

inline constexpr int kMaxAssumptions = 32;

/// Tunable enumeration bounds. Exceeding a bound raises CapacityError,
/// never silent truncation.
struct Limits {
  int assumption_cap = 16;             // 2^cap candidate sets enumerated exactly
  int support_cap = 4096;              // supports kept per sentence
  long long oracle_node_budget = 2'000'000;  // tree expansions in the brute-force oracle
  int argument_cap = 5000;             // structured arguments per framework
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An inference rule head <- body. An empty body plays the role of a fact.
struct Rule {
  SentenceId head = 0;
  std::vector<SentenceId> body;

  bool operator==(const Rule&) const = default;
};

/// A transitive binary relation over indices 0..size-1, with the strict part
/// derived as a < b iff a <= b and not b <= a. Reflexivity is not required.
class Preorder {
 public:
  Preorder() = default;
  explicit Preorder(int size) : n_(size), leq_(static_cast<std::size_t>(size) * size, 0) {}

  int size() const { return n_; }
  bool has_pairs() const;

  void add(int a, int b) { leq_[idx(a, b)] = 1; }
  void close();  // transitive closure

  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  bool less(int a, int b) const { return leq(a, b) && !leq(b, a); }
  bool total() const;  // every pair comparable
  std::optional<std::pair<int, int>> incomparable_pair() const;

  /// Mask of elements strictly below b. Carrier must fit in 32 bits.
  std::uint32_t lessers_mask(int b) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_ = 0;
  std::vector<char> leq_;
};

class FrameworkBuilder;

/// An assumption-based argumentation framework with a preference ordering
/// over its assumptions and, optionally, one over the whole language.
/// Immutable after construction; safe to share across threads.
class Framework {
 public:
  int sentence_count() const { return static_cast<int>(tokens_.size()); }
  int assumption_count() const { return static_cast<int>(assumptions_.size()); }

  const std::string& token(SentenceId s) const { return tokens_[s]; }
  std::optional<SentenceId> find(std::string_view token) const;

  bool is_assumption(SentenceId s) const { return assumption_index_[s] >= 0; }
  int assumption_index(SentenceId s) const { return assumption_index_[s]; }
  SentenceId assumption_sentence(int index) const { return assumptions_[index]; }
  SentenceId contrary(int assumption_index) const { return contraries_[assumption_index]; }
  bool contrary_declared(int assumption_index) const { return contrary_declared_[assumption_index]; }

  const std::vector<Rule>& rules() const { return rules_; }
  const Preorder& pref() const { return pref_; }
  const Preorder& lpref() const { return lpref_; }

  AssumptionSet all_assumptions() const {
    int n = assumption_count();
    return n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
  }

  /// Renders "{a,b}" with members in declaration order; "{}" for the empty set.
  std::string set_to_string(AssumptionSet set) const;
  std::vector<std::string> set_tokens(AssumptionSet set) const;

 private:
  friend class FrameworkBuilder;
  Framework() = default;

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, SentenceId> index_;
  std::vector<int> assumption_index_;   // per sentence, -1 if not an assumption
  std::vector<SentenceId> assumptions_; // assumption index -> sentence
  std::vector<SentenceId> contraries_;  // assumption index -> sentence
  std::vector<char> contrary_declared_;
  std::vector<Rule> rules_;
  Preorder pref_;
  Preorder lpref_;
};

/// Accumulates declarations and produces a validated Framework.
/// Preference pairs are transitively closed at build time; an `a < b`
/// declaration that turns symmetric under closure is rejected.
class FrameworkBuilder {
 public:
  SentenceId sentence(std::string_view token);
  SentenceId assumption(std::string_view token, int line = -1);
  void contrary(std::string_view assumption, std::string_view value, int line = -1);
  void rule(std::string_view head, const std::vector<std::string>& body);
  void prefer(std::string_view a, std::string_view b, bool strict, int line = -1);
  void lprefer(std::string_view s, std::string_view t, bool strict, int line = -1);

  bool is_assumption(std::string_view token) const;

  Framework build();

 private:
  struct PrefDecl {
    std::string a, b;
    bool strict = false;
    int line = -1;
  };

  static void validate_token(std::string_view token, int line);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, SentenceId> index_;
  std::vector<std::string> assumptions_;  // declaration order
  std::unordered_map<std::string, std::string> contraries_;
  std::vector<Rule> rules_;
  std::vector<PrefDecl> prefs_;
  std::vector<PrefDecl> lprefs_;
  std::vector<std::pair<std::string, int>> assumption_lines_;
};

}  // namespace aba
