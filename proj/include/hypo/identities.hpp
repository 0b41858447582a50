#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypo/limits.hpp"
#include "hypo/words.hpp"

namespace hypo {

  // Variables are indices into the owning identity's name table.
  using Var     = std::uint8_t;
  using Pattern = std::vector<Var>;

  // u ~ v. Stored verbatim; a trivial identity (u == v) is allowed.
  struct Identity {
    std::vector<std::string> names;
    Pattern                  lhs;
    Pattern                  rhs;

    std::size_t number_of_variables() const noexcept {
      return names.size();
    }

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  // x, y, z, t for up to four variables, x1, x2, ... beyond that.
  std::vector<std::string> default_variable_names(std::size_t n);

  // Variables are identifiers: a letter followed by any digits, underscores
  // or primes. Whitespace between them is optional, so "xyzxty ~ yxzxty" and
  // "x y z x t y ~ y x z x t y" are the same identity, and "x a1 x x" has
  // two variables. An empty side (or "ε") is the empty pattern. Variables
  // are numbered by first occurrence, left side first.
  Identity parse_identity(std::string_view text);

  // Parses a single side against an existing name table, appending names it
  // has not seen.
  Pattern parse_pattern(std::string_view text, std::vector<std::string>& names);

  // Space separated names; the empty pattern renders as the empty string.
  std::string to_string(Pattern const& p, std::vector<std::string> const& names);

  // "lhs ~ rhs", with ε standing for an empty side.
  std::string to_string(Identity const& id);

  bool is_trivial(Identity const& id);
  bool is_balanced(Identity const& id);

  // Indices of the variables occurring on either side, ascending.
  std::vector<Var> occurring_variables(Identity const& id);

  struct HypoVerdict {
    enum class Reason { none, unbalanced, subsequence_mismatch };

    bool   holds  = true;
    Reason reason = Reason::none;
    // For subsequence_mismatch: exactly one side admits x y as a subsequence.
    Var x = 0;
    Var y = 0;
  };

  // Exact decision: balanced, and for every ordered pair of distinct
  // variables (x, y) the left side admits x y as a subsequence iff the right
  // side does.
  HypoVerdict check_in_hypo(Identity const& id);

  bool holds_in_hypo(Identity const& id);

  // Human readable verdict, e.g. "does not hold: pair (x,y) subsequence
  // mismatch".
  std::string describe(HypoVerdict const& verdict, Identity const& id);

  // Image of each variable (indexed by Var).
  using Evaluation = std::vector<Word>;

  struct EvaluationResult {
    bool                      holds = true;
    std::optional<Evaluation> counterexample;
  };

  Word evaluate(Pattern const& p, Evaluation const& assignment);

  // Exhaustive over every assignment of the identity's variables to the
  // candidate words, comparing canonical forms. Assignments are scanned in
  // lexicographic order of candidate indices, first variable slowest; the
  // first failing one is reported. Throws ResourceLimitError when the
  // assignment space exceeds max_assignments.
  EvaluationResult holds_by_evaluation(Identity const&        id,
                                       std::span<Word const> candidates,
                                       std::size_t max_assignments
                                       = kDefaultMaxAssignments);

  // Evaluation into hypo_n with each variable ranging over all words over
  // {1, ..., n} of length <= cap, in shortlex order.
  EvaluationResult holds_in_hypo_n(Identity const& id,
                                   Letter          n,
                                   std::size_t     cap,
                                   std::size_t max_assignments
                                   = kDefaultMaxAssignments);

  // Keeps only the occurrences of x and y.
  Pattern restrict_to_vars(Pattern const& p, Var x, Var y);

  // For identities in exactly two variables: holds iff trivial, or balanced
  // with neither side of the form x^a y^b or y^b x^a. Throws
  // std::invalid_argument for any other number of variables.
  bool two_variable_form_check(Identity const& id);

  // Least representative of the identity under renaming of variables and
  // swapping of sides, over the variable names default_variable_names(k).
  Identity canonical_representative(Identity const& id);

  // All non-trivial identities holding in hypo with exactly num_vars
  // variables and both sides of the given length, one per class under
  // renaming and side swap, sorted. Throws ResourceLimitError when
  // num_vars^length exceeds max_patterns.
  std::vector<Identity> enumerate_identities(std::size_t num_vars,
                                             std::size_t length,
                                             std::size_t max_patterns
                                             = kDefaultMaxPatterns);

  // x a1 ... a(n-1) x x ~ x x a1 ... a(n-1) x
  Identity shortest_identity_witness(std::size_t num_vars);

  struct ShortestIdentities {
    std::size_t           length = 0;
    std::vector<Identity> identities;
  };

  // Searches lengths num_vars, num_vars + 1, ... up to max_length for the
  // first non-empty enumerate_identities result. Requires num_vars >= 2.
  ShortestIdentities shortest_identities(std::size_t num_vars,
                                         std::size_t max_length   = 12,
                                         std::size_t max_patterns
                                         = kDefaultMaxPatterns);

  std::size_t shortest_identity_length(std::size_t num_vars,
                                       std::size_t max_patterns
                                       = kDefaultMaxPatterns);

}  // namespace hypo
