#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypo/identities.hpp"
#include "hypo/limits.hpp"

namespace hypo {

  // A finite monoid given by its multiplication table. Elements are indices
  // 0 .. size() - 1 with printable labels. The constructor checks the shape
  // only; associativity and neutrality are checked by validate_monoid.
  class MultiplicationTable {
   public:
    using Element = std::size_t;

    MultiplicationTable(std::vector<std::string>          labels,
                        std::vector<std::vector<Element>> products,
                        Element                           identity);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::string const& label(Element e) const {
      return _labels.at(e);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    Element identity() const noexcept {
      return _identity;
    }

    Element product(Element a, Element b) const {
      return _products[a * _labels.size() + b];
    }

    // Throws std::out_of_range for an unknown label.
    Element index_of(std::string_view label) const;

   private:
    std::vector<std::string> _labels;
    std::vector<Element>     _products;
    Element                  _identity;
  };

  struct MonoidReport {
    bool ok = true;
    // first (a, b, c) with (ab)c != a(bc), in lexicographic order
    std::optional<std::array<MultiplicationTable::Element, 3>> non_associative;
    // first element e with e * 1 != e or 1 * e != e
    std::optional<MultiplicationTable::Element> not_neutral;
  };

  MonoidReport validate_monoid(MultiplicationTable const& t);

  std::string describe(MonoidReport const& r, MultiplicationTable const& t);

  struct TableEvaluation {
    bool holds = true;
    // element assigned to each variable of the identity (indexed by Var)
    std::optional<std::vector<MultiplicationTable::Element>> counterexample;
    MultiplicationTable::Element lhs_value = 0;
    MultiplicationTable::Element rhs_value = 0;
  };

  MultiplicationTable::Element
  evaluate(MultiplicationTable const&                       t,
           Pattern const&                                   p,
           std::vector<MultiplicationTable::Element> const& assignment);

  // Exhaustive over all size()^k assignments of the identity's k variables.
  // Scan order is lexicographic in the variables (first variable slowest)
  // with elements taken from the last table row to the first, so the
  // neutral element listed first is tried last; the first failing
  // assignment is reported. Throws std::invalid_argument if the table is not
  // a monoid and ResourceLimitError past max_assignments.
  TableEvaluation satisfies(MultiplicationTable const& t,
                            Identity const&            id,
                            std::size_t max_assignments = kDefaultMaxAssignments);

  // The 5-element monoid {1, a, b, c, 0}: a null semigroup {b, c, 0} with
  // the group {1, a} acting trivially on the left and swapping b and c on
  // the right.
  MultiplicationTable table_s();

  // k >= 2 elements with xy = x (resp. xy = y), plus an adjoined identity
  // labelled "1". With a single element the monoid is a semilattice and
  // separates nothing, so k < 2 throws std::invalid_argument.
  MultiplicationTable left_zero_monoid(std::size_t k);
  MultiplicationTable right_zero_monoid(std::size_t k);

  // Order-preserving extensive transformations of the chain 1 < 2 < 3,
  // composed left to right (fg applies f first). Labels are image triples
  // such as "123".
  MultiplicationTable c3_monoid();

  // "S", "C3", "left_zero(k)", "right_zero(k)" (k defaults to 2 when the
  // argument is omitted). Throws ParseError for unknown names.
  MultiplicationTable builtin_table(std::string_view name);

  // First non-comment line: size and neutral label. Then one line per
  // element: its label followed by its row of products, columns in the same
  // order as the rows. '#' starts a comment.
  MultiplicationTable parse_table(std::string_view text);
  std::string         to_text(MultiplicationTable const& t);

  // holds_in_hypo(id) == (is_balanced(id) && satisfies(C3, id).holds).
  bool hypo_vs_c3(Identity const&            id,
                  MultiplicationTable const& c3 = c3_monoid());

}  // namespace hypo
