#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypo/words.hpp"

namespace hypo {

  // A quasi-ribbon tableau, stored as its rows. Row k + 1 starts in the
  // column of the last cell of row k, so the column offsets are determined
  // by the row lengths:
  //
  //   1 2 4
  //       5
  //       6 6
  //         7 8
  //
  // Rows are non-empty and weakly increasing, and the last entry of a row is
  // strictly smaller than the first entry of the next one (which is what the
  // strictly increasing columns amount to for this shape).
  class QuasiRibbonTableau {
   public:
    using Row = std::vector<Letter>;

    QuasiRibbonTableau() = default;

    // Throws std::invalid_argument if the rows do not form a quasi-ribbon
    // tableau.
    explicit QuasiRibbonTableau(std::vector<Row> rows);

    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }

    // Starting column of each row.
    std::vector<std::size_t> offsets() const;

    std::size_t number_of_cells() const noexcept;

    bool empty() const noexcept {
      return _rows.empty();
    }

    // Krob-Thibon insertion of a single letter, in place.
    void insert(Letter a);

    friend bool operator==(QuasiRibbonTableau const&, QuasiRibbonTableau const&)
        = default;

   private:
    std::vector<Row> _rows;
  };

  [[nodiscard]] QuasiRibbonTableau insert(QuasiRibbonTableau const& t, Letter a);

  QuasiRibbonTableau p_symbol(std::span<Letter const> w);

  // Columns left to right, each read bottom to top. Satisfies
  // p_symbol(reading_word(t)) == t.
  Word reading_word(QuasiRibbonTableau const& t);

  bool tableau_equal(QuasiRibbonTableau const& t1, QuasiRibbonTableau const& t2);

  // Staircase layout, one line per row, cells of equal width separated by a
  // single space. The empty tableau renders as the empty string.
  std::string to_text(QuasiRibbonTableau const& t);
  QuasiRibbonTableau tableau_from_text(std::string_view text);

  // [{"offset": 0, "row": [1, 2, 4]}, {"offset": 2, "row": [5]}, ...]
  std::string to_json(QuasiRibbonTableau const& t);
  QuasiRibbonTableau tableau_from_json(std::string_view text);

}  // namespace hypo
