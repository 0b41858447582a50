#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hypo/errors.hpp"
#include "hypo/tableau.hpp"

using namespace hypo;
using Rows = std::vector<std::vector<Letter>>;

namespace {

  // Independent description of P(w): sort the letters, then start a new row
  // before b exactly when b and its support predecessor a appear as b ... a
  // somewhere in w.
  Rows rows_oracle(Word const& w) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Rows rows;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      bool fresh = rows.empty();
      if (i > 0 && sorted[i] != sorted[i - 1]) {
        Letter const a = sorted[i - 1], b = sorted[i];
        auto const   first_b = std::find(w.begin(), w.end(), b);
        auto const   last_a  = std::find(w.rbegin(), w.rend(), a).base() - 1;
        fresh = first_b < last_a;
      }
      if (fresh) {
        rows.emplace_back();
      }
      rows.back().push_back(sorted[i]);
    }
    return rows;
  }

}  // namespace

TEST_CASE("insertion of 12654768, one letter at a time") {
  Rows const expected[] = {
      {{1}},
      {{1, 2}},
      {{1, 2, 6}},
      {{1, 2, 5}, {6}},
      {{1, 2, 4}, {5}, {6}},
      {{1, 2, 4}, {5}, {6, 7}},
      {{1, 2, 4}, {5}, {6, 6}, {7}},
      {{1, 2, 4}, {5}, {6, 6}, {7, 8}},
  };
  QuasiRibbonTableau t;
  Word const         w = parse_word("12654768");
  for (std::size_t i = 0; i < w.size(); ++i) {
    t = insert(t, w[i]);
    REQUIRE(t.rows() == expected[i]);
  }
  CHECK(t.offsets() == std::vector<std::size_t>{0, 2, 2, 3});
  CHECK(t.number_of_cells() == 8);
  CHECK(reading_word(t) == w);
}

TEST_CASE("a letter smaller than everything opens a new first row") {
  auto const t = p_symbol(parse_word("21"));
  CHECK(t.rows() == Rows{{1}, {2}});
  CHECK(reading_word(t) == parse_word("21"));
}

TEST_CASE("P symbol matches the sorted-and-split description") {
  for (Letter n : {3u, 4u}) {
    for (auto const& w : all_words(n, n == 3 ? 7 : 5)) {
      REQUIRE(p_symbol(w).rows() == rows_oracle(w));
    }
  }
}

TEST_CASE("reading word is a section of P") {
  for (auto const& w : all_words(3, 6)) {
    auto const t = p_symbol(w);
    REQUIRE(p_symbol(reading_word(t)) == t);
    REQUIRE(content(reading_word(t)) == content(w));
  }
}

TEST_CASE("constructor rejects non-tableaux") {
  CHECK_NOTHROW(QuasiRibbonTableau(Rows{{1, 1, 2}, {3}}));
  CHECK_THROWS_AS(QuasiRibbonTableau(Rows{{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(QuasiRibbonTableau(Rows{{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(QuasiRibbonTableau(Rows{{1}, {}}), std::invalid_argument);
  CHECK(QuasiRibbonTableau().empty());
  CHECK(reading_word(QuasiRibbonTableau()).empty());
}

TEST_CASE("text rendering") {
  auto const t = p_symbol(parse_word("12654768"));
  CHECK(to_text(t) == "1 2 4\n    5\n    6 6\n      7 8\n");
  CHECK(tableau_from_text(to_text(t)) == t);
  CHECK(to_text(QuasiRibbonTableau()).empty());

  auto const wide = p_symbol(Word{10, 3, 12});
  CHECK(tableau_from_text(to_text(wide)) == wide);
}

TEST_CASE("json round trip") {
  auto const t = p_symbol(parse_word("12654768"));
  CHECK(to_json(t)
        == R"([{"offset":0,"row":[1,2,4]},{"offset":2,"row":[5]},{"offset":2,"row":[6,6]},{"offset":3,"row":[7,8]}])");
  for (auto const& w : all_words(3, 5)) {
    auto const p = p_symbol(w);
    REQUIRE(tableau_from_json(to_json(p)) == p);
    REQUIRE(tableau_from_text(to_text(p)) == p);
  }
  CHECK_THROWS(tableau_from_json("[{\"offset\":1,\"row\":[1]}]"));
  CHECK_THROWS(tableau_from_json("not json"));
}
