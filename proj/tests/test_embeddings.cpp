#include <doctest.h>

#include <stdexcept>

#include "hypo/congruence.hpp"
#include "hypo/embeddings.hpp"

using namespace hypo;

namespace {

  Word raw_image(Word const& w, Letter i, Letter j) {
    Word out;
    for (Letter a : w) {
      if (a == i) {
        out.push_back(1);
      } else if (a == j) {
        out.push_back(2);
      } else if (i < a && a < j) {
        out.push_back(2);
        out.push_back(1);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("phi_13 of 123") {
  CHECK(phi_ij(parse_word("123"), 1, 3) == parse_word("1212"));
  CHECK(phi_ij(parse_word("123"), 1, 2) == parse_word("12"));
  CHECK(phi_ij(parse_word("4"), 1, 3).empty());
  CHECK_THROWS_AS(phi_ij(parse_word("1"), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi_ij(parse_word("1"), 0, 2), std::invalid_argument);
}

TEST_CASE("phi_ij agrees with the raw letter map up to congruence") {
  for (auto const& w : all_words(4, 5)) {
    for (Letter i = 1; i <= 4; ++i) {
      for (Letter j = i + 1; j <= 4; ++j) {
        auto const raw = raw_image(w, i, j);
        REQUIRE(equiv_invariants(phi_ij(w, i, j), raw));
        REQUIRE(canonical_form(raw) == phi_ij(w, i, j));
      }
    }
  }
}

TEST_CASE("phi_n components") {
  auto const e = phi_n(parse_word("123"), 3);
  CHECK(e.size() == 3);
  CHECK(e.at({1, 3}) == parse_word("1212"));
  CHECK(to_json(e) == R"({"1,2":"12","1,3":"1212","2,3":"12"})");
  CHECK(phi_n(parse_word("21"), 2).size() == 1);
  CHECK_THROWS_AS(phi_n(parse_word("14"), 3), std::invalid_argument);
  CHECK_THROWS_AS(phi_n(parse_word("1"), 1), std::invalid_argument);
}

TEST_CASE("phi_n separates exactly the congruence classes") {
  auto const words = all_words(3, 4);
  for (auto const& u : words) {
    for (auto const& v : words) {
      if (content(u) == content(v)) {
        REQUIRE((phi_n(u, 3) == phi_n(v, 3)) == equiv_tableau(u, v));
      }
    }
  }
}

TEST_CASE("each phi_ij respects products") {
  auto const words = all_words(4, 3);
  for (auto const& u : words) {
    for (auto const& v : words) {
      for (auto [i, j] : {IndexPair{1, 2}, IndexPair{1, 4}, IndexPair{2, 4}}) {
        REQUIRE(phi_ij(concat(u, v), i, j)
                == canonical_form(concat(phi_ij(u, i, j), phi_ij(v, i, j))));
      }
    }
  }
}

TEST_CASE("product images compare componentwise") {
  CHECK(ProductImage(parse_word("132")) == ProductImage(parse_word("312")));
  CHECK_FALSE(ProductImage(parse_word("12")) == ProductImage(parse_word("21")));
  CHECK(ProductImage(parse_word("3142")).component(1, 4) == phi_ij(parse_word("1324"), 1, 4));
}

TEST_CASE("small embedding checks") {
  auto const r = verify_embedding(3, 4);
  CHECK(r.ok);
  CHECK(r.pairs_checked > 0);
  CHECK(r.products_checked > 0);
  CHECK_FALSE(r.failure);
}

TEST_CASE("the non-embedding witness") {
  for (Letter n = 3; n <= 6; ++n) {
    CHECK(non_embedding_witness(n));
  }
  CHECK_THROWS_AS(non_embedding_witness(2), std::invalid_argument);
}
