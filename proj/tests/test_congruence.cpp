#include <doctest.h>

#include <algorithm>
#include <map>

#include "hypo/congruence.hpp"
#include "hypo/errors.hpp"
#include "hypo/tableau.hpp"

using namespace hypo;

namespace {

  // Number of (a, b, c) or (a, b, c, d) tuples over {1..n} meeting each
  // relation's side condition, by direct counting.
  std::size_t instance_count(RelationKind kind, Letter n) {
    std::size_t k = 0;
    for (Letter a = 1; a <= n; ++a) {
      for (Letter b = 1; b <= n; ++b) {
        for (Letter c = 1; c <= n; ++c) {
          switch (kind) {
            case RelationKind::plactic_1:
              k += a <= b && b < c;
              break;
            case RelationKind::plactic_2:
              k += a < b && b <= c;
              break;
            default:
              for (Letter d = 1; d <= n; ++d) {
                k += kind == RelationKind::hypoplactic_1 ? (a <= b && b < c && c <= d)
                                                         : (a < b && b <= c && c < d);
              }
          }
        }
      }
    }
    return k;
  }

}  // namespace

TEST_CASE("worked equivalences") {
  for (auto m : {EquivMethod::tableau, EquivMethod::invariants, EquivMethod::rewrite}) {
    CHECK(equivalent(parse_word("132"), parse_word("312"), m));
    CHECK(equivalent(parse_word("3142"), parse_word("1324"), m));
    CHECK_FALSE(equivalent(parse_word("12"), parse_word("21"), m));
    CHECK_FALSE(equivalent(parse_word("112"), parse_word("12"), m));
    CHECK(equivalent(Word{}, Word{}, m));
  }
}

TEST_CASE("relation instances") {
  for (auto kind : kAllRelationKinds) {
    for (Letter n = 1; n <= 5; ++n) {
      auto const inst = relation_instances(kind, n);
      REQUIRE(inst.size() == instance_count(kind, n));
      for (auto const& [l, r] : inst) {
        REQUIRE(l != r);
        REQUIRE(equiv_tableau(l, r));
      }
    }
  }
  auto const p1 = relation_instances(RelationKind::plactic_1, 3);
  CHECK(std::find(p1.begin(), p1.end(), std::pair{parse_word("132"), parse_word("312")}) != p1.end());
  CHECK(p1.front() == std::pair{parse_word("121"), parse_word("211")});
  CHECK(name(RelationKind::hypoplactic_2) == "hypoplactic-2");
}

TEST_CASE("rewrites stay inside the class and are symmetric") {
  for (auto const& w : all_words(3, 5)) {
    for (auto const& r : rewrites(w)) {
      REQUIRE(r.result != w);
      REQUIRE(equiv_tableau(r.result, w));
      auto const back = rewrite_neighbors(r.result);
      REQUIRE(std::binary_search(back.begin(), back.end(), w));
    }
  }
}

TEST_CASE("classes of small words") {
  auto const cls = rewrite_class(parse_word("132"));
  CHECK(cls == std::vector<Word>{parse_word("132"), parse_word("312")});
  CHECK(rewrite_class(Word{}) == std::vector<Word>{Word{}});
  CHECK(rewrite_class(parse_word("123")).size() == 1);
  CHECK_THROWS_AS(rewrite_class(parse_word("1324"), 1), ResourceLimitError);
}

TEST_CASE("class sizes agree with the tableau partition") {
  std::map<Word, std::size_t> by_canon;
  auto const                  words = all_words(3, 5);
  for (auto const& w : words) {
    ++by_canon[canonical_form(w)];
  }
  for (auto const& w : words) {
    REQUIRE(rewrite_class(w).size() == by_canon.at(canonical_form(w)));
  }
}

TEST_CASE("three methods agree on A4 up to length 4") {
  auto const words = all_words(4, 4);
  for (auto const& u : words) {
    for (auto const& v : words) {
      if (content(u) != content(v)) {
        continue;
      }
      bool const t = equiv_tableau(u, v);
      REQUIRE(equiv_invariants(u, v) == t);
      REQUIRE(equiv_rewrite(u, v) == t);
    }
  }
}

TEST_CASE("the congruence is compatible with multiplication") {
  auto const words = all_words(3, 4);
  auto const ctx   = all_words(3, 2);
  for (auto const& u : words) {
    for (auto const& v : rewrite_class(u)) {
      for (auto const& w : ctx) {
        REQUIRE(canonical_form(concat(w, u)) == canonical_form(concat(w, v)));
        REQUIRE(canonical_form(concat(u, w)) == canonical_form(concat(v, w)));
      }
    }
  }
}

TEST_CASE("canonical form is idempotent and in the class") {
  for (auto const& w : all_words(4, 5)) {
    auto const c = canonical_form(w);
    REQUIRE(canonical_form(c) == c);
    REQUIRE(equiv_invariants(c, w));
  }
}
