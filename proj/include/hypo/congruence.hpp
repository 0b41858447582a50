#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "hypo/limits.hpp"
#include "hypo/words.hpp"

namespace hypo {

  // The four families of defining relations of the hypoplactic monoid:
  //
  //   plactic_1:     acb  = cab     a <= b < c
  //   plactic_2:     bac  = bca     a < b <= c
  //   hypoplactic_1: cadb = acbd    a <= b < c <= d
  //   hypoplactic_2: bdac = dbca    a < b <= c < d
  enum class RelationKind { plactic_1, plactic_2, hypoplactic_1, hypoplactic_2 };

  std::string_view name(RelationKind kind);

  inline constexpr RelationKind kAllRelationKinds[]
      = {RelationKind::plactic_1,
         RelationKind::plactic_2,
         RelationKind::hypoplactic_1,
         RelationKind::hypoplactic_2};

  // One application of a relation (in either direction) to the factor of a
  // word starting at `position`.
  struct Rewrite {
    RelationKind kind;
    std::size_t  position;
    Word         result;
  };

  std::vector<Rewrite> rewrites(Word const& w);

  // Distinct results of rewrites(w), sorted.
  std::vector<Word> rewrite_neighbors(Word const& w);

  // Every instance (lhs, rhs) of the relation with letters in {1, ..., n}.
  std::vector<std::pair<Word, Word>> relation_instances(RelationKind kind,
                                                        Letter       n);

  // The congruence class of w under the defining relations, by breadth-first
  // closure; sorted. Throws ResourceLimitError once the class exceeds
  // max_class_size words.
  std::vector<Word> rewrite_class(Word const& w,
                                  std::size_t max_class_size
                                  = kDefaultMaxClassSize);

  // P-symbols agree.
  bool equiv_tableau(Word const& u, Word const& v);

  // Same content and same inversions. This is the fast path.
  bool equiv_invariants(Word const& u, Word const& v);

  // v is reachable from u through the defining relations.
  bool equiv_rewrite(Word const& u,
                     Word const& v,
                     std::size_t max_class_size = kDefaultMaxClassSize);

  // Reading word of the P-symbol; equal for u and v iff u and v are
  // congruent.
  Word canonical_form(Word const& w);

  enum class EquivMethod { tableau, invariants, rewrite };

  bool equivalent(Word const& u,
                  Word const& v,
                  EquivMethod method         = EquivMethod::invariants,
                  std::size_t max_class_size = kDefaultMaxClassSize);

}  // namespace hypo
