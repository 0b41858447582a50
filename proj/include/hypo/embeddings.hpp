#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hypo/limits.hpp"
#include "hypo/words.hpp"

namespace hypo {

  // The letter map into hypo_2 for a pair i < j: i -> 1, j -> 2, letters
  // strictly between -> 21, everything else erased. Returns the canonical
  // form of the image. Throws std::invalid_argument unless 1 <= i < j.
  Word phi_ij(Word const& w, Letter i, Letter j);

  using IndexPair = std::pair<Letter, Letter>;

  // One canonical hypo_2 word per index pair (i, j), 1 <= i < j <= n.
  using ProductElement = std::map<IndexPair, Word>;

  // Throws std::invalid_argument if w has a letter > n or n < 2.
  ProductElement phi_n(Word const& w, Letter n);

  // Image of a word under the map into the product indexed by all pairs,
  // with components computed on request.
  class ProductImage {
   public:
    explicit ProductImage(Word w) : _word(std::move(w)) {}

    Word component(Letter i, Letter j) const {
      return phi_ij(_word, i, j);
    }

    Word const& word() const noexcept {
      return _word;
    }

    // Compares the components indexed by pairs inside {1, ..., n}, where n
    // is the largest letter of either word (at least 2).
    friend bool operator==(ProductImage const& a, ProductImage const& b);

   private:
    Word _word;
  };

  // {"1,2": "121", "1,3": ..., ...}
  std::string to_json(ProductElement const& e);

  struct EmbeddingReport {
    bool        ok = true;
    std::size_t pairs_checked = 0;
    std::size_t products_checked = 0;
    std::optional<std::pair<Word, Word>> failure;
    std::string message;
  };

  // Over all pairs of words over {1, ..., n} of length <= max_len with equal
  // content: congruent iff phi_n images agree. Also checks that every phi_ij
  // respects products for all u, v with |u| + |v| <= max_len. Throws
  // ResourceLimitError once more than max_pairs pairs would be compared.
  EmbeddingReport verify_embedding(Letter      n,
                                   std::size_t max_len,
                                   std::size_t max_pairs = kDefaultMaxAssignments);

  // n (1 ... n-1)^2 and (1 ... n-1)^2 n are not congruent in hypo_n.
  // Throws std::invalid_argument for n < 3.
  bool non_embedding_witness(Letter n);

}  // namespace hypo
