#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypo {

  // Letters are positive integers; the rank-n alphabet is {1, ..., n}.
  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  // Letter -> number of occurrences. Zero counts are never stored.
  using Content = std::map<Letter, std::size_t>;

  // (b, a) where b is the successor of a inside the support of the word and
  // the word admits b a as a subsequence.
  using Inversion    = std::pair<Letter, Letter>;
  using InversionSet = std::set<Inversion>;

  Content content(std::span<Letter const> w);

  // Sorted distinct letters.
  std::vector<Letter> support(std::span<Letter const> w);

  bool has_subsequence(std::span<Letter const> w, std::span<Letter const> s);

  // Only support-adjacent pairs are considered: for consecutive support
  // letters a < b, b-a is an inversion iff the first b precedes the last a.
  InversionSet inversions(std::span<Letter const> w);

  bool is_valid_word(std::span<Letter const> w);

  // True iff every letter is <= n.
  bool in_rank(std::span<Letter const> w, Letter n);

  Letter max_letter(std::span<Letter const> w);

  Word concat(std::span<Letter const> u, std::span<Letter const> v);

  // Accepts "31214", "3 1 2 1 4", "3,1,2,1,4", "10, 2" and the empty string
  // (or "ε") for the empty word. The contiguous form requires every letter
  // to be a single non-zero digit. Throws ParseError naming the bad token.
  Word parse_word(std::string_view text);

  // Contiguous digits when every letter is <= 9, otherwise comma separated.
  // parse_word(to_string(w)) == w for every valid w.
  std::string to_string(std::span<Letter const> w);

  // All words over {1, ..., n} of length <= max_len in shortlex order.
  std::vector<Word> all_words(Letter n, std::size_t max_len);

  // All words over {1, ..., n} of length exactly len in lexicographic order.
  std::vector<Word> words_of_length(Letter n, std::size_t len);

}  // namespace hypo
