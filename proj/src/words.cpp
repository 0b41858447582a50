#include "hypo/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hypo/errors.hpp"

namespace hypo {

  Content content(std::span<Letter const> w) {
    Content result;
    for (Letter a : w) {
      ++result[a];
    }
    return result;
  }

  std::vector<Letter> support(std::span<Letter const> w) {
    std::vector<Letter> result(w.begin(), w.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  bool has_subsequence(std::span<Letter const> w, std::span<Letter const> s) {
    auto it = s.begin();
    for (Letter a : w) {
      if (it == s.end()) {
        break;
      }
      if (a == *it) {
        ++it;
      }
    }
    return it == s.end();
  }

  InversionSet inversions(std::span<Letter const> w) {
    // first and last positions of every letter
    std::map<Letter, std::pair<std::size_t, std::size_t>> span;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto [it, fresh] = span.try_emplace(w[i], i, i);
      if (!fresh) {
        it->second.second = i;
      }
    }
    InversionSet result;
    if (span.size() < 2) {
      return result;
    }
    for (auto lo = span.begin(), hi = std::next(span.begin()); hi != span.end();
         ++lo, ++hi) {
      if (hi->second.first < lo->second.second) {
        result.emplace(hi->first, lo->first);
      }
    }
    return result;
  }

  bool is_valid_word(std::span<Letter const> w) {
    return std::all_of(w.begin(), w.end(), [](Letter a) { return a >= 1; });
  }

  bool in_rank(std::span<Letter const> w, Letter n) {
    return std::all_of(
        w.begin(), w.end(), [n](Letter a) { return a >= 1 && a <= n; });
  }

  Letter max_letter(std::span<Letter const> w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  }

  Word concat(std::span<Letter const> u, std::span<Letter const> v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  namespace {
    bool is_separator(char c) {
      return c == ',' || std::isspace(static_cast<unsigned char>(c));
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    Letter parse_letter(std::string_view token) {
      Letter value = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("invalid letter '" + std::string(token) + "'");
      }
      if (value == 0) {
        throw ParseError("invalid letter '" + std::string(token)
                         + "': letters are positive integers");
      }
      return value;
    }
  }  // namespace

  Word parse_word(std::string_view text) {
    text = trim(text);
    Word result;
    if (text.empty() || text == "ε") {
      return result;
    }
    bool const separated
        = std::any_of(text.begin(), text.end(), is_separator);
    if (!separated) {
      for (char c : text) {
        if (c < '1' || c > '9') {
          throw ParseError("invalid letter '" + std::string(1, c)
                           + "' in word '" + std::string(text) + "'");
        }
        result.push_back(static_cast<Letter>(c - '0'));
      }
      return result;
    }
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_separator(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) {
        ++j;
      }
      if (j > i) {
        result.push_back(parse_letter(text.substr(i, j - i)));
      }
      i = j;
    }
    return result;
  }

  std::string to_string(std::span<Letter const> w) {
    std::string result;
    bool const contiguous
        = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!contiguous && i > 0) {
        result += ',';
      }
      result += std::to_string(w[i]);
    }
    // a lone multi-digit letter needs a separator to parse back as one letter
    if (!contiguous && w.size() == 1) {
      result += ',';
    }
    return result;
  }

  std::vector<Word> words_of_length(Letter n, std::size_t len) {
    std::vector<Word> result;
    if (n == 0) {
      if (len == 0) {
        result.emplace_back();
      }
      return result;
    }
    Word w(len, 1);
    while (true) {
      result.push_back(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] == n) {
        w[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++w[i - 1];
    }
    return result;
  }

  std::vector<Word> all_words(Letter n, std::size_t max_len) {
    std::vector<Word> result;
    for (std::size_t len = 0; len <= max_len; ++len) {
      auto layer = words_of_length(n, len);
      result.insert(result.end(),
                    std::make_move_iterator(layer.begin()),
                    std::make_move_iterator(layer.end()));
    }
    return result;
  }

}  // namespace hypo
