#include "hypo/embeddings.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "hypo/congruence.hpp"
#include "hypo/errors.hpp"

namespace hypo {

  Word phi_ij(Word const& w, Letter i, Letter j) {
    if (i < 1 || i >= j) {
      throw std::invalid_argument("phi_ij needs 1 <= i < j, got ("
                                  + std::to_string(i) + ","
                                  + std::to_string(j) + ")");
    }
    Word image;
    for (Letter a : w) {
      if (a == i) {
        image.push_back(1);
      } else if (a == j) {
        image.push_back(2);
      } else if (i < a && a < j) {
        image.push_back(2);
        image.push_back(1);
      }
    }
    return canonical_form(image);
  }

  ProductElement phi_n(Word const& w, Letter n) {
    if (n < 2) {
      throw std::invalid_argument("phi_n needs n >= 2");
    }
    if (!in_rank(w, n)) {
      throw std::invalid_argument("word " + to_string(w)
                                  + " has a letter outside 1.."
                                  + std::to_string(n));
    }
    ProductElement result;
    for (Letter i = 1; i <= n; ++i) {
      for (Letter j = i + 1; j <= n; ++j) {
        result.emplace(IndexPair{i, j}, phi_ij(w, i, j));
      }
    }
    return result;
  }

  bool operator==(ProductImage const& a, ProductImage const& b) {
    Letter const n = std::max<Letter>(
        {max_letter(a.word()), max_letter(b.word()), Letter{2}});
    return phi_n(a.word(), n) == phi_n(b.word(), n);
  }

  std::string to_json(ProductElement const& e) {
    nlohmann::json doc = nlohmann::json::object();
    for (auto const& [ij, word] : e) {
      doc[std::to_string(ij.first) + "," + std::to_string(ij.second)]
          = to_string(word);
    }
    return doc.dump();
  }

  EmbeddingReport verify_embedding(Letter      n,
                                   std::size_t max_len,
                                   std::size_t max_pairs) {
    EmbeddingReport report;
    auto const      words = all_words(n, max_len);
    std::map<Content, std::vector<std::size_t>> by_content;
    for (std::size_t k = 0; k < words.size(); ++k) {
      by_content[content(words[k])].push_back(k);
    }
    std::size_t total = 0;
    for (auto const& [c, members] : by_content) {
      total += members.size() * members.size();
    }
    if (total > max_pairs) {
      throw ResourceLimitError("embedding check needs " + std::to_string(total)
                               + " comparisons");
    }
    std::vector<ProductElement> images;
    images.reserve(words.size());
    for (auto const& w : words) {
      images.push_back(phi_n(w, n));
    }
    for (auto const& [c, members] : by_content) {
      for (std::size_t a : members) {
        for (std::size_t b : members) {
          ++report.pairs_checked;
          bool const congruent = equiv_invariants(words[a], words[b]);
          bool const same_image = images[a] == images[b];
          if (congruent != same_image) {
            report.ok      = false;
            report.failure = {words[a], words[b]};
            report.message = congruent ? "congruent words with different images"
                                       : "distinct classes with equal images";
            return report;
          }
        }
      }
    }
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (u.size() + v.size() > max_len) {
          continue;
        }
        Word const uv = concat(u, v);
        for (Letter i = 1; i <= n; ++i) {
          for (Letter j = i + 1; j <= n; ++j) {
            ++report.products_checked;
            if (phi_ij(uv, i, j)
                != canonical_form(concat(phi_ij(u, i, j), phi_ij(v, i, j)))) {
              report.ok      = false;
              report.failure = {u, v};
              report.message = "phi_" + std::to_string(i) + std::to_string(j)
                               + " does not respect the product";
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  bool non_embedding_witness(Letter n) {
    if (n < 3) {
      throw std::invalid_argument("the witness needs n >= 3");
    }
    Word square;
    for (int round = 0; round < 2; ++round) {
      for (Letter a = 1; a < n; ++a) {
        square.push_back(a);
      }
    }
    Word const left  = concat(Word{n}, square);
    Word const right = concat(square, Word{n});
    return !equiv_invariants(left, right);
  }

}  // namespace hypo
