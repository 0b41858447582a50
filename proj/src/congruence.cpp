#include "hypo/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hypo/errors.hpp"
#include "hypo/tableau.hpp"

namespace hypo {

  std::string_view name(RelationKind kind) {
    switch (kind) {
      case RelationKind::plactic_1:
        return "plactic-1";
      case RelationKind::plactic_2:
        return "plactic-2";
      case RelationKind::hypoplactic_1:
        return "hypoplactic-1";
      case RelationKind::hypoplactic_2:
        return "hypoplactic-2";
    }
    return "?";
  }

  namespace {

    // Each relation, read in either direction, permutes its window in a
    // fixed way; the side conditions decide whether the window is an
    // instance of one of its sides.

    // acb <-> cab: swap the first two letters.
    bool plactic_1_side(Letter p, Letter q, Letter r) {
      bool const as_acb = p <= r && r < q;  // a = p, c = q, b = r
      bool const as_cab = q <= r && r < p;  // c = p, a = q, b = r
      return as_acb || as_cab;
    }

    // bac <-> bca: swap the last two letters.
    bool plactic_2_side(Letter p, Letter q, Letter r) {
      bool const as_bac = q < p && p <= r;  // b = p, a = q, c = r
      bool const as_bca = r < p && p <= q;  // b = p, c = q, a = r
      return as_bac || as_bca;
    }

    // cadb <-> acbd: swap both halves.
    bool hypoplactic_1_side(Letter p, Letter q, Letter r, Letter s) {
      bool const as_cadb = q <= s && s < p && p <= r;
      bool const as_acbd = p <= r && r < q && q <= s;
      return as_cadb || as_acbd;
    }

    // bdac <-> dbca: swap both halves.
    bool hypoplactic_2_side(Letter p, Letter q, Letter r, Letter s) {
      bool const as_bdac = r < p && p <= s && s < q;
      bool const as_dbca = s < q && q <= r && r < p;
      return as_bdac || as_dbca;
    }

  }  // namespace

  std::vector<Rewrite> rewrites(Word const& w) {
    std::vector<Rewrite> result;
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
      Letter const p = w[i], q = w[i + 1], r = w[i + 2];
      if (plactic_1_side(p, q, r)) {
        Word next = w;
        std::swap(next[i], next[i + 1]);
        result.push_back({RelationKind::plactic_1, i, std::move(next)});
      }
      if (plactic_2_side(p, q, r)) {
        Word next = w;
        std::swap(next[i + 1], next[i + 2]);
        result.push_back({RelationKind::plactic_2, i, std::move(next)});
      }
      if (i + 4 <= w.size()) {
        Letter const s = w[i + 3];
        auto swap_halves = [&] {
          Word next = w;
          std::swap(next[i], next[i + 1]);
          std::swap(next[i + 2], next[i + 3]);
          return next;
        };
        if (hypoplactic_1_side(p, q, r, s)) {
          result.push_back({RelationKind::hypoplactic_1, i, swap_halves()});
        }
        if (hypoplactic_2_side(p, q, r, s)) {
          result.push_back({RelationKind::hypoplactic_2, i, swap_halves()});
        }
      }
    }
    return result;
  }

  std::vector<Word> rewrite_neighbors(Word const& w) {
    std::vector<Word> result;
    for (auto& rw : rewrites(w)) {
      result.push_back(std::move(rw.result));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::vector<std::pair<Word, Word>> relation_instances(RelationKind kind,
                                                        Letter       n) {
    std::vector<std::pair<Word, Word>> result;
    for (Letter a = 1; a <= n; ++a) {
      for (Letter b = 1; b <= n; ++b) {
        for (Letter c = 1; c <= n; ++c) {
          switch (kind) {
            case RelationKind::plactic_1:
              if (a <= b && b < c) {
                result.push_back({{a, c, b}, {c, a, b}});
              }
              break;
            case RelationKind::plactic_2:
              if (a < b && b <= c) {
                result.push_back({{b, a, c}, {b, c, a}});
              }
              break;
            case RelationKind::hypoplactic_1:
              for (Letter d = c; d <= n; ++d) {
                if (a <= b && b < c) {
                  result.push_back({{c, a, d, b}, {a, c, b, d}});
                }
              }
              break;
            case RelationKind::hypoplactic_2:
              for (Letter d = c + 1; d <= n; ++d) {
                if (a < b && b <= c) {
                  result.push_back({{b, d, a, c}, {d, b, c, a}});
                }
              }
              break;
          }
        }
      }
    }
    return result;
  }

  std::vector<Word> rewrite_class(Word const& w, std::size_t max_class_size) {
    std::set<Word>   seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
      Word current = std::move(queue.front());
      queue.pop_front();
      for (auto& next : rewrite_neighbors(current)) {
        if (seen.insert(next).second) {
          if (seen.size() > max_class_size) {
            throw ResourceLimitError("congruence class exceeds "
                                     + std::to_string(max_class_size)
                                     + " words");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  bool equiv_tableau(Word const& u, Word const& v) {
    return tableau_equal(p_symbol(u), p_symbol(v));
  }

  bool equiv_invariants(Word const& u, Word const& v) {
    return u.size() == v.size() && content(u) == content(v)
           && inversions(u) == inversions(v);
  }

  bool equiv_rewrite(Word const& u, Word const& v, std::size_t max_class_size) {
    if (u == v) {
      return true;
    }
    std::set<Word>   seen{u};
    std::deque<Word> queue{u};
    while (!queue.empty()) {
      Word current = std::move(queue.front());
      queue.pop_front();
      for (auto& next : rewrite_neighbors(current)) {
        if (next == v) {
          return true;
        }
        if (seen.insert(next).second) {
          if (seen.size() > max_class_size) {
            throw ResourceLimitError("congruence class exceeds "
                                     + std::to_string(max_class_size)
                                     + " words");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return false;
  }

  Word canonical_form(Word const& w) {
    return reading_word(p_symbol(w));
  }

  bool equivalent(Word const& u,
                  Word const& v,
                  EquivMethod method,
                  std::size_t max_class_size) {
    switch (method) {
      case EquivMethod::tableau:
        return equiv_tableau(u, v);
      case EquivMethod::invariants:
        return equiv_invariants(u, v);
      case EquivMethod::rewrite:
        return equiv_rewrite(u, v, max_class_size);
    }
    return false;
  }

}  // namespace hypo
