#include "hypo/basis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "hypo/errors.hpp"

namespace hypo {

  namespace {

    constexpr Var kX = 0;
    constexpr Var kY = 1;
    constexpr Var kZ = 2;
    constexpr Var kT = 3;

    Pattern slice(Pattern const& w, std::size_t first, std::size_t last) {
      return Pattern(w.begin() + static_cast<std::ptrdiff_t>(first),
                     w.begin() + static_cast<std::ptrdiff_t>(last));
    }

    Pattern join(std::initializer_list<Pattern const*> parts) {
      Pattern result;
      for (auto const* part : parts) {
        result.insert(result.end(), part->begin(), part->end());
      }
      return result;
    }

    std::size_t common_prefix(Pattern const& u, Pattern const& v) {
      std::size_t i = 0;
      while (i < u.size() && i < v.size() && u[i] == v[i]) {
        ++i;
      }
      return i;
    }

    bool occurs(Pattern const& w, std::size_t first, std::size_t last, Var v) {
      return std::find(w.begin() + static_cast<std::ptrdiff_t>(first),
                       w.begin() + static_cast<std::ptrdiff_t>(last),
                       v)
             != w.begin() + static_cast<std::ptrdiff_t>(last);
    }

    // Positions i < j in [first, last) with w[i] == p and w[j] == q, taking
    // j as late as possible and then i as late as possible.
    std::optional<std::pair<std::size_t, std::size_t>>
    late_pair(Pattern const& w, std::size_t first, std::size_t last, Var p, Var q) {
      for (std::size_t j = last; j-- > first;) {
        if (w[j] != q) {
          continue;
        }
        for (std::size_t i = j; i-- > first;) {
          if (w[i] == p) {
            return std::pair{i, j};
          }
        }
      }
      return std::nullopt;
    }

    // Positions i < j in [first, last) with w[i] == p and w[j] == q, taking
    // i as early as possible and then j as early as possible.
    std::optional<std::pair<std::size_t, std::size_t>>
    early_pair(Pattern const& w, std::size_t first, std::size_t last, Var p, Var q) {
      for (std::size_t i = first; i < last; ++i) {
        if (w[i] != p) {
          continue;
        }
        for (std::size_t j = i + 1; j < last; ++j) {
          if (w[j] == q) {
            return std::pair{i, j};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::size_t>
    last_in(Pattern const& w, std::size_t first, std::size_t last, Var v) {
      for (std::size_t i = last; i-- > first;) {
        if (w[i] == v) {
          return i;
        }
      }
      return std::nullopt;
    }

    std::optional<std::size_t>
    first_in(Pattern const& w, std::size_t first, std::size_t last, Var v) {
      for (std::size_t i = first; i < last; ++i) {
        if (w[i] == v) {
          return i;
        }
      }
      return std::nullopt;
    }

    struct Candidate {
      BasisTag     tag;
      Direction    direction;
      std::size_t  r_len;
      Substitution sigma;
    };

    // Basis applications that would turn ... a b ... (a at position k) into
    // ... b a ..., in the order of the four cases: both letters before the
    // pair (R), both after it (L), b on both sides (M), a on both sides (M).
    std::vector<Candidate> swap_candidates(Pattern const& w, std::size_t k) {
      Var const         a = w[k];
      Var const         b = w[k + 1];
      std::size_t const n = w.size();
      std::vector<Candidate> result;

      bool const a_before = occurs(w, 0, k, a);
      bool const b_before = occurs(w, 0, k, b);
      bool const a_after  = occurs(w, k + 2, n, a);
      bool const b_after  = occurs(w, k + 2, n, b);

      // x z y t x y -> x z y t y x: the pair closes the identity.
      if (a_before && b_before) {
        if (auto ij = late_pair(w, 0, k, a, b)) {
          auto [i, j] = *ij;
          result.push_back({BasisTag::R,
                            Direction::forward,
                            i,
                            {Pattern{a}, Pattern{b}, slice(w, i + 1, j),
                             slice(w, j + 1, k)}});
        }
        if (auto ij = late_pair(w, 0, k, b, a)) {
          auto [i, j] = *ij;
          result.push_back({BasisTag::R,
                            Direction::backward,
                            i,
                            {Pattern{b}, Pattern{a}, slice(w, i + 1, j),
                             slice(w, j + 1, k)}});
        }
      }
      // x y z x t y -> y x z x t y: the pair opens the identity.
      if (a_after && b_after) {
        if (auto ij = early_pair(w, k + 2, n, a, b)) {
          auto [i, j] = *ij;
          result.push_back({BasisTag::L,
                            Direction::forward,
                            k,
                            {Pattern{a}, Pattern{b}, slice(w, k + 2, i),
                             slice(w, i + 1, j)}});
        }
        if (auto ij = early_pair(w, k + 2, n, b, a)) {
          auto [i, j] = *ij;
          result.push_back({BasisTag::L,
                            Direction::backward,
                            k,
                            {Pattern{b}, Pattern{a}, slice(w, k + 2, i),
                             slice(w, i + 1, j)}});
        }
      }
      // x z y x t x -> x z x y t x with x = b, y = a.
      if (b_before && b_after) {
        std::size_t const i = *last_in(w, 0, k, b);
        std::size_t const j = *first_in(w, k + 2, n, b);
        result.push_back({BasisTag::M,
                          Direction::backward,
                          i,
                          {Pattern{b}, Pattern{a}, slice(w, i + 1, k),
                           slice(w, k + 2, j)}});
      }
      // x z x y t x -> x z y x t x with x = a, y = b.
      if (a_before && a_after) {
        std::size_t const i = *last_in(w, 0, k, a);
        std::size_t const j = *first_in(w, k + 2, n, a);
        result.push_back({BasisTag::M,
                          Direction::forward,
                          i,
                          {Pattern{a}, Pattern{b}, slice(w, i + 1, k),
                           slice(w, k + 2, j)}});
      }
      return result;
    }

    DerivationStep make_step(Pattern const& w, Candidate const& c) {
      Pattern const source = substitute(source_side(c.tag, c.direction), c.sigma);
      DerivationStep step;
      step.used      = c.tag;
      step.direction = c.direction;
      step.prefix    = slice(w, 0, c.r_len);
      step.suffix    = slice(w, c.r_len + source.size(), w.size());
      step.sigma     = c.sigma;
      step.before    = w;
      step.after     = apply_basis(w, c.tag, c.direction, c.r_len, c.sigma);
      return step;
    }

    // Binds the variables of `side` against w starting at `pos`; calls
    // `found` with the end position of every complete match.
    void match_side(Pattern const&                           w,
                    Pattern const&                           side,
                    std::size_t                              si,
                    std::size_t                              pos,
                    Substitution&                            sigma,
                    std::array<bool, kBasisVariables>&       bound,
                    std::function<void(std::size_t)> const& found) {
      if (si == side.size()) {
        found(pos);
        return;
      }
      Var const v = side[si];
      if (bound[v]) {
        auto const& image = sigma[v];
        if (pos + image.size() <= w.size()
            && std::equal(image.begin(), image.end(),
                          w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          match_side(w, side, si + 1, pos + image.size(), sigma, bound, found);
        }
        return;
      }
      // images of x and y must be non-empty, otherwise the instance is trivial
      std::size_t const min_len = (v == kX || v == kY) ? 1 : 0;
      bound[v]                  = true;
      for (std::size_t len = min_len; pos + len <= w.size(); ++len) {
        sigma[v] = slice(w, pos, pos + len);
        match_side(w, side, si + 1, pos + len, sigma, bound, found);
      }
      bound[v] = false;
      sigma[v].clear();
    }

  }  // namespace

  BasisIdentity const& basis_identity(BasisTag tag) {
    return basis()[static_cast<std::size_t>(tag)];
  }

  std::array<BasisIdentity, 3> const& basis() {
    static std::array<BasisIdentity, 3> const identities = {{
        {BasisTag::L, {kX, kY, kZ, kX, kT, kY}, {kY, kX, kZ, kX, kT, kY}},
        {BasisTag::M, {kX, kZ, kX, kY, kT, kX}, {kX, kZ, kY, kX, kT, kX}},
        {BasisTag::R, {kX, kZ, kY, kT, kX, kY}, {kX, kZ, kY, kT, kY, kX}},
    }};
    return identities;
  }

  Identity as_identity(BasisTag tag) {
    auto const& b = basis_identity(tag);
    return Identity{default_variable_names(kBasisVariables), b.lhs, b.rhs};
  }

  char tag_name(BasisTag tag) {
    switch (tag) {
      case BasisTag::L:
        return 'L';
      case BasisTag::M:
        return 'M';
      case BasisTag::R:
        return 'R';
    }
    return '?';
  }

  BasisTag parse_tag(std::string_view text) {
    if (text == "L") {
      return BasisTag::L;
    }
    if (text == "M") {
      return BasisTag::M;
    }
    if (text == "R") {
      return BasisTag::R;
    }
    throw ParseError("unknown basis identity '" + std::string(text) + "'");
  }

  std::string_view direction_name(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
  }

  Direction parse_direction(std::string_view text) {
    if (text == "forward") {
      return Direction::forward;
    }
    if (text == "backward") {
      return Direction::backward;
    }
    throw ParseError("unknown direction '" + std::string(text) + "'");
  }

  Pattern substitute(Pattern const& p, Substitution const& sigma) {
    Pattern result;
    for (Var v : p) {
      auto const& image = sigma.at(v);
      result.insert(result.end(), image.begin(), image.end());
    }
    return result;
  }

  Pattern const& source_side(BasisTag tag, Direction d) {
    auto const& b = basis_identity(tag);
    return d == Direction::forward ? b.lhs : b.rhs;
  }

  Pattern const& target_side(BasisTag tag, Direction d) {
    auto const& b = basis_identity(tag);
    return d == Direction::forward ? b.rhs : b.lhs;
  }

  Pattern apply_basis(Pattern const&      w,
                      BasisTag            tag,
                      Direction           d,
                      std::size_t         r_len,
                      Substitution const& sigma) {
    Pattern const source = substitute(source_side(tag, d), sigma);
    if (r_len > w.size() || source.size() > w.size() - r_len
        || !std::equal(source.begin(), source.end(),
                       w.begin() + static_cast<std::ptrdiff_t>(r_len))) {
      throw DerivationError(std::string("instance of (") + tag_name(tag)
                            + ") does not occur at offset "
                            + std::to_string(r_len));
    }
    Pattern const target = substitute(target_side(tag, d), sigma);
    Pattern const prefix = slice(w, 0, r_len);
    Pattern const suffix = slice(w, r_len + source.size(), w.size());
    return join({&prefix, &target, &suffix});
  }

  VerifyResult verify_derivation(Derivation const& d,
                                 Pattern const&    from,
                                 Pattern const&    to) {
    Pattern current = from;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& step = d.steps[i];
      auto fail        = [&](std::string message) {
        return VerifyResult{false, i, "step " + std::to_string(i + 1) + ": "
                                          + std::move(message)};
      };
      if (step.before != current) {
        return fail("does not start where the previous step ended");
      }
      Pattern const source = substitute(source_side(step.used, step.direction),
                                        step.sigma);
      Pattern const target = substitute(target_side(step.used, step.direction),
                                        step.sigma);
      if (join({&step.prefix, &source, &step.suffix}) != step.before) {
        return fail("before is not prefix + sigma(source) + suffix");
      }
      if (join({&step.prefix, &target, &step.suffix}) != step.after) {
        return fail("after is not prefix + sigma(target) + suffix");
      }
      current = step.after;
    }
    if (current != to) {
      return {false, std::nullopt, "derivation does not end at the target"};
    }
    return {};
  }

  Derivation derive_from_basis(Identity const& id) {
    if (!holds_in_hypo(id)) {
      throw std::invalid_argument("identity does not hold in hypo: "
                                  + to_string(id));
    }
    Derivation     result;
    Pattern        current = id.lhs;
    Pattern const& target  = id.rhs;
    while (current != target) {
      std::size_t const prefix = common_prefix(current, target);
      // balanced and distinct, so both continue past the common prefix
      Var const  y    = target[prefix];
      auto const next = first_in(current, prefix + 1, current.size(), y);
      if (!next) {
        throw DerivationError("internal: no occurrence of the next target "
                              "letter in " + to_string(current, id.names));
      }
      std::size_t j = *next;
      while (j > prefix) {
        auto const candidates = swap_candidates(current, j - 1);
        bool       swapped    = false;
        for (auto const& c : candidates) {
          DerivationStep step = make_step(current, c);
          Pattern        expected = current;
          std::swap(expected[j - 1], expected[j]);
          if (step.after == expected) {
            current = step.after;
            result.steps.push_back(std::move(step));
            swapped = true;
            break;
          }
        }
        if (!swapped) {
          throw DerivationError("internal: no basis identity swaps positions "
                                + std::to_string(j - 1) + " and "
                                + std::to_string(j) + " of "
                                + to_string(current, id.names));
        }
        // progress: the target letter is one step closer to the prefix
        --j;
        if (current[j] != y) {
          throw DerivationError("internal: swap lost track of the target letter");
        }
      }
      if (common_prefix(current, target) <= prefix) {
        throw DerivationError("internal: common prefix did not grow");
      }
    }
    return result;
  }

  std::vector<Pattern> basis_neighbors(Pattern const& w) {
    std::set<Pattern> result;
    for (auto const& b : basis()) {
      for (Direction d : {Direction::forward, Direction::backward}) {
        Pattern const& source = source_side(b.tag, d);
        Pattern const& target = target_side(b.tag, d);
        for (std::size_t start = 0; start < w.size(); ++start) {
          Substitution                      sigma;
          std::array<bool, kBasisVariables> bound{};
          match_side(w, source, 0, start, sigma, bound, [&](std::size_t end) {
            Pattern const prefix = slice(w, 0, start);
            Pattern const image  = substitute(target, sigma);
            Pattern const suffix = slice(w, end, w.size());
            Pattern       next   = join({&prefix, &image, &suffix});
            if (next != w) {
              result.insert(std::move(next));
            }
          });
        }
      }
    }
    return {result.begin(), result.end()};
  }

  bool consequence_bfs(Pattern const& lhs, Pattern const& rhs, std::size_t max_states) {
    if (lhs == rhs) {
      return true;
    }
    std::set<Pattern>   seen{lhs};
    std::deque<Pattern> queue{lhs};
    while (!queue.empty()) {
      Pattern current = std::move(queue.front());
      queue.pop_front();
      for (auto& next : basis_neighbors(current)) {
        if (next == rhs) {
          return true;
        }
        if (seen.insert(next).second) {
          if (seen.size() > max_states) {
            throw ResourceLimitError("consequence search exceeds "
                                     + std::to_string(max_states) + " patterns");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return false;
  }

  namespace {
    std::string show(Pattern const& p, std::vector<std::string> const& names) {
      return p.empty() ? std::string("ε") : to_string(p, names);
    }
  }  // namespace

  std::string to_text(Derivation const& d, Identity const& id) {
    static constexpr char const* kVarNames[] = {"x", "y", "z", "t"};
    std::string out = "derivation of " + to_string(id) + " ("
                      + std::to_string(d.steps.size()) + " steps)\n";
    out += "0. " + show(id.lhs, id.names) + "\n";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& s = d.steps[i];
      out += std::to_string(i + 1) + ". (" + tag_name(s.used) + ") "
             + std::string(direction_name(s.direction)) + ", r = "
             + show(s.prefix, id.names) + ", sigma = {";
      for (std::size_t v = 0; v < kBasisVariables; ++v) {
        out += std::string(v > 0 ? ", " : "") + kVarNames[v] + " -> "
               + show(s.sigma[v], id.names);
      }
      out += "}: " + show(s.after, id.names) + "\n";
    }
    return out;
  }

  std::string to_json(Derivation const& d, Identity const& id) {
    static constexpr char const* kVarNames[] = {"x", "y", "z", "t"};
    nlohmann::json doc;
    doc["identity"]  = to_string(id.lhs, id.names) + " ~ " + to_string(id.rhs, id.names);
    doc["variables"] = id.names;
    doc["steps"]     = nlohmann::json::array();
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const&    s = d.steps[i];
      nlohmann::json sigma;
      for (std::size_t v = 0; v < kBasisVariables; ++v) {
        sigma[kVarNames[v]] = to_string(s.sigma[v], id.names);
      }
      doc["steps"].push_back({{"index", i + 1},
                              {"identity", std::string(1, tag_name(s.used))},
                              {"direction", direction_name(s.direction)},
                              {"prefix", to_string(s.prefix, id.names)},
                              {"suffix", to_string(s.suffix, id.names)},
                              {"sigma", sigma},
                              {"before", to_string(s.before, id.names)},
                              {"after", to_string(s.after, id.names)}});
    }
    return doc.dump(2);
  }

  DerivationDocument derivation_from_json(std::string_view text) {
    static constexpr char const* kVarNames[] = {"x", "y", "z", "t"};
    DerivationDocument result;
    try {
      auto const doc = nlohmann::json::parse(text);
      auto&      names = result.identity.names;
      if (doc.contains("variables")) {
        names = doc.at("variables").get<std::vector<std::string>>();
      }
      Identity const parsed = [&] {
        std::string const s = doc.at("identity").get<std::string>();
        auto const        sep = s.find('~');
        if (sep == std::string::npos) {
          throw ParseError("identity must have the form 'u ~ v'");
        }
        Identity id;
        id.names = names;
        id.lhs   = parse_pattern(s.substr(0, sep), id.names);
        id.rhs   = parse_pattern(s.substr(sep + 1), id.names);
        return id;
      }();
      result.identity = parsed;
      auto pattern    = [&](nlohmann::json const& j) {
        return parse_pattern(j.get<std::string>(), names);
      };
      for (auto const& s : doc.at("steps")) {
        DerivationStep step;
        step.used      = parse_tag(s.at("identity").get<std::string>());
        step.direction = parse_direction(s.at("direction").get<std::string>());
        step.prefix    = pattern(s.at("prefix"));
        step.suffix    = pattern(s.at("suffix"));
        for (std::size_t v = 0; v < kBasisVariables; ++v) {
          step.sigma[v] = pattern(s.at("sigma").at(kVarNames[v]));
        }
        step.before = pattern(s.at("before"));
        step.after  = pattern(s.at("after"));
        result.derivation.steps.push_back(std::move(step));
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("bad derivation JSON: ") + e.what());
    }
    return result;
  }

}  // namespace hypo
