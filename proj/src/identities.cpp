#include "hypo/identities.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hypo/congruence.hpp"
#include "hypo/errors.hpp"

namespace hypo {

  namespace {

    bool admits_pair(Pattern const& p, Var x, Var y) {
      bool seen_x = false;
      for (Var v : p) {
        if (seen_x && v == y) {
          return true;
        }
        seen_x = seen_x || v == x;
      }
      return false;
    }

    std::vector<std::size_t> counts(Pattern const& p, std::size_t n) {
      std::vector<std::size_t> result(n, 0);
      for (Var v : p) {
        ++result[v];
      }
      return result;
    }

    bool is_identifier_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }

    bool is_identifier_rest(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '_'
             || c == '\'';
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

    Pattern rename(Pattern const& p, std::vector<Var> const& map) {
      Pattern result;
      result.reserve(p.size());
      for (Var v : p) {
        result.push_back(map[v]);
      }
      return result;
    }

  }  // namespace

  std::vector<std::string> default_variable_names(std::size_t n) {
    static std::vector<std::string> const small = {"x", "y", "z", "t"};
    if (n <= small.size()) {
      return {small.begin(), small.begin() + static_cast<std::ptrdiff_t>(n)};
    }
    std::vector<std::string> result;
    for (std::size_t i = 1; i <= n; ++i) {
      result.push_back("x" + std::to_string(i));
    }
    return result;
  }

  Pattern parse_pattern(std::string_view text, std::vector<std::string>& names) {
    text = trim(text);
    Pattern result;
    if (text == "ε") {
      return result;
    }
    std::size_t i = 0;
    while (i < text.size()) {
      char const c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (!is_identifier_start(c)) {
        std::size_t j = i + 1;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        throw ParseError("unexpected token '" + std::string(text.substr(i, j - i))
                         + "' in pattern");
      }
      std::size_t j = i + 1;
      while (j < text.size() && is_identifier_rest(text[j])) {
        ++j;
      }
      std::string name(text.substr(i, j - i));
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        if (names.size() > 255) {
          throw ParseError("too many variables (at most 256)");
        }
        names.push_back(name);
        it = std::prev(names.end());
      }
      result.push_back(static_cast<Var>(it - names.begin()));
      i = j;
    }
    return result;
  }

  Identity parse_identity(std::string_view text) {
    auto const sep = text.find('~');
    if (sep == std::string_view::npos) {
      throw ParseError("identity must have the form 'u ~ v'");
    }
    if (text.find('~', sep + 1) != std::string_view::npos) {
      throw ParseError("identity has more than one '~'");
    }
    Identity id;
    id.lhs = parse_pattern(text.substr(0, sep), id.names);
    id.rhs = parse_pattern(text.substr(sep + 1), id.names);
    return id;
  }

  std::string to_string(Pattern const& p, std::vector<std::string> const& names) {
    std::string result;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) {
        result += ' ';
      }
      result += names.at(p[i]);
    }
    return result;
  }

  std::string to_string(Identity const& id) {
    auto side = [&](Pattern const& p) {
      return p.empty() ? std::string("ε") : to_string(p, id.names);
    };
    return side(id.lhs) + " ~ " + side(id.rhs);
  }

  bool is_trivial(Identity const& id) {
    return id.lhs == id.rhs;
  }

  bool is_balanced(Identity const& id) {
    return counts(id.lhs, id.names.size()) == counts(id.rhs, id.names.size());
  }

  std::vector<Var> occurring_variables(Identity const& id) {
    std::vector<bool> occurs(id.names.size(), false);
    for (Var v : id.lhs) {
      occurs[v] = true;
    }
    for (Var v : id.rhs) {
      occurs[v] = true;
    }
    std::vector<Var> result;
    for (std::size_t v = 0; v < occurs.size(); ++v) {
      if (occurs[v]) {
        result.push_back(static_cast<Var>(v));
      }
    }
    return result;
  }

  HypoVerdict check_in_hypo(Identity const& id) {
    HypoVerdict verdict;
    if (!is_balanced(id)) {
      verdict.holds  = false;
      verdict.reason = HypoVerdict::Reason::unbalanced;
      return verdict;
    }
    auto const vars = occurring_variables(id);
    for (Var x : vars) {
      for (Var y : vars) {
        if (x != y && admits_pair(id.lhs, x, y) != admits_pair(id.rhs, x, y)) {
          verdict.holds  = false;
          verdict.reason = HypoVerdict::Reason::subsequence_mismatch;
          verdict.x      = x;
          verdict.y      = y;
          return verdict;
        }
      }
    }
    return verdict;
  }

  bool holds_in_hypo(Identity const& id) {
    return check_in_hypo(id).holds;
  }

  std::string describe(HypoVerdict const& verdict, Identity const& id) {
    switch (verdict.reason) {
      case HypoVerdict::Reason::none:
        return "holds";
      case HypoVerdict::Reason::unbalanced:
        return "does not hold: unbalanced";
      case HypoVerdict::Reason::subsequence_mismatch:
        return "does not hold: pair (" + id.names.at(verdict.x) + ","
               + id.names.at(verdict.y) + ") subsequence mismatch";
    }
    return "?";
  }

  Word evaluate(Pattern const& p, Evaluation const& assignment) {
    Word result;
    for (Var v : p) {
      auto const& image = assignment.at(v);
      result.insert(result.end(), image.begin(), image.end());
    }
    return result;
  }

  EvaluationResult holds_by_evaluation(Identity const&        id,
                                       std::span<Word const> candidates,
                                       std::size_t           max_assignments) {
    std::size_t const k = id.names.size();
    std::size_t const m = candidates.size();
    std::size_t       space = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (m != 0 && space > max_assignments / m) {
        throw ResourceLimitError("assignment space exceeds "
                                 + std::to_string(max_assignments));
      }
      space *= m;
    }
    if (m == 0 && k > 0) {
      return {};
    }
    std::vector<std::size_t> index(k, 0);
    Evaluation               assignment(k);
    while (true) {
      for (std::size_t v = 0; v < k; ++v) {
        assignment[v] = candidates[index[v]];
      }
      if (canonical_form(evaluate(id.lhs, assignment))
          != canonical_form(evaluate(id.rhs, assignment))) {
        return {false, assignment};
      }
      std::size_t v = k;
      while (v > 0 && index[v - 1] + 1 == m) {
        index[v - 1] = 0;
        --v;
      }
      if (v == 0) {
        break;
      }
      ++index[v - 1];
    }
    return {};
  }

  EvaluationResult holds_in_hypo_n(Identity const& id,
                                   Letter          n,
                                   std::size_t     cap,
                                   std::size_t     max_assignments) {
    auto const candidates = all_words(n, cap);
    return holds_by_evaluation(id, candidates, max_assignments);
  }

  Pattern restrict_to_vars(Pattern const& p, Var x, Var y) {
    Pattern result;
    std::copy_if(p.begin(), p.end(), std::back_inserter(result), [&](Var v) {
      return v == x || v == y;
    });
    return result;
  }

  bool two_variable_form_check(Identity const& id) {
    if (occurring_variables(id).size() != 2) {
      throw std::invalid_argument(
          "two-variable form check needs exactly two variables");
    }
    if (is_trivial(id)) {
      return true;
    }
    if (!is_balanced(id)) {
      return false;
    }
    // x^a y^b and y^b x^a are the patterns made of at most two blocks
    auto blocks = [](Pattern const& p) {
      std::size_t n = p.empty() ? 0 : 1;
      for (std::size_t i = 1; i < p.size(); ++i) {
        n += p[i] != p[i - 1] ? 1 : 0;
      }
      return n;
    };
    return blocks(id.lhs) > 2 && blocks(id.rhs) > 2;
  }

  Identity canonical_representative(Identity const& id) {
    auto const vars = occurring_variables(id);
    std::size_t const k = vars.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::pair<Pattern, Pattern>> best;
    do {
      std::vector<Var> map(id.names.size(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        map[vars[i]] = static_cast<Var>(perm[i]);
      }
      Pattern u = rename(id.lhs, map);
      Pattern v = rename(id.rhs, map);
      std::pair<Pattern, Pattern> candidate
          = u <= v ? std::pair{u, v} : std::pair{v, u};
      if (!best || candidate < *best) {
        best = std::move(candidate);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Identity{default_variable_names(k), best->first, best->second};
  }

  std::vector<Identity> enumerate_identities(std::size_t num_vars,
                                             std::size_t length,
                                             std::size_t max_patterns) {
    if (num_vars == 0) {
      return {};
    }
    std::size_t space = 1;
    for (std::size_t i = 0; i < length; ++i) {
      if (space > max_patterns / num_vars) {
        throw ResourceLimitError("pattern space exceeds "
                                 + std::to_string(max_patterns));
      }
      space *= num_vars;
    }
    if (num_vars > 256) {
      throw std::invalid_argument("at most 256 variables");
    }
    // patterns using every variable, grouped by content
    std::map<std::vector<std::size_t>, std::vector<Pattern>> groups;
    Pattern p(length, 0);
    while (true) {
      auto c = counts(p, num_vars);
      if (std::none_of(c.begin(), c.end(), [](std::size_t n) { return n == 0; })) {
        groups[c].push_back(p);
      }
      std::size_t i = length;
      while (i > 0 && p[i - 1] + 1u == num_vars) {
        p[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++p[i - 1];
    }
    auto const names = default_variable_names(num_vars);
    std::set<std::pair<Pattern, Pattern>> found;
    for (auto const& [c, group] : groups) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          Identity id{names, group[i], group[j]};
          if (holds_in_hypo(id)) {
            auto rep = canonical_representative(id);
            found.emplace(std::move(rep.lhs), std::move(rep.rhs));
          }
        }
      }
    }
    std::vector<Identity> result;
    for (auto const& [u, v] : found) {
      result.push_back(Identity{names, u, v});
    }
    return result;
  }

  Identity shortest_identity_witness(std::size_t num_vars) {
    if (num_vars < 2) {
      throw std::invalid_argument("witness needs at least two variables");
    }
    Identity id;
    id.names.push_back("x");
    Pattern middle;
    for (std::size_t i = 1; i < num_vars; ++i) {
      id.names.push_back("a" + std::to_string(i));
      middle.push_back(static_cast<Var>(i));
    }
    id.lhs.push_back(0);
    id.lhs.insert(id.lhs.end(), middle.begin(), middle.end());
    id.lhs.insert(id.lhs.end(), {0, 0});
    id.rhs = {0, 0};
    id.rhs.insert(id.rhs.end(), middle.begin(), middle.end());
    id.rhs.push_back(0);
    return id;
  }

  ShortestIdentities shortest_identities(std::size_t num_vars,
                                         std::size_t max_length,
                                         std::size_t max_patterns) {
    if (num_vars < 2) {
      throw std::invalid_argument(
          "identities in fewer than two variables are all trivial");
    }
    for (std::size_t len = num_vars; len <= max_length; ++len) {
      auto found = enumerate_identities(num_vars, len, max_patterns);
      if (!found.empty()) {
        return {len, std::move(found)};
      }
    }
    throw ResourceLimitError("no identity found up to length "
                             + std::to_string(max_length));
  }

  std::size_t shortest_identity_length(std::size_t num_vars,
                                       std::size_t max_patterns) {
    return shortest_identities(num_vars, 12, max_patterns).length;
  }

}  // namespace hypo
