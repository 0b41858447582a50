#include "hypo/finite_monoids.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hypo/errors.hpp"

namespace hypo {

  MultiplicationTable::MultiplicationTable(std::vector<std::string>          labels,
                                           std::vector<std::vector<Element>> products,
                                           Element                           identity)
      : _labels(std::move(labels)), _identity(identity) {
    std::size_t const n = _labels.size();
    if (n == 0) {
      throw std::invalid_argument("a monoid has at least one element");
    }
    if (products.size() != n) {
      throw std::invalid_argument("table needs one row per element");
    }
    if (identity >= n) {
      throw std::invalid_argument("identity index out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (_labels[i] == _labels[j]) {
          throw std::invalid_argument("duplicate label '" + _labels[i] + "'");
        }
      }
    }
    _products.reserve(n * n);
    for (auto const& row : products) {
      if (row.size() != n) {
        throw std::invalid_argument("table rows must have one entry per element");
      }
      for (Element e : row) {
        if (e >= n) {
          throw std::invalid_argument("table entry out of range");
        }
        _products.push_back(e);
      }
    }
  }

  MultiplicationTable::Element
  MultiplicationTable::index_of(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      throw std::out_of_range("unknown element '" + std::string(label) + "'");
    }
    return static_cast<Element>(it - _labels.begin());
  }

  MonoidReport validate_monoid(MultiplicationTable const& t) {
    MonoidReport report;
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n && !report.non_associative; ++a) {
      for (std::size_t b = 0; b < n && !report.non_associative; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c))) {
            report.non_associative = {a, b, c};
            break;
          }
        }
      }
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (t.product(e, t.identity()) != e || t.product(t.identity(), e) != e) {
        report.not_neutral = e;
        break;
      }
    }
    report.ok = !report.non_associative && !report.not_neutral;
    return report;
  }

  std::string describe(MonoidReport const& r, MultiplicationTable const& t) {
    if (r.ok) {
      return "valid monoid";
    }
    std::string out;
    if (r.non_associative) {
      auto [a, b, c] = *r.non_associative;
      out += "not associative: (" + t.label(a) + t.label(b) + ")" + t.label(c)
             + " != " + t.label(a) + "(" + t.label(b) + t.label(c) + ")";
    }
    if (r.not_neutral) {
      if (!out.empty()) {
        out += "; ";
      }
      out += t.label(t.identity()) + " is not neutral for "
             + t.label(*r.not_neutral);
    }
    return out;
  }

  MultiplicationTable::Element
  evaluate(MultiplicationTable const&                       t,
           Pattern const&                                   p,
           std::vector<MultiplicationTable::Element> const& assignment) {
    MultiplicationTable::Element result = t.identity();
    for (Var v : p) {
      result = t.product(result, assignment.at(v));
    }
    return result;
  }

  TableEvaluation satisfies(MultiplicationTable const& t,
                            Identity const&            id,
                            std::size_t                max_assignments) {
    if (!validate_monoid(t).ok) {
      throw std::invalid_argument("table is not a monoid: "
                                  + describe(validate_monoid(t), t));
    }
    std::size_t const k = id.names.size();
    std::size_t const n = t.size();
    std::size_t       space = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (space > max_assignments / n) {
        throw ResourceLimitError("assignment space exceeds "
                                 + std::to_string(max_assignments));
      }
      space *= n;
    }
    // digit d stands for element n - 1 - d
    std::vector<std::size_t>                  digits(k, 0);
    std::vector<MultiplicationTable::Element> assignment(k);
    while (true) {
      for (std::size_t v = 0; v < k; ++v) {
        assignment[v] = n - 1 - digits[v];
      }
      auto const l = evaluate(t, id.lhs, assignment);
      auto const r = evaluate(t, id.rhs, assignment);
      if (l != r) {
        return {false, assignment, l, r};
      }
      std::size_t v = k;
      while (v > 0 && digits[v - 1] + 1 == n) {
        digits[v - 1] = 0;
        --v;
      }
      if (v == 0) {
        break;
      }
      ++digits[v - 1];
    }
    return {};
  }

  MultiplicationTable table_s() {
    // 1 a b c 0
    std::vector<std::vector<std::size_t>> products = {
        {0, 1, 2, 3, 4},
        {1, 0, 2, 3, 4},
        {2, 3, 4, 4, 4},
        {3, 2, 4, 4, 4},
        {4, 4, 4, 4, 4},
    };
    return MultiplicationTable({"1", "a", "b", "c", "0"}, std::move(products), 0);
  }

  namespace {
    MultiplicationTable zero_monoid(std::size_t k, bool left) {
      if (k < 2) {
        throw std::invalid_argument("zero monoid needs at least two zero-law elements");
      }
      std::vector<std::string> labels = {"1"};
      for (std::size_t i = 1; i <= k; ++i) {
        labels.push_back((left ? "l" : "r") + std::to_string(i));
      }
      std::vector<std::vector<std::size_t>> products(k + 1,
                                                     std::vector<std::size_t>(k + 1));
      for (std::size_t a = 0; a <= k; ++a) {
        for (std::size_t b = 0; b <= k; ++b) {
          if (a == 0) {
            products[a][b] = b;
          } else if (b == 0) {
            products[a][b] = a;
          } else {
            products[a][b] = left ? a : b;
          }
        }
      }
      return MultiplicationTable(std::move(labels), std::move(products), 0);
    }
  }  // namespace

  MultiplicationTable left_zero_monoid(std::size_t k) {
    return zero_monoid(k, true);
  }

  MultiplicationTable right_zero_monoid(std::size_t k) {
    return zero_monoid(k, false);
  }

  MultiplicationTable c3_monoid() {
    using Map = std::array<int, 3>;
    std::vector<Map> maps;
    for (int f1 = 1; f1 <= 3; ++f1) {
      for (int f2 = 1; f2 <= 3; ++f2) {
        for (int f3 = 1; f3 <= 3; ++f3) {
          bool const order_preserving = f1 <= f2 && f2 <= f3;
          bool const extensive        = f1 >= 1 && f2 >= 2 && f3 >= 3;
          if (order_preserving && extensive) {
            maps.push_back({f1, f2, f3});
          }
        }
      }
    }
    std::vector<std::string> labels;
    std::size_t              identity = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      auto const& f = maps[i];
      labels.push_back(std::to_string(f[0]) + std::to_string(f[1])
                       + std::to_string(f[2]));
      if (f == Map{1, 2, 3}) {
        identity = i;
      }
    }
    std::vector<std::vector<std::size_t>> products(maps.size());
    for (std::size_t a = 0; a < maps.size(); ++a) {
      for (std::size_t b = 0; b < maps.size(); ++b) {
        Map composed;
        for (int x = 0; x < 3; ++x) {
          composed[x] = maps[b][maps[a][x] - 1];  // a first, then b
        }
        auto it = std::find(maps.begin(), maps.end(), composed);
        products[a].push_back(static_cast<std::size_t>(it - maps.begin()));
      }
    }
    return MultiplicationTable(std::move(labels), std::move(products), identity);
  }

  MultiplicationTable builtin_table(std::string_view name) {
    if (name == "S") {
      return table_s();
    }
    if (name == "C3") {
      return c3_monoid();
    }
    auto parse_zero = [&](std::string_view prefix) -> std::optional<std::size_t> {
      if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
      }
      auto rest = name.substr(prefix.size());
      if (rest.empty()) {
        return 2;
      }
      if (rest.front() != '(' || rest.back() != ')') {
        return std::nullopt;
      }
      rest = rest.substr(1, rest.size() - 2);
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || k < 2) {
        return std::nullopt;
      }
      return k;
    };
    if (auto k = parse_zero("left_zero")) {
      return left_zero_monoid(*k);
    }
    if (auto k = parse_zero("right_zero")) {
      return right_zero_monoid(*k);
    }
    throw ParseError("unknown builtin monoid '" + std::string(name) + "'");
  }

  MultiplicationTable parse_table(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       tokens(line);
      std::vector<std::string> fields;
      for (std::string tok; tokens >> tok;) {
        fields.push_back(tok);
      }
      if (!fields.empty()) {
        lines.push_back(std::move(fields));
      }
    }
    if (lines.empty() || lines.front().size() != 2) {
      throw ParseError("table header must be '<size> <neutral label>'");
    }
    std::size_t       n = 0;
    std::string const& size_tok = lines.front()[0];
    auto [ptr, ec] = std::from_chars(size_tok.data(), size_tok.data() + size_tok.size(), n);
    if (ec != std::errc() || ptr != size_tok.data() + size_tok.size() || n == 0) {
      throw ParseError("invalid table size '" + size_tok + "'");
    }
    if (lines.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n) + " table rows, found "
                       + std::to_string(lines.size() - 1));
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back(lines[i][0]);
    }
    auto index = [&](std::string const& label) {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) {
        throw ParseError("unknown element '" + label + "'");
      }
      return static_cast<std::size_t>(it - labels.begin());
    };
    std::size_t const identity = index(lines.front()[1]);
    std::vector<std::vector<std::size_t>> products;
    for (std::size_t i = 1; i <= n; ++i) {
      if (lines[i].size() != n + 1) {
        throw ParseError("row '" + lines[i][0] + "' needs "
                         + std::to_string(n) + " entries");
      }
      std::vector<std::size_t> row;
      for (std::size_t j = 1; j <= n; ++j) {
        row.push_back(index(lines[i][j]));
      }
      products.push_back(std::move(row));
    }
    try {
      return MultiplicationTable(std::move(labels), std::move(products), identity);
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

  std::string to_text(MultiplicationTable const& t) {
    std::string out = std::to_string(t.size()) + " " + t.label(t.identity()) + "\n";
    for (std::size_t a = 0; a < t.size(); ++a) {
      out += t.label(a);
      for (std::size_t b = 0; b < t.size(); ++b) {
        out += " " + t.label(t.product(a, b));
      }
      out += "\n";
    }
    return out;
  }

  bool hypo_vs_c3(Identity const& id, MultiplicationTable const& c3) {
    bool const join_side = is_balanced(id) && satisfies(c3, id).holds;
    return holds_in_hypo(id) == join_side;
  }

}  // namespace hypo
