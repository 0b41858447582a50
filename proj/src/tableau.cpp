#include "hypo/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "hypo/errors.hpp"

namespace hypo {

  QuasiRibbonTableau::QuasiRibbonTableau(std::vector<Row> rows)
      : _rows(std::move(rows)) {
    for (std::size_t k = 0; k < _rows.size(); ++k) {
      Row const& row = _rows[k];
      if (row.empty()) {
        throw std::invalid_argument("quasi-ribbon tableau rows must be non-empty");
      }
      if (!is_valid_word(row)) {
        throw std::invalid_argument("quasi-ribbon tableau entries must be >= 1");
      }
      if (!std::is_sorted(row.begin(), row.end())) {
        throw std::invalid_argument("row " + std::to_string(k)
                                    + " is not weakly increasing");
      }
      if (k > 0 && !(_rows[k - 1].back() < row.front())) {
        throw std::invalid_argument("column through rows " + std::to_string(k - 1)
                                    + " and " + std::to_string(k)
                                    + " is not strictly increasing");
      }
    }
  }

  std::vector<std::size_t> QuasiRibbonTableau::offsets() const {
    std::vector<std::size_t> result;
    result.reserve(_rows.size());
    std::size_t offset = 0;
    for (Row const& row : _rows) {
      result.push_back(offset);
      offset += row.size() - 1;
    }
    return result;
  }

  std::size_t QuasiRibbonTableau::number_of_cells() const noexcept {
    std::size_t n = 0;
    for (Row const& row : _rows) {
      n += row.size();
    }
    return n;
  }

  void QuasiRibbonTableau::insert(Letter a) {
    // Read row by row the entries form a weakly increasing sequence, so the
    // right-most and bottom-most entry <= a is the last such entry in that
    // order.
    for (std::size_t k = _rows.size(); k-- > 0;) {
      Row& row = _rows[k];
      if (row.front() > a) {
        continue;
      }
      auto split = std::upper_bound(row.begin(), row.end(), a);
      Row tail(split, row.end());
      row.erase(split, row.end());
      row.push_back(a);
      if (!tail.empty()) {
        _rows.insert(_rows.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                     std::move(tail));
      }
      return;
    }
    // no entry <= a: the whole tableau hangs below a new cell
    _rows.insert(_rows.begin(), Row{a});
  }

  QuasiRibbonTableau insert(QuasiRibbonTableau const& t, Letter a) {
    QuasiRibbonTableau result = t;
    result.insert(a);
    return result;
  }

  QuasiRibbonTableau p_symbol(std::span<Letter const> w) {
    QuasiRibbonTableau result;
    for (Letter a : w) {
      result.insert(a);
    }
    return result;
  }

  Word reading_word(QuasiRibbonTableau const& t) {
    // (column, row, value), ordered by column then from the bottom row up
    std::vector<std::tuple<std::size_t, std::size_t, Letter>> cells;
    cells.reserve(t.number_of_cells());
    auto const offsets = t.offsets();
    for (std::size_t k = 0; k < t.rows().size(); ++k) {
      auto const& row = t.rows()[k];
      for (std::size_t i = 0; i < row.size(); ++i) {
        cells.emplace_back(offsets[k] + i, k, row[i]);
      }
    }
    std::sort(cells.begin(), cells.end(), [](auto const& x, auto const& y) {
      if (std::get<0>(x) != std::get<0>(y)) {
        return std::get<0>(x) < std::get<0>(y);
      }
      return std::get<1>(x) > std::get<1>(y);
    });
    Word result;
    result.reserve(cells.size());
    for (auto const& cell : cells) {
      result.push_back(std::get<2>(cell));
    }
    return result;
  }

  bool tableau_equal(QuasiRibbonTableau const& t1, QuasiRibbonTableau const& t2) {
    return t1 == t2;
  }

  std::string to_text(QuasiRibbonTableau const& t) {
    std::size_t width = 1;
    for (auto const& row : t.rows()) {
      for (Letter a : row) {
        width = std::max(width, std::to_string(a).size());
      }
    }
    std::string result;
    auto const offsets = t.offsets();
    for (std::size_t k = 0; k < t.rows().size(); ++k) {
      std::string line(offsets[k] * (width + 1), ' ');
      auto const& row = t.rows()[k];
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = std::to_string(row[i]);
        if (i + 1 < row.size()) {
          cell.resize(width + 1, ' ');
        }
        line += cell;
      }
      result += line;
      result += '\n';
    }
    return result;
  }

  QuasiRibbonTableau tableau_from_text(std::string_view text) {
    struct Token {
      std::size_t pos;
      std::string value;
    };
    std::vector<std::vector<Token>> lines;
    std::size_t width = 1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      std::vector<Token> tokens;
      std::size_t i = 0;
      while (i < line.size()) {
        if (line[i] == ' ') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') {
          ++j;
        }
        tokens.push_back({i, line.substr(i, j - i)});
        width = std::max(width, j - i);
        i = j;
      }
      if (!tokens.empty()) {
        lines.push_back(std::move(tokens));
      }
    }
    std::vector<QuasiRibbonTableau::Row> rows;
    std::vector<std::size_t> columns;
    for (auto const& tokens : lines) {
      QuasiRibbonTableau::Row row;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto const& token = tokens[i];
        if (token.pos % (width + 1) != 0) {
          throw ParseError("misaligned cell '" + token.value + "'");
        }
        std::size_t const column = token.pos / (width + 1);
        if (i == 0) {
          columns.push_back(column);
        } else if (column != columns.back() + i) {
          throw ParseError("gap before cell '" + token.value + "'");
        }
        Word letters = parse_word(token.value + ",");
        row.push_back(letters.front());
      }
      rows.push_back(std::move(row));
    }
    QuasiRibbonTableau result;
    try {
      result = QuasiRibbonTableau(std::move(rows));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
    if (result.offsets() != columns) {
      throw ParseError("rows are not laid out as a ribbon");
    }
    return result;
  }

  std::string to_json(QuasiRibbonTableau const& t) {
    nlohmann::json doc = nlohmann::json::array();
    auto const offsets = t.offsets();
    for (std::size_t k = 0; k < t.rows().size(); ++k) {
      doc.push_back({{"offset", offsets[k]}, {"row", t.rows()[k]}});
    }
    return doc.dump();
  }

  QuasiRibbonTableau tableau_from_json(std::string_view text) {
    std::vector<QuasiRibbonTableau::Row> rows;
    std::vector<std::size_t> columns;
    try {
      auto const doc = nlohmann::json::parse(text);
      if (!doc.is_array()) {
        throw ParseError("tableau JSON must be an array of rows");
      }
      for (auto const& entry : doc) {
        columns.push_back(entry.at("offset").get<std::size_t>());
        rows.push_back(entry.at("row").get<QuasiRibbonTableau::Row>());
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("bad tableau JSON: ") + e.what());
    }
    QuasiRibbonTableau result;
    try {
      result = QuasiRibbonTableau(std::move(rows));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
    if (result.offsets() != columns) {
      throw ParseError("offsets do not match the ribbon shape");
    }
    return result;
  }

}  // namespace hypo
