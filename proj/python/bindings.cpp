#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include "hypo/basis.hpp"
#include "hypo/congruence.hpp"
#include "hypo/embeddings.hpp"
#include "hypo/errors.hpp"
#include "hypo/finite_monoids.hpp"
#include "hypo/identities.hpp"
#include "hypo/tableau.hpp"

namespace py = pybind11;

namespace {

  using WordArg = std::variant<std::string, hypo::Word>;

  hypo::Word to_word(WordArg const& w) {
    if (auto const* s = std::get_if<std::string>(&w)) {
      return hypo::parse_word(*s);
    }
    auto const& word = std::get<hypo::Word>(w);
    if (!hypo::is_valid_word(word)) {
      throw hypo::ParseError("letters are positive integers");
    }
    return word;
  }

  hypo::EquivMethod to_method(std::string const& name) {
    if (name == "tableau") {
      return hypo::EquivMethod::tableau;
    }
    if (name == "invariants") {
      return hypo::EquivMethod::invariants;
    }
    if (name == "rewrite") {
      return hypo::EquivMethod::rewrite;
    }
    throw py::value_error("method must be 'tableau', 'invariants' or 'rewrite'");
  }

  hypo::MultiplicationTable to_table(std::optional<std::string> const& builtin,
                                     std::optional<std::string> const& table) {
    if (builtin.has_value() == table.has_value()) {
      throw py::value_error("pass exactly one of builtin= or table=");
    }
    return builtin ? hypo::builtin_table(*builtin) : hypo::parse_table(*table);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypoplactic monoid: insertion, congruence, identities and the basis {L, M, R}";

  py::register_exception<hypo::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<hypo::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<hypo::DerivationError>(m, "DerivationError", PyExc_RuntimeError);

  m.def("parse_word", &hypo::parse_word, py::arg("text"));
  m.def("format_word", [](hypo::Word const& w) { return hypo::to_string(w); }, py::arg("word"));

  m.def(
      "p_symbol",
      [](WordArg const& w) { return hypo::p_symbol(to_word(w)).rows(); },
      py::arg("word"),
      "Rows of the quasi-ribbon tableau obtained by inserting the letters left to right.");
  m.def(
      "tableau_text",
      [](WordArg const& w) { return hypo::to_text(hypo::p_symbol(to_word(w))); },
      py::arg("word"));
  m.def(
      "reading_word",
      [](std::vector<std::vector<hypo::Letter>> rows) {
        return hypo::reading_word(hypo::QuasiRibbonTableau(std::move(rows)));
      },
      py::arg("rows"));
  m.def(
      "canonical_form",
      [](WordArg const& w) { return hypo::canonical_form(to_word(w)); },
      py::arg("word"));
  m.def(
      "inversions",
      [](WordArg const& w) { return hypo::inversions(to_word(w)); },
      py::arg("word"));
  m.def(
      "equivalent",
      [](WordArg const& u, WordArg const& v, std::string const& method) {
        return hypo::equivalent(to_word(u), to_word(v), to_method(method));
      },
      py::arg("u"),
      py::arg("v"),
      py::arg("method") = "invariants");

  m.def(
      "holds_in_hypo",
      [](std::string const& id) { return hypo::holds_in_hypo(hypo::parse_identity(id)); },
      py::arg("identity"));
  m.def(
      "check",
      [](std::string const& text) {
        auto const id = hypo::parse_identity(text);
        return hypo::describe(hypo::check_in_hypo(id), id);
      },
      py::arg("identity"));
  m.def(
      "enumerate_identities",
      [](std::size_t num_vars, std::size_t length) {
        std::vector<std::string> out;
        for (auto const& id : hypo::enumerate_identities(num_vars, length)) {
          out.push_back(hypo::to_string(id));
        }
        return out;
      },
      py::arg("num_vars"),
      py::arg("length"));
  m.def(
      "shortest_identity_length",
      [](std::size_t n) { return hypo::shortest_identity_length(n); },
      py::arg("num_vars"));

  m.def(
      "derive",
      [](std::string const& text) {
        auto const id = hypo::parse_identity(text);
        return hypo::to_json(hypo::derive_from_basis(id), id);
      },
      py::arg("identity"),
      "Derivation from the basis {L, M, R} as a JSON document.");
  m.def(
      "verify_derivation",
      [](std::string const& json) {
        auto const doc = hypo::derivation_from_json(json);
        return hypo::verify_derivation(doc.derivation, doc.identity.lhs, doc.identity.rhs).ok;
      },
      py::arg("json"));
  m.def(
      "consequence_bfs",
      [](std::string const& text) {
        auto const id = hypo::parse_identity(text);
        return hypo::consequence_bfs(id.lhs, id.rhs);
      },
      py::arg("identity"));

  m.def(
      "phi_n",
      [](WordArg const& w, hypo::Letter n) { return hypo::phi_n(to_word(w), n); },
      py::arg("word"),
      py::arg("n"));
  m.def(
      "non_embedding_witness", &hypo::non_embedding_witness, py::arg("n"));

  m.def(
      "satisfies",
      [](std::string const&         text,
         std::optional<std::string> builtin,
         std::optional<std::string> table) {
        auto const t  = to_table(builtin, table);
        auto const id = hypo::parse_identity(text);
        auto const r  = hypo::satisfies(t, id);
        py::dict   counterexample;
        if (r.counterexample) {
          for (std::size_t v = 0; v < id.names.size(); ++v) {
            counterexample[py::str(id.names[v])] = t.label((*r.counterexample)[v]);
          }
        }
        return py::make_tuple(r.holds, counterexample);
      },
      py::arg("identity"),
      py::kw_only(),
      py::arg("builtin") = py::none(),
      py::arg("table")   = py::none(),
      "Returns (holds, counterexample) where counterexample maps variables to element labels.");
}
