#include "hypo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypo/basis.hpp"
#include "hypo/congruence.hpp"
#include "hypo/embeddings.hpp"
#include "hypo/errors.hpp"
#include "hypo/finite_monoids.hpp"
#include "hypo/identities.hpp"
#include "hypo/limits.hpp"
#include "hypo/tableau.hpp"

namespace hypo {

  namespace {

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot read '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    std::string show_word(Word const& w) {
      return w.empty() ? std::string("ε") : to_string(w);
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Limits const limits = limits_from_env();

    CLI::App app{"Hypoplactic monoid toolkit", "hypo"};
    app.require_subcommand(1);

    std::string word_arg, u_arg, v_arg, identity_arg, file_arg, table_arg,
        builtin_arg;
    std::string method_arg = "invariants";
    bool        json_flag  = false;
    std::size_t vars_arg = 0, len_arg = 0;
    unsigned    n_arg = 0;

    auto* insert_cmd = app.add_subcommand("insert", "print the P-symbol of a word");
    insert_cmd->add_option("word", word_arg, "word, e.g. 12654768 or '10,2,3'")->required();
    insert_cmd->add_flag("--json", json_flag, "print the tableau as JSON");

    auto* canon_cmd = app.add_subcommand("canon", "print the canonical word of a class");
    canon_cmd->add_option("word", word_arg)->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "decide whether two words are congruent");
    equiv_cmd->add_option("u", u_arg)->required();
    equiv_cmd->add_option("v", v_arg)->required();
    equiv_cmd->add_option("--method", method_arg)
        ->check(CLI::IsMember({"tableau", "invariants", "rewrite"}));

    auto* check_cmd = app.add_subcommand("check", "decide whether an identity holds in hypo");
    check_cmd->add_option("identity", identity_arg, "identity 'u ~ v'")->required();

    auto* derive_cmd = app.add_subcommand("derive", "derive an identity from the basis {L, M, R}");
    derive_cmd->add_option("identity", identity_arg)->required();
    derive_cmd->add_flag("--json", json_flag);

    auto* verify_cmd = app.add_subcommand("verify", "re-check a JSON derivation file");
    verify_cmd->add_option("file", file_arg)->required();

    auto* search_cmd = app.add_subcommand(
        "search", "list the identities with N variables and sides of length L, up to equivalence");
    search_cmd->add_option("--vars", vars_arg)->required();
    search_cmd->add_option("--len", len_arg)->required();

    auto* embed_cmd = app.add_subcommand("embed", "print the image of a word in the product of copies of hypo_2");
    embed_cmd->add_option("word", word_arg)->required();
    embed_cmd->add_option("--n", n_arg)->required();

    auto* finite_cmd = app.add_subcommand("finite-check", "check an identity in a finite monoid");
    auto* table_opt  = finite_cmd->add_option("--table", table_arg, "table file");
    auto* builtin_opt = finite_cmd->add_option(
        "--builtin", builtin_arg, "S, C3, left_zero(k) or right_zero(k)");
    table_opt->excludes(builtin_opt);
    finite_cmd->add_option("identity", identity_arg)->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the worked-example suite");

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kAffirmative : kUsageError;
    }

    try {
      if (insert_cmd->parsed()) {
        auto const t = p_symbol(parse_word(word_arg));
        if (json_flag) {
          out << to_json(t) << '\n';
        } else {
          out << to_text(t);
        }
        return kAffirmative;
      }
      if (canon_cmd->parsed()) {
        out << show_word(canonical_form(parse_word(word_arg))) << '\n';
        return kAffirmative;
      }
      if (equiv_cmd->parsed()) {
        Word const  u      = parse_word(u_arg);
        Word const  v      = parse_word(v_arg);
        EquivMethod method = EquivMethod::invariants;
        if (method_arg == "tableau") {
          method = EquivMethod::tableau;
        } else if (method_arg == "rewrite") {
          method = EquivMethod::rewrite;
        }
        bool const same = equivalent(u, v, method, limits.max_class_size);
        out << (same ? "equivalent" : "not equivalent") << '\n';
        return same ? kAffirmative : kNegative;
      }
      if (check_cmd->parsed()) {
        Identity const id      = parse_identity(identity_arg);
        auto const     verdict = check_in_hypo(id);
        out << describe(verdict, id) << '\n';
        return verdict.holds ? kAffirmative : kNegative;
      }
      if (derive_cmd->parsed()) {
        Identity const id      = parse_identity(identity_arg);
        auto const     verdict = check_in_hypo(id);
        if (!verdict.holds) {
          out << describe(verdict, id) << '\n';
          return kNegative;
        }
        Derivation const d = derive_from_basis(id);
        out << (json_flag ? to_json(d, id) + "\n" : to_text(d, id));
        return kAffirmative;
      }
      if (verify_cmd->parsed()) {
        auto const doc    = derivation_from_json(read_file(file_arg));
        auto const result = verify_derivation(doc.derivation, doc.identity.lhs,
                                              doc.identity.rhs);
        if (result.ok) {
          out << "valid derivation of " << to_string(doc.identity) << " ("
              << doc.derivation.steps.size() << " steps)\n";
          return kAffirmative;
        }
        out << "invalid derivation: " << result.message << '\n';
        return kNegative;
      }
      if (search_cmd->parsed()) {
        auto const found = enumerate_identities(vars_arg, len_arg, limits.max_patterns);
        for (auto const& id : found) {
          out << to_string(id) << '\n';
        }
        out << found.size() << " identities up to renaming and side swap\n";
        return found.empty() ? kNegative : kAffirmative;
      }
      if (embed_cmd->parsed()) {
        out << to_json(phi_n(parse_word(word_arg), n_arg)) << '\n';
        return kAffirmative;
      }
      if (finite_cmd->parsed()) {
        if (table_arg.empty() == builtin_arg.empty()) {
          err << "error: finite-check needs exactly one of --table or --builtin\n";
          return kUsageError;
        }
        MultiplicationTable const t = table_arg.empty()
                                          ? builtin_table(builtin_arg)
                                          : parse_table(read_file(table_arg));
        auto const report = validate_monoid(t);
        if (!report.ok) {
          err << "error: " << describe(report, t) << '\n';
          return kUsageError;
        }
        Identity const id     = parse_identity(identity_arg);
        auto const     result = satisfies(t, id, limits.max_assignments);
        nlohmann::json doc;
        doc["identity"] = to_string(id);
        doc["holds"]    = result.holds;
        if (result.counterexample) {
          nlohmann::json assignment = nlohmann::json::object();
          for (std::size_t v = 0; v < id.names.size(); ++v) {
            assignment[id.names[v]] = t.label((*result.counterexample)[v]);
          }
          doc["counterexample"] = assignment;
          doc["lhs"]            = t.label(result.lhs_value);
          doc["rhs"]            = t.label(result.rhs_value);
        }
        out << doc.dump() << '\n';
        return result.holds ? kAffirmative : kNegative;
      }
      if (selftest_cmd->parsed()) {
        bool all = true;
        for (auto const& check : golden_checks()) {
          out << (check.passed ? "PASS " : "FAIL ") << check.name << '\n';
          all = all && check.passed;
        }
        return all ? kAffirmative : kNegative;
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
    return kUsageError;
  }

}  // namespace hypo
