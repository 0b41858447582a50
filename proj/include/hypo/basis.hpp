#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypo/identities.hpp"
#include "hypo/limits.hpp"

namespace hypo {

  // The three identities of the finite basis, over the variables
  // x = 0, y = 1, z = 2, t = 3:
  //
  //   L:  x y z x t y  ~  y x z x t y
  //   M:  x z x y t x  ~  x z y x t x
  //   R:  x z y t x y  ~  x z y t y x
  enum class BasisTag { L, M, R };

  enum class Direction { forward, backward };

  struct BasisIdentity {
    BasisTag tag;
    Pattern  lhs;
    Pattern  rhs;
  };

  inline constexpr std::size_t kBasisVariables = 4;

  BasisIdentity const&                basis_identity(BasisTag tag);
  std::array<BasisIdentity, 3> const& basis();

  // The basis identity as an Identity with names x, y, z, t.
  Identity as_identity(BasisTag tag);

  char        tag_name(BasisTag tag);
  BasisTag    parse_tag(std::string_view text);
  std::string_view direction_name(Direction d);
  Direction   parse_direction(std::string_view text);

  // Images of x, y, z, t; any image may be empty.
  using Substitution = std::array<Pattern, kBasisVariables>;

  Pattern substitute(Pattern const& p, Substitution const& sigma);

  // The side being rewritten (lhs for forward) and the side it becomes.
  Pattern const& source_side(BasisTag tag, Direction d);
  Pattern const& target_side(BasisTag tag, Direction d);

  // w = r sigma(p) s with |r| = r_len becomes r sigma(q) s, where (p, q) is
  // the basis identity oriented by d. Throws DerivationError if sigma(p)
  // does not occur at offset r_len.
  Pattern apply_basis(Pattern const&      w,
                      BasisTag            tag,
                      Direction           d,
                      std::size_t         r_len,
                      Substitution const& sigma);

  struct DerivationStep {
    BasisTag     used;
    Direction    direction;
    Pattern      prefix;
    Pattern      suffix;
    Substitution sigma;
    Pattern      before;
    Pattern      after;
  };

  struct Derivation {
    std::vector<DerivationStep> steps;
  };

  struct VerifyResult {
    bool                       ok = true;
    std::optional<std::size_t> failed_step;  // 0-based; empty for endpoint errors
    std::string                message;
  };

  // Checks every splice equation, that consecutive steps chain, and that the
  // chain runs from `from` to `to`.
  VerifyResult verify_derivation(Derivation const& d,
                                 Pattern const&    from,
                                 Pattern const&    to);

  // Builds a derivation of rhs from lhs using only L, M and R. Works left to
  // right: while the current word u differs from v = w y v' past their
  // common prefix w, the leftmost y after w is moved left one adjacent swap
  // at a time, each swap justified by one basis application chosen by which
  // of the two swapped variables occur before and after the swap.
  // Throws std::invalid_argument if the identity does not hold in hypo.
  Derivation derive_from_basis(Identity const& id);

  // Every pattern reachable from w by one application of a basis identity,
  // with x, y ranging over non-empty and z, t over arbitrary patterns.
  std::vector<Pattern> basis_neighbors(Pattern const& w);

  // Breadth-first reachability of rhs from lhs under basis_neighbors.
  // Throws ResourceLimitError when more than max_states patterns are seen.
  bool consequence_bfs(Pattern const& lhs,
                       Pattern const& rhs,
                       std::size_t    max_states = kDefaultMaxFrontier);

  // Numbered text listing, one step per line.
  std::string to_text(Derivation const& d, Identity const& id);

  // {"identity": "...", "variables": [...], "steps": [{"index": 1,
  //   "identity": "M", "direction": "forward", "prefix": "...",
  //   "suffix": "...", "sigma": {"x": "...", ...}, "before": "...",
  //   "after": "..."}, ...]}
  // Patterns are space separated variable names.
  std::string to_json(Derivation const& d, Identity const& id);

  struct DerivationDocument {
    Identity   identity;
    Derivation derivation;
  };

  DerivationDocument derivation_from_json(std::string_view text);

}  // namespace hypo
