#pragma once

#include <stdexcept>
#include <string>

namespace hypo {

  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Malformed textual input (words, identities, tables, JSON documents).
  struct ParseError : Error {
    using Error::Error;
  };

  // A search space or closure exceeded its configured bound. This says the
  // input was too large, not that the answer is negative.
  struct ResourceLimitError : Error {
    using Error::Error;
  };

  // A derivation step did not splice, or the derivation engine reached a
  // state its case analysis does not cover.
  struct DerivationError : Error {
    using Error::Error;
  };

}  // namespace hypo
