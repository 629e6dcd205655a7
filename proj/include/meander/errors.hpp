#pragma once

#include <stdexcept>
#include <string>

namespace meander {

// Input could not be parsed or violates a structural invariant.
struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAMeander : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A Gauss code with no planar realization.
struct RealizabilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain (wrong parity, wrong kind, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace meander
