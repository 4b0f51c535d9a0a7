#ifndef FG_ERRORS_HPP_
#define FG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fg {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word uses a generator outside the ambient alphabet, or two objects
// over different alphabets were combined.
struct RankMismatch : Error {
  using Error::Error;
};

// Malformed textual input (words, graph records, move descriptions).
struct ParseError : Error {
  using Error::Error;
};

// A word was required to lie in a subgroup and does not.
struct NotMember : Error {
  using Error::Error;
};

// An operation required H <= K and the inclusion does not hold.
struct NotSubgroup : Error {
  using Error::Error;
};

struct EmptyWord : Error {
  using Error::Error;
};

// A search exceeded its configured budget; the result is unknown, not false.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A state the theory rules out was reached (e.g. a non-unique minimum
// where uniqueness is guaranteed). Always an implementation bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace fg

#endif  // FG_ERRORS_HPP_
