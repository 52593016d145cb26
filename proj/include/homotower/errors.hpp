#ifndef HOMOTOWER_ERRORS_HPP
#define HOMOTOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homotower {

/// Syntax error in presentation text; line/col are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// A configured cap (coset limit, generator limit, ...) was exhausted.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed tower certificate contradicts a proven consequence of its
/// hypothesis.  This can only mean an implementation bug, so it gets its
/// own type rather than being folded into a generic failure.
class TheoremContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homotower

#endif
