#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exotica/error.hpp"
#include "exotica/polynomial.hpp"

namespace exotica {

/// Syntax or name error in polynomial text; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// x, y, z, u, v, w, t.
const std::vector<std::string>& default_variable_order();

/// Parses the polynomial grammar
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | 'i' | ident | '(' expr ')'
///   rational := int ('/' uint)?
///   ident    := [a-z][a-z0-9_]*
///
/// `i` is the imaginary unit and cannot name a variable. Implicit
/// multiplication ("2x") is rejected.
///
/// With a fixed `context`, any other identifier is an error and the result
/// is expressed over exactly that context. Otherwise the context is the
/// default order restricted to the names used, followed by any further
/// names in order of first appearance.
Polynomial parse_polynomial(std::string_view text,
                            const std::optional<std::vector<std::string>>& context = std::nullopt);

}  // namespace exotica
