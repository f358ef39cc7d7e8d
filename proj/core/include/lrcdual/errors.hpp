#ifndef LRCDUAL_ERRORS_HPP
#define LRCDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrcdual {

/// Input files or parameter sets that cannot be parsed/validated.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration work would exceed the configured codeword budget.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A k_opt lookup hit a key the backing table does not contain.
class KOptMissingError : public std::runtime_error {
  public:
    explicit KOptMissingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrcdual

#endif
