#ifndef CIRCULANT_ERROR_HPP
#define CIRCULANT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circulant {

/// Raised when a bounded search or enumeration would exceed its configured cap.
/// The cap is part of the message so that failures can be diagnosed from logs.
class CapacityError : public std::runtime_error
{
public:
  CapacityError(std::string const &what_exceeded, std::size_t cap)
    : std::runtime_error(what_exceeded + " exceeds cap " + std::to_string(cap)),
      _cap(cap)
  {}

  std::size_t cap() const noexcept { return _cap; }

private:
  std::size_t _cap;
};

/// Malformed text input (connection sets, edge lists, group names).
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      _line(line), _column(column)
  {}

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

private:
  std::size_t _line;
  std::size_t _column;
};

} // namespace circulant

#endif // CIRCULANT_ERROR_HPP
