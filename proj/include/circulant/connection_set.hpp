#ifndef CIRCULANT_CONNECTION_SET_HPP
#define CIRCULANT_CONNECTION_SET_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace circulant {

/// Subset of Z_n defining the circulant digraph Cay(Z_n, S).
class ConnectionSet
{
public:
  ConnectionSet(std::uint64_t n, std::vector<std::uint64_t> members)
    : _n(n), _members(std::move(members))
  {
    if (_n == 0)
      throw std::invalid_argument("ConnectionSet: n must be positive");
    for (auto s : _members)
      if (s >= _n)
        throw std::out_of_range("ConnectionSet: element " + std::to_string(s) +
                                " not in Z_" + std::to_string(_n));
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
  }

  std::uint64_t n() const { return _n; }
  std::vector<std::uint64_t> const &members() const { return _members; }
  std::size_t size() const { return _members.size(); }

  bool contains(std::uint64_t s) const
  {
    return std::binary_search(_members.begin(), _members.end(), s % _n);
  }

  ConnectionSet without_identity() const
  {
    auto m = _members;
    std::erase(m, 0);
    return ConnectionSet(_n, std::move(m));
  }

  /// Image under the group automorphism x -> c*x (c a unit mod n).
  ConnectionSet scaled(std::uint64_t c) const
  {
    std::vector<std::uint64_t> m;
    for (auto s : _members)
      m.push_back(static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * c) % _n));
    return ConnectionSet(_n, std::move(m));
  }

  std::string to_string() const
  {
    std::string out = "n=" + std::to_string(_n) + "; S=";
    for (std::size_t i = 0; i < _members.size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(_members[i]);
    }
    return out;
  }

  friend bool operator==(ConnectionSet const &, ConnectionSet const &) = default;

private:
  std::uint64_t _n;
  std::vector<std::uint64_t> _members;
};

struct ParsedConnectionSet
{
  ConnectionSet set;
  std::vector<std::string> warnings;
};

/// Parses "n=45; S=0,1,15,30". Whitespace is free; an empty "S=" is the empty
/// set. Elements outside [0, n), negatives included, are reduced mod n and
/// reported as warnings.
inline ParsedConnectionSet parse_connection_set(std::string_view text, std::size_t line = 1)
{
  std::size_t pos = 0;
  auto fail = [&](std::string const &msg) -> ParsedConnectionSet {
    throw ParseError(msg, line, pos + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto read_int = [&](bool allow_sign) -> std::int64_t {
    skip_ws();
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::int64_t{1} << 40))
        fail("integer too large");
      ++pos;
    }
    return negative ? -v : v;
  };

  expect('n');
  expect('=');
  auto n = read_int(false);
  if (n <= 0)
    return fail("n must be positive");
  expect(';');
  expect('S');
  expect('=');

  std::vector<std::uint64_t> members;
  std::vector<std::string> warnings;
  skip_ws();
  if (pos < text.size()) {
    while (true) {
      auto column = pos + 1;
      auto v = read_int(true);
      auto r = ((v % n) + n) % n;
      if (r != v)
        warnings.push_back("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": element " + std::to_string(v) +
                           " reduced to " + std::to_string(r) + " mod " + std::to_string(n));
      members.push_back(static_cast<std::uint64_t>(r));
      skip_ws();
      if (pos == text.size())
        break;
      expect(',');
    }
  }
  return {ConnectionSet(static_cast<std::uint64_t>(n), std::move(members)), std::move(warnings)};
}

} // namespace circulant

#endif // CIRCULANT_CONNECTION_SET_HPP
