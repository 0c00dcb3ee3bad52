#ifndef CIRCULANT_PERMUTATION_HPP
#define CIRCULANT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace circulant {

using Point = std::uint32_t;

/// Bijection on {0, ..., degree-1} in image form.
///
/// Products act on the right: (a * b)(x) = b(a(x)), i.e. apply a first.
class Permutation
{
public:
  explicit Permutation(std::size_t degree = 0) : _images(degree)
  {
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : _images(std::move(images))
  {
    std::vector<char> hit(_images.size(), 0);
    for (auto x : _images) {
      if (x >= _images.size() || hit[x])
        throw std::invalid_argument("Permutation: image list is not a bijection");
      hit[x] = 1;
    }
  }

  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles)
  {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (auto const &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree)
          throw std::invalid_argument("Permutation: cycle point out of range");
        images[c[i]] = c[(i + 1) % c.size()];
      }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const
  {
    for (Point x = 0; x < _images.size(); ++x)
      if (_images[x] != x)
        return false;
    return true;
  }

  std::size_t fixed_point_count() const
  {
    std::size_t c = 0;
    for (Point x = 0; x < _images.size(); ++x)
      c += _images[x] == x;
    return c;
  }

  Permutation inverse() const
  {
    std::vector<Point> inv(_images.size());
    for (Point x = 0; x < _images.size(); ++x)
      inv[_images[x]] = x;
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Lengths of all cycles, fixed points included.
  std::vector<std::size_t> cycle_lengths() const
  {
    std::vector<std::size_t> out;
    std::vector<char> seen(_images.size(), 0);
    for (Point x = 0; x < _images.size(); ++x) {
      if (seen[x])
        continue;
      std::size_t len = 0;
      for (Point y = x; !seen[y]; y = _images[y]) {
        seen[y] = 1;
        ++len;
      }
      out.push_back(len);
    }
    return out;
  }

  std::uint64_t order() const
  {
    std::uint64_t o = 1;
    for (auto len : cycle_lengths())
      o = std::lcm(o, static_cast<std::uint64_t>(len));
    return o;
  }

  /// Semiregular: <this> acts with all cycles of one length.
  bool is_semiregular() const
  {
    auto lens = cycle_lengths();
    for (auto len : lens)
      if (len != lens.front())
        return false;
    return true;
  }

  friend Permutation operator*(Permutation const &a, Permutation const &b)
  {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch in product");
    std::vector<Point> r(a.degree());
    for (Point x = 0; x < r.size(); ++x)
      r[x] = b._images[a._images[x]];
    return Permutation(std::move(r), Unchecked{});
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

  /// Image form "[1,2,0]".
  std::string to_string() const
  {
    std::string out = "[";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(_images[i]);
    }
    return out + "]";
  }

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : _images(std::move(images)) {}

  std::vector<Point> _images;
};

inline std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << p.to_string();
}

inline Permutation parse_permutation(std::string_view text)
{
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  };
  auto fail = [&](std::string const &msg) {
    throw ParseError(msg, 1, pos + 1);
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '[')
    fail("expected '['");
  ++pos;
  std::vector<Point> images;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return Permutation(std::move(images));
  }
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected a point");
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
      if (v > 0xffffffffu)
        fail("point out of range");
    }
    images.push_back(static_cast<Point>(v));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    fail("expected ',' or ']'");
  }
  try {
    return Permutation(std::move(images));
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what(), 1, 1);
  }
}

} // namespace circulant

template <>
struct std::hash<circulant::Permutation>
{
  std::size_t operator()(circulant::Permutation const &p) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

#endif // CIRCULANT_PERMUTATION_HPP
