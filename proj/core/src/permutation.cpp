#include "progressio/permutation.hpp"

#include <cctype>
#include <numeric>

#include "progressio/error.hpp"

namespace progressio {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return unchecked(std::move(images));
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw PreconditionError("image list is not a permutation of 0.." +
                              std::to_string(images_.size()) + "-1");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point x = cycle[k];
      if (x >= degree) {
        throw PreconditionError("cycle point " + std::to_string(x + 1) +
                                " exceeds degree " + std::to_string(degree));
      }
      if (used[x]) {
        throw PreconditionError("point " + std::to_string(x + 1) +
                                " appears in more than one cycle");
      }
      used[x] = true;
      images[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' at column " + std::to_string(i), i);
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) {
        throw ParseError("unterminated cycle at column " + std::to_string(i), i);
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' at column " + std::to_string(i),
                         i);
      }
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) {
          throw ParseError("point out of range 1.." + std::to_string(degree) +
                               " at column " + std::to_string(start),
                           start);
        }
        ++i;
      }
      if (value == 0) {
        throw ParseError("points are 1-based; got 0 at column " +
                             std::to_string(start),
                         start);
      }
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (PreconditionError const& e) {
    throw ParseError(e.what(), 0);
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, std::uint64_t{len});
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::extended(std::size_t new_degree) const {
  return shifted(0, new_degree);
}

Permutation Permutation::shifted(std::size_t offset, std::size_t new_degree) const {
  if (offset + images_.size() > new_degree) {
    throw PreconditionError("shifted permutation does not fit in degree " +
                            std::to_string(new_degree));
  }
  Permutation p = identity(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return p;
}

Permutation compose(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw PreconditionError("cannot compose permutations of degree " +
                            std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(images));
}

std::size_t PermutationHash::operator()(std::span<Point const> images) const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  return (*this)(p.images());
}

}  // namespace progressio
