#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace progressio {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Points are 0-based internally; the
/// cycle-notation helpers read and write 1-based labels.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  static Permutation identity(std::size_t degree);

  /// Throws PreconditionError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  /// Parse 1-based cycle notation such as "(1 2 3)(4 5)". The empty string
  /// and "()" denote the identity. Throws ParseError with a 0-based column.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  /// Build from 0-based cycles.
  static Permutation from_cycles(
      std::size_t degree, std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Lengths of the nontrivial cycles, in order of their smallest point.
  std::vector<std::size_t> cycle_type() const;

  /// 1-based cycle notation, fixed points omitted, identity rendered "()".
  std::string to_cycle_string() const;

  /// Extend to a larger degree by fixing the new points.
  Permutation extended(std::size_t new_degree) const;

  /// Shift all points by `offset` and embed in degree `new_degree`.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  friend Permutation compose(Permutation const& a, Permutation const& b);
  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& a, Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::vector<Point> images_;
};

/// (a ∘ b)(i) = a(b(i)). Throws PreconditionError on degree mismatch.
Permutation compose(Permutation const& a, Permutation const& b);

inline Permutation operator*(Permutation const& a, Permutation const& b) {
  return compose(a, b);
}

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
  std::size_t operator()(std::span<Point const> images) const noexcept;
};

}  // namespace progressio
