#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace progressio {

/// A strictly increasing list of positive integers: one of the order sets
/// π_e, π_s, π_as or π_ns of a group.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts and deduplicates. Throws PreconditionError on a zero entry.
  explicit Spectrum(std::vector<std::uint64_t> values);

  std::vector<std::uint64_t> const& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(std::uint64_t v) const;
  bool is_subset_of(Spectrum const& other) const;
  std::uint64_t max() const { return values_.back(); }

  /// "1,3,5" with the chosen separator.
  std::string render(std::string_view sep = ",") const;

  /// Inverse of render(","): a comma-separated list of positive integers.
  static Spectrum parse(std::string_view text);

  /// {1, 2, ..., n}
  static Spectrum consecutive(std::uint64_t n);

  friend bool operator==(Spectrum const&, Spectrum const&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

struct APResult {
  bool is_ap = true;
  /// Common difference, reported whenever the spectrum has at least two
  /// members and is an AP.
  std::optional<std::uint64_t> ratio;

  friend bool operator==(APResult const&, APResult const&) = default;
};

/// Sets with at most two members count as progressions.
APResult is_arithmetic_progression(Spectrum const& s);

}  // namespace progressio
