#include "progressio/spectrum.hpp"

#include <algorithm>
#include <charconv>

#include "progressio/error.hpp"

namespace progressio {

Spectrum::Spectrum(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!values_.empty() && values_.front() == 0) {
    throw PreconditionError("spectrum values must be positive");
  }
}

bool Spectrum::contains(std::uint64_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool Spectrum::is_subset_of(Spectrum const& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                       values_.end());
}

std::string Spectrum::render(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values_[i]);
  }
  return out;
}

Spectrum Spectrum::parse(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v == 0) {
      throw ParseError("bad spectrum entry '" + std::string(token) + "'", pos);
    }
    values.push_back(v);
    pos = end + 1;
  }
  return Spectrum(std::move(values));
}

Spectrum Spectrum::consecutive(std::uint64_t n) {
  std::vector<std::uint64_t> values(n);
  for (std::uint64_t i = 0; i < n; ++i) values[i] = i + 1;
  return Spectrum(std::move(values));
}

APResult is_arithmetic_progression(Spectrum const& s) {
  auto const& v = s.values();
  APResult r;
  if (v.size() < 2) return r;
  std::uint64_t const d = v[1] - v[0];
  for (std::size_t i = 2; i < v.size(); ++i) {
    if (v[i] - v[i - 1] != d) {
      r.is_ap = false;
      return r;
    }
  }
  r.ratio = d;
  return r;
}

}  // namespace progressio
