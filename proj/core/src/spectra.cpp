#include "progressio/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <unordered_set>

#include "progressio/error.hpp"
#include "progressio/numtheory.hpp"

namespace progressio::spectra {

namespace {

SubgroupMask cyclic_mask(FiniteGroup const& g, ElementId x) {
  SubgroupMask m(g.order());
  ElementId y = FiniteGroup::identity();
  do {
    m.set(y);
    y = g.product(y, x);
  } while (y != FiniteGroup::identity());
  return m;
}

bool normalised_by_generators(FiniteGroup const& g, Subgroup const& h) {
  for (ElementId c : g.generator_ids())
    for (ElementId x : h.generators)
      if (!h.mask.test(g.conjugate(x, c))) return false;
  return true;
}

}  // namespace

std::size_t subgroup_cap_from_env() {
  char const* raw = std::getenv(kMaxOrderEnv);
  if (raw == nullptr) return kDefaultSubgroupCap;
  std::size_t value = 0;
  auto const* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultSubgroupCap;
  return value;
}

std::string_view short_name(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::Element: return "e";
    case SpectrumKind::Subgroup: return "s";
    case SpectrumKind::AbelianSubgroup: return "as";
    case SpectrumKind::NormalSubgroup: return "ns";
  }
  return "?";
}

std::optional<SpectrumKind> parse_kind(std::string_view text) {
  if (text == "e") return SpectrumKind::Element;
  if (text == "s") return SpectrumKind::Subgroup;
  if (text == "as") return SpectrumKind::AbelianSubgroup;
  if (text == "ns") return SpectrumKind::NormalSubgroup;
  return std::nullopt;
}

SubgroupLattice::SubgroupLattice(std::size_t group_order, std::vector<LatticeEntry> entries)
    : group_order_(group_order), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](auto const& a, auto const& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.mask() < b.mask();
  });
}

bool SubgroupLattice::contains(SubgroupMask const& mask) const {
  auto const n = mask.count();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{n, &mask},
                             [](LatticeEntry const& e, auto const& key) {
                               if (e.order() != key.first) return e.order() < key.first;
                               return e.mask() < *key.second;
                             });
  return it != entries_.end() && it->mask() == mask;
}

std::vector<LatticeEntry const*> SubgroupLattice::proper() const {
  std::vector<LatticeEntry const*> out;
  for (auto const& e : entries_)
    if (e.order() != group_order_) out.push_back(&e);
  return out;
}

Spectrum element_order_spectrum(FiniteGroup const& g) {
  std::vector<std::uint64_t> orders;
  std::vector<bool> seen;
  for (ElementId x = 0; x < g.order(); ++x) {
    auto o = g.element_order(x);
    if (o >= seen.size()) seen.resize(o + 1, false);
    if (!seen[o]) {
      seen[o] = true;
      orders.push_back(o);
    }
  }
  return Spectrum(std::move(orders));
}

SubgroupLattice enumerate_subgroups(FiniteGroup const& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("subgroup enumeration for a group of order " +
                          std::to_string(g.order()) +
                          " (raise --max-order or " + kMaxOrderEnv + ")",
                      cap);
  }

  std::unordered_set<SubgroupMask, SubgroupMaskHash> seen;
  std::vector<Subgroup> found;
  auto insert = [&](Subgroup s) {
    if (seen.insert(s.mask).second) found.push_back(std::move(s));
  };

  insert(trivial_subgroup(g));

  std::vector<ElementId> seeds;
  {
    std::unordered_set<SubgroupMask, SubgroupMaskHash> cyclic;
    for (ElementId x = 1; x < g.order(); ++x) {
      if (!numtheory::prime_power_base(g.element_order(x))) continue;
      SubgroupMask m = cyclic_mask(g, x);
      if (cyclic.insert(m).second) {
        seeds.push_back(x);
        insert(Subgroup{std::move(m), {x}});
      }
    }
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId c : seeds) {
      if (found[i].mask.test(c)) continue;
      Subgroup joined = extend_subgroup(g, found[i], c);
      insert(std::move(joined));
    }
  }

  std::vector<LatticeEntry> entries;
  entries.reserve(found.size());
  for (auto& s : found) {
    LatticeEntry e;
    e.is_abelian = generators_commute(g, s.generators);
    e.is_normal = normalised_by_generators(g, s);
    e.subgroup = std::move(s);
    entries.push_back(std::move(e));
  }
  return SubgroupLattice(g.order(), std::move(entries));
}

Spectrum subgroup_order_spectrum(SubgroupLattice const& lattice) {
  std::vector<std::uint64_t> v;
  for (auto const* e : lattice.proper()) v.push_back(e->order());
  return Spectrum(std::move(v));
}

Spectrum abelian_subgroup_order_spectrum(SubgroupLattice const& lattice) {
  std::vector<std::uint64_t> v;
  for (auto const* e : lattice.proper())
    if (e->is_abelian) v.push_back(e->order());
  return Spectrum(std::move(v));
}

Spectrum normal_subgroup_order_spectrum(SubgroupLattice const& lattice) {
  std::vector<std::uint64_t> v;
  for (auto const* e : lattice.proper())
    if (e->is_normal) v.push_back(e->order());
  return Spectrum(std::move(v));
}

Spectrum subgroup_order_spectrum(FiniteGroup const& g, std::size_t cap) {
  return subgroup_order_spectrum(enumerate_subgroups(g, cap));
}

Spectrum abelian_subgroup_order_spectrum(FiniteGroup const& g, std::size_t cap) {
  return abelian_subgroup_order_spectrum(enumerate_subgroups(g, cap));
}

Spectrum normal_subgroup_order_spectrum(FiniteGroup const& g, std::size_t cap) {
  return normal_subgroup_order_spectrum(enumerate_subgroups(g, cap));
}

Spectrum compute(FiniteGroup const& g, SpectrumKind kind, std::size_t cap,
                 std::optional<SubgroupLattice>* cache) {
  if (kind == SpectrumKind::Element) return element_order_spectrum(g);
  std::optional<SubgroupLattice> local;
  auto& slot = cache ? *cache : local;
  if (!slot) slot.emplace(enumerate_subgroups(g, cap));
  switch (kind) {
    case SpectrumKind::Subgroup: return subgroup_order_spectrum(*slot);
    case SpectrumKind::AbelianSubgroup: return abelian_subgroup_order_spectrum(*slot);
    case SpectrumKind::NormalSubgroup: return normal_subgroup_order_spectrum(*slot);
    case SpectrumKind::Element: break;
  }
  return element_order_spectrum(g);
}

}  // namespace progressio::spectra
