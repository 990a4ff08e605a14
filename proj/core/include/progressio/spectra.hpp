#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "progressio/finite_group.hpp"
#include "progressio/spectrum.hpp"

namespace progressio::spectra {

inline constexpr std::size_t kDefaultSubgroupCap = 600;

/// Name of the environment variable overriding kDefaultSubgroupCap.
inline constexpr char const* kMaxOrderEnv = "PROGRESSIO_MAX_ORDER";

/// kDefaultSubgroupCap unless PROGRESSIO_MAX_ORDER holds a positive integer.
std::size_t subgroup_cap_from_env();

enum class SpectrumKind { Element, Subgroup, AbelianSubgroup, NormalSubgroup };

/// "e", "s", "as", "ns"
std::string_view short_name(SpectrumKind kind);
std::optional<SpectrumKind> parse_kind(std::string_view text);

struct LatticeEntry {
  Subgroup subgroup;
  bool is_abelian = false;
  bool is_normal = false;

  std::size_t order() const { return subgroup.order(); }
  SubgroupMask const& mask() const { return subgroup.mask; }
};

/// Every subgroup of a group, sorted by (order, mask).
class SubgroupLattice {
 public:
  SubgroupLattice(std::size_t group_order, std::vector<LatticeEntry> entries);

  std::size_t group_order() const noexcept { return group_order_; }
  std::vector<LatticeEntry> const& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  bool contains(SubgroupMask const& mask) const;
  /// Entries other than the whole group.
  std::vector<LatticeEntry const*> proper() const;

 private:
  std::size_t group_order_;
  std::vector<LatticeEntry> entries_;
};

/// {o(g) : g ∈ G}. No cap: only element orders are needed.
Spectrum element_order_spectrum(FiniteGroup const& g);

/// Seeds with the cyclic subgroups of prime-power order, then joins every
/// known subgroup with every seed it does not contain until no new subgroup
/// appears. Every subgroup is generated by its prime-power cyclic
/// subgroups, so the fixpoint is the full lattice. Throws CapExceeded when
/// |G| > cap.
SubgroupLattice enumerate_subgroups(FiniteGroup const& g,
                                    std::size_t cap = kDefaultSubgroupCap);

Spectrum subgroup_order_spectrum(SubgroupLattice const& lattice);
Spectrum abelian_subgroup_order_spectrum(SubgroupLattice const& lattice);
Spectrum normal_subgroup_order_spectrum(SubgroupLattice const& lattice);

Spectrum subgroup_order_spectrum(FiniteGroup const& g, std::size_t cap = kDefaultSubgroupCap);
Spectrum abelian_subgroup_order_spectrum(FiniteGroup const& g,
                                         std::size_t cap = kDefaultSubgroupCap);
Spectrum normal_subgroup_order_spectrum(FiniteGroup const& g,
                                        std::size_t cap = kDefaultSubgroupCap);

/// The requested order set. A non-null `cache` keeps the lattice between
/// calls; it is filled on first use.
Spectrum compute(FiniteGroup const& g, SpectrumKind kind, std::size_t cap,
                 std::optional<SubgroupLattice>* cache = nullptr);

}  // namespace progressio::spectra
