#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "progressio/permutation.hpp"
#include "progressio/subgroup_mask.hpp"

namespace progressio {

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// Groups up to this order get a full Cayley table at construction.
inline constexpr std::size_t kCayleyTableLimit = 2048;

/// A permutation group with every element enumerated.
///
/// Element 0 is the identity. Elements are laid out breadth-first by word
/// length over the generators; inside one layer they are sorted by their
/// image sequence. The ordering therefore depends only on the generating
/// set, and masks built against a group are stable fixtures.
///
/// Immutable once built; safe to share read-only across threads.
class FiniteGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  std::vector<Permutation> const& generators() const noexcept { return generators_; }
  /// Generators as element indices, in listed order.
  std::vector<ElementId> const& generator_ids() const noexcept { return generator_ids_; }

  std::vector<Permutation> const& elements() const noexcept { return elements_; }
  Permutation const& element(ElementId i) const { return elements_[i]; }

  std::optional<ElementId> index_of(Permutation const& p) const;

  static constexpr ElementId identity() noexcept { return 0; }

  /// Index of element(a) ∘ element(b).
  ElementId product(ElementId a, ElementId b) const {
    if (!cayley_.empty()) return cayley_[std::size_t{a} * order() + b];
    return product_slow(a, b);
  }
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  /// a⁻¹ b⁻¹ a b
  ElementId commutator(ElementId a, ElementId b) const {
    return product(product(inverse(a), inverse(b)), product(a, b));
  }
  /// g h g⁻¹
  ElementId conjugate(ElementId h, ElementId g) const {
    return product(product(g, h), inverse(g));
  }

  std::uint64_t element_order(ElementId a) const { return orders_[a]; }

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

  SubgroupMask trivial_mask() const {
    SubgroupMask m(order());
    m.set(identity());
    return m;
  }
  SubgroupMask full_mask() const { return SubgroupMask::full(order()); }

 private:
  friend FiniteGroup close_group(std::size_t, std::vector<Permutation>, std::size_t);

  ElementId product_slow(ElementId a, ElementId b) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> cayley_;
};

/// Enumerate ⟨generators⟩. Throws CapExceeded when more than `cap` elements
/// appear and PreconditionError when a generator has the wrong degree.
FiniteGroup close_group(std::size_t degree, std::vector<Permutation> generators,
                        std::size_t cap = kDefaultClosureCap);

/// Least k ≥ 1 with g^k = 1.
std::uint64_t element_order(FiniteGroup const& g, ElementId x);

/// A subgroup mask together with a generating list that produced it.
struct Subgroup {
  SubgroupMask mask;
  std::vector<ElementId> generators;

  std::size_t order() const { return mask.count(); }
};

Subgroup trivial_subgroup(FiniteGroup const& g);
Subgroup whole_group(FiniteGroup const& g);

/// ⟨H, c⟩ by Dimino's coset extension. Returns `h` unchanged if c ∈ H.
Subgroup extend_subgroup(FiniteGroup const& g, Subgroup const& h, ElementId c);

/// ⟨gens⟩ as a subgroup of g.
Subgroup generate_subgroup(FiniteGroup const& g, std::span<ElementId const> gens);

/// Re-derive a small generating list for an arbitrary subgroup mask.
Subgroup as_subgroup(FiniteGroup const& g, SubgroupMask const& mask);

/// Smallest subgroup containing `seeds` that is normalised by every
/// element of `conjugators`.
Subgroup normal_closure(FiniteGroup const& g, std::span<ElementId const> seeds,
                        std::span<ElementId const> conjugators);

/// [G, G].
SubgroupMask derived_subgroup(FiniteGroup const& g);
/// [K, K] for a subgroup K of g.
Subgroup derived_subgroup(FiniteGroup const& g, Subgroup const& k);

/// True iff the derived series reaches the trivial subgroup.
bool is_solvable(FiniteGroup const& g);

/// True iff g h g⁻¹ ∈ H for every generator g of G and every h ∈ H.
bool is_normal(FiniteGroup const& g, SubgroupMask const& h);

/// {h ∈ H : hx = xh}
SubgroupMask centralizer_in(FiniteGroup const& g, ElementId x, SubgroupMask const& h);

/// Identity present and closed under products (inverses follow by finiteness).
bool is_subgroup(FiniteGroup const& g, SubgroupMask const& mask);

/// Pairwise commutation of all members.
bool is_abelian(FiniteGroup const& g, SubgroupMask const& mask);

/// Pairwise commutation of the listed generators.
bool generators_commute(FiniteGroup const& g, std::span<ElementId const> gens);

bool is_abelian(FiniteGroup const& g);
bool is_cyclic(FiniteGroup const& g);

}  // namespace progressio
