#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "progressio/finite_group.hpp"
#include "progressio/spectra.hpp"
#include "progressio/spectrum.hpp"

namespace progressio::classify {

/// Every non-identity element has prime order.
bool is_cp1(FiniteGroup const& g);

/// |G| = p^k and every non-identity element has order p. The trivial group
/// qualifies vacuously.
bool is_p_group_of_exponent_p(FiniteGroup const& g);

/// Every non-identity member of h has the same prime order.
bool has_prime_exponent(FiniteGroup const& g, SubgroupMask const& h);

/// G = N ⋊ H with N a proper nontrivial normal subgroup and no non-identity
/// element of H commuting with a non-identity element of N.
struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
  /// Set when |kernel| is a prime power.
  std::optional<std::uint64_t> kernel_prime;

  std::size_t kernel_order() const { return kernel.order(); }
  std::size_t complement_order() const { return complement.order(); }
};

/// Elementwise check that complement acts fixed-point-freely on kernel.
bool is_fixed_point_free(FiniteGroup const& g, SubgroupMask const& kernel,
                         SubgroupMask const& complement);

/// Searches kernels from the largest down. A fixed-point-free action forces
/// |H| | |N| - 1, so the kernel is a normal Hall subgroup and equals
/// {g : o(g) divides |N|}; complements are found by greedy extension inside
/// the elements of order dividing |G|/|N|. No subgroup lattice is needed.
std::optional<FrobeniusDecomposition> frobenius_decomposition(FiniteGroup const& g);

/// Same question answered from a full lattice: every normal member N,
/// largest first, against every member of order |G|/|N| meeting N trivially.
std::optional<FrobeniusDecomposition> frobenius_decomposition(
    FiniteGroup const& g, spectra::SubgroupLattice const& lattice);

/// Not cyclic, every proper subgroup cyclic.
bool is_minimal_noncyclic(FiniteGroup const& g, spectra::SubgroupLattice const& lattice);
bool is_minimal_noncyclic(FiniteGroup const& g,
                          std::size_t cap = spectra::kDefaultSubgroupCap);

/// Membership in the classical list of minimal non-cyclic groups: C_p x C_p,
/// Q8, or <a, b | a^p = b^(q^m) = 1, b^-1 a b = a^r> with r of order q mod p.
/// Decided from element orders alone, without the subgroup lattice.
bool matches_minimal_noncyclic_list(FiniteGroup const& g, std::string* description = nullptr);

struct ClassificationVerdict {
  spectra::SpectrumKind spectrum_used = spectra::SpectrumKind::Element;
  Spectrum spectrum;
  APResult ap;
  bool structure_match = false;
  std::string structure_description;
  /// ap.is_ap == structure_match
  bool consistent = false;
};

/// π_e(G) is an AP iff G is a p-group of exponent p or a Frobenius group
/// with exponent-p Sylow kernel, prime-order complement q and p = 2q - 1 or
/// q = 2p - 1. Never throws on a mismatch: consistent is false instead.
/// Throws PreconditionError for even |G|.
ClassificationVerdict theorem_1_1_verdict(FiniteGroup const& g);

/// π_s(G) (or π_as(G)) is an AP iff G ≅ C_p × C_p or G is cyclic of order
/// p, p² or pq with p = 2q - 1 or q = 2p - 1. `which` must be Subgroup or
/// AbelianSubgroup. Throws PreconditionError for even or trivial G.
ClassificationVerdict theorem_1_2_verdict(FiniteGroup const& g, spectra::SpectrumKind which,
                                          spectra::SubgroupLattice const& lattice);
ClassificationVerdict theorem_1_2_verdict(FiniteGroup const& g, spectra::SpectrumKind which,
                                          std::size_t cap = spectra::kDefaultSubgroupCap);

/// The structural half of theorem_1_2_verdict on its own.
bool theorem_1_2_structure(FiniteGroup const& g, std::string* description = nullptr);

struct LucidoResult {
  bool applicable = false;
  bool holds = false;
  std::optional<std::uint64_t> witness;
};

/// For solvable G with at least three prime divisors: every triple of
/// distinct prime divisors has two whose product is an element order.
LucidoResult lucido_check(FiniteGroup const& g);

/// Named groups for the consecutive-spectrum spot checks: C2..C7, C2^2, S3,
/// S4, S5, S6, A4, A5, A6, A7, Q8. Throws PreconditionError otherwise.
FiniteGroup reference_group(std::string_view name);

struct SpotCheckReport {
  std::string name;
  spectra::SpectrumKind kind = spectra::SpectrumKind::Element;
  std::uint64_t expected_n = 0;
  Spectrum computed;
  bool pass = false;
};

/// Does the chosen spectrum of the named group equal {1, 2, ..., n}?
SpotCheckReport theorem_ABC_spot_check(std::string_view name, spectra::SpectrumKind kind,
                                       std::uint64_t expected_n,
                                       std::size_t cap = spectra::kDefaultSubgroupCap);

}  // namespace progressio::classify
