#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "progressio/finite_group.hpp"

namespace progressio::constructors {

/// One n-cycle on n points. n = 1 gives the trivial group on one point.
FiniteGroup cyclic(std::uint64_t n, std::size_t cap = kDefaultClosureCap);

/// k disjoint p-cycles on p·k points.
FiniteGroup elementary_abelian(std::uint64_t p, std::uint64_t k,
                               std::size_t cap = kDefaultClosureCap);

/// G acting on the first deg G points, H on the next deg H.
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h,
                           std::size_t cap = kDefaultClosureCap);

FiniteGroup symmetric(std::uint64_t n, std::size_t cap = kDefaultClosureCap);
FiniteGroup alternating(std::uint64_t n, std::size_t cap = kDefaultClosureCap);

/// Right-regular representation on 8 points.
FiniteGroup quaternion8();

/// Smallest r in [2, p) of multiplicative order q modulo p. Throws
/// PreconditionError unless p, q are distinct primes with q | p - 1.
std::uint64_t nonabelian_pq_multiplier(std::uint64_t p, std::uint64_t q);

/// ⟨x ↦ x+1, x ↦ r·x⟩ on Z/p, r = nonabelian_pq_multiplier(p, q).
FiniteGroup nonabelian_pq(std::uint64_t p, std::uint64_t q);

/// The data fixing Frob(p, q): the field GF(p^b) with b the multiplicative
/// order of p mod q, built on the smallest monic irreducible of degree b,
/// and the smallest field element of multiplicative order q.
///
/// Field elements are encoded as integers whose base-p digits are the
/// polynomial coefficients, constant term least significant. "Smallest"
/// means smallest in that encoding; for the modulus the leading 1 is
/// dropped before comparing.
struct FieldAction {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t b = 0;
  /// coefficients c_0 .. c_{b-1} of x^b + c_{b-1} x^{b-1} + ... + c_0
  std::vector<std::uint64_t> modulus;
  std::uint64_t field_size = 0;
  std::uint64_t multiplier = 0;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
};

FieldAction frobenius_field_parameters(std::uint64_t p, std::uint64_t q);

/// [GF(p^b)⁺] ⟨ζ⟩ acting on the p^b field points: translations by the
/// basis vectors generate the kernel, multiplication by ζ the complement.
FiniteGroup frobenius_field_action(std::uint64_t p, std::uint64_t q,
                                   std::size_t cap = kDefaultClosureCap);

/// Exponent-p extraspecial group of order p³, acting on (x, y) ∈ F_p² by
/// (x, y) ↦ (x+1, y) and (x, y) ↦ (x, y+x).
FiniteGroup heisenberg(std::uint64_t p, std::size_t cap = kDefaultClosureCap);

/// C_{p²} ⋊ C_p acting on Z/p² by x ↦ x+1 and x ↦ (1+p)·x.
FiniteGroup modular_maximal(std::uint64_t p, std::size_t cap = kDefaultClosureCap);

}  // namespace progressio::constructors
