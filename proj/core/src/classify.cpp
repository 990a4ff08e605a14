#include "progressio/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "progressio/error.hpp"
#include "progressio/group_expr.hpp"
#include "progressio/numtheory.hpp"

namespace progressio::classify {

namespace {

using numtheory::is_prime;
using numtheory::prime_power_base;
using spectra::SpectrumKind;

bool is_cunningham_pair(std::uint64_t p, std::uint64_t q) {
  return p == 2 * q - 1 || q == 2 * p - 1;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

void require_odd(FiniteGroup const& g, char const* who) {
  if (g.order() % 2 == 0) {
    throw PreconditionError(std::string(who) + " applies to groups of odd order; got order " +
                            str(g.order()));
  }
}

/// Greedy search for a subgroup of order m inside the elements whose order
/// divides m. Succeeds whenever such a subgroup is a complement to a normal
/// Hall subgroup of order |G|/m.
std::optional<Subgroup> hall_complement(FiniteGroup const& g, std::uint64_t m) {
  Subgroup k = trivial_subgroup(g);
  bool grew = true;
  while (k.order() < m && grew) {
    grew = false;
    for (ElementId y = 1; y < g.order(); ++y) {
      if (k.mask.test(y) || m % g.element_order(y) != 0) continue;
      Subgroup next = extend_subgroup(g, k, y);
      if (m % next.order() == 0) {
        k = std::move(next);
        grew = true;
        break;
      }
    }
  }
  if (k.order() != m) return std::nullopt;
  return k;
}

FrobeniusDecomposition make_decomposition(Subgroup kernel, Subgroup complement) {
  FrobeniusDecomposition d{std::move(kernel), std::move(complement), std::nullopt};
  d.kernel_prime = prime_power_base(d.kernel.order());
  return d;
}

}  // namespace

bool is_cp1(FiniteGroup const& g) {
  for (ElementId x = 1; x < g.order(); ++x)
    if (!is_prime(g.element_order(x))) return false;
  return true;
}

bool has_prime_exponent(FiniteGroup const& g, SubgroupMask const& h) {
  std::uint64_t p = 0;
  bool ok = true;
  h.for_each([&](ElementId x) {
    if (!ok || x == FiniteGroup::identity()) return;
    auto o = g.element_order(x);
    if (p == 0) p = o;
    if (o != p || !is_prime(o)) ok = false;
  });
  return ok;
}

bool is_p_group_of_exponent_p(FiniteGroup const& g) {
  if (g.order() == 1) return true;
  auto p = prime_power_base(g.order());
  if (!p) return false;
  for (ElementId x = 1; x < g.order(); ++x)
    if (g.element_order(x) != *p) return false;
  return true;
}

bool is_fixed_point_free(FiniteGroup const& g, SubgroupMask const& kernel,
                         SubgroupMask const& complement) {
  auto const ks = kernel.indices();
  auto const hs = complement.indices();
  for (ElementId n : ks) {
    if (n == FiniteGroup::identity()) continue;
    for (ElementId h : hs) {
      if (h == FiniteGroup::identity()) continue;
      if (g.product(n, h) == g.product(h, n)) return false;
    }
  }
  return true;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(FiniteGroup const& g) {
  std::uint64_t const order = g.order();
  auto ds = numtheory::divisors(order);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    std::uint64_t const n = *it;
    std::uint64_t const m = order / n;
    if (n == 1 || m == 1 || std::gcd(n, m) != 1 || (n - 1) % m != 0) continue;

    SubgroupMask candidate(g.order());
    std::vector<ElementId> members;
    for (ElementId x = 0; x < g.order(); ++x) {
      if (n % g.element_order(x) == 0) {
        candidate.set(x);
        members.push_back(x);
      }
    }
    if (members.size() != n) continue;
    Subgroup kernel = as_subgroup(g, candidate);
    if (kernel.mask != candidate) continue;

    auto complement = hall_complement(g, m);
    if (!complement) continue;
    if (!is_fixed_point_free(g, kernel.mask, complement->mask)) continue;
    return make_decomposition(std::move(kernel), std::move(*complement));
  }
  return std::nullopt;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(
    FiniteGroup const& g, spectra::SubgroupLattice const& lattice) {
  auto const& entries = lattice.entries();
  SubgroupMask const trivial = g.trivial_mask();
  for (auto n = entries.rbegin(); n != entries.rend(); ++n) {
    if (!n->is_normal || n->order() == 1 || n->order() == g.order()) continue;
    std::size_t const m = g.order() / n->order();
    for (auto const& h : entries) {
      if (h.order() != m) continue;
      if ((h.mask() & n->mask()) != trivial) continue;
      if (!is_fixed_point_free(g, n->mask(), h.mask())) continue;
      return make_decomposition(n->subgroup, h.subgroup);
    }
  }
  return std::nullopt;
}

bool is_minimal_noncyclic(FiniteGroup const& g, spectra::SubgroupLattice const& lattice) {
  if (is_cyclic(g)) return false;
  for (auto const* e : lattice.proper()) {
    bool cyclic = false;
    e->mask().for_each([&](ElementId x) {
      if (g.element_order(x) == e->order()) cyclic = true;
    });
    if (!cyclic) return false;
  }
  return true;
}

bool is_minimal_noncyclic(FiniteGroup const& g, std::size_t cap) {
  if (is_cyclic(g)) return false;
  return is_minimal_noncyclic(g, spectra::enumerate_subgroups(g, cap));
}

bool matches_minimal_noncyclic_list(FiniteGroup const& g, std::string* description) {
  auto describe = [&](std::string text) {
    if (description) *description = std::move(text);
    return true;
  };
  if (description) description->clear();
  std::size_t const n = g.order();
  auto const primes = numtheory::prime_divisors(n);
  if (primes.size() == 1 && n == primes[0] * primes[0] && !is_cyclic(g)) {
    return describe("C" + str(primes[0]) + " x C" + str(primes[0]));
  }
  if (n == 8 && !is_abelian(g)) {
    std::size_t involutions = 0;
    for (ElementId x = 0; x < n; ++x) involutions += g.element_order(x) == 2;
    if (involutions == 1) return describe("Q8");
  }
  if (primes.size() != 2 || is_abelian(g)) return false;

  // <a> x| <b> with |a| = p, |b| = q^m and b^q central.
  for (int swap = 0; swap < 2; ++swap) {
    std::uint64_t const p = primes[swap];
    std::uint64_t const q = primes[1 - swap];
    if ((n / p) % p == 0) continue;
    std::uint64_t const qm = n / p;
    if (prime_power_base(qm) != q) continue;
    std::optional<ElementId> a, b;
    std::size_t order_p = 0;
    for (ElementId x = 0; x < n; ++x) {
      auto const o = g.element_order(x);
      if (o == p) {
        ++order_p;
        if (!a) a = x;
      }
      if (o == qm && !b) b = x;
    }
    if (order_p != p - 1 || !a || !b) continue;
    ElementId bq = FiniteGroup::identity();
    for (std::uint64_t i = 0; i < q; ++i) bq = g.product(bq, *b);
    if (g.product(bq, *a) != g.product(*a, bq)) continue;
    return describe("C" + str(p) + " x| C" + str(qm) + " acting with order " + str(q));
  }
  return false;
}

ClassificationVerdict theorem_1_1_verdict(FiniteGroup const& g) {
  require_odd(g, "theorem 1.1");
  ClassificationVerdict v;
  v.spectrum_used = SpectrumKind::Element;
  v.spectrum = spectra::element_order_spectrum(g);
  v.ap = is_arithmetic_progression(v.spectrum);

  if (is_p_group_of_exponent_p(g)) {
    v.structure_match = true;
    v.structure_description = g.order() == 1
                                  ? "trivial group"
                                  : "p-group of exponent " + str(*prime_power_base(g.order()));
  } else if (auto d = frobenius_decomposition(g)) {
    std::string desc = "Frobenius [" + str(d->kernel_order()) + "]" + str(d->complement_order());
    std::uint64_t const q = d->complement_order();
    if (!d->kernel_prime) {
      desc += " kernel not a p-group";
    } else if (!is_prime(q)) {
      desc += " complement order not prime";
    } else if (!has_prime_exponent(g, d->kernel.mask)) {
      desc += " kernel exponent exceeds " + str(*d->kernel_prime);
    } else {
      std::uint64_t const p = *d->kernel_prime;
      if (p == 2 * q - 1) {
        v.structure_match = true;
        desc += " exponent-p kernel with p=2q-1";
      } else if (q == 2 * p - 1) {
        v.structure_match = true;
        desc += " exponent-p kernel with q=2p-1";
      } else {
        desc += " but " + str(p) + "!=2*" + str(q) + "-1 and " + str(q) + "!=2*" + str(p) + "-1";
      }
    }
    v.structure_description = std::move(desc);
  } else {
    v.structure_description = "neither an exponent-p p-group nor Frobenius";
  }
  v.consistent = v.ap.is_ap == v.structure_match;
  return v;
}

bool theorem_1_2_structure(FiniteGroup const& g, std::string* description) {
  std::uint64_t const n = g.order();
  auto const primes = numtheory::prime_divisors(n);
  std::string desc;
  bool match = false;
  bool const cyclic = is_cyclic(g);

  if (primes.size() == 1 && n == primes[0] * primes[0] && !cyclic && is_abelian(g) &&
      is_p_group_of_exponent_p(g)) {
    match = true;
    desc = "C" + str(primes[0]) + " x C" + str(primes[0]);
  } else if (cyclic && primes.size() == 1 && (n == primes[0] || n == primes[0] * primes[0])) {
    match = true;
    desc = "cyclic C" + str(n) + " of prime-power order p^" + (n == primes[0] ? "1" : "2");
  } else if (cyclic && primes.size() == 2 && n == primes[0] * primes[1]) {
    std::uint64_t const p = primes[0], q = primes[1];
    match = is_cunningham_pair(p, q);
    desc = "cyclic C" + str(n) + (match ? " with q=2p-1" : " but " + str(q) + "!=2*" + str(p) + "-1");
  } else if (cyclic) {
    desc = "cyclic C" + str(n) + " not of order p or p^2 or pq";
  } else {
    desc = "noncyclic and not C_p x C_p";
  }
  if (description) *description = std::move(desc);
  return match;
}

ClassificationVerdict theorem_1_2_verdict(FiniteGroup const& g, SpectrumKind which,
                                          spectra::SubgroupLattice const& lattice) {
  require_odd(g, "theorem 1.2");
  if (g.order() == 1) throw PreconditionError("theorem 1.2 needs a nontrivial group");
  if (which != SpectrumKind::Subgroup && which != SpectrumKind::AbelianSubgroup) {
    throw PreconditionError("theorem 1.2 is stated for the s and as spectra only");
  }
  ClassificationVerdict v;
  v.spectrum_used = which;
  v.spectrum = which == SpectrumKind::Subgroup
                   ? spectra::subgroup_order_spectrum(lattice)
                   : spectra::abelian_subgroup_order_spectrum(lattice);
  v.ap = is_arithmetic_progression(v.spectrum);
  v.structure_match = theorem_1_2_structure(g, &v.structure_description);
  v.consistent = v.ap.is_ap == v.structure_match;
  return v;
}

ClassificationVerdict theorem_1_2_verdict(FiniteGroup const& g, SpectrumKind which,
                                          std::size_t cap) {
  require_odd(g, "theorem 1.2");
  return theorem_1_2_verdict(g, which, spectra::enumerate_subgroups(g, cap));
}

LucidoResult lucido_check(FiniteGroup const& g) {
  LucidoResult r;
  auto const primes = numtheory::prime_divisors(g.order());
  if (primes.size() < 3 || !is_solvable(g)) return r;
  r.applicable = true;
  r.holds = true;
  Spectrum const pe = spectra::element_order_spectrum(g);
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      for (std::size_t c = b + 1; c < primes.size(); ++c) {
        std::array<std::uint64_t, 3> products{primes[a] * primes[b], primes[a] * primes[c],
                                              primes[b] * primes[c]};
        std::sort(products.begin(), products.end());
        auto hit = std::find_if(products.begin(), products.end(),
                                [&](std::uint64_t v) { return pe.contains(v); });
        if (hit == products.end()) {
          r.holds = false;
          r.witness.reset();
          return r;
        }
        if (!r.witness) r.witness = *hit;
      }
    }
  }
  return r;
}

FiniteGroup reference_group(std::string_view name) {
  static const std::map<std::string_view, std::string_view> table{
      {"C2", "C(2)"},         {"C3", "C(3)"},       {"C4", "C(4)"},
      {"C5", "C(5)"},         {"C6", "C(6)"},       {"C7", "C(7)"},
      {"C2^2", "ElemAb(2,2)"}, {"C2xC2", "ElemAb(2,2)"},
      {"S3", "S(3)"},         {"S4", "S(4)"},       {"S5", "S(5)"},
      {"S6", "S(6)"},         {"A4", "A(4)"},       {"A5", "A(5)"},
      {"A6", "A(6)"},         {"A7", "A(7)"},       {"Q8", "Q8"}};
  auto it = table.find(name);
  if (it == table.end()) {
    throw PreconditionError("unknown reference group '" + std::string(name) + "'");
  }
  return build(parse_group_expr(it->second));
}

SpotCheckReport theorem_ABC_spot_check(std::string_view name, SpectrumKind kind,
                                       std::uint64_t expected_n, std::size_t cap) {
  FiniteGroup const g = reference_group(name);
  SpotCheckReport r;
  r.name = std::string(name);
  r.kind = kind;
  r.expected_n = expected_n;
  r.computed = spectra::compute(g, kind, cap);
  r.pass = r.computed == Spectrum::consecutive(expected_n);
  return r;
}

}  // namespace progressio::classify
