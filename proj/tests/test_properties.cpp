// Invariants checked across the shipped corpora and random generator sets.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "progressio/classify.hpp"
#include "progressio/numtheory.hpp"
#include "support.hpp"

using namespace progressio;

namespace {

std::vector<support::NamedGroup const*> all_groups() {
  std::vector<support::NamedGroup const*> out;
  for (auto const& g : support::odd_groups()) out.push_back(&g);
  for (auto const& g : support::reference_groups())
    if (g.group.order() <= 720) out.push_back(&g);
  return out;
}

bool divides_factorial(std::uint64_t n, std::size_t degree) {
  for (std::size_t k = 2; k <= degree && n > 1; ++k) n /= std::gcd(n, std::uint64_t{k});
  return n == 1;
}

}  // namespace

TEST_CASE("order divides degree factorial and element orders divide the order") {
  for (auto const* ng : all_groups()) {
    auto const& g = ng->group;
    CAPTURE(ng->name);
    CHECK(divides_factorial(g.order(), g.degree()));
    bool ok = true;
    for (ElementId i = 0; i < g.order(); ++i) ok &= g.order() % g.element_order(i) == 0;
    CHECK(ok);
  }
}

TEST_CASE("closure is independent of generator order and reproducible") {
  std::mt19937 rng(11);
  for (auto const* ng : all_groups()) {
    auto const& g = ng->group;
    if (g.order() > 400) continue;
    auto gens = g.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    auto const h = close_group(g.degree(), gens);
    std::vector<Permutation> a = g.elements(), b = h.elements();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(close_group(g.degree(), g.generators()).elements() == g.elements());
  }
}

TEST_CASE("derived subgroup is normal with abelian quotient") {
  for (auto const* ng : all_groups()) {
    auto const& g = ng->group;
    if (g.order() > 100) continue;
    CAPTURE(ng->name);
    auto const d = derived_subgroup(g);
    CHECK(oracle::is_normal(g, d));
    bool all_in = true;
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b) all_in &= d.test(g.commutator(a, b));
    CHECK(all_in);
  }
}

TEST_CASE("spectrum invariants") {
  for (auto const* ng : all_groups()) {
    auto const& g = ng->group;
    CAPTURE(ng->name);
    auto const lattice = spectra::enumerate_subgroups(g, 720);
    auto const pe = spectra::element_order_spectrum(g);
    auto const ps = spectra::subgroup_order_spectrum(lattice);
    auto const pas = spectra::abelian_subgroup_order_spectrum(lattice);
    auto const pns = spectra::normal_subgroup_order_spectrum(lattice);

    for (auto v : ps.values()) CHECK(g.order() % v == 0);
    for (auto d : pe.values())
      for (auto dd : numtheory::divisors(d)) CHECK(pe.contains(dd));
    for (auto p : numtheory::prime_divisors(g.order())) CHECK(pe.contains(p));
    CHECK(pns.is_subset_of(ps));
    CHECK(pas.is_subset_of(ps));
    for (auto const* s : {&pe, &ps, &pas, &pns}) CHECK(s->contains(1));
    CHECK(pe.values().front() == 1);
  }
}

TEST_CASE("lattice members are subgroups and the lattice is conjugation closed") {
  for (auto const* ng : all_groups()) {
    auto const& g = ng->group;
    if (g.order() > 200) continue;
    CAPTURE(ng->name);
    auto const lattice = spectra::enumerate_subgroups(g);
    CHECK(lattice.contains(g.trivial_mask()));
    CHECK(lattice.contains(g.full_mask()));
    for (auto const& e : lattice.entries()) {
      CHECK(e.mask().test(FiniteGroup::identity()));
      CHECK(g.order() % e.order() == 0);
      if (g.order() <= 81) CHECK(is_subgroup(g, e.mask()));
      for (auto s : g.generator_ids()) {
        SubgroupMask conj(g.order());
        e.mask().for_each([&](ElementId h) { conj.set(g.conjugate(h, s)); });
        CHECK(lattice.contains(conj));
      }
    }
  }
}

TEST_CASE("frobenius kernel order is 1 mod complement order") {
  for (auto const* ng : all_groups()) {
    auto const d = classify::frobenius_decomposition(ng->group);
    if (!d) continue;
    CAPTURE(ng->name);
    CHECK(d->kernel_order() % d->complement_order() == 1);
    CHECK(d->kernel_order() * d->complement_order() == ng->group.order());
  }
}

TEST_CASE("odd CP1 groups fall in exactly one branch") {
  std::size_t seen = 0;
  for (auto const& ng : support::odd_groups()) {
    auto const& g = ng.group;
    if (!classify::is_cp1(g)) continue;
    ++seen;
    CAPTURE(ng.name);
    bool const exp_p = classify::is_p_group_of_exponent_p(g);
    auto const d = classify::frobenius_decomposition(g);
    bool const frob = d && numtheory::is_prime(d->complement_order()) && d->kernel_prime;
    CHECK(exp_p != frob);
  }
  CHECK(seen >= 10);
}

TEST_CASE("minimal non-cyclic odd groups are in the classical list") {
  for (auto const& ng : support::odd_groups()) {
    CAPTURE(ng.name);
    CHECK(classify::is_minimal_noncyclic(ng.group) ==
          classify::matches_minimal_noncyclic_list(ng.group));
  }
}

TEST_CASE("random permutation groups match the closure oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t const degree = 3 + trial % 5;
    std::vector<Permutation> gens;
    std::vector<oracle::Images> raw;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
      raw.emplace_back(img.begin(), img.end());
    }
    auto const g = close_group(degree, gens);
    CHECK(g.order() == oracle::closure(degree, raw).size());
    if (g.order() <= 20) {
      auto const lattice = spectra::enumerate_subgroups(g);
      CHECK(lattice.size() == oracle::subgroups_by_subsets(g).size());
    }
  }
}
