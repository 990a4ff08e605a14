#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "progressio/error.hpp"
#include "progressio/spectra.hpp"
#include "support.hpp"

using namespace progressio;
using namespace progressio::spectra;

namespace {
Spectrum S(std::vector<std::uint64_t> v) { return Spectrum(std::move(v)); }
}  // namespace

TEST_CASE("Spectrum value type") {
  auto const s = S({5, 1, 3, 3});
  CHECK(s.values() == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(s.render() == "1,3,5");
  CHECK(s.render("|") == "1|3|5");
  CHECK(Spectrum::parse("1, 3,5") == s);
  CHECK(Spectrum::consecutive(4) == S({1, 2, 3, 4}));
  CHECK(s.max() == 5);
  CHECK(S({1, 3}).is_subset_of(s));
  CHECK_THROWS_AS(S({0, 1}), PreconditionError);
  CHECK_THROWS_AS(Spectrum::parse("1,x"), ParseError);
  CHECK(Spectrum().empty());
}

TEST_CASE("arithmetic progression test") {
  auto one = is_arithmetic_progression(S({1}));
  CHECK(one.is_ap);
  CHECK_FALSE(one.ratio);
  auto four = is_arithmetic_progression(S({1, 2, 3, 4}));
  CHECK(four.is_ap);
  CHECK(four.ratio == 1u);
  CHECK_FALSE(is_arithmetic_progression(S({1, 3, 9})).is_ap);
  auto odd = is_arithmetic_progression(S({1, 3, 5}));
  CHECK(odd.is_ap);
  CHECK(odd.ratio == 2u);
  auto two = is_arithmetic_progression(S({1, 25}));
  CHECK(two.is_ap);
  CHECK(two.ratio == 24u);
  CHECK(is_arithmetic_progression(Spectrum()).is_ap);
}

TEST_CASE("element order spectra") {
  CHECK(element_order_spectrum(support::group("A(6)")) == S({1, 2, 3, 4, 5}));
  CHECK(element_order_spectrum(support::group("Frob(5,3)")) == S({1, 3, 5}));
  CHECK(element_order_spectrum(support::group("C(9)")) == S({1, 3, 9}));
  CHECK(element_order_spectrum(support::group("A(7)")) == S({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(enumerate_subgroups(support::group("C(7)")).size() == 2);
  CHECK(enumerate_subgroups(support::group("S(3)")).size() == 6);
  CHECK(enumerate_subgroups(support::group("A(4)")).size() == 10);
  CHECK(enumerate_subgroups(support::group("S(4)")).size() == 30);
  CHECK(enumerate_subgroups(support::group("A(5)")).size() == 59);
  CHECK(enumerate_subgroups(support::group("Q8")).size() == 6);
  CHECK(enumerate_subgroups(support::group("ElemAb(3,3)")).size() == 28);
  CHECK(enumerate_subgroups(support::group("Frob(5,3)")).size() == 34);
}

TEST_CASE("lattice agrees with subset enumeration on small groups") {
  for (char const* text : {"S(3)", "A(4)", "Q8", "DP(C(2),C(4))", "ElemAb(2,3)", "C(16)",
                           "DP(C(2),S(3))", "NonAbPQ(5,2)", "ElemAb(2,4)", "C(15)"}) {
    CAPTURE(text);
    auto const g = support::group(text);
    auto const lattice = enumerate_subgroups(g);
    std::set<std::uint32_t> got;
    for (auto const& e : lattice.entries()) {
      std::uint32_t bits = 0;
      e.mask().for_each([&](ElementId i) { bits |= 1u << i; });
      got.insert(bits);
    }
    CHECK(got == oracle::subgroups_by_subsets(g));
  }
}

TEST_CASE("lattice flags agree with raw checks") {
  for (char const* text : {"S(4)", "Frob(5,3)", "Heis(3)", "DP(S(3),C(3))"}) {
    auto const g = support::group(text);
    auto const lattice = enumerate_subgroups(g);
    for (auto const& e : lattice.entries()) {
      CHECK(e.is_abelian == oracle::is_abelian(g, e.mask()));
      CHECK(e.is_normal == oracle::is_normal(g, e.mask()));
    }
  }
}

TEST_CASE("subgroup order spectra") {
  CHECK(subgroup_order_spectrum(support::group("A(4)")) == S({1, 2, 3, 4}));
  CHECK(subgroup_order_spectrum(support::group("S(3)")) == S({1, 2, 3}));
  CHECK(subgroup_order_spectrum(support::group("C(15)")) == S({1, 3, 5}));
  CHECK(subgroup_order_spectrum(support::group("Frob(5,3)")) == S({1, 3, 5, 25}));
  CHECK(subgroup_order_spectrum(support::group("C(1)")).empty());
}

TEST_CASE("abelian subgroup order spectra") {
  CHECK(abelian_subgroup_order_spectrum(support::group("S(4)")) == S({1, 2, 3, 4}));
  CHECK(abelian_subgroup_order_spectrum(support::group("A(4)")) == S({1, 2, 3, 4}));
  auto const a5 = abelian_subgroup_order_spectrum(support::group("A(5)"));
  CHECK(a5.contains(5));
  CHECK(a5 == S({1, 2, 3, 4, 5}));
}

TEST_CASE("normal subgroup order spectra") {
  CHECK(normal_subgroup_order_spectrum(support::group("A(5)")) == S({1}));
  CHECK(normal_subgroup_order_spectrum(support::group("A(4)")) == S({1, 4}));
  CHECK(normal_subgroup_order_spectrum(support::group("C(15)")) == S({1, 3, 5}));
  CHECK(normal_subgroup_order_spectrum(support::group("S(4)")) == S({1, 4, 12}));
}

TEST_CASE("kind names") {
  CHECK(parse_kind("e") == SpectrumKind::Element);
  CHECK(parse_kind("as") == SpectrumKind::AbelianSubgroup);
  CHECK_FALSE(parse_kind("x"));
  for (auto k : {SpectrumKind::Element, SpectrumKind::Subgroup, SpectrumKind::AbelianSubgroup,
                 SpectrumKind::NormalSubgroup})
    CHECK(parse_kind(short_name(k)) == k);
}

TEST_CASE("compute shares one lattice") {
  auto const g = support::group("S(4)");
  std::optional<SubgroupLattice> cache;
  CHECK(compute(g, SpectrumKind::Element, 600, &cache) == S({1, 2, 3, 4}));
  CHECK_FALSE(cache);
  CHECK(compute(g, SpectrumKind::Subgroup, 600, &cache) == S({1, 2, 3, 4, 6, 8, 12}));
  CHECK(cache);
  CHECK(compute(g, SpectrumKind::NormalSubgroup, 600, &cache) == S({1, 4, 12}));
}

TEST_CASE("subgroup cap") {
  auto const g = support::group("S(5)");
  CHECK_THROWS_AS(enumerate_subgroups(g, 100), CapExceeded);
  try {
    enumerate_subgroups(g, 100);
  } catch (CapExceeded const& e) {
    CHECK(std::string(e.what()).find("PROGRESSIO_MAX_ORDER") != std::string::npos);
  }
  CHECK(enumerate_subgroups(g, 120).size() == 156);
}

TEST_CASE("cap from environment") {
  ::setenv(kMaxOrderEnv, "1234", 1);
  CHECK(subgroup_cap_from_env() == 1234);
  ::setenv(kMaxOrderEnv, "junk", 1);
  CHECK(subgroup_cap_from_env() == kDefaultSubgroupCap);
  ::unsetenv(kMaxOrderEnv);
  CHECK(subgroup_cap_from_env() == kDefaultSubgroupCap);
}
