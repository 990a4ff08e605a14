#include <doctest.h>

#include <numeric>

#include "progressio/classify.hpp"
#include "progressio/constructors.hpp"
#include "progressio/error.hpp"
#include "progressio/group_expr.hpp"
#include "progressio/numtheory.hpp"
#include "progressio/spectra.hpp"
#include "support.hpp"

using namespace progressio;
namespace c = progressio::constructors;

namespace {

Spectrum pe(FiniteGroup const& g) { return spectra::element_order_spectrum(g); }

std::uint64_t exponent(FiniteGroup const& g) {
  std::uint64_t e = 1;
  for (ElementId i = 0; i < g.order(); ++i) e = std::lcm(e, g.element_order(i));
  return e;
}

}  // namespace

TEST_CASE("cyclic") {
  CHECK(c::cyclic(1).order() == 1);
  CHECK(c::cyclic(15).order() == 15);
  CHECK(c::cyclic(25).order() == 25);
  CHECK(c::cyclic(15).degree() == 15);
  CHECK(is_cyclic(c::cyclic(25)));
}

TEST_CASE("elementary abelian") {
  CHECK(c::elementary_abelian(3, 1).order() == 3);
  auto const e52 = c::elementary_abelian(5, 2);
  CHECK(e52.order() == 25);
  CHECK(e52.degree() == 10);
  CHECK(exponent(e52) == 5);
  CHECK(c::elementary_abelian(3, 2).order() == 9);
  CHECK_THROWS_AS(c::elementary_abelian(4, 2), PreconditionError);
}

TEST_CASE("direct product") {
  auto const g = c::nonabelian_pq(7, 3);
  auto const gt = c::direct_product(g, c::cyclic(1));
  CHECK(gt.order() == g.order());
  CHECK(pe(gt) == pe(g));

  auto const c15 = c::direct_product(c::cyclic(3), c::cyclic(5));
  CHECK(c15.order() == 15);
  CHECK(pe(c15) == pe(c::cyclic(15)));
  CHECK(c::direct_product(c15, c::cyclic(7)).order() == 105);
}

TEST_CASE("symmetric and alternating") {
  CHECK(c::alternating(4).order() == 12);
  CHECK(c::alternating(6).order() == 360);
  CHECK(c::symmetric(5).order() == 120);
  CHECK(c::symmetric(1).order() == 1);
  CHECK(c::alternating(3).order() == 3);
}

TEST_CASE("quaternion group") {
  auto const q = c::quaternion8();
  CHECK(q.order() == 8);
  std::size_t four = 0, two = 0;
  for (ElementId i = 0; i < q.order(); ++i) {
    four += q.element_order(i) == 4;
    two += q.element_order(i) == 2;
  }
  CHECK(four == 6);
  CHECK(two == 1);
  auto const lattice = spectra::enumerate_subgroups(q);
  for (auto const& e : lattice.entries()) CHECK(is_normal(q, e.mask()));
  CHECK_FALSE(is_abelian(q));
}

TEST_CASE("nonabelian pq") {
  CHECK(c::nonabelian_pq_multiplier(7, 3) == 2);
  CHECK(c::nonabelian_pq(7, 3).order() == 21);
  CHECK(c::nonabelian_pq_multiplier(13, 3) == 3);
  CHECK(c::nonabelian_pq(13, 3).order() == 39);
  CHECK_THROWS_AS(c::nonabelian_pq(5, 3), PreconditionError);
  CHECK(c::nonabelian_pq(3, 2).order() == 6);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{7, 3}, {11, 5}, {31, 5}, {43, 7}}) {
    auto const g = c::nonabelian_pq(p, q);
    CHECK_FALSE(is_abelian(g));
    CHECK(pe(g) == Spectrum({1, static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(p)}));
  }
}

TEST_CASE("frobenius field action") {
  auto const f75 = c::frobenius_field_action(5, 3);
  CHECK(f75.order() == 75);
  auto const par = c::frobenius_field_parameters(5, 3);
  CHECK(par.b == 2);
  CHECK(par.field_size == 25);

  auto const f21 = c::frobenius_field_action(7, 3);
  CHECK(f21.order() == 21);
  CHECK(c::frobenius_field_parameters(7, 3).b == 1);
  auto const n21 = c::nonabelian_pq(7, 3);
  CHECK(pe(f21) == pe(n21));
  CHECK(spectra::subgroup_order_spectrum(f21) == spectra::subgroup_order_spectrum(n21));

  CHECK(c::frobenius_field_parameters(3, 13).b == 3);
  CHECK(c::frobenius_field_action(3, 13).order() == 351);
  CHECK(c::frobenius_field_action(2, 3).order() == 12);
}

TEST_CASE("field arithmetic is a field") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 3}, {3, 13}, {2, 7}, {3, 5}}) {
    auto const f = c::frobenius_field_parameters(p, q);
    for (std::uint64_t x = 1; x < f.field_size; ++x) {
      std::size_t inverses = 0;
      for (std::uint64_t y = 1; y < f.field_size; ++y) inverses += f.mul(x, y) == 1;
      CHECK(inverses == 1);
    }
    std::uint64_t z = 1;
    for (int i = 0; i < q; ++i) z = f.mul(z, f.multiplier);
    CHECK(z == 1);
    CHECK(f.multiplier != 1);
  }
}

TEST_CASE("p-groups of order p^3") {
  auto const h3 = c::heisenberg(3);
  CHECK(h3.order() == 27);
  CHECK(exponent(h3) == 3);
  CHECK_FALSE(is_abelian(h3));
  auto const m3 = c::modular_maximal(3);
  CHECK(m3.order() == 27);
  CHECK(exponent(m3) == 9);
  CHECK_FALSE(is_abelian(m3));
  auto const h5 = c::heisenberg(5);
  CHECK(h5.order() == 125);
  CHECK(exponent(h5) == 5);
  CHECK(c::modular_maximal(5).order() == 125);
  CHECK_THROWS_AS(c::heisenberg(2), PreconditionError);
}

TEST_CASE("constructor caps") {
  CHECK_THROWS_AS(c::symmetric(9, 1000), CapExceeded);
  CHECK_THROWS_AS(c::cyclic(50, 10), CapExceeded);
  CHECK_THROWS_AS(c::frobenius_field_action(3, 13, 100), CapExceeded);
}

TEST_CASE("group expressions") {
  CHECK(support::group("Frob(5,3)").order() == 75);
  CHECK(support::group("DP(C(3),C(5))").order() == 15);
  CHECK(support::group(" DP( C(3) , DP(C(5), Q8) ) ").order() == 120);
  CHECK_THROWS_AS(support::group("NonAbPQ(5,3)"), PreconditionError);
  CHECK_THROWS_AS(parse_group_expr("Frob(5)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("Frob(5,3"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("Blah(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("C(3) junk"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("DP(C(3))"), ParseError);

  auto const e = parse_group_expr("DP( C(3),Heis(5) )");
  CHECK(render(e) == "DP(C(3),Heis(5))");
  CHECK(parse_group_expr(render(e)) == e);
  CHECK(expected_order(e) == 375);
  CHECK(expected_order(parse_group_expr("Frob(3,5)")) == 405);

  try {
    parse_group_expr("Frob(5,x)");
  } catch (ParseError const& err) {
    CHECK(err.position() == 7);
  }
}

TEST_CASE("constructed orders match closed forms") {
  for (char const* text :
       {"C(1)", "C(49)", "ElemAb(3,4)", "ElemAb(7,2)", "S(4)", "A(5)", "Q8", "NonAbPQ(31,5)",
        "Frob(5,3)", "Frob(3,5)", "Frob(11,3)", "Frob(13,7)", "Heis(5)", "ModMax(5)",
        "DP(Q8,S(3))", "DP(ElemAb(2,3),Frob(2,3))"}) {
    auto const e = parse_group_expr(text);
    CAPTURE(text);
    CHECK(build(e).order() == expected_order(e));
  }
}

TEST_CASE("frobenius instances act fixed-point-freely") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 3}, {7, 3}, {3, 5}, {3, 13}, {13, 7}, {2, 3}, {11, 3}}) {
    auto const g = c::frobenius_field_action(p, q);
    auto const d = classify::frobenius_decomposition(g);
    CAPTURE(p);
    CAPTURE(q);
    REQUIRE(d);
    CHECK(d->complement_order() == static_cast<std::size_t>(q));
    CHECK(d->kernel_prime == static_cast<std::uint64_t>(p));
    // raw definition: no non-identity kernel element commutes with a non-identity complement element
    bool ok = true;
    d->kernel.mask.for_each([&](ElementId k) {
      if (k == FiniteGroup::identity()) return;
      d->complement.mask.for_each([&](ElementId h) {
        if (h != FiniteGroup::identity() && g.product(k, h) == g.product(h, k)) ok = false;
      });
    });
    CHECK(ok);
  }
}
