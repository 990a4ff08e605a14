#include <algorithm>
#include <deque>

#include "progressio/finite_group.hpp"

namespace progressio {

Subgroup trivial_subgroup(FiniteGroup const& g) { return {g.trivial_mask(), {}}; }

Subgroup whole_group(FiniteGroup const& g) {
  std::vector<ElementId> gens;
  for (ElementId id : g.generator_ids())
    if (id != FiniteGroup::identity()) gens.push_back(id);
  return {g.full_mask(), std::move(gens)};
}

Subgroup extend_subgroup(FiniteGroup const& g, Subgroup const& h, ElementId c) {
  if (h.mask.test(c)) return h;

  Subgroup j{h.mask, h.generators};
  j.generators.push_back(c);
  std::vector<ElementId> const members = h.mask.indices();

  // J is a union of left cosets tH; it is closed once s·t lands inside J
  // for every coset representative t and generator s.
  std::vector<ElementId> reps{FiniteGroup::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (ElementId s : j.generators) {
      ElementId y = g.product(s, reps[r]);
      if (j.mask.test(y)) continue;
      for (ElementId m : members) j.mask.set(g.product(y, m));
      reps.push_back(y);
    }
  }
  return j;
}

Subgroup generate_subgroup(FiniteGroup const& g, std::span<ElementId const> gens) {
  Subgroup h = trivial_subgroup(g);
  for (ElementId c : gens) h = extend_subgroup(g, h, c);
  return h;
}

Subgroup as_subgroup(FiniteGroup const& g, SubgroupMask const& mask) {
  Subgroup h = trivial_subgroup(g);
  // largest elements first tends to need fewer generators
  std::vector<ElementId> members = mask.indices();
  std::stable_sort(members.begin(), members.end(), [&](ElementId a, ElementId b) {
    return g.element_order(a) > g.element_order(b);
  });
  for (ElementId x : members) {
    if (h.mask.test(x)) continue;
    h = extend_subgroup(g, h, x);
    if (h.mask == mask) break;
  }
  return h;
}

Subgroup normal_closure(FiniteGroup const& g, std::span<ElementId const> seeds,
                        std::span<ElementId const> conjugators) {
  Subgroup n = generate_subgroup(g, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n.generators.size(); ++i) {
      for (ElementId c : conjugators) {
        ElementId y = g.conjugate(n.generators[i], c);
        if (!n.mask.test(y)) {
          n = extend_subgroup(g, n, y);
          grew = true;
        }
      }
    }
  }
  return n;
}

Subgroup derived_subgroup(FiniteGroup const& g, Subgroup const& k) {
  std::vector<ElementId> commutators;
  for (std::size_t a = 0; a < k.generators.size(); ++a)
    for (std::size_t b = a + 1; b < k.generators.size(); ++b)
      commutators.push_back(g.commutator(k.generators[a], k.generators[b]));
  return normal_closure(g, commutators, k.generators);
}

SubgroupMask derived_subgroup(FiniteGroup const& g) {
  return derived_subgroup(g, whole_group(g)).mask;
}

bool is_solvable(FiniteGroup const& g) {
  Subgroup k = whole_group(g);
  for (;;) {
    if (k.order() == 1) return true;
    Subgroup d = derived_subgroup(g, k);
    if (d.mask == k.mask) return false;
    k = std::move(d);
  }
}

bool is_normal(FiniteGroup const& g, SubgroupMask const& h) {
  bool normal = true;
  for (ElementId c : g.generator_ids()) {
    h.for_each([&](ElementId x) {
      if (normal && !h.test(g.conjugate(x, c))) normal = false;
    });
    if (!normal) return false;
  }
  return true;
}

SubgroupMask centralizer_in(FiniteGroup const& g, ElementId x, SubgroupMask const& h) {
  SubgroupMask out(g.order());
  h.for_each([&](ElementId y) {
    if (g.product(y, x) == g.product(x, y)) out.set(y);
  });
  return out;
}

bool is_subgroup(FiniteGroup const& g, SubgroupMask const& mask) {
  if (mask.size() != g.order() || !mask.test(FiniteGroup::identity())) return false;
  std::vector<ElementId> const members = mask.indices();
  for (ElementId a : members)
    for (ElementId b : members)
      if (!mask.test(g.product(a, b))) return false;
  return true;
}

bool is_abelian(FiniteGroup const& g, SubgroupMask const& mask) {
  std::vector<ElementId> const members = mask.indices();
  return generators_commute(g, members);
}

bool generators_commute(FiniteGroup const& g, std::span<ElementId const> gens) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (g.product(gens[a], gens[b]) != g.product(gens[b], gens[a])) return false;
  return true;
}

bool is_abelian(FiniteGroup const& g) {
  return generators_commute(g, g.generator_ids());
}

bool is_cyclic(FiniteGroup const& g) {
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

}  // namespace progressio
