#include "progressio/finite_group.hpp"

#include <algorithm>
#include <string>

#include "progressio/error.hpp"

namespace progressio {

std::optional<ElementId> FiniteGroup::index_of(Permutation const& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::product_slow(ElementId a, ElementId b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

FiniteGroup close_group(std::size_t degree, std::vector<Permutation> generators,
                        std::size_t cap) {
  for (auto const& gen : generators) {
    if (gen.degree() != degree) {
      throw PreconditionError("generator " + gen.to_cycle_string() + " has degree " +
                              std::to_string(gen.degree()) + ", expected " +
                              std::to_string(degree));
    }
  }
  if (cap == 0) throw CapExceeded("group closure", cap);

  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  // parent[j], via[j]: elements[j] = elements[parent[j]] ∘ generators[via[j]]
  std::vector<ElementId> parent{0};
  std::vector<std::uint32_t> via{0};

  g.elements_.push_back(Permutation::identity(degree));
  g.index_.emplace(g.elements_.front(), 0);

  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    struct Discovery {
      ElementId parent;
      std::uint32_t via;
    };
    std::unordered_map<Permutation, Discovery, PermutationHash> next;
    for (std::size_t x = layer_begin; x < layer_end; ++x) {
      for (std::uint32_t k = 0; k < g.generators_.size(); ++k) {
        Permutation y = compose(g.elements_[x], g.generators_[k]);
        if (g.index_.contains(y) || next.contains(y)) continue;
        next.emplace(std::move(y), Discovery{static_cast<ElementId>(x), k});
        if (g.elements_.size() + next.size() > cap) {
          throw CapExceeded("group closure", cap);
        }
      }
    }
    std::vector<Permutation const*> layer;
    layer.reserve(next.size());
    for (auto const& [perm, _] : next) layer.push_back(&perm);
    std::sort(layer.begin(), layer.end(),
              [](auto const* a, auto const* b) { return *a < *b; });
    for (auto const* perm : layer) {
      auto id = static_cast<ElementId>(g.elements_.size());
      auto const& d = next.at(*perm);
      parent.push_back(d.parent);
      via.push_back(d.via);
      g.elements_.push_back(*perm);
      g.index_.emplace(*perm, id);
    }
    layer_begin = layer_end;
    layer_end = g.elements_.size();
  }

  std::size_t const n = g.elements_.size();
  std::size_t const k = g.generators_.size();

  g.generator_ids_.reserve(k);
  for (auto const& gen : g.generators_) g.generator_ids_.push_back(g.index_.at(gen));

  g.inverses_.resize(n);
  g.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.inverses_[i] = g.index_.at(g.elements_[i].inverse());
    g.orders_[i] = g.elements_[i].order();
  }

  if (n <= kCayleyTableLimit) {
    // x ∘ gen_k for every x, then x ∘ y by walking y's BFS word
    std::vector<ElementId> right(n * k);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j)
        right[x * k + j] = g.index_.at(compose(g.elements_[x], g.generators_[j]));

    g.cayley_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      ElementId* row = g.cayley_.data() + x * n;
      row[0] = static_cast<ElementId>(x);
      for (std::size_t y = 1; y < n; ++y) row[y] = right[std::size_t{row[parent[y]]} * k + via[y]];
    }
  }
  return g;
}

std::uint64_t element_order(FiniteGroup const& g, ElementId x) {
  return g.element_order(x);
}

}  // namespace progressio
