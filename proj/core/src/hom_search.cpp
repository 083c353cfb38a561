#include "amalgenus/hom_search.hpp"

#include <algorithm>

namespace amalgenus {

std::optional<std::vector<Element>> extend_to_hom(const FiniteGroup& source,
                                                  const FiniteGroup& target,
                                                  std::span<const Element> gens,
                                                  std::span<const Element> images) {
  std::vector<Element> map(source.order(), -1);
  std::vector<Element> queue{source.identity()};
  map[static_cast<std::size_t>(source.identity())] = target.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    Element fx = map[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = source.mul(x, gens[i]);
      Element fy = target.mul(fx, images[i]);
      Element& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = fy;
        queue.push_back(y);
      } else if (slot != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

HomSearch::HomSearch(const FiniteGroup& source, const FiniteGroup& target,
                     std::vector<Element> generators, std::uint64_t budget)
    : source_(source),
      target_(target),
      generators_(std::move(generators)),
      candidates_(generators_.size()),
      custom_(generators_.size(), false),
      images_(generators_.size(), -1),
      budget_(budget) {
  auto span = extend_to_hom(source_, source_, generators_, generators_);
  check_invariant(span && std::none_of(span->begin(), span->end(), [](Element v) { return v < 0; }),
                  "HomSearch generators must generate the source");
}

void HomSearch::set_candidates(std::size_t i, std::vector<Element> candidates) {
  candidates_.at(i) = std::move(candidates);
  custom_.at(i) = true;
}

std::uint64_t HomSearch::run(const Visitor& visit) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (custom_[i]) continue;
    const int order = source_.element_order(generators_[i]);
    candidates_[i].clear();
    for (std::size_t y = 0; y < target_.order(); ++y) {
      const int oy = target_.element_order(static_cast<Element>(y));
      if (injective_ ? oy == order : order % oy == 0) candidates_[i].push_back(static_cast<Element>(y));
    }
  }
  nodes_ = 0;
  if (generators_.empty()) {
    // Trivial source: the unique map sends e to e.
    std::vector<Element> map{target_.identity()};
    if (!partial_check_ || partial_check_(map)) visit(map);
    return nodes_;
  }
  descend(0, visit);
  return nodes_;
}

bool HomSearch::descend(std::size_t depth, const Visitor& visit) {
  std::span<const Element> gens(generators_.data(), depth + 1);
  for (Element c : candidates_[depth]) {
    if (++nodes_ > budget_) {
      fail(ErrorKind::kBudgetExceeded,
           "homomorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    images_[depth] = c;
    auto ext = extend_to_hom(source_, target_, gens,
                             std::span<const Element>(images_.data(), depth + 1));
    if (!ext) continue;
    if (injective_) {
      std::vector<std::uint8_t> hit(target_.order(), 0);
      bool ok = true;
      for (Element v : *ext) {
        if (v < 0) continue;
        if (hit[static_cast<std::size_t>(v)]++) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    if (partial_check_ && !partial_check_(*ext)) continue;
    if (depth + 1 == generators_.size()) {
      if (!visit(*ext)) return false;
    } else if (!descend(depth + 1, visit)) {
      return false;
    }
  }
  return true;
}

bool is_retract(const GroupPtr& group, const Subgroup& h, const Limits& limits) {
  throw_if_not_in(h, group, "H");
  if (h.size() == group->order() || h.size() == 1) return true;
  // Generators of H first, so the identity constraint on H bites early.
  auto h_gens = subgroup_generators(h);
  auto gens = subgroup_generators(whole_group(group), h_gens);
  HomSearch search(*group, *group, gens, limits.search_budget);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i < h_gens.size()) {
      search.set_candidates(i, {gens[i]});
      continue;
    }
    std::vector<Element> into_h;
    const int order = group->element_order(gens[i]);
    for (Element y : h.elements())
      if (order % group->element_order(y) == 0) into_h.push_back(y);
    search.set_candidates(i, std::move(into_h));
  }
  search.set_partial_check([&](std::span<const Element> map) {
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] < 0) continue;
      if (!h.contains(map[x])) return false;
      if (h.contains(static_cast<Element>(x)) && map[x] != static_cast<Element>(x)) return false;
    }
    return true;
  });
  bool found = false;
  search.run([&](std::span<const Element>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace amalgenus
