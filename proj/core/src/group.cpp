#include "amalgenus/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace amalgenus {
namespace {

constexpr std::size_t kFullAssociativityCheckBound = 128;

// Right-multiplication closure of `seed` starting at the identity. For a group
// this is the generated subgroup; during validation it is only used on tables
// already known to be Latin squares with identity.
std::vector<std::uint8_t> closure_mask(std::size_t n, Element identity,
                                       std::span<const Element> seed,
                                       const auto& mul) {
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<Element> queue{identity};
  mask[static_cast<std::size_t>(identity)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Element g : seed) {
      Element y = mul(x, g);
      if (!mask[static_cast<std::size_t>(y)]) {
        mask[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

std::vector<Element> greedy_generators(std::size_t n, Element identity,
                                       std::span<const Element> pool,
                                       std::span<const Element> prefix,
                                       const std::vector<int>& orders,
                                       const auto& mul) {
  std::vector<Element> candidates(pool.begin(), pool.end());
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
    return orders[static_cast<std::size_t>(a)] > orders[static_cast<std::size_t>(b)];
  });
  std::vector<Element> gens(prefix.begin(), prefix.end());
  auto span = closure_mask(n, identity, gens, mul);
  for (Element x : candidates) {
    if (span[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    span = closure_mask(n, identity, gens, mul);
  }
  return gens;
}

}  // namespace

Element FiniteGroup::power(Element a, std::int64_t k) const {
  Element base = k < 0 ? inv(a) : a;
  std::int64_t e = k < 0 ? -k : k;
  e %= element_order(a);
  Element result = identity_;
  for (std::int64_t i = 0; i < e; ++i) result = mul(result, base);
  return result;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    rows[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return rows;
}

void FiniteGroup::finish(bool check_associativity_fully) {
  const std::size_t n = order_;
  auto mul_fn = [this](Element a, Element b) { return mul(a, b); };

  // Element orders via right powers; failing to return to e means the table
  // is not power-associative, hence not a group.
  orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = static_cast<Element>(a);
    int k = 1;
    while (x != identity_) {
      x = mul(x, static_cast<Element>(a));
      if (++k > static_cast<int>(n)) {
        fail(ErrorKind::kNonAssociative,
             "element " + std::to_string(a) + " has no finite order");
      }
    }
    orders_[a] = k;
  }

  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  generators_ = greedy_generators(n, identity_, all, {}, orders_, mul_fn);
  std::sort(generators_.begin(), generators_.end(), [&](Element a, Element b) {
    if (orders_[static_cast<std::size_t>(a)] != orders_[static_cast<std::size_t>(b)])
      return orders_[static_cast<std::size_t>(a)] > orders_[static_cast<std::size_t>(b)];
    return a < b;
  });

  if (check_associativity_fully) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(ab, static_cast<Element>(c)) !=
              mul(static_cast<Element>(a), mul(static_cast<Element>(b), static_cast<Element>(c)))) {
            fail(ErrorKind::kNonAssociative,
                 "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c));
          }
        }
      }
  } else {
    // Light's test: associativity on a generating set suffices.
    for (Element g : generators_)
      for (std::size_t x = 0; x < n; ++x) {
        Element xg = mul(static_cast<Element>(x), g);
        for (std::size_t y = 0; y < n; ++y) {
          if (mul(xg, static_cast<Element>(y)) !=
              mul(static_cast<Element>(x), mul(g, static_cast<Element>(y)))) {
            fail(ErrorKind::kNonAssociative, "Light's test failed at generator " +
                                                 std::to_string(g));
          }
        }
      }
  }

  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == identity_) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
  for (std::size_t a = 0; a < n; ++a) {
    check_invariant(inverse_[a] >= 0 && mul(inverse_[a], static_cast<Element>(a)) == identity_,
                    "two-sided inverse");
  }

  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (Element g : generators_)
      if (mul(static_cast<Element>(a), g) != mul(g, static_cast<Element>(a))) {
        abelian_ = false;
        break;
      }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    const std::vector<std::vector<std::int64_t>>& rows, std::string label,
    const Limits& limits) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorKind::kInvalidInput, "empty multiplication table");
  if (n > limits.max_order) {
    fail(ErrorKind::kSizeExceeded, "table of order " + std::to_string(n) +
                                       " exceeds bound " + std::to_string(limits.max_order));
  }
  FiniteGroup g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      fail(ErrorKind::kInvalidInput, "row " + std::to_string(i) + " has length " +
                                         std::to_string(rows[i].size()) + ", expected " +
                                         std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = rows[i][j];
      if (v < 0 || v >= static_cast<std::int64_t>(n)) {
        fail(ErrorKind::kInvalidInput, "entry out of range at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
      }
      g.table_[i * n + j] = static_cast<Element>(v);
    }
  }

  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = static_cast<std::size_t>(g.table_[i * n + j]);
      if (seen[v]++) fail(ErrorKind::kNotLatinSquare, "row " + std::to_string(i) + " repeats " + std::to_string(v));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = static_cast<std::size_t>(g.table_[i * n + j]);
      if (seen[v]++) fail(ErrorKind::kNotLatinSquare, "column " + std::to_string(j) + " repeats " + std::to_string(v));
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = g.table_[e * n + x] == static_cast<Element>(x) &&
           g.table_[x * n + e] == static_cast<Element>(x);
    }
    if (ok) {
      g.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) fail(ErrorKind::kNoIdentity, "no two-sided identity");

  g.finish(n <= kFullAssociativityCheckBound);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(
    const std::vector<Permutation>& gens, std::size_t degree, std::string label,
    const Limits& limits) {
  for (const auto& p : gens) degree = std::max(degree, p.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& p = gens[k];
    if (p.size() != degree) {
      fail(ErrorKind::kInvalidInput, "generator " + std::to_string(k) + " has degree " +
                                         std::to_string(p.size()) + ", expected " +
                                         std::to_string(degree));
    }
    std::vector<std::uint8_t> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)]++) {
        fail(ErrorKind::kNotBijective, "generator " + std::to_string(k) + " is not a bijection");
      }
    }
  }

  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, int> index;
  std::vector<Permutation> elements{id};
  index.emplace(id, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elements[head], g);
      if (index.emplace(next, 0).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limits.max_order) {
          fail(ErrorKind::kSizeExceeded, "permutation closure exceeds bound " +
                                             std::to_string(limits.max_order));
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  const std::size_t n = elements.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = index.at(compose(elements[a], elements[b]));

  auto built = from_table(rows, std::move(label), limits);
  FiniteGroup g = *built;
  g.perm_gens_ = gens;
  g.perm_elements_ = std::move(elements);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

GroupPtr validate_group(const std::vector<std::vector<std::int64_t>>& rows, std::string label,
                        const Limits& limits) {
  return FiniteGroup::from_table(rows, std::move(label), limits);
}

GroupPtr group_from_permutations(const std::vector<Permutation>& gens, std::size_t degree,
                                 std::string label, const Limits& limits) {
  return FiniteGroup::from_permutations(gens, degree, std::move(label), limits);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, ElementSet sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {
  mask_.assign(parent_->order(), 0);
  position_.assign(parent_->order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto x = static_cast<std::size_t>(elements_[i]);
    mask_[x] = 1;
    position_[x] = static_cast<int>(i);
  }
}

Subgroup Subgroup::from_elements(GroupPtr parent, ElementSet elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element x : elements) {
    if (x < 0 || static_cast<std::size_t>(x) >= parent->order()) {
      fail(ErrorKind::kSubgroupNotInParent,
           "element " + std::to_string(x) + " outside group of order " +
               std::to_string(parent->order()));
    }
  }
  Subgroup s(std::move(parent), std::move(elements));
  const FiniteGroup& g = s.parent();
  if (!s.contains(g.identity())) fail(ErrorKind::kInvalidInput, "subgroup lacks the identity");
  for (Element a : s.elements()) {
    if (!s.contains(g.inv(a))) fail(ErrorKind::kInvalidInput, "subgroup not closed under inverse");
    for (Element b : s.elements())
      if (!s.contains(g.mul(a, b))) fail(ErrorKind::kInvalidInput, "subgroup not closed under product");
  }
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

int SubgroupList::find(const ElementSet& elements) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].elements() == elements) return static_cast<int>(i);
  return -1;
}

void throw_if_not_in(const Subgroup& s, const GroupPtr& group, std::string_view what) {
  if (s.parent_ptr() != group && !s.parent().same_table(*group)) {
    fail(ErrorKind::kSubgroupNotInParent, std::string(what) + " is not a subgroup of the given group");
  }
}

Subgroup whole_group(const GroupPtr& group) {
  ElementSet all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& group) {
  return Subgroup(group, ElementSet{group->identity()});
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const Element> seed) {
  for (Element x : seed) {
    if (x < 0 || static_cast<std::size_t>(x) >= group->order())
      fail(ErrorKind::kSubgroupNotInParent, "seed element " + std::to_string(x) + " out of range");
  }
  auto mask = closure_mask(group->order(), group->identity(), seed,
                           [&](Element a, Element b) { return group->mul(a, b); });
  ElementSet elements;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) elements.push_back(static_cast<Element>(i));
  return Subgroup(group, std::move(elements));
}

std::vector<Element> subgroup_generators(const Subgroup& s, std::span<const Element> prefix) {
  const FiniteGroup& g = s.parent();
  std::vector<int> orders(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) orders[i] = g.element_order(static_cast<Element>(i));
  return greedy_generators(g.order(), g.identity(), s.elements(), prefix, orders,
                           [&](Element a, Element b) { return g.mul(a, b); });
}

Subgroup normalizer(const GroupPtr& group, const Subgroup& h) {
  throw_if_not_in(h, group, "H");
  auto gens = subgroup_generators(h);
  ElementSet out;
  for (std::size_t x = 0; x < group->order(); ++x) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](Element y) {
      return h.contains(group->conjugate(static_cast<Element>(x), y));
    });
    if (ok) out.push_back(static_cast<Element>(x));
  }
  return Subgroup(group, std::move(out));
}

Subgroup centralizer(const GroupPtr& group, const Subgroup& h) {
  throw_if_not_in(h, group, "H");
  auto gens = subgroup_generators(h);
  ElementSet out;
  for (std::size_t x = 0; x < group->order(); ++x) {
    auto e = static_cast<Element>(x);
    bool ok = std::all_of(gens.begin(), gens.end(),
                          [&](Element y) { return group->mul(e, y) == group->mul(y, e); });
    if (ok) out.push_back(e);
  }
  return Subgroup(group, std::move(out));
}

Subgroup center(const GroupPtr& group) { return centralizer(group, whole_group(group)); }

Subgroup conjugate_subgroup(const Subgroup& s, Element g) {
  const FiniteGroup& grp = s.parent();
  ElementSet out;
  out.reserve(s.size());
  for (Element x : s.elements()) out.push_back(grp.conjugate(g, x));
  std::sort(out.begin(), out.end());
  return Subgroup(s.parent_ptr(), std::move(out));
}

std::optional<Subgroup> is_direct_factor(const Subgroup& k, const Subgroup& h,
                                         const Limits& limits) {
  if (h.parent_ptr() != k.parent_ptr() && !h.parent().same_table(k.parent()))
    fail(ErrorKind::kSubgroupNotInParent, "H and K live in different groups");
  if (!h.is_subset_of(k)) fail(ErrorKind::kInvalidInput, "H is not contained in K");
  if (k.size() % h.size() != 0) return std::nullopt;
  const std::size_t want = k.size() / h.size();
  const GroupPtr& group = k.parent_ptr();

  Subgroup ck = centralizer(group, h);
  ElementSet inside;
  std::set_intersection(ck.elements().begin(), ck.elements().end(), k.elements().begin(),
                        k.elements().end(), std::back_inserter(inside));
  Subgroup search_space(group, std::move(inside));
  if (search_space.size() < want) return std::nullopt;

  for (const Subgroup& c : enumerate_subgroups_within(search_space, limits).subgroups) {
    if (c.size() != want) continue;
    bool meets_trivially = std::all_of(c.elements().begin(), c.elements().end(), [&](Element x) {
      return x == group->identity() || !h.contains(x);
    });
    if (meets_trivially) return c;
  }
  return std::nullopt;
}

SubgroupList enumerate_subgroups(const GroupPtr& group, const Limits& limits) {
  return enumerate_subgroups_within(whole_group(group), limits);
}

SubgroupList enumerate_subgroups_within(const Subgroup& within, const Limits& limits) {
  const GroupPtr& group = within.parent_ptr();
  if (group->order() > limits.max_order)
    fail(ErrorKind::kSizeExceeded, "group order exceeds bound");

  // One generator per distinct cyclic subgroup.
  std::vector<Element> cyclic_gens;
  std::map<ElementSet, std::size_t> known;
  std::vector<std::pair<Subgroup, std::vector<Element>>> found;  // subgroup, its generators
  for (Element x : within.elements()) {
    Element single[] = {x};
    Subgroup z = subgroup_generated(group, single);
    if (known.emplace(z.elements(), found.size()).second) {
      cyclic_gens.push_back(x);
      found.emplace_back(std::move(z), std::vector<Element>{x});
    }
  }

  std::uint64_t work = 0;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element x : cyclic_gens) {
      if (found[head].first.contains(x)) continue;
      if (++work > limits.search_budget)
        fail(ErrorKind::kBudgetExceeded, "subgroup enumeration exceeded the search budget");
      std::vector<Element> gens = found[head].second;
      gens.push_back(x);
      Subgroup joined = subgroup_generated(group, gens);
      if (known.emplace(joined.elements(), found.size()).second) {
        found.emplace_back(std::move(joined), std::move(gens));
      }
    }
  }

  SubgroupList list{group, {}};
  list.subgroups.reserve(found.size());
  for (auto& [s, gens] : found) list.subgroups.push_back(std::move(s));
  std::sort(list.subgroups.begin(), list.subgroups.end());
  return list;
}

GroupPtr induced_group(const Subgroup& s, std::string label) {
  const FiniteGroup& g = s.parent();
  const std::size_t n = s.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = s.index_of(g.mul(s.elements()[i], s.elements()[j]));
  return FiniteGroup::from_table(rows, std::move(label), Limits{});
}

}  // namespace amalgenus
