#include "amalgenus/coset_actions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace amalgenus {

namespace {

ElementSet sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ElementSet product_set(const FiniteGroup& g, std::span<const Element> a, std::span<const Element> x,
                       std::span<const Element> b) {
  std::vector<std::uint8_t> hit(g.order(), 0);
  for (Element u : a)
    for (Element v : x) {
      Element uv = g.mul(u, v);
      for (Element w : b) hit[static_cast<std::size_t>(g.mul(uv, w))] = 1;
    }
  ElementSet out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(static_cast<Element>(i));
  return out;
}

ElementSet subset_inverse(const FiniteGroup& g, std::span<const Element> x) {
  std::vector<Element> out;
  out.reserve(x.size());
  for (Element v : x) out.push_back(g.inv(v));
  return sorted_unique(std::move(out));
}

ElementSet twist_inverse(const FiniteGroup& g, Element xi, std::span<const Element> x) {
  std::vector<Element> out;
  out.reserve(x.size());
  for (Element v : x) out.push_back(g.mul(g.mul(xi, g.inv(v)), xi));
  return sorted_unique(std::move(out));
}

ElementSet set_union(std::span<const Element> a, std::span<const Element> b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right, const ElementSet& carrier) {
  throw_if_not_in(left, ambient, "left subgroup");
  throw_if_not_in(right, ambient, "right subgroup");
  for (Element x : carrier)
    if (x < 0 || static_cast<std::size_t>(x) >= ambient->order())
      fail(ErrorKind::kSubgroupNotInParent, "carrier element outside the ambient group");

  DoubleCosetDecomposition d{ambient, left, right, sorted_unique(carrier), {},
                             std::vector<int>(ambient->order(), -1)};
  std::vector<std::uint8_t> in_carrier(ambient->order(), 0);
  for (Element x : d.carrier) in_carrier[static_cast<std::size_t>(x)] = 1;

  for (Element x : d.carrier) {
    if (d.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const Element one[] = {x};
    ElementSet members = product_set(*ambient, left.elements(), one, right.elements());
    const int id = static_cast<int>(d.classes.size());
    for (Element m : members) {
      if (!in_carrier[static_cast<std::size_t>(m)])
        fail(ErrorKind::kCarrierNotClosed,
             "double coset of " + std::to_string(x) + " leaves the carrier at " + std::to_string(m));
      d.class_of[static_cast<std::size_t>(m)] = id;
    }
    d.classes.push_back(DoubleCoset{x, std::move(members)});
  }
  return d;
}

DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right) {
  return double_cosets(ambient, left, right, whole_group(ambient).elements());
}

C2Orbits c2_orbits(const DoubleCosetDecomposition& decomp, const TwistedInvolution& tw) {
  if (!tw.ambient->same_table(*decomp.ambient))
    fail(ErrorKind::kIncompatibleShapes, "involution and decomposition live in different groups");
  C2Orbits out;
  out.image.assign(decomp.count(), -1);
  for (std::size_t c = 0; c < decomp.count(); ++c) {
    int target = -1;
    for (Element m : decomp.classes[c].members) {
      Element y = tw.apply(m);
      int cls = decomp.class_of[static_cast<std::size_t>(y)];
      if (cls < 0)
        fail(ErrorKind::kActionNotClosed,
             "twisted inverse of " + std::to_string(m) + " leaves the carrier");
      if (target < 0) {
        target = cls;
      } else if (cls != target) {
        fail(ErrorKind::kActionNotWellDefined,
             "twisted action depends on the representative of class " + std::to_string(c));
      }
    }
    out.image[c] = target;
  }
  for (std::size_t c = 0; c < decomp.count(); ++c) {
    const int t = out.image[c];
    if (out.image[static_cast<std::size_t>(t)] != static_cast<int>(c))
      fail(ErrorKind::kNotInvolution, "twisted action squared moves class " + std::to_string(c));
    if (t == static_cast<int>(c)) {
      out.fixed.push_back(t);
    } else if (static_cast<int>(c) < t) {
      out.pairs.emplace_back(static_cast<int>(c), t);
    }
  }
  out.count = out.fixed.size() + out.pairs.size();
  return out;
}

OrbitPartition generic_orbits(std::size_t size, const std::vector<std::vector<int>>& actors) {
  for (const auto& a : actors) {
    if (a.size() != size) fail(ErrorKind::kNotBijective, "actor has the wrong length");
    std::vector<std::uint8_t> hit(size, 0);
    for (int v : a) {
      if (v < 0 || static_cast<std::size_t>(v) >= size || hit[static_cast<std::size_t>(v)]++)
        fail(ErrorKind::kNotBijective, "actor is not a permutation of the carrier");
    }
  }
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& a : actors)
    for (std::size_t p = 0; p < size; ++p) {
      int r1 = find(static_cast<int>(p));
      int r2 = find(a[p]);
      if (r1 == r2) continue;
      // keep the smaller root so orbit ids follow least members
      if (r1 < r2) parent[static_cast<std::size_t>(r2)] = r1;
      else parent[static_cast<std::size_t>(r1)] = r2;
    }
  OrbitPartition out;
  out.orbit_of.assign(size, -1);
  std::vector<int> id_of_root(size, -1);
  for (std::size_t p = 0; p < size; ++p) {
    int r = find(static_cast<int>(p));
    int& id = id_of_root[static_cast<std::size_t>(r)];
    if (id < 0) {
      id = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[p] = id;
    out.orbits[static_cast<std::size_t>(id)].push_back(static_cast<int>(p));
  }
  return out;
}

}  // namespace amalgenus
