#include "amalgenus/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace amalgenus {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

int det_mod(std::vector<int> a, int n, int p) {
  long long det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[static_cast<std::size_t>(r * n + c)] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[static_cast<std::size_t>(piv * n + k)], a[static_cast<std::size_t>(c * n + k)]);
      det = -det;
    }
    const int pv = a[static_cast<std::size_t>(c * n + c)];
    det = det * pv % p;
    int inv = 1;
    while (inv * pv % p != 1) ++inv;
    for (int r = c + 1; r < n; ++r) {
      const int f = a[static_cast<std::size_t>(r * n + c)] * inv % p;
      for (int k = c; k < n; ++k)
        a[static_cast<std::size_t>(r * n + k)] = mod(a[static_cast<std::size_t>(r * n + k)] - f * a[static_cast<std::size_t>(c * n + k)], p);
    }
  }
  return mod(det, p);
}

std::vector<std::vector<int>> matrices(int n, int p, bool special) {
  const int cells = n * n;
  std::vector<std::vector<int>> out;
  std::vector<int> m(static_cast<std::size_t>(cells), 0);
  // entries enumerated as base-p digits, most significant first = lex order
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = cells - 1; i >= 0; --i) {
      m[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    int d = det_mod(m, n, p);
    if (special ? d == 1 : d != 0) out.push_back(m);
  }
  return out;
}

/// Table group from a product rule on 0..order-1.
GroupPtr table_group(std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                     std::string label) {
  Rows rows(order, std::vector<std::int64_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) rows[a][b] = static_cast<std::int64_t>(mul(a, b));
  return FiniteGroup::from_table(rows, std::move(label));
}

Subgroup generated_by(const GroupPtr& g, const std::vector<Permutation>& perms) {
  std::vector<Element> seed;
  for (const auto& p : perms) seed.push_back(permutation_element(*g, p));
  return subgroup_generated(g, seed);
}

struct Builder {
  std::string name;
  std::function<CatalogEntry()> build;
};

CatalogEntry plain(std::string name, GroupPtr g) { return CatalogEntry{std::move(name), std::move(g), {}}; }

CatalogEntry d8_entry() {
  auto g = dihedral_group(4, "D8");
  const Permutation r{1, 2, 3, 0}, c{2, 1, 0, 3}, r2{2, 3, 0, 1};
  Permutation cr(4);
  for (int i = 0; i < 4; ++i) cr[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])];
  CatalogEntry e{"D8", g, {}};
  e.subgroups.emplace("klein", generated_by(g, {c, r2}));
  e.subgroups.emplace("klein2", generated_by(g, {cr, r2}));
  e.subgroups.emplace("c4", generated_by(g, {r}));
  e.subgroups.emplace("center", generated_by(g, {r2}));
  return e;
}

CatalogEntry gl2f2_entry(bool opposite) {
  auto base = general_linear_group(2, 2, false, "GL2F2");
  if (!opposite) {
    ElementSet upper{matrix_element(2, 2, {1, 0, 0, 1}), matrix_element(2, 2, {1, 1, 0, 1})};
    std::sort(upper.begin(), upper.end());
    CatalogEntry e{"GL2F2", base, {}};
    e.subgroups.emplace("borel_upper", Subgroup::from_elements(base, upper));
    return e;
  }
  auto op = opposite_group(base, "GL2F2op");
  ElementSet lower{matrix_element(2, 2, {1, 0, 0, 1}), matrix_element(2, 2, {1, 0, 1, 1})};
  std::sort(lower.begin(), lower.end());
  CatalogEntry e{"GL2F2op", op, {}};
  e.subgroups.emplace("borel_lower", Subgroup::from_elements(op, lower));
  return e;
}

const std::vector<Builder>& small_builders() {
  static const std::vector<Builder> list = [] {
    std::vector<Builder> b;
    auto cyc = [&](int n) { b.push_back({"C" + std::to_string(n), [n] { return plain("C" + std::to_string(n), cyclic_group(n)); }}); };
    cyc(1); cyc(2); cyc(3); cyc(4);
    b.push_back({"C2xC2", [] { return plain("C2xC2", direct_product(cyclic_group(2), cyclic_group(2), "C2xC2")); }});
    cyc(5); cyc(6);
    b.push_back({"S3", [] { return plain("S3", symmetric_group(3)); }});
    cyc(7); cyc(8);
    b.push_back({"C4xC2", [] { return plain("C4xC2", direct_product(cyclic_group(4), cyclic_group(2), "C4xC2")); }});
    b.push_back({"C2^3", [] {
      return plain("C2^3", direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2), "C2^3"));
    }});
    b.push_back({"D8", d8_entry});
    b.push_back({"Q8", [] { return plain("Q8", dicyclic_group(2, "Q8")); }});
    cyc(9);
    b.push_back({"C3xC3", [] { return plain("C3xC3", direct_product(cyclic_group(3), cyclic_group(3), "C3xC3")); }});
    cyc(10);
    b.push_back({"D10", [] { return plain("D10", dihedral_group(5, "D10")); }});
    cyc(11); cyc(12);
    b.push_back({"C6xC2", [] { return plain("C6xC2", direct_product(cyclic_group(6), cyclic_group(2), "C6xC2")); }});
    b.push_back({"D12", [] { return plain("D12", dihedral_group(6, "D12")); }});
    b.push_back({"Dic12", [] { return plain("Dic12", dicyclic_group(3, "Dic12")); }});
    b.push_back({"A4", [] { return plain("A4", alternating_group(4)); }});
    return b;
  }();
  return list;
}

const std::vector<Builder>& extra_builders() {
  static const std::vector<Builder> list = [] {
    std::vector<Builder> b;
    auto add = [&](std::string name, std::function<GroupPtr()> f) {
      b.push_back({name, [name, f] { return plain(name, f()); }});
    };
    add("C7:C3", [] { return semidirect_cyclic(7, 3, 2, "C7:C3"); });
    add("D14", [] { return dihedral_group(7, "D14"); });
    add("C16", [] { return cyclic_group(16); });
    add("D16", [] { return dihedral_group(8, "D16"); });
    add("Q16", [] { return dicyclic_group(4, "Q16"); });
    add("SD16", [] { return semidirect_cyclic(8, 2, 3, "SD16"); });
    add("M16", [] { return semidirect_cyclic(8, 2, 5, "M16"); });
    add("C4:C4", [] { return semidirect_cyclic(4, 4, 3, "C4:C4"); });
    add("C2^4", [] {
      auto c2 = cyclic_group(2);
      return direct_product(direct_product(direct_product(c2, c2), c2), c2, "C2^4");
    });
    add("D8xC2", [] { return direct_product(dihedral_group(4, "D8"), cyclic_group(2), "D8xC2"); });
    add("Q8xC2", [] { return direct_product(dicyclic_group(2, "Q8"), cyclic_group(2), "Q8xC2"); });
    add("D18", [] { return dihedral_group(9, "D18"); });
    add("S3xC3", [] { return direct_product(symmetric_group(3), cyclic_group(3), "S3xC3"); });
    add("F20", [] { return semidirect_cyclic(5, 4, 2, "F20"); });
    add("D20", [] { return dihedral_group(10, "D20"); });
    add("Dic20", [] { return dicyclic_group(5, "Dic20"); });
    add("D22", [] { return dihedral_group(11, "D22"); });
    add("S4", [] { return symmetric_group(4); });
    add("SL2F3", [] { return general_linear_group(2, 3, true, "SL2F3"); });
    add("A4xC2", [] { return direct_product(alternating_group(4), cyclic_group(2), "A4xC2"); });
    add("D24", [] { return dihedral_group(12, "D24"); });
    add("Dic24", [] { return dicyclic_group(6, "Dic24"); });
    add("C3:C8", [] { return semidirect_cyclic(3, 8, 2, "C3:C8"); });
    add("D12xC2", [] { return direct_product(dihedral_group(6, "D12"), cyclic_group(2), "D12xC2"); });
    add("S3xC4", [] { return direct_product(symmetric_group(3), cyclic_group(4), "S3xC4"); });
    add("D8xC3", [] { return direct_product(dihedral_group(4, "D8"), cyclic_group(3), "D8xC3"); });
    add("Q8xC3", [] { return direct_product(dicyclic_group(2, "Q8"), cyclic_group(3), "Q8xC3"); });
    return b;
  }();
  return list;
}

}  // namespace

GroupPtr cyclic_group(int n) {
  if (n < 1) fail(ErrorKind::kInvalidInput, "cyclic group order must be positive");
  const auto m = static_cast<std::size_t>(n);
  return table_group(m, [m](std::size_t a, std::size_t b) { return (a + b) % m; }, "C" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string label) {
  const std::size_t nb = b->order();
  if (label.empty()) label = a->label() + "x" + b->label();
  return table_group(a->order() * nb, [&](std::size_t x, std::size_t y) {
    auto p = static_cast<std::size_t>(a->mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)));
    auto q = static_cast<std::size_t>(b->mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
    return p * nb + q;
  }, std::move(label));
}

GroupPtr dihedral_group(int n, std::string label) {
  if (n < 3) fail(ErrorKind::kInvalidInput, "dihedral group needs n >= 3");
  Permutation rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    ref[static_cast<std::size_t>(i)] = mod(2 - i, n);
  }
  if (label.empty()) label = "D" + std::to_string(2 * n);
  return FiniteGroup::from_permutations({rot, ref}, static_cast<std::size_t>(n), std::move(label));
}

GroupPtr dicyclic_group(int m, std::string label) {
  if (m < 1) fail(ErrorKind::kInvalidInput, "dicyclic group needs m >= 1");
  const std::size_t n = static_cast<std::size_t>(2 * m);
  if (label.empty()) label = "Dic" + std::to_string(4 * m);
  // a^i x^j encoded as i + n*j
  return table_group(2 * n, [n, m](std::size_t x, std::size_t y) {
    const long long i = static_cast<long long>(x % n), j = static_cast<long long>(x / n);
    const long long k = static_cast<long long>(y % n), l = static_cast<long long>(y / n);
    long long e = j ? i - k : i + k;
    if (j && l) e += m;
    return static_cast<std::size_t>(mod(e, static_cast<int>(n))) + n * static_cast<std::size_t>((j + l) % 2);
  }, std::move(label));
}

GroupPtr semidirect_cyclic(int m, int n, int k, std::string label) {
  long long kn = 1;
  for (int i = 0; i < n; ++i) kn = kn * k % m;
  if (m < 1 || n < 1 || kn != 1 % m) fail(ErrorKind::kInvalidInput, "k^n must be 1 mod m");
  const auto mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n);
  std::vector<long long> kp(nn, 1);
  for (std::size_t j = 1; j < nn; ++j) kp[j] = kp[j - 1] * k % m;
  if (label.empty()) label = "C" + std::to_string(m) + ":C" + std::to_string(n);
  // a^i b^j encoded as i + m*j; b^j a^k' = a^(k^j k') b^j
  return table_group(mm * nn, [mm, nn, &kp](std::size_t x, std::size_t y) {
    const std::size_t i = x % mm, j = x / mm, i2 = y % mm, j2 = y / mm;
    const auto e = static_cast<std::size_t>((static_cast<long long>(i) + kp[j] * static_cast<long long>(i2)) %
                                            static_cast<long long>(mm));
    return e + mm * ((j + j2) % nn);
  }, std::move(label));
}

GroupPtr symmetric_group(int degree) {
  if (degree < 1) fail(ErrorKind::kInvalidInput, "degree must be positive");
  const auto d = static_cast<std::size_t>(degree);
  std::vector<Permutation> gens;
  if (d >= 2) {
    Permutation t(d), c(d);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<int>((i + 1) % d);
    gens = {c, t};
  }
  return FiniteGroup::from_permutations(gens, d, "S" + std::to_string(degree));
}

GroupPtr alternating_group(int degree) {
  if (degree < 1) fail(ErrorKind::kInvalidInput, "degree must be positive");
  const auto d = static_cast<std::size_t>(degree);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < d; ++i) {
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = static_cast<int>(i);
    p[i] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens, d, "A" + std::to_string(degree));
}

GroupPtr general_linear_group(int n, int p, bool special, std::string label) {
  if (n < 1 || p < 2) fail(ErrorKind::kInvalidInput, "bad matrix group parameters");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) fail(ErrorKind::kInvalidInput, "p must be prime");
  auto ms = matrices(n, p, special);
  if (ms.size() > Limits{}.max_order) fail(ErrorKind::kSizeExceeded, "matrix group too large");
  if (label.empty()) label = std::string(special ? "SL" : "GL") + std::to_string(n) + "F" + std::to_string(p);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index.emplace(ms[i], i);
  const auto un = static_cast<std::size_t>(n);
  return table_group(ms.size(), [&](std::size_t a, std::size_t b) {
    std::vector<int> c(un * un, 0);
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t col = 0; col < un; ++col) {
        int s = 0;
        for (std::size_t t = 0; t < un; ++t) s += ms[a][r * un + t] * ms[b][t * un + col];
        c[r * un + col] = s % p;
      }
    return index.at(c);
  }, std::move(label));
}

Element matrix_element(int n, int p, const std::vector<int>& entries, bool special) {
  auto ms = matrices(n, p, special);
  auto it = std::find(ms.begin(), ms.end(), entries);
  if (it == ms.end()) fail(ErrorKind::kInvalidInput, "matrix is not in the group");
  return static_cast<Element>(it - ms.begin());
}

GroupPtr opposite_group(const GroupPtr& g, std::string label) {
  if (label.empty()) label = g->label() + "op";
  return table_group(g->order(), [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(g->mul(static_cast<Element>(b), static_cast<Element>(a)));
  }, std::move(label));
}

Element permutation_element(const FiniteGroup& g, const Permutation& p) {
  const auto& els = g.perm_elements();
  auto it = std::find(els.begin(), els.end(), p);
  if (it == els.end()) fail(ErrorKind::kInvalidInput, "permutation is not an element of " + g.label());
  return static_cast<Element>(it - els.begin());
}

std::vector<CatalogEntry> small_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& b : small_builders()) out.push_back(b.build());
  return out;
}

std::vector<CatalogEntry> extended_catalog() {
  auto out = small_catalog();
  for (const auto& b : extra_builders()) out.push_back(b.build());
  return out;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : small_builders()) out.push_back(b.name);
  for (const auto& b : extra_builders()) out.push_back(b.name);
  out.insert(out.end(), {"GL2F2", "GL2F2op", "klein"});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CatalogEntry> builtin_group(std::string_view name) {
  if (name == "GL2F2") return gl2f2_entry(false);
  if (name == "GL2F2op") return gl2f2_entry(true);
  if (name == "klein") {
    auto e = small_builders()[4].build();
    e.name = "klein";
    return e;
  }
  for (const auto* list : {&small_builders(), &extra_builders()})
    for (const auto& b : *list)
      if (b.name == name) return b.build();
  return std::nullopt;
}

}  // namespace amalgenus
