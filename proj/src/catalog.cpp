#include "ellis/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace ellis {

namespace {

std::vector<int> table_from(int n, const std::function<int(int, int)>& f) {
  std::vector<int> t(std::size_t(n) * std::size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * std::size_t(n) + std::size_t(b)] = f(a, b);
  return t;
}

}  // namespace

FinGroup cyclic_group(int n) {
  return FinGroup::from_table(n, table_from(n, [n](int a, int b) { return (a + b) % n; }));
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  int na = a.size(), nb = b.size();
  int n = na * nb;
  auto enc = [nb](int x, int y) { return x * nb + y; };
  return FinGroup::from_table(n, table_from(n, [&](int p, int q) {
                                int x1 = p / nb, y1 = p % nb, x2 = q / nb, y2 = q % nb;
                                return enc(a.mul(x1, x2), b.mul(y1, y2));
                              }));
}

FinGroup semidirect_product(const FinGroup& a, const FinGroup& b,
                            const std::function<int(int, int)>& act) {
  int na = a.size(), nb = b.size();
  int n = na * nb;
  auto enc = [nb](int x, int y) { return x * nb + y; };
  return FinGroup::from_table(n, table_from(n, [&](int p, int q) {
                                int x1 = p / nb, y1 = p % nb, x2 = q / nb, y2 = q % nb;
                                return enc(a.mul(x1, act(y1, x2)), b.mul(y1, y2));
                              }));
}

FinGroup semidirect_cyclic(int n, int m, int k) {
  FinGroup cn = cyclic_group(n);
  FinGroup cm = cyclic_group(m);
  // powers of k modulo n, one per element of C_m
  std::vector<int> pw(std::size_t(m), 1 % n);
  for (int i = 1; i < m; ++i) pw[std::size_t(i)] = (pw[std::size_t(i - 1)] * k) % n;
  if ((pw[std::size_t(m - 1)] * k) % n != 1 % n)
    throw ValidationError("semidirect_cyclic needs k^m = 1 mod n");
  return semidirect_product(cn, cm,
                            [pw, n](int b, int x) { return (pw[std::size_t(b)] * x) % n; });
}

FinGroup dihedral_group(int n) { return semidirect_cyclic(n, 2, n - 1); }

FinGroup dicyclic_group(int n) {
  // elements a^i b^j with a of order 2n, b^2 = a^n, b a b^-1 = a^-1
  int order = 4 * n;
  auto enc = [](int i, int j) { return i * 2 + j; };
  return FinGroup::from_table(order, table_from(order, [&](int p, int q) {
                                int i1 = p / 2, j1 = p % 2, i2 = q / 2, j2 = q % 2;
                                int i, j;
                                if (j1 == 0) {
                                  i = (i1 + i2) % (2 * n);
                                  j = j2;
                                } else if (j2 == 0) {
                                  i = (i1 - i2 + 2 * n) % (2 * n);
                                  j = 1;
                                } else {
                                  i = (i1 - i2 + n + 2 * n) % (2 * n);
                                  j = 0;
                                }
                                return enc(i, j);
                              }));
}

FinGroup symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(std::size_t(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
  int order = int(perms.size());
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    labels.push_back(s);
  }
  return FinGroup::from_table(order, table_from(order, [&](int x, int y) {
                                std::vector<int> c(std::size_t(n));
                                for (int i = 0; i < n; ++i)
                                  c[std::size_t(i)] =
                                      perms[std::size_t(x)][std::size_t(
                                          perms[std::size_t(y)][std::size_t(i)])];
                                return index.at(c);
                              }),
                              std::move(labels));
}

FinGroup alternating_group4() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[std::size_t(i)] > p[std::size_t(j)]) ++inv;
    if (inv % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
  int order = int(perms.size());
  return FinGroup::from_table(order, table_from(order, [&](int x, int y) {
                                std::vector<int> c(4);
                                for (int i = 0; i < 4; ++i)
                                  c[std::size_t(i)] =
                                      perms[std::size_t(x)][std::size_t(
                                          perms[std::size_t(y)][std::size_t(i)])];
                                return index.at(c);
                              }));
}

FinGroup special_linear_2_3() {
  struct M {
    int a, b, c, d;
  };
  std::vector<M> ms;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) ms.push_back({a, b, c, d});
  // put the identity matrix first
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i].a == 1 && ms[i].b == 0 && ms[i].c == 0 && ms[i].d == 1) {
      std::swap(ms[0], ms[i]);
      break;
    }
  auto key = [](const M& m) { return ((m.a * 3 + m.b) * 3 + m.c) * 3 + m.d; };
  std::map<int, int> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index[key(ms[i])] = int(i);
  int order = int(ms.size());
  return FinGroup::from_table(order, table_from(order, [&](int x, int y) {
                                const M &p = ms[std::size_t(x)], &q = ms[std::size_t(y)];
                                M r{(p.a * q.a + p.b * q.c) % 3, (p.a * q.b + p.b * q.d) % 3,
                                    (p.c * q.a + p.d * q.c) % 3, (p.c * q.b + p.d * q.d) % 3};
                                return index.at(key(r));
                              }));
}

namespace {

FinGroup elementary_abelian(int copies) {
  FinGroup g = cyclic_group(2);
  for (int i = 1; i < copies; ++i) g = direct_product(g, cyclic_group(2));
  return g;
}

// C2 x C2 with coordinates swapped; an order-2 automorphism
int swap_c2c2(int b, int x) {
  if (b % 2 == 0) return x;
  return (x >> 1) | ((x & 1) << 1);
}

FinGroup pauli_group16() {
  // central product of D8 and C4: quotient of the direct product by the
  // diagonal central involution (r^2, c^2)
  FinGroup d8 = dihedral_group(4);
  FinGroup prod = direct_product(d8, cyclic_group(4));
  // r^2 in the dihedral encoding (i, j) -> 2i + j is element 4; c^2 is 2
  int z = 4 * 4 + 2;
  Bits n = prod.subgroup_closure(Bits::singleton(std::size_t(prod.size()), std::size_t(z)));
  return prod.quotient(n);
}

FinGroup generalized_dihedral_c3c3() {
  FinGroup c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  return semidirect_product(c3c3, cyclic_group(2), [&](int b, int x) {
    if (b == 0) return x;
    int x1 = x / 3, x2 = x % 3;
    return ((3 - x1) % 3) * 3 + (3 - x2) % 3;
  });
}

FinGroup c3_semi_d8() {
  FinGroup d8 = dihedral_group(4);  // (i, j) -> 2i + j, rotation i, flip j
  return semidirect_product(cyclic_group(3), d8, [&](int b, int x) {
    int rot = b / 2;
    return rot % 2 == 0 ? x : (3 - x) % 3;
  });
}

std::vector<CatalogEntry> build_order(int order) {
  std::vector<CatalogEntry> v;
  auto add = [&](const std::string& name, FinGroup g) {
    if (g.size() != order)
      throw ValidationError("catalog construction for " + name + " has wrong order");
    v.push_back({name, std::move(g)});
  };
  auto C = [](int n) { return cyclic_group(n); };

  switch (order) {
    case 1:
      add("C1", C(1));
      break;
    case 2:
      add("C2", C(2));
      break;
    case 3:
      add("C3", C(3));
      break;
    case 4:
      add("C4", C(4));
      add("C2xC2", direct_product(C(2), C(2)));
      break;
    case 5:
      add("C5", C(5));
      break;
    case 6:
      add("C6", C(6));
      add("S3", symmetric_group(3));
      break;
    case 7:
      add("C7", C(7));
      break;
    case 8:
      add("C8", C(8));
      add("C4xC2", direct_product(C(4), C(2)));
      add("C2^3", elementary_abelian(3));
      add("D8", dihedral_group(4));
      add("Q8", dicyclic_group(2));
      break;
    case 9:
      add("C9", C(9));
      add("C3xC3", direct_product(C(3), C(3)));
      break;
    case 10:
      add("C10", C(10));
      add("D10", dihedral_group(5));
      break;
    case 11:
      add("C11", C(11));
      break;
    case 12:
      add("C12", C(12));
      add("C6xC2", direct_product(C(6), C(2)));
      add("D12", dihedral_group(6));
      add("A4", alternating_group4());
      add("Dic3", dicyclic_group(3));
      break;
    case 13:
      add("C13", C(13));
      break;
    case 14:
      add("C14", C(14));
      add("D14", dihedral_group(7));
      break;
    case 15:
      add("C15", C(15));
      break;
    case 16:
      add("C16", C(16));
      add("C4xC4", direct_product(C(4), C(4)));
      add("(C2xC2):C4",
          semidirect_product(direct_product(C(2), C(2)), C(4), swap_c2c2));
      add("C4:C4", semidirect_cyclic(4, 4, 3));
      add("C8xC2", direct_product(C(8), C(2)));
      add("M16", semidirect_cyclic(8, 2, 5));
      add("D16", dihedral_group(8));
      add("SD16", semidirect_cyclic(8, 2, 3));
      add("Q16", dicyclic_group(4));
      add("C4xC2xC2", direct_product(C(4), direct_product(C(2), C(2))));
      add("D8xC2", direct_product(dihedral_group(4), C(2)));
      add("Q8xC2", direct_product(dicyclic_group(2), C(2)));
      add("Pauli16", pauli_group16());
      add("C2^4", elementary_abelian(4));
      break;
    case 17:
      add("C17", C(17));
      break;
    case 18:
      add("C18", C(18));
      add("C6xC3", direct_product(C(6), C(3)));
      add("D18", dihedral_group(9));
      add("S3xC3", direct_product(symmetric_group(3), C(3)));
      add("(C3xC3):C2", generalized_dihedral_c3c3());
      break;
    case 19:
      add("C19", C(19));
      break;
    case 20:
      add("C20", C(20));
      add("C10xC2", direct_product(C(10), C(2)));
      add("D20", dihedral_group(10));
      add("Dic5", dicyclic_group(5));
      add("F20", semidirect_cyclic(5, 4, 2));
      break;
    case 21:
      add("C21", C(21));
      add("C7:C3", semidirect_cyclic(7, 3, 2));
      break;
    case 22:
      add("C22", C(22));
      add("D22", dihedral_group(11));
      break;
    case 23:
      add("C23", C(23));
      break;
    case 24:
      add("C24", C(24));
      add("C12xC2", direct_product(C(12), C(2)));
      add("C6xC2xC2", direct_product(C(6), direct_product(C(2), C(2))));
      add("C3:C8", semidirect_cyclic(3, 8, 2));
      add("SL(2,3)", special_linear_2_3());
      add("Dic6", dicyclic_group(6));
      add("C4xS3", direct_product(C(4), symmetric_group(3)));
      add("D24", dihedral_group(12));
      add("Dic3xC2", direct_product(dicyclic_group(3), C(2)));
      add("C3:D8", c3_semi_d8());
      add("C3xD8", direct_product(C(3), dihedral_group(4)));
      add("C3xQ8", direct_product(C(3), dicyclic_group(2)));
      add("S4", symmetric_group(4));
      add("A4xC2", direct_product(alternating_group4(), C(2)));
      add("D12xC2", direct_product(dihedral_group(6), C(2)));
      break;
    default:
      throw ValidationError("small groups are available for order <= 24 only");
  }
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& small_groups(int order) {
  static std::mutex mu;
  static std::map<int, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_order(order)).first;
  return it->second;
}

std::vector<const CatalogEntry*> small_groups_range(int min_order, int max_order) {
  std::vector<const CatalogEntry*> out;
  for (int n = min_order; n <= max_order; ++n)
    for (const auto& e : small_groups(n)) out.push_back(&e);
  return out;
}

const std::vector<int>& group_counts_by_order() {
  static const std::vector<int> counts{0, 1, 1, 1, 2,  1, 2, 1, 5, 2, 2, 1, 5,
                                       1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  return counts;
}

namespace {

std::vector<int> greedy_generators(const FinGroup& g) {
  std::vector<int> gens;
  Bits closed = g.subgroup_closure(Bits{std::size_t(g.size())});
  while (int(closed.count()) < g.size()) {
    int pick = -1;
    for (int x = 0; x < g.size(); ++x)
      if (!closed.test(std::size_t(x))) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    Bits seed{std::size_t(g.size())};
    for (int x : gens) seed.set(std::size_t(x));
    closed = g.subgroup_closure(seed);
  }
  return gens;
}

// extends generator images to a full map by closing over products;
// returns false on conflict or if the result is not a bijection/hom
bool check_hom(const FinGroup& g, const FinGroup& h, const std::vector<int>& gens,
               const std::vector<int>& imgs) {
  std::vector<int> f(std::size_t(g.size()), -1);
  f[std::size_t(g.identity())] = h.identity();
  std::vector<int> frontier{g.identity()};
  std::size_t head = 0;
  while (head < frontier.size()) {
    int x = frontier[head++];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int y = g.mul(x, gens[gi]);
      int fy = h.mul(f[std::size_t(x)], imgs[gi]);
      if (f[std::size_t(y)] < 0) {
        f[std::size_t(y)] = fy;
        frontier.push_back(y);
      } else if (f[std::size_t(y)] != fy) {
        return false;
      }
    }
  }
  if (int(frontier.size()) != g.size()) return false;
  Bits seen{std::size_t(h.size())};
  for (int x = 0; x < g.size(); ++x) {
    if (seen.test(std::size_t(f[std::size_t(x)]))) return false;
    seen.set(std::size_t(f[std::size_t(x)]));
  }
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (f[std::size_t(g.mul(x, y))] != h.mul(f[std::size_t(x)], f[std::size_t(y)]))
        return false;
  return true;
}

bool search_iso(const FinGroup& g, const FinGroup& h, const std::vector<int>& gens,
                std::vector<int>& imgs, std::size_t depth,
                const std::vector<std::vector<int>>& candidates) {
  if (depth == gens.size()) return check_hom(g, h, gens, imgs);
  for (int cand : candidates[depth]) {
    imgs[depth] = cand;
    // partial subgroups must match in size
    Bits gseed{std::size_t(g.size())}, hseed{std::size_t(h.size())};
    for (std::size_t i = 0; i <= depth; ++i) {
      gseed.set(std::size_t(gens[i]));
      hseed.set(std::size_t(imgs[i]));
    }
    if (g.subgroup_closure(gseed).count() != h.subgroup_closure(hseed).count()) continue;
    if (search_iso(g, h, gens, imgs, depth + 1, candidates)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FinGroup& g, const FinGroup& h) {
  if (g.size() != h.size()) return false;
  std::vector<int> go, ho;
  for (int x = 0; x < g.size(); ++x) go.push_back(g.element_order(x));
  for (int x = 0; x < h.size(); ++x) ho.push_back(h.element_order(x));
  std::vector<int> gs = go, hs = ho;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return false;

  auto gens = greedy_generators(g);
  if (gens.empty()) return true;  // both trivial
  std::vector<std::vector<int>> candidates;
  for (int x : gens) {
    std::vector<int> c;
    for (int y = 0; y < h.size(); ++y)
      if (ho[std::size_t(y)] == go[std::size_t(x)]) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<int> imgs(gens.size(), -1);
  return search_iso(g, h, gens, imgs, 0, candidates);
}

}  // namespace ellis
