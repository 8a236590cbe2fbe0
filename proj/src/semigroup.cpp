#include "ellis/semigroup.hpp"

#include <algorithm>
#include <unordered_map>

namespace ellis {

namespace {

constexpr std::size_t kMaxClosure = 60000;

std::uint64_t pack_map(const std::vector<int>& m) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < m.size(); ++i) k |= std::uint64_t(m[i]) << (8 * i);
  return k;
}

std::vector<int> compose(const std::vector<int>& x, const std::vector<int>& y) {
  // apply y first, then x
  std::vector<int> r(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) r[p] = x[std::size_t(y[p])];
  return r;
}

std::string map_label(const std::vector<int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(m[i]);
  }
  return "[" + s + "]";
}

}  // namespace

FinSemigroup FinSemigroup::from_table(int size, const std::vector<int>& table,
                                      std::vector<std::string> labels) {
  if (size <= 0) throw ValidationError("semigroup size must be positive");
  if (table.size() != std::size_t(size) * std::size_t(size))
    throw ValidationError("operation table must have size*size entries");
  FinSemigroup s;
  s.n_ = size;
  s.tab_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= size)
      throw ValidationError("operation table entry out of range: " + std::to_string(table[i]));
    s.tab_[i] = std::uint16_t(table[i]);
  }
  s.labels_ = std::move(labels);
  s.verify_associative();
  return s;
}

FinSemigroup FinSemigroup::from_generators(int points,
                                           const std::vector<std::vector<int>>& gens) {
  if (points <= 0 || points > 255) throw InvalidGenerator("point count must be in 1..255");
  if (gens.empty()) throw InvalidGenerator("at least one generator map is required");
  for (const auto& g : gens) {
    if (int(g.size()) != points)
      throw InvalidGenerator("generator map must have one image per point");
    for (int v : g)
      if (v < 0 || v >= points)
        throw InvalidGenerator("generator image out of range: " + std::to_string(v));
  }

  const bool packable = points <= 8;
  std::vector<std::vector<int>> elems;
  std::unordered_map<std::uint64_t, int> by_u64;
  std::unordered_map<std::string, int> by_str;
  auto find = [&](const std::vector<int>& m) -> int {
    if (packable) {
      auto it = by_u64.find(pack_map(m));
      return it == by_u64.end() ? -1 : it->second;
    }
    auto it = by_str.find(std::string(m.begin(), m.end()));
    return it == by_str.end() ? -1 : it->second;
  };
  auto add = [&](const std::vector<int>& m) -> int {
    int idx = int(elems.size());
    if (packable) {
      by_u64.emplace(pack_map(m), idx);
    } else {
      by_str.emplace(std::string(m.begin(), m.end()), idx);
    }
    elems.push_back(m);
    return idx;
  };

  std::vector<int> gen_ids;
  for (const auto& g : gens) {
    if (find(g) < 0) gen_ids.push_back(add(g));
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int gi : gen_ids) {
      auto w = compose(elems[i], elems[std::size_t(gi)]);
      if (find(w) < 0) {
        if (elems.size() >= kMaxClosure)
          throw ValidationError("composition closure exceeds " + std::to_string(kMaxClosure) +
                                " elements");
        add(w);
      }
    }
  }

  FinSemigroup s;
  s.n_ = int(elems.size());
  s.points_ = points;
  s.maps_ = elems;
  s.tab_.resize(std::size_t(s.n_) * std::size_t(s.n_));
  for (int x = 0; x < s.n_; ++x) {
    for (int y = 0; y < s.n_; ++y) {
      auto w = compose(elems[std::size_t(x)], elems[std::size_t(y)]);
      int idx = find(w);
      if (idx < 0) throw ValidationError("closure is not closed under composition");
      s.tab_[std::size_t(x) * std::size_t(s.n_) + std::size_t(y)] = std::uint16_t(idx);
    }
  }
  s.labels_.reserve(elems.size());
  for (const auto& m : elems) s.labels_.push_back(map_label(m));
  // Composition of functions is associative, and the table was just checked
  // against composition entry by entry; re-verify small instances anyway.
  if (s.n_ <= 200) s.verify_associative();
  return s;
}

void FinSemigroup::verify_associative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = op(a, b);
      for (int c = 0; c < n_; ++c)
        if (op(ab, c) != op(a, op(b, c))) throw AssociativityError(a, b, c);
    }
}

std::optional<int> FinSemigroup::identity() const {
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool FinSemigroup::is_commutative() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (op(x, y) != op(y, x)) return false;
  return true;
}

bool FinSemigroup::is_group() const {
  auto e = identity();
  if (!e) return false;
  // each row and column must be a permutation
  std::vector<char> seen;
  for (int x = 0; x < n_; ++x) {
    seen.assign(std::size_t(n_), 0);
    for (int y = 0; y < n_; ++y) seen[std::size_t(op(x, y))] = 1;
    for (char c : seen)
      if (!c) return false;
    seen.assign(std::size_t(n_), 0);
    for (int y = 0; y < n_; ++y) seen[std::size_t(op(y, x))] = 1;
    for (char c : seen)
      if (!c) return false;
  }
  return true;
}

std::string FinSemigroup::label(int x) const {
  if (std::size_t(x) < labels_.size() && !labels_[std::size_t(x)].empty())
    return labels_[std::size_t(x)];
  return std::to_string(x);
}

Bits FinSemigroup::principal_left_ideal(int x) const {
  Bits b{std::size_t(n_)};
  b.set(std::size_t(x));
  for (int s = 0; s < n_; ++s) b.set(std::size_t(op(s, x)));
  return b;
}

std::vector<int> idempotents(const FinSemigroup& s) {
  std::vector<int> r;
  for (int x = 0; x < s.size(); ++x)
    if (s.op(x, x) == x) r.push_back(x);
  return r;
}

bool is_left_ideal(const FinSemigroup& s, const Bits& members) {
  if (members.none()) return false;
  for (int x = members.first(); x >= 0; x = members.next(x))
    for (int t = 0; t < s.size(); ++t)
      if (!members.test(std::size_t(s.op(t, x)))) return false;
  return true;
}

bool is_minimal_left_ideal(const FinSemigroup& s, const Bits& members) {
  if (!is_left_ideal(s, members)) return false;
  for (int x = members.first(); x >= 0; x = members.next(x))
    if (s.principal_left_ideal(x) != members) return false;
  return true;
}

std::vector<LeftIdeal> minimal_left_ideals(const FinSemigroup& s) {
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  std::vector<Bits> principals;
  for (int x = 0; x < s.size(); ++x) {
    Bits p = s.principal_left_ideal(x);
    auto& bucket = buckets[p.hash()];
    bool dup = false;
    for (int i : bucket)
      if (principals[std::size_t(i)] == p) {
        dup = true;
        break;
      }
    if (!dup) {
      bucket.push_back(int(principals.size()));
      principals.push_back(std::move(p));
    }
  }

  std::vector<LeftIdeal> out;
  for (std::size_t i = 0; i < principals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < principals.size() && minimal; ++j)
      if (j != i && principals[j] != principals[i] && principals[j].subset_of(principals[i]))
        minimal = false;
    if (minimal) out.push_back({&s, principals[i], true});
  }

  std::sort(out.begin(), out.end(),
            [](const LeftIdeal& a, const LeftIdeal& b) { return a.least() < b.least(); });

  for (std::size_t i = 0; i < out.size(); ++i) {
    bool has_idem = false;
    for (int x = out[i].members.first(); x >= 0 && !has_idem; x = out[i].members.next(x))
      has_idem = s.op(x, x) == x;
    if (!has_idem)
      throw EllisError("minimal left ideal without idempotent: " +
                       out[i].members.to_set_string());
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].members.intersects(out[j].members))
        throw EllisError("minimal left ideals are not disjoint");
  }
  return out;
}

std::vector<EllisGroup> ellis_groups(const FinSemigroup& s, const LeftIdeal& ideal) {
  if (!ideal.minimal) throw NonMinimalIdeal("ellis_groups requires a minimal left ideal");
  std::vector<EllisGroup> out;
  Bits covered{std::size_t(s.size())};
  for (int u = ideal.members.first(); u >= 0; u = ideal.members.next(u)) {
    if (s.op(u, u) != u) continue;
    Bits g{std::size_t(s.size())};
    for (int x = ideal.members.first(); x >= 0; x = ideal.members.next(x))
      g.set(std::size_t(s.op(u, x)));
    if (!g.subset_of(ideal.members)) throw EllisError("uI escapes its ideal");
    // group law on g with identity u
    for (int a = g.first(); a >= 0; a = g.next(a)) {
      if (s.op(u, a) != a || s.op(a, u) != a)
        throw EllisError("idempotent is not an identity of uI");
      bool inv = false;
      for (int b = g.first(); b >= 0 && !inv; b = g.next(b))
        inv = s.op(a, b) == u && s.op(b, a) == u;
      if (!inv) throw EllisError("uI has no inverse for element " + std::to_string(a));
      for (int b = g.first(); b >= 0; b = g.next(b))
        if (!g.test(std::size_t(s.op(a, b)))) throw EllisError("uI is not closed");
    }
    if (covered.intersects(g)) throw EllisError("groups uI are not disjoint");
    covered |= g;
    out.push_back({ideal, u, std::move(g)});
  }
  if (covered != ideal.members)
    throw EllisError("groups uI do not cover the minimal ideal");
  return out;
}

std::vector<int> ellis_group_iso(const FinSemigroup& s, const EllisGroup& src,
                                 const EllisGroup& dst) {
  auto src_elems = src.elements();
  std::vector<int> img;
  img.reserve(src_elems.size());

  if (src.ideal.members == dst.ideal.members && src.idem == dst.idem) {
    img = src_elems;
  } else if (src.ideal.members == dst.ideal.members) {
    int u2 = dst.idem;
    for (int x : src_elems) img.push_back(s.op(u2, s.op(x, u2)));
  } else {
    // intermediate idempotent of the source ideal sharing dst's image class
    int u2 = dst.idem;
    int v = -1;
    for (int c = src.ideal.members.first(); c >= 0; c = src.ideal.members.next(c))
      if (s.op(c, c) == c && s.op(c, u2) == u2 && s.op(u2, c) == c) {
        v = c;
        break;
      }
    if (v < 0)
      throw NoIntermediateIdempotent("no intermediate idempotent between " +
                                     std::to_string(src.idem) + " and " + std::to_string(u2));
    for (int x : src_elems) img.push_back(s.op(s.op(v, x), u2));
  }

  // construct-then-verify: bijection onto dst and a homomorphism
  Bits seen{std::size_t(s.size())};
  for (int y : img) {
    if (!dst.members.test(std::size_t(y)) || seen.test(std::size_t(y)))
      throw EllisError("constructed map is not a bijection onto the target group");
    seen.set(std::size_t(y));
  }
  if (seen != dst.members) throw EllisError("constructed map is not onto the target group");
  std::vector<int> local(std::size_t(s.size()), -1);
  for (std::size_t i = 0; i < src_elems.size(); ++i) local[std::size_t(src_elems[i])] = int(i);
  for (std::size_t i = 0; i < src_elems.size(); ++i)
    for (std::size_t j = 0; j < src_elems.size(); ++j) {
      int xy = s.op(src_elems[i], src_elems[j]);
      if (img[std::size_t(local[std::size_t(xy)])] != s.op(img[i], img[j]))
        throw EllisError("constructed map is not a homomorphism");
    }
  return img;
}

CanonicalMaps canonical_maps(const FinSemigroup& s) {
  CanonicalMaps r;
  auto ideals = minimal_left_ideals(s);
  r.unique_minimal_ideal = ideals.size() == 1;

  const LeftIdeal* group_ideal = nullptr;
  for (const auto& ideal : ideals) {
    int idems = 0;
    for (int x = ideal.members.first(); x >= 0; x = ideal.members.next(x))
      if (s.op(x, x) == x) ++idems;
    if (idems == 1) {
      group_ideal = &ideal;
      break;  // ideals are sorted by least member; first hit is canonical
    }
  }
  r.group_ideal_exists = group_ideal != nullptr;

  if (group_ideal) {
    int u = -1;
    for (int x = group_ideal->members.first(); x >= 0; x = group_ideal->members.next(x))
      if (s.op(x, x) == x) u = x;
    r.phi_idem = u;
    std::vector<int> phi(std::size_t(s.size()), 0);
    for (int x = 0; x < s.size(); ++x) phi[std::size_t(x)] = s.op(x, u);
    bool hom = true, retr = true;
    Bits image{std::size_t(s.size())};
    for (int x = 0; x < s.size(); ++x) {
      image.set(std::size_t(phi[std::size_t(x)]));
      for (int y = 0; y < s.size(); ++y)
        if (phi[std::size_t(s.op(x, y))] !=
            s.op(phi[std::size_t(x)], phi[std::size_t(y)]))
          hom = false;
    }
    for (int x = group_ideal->members.first(); x >= 0; x = group_ideal->members.next(x))
      if (phi[std::size_t(x)] != x) retr = false;
    bool img_ok = image == group_ideal->members;
    r.checks.add("phi_homomorphism", hom);
    r.checks.add("phi_image", img_ok);
    r.checks.add("phi_retraction", retr);
    if (!(hom && img_ok && retr))
      throw EllisError("retraction onto a group ideal failed verification");
    r.phi = std::move(phi);
  }

  if (r.unique_minimal_ideal) {
    const auto& ideal = ideals.front();
    int u = -1;
    for (int x = ideal.members.first(); x >= 0 && u < 0; x = ideal.members.next(x))
      if (s.op(x, x) == x) u = x;
    r.psi_idem = u;
    std::vector<int> psi(std::size_t(s.size()), 0);
    for (int x = 0; x < s.size(); ++x) psi[std::size_t(x)] = s.op(u, x);
    bool hom = true;
    Bits image{std::size_t(s.size())};
    for (int x = 0; x < s.size(); ++x) {
      image.set(std::size_t(psi[std::size_t(x)]));
      for (int y = 0; y < s.size(); ++y)
        if (psi[std::size_t(s.op(x, y))] !=
            s.op(psi[std::size_t(x)], psi[std::size_t(y)]))
          hom = false;
    }
    Bits uI{std::size_t(s.size())};
    for (int x = ideal.members.first(); x >= 0; x = ideal.members.next(x))
      uI.set(std::size_t(s.op(u, x)));
    bool img_ok = image == uI;
    r.checks.add("psi_homomorphism", hom);
    r.checks.add("psi_image", img_ok);
    if (!(hom && img_ok)) throw EllisError("projection onto u''I'' failed verification");
    r.psi = std::move(psi);
  }
  return r;
}

StructureFlags structure_flags(const FinSemigroup& s) {
  StructureFlags f;
  f.is_commutative = s.is_commutative();
  f.is_group = s.is_group();
  auto ideals = minimal_left_ideals(s);
  f.unique_minimal_ideal = ideals.size() == 1;

  f.gip = true;
  for (const auto& ideal : ideals) {
    int idems = 0;
    for (int x = ideal.members.first(); x >= 0; x = ideal.members.next(x))
      if (s.op(x, x) == x) ++idems;
    if (idems != 1) f.gip = false;
  }

  f.translate_minimal_verified = true;
  std::vector<Bits> minimal_sets;
  for (const auto& ideal : ideals) minimal_sets.push_back(ideal.members);
  for (int a = 0; a < s.size() && f.translate_minimal_verified; ++a) {
    for (const auto& ideal : ideals) {
      Bits ia{std::size_t(s.size())};
      for (int x = ideal.members.first(); x >= 0; x = ideal.members.next(x))
        ia.set(std::size_t(s.op(x, a)));
      bool found = false;
      for (const auto& m : minimal_sets)
        if (m == ia) {
          found = true;
          break;
        }
      if (!found) {
        f.translate_minimal_verified = false;
        break;
      }
    }
  }

  if (f.is_commutative && !(f.gip && f.unique_minimal_ideal))
    throw EllisError("commutative semigroup violates gip or ideal uniqueness");
  return f;
}

SubSemigroup SubSemigroup::of(const FinSemigroup& s, const Bits& members) {
  SubSemigroup sub;
  sub.parent = &s;
  sub.elems = members.elements();
  sub.local_of.assign(std::size_t(s.size()), -1);
  for (std::size_t i = 0; i < sub.elems.size(); ++i)
    sub.local_of[std::size_t(sub.elems[i])] = int(i);
  return sub;
}

bool SubSemigroup::closed() const {
  for (int x : elems)
    for (int y : elems)
      if (local_of[std::size_t(parent->op(x, y))] < 0) return false;
  return true;
}

FinSemigroup SubSemigroup::table() const {
  if (!closed()) throw EllisError("subset is not closed under the operation");
  int k = size();
  std::vector<int> t(std::size_t(k) * std::size_t(k));
  std::vector<std::string> labels(std::size_t(k), "");
  for (int i = 0; i < k; ++i) {
    labels[std::size_t(i)] = parent->label(elems[std::size_t(i)]);
    for (int j = 0; j < k; ++j)
      t[std::size_t(i) * std::size_t(k) + std::size_t(j)] =
          local_of[std::size_t(parent->op(elems[std::size_t(i)], elems[std::size_t(j)]))];
  }
  return FinSemigroup::from_table(k, t, std::move(labels));
}

}  // namespace ellis
