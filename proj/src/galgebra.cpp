#include "ellis/galgebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ellis {

// ---------------------------------------------------------------------------
// FinGroup

FinGroup FinGroup::from_table(int order, const std::vector<int>& mul,
                              std::vector<std::string> labels) {
  if (order <= 0) throw ValidationError("group order must be positive");
  if (mul.size() != std::size_t(order) * std::size_t(order))
    throw ValidationError("group table must have order*order entries");
  FinGroup g;
  g.n_ = order;
  g.tab_.resize(mul.size());
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i] < 0 || mul[i] >= order)
      throw ValidationError("group table entry out of range: " + std::to_string(mul[i]));
    g.tab_[i] = std::uint16_t(mul[i]);
  }
  g.labels_ = std::move(labels);

  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) id = e;
  }
  if (id < 0) throw ValidationError("group table has no identity element");
  g.id_ = id;

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < order; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) throw AssociativityError(a, b, c);
    }

  g.inv_.assign(std::size_t(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == id && g.mul(b, a) == id) {
        g.inv_[std::size_t(a)] = b;
        break;
      }
    if (g.inv_[std::size_t(a)] < 0)
      throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FinGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != id_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::string FinGroup::label(int x) const {
  if (std::size_t(x) < labels_.size() && !labels_[std::size_t(x)].empty())
    return labels_[std::size_t(x)];
  return std::to_string(x);
}

Bits FinGroup::left_translate(int g, const Bits& s) const {
  Bits r{std::size_t(n_)};
  for (int x = s.first(); x >= 0; x = s.next(x)) r.set(std::size_t(mul(g, x)));
  return r;
}

Bits FinGroup::right_translate(const Bits& s, int g) const {
  Bits r{std::size_t(n_)};
  for (int x = s.first(); x >= 0; x = s.next(x)) r.set(std::size_t(mul(x, g)));
  return r;
}

Bits FinGroup::set_product(const Bits& a, const Bits& b) const {
  Bits r{std::size_t(n_)};
  for (int x = a.first(); x >= 0; x = a.next(x))
    for (int y = b.first(); y >= 0; y = b.next(y)) r.set(std::size_t(mul(x, y)));
  return r;
}

Bits FinGroup::conjugate_set(int g, const Bits& s) const {
  Bits r{std::size_t(n_)};
  for (int x = s.first(); x >= 0; x = s.next(x)) r.set(std::size_t(conj(g, x)));
  return r;
}

Bits FinGroup::subgroup_closure(const Bits& seed) const {
  Bits cur{std::size_t(n_)};
  cur.set(std::size_t(id_));
  cur |= seed;
  bool grew = true;
  while (grew) {
    grew = false;
    Bits next = cur;
    for (int x = cur.first(); x >= 0; x = cur.next(x)) {
      next.set(std::size_t(inv(x)));
      for (int y = cur.first(); y >= 0; y = cur.next(y)) next.set(std::size_t(mul(x, y)));
    }
    if (next != cur) {
      cur = next;
      grew = true;
    }
  }
  return cur;
}

bool FinGroup::is_subgroup(const Bits& s) const {
  if (!s.test(std::size_t(id_))) return false;
  for (int x = s.first(); x >= 0; x = s.next(x)) {
    if (!s.test(std::size_t(inv(x)))) return false;
    for (int y = s.first(); y >= 0; y = s.next(y))
      if (!s.test(std::size_t(mul(x, y)))) return false;
  }
  return true;
}

bool FinGroup::is_normal(const Bits& s) const {
  for (int g = 0; g < n_; ++g)
    if (conjugate_set(g, s) != s) return false;
  return true;
}

Bits FinGroup::normal_core(const Bits& subgroup) const {
  Bits core = subgroup;
  for (int g = 0; g < n_; ++g) core &= conjugate_set(g, subgroup);
  return core;
}

std::vector<Bits> FinGroup::all_subgroups() const {
  std::vector<Bits> subs;
  std::unordered_map<std::uint64_t, std::vector<int>> index;
  auto add = [&](const Bits& s) -> bool {
    auto& bucket = index[s.hash()];
    for (int i : bucket)
      if (subs[std::size_t(i)] == s) return false;
    bucket.push_back(int(subs.size()));
    subs.push_back(s);
    return true;
  };

  Bits triv{std::size_t(n_)};
  triv.set(std::size_t(id_));
  add(triv);
  std::vector<Bits> cyclics;
  for (int g = 0; g < n_; ++g) {
    Bits c = subgroup_closure(Bits::singleton(std::size_t(n_), std::size_t(g)));
    add(c);
    cyclics.push_back(std::move(c));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> snapshot = subs;
    for (const auto& h : snapshot)
      for (const auto& c : cyclics) {
        if (c.subset_of(h)) continue;
        Bits j = subgroup_closure(h | c);
        if (add(j)) grew = true;
      }
  }
  std::sort(subs.begin(), subs.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return subs;
}

FinGroup FinGroup::quotient(const Bits& normal_subgroup, std::vector<int>* coset_of) const {
  if (!is_subgroup(normal_subgroup)) throw ValidationError("quotient by a non-subgroup");
  if (!is_normal(normal_subgroup)) throw ValidationError("quotient by a non-normal subgroup");
  std::vector<int> rep_of(std::size_t(n_), -1);
  for (int g = 0; g < n_; ++g) {
    if (rep_of[std::size_t(g)] >= 0) continue;
    Bits coset = left_translate(g, normal_subgroup);
    int rep = coset.first();
    for (int x = coset.first(); x >= 0; x = coset.next(x)) rep_of[std::size_t(x)] = rep;
  }
  std::vector<int> reps;
  std::vector<int> rep_index(std::size_t(n_), -1);
  for (int g = 0; g < n_; ++g)
    if (rep_of[std::size_t(g)] == g) {
      rep_index[std::size_t(g)] = int(reps.size());
      reps.push_back(g);
    }
  int k = int(reps.size());
  std::vector<int> t(std::size_t(k) * std::size_t(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[std::size_t(i) * std::size_t(k) + std::size_t(j)] = rep_index[std::size_t(
          rep_of[std::size_t(mul(reps[std::size_t(i)], reps[std::size_t(j)]))])];
  std::vector<std::string> labels;
  labels.reserve(reps.size());
  for (int r : reps) labels.push_back(label(r) + "K");
  if (coset_of) {
    coset_of->assign(std::size_t(n_), -1);
    for (int g = 0; g < n_; ++g)
      (*coset_of)[std::size_t(g)] = rep_index[std::size_t(rep_of[std::size_t(g)])];
  }
  return from_table(k, t, std::move(labels));
}

FinSemigroup FinGroup::as_semigroup() const {
  std::vector<int> t(tab_.begin(), tab_.end());
  return FinSemigroup::from_table(n_, t, labels_);
}

std::pair<FinGroup, std::vector<int>> FinGroup::subgroup_group(const Bits& s) const {
  if (!is_subgroup(s)) throw ValidationError("subset is not a subgroup");
  std::vector<int> incl = s.elements();
  std::vector<int> local(std::size_t(n_), -1);
  for (std::size_t i = 0; i < incl.size(); ++i) local[std::size_t(incl[i])] = int(i);
  int k = int(incl.size());
  std::vector<int> t(std::size_t(k) * std::size_t(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[std::size_t(i) * std::size_t(k) + std::size_t(j)] =
          local[std::size_t(mul(incl[std::size_t(i)], incl[std::size_t(j)]))];
  std::vector<std::string> labels;
  for (int x : incl) labels.push_back(label(x));
  return {from_table(k, t, std::move(labels)), incl};
}

// ---------------------------------------------------------------------------
// GAlgebra

void GAlgebra::index_atoms() {
  int n = group_->size();
  atom_of_.assign(std::size_t(n), -1);
  for (std::size_t a = 0; a < atoms_.size(); ++a)
    for (int x = atoms_[a].first(); x >= 0; x = atoms_[a].next(x)) {
      if (atom_of_[std::size_t(x)] >= 0) throw ValidationError("atoms are not disjoint");
      atom_of_[std::size_t(x)] = int(a);
    }
  for (int x = 0; x < n; ++x)
    if (atom_of_[std::size_t(x)] < 0) throw ValidationError("atoms do not cover the group");

  act_.assign(std::size_t(n) * atoms_.size(), -1);
  for (int g = 0; g < n; ++g)
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      Bits t = group_->left_translate(g, atoms_[a]);
      int cand = atom_of_[std::size_t(t.first())];
      if (atoms_[std::size_t(cand)] != t)
        throw ValidationError("left translate of an atom is not an atom");
      act_[std::size_t(g) * atoms_.size() + a] = cand;
    }
}

GAlgebra GAlgebra::from_atoms(std::shared_ptr<const FinGroup> g, std::vector<Bits> atoms) {
  if (!g) throw ValidationError("algebra requires a group");
  for (const auto& a : atoms) {
    if (a.size() != std::size_t(g->size()))
      throw ValidationError("atom width does not match the group order");
    if (a.none()) throw ValidationError("empty atom");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Bits& a, const Bits& b) { return a.first() < b.first(); });
  GAlgebra r;
  r.group_ = std::move(g);
  r.atoms_ = std::move(atoms);
  r.index_atoms();
  return r;
}

GAlgebra GAlgebra::generate(std::shared_ptr<const FinGroup> g, const std::vector<Bits>& seeds) {
  int n = g->size();
  std::vector<Bits> tests;
  for (const auto& s : seeds) {
    if (s.size() != std::size_t(n))
      throw ValidationError("seed width does not match the group order");
    for (int t = 0; t < n; ++t) tests.push_back(g->left_translate(t, s));
  }
  // atoms are the classes of the membership signature over all translates
  std::map<std::vector<bool>, Bits> classes;
  for (int x = 0; x < n; ++x) {
    std::vector<bool> sig;
    sig.reserve(tests.size());
    for (const auto& t : tests) sig.push_back(t.test(std::size_t(x)));
    auto it = classes.find(sig);
    if (it == classes.end()) {
      Bits b{std::size_t(n)};
      b.set(std::size_t(x));
      classes.emplace(std::move(sig), std::move(b));
    } else {
      it->second.set(std::size_t(x));
    }
  }
  std::vector<Bits> atoms;
  atoms.reserve(classes.size());
  for (auto& [sig, b] : classes) atoms.push_back(b);
  return from_atoms(std::move(g), std::move(atoms));
}

GAlgebra GAlgebra::power_set(std::shared_ptr<const FinGroup> g) {
  std::vector<Bits> atoms;
  for (int x = 0; x < g->size(); ++x)
    atoms.push_back(Bits::singleton(std::size_t(g->size()), std::size_t(x)));
  return from_atoms(std::move(g), std::move(atoms));
}

GAlgebra GAlgebra::trivial(std::shared_ptr<const FinGroup> g) {
  std::vector<Bits> atoms{Bits(std::size_t(g->size()), true)};
  return from_atoms(std::move(g), std::move(atoms));
}

GAlgebra GAlgebra::coset_algebra(std::shared_ptr<const FinGroup> g, const Bits& subgroup) {
  if (!g->is_subgroup(subgroup)) throw ValidationError("coset algebra needs a subgroup");
  std::vector<Bits> atoms;
  Bits covered{std::size_t(g->size())};
  for (int x = 0; x < g->size(); ++x) {
    if (covered.test(std::size_t(x))) continue;
    Bits c = g->left_translate(x, subgroup);
    covered |= c;
    atoms.push_back(std::move(c));
  }
  return from_atoms(std::move(g), std::move(atoms));
}

bool GAlgebra::contains(const Bits& subset) const {
  if (subset.size() != std::size_t(group_->size())) return false;
  for (const auto& a : atoms_)
    if (a.intersects(subset) && !a.subset_of(subset)) return false;
  return true;
}

bool GAlgebra::atoms_are_cosets() const {
  const Bits& k = atoms_[std::size_t(atom_of(group_->identity()))];
  if (!group_->is_subgroup(k)) return false;
  for (const auto& a : atoms_) {
    Bits coset = group_->left_translate(a.first(), k);
    if (coset != a) return false;
  }
  return true;
}

std::string GAlgebra::describe() const {
  std::string s;
  for (const auto& a : atoms_) {
    if (!s.empty()) s += " ";
    s += a.to_set_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// d-maps and the point semigroup

Bits DMap::image_of(const Bits& member) const {
  Bits r{std::size_t(algebra->group().size())};
  for (int a = 0; a < algebra->atom_count(); ++a)
    if (algebra->atom(a).subset_of(member)) r |= atom_images[std::size_t(a)];
  return r;
}

DMap d_map(const GAlgebra& alg, int point) {
  DMap d;
  d.algebra = &alg;
  d.point = point;
  d.atom_images.assign(std::size_t(alg.atom_count()), Bits{std::size_t(alg.group().size())});
  for (int g = 0; g < alg.group().size(); ++g)
    d.atom_images[std::size_t(alg.act(g, point))].set(std::size_t(g));
  return d;
}

namespace {

/// First (point, atom) whose d-image escapes, or nullopt when d-closed.
std::optional<std::pair<int, int>> d_escape_witness(const GAlgebra& a) {
  for (int p = 0; p < a.atom_count(); ++p) {
    DMap d = d_map(a, p);
    for (int at = 0; at < a.atom_count(); ++at) {
      const Bits& img = d.atom_images[std::size_t(at)];
      if (img.any() && !a.contains(img)) return std::make_pair(p, at);
    }
  }
  return std::nullopt;
}

}  // namespace

DClosureResult d_closure(const GAlgebra& a) {
  DClosureResult r;
  r.witness = d_escape_witness(a);
  r.was_closed = !r.witness.has_value();
  GAlgebra cur = a;
  while (true) {
    auto w = d_escape_witness(cur);
    if (!w) break;
    std::vector<Bits> seeds = cur.atoms();
    for (int p = 0; p < cur.atom_count(); ++p) {
      DMap d = d_map(cur, p);
      for (auto& img : d.atom_images)
        if (img.any()) seeds.push_back(img);
    }
    cur = GAlgebra::generate(cur.group_ptr(), seeds);
    ++r.iterations;
  }
  r.closed = std::move(cur);
  return r;
}

TypeSemigroupResult type_semigroup(const GAlgebra& a) {
  if (auto w = d_escape_witness(a)) throw NotDClosed(w->first, w->second);

  TypeSemigroupResult r;
  int k = a.atom_count();
  for (int p = 0; p < k; ++p) r.dmaps.push_back(d_map(a, p));

  // p*q is the atom a.act(g, q) for g in atom(p); d-closedness makes the
  // choice of g immaterial, which is re-verified here.
  bool act_consistent = true;
  std::vector<int> table(std::size_t(k) * std::size_t(k));
  for (int p = 0; p < k; ++p) {
    const Bits& ap = a.atom(p);
    for (int q = 0; q < k; ++q) {
      int c = a.act(ap.first(), q);
      for (int g = ap.first(); g >= 0; g = ap.next(g))
        if (a.act(g, q) != c) act_consistent = false;
      table[std::size_t(p) * std::size_t(k) + std::size_t(q)] = c;
    }
  }
  r.checks.add("product_well_defined", act_consistent);

  std::vector<std::string> labels;
  for (int p = 0; p < k; ++p) labels.push_back("p" + a.atom(p).to_set_string());
  r.semigroup = FinSemigroup::from_table(k, table, std::move(labels));
  r.checks.add("star_associative", true);  // from_table would have thrown

  bool dcomp = true;
  for (int p = 0; p < k && dcomp; ++p)
    for (int q = 0; q < k && dcomp; ++q) {
      int pq = r.semigroup.op(p, q);
      for (int at = 0; at < k; ++at) {
        Bits lhs = r.dmaps[std::size_t(pq)].atom_images[std::size_t(at)];
        Bits rhs =
            r.dmaps[std::size_t(p)].image_of(r.dmaps[std::size_t(q)].atom_images[std::size_t(at)]);
        if (lhs != rhs) {
          dcomp = false;
          break;
        }
      }
    }
  r.checks.add("d_composition", dcomp);

  bool injective = true;
  for (int p = 0; p < k && injective; ++p)
    for (int q = p + 1; q < k && injective; ++q)
      if (r.dmaps[std::size_t(p)] == r.dmaps[std::size_t(q)]) injective = false;
  r.checks.add("d_injective", injective);

  // translation-generated Ellis semigroup equals the left product maps
  std::vector<std::vector<int>> lg;
  for (int g = 0; g < a.group().size(); ++g) {
    std::vector<int> m(std::size_t(k), 0);
    for (int q = 0; q < k; ++q) m[std::size_t(q)] = a.act(g, q);
    lg.push_back(std::move(m));
  }
  auto ellis = FinSemigroup::from_generators(k, lg);
  std::set<std::vector<int>> ellis_maps(ellis.element_maps().begin(), ellis.element_maps().end());
  std::set<std::vector<int>> point_maps;
  for (int p = 0; p < k; ++p) {
    std::vector<int> m(std::size_t(k), 0);
    for (int q = 0; q < k; ++q) m[std::size_t(q)] = r.semigroup.op(p, q);
    point_maps.insert(std::move(m));
  }
  r.checks.add("ellis_translations", ellis_maps == point_maps,
               ellis_maps == point_maps
                   ? ""
                   : "translation closure has " + std::to_string(ellis_maps.size()) +
                         " maps, points give " + std::to_string(point_maps.size()));

  bool flow_ok = true;
  for (int g = 0; g < a.group().size() && flow_ok; ++g)
    for (int q = 0; q < k && flow_ok; ++q)
      flow_ok = r.semigroup.op(a.atom_of(g), q) == a.act(g, q);
  r.checks.add("flow_action", flow_ok);

  // the point semigroup of a finite d-closed algebra is the quotient group
  const Bits& kat = a.atom(a.atom_of(a.group().identity()));
  bool quotient_ok = a.group().is_subgroup(kat) && a.group().is_normal(kat);
  if (quotient_ok) {
    std::vector<int> coset_of;
    FinGroup q = a.group().quotient(kat, &coset_of);
    if (q.size() != k) {
      quotient_ok = false;
    } else {
      for (int x = 0; x < a.group().size() && quotient_ok; ++x)
        for (int y = 0; y < a.group().size() && quotient_ok; ++y)
          quotient_ok =
              r.semigroup.op(a.atom_of(x), a.atom_of(y)) == a.atom_of(a.group().mul(x, y));
    }
  }
  r.checks.add("quotient_group", quotient_ok);
  return r;
}

KernelImage kernel_image(const GAlgebra& a, int point) {
  if (auto w = d_escape_witness(a)) throw NotDClosed(w->first, w->second);
  DMap d = d_map(a, point);
  KernelImage r;
  r.kernel_max = Bits{std::size_t(a.group().size())};
  std::vector<Bits> image_atoms;
  for (int at = 0; at < a.atom_count(); ++at) {
    const Bits& img = d.atom_images[std::size_t(at)];
    if (img.none()) {
      r.kernel_max |= a.atom(at);
    } else {
      image_atoms.push_back(img);
    }
  }
  r.image = GAlgebra::from_atoms(a.group_ptr(), std::move(image_atoms));
  return r;
}

// ---------------------------------------------------------------------------
// suites

ItemList structure_suite(const GAlgebra& a) {
  ItemList out;
  Bits all{std::size_t(a.group().size())};
  std::size_t total = 0;
  for (const auto& at : a.atoms()) {
    total += at.count();
    all |= at;
  }
  out.add("atom_partition", total == std::size_t(a.group().size()) && all.count() == total);
  out.add("atoms_are_cosets", a.atoms_are_cosets());

  auto g = a.group_ptr();
  GAlgebra regen = GAlgebra::generate(g, a.atoms());
  out.add("generate_idempotent", regen == a);

  bool extensive = true;
  for (const auto& at : a.atoms())
    if (!regen.contains(at)) extensive = false;
  out.add("generate_extensive", extensive);

  if (a.atom_count() >= 2) {
    GAlgebra a1 = GAlgebra::generate(g, {a.atom(0)});
    GAlgebra a2 = GAlgebra::generate(g, {a.atom(0), a.atom(1)});
    // inclusion as algebras: the partition of a2 refines the partition of a1
    bool monotone = true;
    for (int i = 0; i < a2.atom_count() && monotone; ++i) {
      int host = a1.atom_of(a2.atom(i).first());
      monotone = a2.atom(i).subset_of(a1.atom(host));
    }
    out.add("generate_monotone", monotone);
  } else {
    out.add("generate_monotone", true, "fewer than two atoms");
  }
  return out;
}

ItemList dmap_law_suite(const GAlgebra& a) {
  ItemList out;
  const FinGroup& g = a.group();
  bool partition = true, equivariant = true, boolean = true;
  for (int p = 0; p < a.atom_count(); ++p) {
    DMap d = d_map(a, p);
    Bits seen{std::size_t(g.size())};
    std::size_t total = 0;
    for (const auto& img : d.atom_images) {
      total += img.count();
      seen |= img;
    }
    if (total != std::size_t(g.size()) || seen.count() != total) partition = false;

    for (int t = 0; t < g.size() && equivariant; ++t)
      for (int at = 0; at < a.atom_count() && equivariant; ++at)
        equivariant = d.atom_images[std::size_t(a.act(t, at))] ==
                      g.left_translate(t, d.atom_images[std::size_t(at)]);

    for (int at = 0; at < a.atom_count() && boolean; ++at)
      boolean = d.image_of(a.atom(at).complement()) == d.image_of(a.atom(at)).complement();
  }
  out.add("dmap_partitions", partition);
  out.add("dmap_equivariant", equivariant);
  out.add("dmap_boolean", boolean);
  return out;
}

ItemList dclosure_core_suite(const GAlgebra& a) {
  ItemList out;
  const Bits& k = a.atom(a.atom_of(a.group().identity()));
  if (!a.group().is_subgroup(k)) {
    out.add("dclosure_core", false, "identity atom is not a subgroup");
    return out;
  }
  Bits core = a.group().normal_core(k);
  GAlgebra expected = GAlgebra::coset_algebra(a.group_ptr(), core);
  auto dc = d_closure(a);
  out.add("dclosure_core", dc.closed == expected,
          dc.closed == expected ? "" : "closure differs from the coset algebra of the core");
  out.add("dclosure_flag", dc.was_closed == a.group().is_normal(k));
  out.add("dclosure_verified_closed", d_closure(dc.closed).was_closed);
  return out;
}

ItemList ellis_translation_suite(const GAlgebra& a) {
  ItemList out;
  auto dc = d_closure(a);
  if (dc.was_closed) {
    auto ts = type_semigroup(a);
    for (const auto& item : ts.checks.items)
      if (item.name == "ellis_translations" || item.name == "flow_action")
        out.items.push_back(item);
    return out;
  }

  // the algebra is not d-closed: compare the translation closure on its
  // atoms with the point semigroup of the d-closure
  int k = a.atom_count();
  std::vector<std::vector<int>> lg;
  for (int g = 0; g < a.group().size(); ++g) {
    std::vector<int> m(std::size_t(k), 0);
    for (int q = 0; q < k; ++q) m[std::size_t(q)] = a.act(g, q);
    lg.push_back(std::move(m));
  }
  auto ellis = FinSemigroup::from_generators(k, lg);

  const GAlgebra& ad = dc.closed;
  auto tsd = type_semigroup(ad);
  int kd = ad.atom_count();

  auto restrict_point = [&](int fine) { return a.atom_of(ad.atom(fine).first()); };
  std::vector<std::vector<int>> fibers(std::size_t(k));
  for (int f = 0; f < kd; ++f) fibers[std::size_t(restrict_point(f))].push_back(f);

  bool well_defined = true;
  std::vector<std::vector<int>> fmaps;
  for (int p = 0; p < kd; ++p) {
    std::vector<int> fp(std::size_t(k), -1);
    for (int q = 0; q < k; ++q) {
      int val = -1;
      for (int qf : fibers[std::size_t(q)]) {
        int v = restrict_point(tsd.semigroup.op(p, qf));
        if (val < 0)
          val = v;
        else if (val != v)
          well_defined = false;
      }
      fp[std::size_t(q)] = val;
    }
    fmaps.push_back(std::move(fp));
  }
  out.add("closure_map_well_defined", well_defined);

  std::set<std::vector<int>> fset(fmaps.begin(), fmaps.end());
  std::set<std::vector<int>> eset(ellis.element_maps().begin(), ellis.element_maps().end());
  out.add("closure_matches_translations", fset == eset);
  out.add("closure_map_injective", fset.size() == std::size_t(kd));

  bool hom = true;
  for (int p = 0; p < kd && hom; ++p)
    for (int q = 0; q < kd && hom; ++q) {
      const auto& composed = fmaps[std::size_t(tsd.semigroup.op(p, q))];
      for (int x = 0; x < k; ++x)
        if (composed[std::size_t(x)] !=
            fmaps[std::size_t(p)][std::size_t(fmaps[std::size_t(q)][std::size_t(x)])]) {
          hom = false;
          break;
        }
    }
  out.add("closure_map_homomorphism", hom);

  bool flow = true;
  for (int g = 0; g < a.group().size() && flow; ++g)
    flow = fmaps[std::size_t(ad.atom_of(g))] == lg[std::size_t(g)];
  out.add("closure_map_flow", flow);
  return out;
}

ItemList kernel_image_suite(const GAlgebra& a) {
  ItemList out;
  auto ts = type_semigroup(a);  // throws NotDClosed when inapplicable
  int k = a.atom_count();

  std::vector<KernelImage> ki;
  for (int p = 0; p < k; ++p) ki.push_back(kernel_image(a, p));

  bool orbit_ok = true;
  std::string orbit_note;
  for (int p = 0; p < k && orbit_ok; ++p)
    for (int q = 0; q < k && orbit_ok; ++q) {
      bool ker_sub = ki[std::size_t(p)].kernel_max.subset_of(ki[std::size_t(q)].kernel_max);
      bool orbit_sup =
          ts.semigroup.principal_left_ideal(q).subset_of(ts.semigroup.principal_left_ideal(p));
      if (ker_sub != orbit_sup) {
        orbit_ok = false;
        orbit_note = "points " + std::to_string(p) + "," + std::to_string(q);
      }
    }
  out.add("kernel_orbit_duality", orbit_ok, orbit_note);

  // subgroup checks: on every subgroup when the point semigroup is a
  // group, otherwise on its Ellis subgroups
  std::vector<std::vector<int>> subgroups;
  if (ts.semigroup.is_group()) {
    std::vector<int> t(std::size_t(k) * std::size_t(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t[std::size_t(i) * std::size_t(k) + std::size_t(j)] = ts.semigroup.op(i, j);
    FinGroup pg = FinGroup::from_table(k, t);
    for (const auto& s : pg.all_subgroups()) subgroups.push_back(s.elements());
  } else {
    for (const auto& ideal : minimal_left_ideals(ts.semigroup))
      for (const auto& eg : ellis_groups(ts.semigroup, ideal))
        subgroups.push_back(eg.elements());
  }

  bool sub_ok = true;
  std::string sub_note;
  for (const auto& s : subgroups) {
    const auto& k0 = ki[std::size_t(s[0])].kernel_max;
    const auto& r0 = ki[std::size_t(s[0])].image;
    for (int p : s)
      if (ki[std::size_t(p)].kernel_max != k0 || !(ki[std::size_t(p)].image == r0)) {
        sub_ok = false;
        sub_note = "kernel or image not constant on a subgroup";
      }
    // section of the kernel classes: counts complement and no image atom
    // sits inside the kernel
    int kernel_atoms = 0;
    for (int at = 0; at < k; ++at)
      if (a.atom(at).subset_of(k0)) ++kernel_atoms;
    if (r0.atom_count() + kernel_atoms != k) {
      sub_ok = false;
      sub_note = "image does not complement the kernel";
    }
    for (int i = 0; i < r0.atom_count(); ++i)
      if (k0.any() && r0.atom(i).subset_of(k0)) {
        sub_ok = false;
        sub_note = "an image atom lies inside the kernel";
      }
    // each d_p restricted to the image is an automorphism of it, and
    // distinct points restrict distinctly
    for (std::size_t i = 0; i < s.size() && sub_ok; ++i) {
      DMap d = d_map(a, s[i]);
      Bits seen{std::size_t(a.group().size())};
      for (int at = 0; at < r0.atom_count(); ++at) {
        Bits img = d.image_of(r0.atom(at));
        if (!r0.contains(img) || img.intersects(seen)) {
          sub_ok = false;
          sub_note = "d-map does not restrict to an automorphism of the image";
          break;
        }
        seen |= img;
      }
      for (std::size_t j = i + 1; j < s.size() && sub_ok; ++j) {
        DMap dj = d_map(a, s[j]);
        bool same = true;
        for (int at = 0; at < r0.atom_count(); ++at)
          if (d.image_of(r0.atom(at)) != dj.image_of(r0.atom(at))) same = false;
        if (same) {
          sub_ok = false;
          sub_note = "distinct points restrict to the same automorphism";
        }
      }
    }
  }
  out.add("subgroup_kernel_image", sub_ok, sub_note);

  // bijection between Ellis subgroups and kernel/image pairs
  std::vector<Bits> kernels;
  std::vector<GAlgebra> images;
  auto kernel_id = [&](const Bits& b) {
    for (std::size_t i = 0; i < kernels.size(); ++i)
      if (kernels[i] == b) return int(i);
    kernels.push_back(b);
    return int(kernels.size()) - 1;
  };
  auto image_id = [&](const GAlgebra& g) {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] == g) return int(i);
    images.push_back(g);
    return int(images.size()) - 1;
  };

  auto ideals = minimal_left_ideals(ts.semigroup);
  for (const auto& ideal : ideals)
    for (int p = ideal.members.first(); p >= 0; p = ideal.members.next(p)) {
      kernel_id(ki[std::size_t(p)].kernel_max);
      image_id(ki[std::size_t(p)].image);
    }

  bool bij_ok = true;
  std::string bij_note;
  std::set<std::pair<int, int>> pairs_seen;
  std::size_t total_groups = 0;
  std::vector<int> ideal_kernel;
  for (std::size_t ii = 0; ii < ideals.size(); ++ii) {
    std::set<int> images_here;
    int my_kernel = kernel_id(ki[std::size_t(ideals[ii].members.first())].kernel_max);
    for (int prev : ideal_kernel)
      if (prev == my_kernel) {
        bij_ok = false;
        bij_note = "distinct minimal ideals share a kernel";
      }
    ideal_kernel.push_back(my_kernel);
    for (const auto& eg : ellis_groups(ts.semigroup, ideals[ii])) {
      ++total_groups;
      auto elems = eg.elements();
      int kid = kernel_id(ki[std::size_t(elems[0])].kernel_max);
      int rid = image_id(ki[std::size_t(elems[0])].image);
      for (int p : elems)
        if (kernel_id(ki[std::size_t(p)].kernel_max) != kid ||
            image_id(ki[std::size_t(p)].image) != rid)
          bij_ok = false;
      if (!pairs_seen.insert({kid, rid}).second) {
        bij_ok = false;
        bij_note = "two Ellis subgroups share a kernel/image pair";
      }
      if (kid != my_kernel) {
        bij_ok = false;
        bij_note = "kernel varies inside one minimal ideal";
      }
      images_here.insert(rid);
    }
    if (images_here.size() != images.size()) {
      bij_ok = false;
      bij_note = "some image class is missing from an ideal";
    }
  }
  if (total_groups != kernels.size() * images.size()) {
    bij_ok = false;
    bij_note = "Ellis subgroup count differs from |K| x |R|";
  }
  out.add("kr_bijection", bij_ok, bij_note);
  return out;
}

bool is_generic(const GAlgebra& a, const Bits& member) {
  Bits u{std::size_t(a.group().size())};
  for (int g = 0; g < a.group().size(); ++g) u |= a.group().left_translate(g, member);
  return u == Bits(std::size_t(a.group().size()), true);
}

bool is_strongly_generic(const GAlgebra& a, const Bits& member) {
  GAlgebra sub = GAlgebra::generate(a.group_ptr(), {member});
  for (int i = 0; i < sub.atom_count(); ++i)
    if (!is_generic(a, sub.atom(i))) return false;
  return true;
}

GenericityReport genericity_suite(const GAlgebra& a) {
  GenericityReport r;
  int k = a.atom_count();
  const int n = a.group().size();

  if (k <= 12) {
    r.exhaustive = true;
    bool iff_ok = true;
    std::string iff_note;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
      Bits member{std::size_t(n)};
      for (int i = 0; i < k; ++i)
        if (mask & (std::uint64_t(1) << i)) member |= a.atom(i);
      ++r.member_count_checked;
      bool gen = is_generic(a, member);
      if (gen) ++r.generic_members;
      if (is_strongly_generic(a, member)) ++r.strongly_generic_members;
      if (gen != member.any()) {
        iff_ok = false;
        iff_note = "member " + member.to_set_string();
      }
    }
    r.checks.add("generic_iff_nonempty", iff_ok, iff_note);
  } else {
    // every nonempty member contains an atom and genericity is upward
    // closed, so atom genericity settles the classification
    bool atoms_ok = true;
    for (int i = 0; i < k; ++i) {
      ++r.member_count_checked;
      if (is_generic(a, a.atom(i)))
        ++r.generic_members;
      else
        atoms_ok = false;
      if (is_strongly_generic(a, a.atom(i))) ++r.strongly_generic_members;
    }
    r.checks.add("generic_iff_nonempty", atoms_ok, "checked on atoms; unions inherit");
  }

  // subalgebras correspond to subgroups between the identity atom and G
  const Bits& kat = a.atom(a.atom_of(a.group().identity()));
  std::vector<GAlgebra> generic_subs;
  if (a.group().is_subgroup(kat)) {
    for (const auto& l : a.group().all_subgroups()) {
      if (!kat.subset_of(l)) continue;
      GAlgebra sub = GAlgebra::coset_algebra(a.group_ptr(), l);
      bool generic = true;
      for (int i = 0; i < sub.atom_count(); ++i)
        if (!is_generic(a, sub.atom(i))) generic = false;
      if (generic) generic_subs.push_back(std::move(sub));
    }
  }
  for (const auto& cand : generic_subs) {
    bool maximal = true;
    for (const auto& other : generic_subs) {
      if (other == cand) continue;
      // cand is below other when the partition of other refines cand's
      bool below = true;
      for (int i = 0; i < other.atom_count() && below; ++i)
        below = other.atom(i).subset_of(cand.atom(cand.atom_of(other.atom(i).first())));
      if (below) maximal = false;
    }
    if (maximal) r.maximal_generic_subalgebras.push_back(cand);
  }

  // cross-check against the images of almost periodic points
  if (d_closure(a).was_closed) {
    auto ts = type_semigroup(a);
    std::vector<GAlgebra> rset;
    for (const auto& ideal : minimal_left_ideals(ts.semigroup))
      for (int p = ideal.members.first(); p >= 0; p = ideal.members.next(p)) {
        GAlgebra img = kernel_image(a, p).image;
        bool seen = false;
        for (const auto& x : rset)
          if (x == img) seen = true;
        if (!seen) rset.push_back(std::move(img));
      }
    bool equal = rset.size() == r.maximal_generic_subalgebras.size();
    for (const auto& x : rset) {
      bool found = false;
      for (const auto& y : r.maximal_generic_subalgebras)
        if (x == y) found = true;
      if (!found) equal = false;
    }
    r.checks.add("images_are_maximal_generic", equal);
  } else {
    r.checks.add("images_are_maximal_generic", true, "not d-closed; check skipped");
  }
  return r;
}

}  // namespace ellis
