#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellis/bits.hpp"
#include "ellis/check.hpp"
#include "ellis/error.hpp"
#include "ellis/semigroup.hpp"

namespace ellis {

/// A finite group by its Cayley table; the axioms are verified at
/// construction. Immutable afterwards.
class FinGroup {
 public:
  FinGroup() = default;

  static FinGroup from_table(int order, const std::vector<int>& mul,
                             std::vector<std::string> labels = {});

  int size() const { return n_; }
  int mul(int a, int b) const { return tab_[std::size_t(a) * std::size_t(n_) + std::size_t(b)]; }
  int inv(int a) const { return inv_[std::size_t(a)]; }
  int identity() const { return id_; }
  bool is_abelian() const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int g) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const;

  Bits left_translate(int g, const Bits& s) const;   // gS
  Bits right_translate(const Bits& s, int g) const;  // Sg
  Bits set_product(const Bits& a, const Bits& b) const;
  Bits conjugate_set(int g, const Bits& s) const;  // g S g^-1

  Bits subgroup_closure(const Bits& seed) const;
  bool is_subgroup(const Bits& s) const;
  bool is_normal(const Bits& s) const;
  /// Largest normal subgroup contained in s, by intersecting all conjugates.
  Bits normal_core(const Bits& subgroup) const;
  std::vector<Bits> all_subgroups() const;

  /// Quotient by a normal subgroup. Cosets are indexed by ascending least
  /// representative; coset_of (when given) receives the element -> coset map.
  FinGroup quotient(const Bits& normal_subgroup, std::vector<int>* coset_of = nullptr) const;

  FinSemigroup as_semigroup() const;

  /// The subgroup as its own FinGroup plus the inclusion map into this one.
  std::pair<FinGroup, std::vector<int>> subgroup_group(const Bits& s) const;

 private:
  int n_ = 0;
  int id_ = 0;
  std::vector<std::uint16_t> tab_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// A boolean algebra of subsets of a finite group, closed under left
/// translation, stored by its atom partition (atoms sorted by least
/// member). Membership of an arbitrary subset means being a union of
/// atoms.
class GAlgebra {
 public:
  GAlgebra() = default;

  /// Validates that atoms partition the group and that every left
  /// translate of an atom is again an atom.
  static GAlgebra from_atoms(std::shared_ptr<const FinGroup> g, std::vector<Bits> atoms);

  /// Smallest translation-closed algebra containing the seeds: atoms are
  /// the classes of the signature x -> (x in t·s) over all translates of
  /// all seeds.
  static GAlgebra generate(std::shared_ptr<const FinGroup> g, const std::vector<Bits>& seeds);

  static GAlgebra power_set(std::shared_ptr<const FinGroup> g);
  static GAlgebra trivial(std::shared_ptr<const FinGroup> g);
  static GAlgebra coset_algebra(std::shared_ptr<const FinGroup> g, const Bits& subgroup);

  const FinGroup& group() const { return *group_; }
  std::shared_ptr<const FinGroup> group_ptr() const { return group_; }

  int atom_count() const { return int(atoms_.size()); }
  const Bits& atom(int i) const { return atoms_[std::size_t(i)]; }
  const std::vector<Bits>& atoms() const { return atoms_; }
  int atom_of(int element) const { return atom_of_[std::size_t(element)]; }

  bool contains(const Bits& subset) const;

  /// Atom index of g·atom(a).
  int act(int g, int a) const { return act_[std::size_t(g) * atoms_.size() + std::size_t(a)]; }

  bool operator==(const GAlgebra& o) const {
    return group_->size() == o.group_->size() && atoms_ == o.atoms_;
  }
  bool operator!=(const GAlgebra& o) const { return !(*this == o); }

  /// True when the atom containing the identity is a subgroup whose left
  /// cosets are exactly the atoms; holds for every valid instance.
  bool atoms_are_cosets() const;

  std::string describe() const;

 private:
  std::shared_ptr<const FinGroup> group_;
  std::vector<Bits> atoms_;
  std::vector<int> atom_of_;
  std::vector<int> act_;

  void index_atoms();
};

/// A point of the Stone space of a finite algebra: an atom index standing
/// for the principal ultrafilter at that atom.
struct TypePoint {
  const GAlgebra* algebra = nullptr;
  int atom = -1;
};

/// The d-map of a point p: A -> {g : g^{-1}A in p}, tabulated on atoms.
/// It is a homomorphism into the power set; the image of an atom a is the
/// fiber {g : g·atom(p) = a}.
struct DMap {
  const GAlgebra* algebra = nullptr;
  int point = -1;
  std::vector<Bits> atom_images;

  Bits image_of(const Bits& member) const;
  bool operator==(const DMap& o) const { return atom_images == o.atom_images; }
};

DMap d_map(const GAlgebra& a, int point);

struct DClosureResult {
  GAlgebra closed;
  bool was_closed = false;
  std::optional<std::pair<int, int>> witness;  // (point, atom) escaping when not closed
  int iterations = 0;
};

DClosureResult d_closure(const GAlgebra& a);

struct TypeSemigroupResult {
  FinSemigroup semigroup;  // point i is atom i
  std::vector<DMap> dmaps;
  ItemList checks;
};

/// The semigroup of points of a d-closed algebra, with p*q the unique
/// atom whose members' d_q-images all lie in p. Throws NotDClosed with a
/// witness otherwise. The report verifies: associativity and
/// d-composition, injectivity of d, the translation-generated Ellis
/// semigroup equals the left-translation maps of the points, and the flow
/// action agrees with multiplication by the principal points.
TypeSemigroupResult type_semigroup(const GAlgebra& a);

struct KernelImage {
  Bits kernel_max;  // the largest member with empty d_p-image
  GAlgebra image;   // subalgebra generated by the atom images
};

KernelImage kernel_image(const GAlgebra& a, int point);

/// Checks for kernels and images over the whole point semigroup: kernel
/// containment against orbit-closure containment, common kernel/image on
/// every subgroup, and the bijection between Ellis subgroups and
/// kernel/image pairs.
ItemList kernel_image_suite(const GAlgebra& a);

bool is_generic(const GAlgebra& a, const Bits& member);
bool is_strongly_generic(const GAlgebra& a, const Bits& member);

struct GenericityReport {
  int member_count_checked = 0;
  int generic_members = 0;
  int strongly_generic_members = 0;
  bool exhaustive = false;  // every member enumerated (only for small algebras)
  std::vector<GAlgebra> maximal_generic_subalgebras;
  ItemList checks;
};

/// Classifies members as generic/strongly generic and, when the algebra
/// is d-closed, cross-checks that the images of the d-maps of almost
/// periodic points are exactly the maximal generic subalgebras. At finite
/// scale every nonempty subset is generic (its |G| translates cover), so
/// the substance here is the exact cross-check, not the classification.
GenericityReport genericity_suite(const GAlgebra& a);

/// Remaining structural checks wired into the check runner: partition and
/// coset structure, closure-operator laws of generate(), d-map
/// homomorphism laws, the d-closure against the normal core of the atom
/// at the identity (computed independently by conjugation), the
/// translation Ellis semigroup, the quotient-group shape of the point
/// semigroup, and, for non-closed algebras, the empirical identification
/// of the translation closure with the point semigroup of the d-closure.
ItemList structure_suite(const GAlgebra& a);
ItemList dmap_law_suite(const GAlgebra& a);
ItemList dclosure_core_suite(const GAlgebra& a);
ItemList ellis_translation_suite(const GAlgebra& a);

}  // namespace ellis
