#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellis/bits.hpp"
#include "ellis/check.hpp"
#include "ellis/error.hpp"

namespace ellis {

/// A finite semigroup given by its full operation table.
///
/// Elements are dense indices 0..size()-1. Two construction routes exist:
/// an explicit table (verified associative, with a witness triple on
/// failure) and the composition closure of a set of self-maps of a finite
/// point set, in which case each element carries its image tuple and the
/// table is the composition table. Instances are immutable after
/// construction and safe to share across threads.
class FinSemigroup {
 public:
  FinSemigroup() = default;

  static FinSemigroup from_table(int size, const std::vector<int>& table,
                                 std::vector<std::string> labels = {});

  /// Breadth-first composition closure of self-maps of {0..points-1}.
  /// Element order: the generators in input order (duplicates dropped),
  /// then products in discovery order. op(x, y) applies y first.
  static FinSemigroup from_generators(int points, const std::vector<std::vector<int>>& gens);

  int size() const { return n_; }
  int op(int x, int y) const { return tab_[std::size_t(x) * std::size_t(n_) + std::size_t(y)]; }

  std::optional<int> identity() const;
  bool is_commutative() const;
  bool is_group() const;

  bool generated() const { return !maps_.empty(); }
  const std::vector<std::vector<int>>& element_maps() const { return maps_; }
  int points() const { return points_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const;

  /// {x} together with Sx; no identity is adjoined to the carrier.
  Bits principal_left_ideal(int x) const;

 private:
  int n_ = 0;
  int points_ = 0;
  std::vector<std::uint16_t> tab_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> maps_;  // populated in generator mode

  void verify_associative() const;
};

/// A left ideal of `parent`; `minimal` records the outcome of the
/// minimality computation that produced it. Views stay valid while the
/// parent semigroup is alive.
struct LeftIdeal {
  const FinSemigroup* parent = nullptr;
  Bits members;
  bool minimal = false;

  std::vector<int> elements() const { return members.elements(); }
  int least() const { return members.first(); }
};

/// The group uI carried by an idempotent u of a minimal left ideal I.
struct EllisGroup {
  LeftIdeal ideal;
  int idem = -1;
  Bits members;

  std::vector<int> elements() const { return members.elements(); }
};

std::vector<int> idempotents(const FinSemigroup& s);

bool is_left_ideal(const FinSemigroup& s, const Bits& members);
bool is_minimal_left_ideal(const FinSemigroup& s, const Bits& members);

/// All minimal left ideals: the inclusion-minimal principal left ideals,
/// deduplicated, sorted by least member. Verifies that the result is
/// pairwise disjoint and that every ideal contains an idempotent.
std::vector<LeftIdeal> minimal_left_ideals(const FinSemigroup& s);

/// One group per idempotent of the minimal ideal; verifies each uI is a
/// group and that I is their disjoint union. Throws NonMinimalIdeal when
/// the ideal's minimality flag is unset.
std::vector<EllisGroup> ellis_groups(const FinSemigroup& s, const LeftIdeal& ideal);

/// A verified group isomorphism src -> dst, aligned with src.elements().
/// Same ideal: x -> u'xu'. Across ideals: a same-kernel move through the
/// intermediate idempotent v in J(src.ideal) with vu' = u', u'v = v,
/// followed by the same-image move x -> xu'.
std::vector<int> ellis_group_iso(const FinSemigroup& s, const EllisGroup& src,
                                 const EllisGroup& dst);

struct CanonicalMaps {
  bool group_ideal_exists = false;   // some minimal left ideal is a group
  bool unique_minimal_ideal = false;
  std::optional<std::vector<int>> phi;  // x -> x*u'' onto the least group ideal
  std::optional<std::vector<int>> psi;  // x -> u''*x when the minimal ideal is unique
  int phi_idem = -1;
  int psi_idem = -1;
  ItemList checks;
};

/// phi is produced when some minimal left ideal is a group (a retraction
/// of S onto it); psi when the minimal left ideal is unique (a projection
/// onto u''I''). Both are verified homomorphisms with the stated images.
CanonicalMaps canonical_maps(const FinSemigroup& s);

struct StructureFlags {
  bool is_commutative = false;
  bool is_group = false;
  bool gip = false;                   // every minimal left ideal is a group
  bool unique_minimal_ideal = false;
  bool translate_minimal_verified = false;  // Ia minimal for all a and minimal I
};

StructureFlags structure_flags(const FinSemigroup& s);

/// View of a subset closed under the parent's operation.
struct SubSemigroup {
  const FinSemigroup* parent = nullptr;
  std::vector<int> elems;     // sorted global indices
  std::vector<int> local_of;  // global -> local index or -1

  static SubSemigroup of(const FinSemigroup& s, const Bits& members);
  int size() const { return int(elems.size()); }
  int global(int local) const { return elems[std::size_t(local)]; }
  int local(int g) const { return local_of[std::size_t(g)]; }
  bool closed() const;
  FinSemigroup table() const;  // local operation table; requires closed()
};

}  // namespace ellis
