#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ellis/galgebra.hpp"

namespace ellis {

// Group constructions. Identities land at index 0 except where noted;
// every table passes the full axiom check in FinGroup::from_table.

FinGroup cyclic_group(int n);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// A x| B with the action of b on A given elementwise; act(b, .) must be an
/// automorphism of A for every b and b -> act(b, .) a homomorphism, which
/// the resulting table check enforces.
FinGroup semidirect_product(const FinGroup& a, const FinGroup& b,
                            const std::function<int(int, int)>& act);
/// C_n x| C_m with the generator of C_m acting by x -> kx; needs k^m = 1 (mod n).
FinGroup semidirect_cyclic(int n, int m, int k);
FinGroup dihedral_group(int n);  // order 2n
FinGroup dicyclic_group(int n);  // order 4n; n=2 gives the quaternions
FinGroup symmetric_group(int n);
FinGroup alternating_group4();
FinGroup special_linear_2_3();

struct CatalogEntry {
  std::string name;
  FinGroup group;
};

/// Every group of the given order up to isomorphism, constructed on
/// demand (no stored tables). Supported for order <= 24.
const std::vector<CatalogEntry>& small_groups(int order);

/// All catalog entries with order in [min_order, max_order].
std::vector<const CatalogEntry*> small_groups_range(int min_order, int max_order);

/// How many isomorphism types each order has; index = order, up to 24.
const std::vector<int>& group_counts_by_order();

/// Backtracking isomorphism test on generator images.
bool is_isomorphic(const FinGroup& g, const FinGroup& h);

}  // namespace ellis
