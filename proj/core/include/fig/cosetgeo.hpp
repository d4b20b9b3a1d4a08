#pragma once

#include <map>
#include <string>

#include "fig/matgroup.hpp"
#include "fig/perm.hpp"
#include "fig/pregeo.hpp"

namespace fig {

/// Checks that every generator acts on the pregeometry by a type-preserving
/// automorphism; NotAnAction otherwise.
void verify_action(const Pregeometry& g, const std::vector<Perm>& gens);

/// Permutations of element ids induced by matrices acting on the canonical
/// subspace list of a materialized orthogonal geometry. The action may have
/// kernel (e.g. -I); group-theoretic sizes then refer to the image group,
/// which is the relevant automorphism group.
std::vector<Perm> action_from_matrices(const std::vector<Subspace>& elements,
                                       const MatGroup& mg);

/// One member (G^{t,i}) of a subgroup family: the subgroup plus the type of
/// the coset class it produces and the tag t distinguishing classes of the
/// same type.
struct FamilyEntry {
  PermGroup subgroup;
  int type = 1;
  std::string tag;
};

/// Coset pregeometry of G with respect to the family, by (Cos): cosets of
/// different types are incident iff they intersect; cosets in the same class
/// are incident only reflexively; distinct classes of equal type are never
/// incident. Requires G enumerable under the cap.
struct CosetGeometryResult {
  Pregeometry geometry;
  // element i of the geometry is coset coset_of_family[i].second of family
  // member coset_of_family[i].first, represented by its minimal element
  std::vector<std::pair<std::size_t, Perm>> cosets;
};
CosetGeometryResult coset_pregeometry(const PermGroup& g, const std::vector<FamilyEntry>& family,
                                      std::size_t cap = 2000000);

/// Theorem-level connectivity criterion: the coset pregeometry is connected
/// iff the family members generate G.
bool connectivity_criterion(const PermGroup& g, const std::vector<FamilyEntry>& family);

/// Sketch of a pregeometry with respect to a group of automorphisms and a
/// set of orbit representatives: the coset pregeometry of the stabilizers,
/// encoded through the coset <-> orbit-point bijection a G_w <-> a.w. The
/// incidence relation is computed honestly from (Cos) by sweeping the group
/// elements, not assumed equal to the geometry's.
struct Sketch {
  Pregeometry geometry;                       // the coset pregeometry
  std::vector<std::pair<int, int>> vertices;  // (representative id w, point x = image of w)
  std::vector<int> reps;                      // W in input order
};
Sketch make_sketch(const Pregeometry& g, const PermGroup& aut, const std::vector<int>& reps,
                   std::size_t cap = 2000000);

/// Stroppel reconstruction: verifies that gG_w -> g.w is a type-, incidence-
/// and action-preserving bijection from the sketch onto the geometry.
/// Hypotheses ((i) W is a hall, (ii) chamber orbit pregeometries are
/// incidence-transitive) are checked, not assumed.
struct StroppelReport {
  bool hypothesis_hall = false;
  bool hypothesis_incidence_transitive = false;
  bool bijective = false;
  bool type_preserving = false;
  std::size_t incidence_mismatches = 0;
  std::size_t checked_pairs = 0;
  bool isomorphic() const {
    return hypothesis_hall && hypothesis_incidence_transitive && bijective &&
           type_preserving && incidence_mismatches == 0;
  }
};
StroppelReport stroppel_reconstruct(const Pregeometry& g, const PermGroup& aut,
                                    const std::vector<int>& reps, std::size_t cap = 2000000);

enum class TransitivityLevel { Vertex, Incidence, Pennant, Chamber, Flag };

/// Orbit counts of the automorphism group on flags, keyed by the sorted type
/// vector of the flag; transitive means every nonempty key has one orbit.
struct TransitivityReport {
  bool transitive = true;
  std::map<std::vector<int>, std::size_t> orbit_counts;
};
TransitivityReport transitivity_check(const Pregeometry& g, const PermGroup& aut,
                                      TransitivityLevel level, std::size_t cap = 2000000);

/// Sub-pregeometry on the orbits of the members of a chamber V of the hall W
/// (types restricted to typ(V)).
Pregeometry orbit_geometry(const Pregeometry& g, const PermGroup& aut,
                           const std::vector<int>& chamber, std::vector<int>* back_map = nullptr);

}  // namespace fig
