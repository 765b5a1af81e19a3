#pragma once

#include <functional>

#include "isoprod/presentation.hpp"
#include "isoprod/smith.hpp"

namespace isoprod {

/// Action of the product-presentation generators on the cosets of the
/// preimage of the diagonal subgroup. Cosets are labeled by elements of G
/// (diagonal coset of (g1,g2) <-> g1^-1 g2); base coset is the identity.
struct CosetAction {
  const FiniteGroup* group = nullptr;
  int index = 0;
  std::vector<Permutation> tables;      // one permutation of labels per generator
  std::vector<Permutation> inv_tables;  // inverses; filled on construction
  int base = 0;

  int act(int coset, int gen, int sign) const;
  bool transitive() const;
};

/// The monodromy data feeding the diagonal action: product presentation of
/// T1 x T2 and per-generator images in G x G (first block maps to (g,1),
/// second to (1,g)).
struct DiagonalDatum {
  ProductPresentation product;
  std::vector<int> images1;  // G-image of each block-1 generator
  std::vector<int> images2;  // G-image of each block-2 generator
};

/// Build the product presentation + monodromy for a pair of vectors.
DiagonalDatum product_monodromy(const GeneratingVector& v1, const GeneratingVector& v2);

/// Coset action of f^-1(Delta_G): generator t with f(t) = (a,b) acts by
/// g -> a^-1 g b. No Todd-Coxeter needed; the action is read off G.
CosetAction diagonal_coset_action(const FiniteGroup& g, const DiagonalDatum& d);

/// Reidemeister-Schreier data: BFS-shortest transversal and the labeling of
/// non-tree (coset, generator) edges by Schreier generator indices.
struct SchreierData {
  const CosetAction* action = nullptr;
  std::vector<GroupWord> transversal;       // one word per coset, base empty
  std::vector<std::vector<int>> schreier;   // [coset][gen] -> index or -1 (tree edge)
  int num_schreier = 0;

  /// Abelianized image over the Schreier generators of a subgroup word
  /// (a word in the ambient generators whose coset trace returns to base).
  std::vector<Integer> rewrite(const GroupWord& w) const;
};

/// Schreier generators and the abelianized relation matrix: one row per
/// (coset, relator) pair.
std::pair<SchreierData, IntegerMatrix> schreier_rewrite(const Presentation& p,
                                                        const CosetAction& action);

/// H1(S,Z) of S = (C1 x C2)/G via Reidemeister-Schreier + Smith normal form.
AbelianInvariants homology_h1(const FiniteGroup& g, const GeneratingVector& v1,
                              const GeneratingVector& v2);

/// BFS-shortest word in block-1 generators with monodromy image (z, 1).
GroupWord lift_central_element(const FiniteGroup& g, const DiagonalDatum& d, int z);

/// Everything homology_h1 computes, kept around for the central-action scan.
struct HomologyPipeline {
  DiagonalDatum datum;
  CosetAction action;
  SchreierData schreier;
  IntegerMatrix relations;
  AbelianInvariants h1;

  HomologyPipeline(const FiniteGroup& g, const GeneratingVector& v1,
                   const GeneratingVector& v2);
  HomologyPipeline(HomologyPipeline&&) = delete;  // self-referential pointers
};

/// The central elements acting trivially on H1(S,Z): z is kept iff
/// conjugating every Schreier generator by a lift of (z,1) fixes its class
/// in canonical coordinates. Always contains the identity; a subgroup of
/// Z(G).
std::vector<int> central_action_trivial_set(const FiniteGroup& g,
                                            const GeneratingVector& v1,
                                            const GeneratingVector& v2);

/// As above but with a custom lift per central element (for
/// lift-independence checks). The lift must be a word in ambient generators
/// with monodromy image (z, 1).
std::vector<int> central_action_trivial_set(
    const HomologyPipeline& pipe,
    const std::function<GroupWord(int z)>& lift);

}  // namespace isoprod
