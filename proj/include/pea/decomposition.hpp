#pragma once

#include "pea/center.hpp"
#include "pea/construct.hpp"
#include "pea/morphism.hpp"
#include "pea/td_sets.hpp"

#include <string>
#include <vector>

namespace pea {

/// E[0,c_1] x ... x E[0,c_n] together with the sum map onto E.
struct ProductWitness {
  std::vector<Interval> factors;
  Product product;
  /// Product index -> element of E, (e_1, ..., e_n) -> e_1 + ... + e_n.
  /// Its inverse is e -> (e ^ c_1, ..., e ^ c_n); both are checked.
  MorphismWitness phi;
};

/// Builds and verifies the product isomorphism for a central partition of
/// the unit. DomainError when the elements are not central, not pairwise
/// disjoint or do not sum to 1; InvariantViolation if verification fails.
ProductWitness phi_isomorphism(const Pea& e, const CentralStructure& g, const std::vector<Element>& partition);

/// Every ordered family of `slots` pairwise disjoint central elements whose
/// join is `top`, obtained by sending each central atom below `top` to one
/// of the slots.
std::vector<std::vector<Element>> central_partitions(const Pea& e, const CentralStructure& g, Element top,
                                                     std::size_t slots);

enum class DecompositionMode { Three, Six, Roman };

const char* mode_name(DecompositionMode m);

struct DecompositionPart {
  std::string name;  // c1, c21, I, II_F, ...
  Element center = 0;
  std::string role;  // what the part is, e.g. "locally type-K, properly non-K"
  Interval algebra;
};

struct DecompositionReport {
  DecompositionMode mode = DecompositionMode::Three;
  std::string k_name, f_name;
  /// Pairwise disjoint, summing to 1. Zero parts are kept.
  std::vector<DecompositionPart> parts;
  /// Roman mode only: I = I_F x I_notF and II = II_F x II_notF.
  std::vector<DecompositionPart> refinements;
  ProductWitness witness;
  /// Central partitions examined while checking uniqueness.
  std::size_t partitions_checked = 0;
};

/// c1 = c_{K ^ gamma K} (type-K), c2 = c_K ^ c1' (locally type-K, properly
/// non-K), c3 = c_K' (purely non-K).
DecompositionReport decompose_three(const Pea& e, const CentralStructure& g, const TDSet& k,
                                    const std::string& k_name = "K");

/// c_ij = c_i ^ d_j for the three-part decompositions of K and F; only
/// c11, c21, c22, c31, c32, c33 can be nonzero. Requires K inside F.
DecompositionReport decompose_six(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                                  const std::string& k_name = "K", const std::string& f_name = "F");

/// c_I = c_K, c_II = c_F ^ c_K', c_III = c_F', with the refinements
/// I_F = c11 + c21, I_notF = c22, II_F = c31, II_notF = c32.
DecompositionReport decompose_I_II_III(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                                       const std::string& k_name = "K", const std::string& f_name = "F");

}  // namespace pea
