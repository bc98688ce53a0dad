#pragma once

#include "pea/pea.hpp"

#include <optional>
#include <vector>

namespace pea {

enum class MorphismKind { Morphism, Isomorphism };

struct MorphismWitness {
  std::vector<Element> map;  // source index -> target index
  MorphismKind kind = MorphismKind::Morphism;
};

/// map(1) = 1 and every existing sum a+b is sent to an existing sum with
/// map(a+b) = map(a) + map(b).
bool is_morphism(const PeaTable& source, const PeaTable& target, const std::vector<Element>& map);

/// Bijective morphism whose inverse is also a morphism.
bool is_isomorphism(const PeaTable& source, const PeaTable& target, const std::vector<Element>& map);

/// Checks a witness against the claim its kind makes.
bool verify_witness(const PeaTable& source, const PeaTable& target, const MorphismWitness& w);

/// Exhaustive backtracking over bijections that fix 0 and 1 and respect
/// element signatures (sum in/out degree and order level). The returned
/// witness has already passed is_isomorphism().
std::optional<MorphismWitness> find_isomorphism(const Pea& source, const Pea& target);

/// Lexicographically smallest row-major sum table over all relabellings
/// that fix 0 and 1. Two tables are isomorphic iff their codes agree.
/// Throws ResourceError above 11 elements (factorial cost).
std::vector<Element> canonical_code(const PeaTable& t);

/// The table whose cells are canonical_code(t); labels are dropped.
PeaTable canonical_table(const PeaTable& t);

}  // namespace pea
