#pragma once

#include "pea/errors.hpp"
#include "pea/pea.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace pea {

struct EnumerationLimits {
  std::size_t max_elements = 10;
  std::uint64_t max_nodes = 500'000'000;

  /// Defaults overridden by PEA_ENUM_MAX_N and PEA_ENUM_MAX_NODES.
  static EnumerationLimits from_environment();
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t labelled_solutions = 0;
};

/// Thrown when the node budget runs out. Carries everything found for the
/// sizes that completed; `cutoff` is the size whose search was abandoned.
class PartialEnumeration : public ResourceError {
 public:
  PartialEnumeration(std::vector<PeaTable> partial, std::size_t cutoff);

  const std::vector<PeaTable>& partial() const noexcept { return partial_; }
  std::size_t cutoff() const noexcept { return cutoff_; }

 private:
  std::vector<PeaTable> partial_;
  std::size_t cutoff_;
};

using PeaPredicate = std::function<bool(const Pea&)>;

/// All PEAs on exactly n elements, one canonical table per isomorphism
/// class, sorted by canonical code and named "P<n>_<k>".
///
/// Backtracking over the proper cells of the sum table with constraint
/// propagation (cancellation, unique complements, the associativity
/// existence law, conjugate solvability); every leaf is re-checked with
/// verify_axioms before canonicalisation.
std::vector<PeaTable> enumerate_size(std::size_t n, const EnumerationLimits& limits = EnumerationLimits::from_environment(),
                                     EnumerationStats* stats = nullptr);

/// Streams every PEA with at most max_n elements up to isomorphism, by
/// increasing size. With a predicate only matching algebras reach `sink`,
/// but the search itself stays complete.
void enumerate_peas(std::size_t max_n, const std::function<void(const PeaTable&)>& sink,
                    const PeaPredicate& predicate = {},
                    const EnumerationLimits& limits = EnumerationLimits::from_environment(),
                    EnumerationStats* stats = nullptr);

std::vector<PeaTable> enumerate_peas(std::size_t max_n, const PeaPredicate& predicate = {},
                                     const EnumerationLimits& limits = EnumerationLimits::from_environment());

}  // namespace pea
