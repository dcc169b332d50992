#pragma once

#include <optional>
#include <vector>

#include "hopfft/groups.hpp"
#include "hopfft/report.hpp"
#include "hopfft/tensor.hpp"

namespace hopfft {

// A dagger Frobenius structure on a single carrier wire: a monoid whose
// comonoid half is fixed to be its dagger. `norm` records the loop scalar
// (mult after comult) when that loop is proportional to the identity.
struct FrobeniusAlgebra {
  std::uint32_t dim = 1;
  Morphism mult;
  Morphism unit;
  Morphism comult;
  Morphism counit;
  bool is_commutative = false;
  bool is_special = false;
  std::optional<Scalar> norm;

  FrobeniusAlgebra(RingPtr ring, std::uint32_t dim);
};

// A finite group presented internally to the tensor category over a chosen
// scalar semiring: two interacting Frobenius structures on one carrier.
//
// `point` copies basis states: its comultiplication duplicates group
// elements, its multiplication matches them, its unit is the uniform state.
// `conv` is the group algebra: multiplication pushes pairs through the group
// law, the unit is the identity element, and no normalization factor is
// folded in, so its loop equals the group order N rather than 1.
struct InternalGroup {
  FiniteGroup group;
  RingPtr ring;
  FrobeniusAlgebra point;
  FrobeniusAlgebra conv;
  Morphism antipode;
  Scalar N;
};

// Assembles both structures, the antipode and the loop scalar. Never fails
// for a valid group and ring; operations that need to divide by N report
// their own errors later if N has no inverse in the chosen semiring.
InternalGroup build_internal_group(const FiniteGroup& g, RingPtr ring);

// The antipode assembled from the two structures alone, without consulting
// the group table: feed the copied unit of `point` into the loop that
// multiplies against the input and projects with the counit of `conv`. For a
// group pair this lands on basis inversion.
Morphism antipode_of(const FrobeniusAlgebra& point, const FrobeniusAlgebra& conv);

// Structure checks. Each returns one report line per equation with the
// maximal entrywise deviation; large carriers are verified by streaming
// basis columns through sparse applications, so no product matrix of size
// dim^2 x dim^2 is ever materialized.
CheckReport check_frobenius(const FrobeniusAlgebra& a);
// Loop proportionality: mult after comult against the identity. The
// extracted loop scalar lands in the report detail.
CheckReport check_quasi_special(const FrobeniusAlgebra& a);
// Each unit is a copyable, counit-normalized state of the other structure.
CheckReport check_coherence(const FrobeniusAlgebra& point,
                            const FrobeniusAlgebra& conv);
// The four equations making (conv mult, point comult) a bialgebra pair.
CheckReport check_bialgebra(const FrobeniusAlgebra& point,
                            const FrobeniusAlgebra& conv);
// Both convolution-inverse laws for the antipode.
CheckReport check_hopf(const FrobeniusAlgebra& point,
                       const FrobeniusAlgebra& conv, const Morphism& antipode);
// Inversion match, involutivity, self-adjointness, unit fixing.
CheckReport check_antipode(const InternalGroup& ig);

// Predicates of a family of states against one Frobenius structure.
// `resolution`, `partition` and `basis` are absent when the semiring cannot
// decide them (missing inverses of the norms, or a basis question that needs
// division the ring does not offer); `note` carries the reason.
struct StateFamilyReport {
  bool orthogonal = false;
  bool normalisable = false;
  bool matchable = false;
  bool classical = false;
  std::optional<bool> resolution_of_identity;
  std::optional<bool> partition_of_counit;
  std::optional<bool> basis;
  std::string note;
  CheckReport checks;
};

// Evaluates, for states x, y of the carrier of `a`:
//   orthogonal:   <x|y> = 0 for distinct members
//   normalisable: every <x|x> has an inverse
//   matchable:    mult(x, y) = 0 for distinct members and mult(x, x) = <x|x> x
//   classical:    comult copies each member and counit sends it to 1
//   resolution_of_identity: sum of |x><x| / <x|x> is the identity
//   partition_of_counit:    sum of <x| / <x|x> is the counit
//   basis:        the family spans the carrier with an invertible change of
//                 basis against the point deltas
StateFamilyReport classify_state_family(const std::vector<Morphism>& states,
                                        const FrobeniusAlgebra& a);

}  // namespace hopfft
