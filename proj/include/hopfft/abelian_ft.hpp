#pragma once

#include <cstdint>
#include <vector>

#include "hopfft/internal_group.hpp"

namespace hopfft {

// A multiplicative character: a co-state on the carrier that is a monoid
// homomorphism out of the convolution monoid. The label holds its components
// against the invariant-factor presentation of the group, so the value at g
// is the product over factors of zeta_{d_j}^(g_j * label_j).
struct Character {
  Morphism costate;
  std::vector<std::uint32_t> label;
};

// All multiplicative characters of an abelian internal group, indexed by the
// mixed-radix rank of their labels. The labels themselves form a group under
// componentwise addition; realized on co-states, that product is
// precomposition with the point comultiplication, the trivial character is
// the point counit, and precomposition with the antipode inverts.
struct DualGroup {
  std::vector<Character> characters;
  std::vector<std::uint32_t> factors;  // invariant factors d_1 | d_2 | ...
  GroupHom presentation;               // carrier group onto the factor sum

  const FiniteGroup& label_group() const { return presentation.target; }
  std::uint64_t product_index(std::uint64_t i, std::uint64_t j) const;
  std::uint64_t inverse_index(std::uint64_t i) const;
};

// Builds the full character family from the invariant-factor presentation.
// Requires an abelian group and a ring holding primitive roots of unity for
// every factor order; each character is checked to be a multiplicative
// co-state whose adjoint is a classical state of the convolution comonoid
// with squared norm N. Throws std::invalid_argument when the ring lacks the
// roots (so over booleans only the trivial group has characters).
DualGroup characters(const InternalGroup& ig);

// The abstract transform pair. No characters, no division: these compose
// structure maps only, so they work over every semiring and are mutually
// inverse bijections between states and co-states.
//
//   fourier_transform:          counit_conv . mult_conv . (id (x) antipode.f)
//   inverse_fourier_transform:  (id (x) r) . comult_point . unit_point
Morphism fourier_transform(const InternalGroup& ig, const Morphism& f);
Morphism inverse_fourier_transform(const InternalGroup& ig, const Morphism& r);

// The same wirings on bare structure maps, for carriers that form a strongly
// complementary pair without being a group algebra (relational groupoids).
Morphism fourier_costate(const Morphism& conv_mult, const Morphism& conv_counit,
                         const Morphism& antipode, const Morphism& f);
Morphism fourier_state(const Morphism& point_comult, const Morphism& point_unit,
                       const Morphism& r);

// Character coefficients (1/N) sum_g chi(g^-1) f(g), indexed like
// dual.characters. Pairing the abstract transform against the adjoint
// character kets recovers N times these values. Throws std::invalid_argument
// naming the semiring when N has no inverse.
std::vector<Scalar> ft_coefficients(const InternalGroup& ig,
                                    const DualGroup& dual, const Morphism& f);

// The two products on states: convolution pushes pairs through the group
// law, pointwise matches them.
Morphism convolve(const InternalGroup& ig, const Morphism& f, const Morphism& g);
Morphism pointwise(const InternalGroup& ig, const Morphism& f, const Morphism& g);

// Products of co-states by precomposition with a comultiplication. The
// convolution comonoid gives the product carried by the transform; the point
// comonoid multiplies characters pointwise.
Morphism dual_product(const InternalGroup& ig, const Morphism& r,
                      const Morphism& s);
Morphism pointwise_costate_product(const InternalGroup& ig, const Morphism& r,
                                   const Morphism& s);

// On seeded random pairs of states: the transform of a convolution is the
// dual product of the transforms, and the transform of the convolution unit
// is the convolution counit.
CheckReport check_convolution_theorem(const InternalGroup& ig,
                                      std::uint32_t samples = 100,
                                      std::uint64_t seed = 0);

// Character orthogonality: the Gram matrix of the adjoint character kets is
// N times the identity, and dividing by N leaves the Kronecker delta. With
// `family_battery` the kets additionally run the full state-family
// classification against the convolution structure (classical, matchable,
// orthogonal partition of the counit, resolution, basis); that battery is
// quartic in the carrier dimension, so callers on large groups can skip it
// and keep the cubic Gram. Throws when N has no inverse.
CheckReport check_character_orthogonality(const InternalGroup& ig,
                                          const DualGroup& dual,
                                          bool family_battery = true);

// The transform matrix for an explicit identification psi of the group with
// the dual labels: row h is the character at label psi(h). Which matrix you
// get depends on psi; keeping the choice an argument is the point.
Morphism fourier_matrix(const InternalGroup& ig, const DualGroup& dual,
                        const GroupHom& psi);

// The four exchange equations a transform matrix must satisfy,
//
//   comult_conv . h = (h (x) h) . comult_point      counit_conv . h = counit_point
//   h . mult_conv   = mult_point . (h (x) h)        h . unit_conv   = unit_point
//
// plus, each reported as its own line, h . dagger(h) = N id and
// dagger(h) . h = N id. The bare overload serves carriers that are not group
// algebras, such as the boolean groupoid pairs, where the two extra lines
// certify two-sided invertibility.
CheckReport check_comonoid_monoid_iso(const FrobeniusAlgebra& point,
                                      const FrobeniusAlgebra& conv,
                                      const Scalar& N, const Morphism& h);
CheckReport check_comonoid_monoid_iso(const InternalGroup& ig,
                                      const Morphism& h);

// Naturality of the transform along a group isomorphism phi: pushing a state
// forward, transforming, and pulling the co-state back equals transforming
// directly, on every delta state. The permutation morphism of phi is first
// verified to be unitary and to preserve all four structure maps of both
// algebras; failures there throw std::invalid_argument.
CheckReport check_canonicity(const InternalGroup& source,
                             const InternalGroup& target, const GroupHom& phi);

}  // namespace hopfft
