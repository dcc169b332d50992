#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hopfft/groups.hpp"
#include "hopfft/internal_group.hpp"
#include "hopfft/report.hpp"
#include "hopfft/tensor.hpp"

namespace hopfft {

// A finite set partitioned into blocks, each carrying its own abelian group
// law on the block's elements. The partial product of two elements is defined
// exactly when they share a block. These are the commutative classical
// structures of the boolean model, one per groupoid.
struct AbelianGroupoid {
  static constexpr std::uint32_t undefined = 0xffffffffu;

  std::uint32_t carrier = 0;
  std::vector<std::uint32_t> block_of;             // element -> block index
  std::vector<std::vector<std::uint32_t>> blocks;  // sorted elements per block
  std::vector<std::uint32_t> table;     // carrier x carrier, partial product
  std::vector<std::uint32_t> identity;  // per block

  // The partial product; `undefined` when the elements live in different
  // blocks.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[static_cast<std::size_t>(a) * carrier + b];
  }
};

// Builds a groupoid from explicit parts. Each part lists the block's elements
// (any order, duplicates rejected) together with a group on indices into that
// list, so part.second.mul(i, j) names positions in part.first. Blocks must
// be disjoint, cover 0..carrier-1 exactly, and every group must be abelian.
// Throws std::invalid_argument otherwise.
AbelianGroupoid make_abelian_groupoid(
    std::uint32_t carrier,
    const std::vector<std::pair<std::vector<std::uint32_t>, FiniteGroup>>&
        parts);

// All blocks are singletons: the partial product is the diagonal a * a = a.
AbelianGroupoid discrete_groupoid(std::uint32_t carrier);

// One block covering the whole carrier with the given group's own law.
AbelianGroupoid group_groupoid(const FiniteGroup& g);

// The boolean dagger Frobenius structure of a groupoid: multiplication relates
// (a, b) to a * b within blocks and to nothing across them, the unit is the
// set of block identities, and the comonoid half is the converse. Always a
// commutative special structure; its classical states are the blocks.
FrobeniusAlgebra groupoid_to_structure(const AbelianGroupoid& gpd);

// Recovers the groupoid from a boolean structure and validates the round
// trip: the multiplication must be single valued within a block pattern, each
// block must carry an abelian group, and rebuilding the structure must
// reproduce all four maps exactly. Throws std::invalid_argument when the
// input is not over the booleans or does not arise from an abelian groupoid.
AbelianGroupoid structure_to_groupoid(const FrobeniusAlgebra& a);

// Whether the classical states (the blocks, as subset states) form a boolean
// resolution of the identity. The direct union computation is reported next
// to the combinatorial fact it is equivalent to: every block is a singleton.
CheckReport check_discrete_resolution(const AbelianGroupoid& gpd);

// Two verdicts on one carrier that the classification says must agree:
//  (a) direct tensor evaluation of the coherence and bialgebra laws for
//      (point <- z, conv <- x), and
//  (b) the combinatorial conditions: every z-block meets every x-block in
//      exactly one element, and the two block laws transport to one common
//      group table each on the opposite block coordinates.
// Informative lines also report whether the blocks of each groupoid are
// pairwise isomorphic (implied by (b), but stated separately). Throws
// std::invalid_argument when the carriers differ.
CheckReport check_strong_complementarity_classification(
    const AbelianGroupoid& z, const AbelianGroupoid& x);

// A strongly complementary pair over the booleans, in grid form: the carrier
// is labeled by coordinate pairs (h, g) where h indexes the x-blocks and g
// the z-blocks. `group_h` is the common law of the z-blocks read on h
// coordinates, and `group_g` the common law of the x-blocks read on g
// coordinates, which is also how conv acts on the z-classical states. The
// dense boolean structures are built on demand so that enumerated
// collections stay small; point() is the structure of z, conv() that of x.
struct RelInternalGroup {
  AbelianGroupoid z;
  AbelianGroupoid x;
  FiniteGroup group_h;
  FiniteGroup group_g;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coords;  // (h, g)

  FrobeniusAlgebra point() const;
  FrobeniusAlgebra conv() const;
  Morphism antipode() const;
};

// Assembles the grid form of a strongly complementary pair, deriving the
// coordinates, the two transported groups and the antipode. Throws
// std::invalid_argument when the pair fails the combinatorial conditions.
RelInternalGroup make_rel_internal_group(const AbelianGroupoid& z,
                                         const AbelianGroupoid& x);

// Every ordered groupoid pair on a carrier of n labeled elements, filtered by
// direct boolean evaluation of the coherence and bialgebra laws. The
// surviving set is compared pairwise against the combinatorial prediction;
// a disagreement throws std::logic_error. Carriers up to 6 only -- the pair
// count grows with the squared number of groupoids -- and n must be positive.
std::vector<RelInternalGroup> enumerate_strongly_complementary(std::uint32_t n);

// The action of each monoid fragment on the other structure's classical
// states: conv convolves z-blocks following group_g, and point matches
// x-blocks following group_h.
CheckReport check_block_actions(const RelInternalGroup& rig);

// The transform matrix over the booleans, when one exists: for a group
// isomorphism psi from group_g to group_h this is the permutation relating
// (h, g) to (psi g, psi^-1 h), verified against the four exchange equations
// and two-sided invertibility before being returned. When the two groups are
// not isomorphic the result is empty; on carriers up to 6 the nonexistence is
// additionally certified by exhausting every permutation candidate, and a
// candidate passing anyway throws std::logic_error.
std::optional<Morphism> hadamard_exists(const RelInternalGroup& rig);

// Subsets reachable as unions of z-blocks and also as unions of x-blocks,
// returned as sorted bitmasks over the carrier (bit a = element a). Carriers
// up to 16; larger ones throw std::invalid_argument.
std::vector<std::uint32_t> span_intersection(const RelInternalGroup& rig);

}  // namespace hopfft
