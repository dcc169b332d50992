#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfft {

// A finite group presented by its full multiplication table. Tables stay
// dense, so constructors refuse orders past a few thousand; everything in
// this library works with small groups.
struct FiniteGroup {
  std::uint32_t order = 1;
  std::vector<std::uint32_t> table;  // row major, table[a * order + b] = a * b
  std::uint32_t unit = 0;
  std::vector<std::uint32_t> inverse;
  bool abelian = true;
  // When the group was assembled from cyclic factors, their sizes in order;
  // empty for groups read off a raw table.
  std::vector<std::uint32_t> cyclic_orders;
  std::string name;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[a * order + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t element_order(std::uint32_t a) const;
};

// Direct sum of cyclic groups of the given sizes, elements in mixed-radix
// order with the leftmost factor most significant. The empty list yields the
// trivial group. Factor sizes must be positive.
FiniteGroup group_from_cyclics(const std::vector<std::uint32_t>& orders);

// Validates a raw multiplication table: squareness, entry range, a two-sided
// identity, associativity, inverses. Throws std::invalid_argument with a
// descriptive message (including the witnessing triple for associativity
// failures) when the table is not a group.
FiniteGroup group_from_cayley(const std::vector<std::vector<std::uint32_t>>& table);

// Mixed-radix digit helpers used wherever componentwise structure matters.
std::vector<std::uint32_t> mixed_radix_digits(std::uint64_t index,
                                              const std::vector<std::uint32_t>& radices);
std::uint64_t mixed_radix_index(const std::vector<std::uint32_t>& digits,
                                const std::vector<std::uint32_t>& radices);

// The invariant factor decomposition d_1 | d_2 | ... | d_k of a finite
// abelian group, smallest factor first; the trivial group yields the empty
// list. Derived from element-order statistics: for each prime the counts of
// solutions to x^(p^k) = e pin down the partition of cyclic p-power factors,
// and the factors reassemble largest-first across primes. Throws on
// non-abelian input.
std::vector<std::uint32_t> abelian_invariant_factors(const FiniteGroup& g);

// An explicit isomorphism from an abelian group onto the direct sum of its
// invariant factors. The generator behind each factor is chosen largest
// factor first, lowest element index first, so the presentation is
// deterministic and reduces to the identity on groups already built by
// group_from_cyclics in invariant-factor order. Throws on non-abelian input.
struct GroupHom;
GroupHom abelian_presentation(const FiniteGroup& g);

// A verified homomorphism. Construction checks f(ab) = f(a)f(b) on every
// pair, so holding a GroupHom is proof of the property.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<std::uint32_t> map;

  static GroupHom make(FiniteGroup source, FiniteGroup target,
                       std::vector<std::uint32_t> map);
  std::uint32_t operator()(std::uint32_t a) const { return map[a]; }
  bool is_bijective() const;
};

// Searches for an isomorphism by backtracking over generator images, pruning
// with element-order statistics. Intended for carriers up to 64.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& a,
                                         const FiniteGroup& b);

// Catalog constructors. Element orderings are part of the contract: tests
// and the representation catalog rely on them.
//
// symmetric3: identity, the three transpositions (01), (02), (12), then the
// cycles (012), (021).
FiniteGroup symmetric3();
// dihedral: rotations r^0 .. r^(n-1) then reflections s r^0 .. s r^(n-1).
FiniteGroup dihedral(std::uint32_t n);
// quaternion8: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion8();

// Resolves "S3", "D<n>", "Q8" and "Z<n>".
FiniteGroup named_group(const std::string& name);

}  // namespace hopfft
