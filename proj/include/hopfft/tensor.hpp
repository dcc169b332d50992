#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfft/semiring.hpp"

namespace hopfft {

// A tensor wire: a dimension plus an orientation marker. Dual markers are
// bookkeeping for matrix-shaped legs (a representation lands in H tensor H*,
// a cap consumes one primal and one dual leg). Composability and equality are
// governed by dimensions alone; orientation never changes numerics.
enum class WireTag : std::uint8_t { primal, dual };

struct Wire {
  std::uint32_t dim = 1;
  WireTag tag = WireTag::primal;

  friend bool operator==(const Wire& a, const Wire& b) {
    return a.dim == b.dim && a.tag == b.tag;
  }
};

inline Wire primal(std::uint32_t dim) { return Wire{dim, WireTag::primal}; }
inline Wire dual(std::uint32_t dim) { return Wire{dim, WireTag::dual}; }

// An object of the category: a finite list of wires. The empty profile is the
// monoidal unit, so states are morphisms out of {} and effects are morphisms
// into {}.
using WireProfile = std::vector<Wire>;

std::uint64_t profile_dim(const WireProfile& p);
bool same_dims(const WireProfile& a, const WireProfile& b);
std::string profile_to_string(const WireProfile& p);

// Dense linear map between profile spaces, stored row by row: the entry at
// (row, col) is the coefficient of codomain basis vector `row` in the image
// of domain basis vector `col`. Multi-wire indices flatten with the leftmost
// wire most significant.
class Morphism {
 public:
  Morphism(RingPtr ring, WireProfile domain, WireProfile codomain);

  static Morphism identity(RingPtr ring, WireProfile profile);
  static Morphism zero(RingPtr ring, WireProfile domain, WireProfile codomain);
  // The maximally correlated state on a pair of d-dimensional wires, one
  // primal and one dual: sum over i of |i, i>.
  static Morphism cup(RingPtr ring, std::uint32_t d);
  // Its dagger, the pairing effect on the same pair of wires.
  static Morphism cap(RingPtr ring, std::uint32_t d);
  static Morphism swap_wires(RingPtr ring, Wire first, Wire second);
  // A scalar as a morphism between empty profiles.
  static Morphism scalar(RingPtr ring, Scalar value);

  const RingPtr& ring() const { return ring_; }
  const WireProfile& domain() const { return dom_; }
  const WireProfile& codomain() const { return cod_; }
  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  bool is_state() const { return dom_.empty(); }
  bool is_effect() const { return cod_.empty(); }

  const Scalar& at(std::uint64_t row, std::uint64_t col) const;
  void set(std::uint64_t row, std::uint64_t col, Scalar value);
  const std::vector<Scalar>& entries() const { return entries_; }
  std::vector<Scalar>& entries() { return entries_; }

  // Sequential composition: apply this morphism first, then `next`. Throws
  // std::invalid_argument on dimension or semiring mismatch.
  Morphism then(const Morphism& next) const;
  Morphism tensor(const Morphism& other) const;
  // Conjugate transpose; swaps domain and codomain, applies the scalar
  // involution entrywise.
  Morphism dagger() const;

  // Reinterpret the wire lists without touching entries. Both replacement
  // profiles must keep the total dimensions. This is how a map H -> H gets
  // read as a state on H tensor H* and back.
  Morphism reshaped(WireProfile domain, WireProfile codomain) const;

  // Entrywise comparison. Exact rings compare exactly; inexact rings use a
  // max-norm check relative to the largest entry magnitude, with the ring
  // tolerance unless overridden. Throws on shape or ring mismatch.
  bool equal(const Morphism& other,
             std::optional<double> tolerance = std::nullopt) const;
  // Largest entrywise distance under the numeric embedding.
  double deviation(const Morphism& other) const;

  // The sole entry of a scalar-shaped morphism.
  const Scalar& scalar_value() const;

 private:
  RingPtr ring_;
  WireProfile dom_, cod_;
  std::uint64_t rows_, cols_;
  std::vector<Scalar> entries_;
};

Morphism compose(const Morphism& first, const Morphism& second);
Morphism tensor_product(const Morphism& a, const Morphism& b);

// Sparse support for streaming evaluation of large composites.
//
// The structural maps of a group algebra have at most |G| nonzero entries per
// column, so equations between composites of them are cheapest to verify one
// basis vector at a time, never materializing product matrices. SparseVec is
// a sorted (index, value) list; ColumnView indexes the nonzero entries of a
// morphism column by column.
using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

SparseVec sparse_basis_vector(std::uint64_t index, const Semiring& ring);
void sparse_normalize(SparseVec& v, const Semiring& ring);
bool sparse_equal(const SparseVec& a, const SparseVec& b, const Semiring& ring);
double sparse_deviation(const SparseVec& a, const SparseVec& b);

class ColumnView {
 public:
  explicit ColumnView(const Morphism& m);

  std::uint64_t dom_dim() const { return cols_; }
  std::uint64_t cod_dim() const { return rows_; }
  const SparseVec& column(std::uint64_t j) const { return columns_[j]; }

  // True when every stored entry equals the semiring one. Callers can then
  // treat columns as bare index sets and skip scalar arithmetic entirely.
  bool unit_only() const { return unit_only_; }

  // Applies the viewed morphism to one factor slot of `v`. The vector lives
  // on a space left x dom x right with the slot dimensions implied by
  // `right_dim` and the view's own domain; the result lives on
  // left x cod x right.
  SparseVec apply(const SparseVec& v, std::uint64_t right_dim,
                  const Semiring& ring) const;

 private:
  std::uint64_t rows_, cols_;
  std::vector<SparseVec> columns_;
  // Parallel to columns_: marks entries equal to the semiring one, so apply
  // can copy the input coefficient instead of multiplying by it.
  std::vector<std::vector<char>> unit_;
  bool unit_only_ = true;
};

}  // namespace hopfft
