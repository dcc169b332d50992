#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfft/report.hpp"
#include "hopfft/scalar.hpp"

namespace hopfft {

// A commutative semiring with involution, the scalar theory every tensor in
// this library is built over. Implementations are immutable and shared;
// values are plain Scalar variants whose active arm must match the semiring
// (operations throw std::invalid_argument otherwise).
//
// There is no general subtraction or division. `try_invert` exposes the
// partial multiplicative inverse: it succeeds on invertible elements the
// implementation knows how to invert (all of them for fields; units only for
// naturals and integers; monomials for cyclotomic rings, which is every
// inverse the transforms in this library ever need).
class Semiring {
 public:
  virtual ~Semiring() = default;

  virtual const std::string& name() const = 0;
  virtual Scalar zero() const = 0;
  virtual Scalar one() const = 0;
  virtual Scalar add(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar mul(const Scalar& a, const Scalar& b) const = 0;
  // The dagger on scalars. Identity for booleans and rationals, z -> z^-1
  // extended linearly for cyclotomics, complex conjugation for c64.
  virtual Scalar involution(const Scalar& a) const = 0;
  virtual bool is_exact() const = 0;
  // Comparison tolerance for inexact rings; 0 for exact ones.
  virtual double tolerance() const = 0;
  virtual std::optional<Scalar> try_invert(const Scalar& a) const = 0;

  // Canonical image of a nonnegative integer (1 + 1 + ... + 1).
  virtual Scalar from_integer(std::uint64_t n) const = 0;
  // A primitive root of unity of the requested order, when the ring has one.
  virtual std::optional<Scalar> root_of_unity(std::uint32_t order) const = 0;
  // Small random element for property tests. Deterministic for a given
  // generator state.
  virtual Scalar sample(std::mt19937_64& rng) const = 0;

  virtual std::string format(const Scalar& a) const = 0;

  virtual bool is_zero(const Scalar& a) const;
  virtual bool is_one(const Scalar& a) const;
  // Exact comparison on exact rings, tolerance-based on inexact ones.
  virtual bool equal(const Scalar& a, const Scalar& b) const;
};

using RingPtr = std::shared_ptr<const Semiring>;

// Shared instances of the named semirings: "bool", "nat", "int", "rat",
// "cyc:<n>" and "c64". Throws std::invalid_argument on unknown names.
RingPtr semiring_by_name(const std::string& name);

// The cyclotomic field of order n (see Cyclotomic); rejects n = 0.
RingPtr cyclotomic_ring(std::uint32_t n);

// Complex doubles with the given comparison tolerance (relative, with an
// absolute floor at the same magnitude).
RingPtr complex_ring(double tol = 1e-9);

// Evaluates the semiring axioms on every triple drawn from `samples`:
// associativity and commutativity of both operations, unit laws, two-sided
// distributivity, annihilation by zero, and that the involution is an
// additive and multiplicative homomorphism fixing 0 and 1 with period two.
// Violations become failing report lines, not errors.
CheckReport check_semiring_laws(const Semiring& ring,
                                const std::vector<Scalar>& samples);

}  // namespace hopfft
