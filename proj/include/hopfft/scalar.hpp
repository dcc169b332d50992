#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hopfft {

// Exact rational arithmetic. All integer-like semirings (naturals, integers,
// rationals) share this value type; the semiring object enforces closure.
using Rational = boost::multiprecision::cpp_rational;

// Element of the cyclotomic field Q(z) with z a primitive n-th root of
// unity, i.e. Q[z] modulo the n-th cyclotomic polynomial. This is the
// smallest exact ring in which the root sums behind character orthogonality
// genuinely vanish (1 + z + ... + z^(n-1) = 0 for n > 1), which the Gram and
// Peter-Weyl identities depend on.
//
// Storage is sparse and deliberately lazy: `terms` holds (exponent,
// coefficient) pairs sorted by exponent with all exponents < order and no
// zero coefficients, and exponent arithmetic wraps mod n (z^n = 1 holds in
// the field, so this is sound). Reduction modulo the cyclotomic polynomial
// happens only when a canonical form is needed (equality, zero tests,
// printing, coefficient access). Most values arising from group structure
// maps are monomials, which the lazy form keeps cheap at large orders.
struct Cyclotomic {
  std::uint32_t order = 1;
  std::vector<std::pair<std::uint32_t, Rational>> terms;

  Cyclotomic() = default;
  explicit Cyclotomic(std::uint32_t n) : order(n) {}

  static Cyclotomic from_rational(std::uint32_t n, const Rational& q);
  static Cyclotomic monomial(std::uint32_t n, std::uint32_t exponent,
                             const Rational& coefficient);

  bool is_zero() const;
  bool is_rational() const;
  // The coefficient of z^k in the canonical (reduced) form, zero when absent.
  Rational coefficient(std::uint32_t k) const;
  // Canonical coefficient vector padded to length `order`; entries at or
  // above the modulus degree are always zero.
  std::vector<Rational> dense_coefficients() const;

  // The reduced representative: exponents below the modulus degree, sorted,
  // no zero coefficients.
  Cyclotomic canonical() const;

  // Merges duplicate exponents, drops zeros, and reduces to canonical form.
  void normalize();

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // The ring involution z^k -> z^(n-k), extended linearly. On values that
  // embed into the complex numbers via z = exp(2*pi*i/n) this is complex
  // conjugation.
  Cyclotomic conjugate() const;

  // Evaluation at z = exp(2*pi*i/n), for diagnostics and deviation metrics.
  std::complex<double> evaluate() const;

  std::string to_string() const;
};

// Coefficients of the n-th cyclotomic polynomial in ascending degree order
// (monic, degree phi(n)). Computed by exact division of z^n - 1 by the
// cyclotomic polynomials of the proper divisors of n, and cached.
const std::vector<Rational>& cyclotomic_polynomial(std::uint32_t n);

// Runtime-tagged scalar. Which arm is active is dictated by the semiring a
// value belongs to: booleans use `bool`, the rational family uses `Rational`,
// cyclotomic rings use `Cyclotomic`, floating complex uses complex<double>.
using Scalar = std::variant<bool, Rational, Cyclotomic, std::complex<double>>;

// Numeric embedding used for deviation reporting and approximate equality.
// Exact scalars map through their canonical complex embedding.
std::complex<double> scalar_to_complex(const Scalar& s);

std::string scalar_kind_name(const Scalar& s);

}  // namespace hopfft
