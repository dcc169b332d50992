#include "hopfft/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hopfft {

namespace {

// Exact polynomial division, ascending coefficients, exact divisor required.
// Both inputs monic in practice (cyclotomic polynomials), so no coefficient
// growth beyond integers occurs.
std::vector<Rational> divide_exact(std::vector<Rational> num,
                                   const std::vector<Rational>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Rational> quot(num.size() - dn, Rational(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Rational f = num[i] / den[dn];
    if (f == 0) continue;
    quot[i - dn] = f;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= f * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("inexact cyclotomic division");
  return quot;
}

std::map<std::uint32_t, std::vector<Rational>>& modulus_cache() {
  static std::map<std::uint32_t, std::vector<Rational>> cache;
  return cache;
}
std::mutex modulus_mutex;

const std::vector<Rational>& modulus_locked(std::uint32_t n) {
  auto& cache = modulus_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Rational> poly(n + 1, Rational(0));
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), modulus_locked(d));
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::scoped_lock lock(modulus_mutex);
  return modulus_locked(n);
}

Cyclotomic Cyclotomic::from_rational(std::uint32_t n, const Rational& q) {
  Cyclotomic c(n);
  if (q != 0) c.terms.emplace_back(0u, q);
  return c;
}

Cyclotomic Cyclotomic::monomial(std::uint32_t n, std::uint32_t exponent,
                                const Rational& coefficient) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  Cyclotomic c(n);
  if (coefficient != 0) c.terms.emplace_back(exponent % n, coefficient);
  return c;
}

Cyclotomic Cyclotomic::canonical() const {
  const auto& modulus = cyclotomic_polynomial(order);
  const std::uint32_t degree = static_cast<std::uint32_t>(modulus.size() - 1);
  // Sorted term lists below the modulus degree are already canonical.
  if (terms.empty() || terms.back().first < degree) return *this;
  std::vector<Rational> dense(order, Rational(0));
  for (const auto& [e, q] : terms) dense[e] = q;
  for (std::uint32_t i = order; i-- > degree;) {
    if (dense[i] == 0) continue;
    Rational lead = std::move(dense[i]);
    dense[i] = 0;
    for (std::uint32_t j = 0; j < degree; ++j)
      dense[i - degree + j] -= lead * modulus[j];
  }
  Cyclotomic out(order);
  for (std::uint32_t e = 0; e < degree; ++e)
    if (dense[e] != 0) out.terms.emplace_back(e, std::move(dense[e]));
  return out;
}

bool Cyclotomic::is_zero() const {
  if (terms.empty()) return true;
  // A single term is a nonzero multiple of a unit, never zero.
  if (terms.size() == 1) return false;
  return canonical().terms.empty();
}

bool Cyclotomic::is_rational() const {
  Cyclotomic c = canonical();
  return c.terms.empty() || (c.terms.size() == 1 && c.terms[0].first == 0);
}

Rational Cyclotomic::coefficient(std::uint32_t k) const {
  Cyclotomic c = canonical();
  auto it = std::lower_bound(
      c.terms.begin(), c.terms.end(), k,
      [](const auto& term, std::uint32_t key) { return term.first < key; });
  if (it != c.terms.end() && it->first == k) return it->second;
  return Rational(0);
}

std::vector<Rational> Cyclotomic::dense_coefficients() const {
  std::vector<Rational> out(order, Rational(0));
  for (auto& [e, q] : canonical().terms) out[e] = std::move(q);
  return out;
}

void Cyclotomic::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint32_t, Rational>> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& t) { return t.second == 0; }),
               merged.end());
  terms = std::move(merged);
  *this = canonical();
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order != b.order)
    throw std::invalid_argument("cyclotomic order mismatch in addition");
  Cyclotomic out(a.order);
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rational sum = a.terms[i].second + b.terms[j].second;
      if (sum != 0) out.terms.emplace_back(a.terms[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order != b.order)
    throw std::invalid_argument("cyclotomic order mismatch in multiplication");
  Cyclotomic out(a.order);
  if (a.terms.empty() || b.terms.empty()) return out;
  // Fast path: monomial times monomial stays a monomial.
  if (a.terms.size() == 1 && b.terms.size() == 1) {
    std::uint32_t e = (a.terms[0].first + b.terms[0].first) % a.order;
    Rational q = a.terms[0].second * b.terms[0].second;
    if (q != 0) out.terms.emplace_back(e, std::move(q));
    return out;
  }
  std::vector<Rational> acc(a.order, Rational(0));
  for (const auto& [ea, qa] : a.terms)
    for (const auto& [eb, qb] : b.terms) acc[(ea + eb) % a.order] += qa * qb;
  for (std::uint32_t e = 0; e < a.order; ++e)
    if (acc[e] != 0) out.terms.emplace_back(e, std::move(acc[e]));
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order != b.order) return false;
  if (a.terms == b.terms) return true;
  return a.canonical().terms == b.canonical().terms;
}

Cyclotomic Cyclotomic::conjugate() const {
  Cyclotomic out(order);
  out.terms.reserve(terms.size());
  for (const auto& [e, q] : terms)
    out.terms.emplace_back(e == 0 ? 0u : order - e, q);
  // Exponent negation is injective mod n, so a re-sort is all that is needed.
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::complex<double> Cyclotomic::evaluate() const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, q] : terms) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                   static_cast<double>(order);
    acc += static_cast<double>(q) *
           std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  Cyclotomic c = canonical();
  if (c.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, q] : c.terms) {
    if (!first) {
      os << (q > 0 ? " + " : " - ");
    } else if (q < 0) {
      os << "-";
    }
    Rational mag = q > 0 ? q : Rational(-q);
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << " ";
      os << "z";
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::complex<double> scalar_to_complex(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::complex<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return {v ? 1.0 : 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, Rational>) {
          return {static_cast<double>(v), 0.0};
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          return v.evaluate();
        } else {
          return v;
        }
      },
      s);
}

std::string scalar_kind_name(const Scalar& s) {
  switch (s.index()) {
    case 0: return "boolean";
    case 1: return "rational";
    case 2: return "cyclotomic";
    default: return "complex";
  }
}

}  // namespace hopfft
