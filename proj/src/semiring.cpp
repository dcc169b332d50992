#include "hopfft/semiring.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfft {

namespace {

[[noreturn]] void wrong_arm(const std::string& ring, const Scalar& s) {
  throw std::invalid_argument("scalar of kind " + scalar_kind_name(s) +
                              " does not belong to semiring " + ring);
}

double magnitude(const std::complex<double>& z) { return std::abs(z); }

}  // namespace

bool Semiring::is_zero(const Scalar& a) const { return equal(a, zero()); }
bool Semiring::is_one(const Scalar& a) const { return equal(a, one()); }

bool Semiring::equal(const Scalar& a, const Scalar& b) const {
  if (is_exact()) return a == b;
  std::complex<double> x = scalar_to_complex(a);
  std::complex<double> y = scalar_to_complex(b);
  double scale = std::max({1.0, magnitude(x), magnitude(y)});
  return magnitude(x - y) <= tolerance() * scale;
}

namespace {

class BoolRing final : public Semiring {
 public:
  const std::string& name() const override {
    static const std::string n = "bool";
    return n;
  }
  Scalar zero() const override { return Scalar(false); }
  Scalar one() const override { return Scalar(true); }
  Scalar add(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) || get(b));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) && get(b));
  }
  Scalar involution(const Scalar& a) const override { return Scalar(get(a)); }
  bool is_exact() const override { return true; }
  double tolerance() const override { return 0.0; }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    if (get(a)) return Scalar(true);
    return std::nullopt;
  }
  Scalar from_integer(std::uint64_t n) const override { return Scalar(n > 0); }
  std::optional<Scalar> root_of_unity(std::uint32_t order) const override {
    if (order == 1) return Scalar(true);
    return std::nullopt;
  }
  Scalar sample(std::mt19937_64& rng) const override {
    return Scalar((rng() & 1) != 0);
  }
  std::string format(const Scalar& a) const override {
    return get(a) ? "1" : "0";
  }
  bool is_zero(const Scalar& a) const override { return !get(a); }
  bool is_one(const Scalar& a) const override { return get(a); }

 private:
  bool get(const Scalar& s) const {
    if (const bool* b = std::get_if<bool>(&s)) return *b;
    wrong_arm(name(), s);
  }
};

// Shared base for the three rings whose values are Rational: naturals,
// integers and rationals differ only in closure and in which elements are
// invertible.
class RationalFamilyRing : public Semiring {
 public:
  Scalar zero() const override { return Scalar(Rational(0)); }
  Scalar one() const override { return Scalar(Rational(1)); }
  Scalar add(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) + get(b));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) * get(b));
  }
  Scalar involution(const Scalar& a) const override { return Scalar(get(a)); }
  bool is_exact() const override { return true; }
  double tolerance() const override { return 0.0; }
  Scalar from_integer(std::uint64_t n) const override {
    return Scalar(Rational(boost::multiprecision::cpp_int(n)));
  }
  bool is_zero(const Scalar& a) const override { return get(a).is_zero(); }
  bool is_one(const Scalar& a) const override { return get(a) == 1; }

 protected:
  const Rational& get(const Scalar& s) const {
    if (const Rational* q = std::get_if<Rational>(&s)) return *q;
    wrong_arm(name(), s);
  }

 public:
  std::string format(const Scalar& a) const override { return get(a).str(); }
};

class NatRing final : public RationalFamilyRing {
 public:
  const std::string& name() const override {
    static const std::string n = "nat";
    return n;
  }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    if (get(a) == 1) return one();
    return std::nullopt;
  }
  std::optional<Scalar> root_of_unity(std::uint32_t order) const override {
    if (order == 1) return one();
    return std::nullopt;
  }
  Scalar sample(std::mt19937_64& rng) const override {
    return Scalar(Rational(rng() % 5));
  }
};

class IntRing final : public RationalFamilyRing {
 public:
  const std::string& name() const override {
    static const std::string n = "int";
    return n;
  }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    const Rational& q = get(a);
    if (q == 1 || q == -1) return Scalar(q);
    return std::nullopt;
  }
  std::optional<Scalar> root_of_unity(std::uint32_t order) const override {
    if (order == 1) return one();
    if (order == 2) return Scalar(Rational(-1));
    return std::nullopt;
  }
  Scalar sample(std::mt19937_64& rng) const override {
    return Scalar(Rational(static_cast<std::int64_t>(rng() % 9) - 4));
  }
};

class RatRing final : public RationalFamilyRing {
 public:
  const std::string& name() const override {
    static const std::string n = "rat";
    return n;
  }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    const Rational& q = get(a);
    if (q == 0) return std::nullopt;
    return Scalar(Rational(1) / q);
  }
  std::optional<Scalar> root_of_unity(std::uint32_t order) const override {
    if (order == 1) return one();
    if (order == 2) return Scalar(Rational(-1));
    return std::nullopt;
  }
  Scalar sample(std::mt19937_64& rng) const override {
    std::int64_t num = static_cast<std::int64_t>(rng() % 9) - 4;
    std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;
    return Scalar(Rational(num, den));
  }
};

class CycRing final : public Semiring {
 public:
  explicit CycRing(std::uint32_t n) : order_(n), name_("cyc:" + std::to_string(n)) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  }
  const std::string& name() const override { return name_; }
  Scalar zero() const override { return Scalar(Cyclotomic(order_)); }
  Scalar one() const override {
    return Scalar(Cyclotomic::from_rational(order_, Rational(1)));
  }
  Scalar add(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) + get(b));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) * get(b));
  }
  Scalar involution(const Scalar& a) const override {
    return Scalar(get(a).conjugate());
  }
  bool is_exact() const override { return true; }
  double tolerance() const override { return 0.0; }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    // Monomials q z^k are the only inverses this ring exposes:
    // (q z^k)^-1 = q^-1 z^(n-k). Everything the library ever divides by
    // (group orders, normalisation factors, roots) reduces to one.
    Cyclotomic c = get(a).canonical();
    if (c.terms.size() != 1) return std::nullopt;
    const auto& [e, q] = c.terms[0];
    return Scalar(Cyclotomic::monomial(order_, e == 0 ? 0u : order_ - e,
                                       Rational(1) / q));
  }
  Scalar from_integer(std::uint64_t n) const override {
    return Scalar(Cyclotomic::from_rational(
        order_, Rational(boost::multiprecision::cpp_int(n))));
  }
  std::optional<Scalar> root_of_unity(std::uint32_t k) const override {
    if (k != 0 && order_ % k == 0)
      return Scalar(Cyclotomic::monomial(order_, order_ / k, Rational(1)));
    // -1 lives in every cyclotomic field, including odd orders.
    if (k == 2) return Scalar(Cyclotomic::from_rational(order_, Rational(-1)));
    return std::nullopt;
  }
  Scalar sample(std::mt19937_64& rng) const override {
    // Monomial with a small rational coefficient. Monomials keep products
    // sparse while still exercising every exponent.
    std::int64_t num = static_cast<std::int64_t>(rng() % 7) - 3;
    std::int64_t den = static_cast<std::int64_t>(rng() % 2) + 1;
    std::uint32_t e = static_cast<std::uint32_t>(rng() % order_);
    return Scalar(Cyclotomic::monomial(order_, e, Rational(num, den)));
  }
  std::string format(const Scalar& a) const override {
    return get(a).to_string();
  }
  bool is_zero(const Scalar& a) const override { return get(a).is_zero(); }
  bool is_one(const Scalar& a) const override {
    const Cyclotomic& c = get(a);
    if (c.terms.size() == 1 && c.terms[0].first == 0)
      return c.terms[0].second == 1;
    return c.is_rational() && c.coefficient(0) == 1;
  }

 private:
  const Cyclotomic& get(const Scalar& s) const {
    const Cyclotomic* c = std::get_if<Cyclotomic>(&s);
    if (!c) wrong_arm(name(), s);
    if (c->order != order_)
      throw std::invalid_argument("cyclotomic scalar of order " +
                                  std::to_string(c->order) +
                                  " does not belong to " + name());
    return *c;
  }

  std::uint32_t order_;
  std::string name_;
};

class ComplexRing final : public Semiring {
 public:
  explicit ComplexRing(double tol) : tol_(tol) {}
  const std::string& name() const override {
    static const std::string n = "c64";
    return n;
  }
  Scalar zero() const override { return Scalar(std::complex<double>(0.0)); }
  Scalar one() const override { return Scalar(std::complex<double>(1.0)); }
  Scalar add(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) + get(b));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    return Scalar(get(a) * get(b));
  }
  Scalar involution(const Scalar& a) const override {
    return Scalar(std::conj(get(a)));
  }
  bool is_exact() const override { return false; }
  double tolerance() const override { return tol_; }
  std::optional<Scalar> try_invert(const Scalar& a) const override {
    std::complex<double> z = get(a);
    if (std::abs(z) <= tol_) return std::nullopt;
    return Scalar(1.0 / z);
  }
  Scalar from_integer(std::uint64_t n) const override {
    return Scalar(std::complex<double>(static_cast<double>(n), 0.0));
  }
  std::optional<Scalar> root_of_unity(std::uint32_t order) const override {
    if (order == 0) return std::nullopt;
    double angle = 2.0 * 3.14159265358979323846 / static_cast<double>(order);
    return Scalar(std::complex<double>(std::cos(angle), std::sin(angle)));
  }
  Scalar sample(std::mt19937_64& rng) const override {
    auto unit = [&rng]() {
      return static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
    };
    double re = unit();
    double im = unit();
    return Scalar(std::complex<double>(re, im));
  }
  std::string format(const Scalar& a) const override {
    std::complex<double> z = get(a);
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
  }
  bool is_zero(const Scalar& a) const override {
    return std::abs(get(a)) <= tol_;
  }
  bool is_one(const Scalar& a) const override {
    return std::abs(get(a) - std::complex<double>(1.0)) <= tol_;
  }

 private:
  std::complex<double> get(const Scalar& s) const {
    if (const std::complex<double>* z = std::get_if<std::complex<double>>(&s))
      return *z;
    wrong_arm(name(), s);
  }

  double tol_;
};

}  // namespace

RingPtr cyclotomic_ring(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, RingPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RingPtr ring = std::make_shared<CycRing>(n);
  cache.emplace(n, ring);
  return ring;
}

RingPtr complex_ring(double tol) { return std::make_shared<ComplexRing>(tol); }

RingPtr semiring_by_name(const std::string& name) {
  static const RingPtr kBool = std::make_shared<BoolRing>();
  static const RingPtr kNat = std::make_shared<NatRing>();
  static const RingPtr kInt = std::make_shared<IntRing>();
  static const RingPtr kRat = std::make_shared<RatRing>();
  static const RingPtr kC64 = std::make_shared<ComplexRing>(1e-9);
  if (name == "bool") return kBool;
  if (name == "nat") return kNat;
  if (name == "int") return kInt;
  if (name == "rat") return kRat;
  if (name == "c64") return kC64;
  if (name.rfind("cyc:", 0) == 0) {
    const std::string tail = name.substr(4);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed cyclotomic ring name: " + name);
    unsigned long n = std::stoul(tail);
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    return cyclotomic_ring(static_cast<std::uint32_t>(n));
  }
  throw std::invalid_argument("unknown semiring: " + name);
}

CheckReport check_semiring_laws(const Semiring& ring,
                                const std::vector<Scalar>& samples) {
  CheckReport report;
  report.subject = "semiring laws over " + ring.name();

  struct Law {
    std::string name;
    bool passed = true;
    double deviation = 0.0;
    std::string witness = {};
  };
  auto note = [&ring](Law& law, const Scalar& lhs, const Scalar& rhs,
                      const std::string& witness) {
    if (ring.equal(lhs, rhs)) return;
    law.passed = false;
    double dev = std::abs(scalar_to_complex(lhs) - scalar_to_complex(rhs));
    if (dev > law.deviation) {
      law.deviation = dev;
      law.witness = witness + ": " + ring.format(lhs) + " vs " + ring.format(rhs);
    }
  };

  Law add_assoc{"add associative"}, add_comm{"add commutative"},
      add_unit{"zero is additive unit"}, mul_assoc{"mul associative"},
      mul_comm{"mul commutative"}, mul_unit{"one is multiplicative unit"},
      distrib{"mul distributes over add"}, annihil{"zero annihilates"},
      inv_add{"involution preserves add"}, inv_mul{"involution preserves mul"},
      inv_invol{"involution has period two"}, inv_units{"involution fixes 0 and 1"};

  note(inv_units, ring.involution(ring.zero()), ring.zero(), "0");
  note(inv_units, ring.involution(ring.one()), ring.one(), "1");

  for (const Scalar& a : samples) {
    std::string sa = ring.format(a);
    note(add_unit, ring.add(a, ring.zero()), a, sa);
    note(mul_unit, ring.mul(a, ring.one()), a, sa);
    note(annihil, ring.mul(a, ring.zero()), ring.zero(), sa);
    note(inv_invol, ring.involution(ring.involution(a)), a, sa);
    for (const Scalar& b : samples) {
      std::string sab = sa + ", " + ring.format(b);
      note(add_comm, ring.add(a, b), ring.add(b, a), sab);
      note(mul_comm, ring.mul(a, b), ring.mul(b, a), sab);
      note(inv_add, ring.involution(ring.add(a, b)),
           ring.add(ring.involution(a), ring.involution(b)), sab);
      note(inv_mul, ring.involution(ring.mul(a, b)),
           ring.mul(ring.involution(b), ring.involution(a)), sab);
      for (const Scalar& c : samples) {
        std::string sabc = sab + ", " + ring.format(c);
        note(add_assoc, ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)),
             sabc);
        note(mul_assoc, ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)),
             sabc);
        note(distrib, ring.mul(a, ring.add(b, c)),
             ring.add(ring.mul(a, b), ring.mul(a, c)), sabc);
        note(distrib, ring.mul(ring.add(a, b), c),
             ring.add(ring.mul(a, c), ring.mul(b, c)), sabc);
      }
    }
  }

  for (const Law* law : {&add_assoc, &add_comm, &add_unit, &mul_assoc, &mul_comm,
                         &mul_unit, &distrib, &annihil, &inv_add, &inv_mul,
                         &inv_invol, &inv_units}) {
    report.add(law->name, law->passed, law->deviation, law->witness);
  }
  return report;
}

}  // namespace hopfft
