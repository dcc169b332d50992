#include <doctest.h>

#include <random>

#include "hopfft/tensor.hpp"

using namespace hopfft;

namespace {

Morphism random_morphism(RingPtr ring, WireProfile dom, WireProfile cod,
                         std::mt19937_64& rng) {
  Morphism m(ring, std::move(dom), std::move(cod));
  for (std::uint64_t r = 0; r < m.rows(); ++r)
    for (std::uint64_t c = 0; c < m.cols(); ++c)
      m.set(r, c, ring->sample(rng));
  return m;
}

}  // namespace

TEST_CASE("entries are stored row major with codomain first") {
  RingPtr q = semiring_by_name("rat");
  Morphism m(q, {primal(3)}, {primal(2)});
  m.set(0, 2, Scalar(Rational(5)));
  m.set(1, 0, Scalar(Rational(7)));
  CHECK(m.entries()[2] == Scalar(Rational(5)));
  CHECK(m.entries()[3] == Scalar(Rational(7)));
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
}

TEST_CASE("composition is matrix product in diagrammatic order") {
  RingPtr q = semiring_by_name("rat");
  // f: 2 -> 2 doubles the second coordinate, g swaps coordinates.
  Morphism f = Morphism::identity(q, {primal(2)});
  f.set(1, 1, Scalar(Rational(2)));
  Morphism g(q, {primal(2)}, {primal(2)});
  g.set(0, 1, Scalar(Rational(1)));
  g.set(1, 0, Scalar(Rational(1)));
  Morphism fg = f.then(g);
  CHECK(fg.at(0, 1) == Scalar(Rational(2)));
  CHECK(fg.at(1, 0) == Scalar(Rational(1)));
  CHECK(fg.at(0, 0) == Scalar(Rational(0)));
}

TEST_CASE("composition validates profiles and rings") {
  RingPtr q = semiring_by_name("rat");
  Morphism f(q, {primal(2)}, {primal(3)});
  Morphism g(q, {primal(4)}, {primal(2)});
  CHECK_THROWS_WITH_AS(f.then(g), doctest::Contains("profile mismatch"),
                       std::invalid_argument);
  Morphism h(semiring_by_name("int"), {primal(3)}, {primal(2)});
  CHECK_THROWS_WITH_AS(f.then(h), doctest::Contains("semiring mismatch"),
                       std::invalid_argument);
  Morphism k(q, {primal(3)}, {primal(2)});
  CHECK_NOTHROW(f.then(k));
}

TEST_CASE("cap after cup contracts to the dimension") {
  for (std::uint32_t d = 1; d <= 8; ++d) {
    RingPtr q = semiring_by_name("rat");
    Morphism loop = Morphism::cup(q, d).then(Morphism::cap(q, d));
    CHECK(loop.scalar_value() == Scalar(Rational(d)));
  }
  // Over the booleans the loop is truth, not a count.
  RingPtr b = semiring_by_name("bool");
  Morphism loop = Morphism::cup(b, 5).then(Morphism::cap(b, 5));
  CHECK(loop.scalar_value() == Scalar(true));
}

TEST_CASE("snake equations hold for every dimension up to 8") {
  for (const char* ring_name : {"rat", "bool", "c64"}) {
    RingPtr ring = semiring_by_name(ring_name);
    for (std::uint32_t d = 1; d <= 8; ++d) {
      Morphism id1 = Morphism::identity(ring, {primal(d)});
      Morphism cup = Morphism::cup(ring, d);
      Morphism cap = Morphism::cap(ring, d);
      // Wire profile bookkeeping: both zig-zags run over three legs.
      Morphism left = id1.tensor(cup).then(cap.tensor(id1));
      CHECK(left.equal(id1.reshaped(left.domain(), left.codomain())));
      Morphism right = cup.tensor(id1).then(id1.tensor(cap));
      CHECK(right.equal(id1.reshaped(right.domain(), right.codomain())));
    }
  }
}

TEST_CASE("tensor interchange law") {
  std::mt19937_64 rng(23);
  for (const char* ring_name : {"rat", "cyc:4", "c64"}) {
    RingPtr ring = semiring_by_name(ring_name);
    Morphism f = random_morphism(ring, {primal(2)}, {primal(3)}, rng);
    Morphism g = random_morphism(ring, {primal(3)}, {primal(2)}, rng);
    Morphism h = random_morphism(ring, {primal(3)}, {primal(2)}, rng);
    Morphism k = random_morphism(ring, {primal(2)}, {primal(3)}, rng);
    Morphism lhs = f.tensor(h).then(g.tensor(k));
    Morphism rhs = f.then(g).tensor(h.then(k));
    CHECK(lhs.equal(rhs, ring->is_exact() ? std::optional<double>() : 1e-12));
  }
}

TEST_CASE("dagger is a contravariant involution") {
  std::mt19937_64 rng(31);
  RingPtr ring = semiring_by_name("cyc:4");
  Morphism f = random_morphism(ring, {primal(2)}, {primal(3)}, rng);
  Morphism g = random_morphism(ring, {primal(3)}, {primal(2)}, rng);
  CHECK(f.dagger().dagger().equal(f));
  CHECK(f.then(g).dagger().equal(g.dagger().then(f.dagger())));
  Morphism cup = Morphism::cup(ring, 4);
  CHECK(Morphism::cap(ring, 4).equal(cup.dagger()));
  CHECK(cup.dagger().domain().size() == 2);
  CHECK(cup.dagger().codomain().empty());
}

TEST_CASE("swap exchanges tensor factors") {
  RingPtr q = semiring_by_name("rat");
  std::mt19937_64 rng(47);
  Morphism f = random_morphism(q, {}, {primal(2)}, rng);
  Morphism g = random_morphism(q, {}, {primal(3)}, rng);
  Morphism sw = Morphism::swap_wires(q, primal(2), primal(3));
  Morphism lhs = f.tensor(g).then(sw);
  Morphism rhs = g.tensor(f);
  CHECK(lhs.equal(rhs.reshaped(rhs.domain(), lhs.codomain())));

  Morphism back = Morphism::swap_wires(q, primal(3), primal(2));
  Morphism round = sw.then(back);
  CHECK(round.equal(Morphism::identity(q, {primal(2), primal(3)})));
}

TEST_CASE("states and effects pair to scalars") {
  RingPtr q = semiring_by_name("rat");
  Morphism ket(q, {}, {primal(3)});
  ket.set(1, 0, Scalar(Rational(2, 3)));
  Morphism bra = ket.dagger();
  CHECK(bra.is_effect());
  CHECK(ket.is_state());
  Morphism pairing = ket.then(bra);
  CHECK(pairing.scalar_value() == Scalar(Rational(4, 9)));
}

TEST_CASE("reshape preserves entries and totals") {
  RingPtr q = semiring_by_name("rat");
  Morphism m(q, {primal(4)}, {primal(6)});
  m.set(5, 3, Scalar(Rational(9)));
  Morphism r = m.reshaped({primal(2), primal(2)}, {primal(2), primal(3)});
  CHECK(r.at(5, 3) == Scalar(Rational(9)));
  CHECK_THROWS_AS(m.reshaped({primal(3)}, {primal(6)}), std::invalid_argument);
}

TEST_CASE("approximate equality uses relative max norm") {
  RingPtr cx = semiring_by_name("c64");
  Morphism a(cx, {}, {primal(2)});
  a.set(0, 0, Scalar(std::complex<double>(1e6, 0.0)));
  Morphism b = a;
  b.set(0, 0, Scalar(std::complex<double>(1e6 + 1e-5, 0.0)));
  // Absolute difference 1e-5 is far below 1e-9 relative to 1e6.
  CHECK(a.equal(b));
  Morphism c = a;
  c.set(1, 0, Scalar(std::complex<double>(0.1, 0.0)));
  CHECK_FALSE(a.equal(c));
  CHECK(a.equal(c, 1.0));
}

TEST_CASE("sparse application matches dense composition") {
  std::mt19937_64 rng(59);
  RingPtr q = semiring_by_name("rat");
  Morphism op = random_morphism(q, {primal(3)}, {primal(4)}, rng);
  Morphism left = Morphism::identity(q, {primal(2)});
  Morphism right = Morphism::identity(q, {primal(5)});
  Morphism big = left.tensor(op).tensor(right);

  ColumnView view(op);
  for (std::uint64_t col = 0; col < big.cols(); ++col) {
    SparseVec in = sparse_basis_vector(col, *q);
    SparseVec out = view.apply(in, 5, *q);
    SparseVec expect;
    for (std::uint64_t r = 0; r < big.rows(); ++r)
      if (!q->is_zero(big.at(r, col))) expect.emplace_back(r, big.at(r, col));
    CHECK(sparse_equal(out, expect, *q));
  }
}

TEST_CASE("sparse utilities merge and compare") {
  RingPtr q = semiring_by_name("rat");
  SparseVec v{{3, Scalar(Rational(1))}, {1, Scalar(Rational(2))},
              {3, Scalar(Rational(-1))}};
  sparse_normalize(v, *q);
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 1);
  SparseVec w{{1, Scalar(Rational(2))}};
  CHECK(sparse_equal(v, w, *q));
  SparseVec u{{1, Scalar(Rational(5, 2))}};
  CHECK(sparse_deviation(v, u) == doctest::Approx(0.5));
}
