#include "hopfft/abelian_ft.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "hopfft/scalar.hpp"

namespace hopfft {
namespace {

void require_state(const Morphism& f, std::uint64_t dim, const char* who) {
  if (!f.is_state() || f.rows() != dim)
    throw std::invalid_argument(std::string(who) +
                                ": expected a state on the group carrier");
}

void require_costate(const Morphism& r, std::uint64_t dim, const char* who) {
  if (!r.is_effect() || r.cols() != dim)
    throw std::invalid_argument(std::string(who) +
                                ": expected a co-state on the group carrier");
}

SparseVec state_support(const Morphism& st, const Semiring& ring) {
  SparseVec out;
  for (std::uint64_t i = 0; i < st.rows(); ++i)
    if (!ring.is_zero(st.at(i, 0))) out.emplace_back(i, st.at(i, 0));
  return out;
}

Morphism state_from_support(const RingPtr& ring, std::uint64_t dim,
                            const SparseVec& v) {
  Morphism st = Morphism::zero(ring, {}, {primal(static_cast<std::uint32_t>(dim))});
  for (const auto& [i, value] : v) st.set(i, 0, value);
  return st;
}

// Tensor of two sparse states; index order keeps the result sorted.
SparseVec pair_tensor(const SparseVec& a, const SparseVec& b, std::uint64_t dim_b,
                      const Semiring& ring) {
  SparseVec out;
  out.reserve(a.size() * b.size());
  for (const auto& [i, v] : a)
    for (const auto& [j, w] : b) out.emplace_back(i * dim_b + j, ring.mul(v, w));
  sparse_normalize(out, ring);
  return out;
}

Scalar costate_apply(const Morphism& costate, const SparseVec& v,
                     const Semiring& ring) {
  Scalar acc = ring.zero();
  for (const auto& [i, value] : v)
    acc = ring.add(acc, ring.mul(costate.at(0, i), value));
  return acc;
}

void add_compare(CheckReport& report, std::string name, const Morphism& lhs,
                 const Morphism& rhs) {
  const bool ok = lhs.equal(rhs);
  const bool exact = lhs.ring()->is_exact();
  const double dev = (ok && exact) ? 0.0 : lhs.deviation(rhs);
  report.add(std::move(name), ok, dev);
}

double scalar_distance(const Scalar& a, const Scalar& b) {
  return std::abs(scalar_to_complex(a) - scalar_to_complex(b));
}

Morphism random_sparse_state(const RingPtr& ring, std::uint32_t dim,
                             std::mt19937_64& rng) {
  const std::uint32_t nonzeros = std::min<std::uint32_t>(dim, 8);
  std::set<std::uint64_t> positions;
  while (positions.size() < nonzeros) positions.insert(rng() % dim);
  Morphism st = Morphism::zero(ring, {}, {primal(dim)});
  for (std::uint64_t p : positions) st.set(p, 0, ring->sample(rng));
  return st;
}

}  // namespace

std::uint64_t DualGroup::product_index(std::uint64_t i, std::uint64_t j) const {
  return label_group().mul(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j));
}

std::uint64_t DualGroup::inverse_index(std::uint64_t i) const {
  return label_group().inv(static_cast<std::uint32_t>(i));
}

DualGroup characters(const InternalGroup& ig) {
  const FiniteGroup& g = ig.group;
  if (!g.abelian)
    throw std::invalid_argument(
        "characters exist for abelian internal groups only");
  const RingPtr& ring_ptr = ig.ring;
  const Semiring& ring = *ring_ptr;

  GroupHom presentation = abelian_presentation(g);
  const std::vector<std::uint32_t> factors = abelian_invariant_factors(g);

  // One table of root powers per invariant factor.
  std::vector<std::vector<Scalar>> powers;
  powers.reserve(factors.size());
  for (std::uint32_t d : factors) {
    std::optional<Scalar> zeta = ring.root_of_unity(d);
    if (!zeta)
      throw std::invalid_argument(ring.name() +
                                  " has no roots of unity of required order " +
                                  std::to_string(d));
    std::vector<Scalar> table{ring.one()};
    for (std::uint32_t t = 1; t < d; ++t)
      table.push_back(ring.mul(table.back(), *zeta));
    powers.push_back(std::move(table));
  }

  std::vector<std::vector<std::uint32_t>> digits(g.order);
  for (std::uint32_t x = 0; x < g.order; ++x)
    digits[x] = mixed_radix_digits(presentation(x), factors);

  DualGroup dual{{}, factors, std::move(presentation)};
  dual.characters.reserve(g.order);
  for (std::uint32_t h = 0; h < g.order; ++h) {
    const std::vector<std::uint32_t> label = mixed_radix_digits(h, factors);
    Morphism costate = Morphism::zero(ring_ptr, {primal(g.order)}, {});
    for (std::uint32_t x = 0; x < g.order; ++x) {
      Scalar value = ring.one();
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const std::uint64_t e =
            (std::uint64_t{digits[x][j]} * label[j]) % factors[j];
        value = ring.mul(value, powers[j][e]);
      }
      costate.set(0, x, std::move(value));
    }
    dual.characters.push_back(Character{std::move(costate), label});
  }

  // Every character must be a monoid homomorphism out of the convolution
  // monoid with squared norm N; its adjoint ket being a classical state of
  // the convolution comonoid is the same equation under the involution.
  for (const Character& chi : dual.characters) {
    const Morphism& row = chi.costate;
    if (!ring.equal(row.at(0, g.unit), ring.one()))
      throw std::logic_error("character does not send the unit to one");
    for (std::uint32_t a = 0; a < g.order; ++a)
      for (std::uint32_t b = 0; b < g.order; ++b)
        if (!ring.equal(row.at(0, g.mul(a, b)),
                        ring.mul(row.at(0, a), row.at(0, b))))
          throw std::logic_error("character is not multiplicative");
    Scalar norm = ring.zero();
    for (std::uint32_t x = 0; x < g.order; ++x)
      norm = ring.add(norm, ring.mul(row.at(0, x), ring.involution(row.at(0, x))));
    if (!ring.equal(norm, ig.N))
      throw std::logic_error("character norm differs from the group order");
  }
  return dual;
}

Morphism fourier_costate(const Morphism& conv_mult, const Morphism& conv_counit,
                         const Morphism& antipode, const Morphism& f) {
  const std::uint64_t n = antipode.rows();
  require_state(f, n, "fourier transform");
  const RingPtr& ring_ptr = f.ring();
  const Semiring& ring = *ring_ptr;

  const Morphism inverted = f.then(antipode);
  const SparseVec sf = state_support(inverted, ring);
  ColumnView mult(conv_mult);

  Morphism out = Morphism::zero(ring_ptr, f.codomain(), {});
  for (std::uint64_t x = 0; x < n; ++x) {
    SparseVec input;
    input.reserve(sf.size());
    for (const auto& [a, v] : sf) input.emplace_back(x * n + a, v);
    SparseVec image = mult.apply(input, 1, ring);
    out.set(0, x, costate_apply(conv_counit, image, ring));
  }
  return out;
}

Morphism fourier_state(const Morphism& point_comult, const Morphism& point_unit,
                       const Morphism& r) {
  const std::uint64_t n = point_comult.cols();
  require_costate(r, n, "inverse fourier transform");
  const RingPtr& ring_ptr = r.ring();
  const Semiring& ring = *ring_ptr;

  ColumnView comult(point_comult);
  SparseVec copied =
      comult.apply(state_support(point_unit, ring), 1, ring);

  Morphism out = Morphism::zero(ring_ptr, {}, r.domain());
  for (const auto& [idx, v] : copied) {
    const std::uint64_t a = idx / n;
    const std::uint64_t b = idx % n;
    out.set(a, 0, ring.add(out.at(a, 0), ring.mul(v, r.at(0, b))));
  }
  return out;
}

Morphism fourier_transform(const InternalGroup& ig, const Morphism& f) {
  return fourier_costate(ig.conv.mult, ig.conv.counit, ig.antipode, f);
}

Morphism inverse_fourier_transform(const InternalGroup& ig, const Morphism& r) {
  return fourier_state(ig.point.comult, ig.point.unit, r);
}

std::vector<Scalar> ft_coefficients(const InternalGroup& ig,
                                    const DualGroup& dual, const Morphism& f) {
  const Semiring& ring = *ig.ring;
  require_state(f, ig.group.order, "character coefficients");
  std::optional<Scalar> inv_n = ring.try_invert(ig.N);
  if (!inv_n)
    throw std::invalid_argument("group order " + ring.format(ig.N) +
                                " has no inverse in " + ring.name());

  const SparseVec sf = state_support(f.then(ig.antipode), ring);
  std::vector<Scalar> out;
  out.reserve(dual.characters.size());
  for (const Character& chi : dual.characters)
    out.push_back(ring.mul(*inv_n, costate_apply(chi.costate, sf, ring)));
  return out;
}

Morphism convolve(const InternalGroup& ig, const Morphism& f, const Morphism& g) {
  const Semiring& ring = *ig.ring;
  const std::uint64_t n = ig.group.order;
  require_state(f, n, "convolve");
  require_state(g, n, "convolve");
  ColumnView mult(ig.conv.mult);
  SparseVec pair = pair_tensor(state_support(f, ring), state_support(g, ring),
                               n, ring);
  return state_from_support(ig.ring, n, mult.apply(pair, 1, ring));
}

Morphism pointwise(const InternalGroup& ig, const Morphism& f, const Morphism& g) {
  const Semiring& ring = *ig.ring;
  const std::uint64_t n = ig.group.order;
  require_state(f, n, "pointwise");
  require_state(g, n, "pointwise");
  ColumnView mult(ig.point.mult);
  SparseVec pair = pair_tensor(state_support(f, ring), state_support(g, ring),
                               n, ring);
  return state_from_support(ig.ring, n, mult.apply(pair, 1, ring));
}

namespace {

Morphism costate_product(const FrobeniusAlgebra& algebra, const Morphism& r,
                         const Morphism& s) {
  const std::uint64_t n = algebra.dim;
  const RingPtr& ring_ptr = r.ring();
  const Semiring& ring = *ring_ptr;
  require_costate(r, n, "co-state product");
  require_costate(s, n, "co-state product");

  ColumnView comult(algebra.comult);
  Morphism out = Morphism::zero(ring_ptr, r.domain(), {});
  for (std::uint64_t x = 0; x < n; ++x) {
    Scalar acc = ring.zero();
    for (const auto& [idx, w] : comult.column(x)) {
      const Scalar term = ring.mul(r.at(0, idx / n), s.at(0, idx % n));
      acc = ring.add(acc, ring.mul(w, term));
    }
    out.set(0, x, std::move(acc));
  }
  return out;
}

}  // namespace

Morphism dual_product(const InternalGroup& ig, const Morphism& r,
                      const Morphism& s) {
  return costate_product(ig.conv, r, s);
}

Morphism pointwise_costate_product(const InternalGroup& ig, const Morphism& r,
                                   const Morphism& s) {
  return costate_product(ig.point, r, s);
}

CheckReport check_convolution_theorem(const InternalGroup& ig,
                                      std::uint32_t samples,
                                      std::uint64_t seed) {
  CheckReport report;
  report.subject = "convolution theorem";
  const std::uint32_t n = ig.group.order;

  std::mt19937_64 rng(seed);
  bool ok = true;
  double dev = 0.0;
  std::string witness;
  for (std::uint32_t s = 0; s < samples; ++s) {
    Morphism f = random_sparse_state(ig.ring, n, rng);
    Morphism g = random_sparse_state(ig.ring, n, rng);
    Morphism lhs = fourier_transform(ig, convolve(ig, f, g));
    Morphism rhs =
        dual_product(ig, fourier_transform(ig, f), fourier_transform(ig, g));
    if (!lhs.equal(rhs)) {
      if (ok) witness = "first failure at sample " + std::to_string(s);
      ok = false;
      dev = std::max(dev, lhs.deviation(rhs));
    } else if (!ig.ring->is_exact()) {
      dev = std::max(dev, lhs.deviation(rhs));
    }
  }
  report.add("transform of a convolution is the dual product of the transforms",
             ok, dev,
             ok ? std::to_string(samples) + " seeded sample pairs" : witness);

  add_compare(report, "transform of the convolution unit is the convolution counit",
              fourier_transform(ig, ig.conv.unit), ig.conv.counit);
  return report;
}

CheckReport check_character_orthogonality(const InternalGroup& ig,
                                          const DualGroup& dual,
                                          bool family_battery) {
  CheckReport report;
  report.subject = "character orthogonality";
  const Semiring& ring = *ig.ring;
  const std::uint32_t n = ig.group.order;

  std::optional<Scalar> inv_n = ring.try_invert(ig.N);
  if (!inv_n)
    throw std::invalid_argument("group order " + ring.format(ig.N) +
                                " has no inverse in " + ring.name());

  bool gram_ok = true, delta_ok = true;
  double gram_dev = 0.0, delta_dev = 0.0;
  for (std::uint32_t h = 0; h < n; ++h)
    for (std::uint32_t k = 0; k < n; ++k) {
      const Morphism& left = dual.characters[h].costate;
      const Morphism& right = dual.characters[k].costate;
      Scalar acc = ring.zero();
      for (std::uint32_t x = 0; x < n; ++x)
        acc = ring.add(acc,
                       ring.mul(left.at(0, x), ring.involution(right.at(0, x))));
      const Scalar expected = h == k ? ig.N : ring.zero();
      if (!ring.equal(acc, expected)) {
        gram_ok = false;
        gram_dev = std::max(gram_dev, scalar_distance(acc, expected));
      }
      const Scalar normalized = ring.mul(*inv_n, acc);
      const Scalar indicator = h == k ? ring.one() : ring.zero();
      if (!ring.equal(normalized, indicator)) {
        delta_ok = false;
        delta_dev = std::max(delta_dev, scalar_distance(normalized, indicator));
      }
    }
  report.add("character Gram matrix is N times the identity", gram_ok, gram_dev,
             "N = " + ring.format(ig.N));
  report.add("normalized character pairings are the Kronecker delta", delta_ok,
             delta_dev);

  if (family_battery) {
    std::vector<Morphism> kets;
    kets.reserve(n);
    for (const Character& chi : dual.characters)
      kets.push_back(chi.costate.dagger());
    StateFamilyReport family = classify_state_family(kets, ig.conv);
    report.merge(family.checks, "character kets: ");
    if (!family.note.empty())
      report.add("character ket family notes", true, 0.0, family.note);
  }
  return report;
}

Morphism fourier_matrix(const InternalGroup& ig, const DualGroup& dual,
                        const GroupHom& psi) {
  const std::uint32_t n = ig.group.order;
  if (psi.source.order != n || psi.source.table != ig.group.table)
    throw std::invalid_argument(
        "the identification must start at the transform's group");
  const FiniteGroup& labels = dual.label_group();
  if (psi.target.order != labels.order || psi.target.table != labels.table)
    throw std::invalid_argument(
        "the identification must land in the dual labels");
  if (!psi.is_bijective())
    throw std::invalid_argument("the identification is not an isomorphism");

  Morphism h = Morphism::zero(ig.ring, {primal(n)}, {primal(n)});
  for (std::uint32_t row = 0; row < n; ++row) {
    const Morphism& chi = dual.characters[psi(row)].costate;
    for (std::uint32_t col = 0; col < n; ++col) h.set(row, col, chi.at(0, col));
  }
  return h;
}

CheckReport check_comonoid_monoid_iso(const FrobeniusAlgebra& point,
                                      const FrobeniusAlgebra& conv,
                                      const Scalar& N, const Morphism& h) {
  CheckReport report;
  report.subject = "transform matrix exchange laws";
  if (point.dim != conv.dim)
    throw std::invalid_argument(
        "the two structures must share one carrier");
  const std::uint32_t n = point.dim;
  const Semiring& ring = *point.mult.ring();
  if (h.rows() != n || h.cols() != n)
    throw std::invalid_argument("matrix shape does not fit the carrier");

  std::vector<SparseVec> columns(n);
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t r = 0; r < n; ++r)
      if (!ring.is_zero(h.at(r, c))) columns[c].emplace_back(r, h.at(r, c));

  ColumnView conv_comult(conv.comult);
  ColumnView point_comult(point.comult);
  ColumnView point_mult(point.mult);
  ColumnView conv_mult_view(conv.mult);
  ColumnView h_view(h);

  // Comonoid homomorphism from the point pair to the conv pair. The right
  // side pushes the point comultiplication through h leg by leg; for a group
  // pair that column is the doubled basis vector, but groupoid structures
  // comultiply into all decompositions, so the column is taken as it is.
  bool comult_ok = true, counit_ok = true;
  double comult_dev = 0.0, counit_dev = 0.0;
  for (std::uint32_t g = 0; g < n; ++g) {
    SparseVec lhs = conv_comult.apply(columns[g], 1, ring);
    SparseVec rhs =
        h_view.apply(h_view.apply(point_comult.column(g), n, ring), 1, ring);
    if (!sparse_equal(lhs, rhs, ring)) {
      comult_ok = false;
      comult_dev = std::max(comult_dev, sparse_deviation(lhs, rhs));
    }
    const Scalar projected = costate_apply(conv.counit, columns[g], ring);
    const Scalar expected = point.counit.at(0, g);
    if (!ring.equal(projected, expected)) {
      counit_ok = false;
      counit_dev = std::max(counit_dev, scalar_distance(projected, expected));
    }
  }
  report.add("comonoid homomorphism from point to conv: comultiplication",
             comult_ok, comult_dev);
  report.add("comonoid homomorphism from point to conv: counit", counit_ok,
             counit_dev);

  // Monoid homomorphism from the conv pair to the point pair.
  bool mult_ok = true;
  double mult_dev = 0.0;
  for (std::uint32_t a = 0; a < n && mult_ok; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      SparseVec product = conv_mult_view.column(a * std::uint64_t{n} + b);
      SparseVec lhs = h_view.apply(product, 1, ring);
      SparseVec rhs =
          point_mult.apply(pair_tensor(columns[a], columns[b], n, ring), 1, ring);
      if (!sparse_equal(lhs, rhs, ring)) {
        mult_ok = false;
        mult_dev = std::max(mult_dev, sparse_deviation(lhs, rhs));
        break;
      }
    }
  report.add("monoid homomorphism from conv to point: multiplication", mult_ok,
             mult_dev);

  SparseVec mapped_unit = h_view.apply(state_support(conv.unit, ring), 1, ring);
  SparseVec point_unit = state_support(point.unit, ring);
  const bool unit_ok = sparse_equal(mapped_unit, point_unit, ring);
  report.add("monoid homomorphism from conv to point: unit", unit_ok,
             (unit_ok && ring.is_exact())
                 ? 0.0
                 : sparse_deviation(mapped_unit, point_unit));

  // Separate from the exchange laws: the matrix is unitary up to N wherever
  // the involution supplies an adjoint. Both products are checked; over the
  // booleans the pair certifies two-sided invertibility, since one-sided
  // converse identities do not imply the other side there.
  bool unitary_ok = true, counitary_ok = true;
  double unitary_dev = 0.0, counitary_dev = 0.0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      Scalar acc = ring.zero();
      Scalar coacc = ring.zero();
      for (std::uint32_t k = 0; k < n; ++k) {
        acc = ring.add(acc, ring.mul(h.at(a, k), ring.involution(h.at(b, k))));
        coacc =
            ring.add(coacc, ring.mul(ring.involution(h.at(k, a)), h.at(k, b)));
      }
      const Scalar expected = a == b ? N : ring.zero();
      if (!ring.equal(acc, expected)) {
        unitary_ok = false;
        unitary_dev = std::max(unitary_dev, scalar_distance(acc, expected));
      }
      if (!ring.equal(coacc, expected)) {
        counitary_ok = false;
        counitary_dev = std::max(counitary_dev, scalar_distance(coacc, expected));
      }
    }
  report.add("matrix times its adjoint is N times the identity", unitary_ok,
             unitary_dev);
  report.add("adjoint times the matrix is N times the identity", counitary_ok,
             counitary_dev);
  return report;
}

CheckReport check_comonoid_monoid_iso(const InternalGroup& ig,
                                      const Morphism& h) {
  return check_comonoid_monoid_iso(ig.point, ig.conv, ig.N, h);
}

namespace {

// The permutation morphism of a bijective group map.
Morphism permutation_morphism(const RingPtr& ring, const GroupHom& phi) {
  const std::uint32_t n = phi.source.order;
  Morphism m = Morphism::zero(ring, {primal(n)}, {primal(n)});
  for (std::uint32_t x = 0; x < n; ++x) m.set(phi(x), x, ring->one());
  return m;
}

void require_structure_hom(const InternalGroup& src, const InternalGroup& dst,
                           const Morphism& m) {
  const Semiring& ring = *src.ring;
  const std::uint32_t n = src.group.order;
  ColumnView view(m);

  auto check = [](bool passed, const std::string& what) {
    if (!passed)
      throw std::invalid_argument("the isomorphism does not preserve " + what);
  };

  Morphism id = Morphism::identity(src.ring, {primal(n)});
  check(m.then(m.dagger()).equal(id) && m.dagger().then(m).equal(id),
        "unitarity of the permutation");

  const std::pair<const FrobeniusAlgebra*, const FrobeniusAlgebra*> pairs[] = {
      {&src.conv, &dst.conv}, {&src.point, &dst.point}};
  const char* names[] = {"the convolution algebra", "the point algebra"};
  for (int which = 0; which < 2; ++which) {
    const FrobeniusAlgebra& a = *pairs[which].first;
    const FrobeniusAlgebra& b = *pairs[which].second;
    const std::string what = names[which];
    ColumnView mult_src(a.mult);
    ColumnView mult_dst(b.mult);
    ColumnView comult_src(a.comult);
    ColumnView comult_dst(b.comult);

    bool mult_ok = true, comult_ok = true;
    for (std::uint32_t x = 0; x < n && mult_ok && comult_ok; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        SparseVec lhs =
            view.apply(mult_src.column(x * std::uint64_t{n} + y), 1, ring);
        SparseVec pair = pair_tensor(view.column(x), view.column(y), n, ring);
        SparseVec rhs = mult_dst.apply(pair, 1, ring);
        if (!sparse_equal(lhs, rhs, ring)) {
          mult_ok = false;
          break;
        }
      }
      SparseVec lhs = comult_dst.apply(view.column(x), 1, ring);
      SparseVec rhs =
          view.apply(view.apply(comult_src.column(x), n, ring), 1, ring);
      if (!sparse_equal(lhs, rhs, ring)) comult_ok = false;
    }
    check(mult_ok, "the multiplication of " + what);
    check(comult_ok, "the comultiplication of " + what);

    check(sparse_equal(view.apply(state_support(a.unit, ring), 1, ring),
                       state_support(b.unit, ring), ring),
          "the unit of " + what);
    bool counit_ok = true;
    for (std::uint32_t x = 0; x < n; ++x)
      if (!ring.equal(costate_apply(b.counit, view.column(x), ring),
                      a.counit.at(0, x)))
        counit_ok = false;
    check(counit_ok, "the counit of " + what);
  }
}

}  // namespace

CheckReport check_canonicity(const InternalGroup& source,
                             const InternalGroup& target, const GroupHom& phi) {
  if (source.ring.get() != target.ring.get())
    throw std::invalid_argument("the two internal groups must share a semiring");
  if (phi.source.table != source.group.table ||
      phi.target.table != target.group.table)
    throw std::invalid_argument("the isomorphism does not connect these groups");
  if (!phi.is_bijective())
    throw std::invalid_argument("the group map is not an isomorphism");

  Morphism m = permutation_morphism(source.ring, phi);
  require_structure_hom(source, target, m);

  CheckReport report;
  report.subject = "transform naturality";
  const std::uint32_t n = source.group.order;

  bool ok = true;
  double dev = 0.0;
  for (std::uint32_t g = 0; g < n; ++g) {
    Morphism delta = Morphism::zero(source.ring, {}, {primal(n)});
    delta.set(g, 0, source.ring->one());
    Morphism direct = fourier_transform(source, delta);
    Morphism through = m.then(fourier_transform(target, delta.then(m)));
    if (!direct.equal(through)) {
      ok = false;
      dev = std::max(dev, direct.deviation(through));
    } else if (!source.ring->is_exact()) {
      dev = std::max(dev, direct.deviation(through));
    }
  }
  report.add("transform commutes with the isomorphism on every delta state", ok,
             dev, std::to_string(n) + " states");
  return report;
}

}  // namespace hopfft
