#include "hopfft/internal_group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfft {

namespace {

std::string basis_witness(std::uint64_t index, std::uint64_t dim,
                          std::uint32_t legs) {
  std::string out = "at basis (";
  std::vector<std::uint64_t> digits(legs);
  for (std::uint32_t i = legs; i-- > 0;) {
    digits[i] = index % dim;
    index /= dim;
  }
  for (std::uint32_t i = 0; i < legs; ++i) {
    if (i) out += ", ";
    out += std::to_string(digits[i]);
  }
  return out + ")";
}

// Basis vectors with every coefficient implicitly one, kept as sorted index
// lists. The structure maps of a group have unit entries throughout, so the
// verification streams spend most of their time here, with no ring calls.
using IndexVec = std::vector<std::uint64_t>;

SparseVec from_indices(const IndexVec& v, const Semiring& ring) {
  SparseVec out;
  out.reserve(v.size());
  for (std::uint64_t idx : v) out.emplace_back(idx, ring.one());
  return out;
}

// Unit-coefficient counterpart of ColumnView::apply. Returns false when two
// expansion terms land on the same index, which this representation cannot
// express; the caller then redoes that basis state with full scalars.
bool apply_indices(const ColumnView& view, const IndexVec& in,
                   std::uint64_t right_dim, IndexVec& out) {
  out.clear();
  const std::uint64_t block = view.dom_dim() * right_dim;
  for (const std::uint64_t idx : in) {
    const std::uint64_t a = idx / block;
    const std::uint64_t rem = idx % block;
    const std::uint64_t mid = rem / right_dim;
    const std::uint64_t b = rem % right_dim;
    for (const auto& entry : view.column(mid))
      out.push_back((a * view.cod_dim() + entry.first) * right_dim + b);
  }
  std::sort(out.begin(), out.end());
  return std::adjacent_find(out.begin(), out.end()) == out.end();
}

// Accumulates one streamed equation: worst deviation and first witness.
struct EquationTrace {
  bool passed = true;
  double deviation = 0.0;
  std::string witness;

  void observe(const SparseVec& lhs, const SparseVec& rhs,
               const Semiring& ring, std::uint64_t index, std::uint64_t dim,
               std::uint32_t legs) {
    if (sparse_equal(lhs, rhs, ring)) return;
    double dev = sparse_deviation(lhs, rhs);
    if (passed || dev > deviation) {
      deviation = dev;
      if (passed) witness = basis_witness(index, dim, legs);
    }
    passed = false;
  }

  void observe_indices(const IndexVec& lhs, const IndexVec& rhs,
                       const Semiring& ring, std::uint64_t index,
                       std::uint64_t dim, std::uint32_t legs) {
    if (lhs == rhs) return;
    observe(from_indices(lhs, ring), from_indices(rhs, ring), ring, index, dim,
            legs);
  }

  void record(CheckReport& report, std::string name) const {
    report.add(std::move(name), passed, deviation, witness);
  }
};

struct LoopAnalysis {
  Scalar scale;
  bool proportional;
  double deviation;
};

LoopAnalysis analyze_loop(const FrobeniusAlgebra& a) {
  const Semiring& ring = *a.mult.ring();
  ColumnView mult(a.mult);
  ColumnView comult(a.comult);

  // The loop sends |j> through comult then mult; column by column it must be
  // `scale` times the identity, where `scale` is read off the first column.
  Scalar scale = ring.zero();
  SparseVec first = mult.apply(comult.column(0), 1, ring);
  for (const auto& [idx, val] : first)
    if (idx == 0) scale = val;

  bool proportional = true;
  double deviation = 0.0;
  for (std::uint64_t j = 0; j < a.dim; ++j) {
    SparseVec col = j == 0 ? std::move(first)
                           : mult.apply(comult.column(j), 1, ring);
    SparseVec expected;
    if (!ring.is_zero(scale)) expected.emplace_back(j, scale);
    if (!sparse_equal(col, expected, ring)) {
      proportional = false;
      deviation = std::max(deviation, sparse_deviation(col, expected));
    }
  }
  return LoopAnalysis{std::move(scale), proportional, deviation};
}

// The states of a family arrive as dense column morphisms; the predicate
// arithmetic only ever touches their nonzero entries.
SparseVec state_support(const Morphism& state, const Semiring& ring) {
  SparseVec out;
  for (std::uint64_t r = 0; r < state.rows(); ++r)
    if (!ring.is_zero(state.at(r, 0))) out.emplace_back(r, state.at(r, 0));
  return out;
}

SparseVec pair_support(const SparseVec& left, const SparseVec& right,
                       std::uint64_t dim, const Semiring& ring) {
  SparseVec out;
  out.reserve(left.size() * right.size());
  for (const auto& [i, vi] : left)
    for (const auto& [j, vj] : right)
      out.emplace_back(i * dim + j, ring.mul(vi, vj));
  sparse_normalize(out, ring);
  return out;
}

SparseVec scaled(const SparseVec& v, const Scalar& factor,
                 const Semiring& ring) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, val] : v) {
    Scalar prod = ring.mul(factor, val);
    if (!ring.is_zero(prod)) out.emplace_back(i, std::move(prod));
  }
  return out;
}

// Records a dense comparison line. Deviation needs a full float scan, so it
// is only computed when the comparison failed or the ring is approximate.
void add_compare(CheckReport& report, std::string name, const Morphism& lhs,
                 const Morphism& rhs) {
  const bool ok = lhs.equal(rhs);
  const double dev = (ok && lhs.ring()->is_exact()) ? 0.0 : lhs.deviation(rhs);
  report.add(std::move(name), ok, dev);
}

// Compares `candidate` against the dagger of `m` entry by entry, without
// materialising the dagger unless the comparison already failed.
void add_dagger_compare(CheckReport& report, std::string name,
                        const Morphism& m, const Morphism& candidate) {
  const Semiring& ring = *m.ring();
  bool ok = candidate.rows() == m.cols() && candidate.cols() == m.rows();
  for (std::uint64_t r = 0; ok && r < m.rows(); ++r)
    for (std::uint64_t c = 0; c < m.cols(); ++c)
      if (!ring.equal(candidate.at(c, r), ring.involution(m.at(r, c)))) {
        ok = false;
        break;
      }
  double dev = 0.0;
  if (candidate.rows() == m.cols() && candidate.cols() == m.rows() &&
      (!ok || !ring.is_exact()))
    dev = candidate.deviation(m.dagger());
  report.add(std::move(name), ok, dev);
}

// Exchanges two adjacent wires of equal dimension `mid` sitting left of a
// trailing factor of dimension `right`. A pure index rewrite; building the
// swap as a matrix would cost mid^4 entries.
SparseVec swap_middle_pair(SparseVec v, std::uint64_t mid, std::uint64_t right,
                           const Semiring& ring) {
  const std::uint64_t pair_block = mid * mid * right;
  for (auto& entry : v) {
    const std::uint64_t a = entry.first / pair_block;
    std::uint64_t rem = entry.first % pair_block;
    const std::uint64_t p = rem / (mid * right);
    rem %= mid * right;
    const std::uint64_t q = rem / right;
    const std::uint64_t b = rem % right;
    entry.first = ((a * mid + q) * mid + p) * right + b;
  }
  sparse_normalize(v, ring);
  return v;
}

// Index-list version of the wire exchange above. Always collision free,
// since the rewrite is a bijection on indices.
void swap_middle_pair_indices(IndexVec& v, std::uint64_t mid,
                              std::uint64_t right) {
  const std::uint64_t pair_block = mid * mid * right;
  for (std::uint64_t& idx : v) {
    const std::uint64_t a = idx / pair_block;
    std::uint64_t rem = idx % pair_block;
    const std::uint64_t p = rem / (mid * right);
    rem %= mid * right;
    const std::uint64_t q = rem / right;
    const std::uint64_t b = rem % right;
    idx = ((a * mid + q) * mid + p) * right + b;
  }
  std::sort(v.begin(), v.end());
}

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(RingPtr ring, std::uint32_t d)
    : dim(d),
      mult(Morphism::zero(ring, {primal(d), primal(d)}, {primal(d)})),
      unit(Morphism::zero(ring, {}, {primal(d)})),
      comult(Morphism::zero(ring, {primal(d)}, {primal(d), primal(d)})),
      counit(Morphism::zero(ring, {primal(d)}, {})) {}

InternalGroup build_internal_group(const FiniteGroup& g, RingPtr ring) {
  const std::uint32_t n = g.order;
  const Scalar one = ring->one();

  // The comultiplications are the daggers of the multiplications, but every
  // entry is one, so they can be written down directly instead of transposing.
  FrobeniusAlgebra point(ring, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    point.mult.set(a, static_cast<std::uint64_t>(a) * n + a, one);
    point.comult.set(static_cast<std::uint64_t>(a) * n + a, a, one);
    point.unit.set(a, 0, one);
    point.counit.set(0, a, one);
  }
  point.is_commutative = true;

  FrobeniusAlgebra conv(ring, n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      conv.mult.set(g.mul(a, b), static_cast<std::uint64_t>(a) * n + b, one);
      conv.comult.set(static_cast<std::uint64_t>(a) * n + b, g.mul(a, b), one);
    }
  conv.unit.set(g.unit, 0, one);
  conv.counit.set(0, g.unit, one);
  conv.is_commutative = g.abelian;

  for (FrobeniusAlgebra* f : {&point, &conv}) {
    LoopAnalysis loop = analyze_loop(*f);
    if (loop.proportional) f->norm = loop.scale;
    f->is_special = loop.proportional && ring->equal(loop.scale, one);
  }

  Morphism antipode = antipode_of(point, conv);
  Scalar order_scalar = conv.norm.value();
  return InternalGroup{g,
                       std::move(ring),
                       std::move(point),
                       std::move(conv),
                       std::move(antipode),
                       std::move(order_scalar)};
}

Morphism antipode_of(const FrobeniusAlgebra& point,
                     const FrobeniusAlgebra& conv) {
  if (point.dim != conv.dim)
    throw std::invalid_argument(
        "antipode needs both structures on one carrier");
  const std::uint32_t n = point.dim;
  const RingPtr& ring = point.mult.ring();
  const Semiring& r = *ring;

  // Copied unit of the point structure, paired against the multiplication
  // effect of conv. Contracting the shared middle leg gives the antipode as
  // an n x n map without ever forming the three-legged intermediate.
  Morphism copied_unit = point.unit.then(point.comult);
  Morphism pair_effect = conv.mult.then(conv.counit);

  Morphism s = Morphism::zero(ring, {primal(n)}, {primal(n)});
  for (std::uint64_t idx = 0; idx < copied_unit.rows(); ++idx) {
    const Scalar& cval = copied_unit.at(idx, 0);
    if (r.is_zero(cval)) continue;
    const std::uint64_t a = idx / n;
    const std::uint64_t b = idx % n;
    for (std::uint64_t g = 0; g < n; ++g) {
      const Scalar& kval = pair_effect.at(0, b * n + g);
      if (r.is_zero(kval)) continue;
      s.set(a, g, r.add(s.at(a, g), r.mul(cval, kval)));
    }
  }
  return s;
}

CheckReport check_frobenius(const FrobeniusAlgebra& a) {
  CheckReport report;
  report.subject = "frobenius structure";
  const Semiring& ring = *a.mult.ring();
  const std::uint64_t n = a.dim;

  add_dagger_compare(report, "comult is the dagger of mult", a.mult, a.comult);
  add_dagger_compare(report, "counit is the dagger of unit", a.unit, a.counit);

  ColumnView mult(a.mult);
  ColumnView comult(a.comult);
  ColumnView unit(a.unit);
  const bool unit_maps = mult.unit_only() && comult.unit_only();

  EquationTrace assoc;
  {
    IndexVec base(1), mid, lhs, rhs;
    for (std::uint64_t idx = 0; idx < n * n * n; ++idx) {
      if (unit_maps) {
        base[0] = idx;
        if (apply_indices(mult, base, n, mid) &&
            apply_indices(mult, mid, 1, lhs) &&
            apply_indices(mult, base, 1, mid) &&
            apply_indices(mult, mid, 1, rhs)) {
          assoc.observe_indices(lhs, rhs, ring, idx, n, 3);
          continue;
        }
      }
      SparseVec v = sparse_basis_vector(idx, ring);
      SparseVec l = mult.apply(mult.apply(v, n, ring), 1, ring);
      SparseVec r = mult.apply(mult.apply(v, 1, ring), 1, ring);
      assoc.observe(l, r, ring, idx, n, 3);
    }
  }
  assoc.record(report, "mult is associative");

  EquationTrace left_unit, right_unit;
  for (std::uint64_t g = 0; g < n; ++g) {
    SparseVec v = sparse_basis_vector(g, ring);
    SparseVec lhs = mult.apply(unit.apply(v, n, ring), 1, ring);
    left_unit.observe(lhs, v, ring, g, n, 1);
    SparseVec rhs = mult.apply(unit.apply(v, 1, ring), 1, ring);
    right_unit.observe(rhs, v, ring, g, n, 1);
  }
  left_unit.record(report, "unit is a left unit");
  right_unit.record(report, "unit is a right unit");

  EquationTrace frob_left, frob_right;
  {
    IndexVec base(1), step, middle, lhs, rhs;
    for (std::uint64_t idx = 0; idx < n * n; ++idx) {
      if (unit_maps) {
        base[0] = idx;
        if (apply_indices(mult, base, 1, step) &&
            apply_indices(comult, step, 1, middle) &&
            apply_indices(comult, base, n, step) &&
            apply_indices(mult, step, 1, lhs) &&
            apply_indices(comult, base, 1, step) &&
            apply_indices(mult, step, n, rhs)) {
          frob_left.observe_indices(lhs, middle, ring, idx, n, 2);
          frob_right.observe_indices(rhs, middle, ring, idx, n, 2);
          continue;
        }
      }
      SparseVec v = sparse_basis_vector(idx, ring);
      SparseVec middle_s = comult.apply(mult.apply(v, 1, ring), 1, ring);
      SparseVec lhs_s = mult.apply(comult.apply(v, n, ring), 1, ring);
      frob_left.observe(lhs_s, middle_s, ring, idx, n, 2);
      SparseVec rhs_s = mult.apply(comult.apply(v, 1, ring), n, ring);
      frob_right.observe(rhs_s, middle_s, ring, idx, n, 2);
    }
  }
  frob_left.record(report, "frobenius law (comult on the left)");
  frob_right.record(report, "frobenius law (comult on the right)");

  bool measured = true;
  for (std::uint64_t x = 0; x < n && measured; ++x)
    for (std::uint64_t y = x + 1; y < n && measured; ++y)
      measured = sparse_equal(mult.column(x * n + y), mult.column(y * n + x),
                              ring);
  report.add("commutativity matches the declared flag",
             measured == a.is_commutative, 0.0,
             std::string("measured ") + (measured ? "commutative" : "noncommutative") +
                 ", declared " + (a.is_commutative ? "commutative" : "noncommutative"));
  return report;
}

CheckReport check_quasi_special(const FrobeniusAlgebra& a) {
  CheckReport report;
  report.subject = "loop scalar";
  const Semiring& ring = *a.mult.ring();
  LoopAnalysis loop = analyze_loop(a);
  report.add("mult after comult is proportional to the identity",
             loop.proportional, loop.deviation,
             "loop scalar = " + ring.format(loop.scale));
  if (a.norm)
    report.add("recorded norm equals the loop scalar",
               ring.equal(*a.norm, loop.scale), 0.0,
               "recorded " + ring.format(*a.norm));
  return report;
}

CheckReport check_coherence(const FrobeniusAlgebra& point,
                            const FrobeniusAlgebra& conv) {
  CheckReport report;
  report.subject = "coherence of the pair";
  const RingPtr& ring = point.mult.ring();
  Morphism unit_scalar = Morphism::scalar(ring, ring->one());

  Morphism copied = conv.unit.then(point.comult);
  Morphism doubled = conv.unit.tensor(conv.unit);
  add_compare(report, "conv unit is copied by point comult", copied, doubled);
  Morphism normed = conv.unit.then(point.counit);
  add_compare(report, "conv unit is normalised by point counit", normed,
              unit_scalar);

  Morphism copied_p = point.unit.then(conv.comult);
  Morphism doubled_p = point.unit.tensor(point.unit);
  add_compare(report, "point unit is copied by conv comult", copied_p,
              doubled_p);
  Morphism normed_p = point.unit.then(conv.counit);
  add_compare(report, "point unit is normalised by conv counit", normed_p,
              unit_scalar);
  return report;
}

CheckReport check_bialgebra(const FrobeniusAlgebra& point,
                            const FrobeniusAlgebra& conv) {
  CheckReport report;
  report.subject = "bialgebra pair";
  const RingPtr& ring_ptr = point.mult.ring();
  const Semiring& ring = *ring_ptr;
  const std::uint64_t n = point.dim;

  ColumnView conv_mult(conv.mult);
  ColumnView point_comult(point.comult);

  // Copy both inputs, exchange the middle pair, multiply componentwise;
  // against multiplying first and copying the product.
  const bool unit_maps = conv_mult.unit_only() && point_comult.unit_only();
  EquationTrace square;
  {
    IndexVec base(1), step, lhs, rhs;
    for (std::uint64_t idx = 0; idx < n * n; ++idx) {
      if (unit_maps) {
        base[0] = idx;
        bool clean = apply_indices(conv_mult, base, 1, step) &&
                     apply_indices(point_comult, step, 1, lhs) &&
                     apply_indices(point_comult, base, n, step) &&
                     apply_indices(point_comult, step, 1, rhs);
        if (clean) {
          swap_middle_pair_indices(rhs, n, n);
          clean = apply_indices(conv_mult, rhs, n * n, step) &&
                  apply_indices(conv_mult, step, 1, rhs);
        }
        if (clean) {
          square.observe_indices(lhs, rhs, ring, idx, n, 2);
          continue;
        }
      }
      SparseVec v = sparse_basis_vector(idx, ring);
      SparseVec lhs_s = point_comult.apply(conv_mult.apply(v, 1, ring), 1, ring);
      SparseVec rhs_s = point_comult.apply(v, n, ring);
      rhs_s = point_comult.apply(rhs_s, 1, ring);
      rhs_s = swap_middle_pair(std::move(rhs_s), n, n, ring);
      rhs_s = conv_mult.apply(rhs_s, n * n, ring);
      rhs_s = conv_mult.apply(rhs_s, 1, ring);
      square.observe(lhs_s, rhs_s, ring, idx, n, 2);
    }
  }
  square.record(report, "point comult after conv mult satisfies the bialgebra square");

  Morphism copied = conv.unit.then(point.comult);
  Morphism doubled = conv.unit.tensor(conv.unit);
  add_compare(report, "conv unit is copied by point comult", copied, doubled);

  Morphism lhs_counit = conv.mult.then(point.counit);
  Morphism rhs_counit = point.counit.tensor(point.counit);
  add_compare(report, "point counit is multiplicative for conv mult",
              lhs_counit, rhs_counit);

  Morphism unit_scalar = Morphism::scalar(ring_ptr, ring.one());
  Morphism paired = conv.unit.then(point.counit);
  add_compare(report, "point counit of conv unit is one", paired, unit_scalar);
  return report;
}

CheckReport check_hopf(const FrobeniusAlgebra& point,
                       const FrobeniusAlgebra& conv,
                       const Morphism& antipode) {
  CheckReport report;
  report.subject = "hopf law";
  const Semiring& ring = *point.mult.ring();
  const std::uint64_t n = point.dim;

  ColumnView conv_mult(conv.mult);
  ColumnView point_comult(point.comult);
  ColumnView s(antipode);
  ColumnView trivial(point.counit.then(conv.unit));

  EquationTrace left, right;
  for (std::uint64_t g = 0; g < n; ++g) {
    SparseVec v = sparse_basis_vector(g, ring);
    const SparseVec& expected = trivial.column(g);
    SparseVec copied = point_comult.apply(v, 1, ring);
    SparseVec lhs = conv_mult.apply(s.apply(copied, n, ring), 1, ring);
    left.observe(lhs, expected, ring, g, n, 1);
    SparseVec rhs = conv_mult.apply(s.apply(copied, 1, ring), 1, ring);
    right.observe(rhs, expected, ring, g, n, 1);
  }
  left.record(report, "antipode is a left convolution inverse");
  right.record(report, "antipode is a right convolution inverse");
  return report;
}

CheckReport check_antipode(const InternalGroup& ig) {
  CheckReport report;
  report.subject = "antipode";
  const Semiring& ring = *ig.ring;
  const std::uint64_t n = ig.group.order;

  ColumnView s(ig.antipode);
  EquationTrace inversion;
  for (std::uint64_t g = 0; g < n; ++g) {
    SparseVec expected = sparse_basis_vector(
        ig.group.inv(static_cast<std::uint32_t>(g)), ring);
    inversion.observe(s.column(g), expected, ring, g, n, 1);
  }
  inversion.record(report, "antipode permutes basis states by inversion");

  Morphism twice = ig.antipode.then(ig.antipode);
  Morphism id = Morphism::identity(ig.antipode.ring(), {primal(ig.group.order)});
  report.add("antipode is an involution", twice.equal(id), twice.deviation(id));

  Morphism adj = ig.antipode.dagger();
  report.add("antipode is self-adjoint", ig.antipode.equal(adj),
             ig.antipode.deviation(adj));

  Morphism mapped_unit = ig.conv.unit.then(ig.antipode);
  report.add("antipode fixes the conv unit", mapped_unit.equal(ig.conv.unit),
             mapped_unit.deviation(ig.conv.unit));
  return report;
}

StateFamilyReport classify_state_family(const std::vector<Morphism>& states,
                                        const FrobeniusAlgebra& a) {
  const RingPtr& ring_ptr = a.mult.ring();
  const Semiring& ring = *ring_ptr;
  const std::uint64_t n = a.dim;
  const std::size_t k = states.size();

  StateFamilyReport out;
  out.checks.subject = "state family";
  for (const Morphism& st : states) {
    if (!st.is_state() || st.rows() != n)
      throw std::invalid_argument(
          "state family member does not live on the algebra's carrier");
    if (st.ring().get() != ring_ptr.get())
      throw std::invalid_argument("state family mixes semirings");
  }

  std::vector<SparseVec> support;
  support.reserve(k);
  for (const Morphism& st : states) support.push_back(state_support(st, ring));

  // Inner products <x_i|x_j>, conjugate-linear in the first slot.
  std::vector<std::vector<Scalar>> gram(k, std::vector<Scalar>(k, ring.zero()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Scalar acc = ring.zero();
      for (const auto& [r, v] : support[i]) {
        auto it = std::lower_bound(
            support[j].begin(), support[j].end(), r,
            [](const auto& term, std::uint64_t key) { return term.first < key; });
        if (it != support[j].end() && it->first == r)
          acc = ring.add(acc, ring.mul(ring.involution(v), it->second));
      }
      gram[i][j] = std::move(acc);
    }

  double ortho_dev = 0.0;
  bool orthogonal = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || ring.is_zero(gram[i][j])) continue;
      orthogonal = false;
      ortho_dev = std::max(ortho_dev, std::abs(scalar_to_complex(gram[i][j])));
    }
  out.orthogonal = orthogonal;
  out.checks.add("pairwise inner products vanish", orthogonal, ortho_dev);

  std::vector<std::optional<Scalar>> inverse_norms(k);
  bool normalisable = true;
  std::string failing_norm;
  for (std::size_t i = 0; i < k; ++i) {
    inverse_norms[i] = ring.try_invert(gram[i][i]);
    if (!inverse_norms[i] && normalisable) {
      normalisable = false;
      failing_norm = "norm " + ring.format(gram[i][i]) +
                     " has no inverse in " + ring.name();
    }
  }
  out.normalisable = normalisable;
  out.checks.add("norms are invertible", normalisable, 0.0, failing_norm);

  ColumnView mult(a.mult);
  ColumnView comult(a.comult);
  bool matchable = true;
  double match_dev = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      SparseVec prod =
          mult.apply(pair_support(support[i], support[j], n, ring), 1, ring);
      SparseVec expected =
          i == j ? scaled(support[i], gram[i][i], ring) : SparseVec{};
      if (!sparse_equal(prod, expected, ring)) {
        matchable = false;
        match_dev = std::max(match_dev, sparse_deviation(prod, expected));
      }
    }
  out.matchable = matchable;
  out.checks.add("matching family for the multiplication", matchable,
                 match_dev);

  ColumnView counit(a.counit);
  bool classical = true;
  double classical_dev = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    SparseVec copied = comult.apply(support[i], 1, ring);
    SparseVec squared = pair_support(support[i], support[i], n, ring);
    if (!sparse_equal(copied, squared, ring)) {
      classical = false;
      classical_dev = std::max(classical_dev, sparse_deviation(copied, squared));
    }
    Scalar weight = ring.zero();
    for (const auto& [r, v] : support[i]) {
      // counit has a single row; its column r holds the weight of basis r.
      const SparseVec& col = counit.column(r);
      if (!col.empty()) weight = ring.add(weight, ring.mul(v, col[0].second));
    }
    if (!ring.equal(weight, ring.one())) {
      classical = false;
      classical_dev = std::max(
          classical_dev,
          std::abs(scalar_to_complex(weight) - scalar_to_complex(ring.one())));
    }
  }
  out.classical = classical;
  out.checks.add("members are classical states", classical, classical_dev);

  auto append_note = [&out](const std::string& text) {
    if (!out.note.empty()) out.note += "; ";
    out.note += text;
  };

  if (!normalisable) {
    append_note("normalisation unavailable in this semiring");
  } else {
    Morphism resolution = Morphism::zero(ring_ptr, {primal(a.dim)}, {primal(a.dim)});
    Morphism partition = Morphism::zero(ring_ptr, {primal(a.dim)}, {});
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar& w = *inverse_norms[i];
      for (const auto& [r, vr] : support[i]) {
        for (const auto& [c, vc] : support[i])
          resolution.set(
              r, c,
              ring.add(resolution.at(r, c),
                       ring.mul(w, ring.mul(vr, ring.involution(vc)))));
        partition.set(0, r,
                      ring.add(partition.at(0, r),
                               ring.mul(w, ring.involution(vr))));
      }
    }
    Morphism id = Morphism::identity(ring_ptr, {primal(a.dim)});
    out.resolution_of_identity = resolution.equal(id);
    out.checks.add("resolution of the identity", *out.resolution_of_identity,
                   (*out.resolution_of_identity && ring.is_exact())
                       ? 0.0
                       : resolution.deviation(id));
    out.partition_of_counit = partition.equal(a.counit);
    out.checks.add("partition of the counit", *out.partition_of_counit,
                   (*out.partition_of_counit && ring.is_exact())
                       ? 0.0
                       : partition.deviation(a.counit));
  }

  if (k != n) {
    out.basis = false;
    out.checks.add("basis against the point deltas", false, 0.0,
                   "family size " + std::to_string(k) +
                       " differs from carrier dimension " + std::to_string(n));
    return out;
  }

  if (out.orthogonal && out.normalisable) {
    // For orthogonal normalisable families, completeness on the delta basis
    // is exactly the resolution acting as the identity.
    out.basis = out.resolution_of_identity;
    out.checks.add("basis against the point deltas", *out.basis, 0.0,
                   "via orthogonal resolution");
    return out;
  }

  std::optional<Scalar> minus_one = ring.root_of_unity(2);
  if (!minus_one) {
    // Without subtraction the only invertible changes of basis are
    // permutations with unit entries.
    std::vector<bool> hit(n, false);
    bool permutation = true;
    for (const SparseVec& sv : support) {
      if (sv.size() != 1 || !ring.is_one(sv[0].second) || hit[sv[0].first]) {
        permutation = false;
        break;
      }
      hit[sv[0].first] = true;
    }
    out.basis = permutation;
    out.checks.add("basis against the point deltas", permutation, 0.0,
                   "via permutation structure");
    return out;
  }

  if (n > 8) {
    // The determinant route is factorial; past desk scale the question is
    // left open rather than answered wrongly.
    append_note("basis undecided at this carrier size");
    return out;
  }

  // Leibniz determinant of the change-of-basis matrix; small carriers only.
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Scalar det = ring.zero();
  do {
    Scalar term = ring.one();
    for (std::uint64_t col = 0; col < n; ++col)
      term = ring.mul(term, states[col].at(perm[col], 0));
    if (ring.is_zero(term)) continue;
    std::uint32_t inversions = 0;
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = x + 1; y < n; ++y)
        if (perm[x] > perm[y]) ++inversions;
    if (inversions % 2) term = ring.mul(term, *minus_one);
    det = ring.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (ring.is_zero(det)) {
    out.basis = false;
    out.checks.add("basis against the point deltas", false, 0.0,
                   "change-of-basis determinant is zero");
  } else if (ring.try_invert(det)) {
    out.basis = true;
    out.checks.add("basis against the point deltas", true, 0.0,
                   "via change-of-basis determinant");
  } else {
    append_note("cannot decide invertibility of the change-of-basis determinant");
  }
  return out;
}

}  // namespace hopfft
