#include "hopfft/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfft {

std::uint64_t profile_dim(const WireProfile& p) {
  std::uint64_t d = 1;
  for (const Wire& w : p) {
    if (w.dim == 0) throw std::invalid_argument("wire dimension must be positive");
    d *= w.dim;
  }
  return d;
}

bool same_dims(const WireProfile& a, const WireProfile& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].dim != b[i].dim) return false;
  return true;
}

std::string profile_to_string(const WireProfile& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i].dim << (p[i].tag == WireTag::dual ? "*" : "");
  }
  os << "]";
  return os.str();
}

namespace {

void require_same_ring(const Morphism& a, const Morphism& b,
                       const char* operation) {
  if (a.ring()->name() != b.ring()->name())
    throw std::invalid_argument(std::string("semiring mismatch in ") + operation +
                                ": " + a.ring()->name() + " vs " +
                                b.ring()->name());
}

}  // namespace

Morphism::Morphism(RingPtr ring, WireProfile domain, WireProfile codomain)
    : ring_(std::move(ring)),
      dom_(std::move(domain)),
      cod_(std::move(codomain)),
      rows_(profile_dim(cod_)),
      cols_(profile_dim(dom_)),
      entries_(rows_ * cols_, ring_->zero()) {}

Morphism Morphism::identity(RingPtr ring, WireProfile profile) {
  Morphism m(ring, profile, profile);
  for (std::uint64_t i = 0; i < m.rows_; ++i) m.set(i, i, ring->one());
  return m;
}

Morphism Morphism::zero(RingPtr ring, WireProfile domain, WireProfile codomain) {
  return Morphism(std::move(ring), std::move(domain), std::move(codomain));
}

Morphism Morphism::cup(RingPtr ring, std::uint32_t d) {
  Morphism m(ring, {}, {primal(d), dual(d)});
  for (std::uint64_t i = 0; i < d; ++i) m.set(i * d + i, 0, ring->one());
  return m;
}

Morphism Morphism::cap(RingPtr ring, std::uint32_t d) {
  return cup(std::move(ring), d).dagger();
}

Morphism Morphism::swap_wires(RingPtr ring, Wire first, Wire second) {
  Morphism m(ring, {first, second}, {second, first});
  for (std::uint64_t i = 0; i < first.dim; ++i)
    for (std::uint64_t j = 0; j < second.dim; ++j)
      m.set(j * first.dim + i, i * second.dim + j, ring->one());
  return m;
}

Morphism Morphism::scalar(RingPtr ring, Scalar value) {
  Morphism m(std::move(ring), {}, {});
  m.set(0, 0, std::move(value));
  return m;
}

const Scalar& Morphism::at(std::uint64_t row, std::uint64_t col) const {
  return entries_[row * cols_ + col];
}

void Morphism::set(std::uint64_t row, std::uint64_t col, Scalar value) {
  entries_[row * cols_ + col] = std::move(value);
}

Morphism Morphism::then(const Morphism& next) const {
  require_same_ring(*this, next, "composition");
  if (!same_dims(cod_, next.dom_))
    throw std::invalid_argument("profile mismatch in composition: " +
                                profile_to_string(cod_) + " then " +
                                profile_to_string(next.dom_));
  const Semiring& ring = *ring_;
  Morphism out(ring_, dom_, next.cod_);
  for (std::uint64_t j = 0; j < cols_; ++j) {
    for (std::uint64_t k = 0; k < rows_; ++k) {
      const Scalar& f = at(k, j);
      if (ring.is_zero(f)) continue;
      for (std::uint64_t i = 0; i < next.rows_; ++i) {
        const Scalar& g = next.at(i, k);
        if (ring.is_zero(g)) continue;
        out.set(i, j, ring.add(out.at(i, j), ring.mul(g, f)));
      }
    }
  }
  return out;
}

Morphism Morphism::tensor(const Morphism& other) const {
  require_same_ring(*this, other, "tensor product");
  WireProfile dom = dom_;
  dom.insert(dom.end(), other.dom_.begin(), other.dom_.end());
  WireProfile cod = cod_;
  cod.insert(cod.end(), other.cod_.begin(), other.cod_.end());
  const Semiring& ring = *ring_;
  Morphism out(ring_, std::move(dom), std::move(cod));
  for (std::uint64_t r1 = 0; r1 < rows_; ++r1)
    for (std::uint64_t c1 = 0; c1 < cols_; ++c1) {
      const Scalar& a = at(r1, c1);
      if (ring.is_zero(a)) continue;
      for (std::uint64_t r2 = 0; r2 < other.rows_; ++r2)
        for (std::uint64_t c2 = 0; c2 < other.cols_; ++c2) {
          const Scalar& b = other.at(r2, c2);
          if (ring.is_zero(b)) continue;
          out.set(r1 * other.rows_ + r2, c1 * other.cols_ + c2, ring.mul(a, b));
        }
    }
  return out;
}

Morphism Morphism::dagger() const {
  Morphism out(ring_, cod_, dom_);
  for (std::uint64_t r = 0; r < rows_; ++r)
    for (std::uint64_t c = 0; c < cols_; ++c)
      out.set(c, r, ring_->involution(at(r, c)));
  return out;
}

Morphism Morphism::reshaped(WireProfile domain, WireProfile codomain) const {
  if (profile_dim(domain) != cols_ || profile_dim(codomain) != rows_)
    throw std::invalid_argument("reshape must preserve total dimensions");
  Morphism out(ring_, std::move(domain), std::move(codomain));
  out.entries_ = entries_;
  return out;
}

bool Morphism::equal(const Morphism& other,
                     std::optional<double> tolerance) const {
  require_same_ring(*this, other, "comparison");
  if (!same_dims(dom_, other.dom_) || !same_dims(cod_, other.cod_))
    throw std::invalid_argument(
        "profile mismatch in comparison: " + profile_to_string(dom_) + " -> " +
        profile_to_string(cod_) + " vs " + profile_to_string(other.dom_) +
        " -> " + profile_to_string(other.cod_));
  if (ring_->is_exact() && !tolerance) {
    return entries_ == other.entries_;
  }
  double tol = tolerance.value_or(ring_->tolerance());
  double scale = 1.0;
  for (const Scalar& s : entries_)
    scale = std::max(scale, std::abs(scalar_to_complex(s)));
  for (const Scalar& s : other.entries_)
    scale = std::max(scale, std::abs(scalar_to_complex(s)));
  return deviation(other) <= tol * scale;
}

double Morphism::deviation(const Morphism& other) const {
  double dev = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    dev = std::max(dev, std::abs(scalar_to_complex(entries_[i]) -
                                 scalar_to_complex(other.entries_[i])));
  return dev;
}

const Scalar& Morphism::scalar_value() const {
  if (rows_ != 1 || cols_ != 1)
    throw std::invalid_argument("morphism is not scalar shaped");
  return entries_[0];
}

Morphism compose(const Morphism& first, const Morphism& second) {
  return first.then(second);
}

Morphism tensor_product(const Morphism& a, const Morphism& b) {
  return a.tensor(b);
}

SparseVec sparse_basis_vector(std::uint64_t index, const Semiring& ring) {
  return SparseVec{{index, ring.one()}};
}

void sparse_normalize(SparseVec& v, const Semiring& ring) {
  if (v.empty()) return;
  bool ascending = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1].first >= v[i].first) {
      ascending = false;
      break;
    }
  }
  if (ascending) {
    // Already sorted with distinct indices; only zero entries need dropping.
    v.erase(std::remove_if(
                v.begin(), v.end(),
                [&ring](const auto& e) { return ring.is_zero(e.second); }),
            v.end());
    return;
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  merged.reserve(v.size());
  for (auto& [idx, val] : v) {
    if (!merged.empty() && merged.back().first == idx) {
      merged.back().second = ring.add(merged.back().second, val);
    } else {
      merged.emplace_back(idx, std::move(val));
    }
  }
  merged.erase(std::remove_if(
                   merged.begin(), merged.end(),
                   [&ring](const auto& e) { return ring.is_zero(e.second); }),
               merged.end());
  v = std::move(merged);
}

bool sparse_equal(const SparseVec& a, const SparseVec& b, const Semiring& ring) {
  if (ring.is_exact()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].first != b[i].first || !ring.equal(a[i].second, b[i].second))
        return false;
    return true;
  }
  // Merge walk with tolerance; entries missing on one side compare to zero.
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (!ring.is_zero(a[i].second)) return false;
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (!ring.is_zero(b[j].second)) return false;
      ++j;
    } else {
      if (!ring.equal(a[i].second, b[j].second)) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

double sparse_deviation(const SparseVec& a, const SparseVec& b) {
  double dev = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      dev = std::max(dev, std::abs(scalar_to_complex(a[i].second)));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      dev = std::max(dev, std::abs(scalar_to_complex(b[j].second)));
      ++j;
    } else {
      dev = std::max(dev, std::abs(scalar_to_complex(a[i].second) -
                                   scalar_to_complex(b[j].second)));
      ++i;
      ++j;
    }
  }
  return dev;
}

ColumnView::ColumnView(const Morphism& m)
    : rows_(m.rows()), cols_(m.cols()), columns_(m.cols()), unit_(m.cols()) {
  const Semiring& ring = *m.ring();
  const Scalar one = ring.one();
  for (std::uint64_t c = 0; c < cols_; ++c) {
    for (std::uint64_t r = 0; r < rows_; ++r) {
      const Scalar& s = m.at(r, c);
      if (ring.is_zero(s)) continue;
      columns_[c].emplace_back(r, s);
      const bool is_unit = ring.equal(s, one);
      unit_[c].push_back(is_unit ? 1 : 0);
      unit_only_ = unit_only_ && is_unit;
    }
  }
}

SparseVec ColumnView::apply(const SparseVec& v, std::uint64_t right_dim,
                            const Semiring& ring) const {
  SparseVec out;
  for (const auto& [idx, val] : v) {
    std::uint64_t block = cols_ * right_dim;
    std::uint64_t a = idx / block;
    std::uint64_t rem = idx % block;
    std::uint64_t mid = rem / right_dim;
    std::uint64_t b = rem % right_dim;
    const SparseVec& col = columns_[mid];
    const std::vector<char>& units = unit_[mid];
    for (std::size_t t = 0; t < col.size(); ++t) {
      const std::uint64_t pos = (a * cod_dim() + col[t].first) * right_dim + b;
      if (units[t])
        out.emplace_back(pos, val);
      else
        out.emplace_back(pos, ring.mul(col[t].second, val));
    }
  }
  sparse_normalize(out, ring);
  return out;
}

}  // namespace hopfft
