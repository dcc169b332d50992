#include "hopfft/rel_model.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "hopfft/abelian_ft.hpp"
#include "hopfft/semiring.hpp"

namespace hopfft {

namespace {

constexpr std::uint32_t kNone = AbelianGroupoid::undefined;

// The state of a subset of the carrier: one top entry per member.
Morphism subset_state(const RingPtr& ring, std::uint32_t n,
                      const std::vector<std::uint32_t>& elements) {
  Morphism st = Morphism::zero(ring, {}, {primal(n)});
  for (std::uint32_t e : elements) st.set(e, 0, ring->one());
  return st;
}

// The group carried by one block, on positions into the block's element list.
FiniteGroup block_group(const AbelianGroupoid& gpd, std::size_t b) {
  const std::vector<std::uint32_t>& els = gpd.blocks[b];
  const std::uint32_t k = static_cast<std::uint32_t>(els.size());
  std::vector<std::uint32_t> position(gpd.carrier, kNone);
  for (std::uint32_t i = 0; i < k; ++i) position[els[i]] = i;
  std::vector<std::vector<std::uint32_t>> table(k,
                                                std::vector<std::uint32_t>(k));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t c = gpd.mul(els[i], els[j]);
      if (c == kNone || position[c] == kNone)
        throw std::invalid_argument(
            "block is not closed under the partial product");
      table[i][j] = position[c];
    }
  return group_from_cayley(table);
}

// Whether every pair of a z-block and an x-block meets in exactly one
// element, which also forces |z-blocks| * |x-blocks| to equal the carrier.
bool singleton_intersections(const AbelianGroupoid& z,
                             const AbelianGroupoid& x) {
  const std::uint32_t n = z.carrier;
  const std::size_t zk = z.blocks.size();
  const std::size_t xk = x.blocks.size();
  if (zk * xk != n) return false;
  std::vector<char> seen(zk * xk, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::size_t cell = z.block_of[a] * xk + x.block_of[a];
    if (seen[cell]) return false;
    seen[cell] = 1;
  }
  return true;
}

// Whether src's partial product reads as one single table on dst's block
// coordinates, the same for every block of src. On success the law lands in
// *out (a coords-by-coords table, row-major).
bool transported_law(const AbelianGroupoid& src, const AbelianGroupoid& dst,
                     std::vector<std::uint32_t>* out) {
  const std::uint32_t n = src.carrier;
  const std::size_t coords = dst.blocks.size();
  std::vector<std::uint32_t> law(coords * coords, kNone);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t c = src.mul(a, b);
      if (c == kNone) continue;
      const std::size_t slot = dst.block_of[a] * coords + dst.block_of[b];
      const std::uint32_t value = dst.block_of[c];
      if (law[slot] == kNone)
        law[slot] = value;
      else if (law[slot] != value)
        return false;
    }
  for (std::uint32_t v : law)
    if (v == kNone) return false;
  if (out) *out = std::move(law);
  return true;
}

// The full combinatorial characterization: singleton intersections plus one
// transported law per side.
bool grid_conditions(const AbelianGroupoid& z, const AbelianGroupoid& x,
                     std::vector<std::uint32_t>* z_on_x,
                     std::vector<std::uint32_t>* x_on_z) {
  return singleton_intersections(z, x) && transported_law(z, x, z_on_x) &&
         transported_law(x, z, x_on_z);
}

// ---------------------------------------------------------------------------
// Fast enumeration path. Groupoids on at most 6 elements pack into flat
// byte tables, and the strong-complementarity equations reduce to bit tests,
// so scanning millions of ordered pairs stays cheap.

constexpr std::uint8_t kUndef8 = 0xff;

struct CompactGroupoid {
  std::uint8_t n = 0;
  std::uint8_t block_count = 0;
  std::uint8_t unit_mask = 0;
  std::array<std::uint8_t, 36> table{};
  std::array<std::uint8_t, 6> block_of{};
  // Decompositions of each element under the partial product: the pair list
  // feeds the bialgebra square, the bitmask (bit p * n + q) its left side.
  std::array<std::uint64_t, 6> dec_mask{};
  std::array<std::array<std::pair<std::uint8_t, std::uint8_t>, 6>, 6> dec{};
  std::array<std::uint8_t, 6> dec_len{};

  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return table[a * n + b];
  }
};

// All distinct abelian group tables on k labeled points, sorted bytewise.
const std::vector<std::vector<std::uint8_t>>& abelian_tables(std::uint32_t k) {
  if (k == 0 || k > 6)
    throw std::invalid_argument("abelian tables are cached for orders 1 to 6");
  static std::array<std::vector<std::vector<std::uint8_t>>, 7> cache;
  std::vector<std::vector<std::uint8_t>>& out = cache[k];
  if (!out.empty()) return out;

  std::vector<std::vector<std::uint32_t>> kinds;
  switch (k) {
    case 1: kinds = {{}}; break;
    case 2: kinds = {{2}}; break;
    case 3: kinds = {{3}}; break;
    case 4: kinds = {{4}, {2, 2}}; break;
    case 5: kinds = {{5}}; break;
    default: kinds = {{6}}; break;
  }

  std::set<std::vector<std::uint8_t>> dedup;
  std::vector<std::uint8_t> relabel(k);
  for (const auto& kind : kinds) {
    const FiniteGroup g = group_from_cyclics(kind);
    for (std::uint32_t i = 0; i < k; ++i) relabel[i] = static_cast<std::uint8_t>(i);
    do {
      std::array<std::uint8_t, 6> inverse{};
      for (std::uint32_t i = 0; i < k; ++i) inverse[relabel[i]] = static_cast<std::uint8_t>(i);
      std::vector<std::uint8_t> t(k * k);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          t[i * k + j] = inverse[g.mul(relabel[i], relabel[j])];
      dedup.insert(std::move(t));
    } while (std::next_permutation(relabel.begin(), relabel.end()));
  }
  out.assign(dedup.begin(), dedup.end());
  return out;
}

void finish_compact(CompactGroupoid& g) {
  const std::uint8_t n = g.n;
  for (std::uint8_t c = 0; c < n; ++c) {
    g.dec_mask[c] = 0;
    g.dec_len[c] = 0;
  }
  for (std::uint8_t a = 0; a < n; ++a)
    for (std::uint8_t b = 0; b < n; ++b) {
      const std::uint8_t c = g.mul(a, b);
      if (c == kUndef8) continue;
      g.dec_mask[c] |= std::uint64_t{1} << (a * n + b);
      g.dec[c][g.dec_len[c]++] = {a, b};
    }
}

std::vector<CompactGroupoid> enumerate_compact_groupoids(std::uint32_t n) {
  // Set partitions in restricted-growth order; blocks come out indexed by
  // first occurrence, which is also ascending minimal element.
  std::vector<std::array<std::uint8_t, 6>> partitions;
  std::array<std::uint8_t, 6> rgs{};
  auto recurse = [&](auto&& self, std::uint32_t i, std::uint8_t used) -> void {
    if (i == n) {
      partitions.push_back(rgs);
      return;
    }
    for (std::uint8_t v = 0; v <= used; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max<std::uint8_t>(used, v + 1));
    }
  };
  recurse(recurse, 1, 1);  // element 0 always starts block 0

  std::vector<CompactGroupoid> out;
  for (const auto& part : partitions) {
    std::uint8_t block_count = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      block_count = std::max<std::uint8_t>(block_count, part[i] + 1);
    std::vector<std::vector<std::uint8_t>> members(block_count);
    for (std::uint32_t i = 0; i < n; ++i)
      members[part[i]].push_back(static_cast<std::uint8_t>(i));

    CompactGroupoid base;
    base.n = static_cast<std::uint8_t>(n);
    base.block_count = block_count;
    base.table.fill(kUndef8);
    for (std::uint32_t i = 0; i < n; ++i) base.block_of[i] = part[i];

    // One abelian table per block, all combinations.
    auto fill = [&](auto&& self, std::uint32_t b, CompactGroupoid cur) -> void {
      if (b == block_count) {
        finish_compact(cur);
        out.push_back(cur);
        return;
      }
      const auto& els = members[b];
      const std::uint32_t k = static_cast<std::uint32_t>(els.size());
      for (const auto& t : abelian_tables(k)) {
        CompactGroupoid next = cur;
        for (std::uint32_t i = 0; i < k; ++i)
          for (std::uint32_t j = 0; j < k; ++j)
            next.table[els[i] * n + els[j]] = els[t[i * k + j]];
        for (std::uint32_t i = 0; i < k; ++i) {
          bool is_identity = true;
          for (std::uint32_t j = 0; j < k; ++j)
            if (t[i * k + j] != j) {
              is_identity = false;
              break;
            }
          if (is_identity) {
            next.unit_mask |= static_cast<std::uint8_t>(1u << els[i]);
            break;
          }
        }
        self(self, b + 1, std::move(next));
      }
    };
    fill(fill, 0, base);
  }
  return out;
}

// Direct boolean evaluation of the strong-complementarity equations, with z
// as the point structure and x as the conv structure. Over the booleans each
// unit coherence law coincides with its converse bialgebra law, so the
// distinct conditions are: the two unit sets meet, both unit-copying laws,
// and the bialgebra square.
bool evaluated_strongly_complementary(const CompactGroupoid& z,
                                      const CompactGroupoid& x) {
  const std::uint8_t n = z.n;
  if ((z.unit_mask & x.unit_mask) == 0) return false;

  for (std::uint8_t a = 0; a < n; ++a)
    for (std::uint8_t b = 0; b < n; ++b) {
      const std::uint8_t zc = z.mul(a, b);
      const bool copy_x = zc != kUndef8 && ((x.unit_mask >> zc) & 1);
      const bool both_x = ((x.unit_mask >> a) & 1) && ((x.unit_mask >> b) & 1);
      if (copy_x != both_x) return false;
      const std::uint8_t xc = x.mul(a, b);
      const bool copy_z = xc != kUndef8 && ((z.unit_mask >> xc) & 1);
      const bool both_z = ((z.unit_mask >> a) & 1) && ((z.unit_mask >> b) & 1);
      if (copy_z != both_z) return false;
    }

  for (std::uint8_t a = 0; a < n; ++a)
    for (std::uint8_t b = 0; b < n; ++b) {
      const std::uint8_t c = x.mul(a, b);
      const std::uint64_t lhs = c == kUndef8 ? 0 : z.dec_mask[c];
      std::uint64_t rhs = 0;
      for (std::uint8_t i = 0; i < z.dec_len[a]; ++i)
        for (std::uint8_t j = 0; j < z.dec_len[b]; ++j) {
          const std::uint8_t c1 = x.mul(z.dec[a][i].first, z.dec[b][j].first);
          if (c1 == kUndef8) continue;
          const std::uint8_t c2 = x.mul(z.dec[a][i].second, z.dec[b][j].second);
          if (c2 == kUndef8) continue;
          rhs |= std::uint64_t{1} << (c1 * n + c2);
        }
      if (lhs != rhs) return false;
    }
  return true;
}

bool predicted_strongly_complementary(const CompactGroupoid& z,
                                      const CompactGroupoid& x) {
  const std::uint8_t n = z.n;
  if (static_cast<std::uint32_t>(z.block_count) * x.block_count != n)
    return false;

  std::uint64_t seen = 0;
  for (std::uint8_t a = 0; a < n; ++a) {
    const std::uint32_t cell = z.block_of[a] * x.block_count + x.block_of[a];
    if ((seen >> cell) & 1) return false;
    seen |= std::uint64_t{1} << cell;
  }

  auto aligned = [n](const CompactGroupoid& src, const CompactGroupoid& dst,
                     std::uint8_t coords) {
    std::array<std::uint8_t, 36> law{};
    law.fill(kUndef8);
    for (std::uint8_t a = 0; a < n; ++a)
      for (std::uint8_t b = 0; b < n; ++b) {
        const std::uint8_t c = src.mul(a, b);
        if (c == kUndef8) continue;
        const std::uint32_t slot = dst.block_of[a] * coords + dst.block_of[b];
        if (law[slot] == kUndef8)
          law[slot] = dst.block_of[c];
        else if (law[slot] != dst.block_of[c])
          return false;
      }
    return true;
  };
  return aligned(z, x, x.block_count) && aligned(x, z, z.block_count);
}

AbelianGroupoid compact_to_groupoid(const CompactGroupoid& c) {
  std::vector<std::vector<std::uint32_t>> members(c.block_count);
  for (std::uint8_t a = 0; a < c.n; ++a) members[c.block_of[a]].push_back(a);

  std::vector<std::pair<std::vector<std::uint32_t>, FiniteGroup>> parts;
  parts.reserve(c.block_count);
  for (const auto& els : members) {
    const std::uint32_t k = static_cast<std::uint32_t>(els.size());
    std::vector<std::uint32_t> position(c.n, kNone);
    for (std::uint32_t i = 0; i < k; ++i) position[els[i]] = i;
    std::vector<std::vector<std::uint32_t>> table(k,
                                                  std::vector<std::uint32_t>(k));
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        table[i][j] = position[c.mul(static_cast<std::uint8_t>(els[i]),
                                     static_cast<std::uint8_t>(els[j]))];
    parts.emplace_back(els, group_from_cayley(table));
  }
  return make_abelian_groupoid(c.n, parts);
}

}  // namespace

AbelianGroupoid make_abelian_groupoid(
    std::uint32_t carrier,
    const std::vector<std::pair<std::vector<std::uint32_t>, FiniteGroup>>&
        parts) {
  if (carrier == 0)
    throw std::invalid_argument("a groupoid needs at least one element");

  AbelianGroupoid gpd;
  gpd.carrier = carrier;
  gpd.block_of.assign(carrier, kNone);
  gpd.table.assign(static_cast<std::size_t>(carrier) * carrier, kNone);

  std::vector<std::size_t> order(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&parts](std::size_t a, std::size_t b) {
    const auto& ea = parts[a].first;
    const auto& eb = parts[b].first;
    return *std::min_element(ea.begin(), ea.end()) <
           *std::min_element(eb.begin(), eb.end());
  });

  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& [elements, group] = parts[order[rank]];
    if (elements.empty())
      throw std::invalid_argument("groupoid blocks cannot be empty");
    if (group.order != elements.size())
      throw std::invalid_argument(
          "block group order does not match the element count");
    if (!group.abelian)
      throw std::invalid_argument("groupoid blocks must carry abelian groups");
    for (std::uint32_t e : elements) {
      if (e >= carrier)
        throw std::invalid_argument("block element " + std::to_string(e) +
                                    " is outside the carrier");
      if (gpd.block_of[e] != kNone)
        throw std::invalid_argument("groupoid blocks overlap at element " +
                                    std::to_string(e));
      gpd.block_of[e] = static_cast<std::uint32_t>(rank);
    }
    const std::uint32_t k = group.order;
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        gpd.table[static_cast<std::size_t>(elements[i]) * carrier +
                  elements[j]] = elements[group.mul(i, j)];
    std::vector<std::uint32_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    gpd.blocks.push_back(std::move(sorted));
    gpd.identity.push_back(elements[group.unit]);
  }

  for (std::uint32_t e = 0; e < carrier; ++e)
    if (gpd.block_of[e] == kNone)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is not covered by any block");
  return gpd;
}

AbelianGroupoid discrete_groupoid(std::uint32_t carrier) {
  std::vector<std::pair<std::vector<std::uint32_t>, FiniteGroup>> parts;
  const FiniteGroup trivial = group_from_cyclics({});
  for (std::uint32_t e = 0; e < carrier; ++e)
    parts.push_back({{e}, trivial});
  return make_abelian_groupoid(carrier, parts);
}

AbelianGroupoid group_groupoid(const FiniteGroup& g) {
  std::vector<std::uint32_t> all(g.order);
  for (std::uint32_t e = 0; e < g.order; ++e) all[e] = e;
  return make_abelian_groupoid(g.order, {{all, g}});
}

FrobeniusAlgebra groupoid_to_structure(const AbelianGroupoid& gpd) {
  RingPtr ring = semiring_by_name("bool");
  const Scalar top = ring->one();
  const std::uint32_t n = gpd.carrier;

  FrobeniusAlgebra f(ring, n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t c = gpd.mul(a, b);
      if (c == kNone) continue;
      f.mult.set(c, static_cast<std::uint64_t>(a) * n + b, top);
      f.comult.set(static_cast<std::uint64_t>(a) * n + b, c, top);
    }
  for (std::uint32_t e : gpd.identity) {
    f.unit.set(e, 0, top);
    f.counit.set(0, e, top);
  }
  f.is_commutative = true;
  // Boolean addition is idempotent, so the loop collapses the |block| many
  // decompositions of each element back onto it and the structure is special.
  f.is_special = true;
  f.norm = top;
  return f;
}

AbelianGroupoid structure_to_groupoid(const FrobeniusAlgebra& a) {
  const RingPtr& ring = a.mult.ring();
  if (ring->name() != "bool")
    throw std::invalid_argument(
        "groupoid recovery works over the boolean semiring only");
  const std::uint32_t n = a.dim;
  if (a.mult.rows() != n || a.mult.cols() != static_cast<std::uint64_t>(n) * n ||
      a.unit.rows() != n || a.comult.cols() != n || a.counit.cols() != n)
    throw std::invalid_argument("structure maps have inconsistent shapes");

  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n, kNone);
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q) {
      const std::uint64_t col = static_cast<std::uint64_t>(p) * n + q;
      for (std::uint32_t r = 0; r < n; ++r) {
        if (ring->is_zero(a.mult.at(r, col))) continue;
        if (table[col] != kNone)
          throw std::invalid_argument(
              "multiplication relates a pair to several elements, so this is "
              "not a groupoid structure");
        table[col] = r;
      }
    }

  // Blocks are the connected components of the definedness pattern.
  std::vector<std::uint32_t> root(n);
  for (std::uint32_t e = 0; e < n; ++e) root[e] = e;
  auto find = [&root](std::uint32_t e) {
    while (root[e] != e) e = root[e] = root[root[e]];
    return e;
  };
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q)
      if (table[static_cast<std::size_t>(p) * n + q] != kNone)
        root[find(p)] = find(q);

  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> block_index(n, kNone);
  for (std::uint32_t e = 0; e < n; ++e) {
    const std::uint32_t r = find(e);
    if (block_index[r] == kNone) {
      block_index[r] = static_cast<std::uint32_t>(members.size());
      members.emplace_back();
    }
    members[block_index[r]].push_back(e);
  }

  std::vector<std::pair<std::vector<std::uint32_t>, FiniteGroup>> parts;
  for (const auto& els : members) {
    const std::uint32_t k = static_cast<std::uint32_t>(els.size());
    std::vector<std::uint32_t> position(n, kNone);
    for (std::uint32_t i = 0; i < k; ++i) position[els[i]] = i;
    std::vector<std::vector<std::uint32_t>> block_table(
        k, std::vector<std::uint32_t>(k));
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint32_t c =
            table[static_cast<std::size_t>(els[i]) * n + els[j]];
        if (c == kNone || position[c] == kNone)
          throw std::invalid_argument(
              "the definedness pattern is not a disjoint union of closed "
              "blocks");
        block_table[i][j] = position[c];
      }
    FiniteGroup g = [&] {
      try {
        return group_from_cayley(block_table);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(
            std::string("a block fails to be a group: ") + e.what());
      }
    }();
    if (!g.abelian)
      throw std::invalid_argument("a block carries a non-abelian group");
    parts.emplace_back(els, std::move(g));
  }

  AbelianGroupoid gpd = make_abelian_groupoid(n, parts);
  FrobeniusAlgebra rebuilt = groupoid_to_structure(gpd);
  if (!rebuilt.mult.equal(a.mult) || !rebuilt.unit.equal(a.unit) ||
      !rebuilt.comult.equal(a.comult) || !rebuilt.counit.equal(a.counit))
    throw std::invalid_argument(
        "the boolean structure does not round trip through its groupoid");
  return gpd;
}

CheckReport check_discrete_resolution(const AbelianGroupoid& gpd) {
  CheckReport report;
  report.subject = "groupoid resolution";

  const FrobeniusAlgebra structure = groupoid_to_structure(gpd);
  std::vector<Morphism> states;
  states.reserve(gpd.blocks.size());
  for (const auto& els : gpd.blocks)
    states.push_back(subset_state(structure.mult.ring(), gpd.carrier, els));

  StateFamilyReport family = classify_state_family(states, structure);
  report.merge(family.checks, "blocks: ");

  bool all_singletons = true;
  for (const auto& els : gpd.blocks)
    if (els.size() != 1) all_singletons = false;
  const bool resolution = family.resolution_of_identity.value_or(false);
  report.add("resolution holds exactly for singleton blocks",
             resolution == all_singletons, 0.0,
             all_singletons ? "all blocks are singletons"
                            : "some block has several elements");
  return report;
}

CheckReport check_strong_complementarity_classification(
    const AbelianGroupoid& z, const AbelianGroupoid& x) {
  if (z.carrier != x.carrier)
    throw std::invalid_argument("the two groupoids must share a carrier");

  CheckReport report;
  report.subject = "strong complementarity classification";

  const FrobeniusAlgebra point = groupoid_to_structure(z);
  const FrobeniusAlgebra conv = groupoid_to_structure(x);
  const bool coherent = check_coherence(point, conv).all_passed();
  const bool bialgebra = check_bialgebra(point, conv).all_passed();
  const bool direct = coherent && bialgebra;
  report.add("direct evaluation: coherence laws", coherent);
  report.add("direct evaluation: bialgebra laws", bialgebra);

  auto pairwise_isomorphic = [](const AbelianGroupoid& gpd) {
    if (gpd.blocks.size() <= 1) return true;
    const FiniteGroup first = block_group(gpd, 0);
    for (std::size_t b = 1; b < gpd.blocks.size(); ++b)
      if (!find_isomorphism(first, block_group(gpd, b))) return false;
    return true;
  };
  const bool iso_z = pairwise_isomorphic(z);
  const bool iso_x = pairwise_isomorphic(x);
  report.add("blocks of the first groupoid are pairwise isomorphic", iso_z);
  report.add("blocks of the second groupoid are pairwise isomorphic", iso_x);

  const bool singletons = singleton_intersections(z, x);
  report.add("every block intersection is a singleton", singletons);
  const bool transport =
      transported_law(z, x, nullptr) && transported_law(x, z, nullptr);
  report.add("block laws transport to one table per side", transport);

  const bool predicted = singletons && transport;
  report.add("combinatorial conditions predict strong complementarity",
             predicted);
  report.add("the two verdicts agree", direct == predicted);
  return report;
}

RelInternalGroup make_rel_internal_group(const AbelianGroupoid& z,
                                         const AbelianGroupoid& x) {
  if (z.carrier != x.carrier)
    throw std::invalid_argument("the two groupoids must share a carrier");
  std::vector<std::uint32_t> z_on_x, x_on_z;
  if (!grid_conditions(z, x, &z_on_x, &x_on_z))
    throw std::invalid_argument(
        "the groupoid pair is not strongly complementary");

  const std::uint32_t hk = static_cast<std::uint32_t>(x.blocks.size());
  const std::uint32_t gk = static_cast<std::uint32_t>(z.blocks.size());
  auto to_group = [](const std::vector<std::uint32_t>& law, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> table(k,
                                                  std::vector<std::uint32_t>(k));
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) table[i][j] = law[i * k + j];
    return group_from_cayley(table);
  };

  RelInternalGroup rig{z, x, to_group(z_on_x, hk), to_group(x_on_z, gk), {}};
  rig.coords.reserve(z.carrier);
  for (std::uint32_t a = 0; a < z.carrier; ++a)
    rig.coords.emplace_back(x.block_of[a], z.block_of[a]);
  return rig;
}

FrobeniusAlgebra RelInternalGroup::point() const {
  return groupoid_to_structure(z);
}

FrobeniusAlgebra RelInternalGroup::conv() const {
  return groupoid_to_structure(x);
}

Morphism RelInternalGroup::antipode() const {
  return antipode_of(point(), conv());
}

std::vector<RelInternalGroup> enumerate_strongly_complementary(
    std::uint32_t n) {
  if (n == 0)
    throw std::invalid_argument("the carrier needs at least one element");
  if (n > 6)
    throw std::invalid_argument("carrier size " + std::to_string(n) +
                                " exceeds the enumeration bound of 6");

  const std::vector<CompactGroupoid> groupoids =
      enumerate_compact_groupoids(n);
  std::vector<RelInternalGroup> out;
  for (std::size_t i = 0; i < groupoids.size(); ++i)
    for (std::size_t j = 0; j < groupoids.size(); ++j) {
      const bool evaluated =
          evaluated_strongly_complementary(groupoids[i], groupoids[j]);
      const bool predicted =
          predicted_strongly_complementary(groupoids[i], groupoids[j]);
      if (evaluated != predicted)
        throw std::logic_error(
            "strong-complementarity enumeration mismatch on carrier " +
            std::to_string(n) + ": direct evaluation says " +
            (evaluated ? "yes" : "no") + ", the combinatorial conditions say " +
            (predicted ? "yes" : "no"));
      if (evaluated)
        out.push_back(make_rel_internal_group(
            compact_to_groupoid(groupoids[i]), compact_to_groupoid(groupoids[j])));
    }
  return out;
}

CheckReport check_block_actions(const RelInternalGroup& rig) {
  CheckReport report;
  report.subject = "block actions";
  const FrobeniusAlgebra point = rig.point();
  const FrobeniusAlgebra conv = rig.conv();
  const RingPtr& ring = point.mult.ring();
  const std::uint32_t n = rig.z.carrier;

  std::vector<Morphism> z_states, x_states;
  for (const auto& els : rig.z.blocks)
    z_states.push_back(subset_state(ring, n, els));
  for (const auto& els : rig.x.blocks)
    x_states.push_back(subset_state(ring, n, els));

  bool conv_acts = true;
  for (std::uint32_t g = 0; g < rig.group_g.order && conv_acts; ++g)
    for (std::uint32_t gp = 0; gp < rig.group_g.order; ++gp) {
      Morphism image = z_states[g].tensor(z_states[gp]).then(conv.mult);
      if (!image.equal(z_states[rig.group_g.mul(g, gp)])) {
        conv_acts = false;
        break;
      }
    }
  report.add("conv multiplication moves the z-blocks by the transported group",
             conv_acts);
  report.add("conv unit is the z-block at the transported identity",
             conv.unit.equal(z_states[rig.group_g.unit]));

  bool point_acts = true;
  for (std::uint32_t h = 0; h < rig.group_h.order && point_acts; ++h)
    for (std::uint32_t hp = 0; hp < rig.group_h.order; ++hp) {
      Morphism image = x_states[h].tensor(x_states[hp]).then(point.mult);
      if (!image.equal(x_states[rig.group_h.mul(h, hp)])) {
        point_acts = false;
        break;
      }
    }
  report.add(
      "point multiplication moves the x-blocks by the transported group",
      point_acts);
  report.add("point unit is the x-block at the transported identity",
             point.unit.equal(x_states[rig.group_h.unit]));
  return report;
}

std::optional<Morphism> hadamard_exists(const RelInternalGroup& rig) {
  const std::uint32_t n = rig.z.carrier;
  const RingPtr ring = semiring_by_name("bool");

  std::vector<std::uint32_t> element_at(n, kNone);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto [h, g] = rig.coords[a];
    element_at[static_cast<std::size_t>(h) * rig.group_g.order + g] = a;
  }

  const std::optional<GroupHom> psi =
      find_isomorphism(rig.group_g, rig.group_h);
  if (psi) {
    std::vector<std::uint32_t> psi_inverse(rig.group_h.order);
    for (std::uint32_t g = 0; g < rig.group_g.order; ++g)
      psi_inverse[(*psi)(g)] = g;

    Morphism t = Morphism::zero(ring, {primal(n)}, {primal(n)});
    for (std::uint32_t a = 0; a < n; ++a) {
      const auto [h, g] = rig.coords[a];
      const std::uint32_t b =
          element_at[static_cast<std::size_t>((*psi)(g)) * rig.group_g.order +
                     psi_inverse[h]];
      t.set(b, a, ring->one());
    }
    CheckReport verification =
        check_comonoid_monoid_iso(rig.point(), rig.conv(), ring->one(), t);
    if (!verification.all_passed())
      throw std::logic_error(
          "constructed transform matrix failed its own verification");
    return t;
  }

  if (n <= 6) {
    // Invertible boolean matrices are permutations, so trying them all
    // certifies nonexistence independently of the group obstruction.
    std::uint32_t z_units = 0, x_units = 0;
    for (std::uint32_t e : rig.z.identity) z_units |= 1u << e;
    for (std::uint32_t e : rig.x.identity) x_units |= 1u << e;

    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t a = 0; a < n; ++a) perm[a] = a;
    const auto unit_laws_ok = [&](const std::vector<std::uint32_t>& p) {
      // Counit exchange: p relates z-units to x-units and nothing else.
      for (std::uint32_t a = 0; a < n; ++a)
        if (((z_units >> a) & 1) != ((x_units >> p[a]) & 1)) return false;
      // Unit exchange: the image of the x-unit set is the z-unit set.
      std::uint32_t image = 0;
      for (std::uint32_t e : rig.x.identity) image |= 1u << p[e];
      return image == z_units;
    };
    do {
      if (!unit_laws_ok(perm)) continue;
      bool exchange = true;
      for (std::uint32_t a = 0; a < n && exchange; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
          const std::uint32_t xc = rig.x.mul(a, b);
          const std::uint32_t lhs = xc == kNone ? kNone : perm[xc];
          const std::uint32_t rhs = rig.z.mul(perm[a], perm[b]);
          if (lhs != rhs) {
            exchange = false;
            break;
          }
        }
      if (!exchange) continue;
      bool copies = true;
      for (std::uint32_t a = 0; a < n && copies; ++a) {
        // Decompositions of the image under x against transported
        // decompositions of a under z.
        std::vector<char> lhs(static_cast<std::size_t>(n) * n, 0);
        for (std::uint32_t p = 0; p < n; ++p)
          for (std::uint32_t q = 0; q < n; ++q)
            if (rig.x.mul(p, q) == perm[a])
              lhs[static_cast<std::size_t>(p) * n + q] = 1;
        std::vector<char> rhs(static_cast<std::size_t>(n) * n, 0);
        for (std::uint32_t p = 0; p < n; ++p)
          for (std::uint32_t q = 0; q < n; ++q)
            if (rig.z.mul(p, q) == a)
              rhs[static_cast<std::size_t>(perm[p]) * n + perm[q]] = 1;
        copies = lhs == rhs;
      }
      if (copies)
        throw std::logic_error(
            "a transform matrix passed verification although the block "
            "groups are not isomorphic");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::vector<std::uint32_t> span_intersection(const RelInternalGroup& rig) {
  const std::uint32_t n = rig.z.carrier;
  if (n > 16)
    throw std::invalid_argument(
        "span computation is limited to carriers of at most 16 elements");

  auto span_masks = [n](const std::vector<std::vector<std::uint32_t>>& blocks) {
    std::vector<std::uint32_t> base;
    for (const auto& els : blocks) {
      std::uint32_t mask = 0;
      for (std::uint32_t e : els) mask |= 1u << e;
      base.push_back(mask);
    }
    std::set<std::uint32_t> out;
    const std::uint32_t subsets = 1u << base.size();
    for (std::uint32_t pick = 0; pick < subsets; ++pick) {
      std::uint32_t mask = 0;
      for (std::size_t b = 0; b < base.size(); ++b)
        if ((pick >> b) & 1) mask |= base[b];
      out.insert(mask);
    }
    return out;
  };

  const std::set<std::uint32_t> z_span = span_masks(rig.z.blocks);
  const std::set<std::uint32_t> x_span = span_masks(rig.x.blocks);
  std::vector<std::uint32_t> both;
  std::set_intersection(z_span.begin(), z_span.end(), x_span.begin(),
                        x_span.end(), std::back_inserter(both));
  return both;
}

}  // namespace hopfft
