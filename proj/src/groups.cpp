#include "hopfft/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hopfft {

namespace {

constexpr std::uint32_t kMaxConstructedOrder = 4096;
constexpr std::uint32_t kMaxValidatedOrder = 256;

bool detect_abelian(const FiniteGroup& g) {
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

void fill_inverses(FiniteGroup& g) {
  g.inverse.assign(g.order, 0);
  for (std::uint32_t a = 0; a < g.order; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < g.order; ++b) {
      if (g.mul(a, b) == g.unit && g.mul(b, a) == g.unit) {
        g.inverse[a] = b;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("element " + std::to_string(a) +
                                  " has no inverse");
  }
}

}  // namespace

std::uint32_t FiniteGroup::power(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t acc = unit;
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t x = a;
  std::uint32_t k = 1;
  while (x != unit) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> mixed_radix_digits(
    std::uint64_t index, const std::vector<std::uint32_t>& radices) {
  std::vector<std::uint32_t> digits(radices.size(), 0);
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % radices[i]);
    index /= radices[i];
  }
  return digits;
}

std::uint64_t mixed_radix_index(const std::vector<std::uint32_t>& digits,
                                const std::vector<std::uint32_t>& radices) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < radices.size(); ++i)
    index = index * radices[i] + digits[i];
  return index;
}

FiniteGroup group_from_cyclics(const std::vector<std::uint32_t>& orders) {
  std::uint64_t total = 1;
  for (std::uint32_t n : orders) {
    if (n == 0)
      throw std::invalid_argument("cyclic factor sizes must be positive");
    total *= n;
    if (total > kMaxConstructedOrder)
      throw std::invalid_argument("group order exceeds the dense-table limit of " +
                                  std::to_string(kMaxConstructedOrder));
  }
  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(total);
  g.cyclic_orders = orders;
  g.abelian = true;
  g.unit = 0;
  g.table.assign(static_cast<std::size_t>(g.order) * g.order, 0);
  for (std::uint32_t a = 0; a < g.order; ++a) {
    auto da = mixed_radix_digits(a, orders);
    for (std::uint32_t b = 0; b < g.order; ++b) {
      auto db = mixed_radix_digits(b, orders);
      std::vector<std::uint32_t> dc(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i)
        dc[i] = (da[i] + db[i]) % orders[i];
      g.table[a * g.order + b] =
          static_cast<std::uint32_t>(mixed_radix_index(dc, orders));
    }
  }
  fill_inverses(g);
  std::ostringstream name;
  if (orders.empty()) {
    name << "Z1";
  } else {
    for (std::size_t i = 0; i < orders.size(); ++i)
      name << (i ? "x" : "") << "Z" << orders[i];
  }
  g.name = name.str();
  return g;
}

FiniteGroup group_from_cayley(
    const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("Cayley table is empty");
  if (n > kMaxValidatedOrder)
    throw std::invalid_argument("Cayley table exceeds the validation limit of " +
                                std::to_string(kMaxValidatedOrder));
  for (const auto& row : table) {
    if (row.size() != n)
      throw std::invalid_argument("Cayley table is not square");
    for (std::uint32_t v : row)
      if (v >= n)
        throw std::invalid_argument("Cayley table entry " + std::to_string(v) +
                                    " is out of range");
  }

  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(n);
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = table[a][b];

  bool has_unit = false;
  for (std::uint32_t e = 0; e < n && !has_unit; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.unit = e;
      has_unit = true;
    }
  }
  if (!has_unit)
    throw std::invalid_argument("Cayley table has no identity element");

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          std::ostringstream os;
          os << "Cayley table is not associative at (" << a << ", " << b
             << ", " << c << ")";
          throw std::invalid_argument(os.str());
        }

  fill_inverses(g);
  g.abelian = detect_abelian(g);
  g.name = "cayley" + std::to_string(n);
  return g;
}

std::vector<std::uint32_t> abelian_invariant_factors(const FiniteGroup& g) {
  if (!g.abelian)
    throw std::invalid_argument(
        "invariant factors are defined for abelian groups only");
  if (g.order == 1) return {};

  // Primary decomposition from order statistics. For the p-part with cyclic
  // exponents lambda_1 >= lambda_2 >= ..., the count of solutions of
  // x^(p^k) = e equals p^(sum_i min(lambda_i, k)), so consecutive logs give
  // the number of factors of exponent at least k.
  std::uint32_t remaining = g.order;
  std::map<std::uint32_t, std::vector<std::uint32_t>> primary;  // p -> lambdas
  for (std::uint32_t p = 2; p <= remaining; ++p) {
    if (remaining % p != 0) continue;
    while (remaining % p == 0) remaining /= p;

    std::vector<std::uint32_t> log_counts{0};
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      std::uint32_t count = 0;
      for (std::uint32_t x = 0; x < g.order; ++x)
        if (g.power(x, pk) == g.unit) ++count;
      std::uint32_t log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      if (log == log_counts.back()) break;
      log_counts.push_back(log);
    }
    // at_least[k] = number of cyclic factors with exponent >= k.
    std::vector<std::uint32_t> lambdas;
    for (std::size_t k = 1; k < log_counts.size(); ++k) {
      std::uint32_t at_least = log_counts[k] - log_counts[k - 1];
      while (lambdas.size() < at_least) lambdas.push_back(0);
      for (std::uint32_t i = 0; i < at_least; ++i) lambdas[i] += 1;
    }
    primary[p] = lambdas;  // sorted descending by construction
  }

  std::vector<std::uint32_t> factors;
  while (true) {
    std::uint64_t d = 1;
    for (auto& [p, lambdas] : primary) {
      if (lambdas.empty()) continue;
      std::uint64_t pe = 1;
      for (std::uint32_t i = 0; i < lambdas.front(); ++i) pe *= p;
      d *= pe;
      lambdas.erase(lambdas.begin());
    }
    if (d == 1) break;
    factors.push_back(static_cast<std::uint32_t>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

GroupHom GroupHom::make(FiniteGroup source, FiniteGroup target,
                        std::vector<std::uint32_t> map) {
  if (map.size() != source.order)
    throw std::invalid_argument("homomorphism map has wrong length");
  for (std::uint32_t v : map)
    if (v >= target.order)
      throw std::invalid_argument("homomorphism image out of range");
  for (std::uint32_t a = 0; a < source.order; ++a)
    for (std::uint32_t b = 0; b < source.order; ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) {
        std::ostringstream os;
        os << "not a homomorphism at (" << a << ", " << b << ")";
        throw std::invalid_argument(os.str());
      }
  GroupHom h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.map = std::move(map);
  return h;
}

bool GroupHom::is_bijective() const {
  if (source.order != target.order) return false;
  std::vector<bool> seen(target.order, false);
  for (std::uint32_t v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

GroupHom abelian_presentation(const FiniteGroup& g) {
  const std::vector<std::uint32_t> factors = abelian_invariant_factors(g);

  // Build a generating tuple, one generator per invariant factor, largest
  // factor first. `span` maps every element of the subgroup generated so far
  // to its exponent tuple over the chosen generators, which doubles as the
  // discrete log needed for the purification step below.
  std::vector<std::uint32_t> gens;        // largest factor first
  std::vector<std::uint32_t> gen_orders;  // matching orders
  std::map<std::uint32_t, std::vector<std::uint32_t>> span;
  span[g.unit] = {};

  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const std::uint32_t d = *it;
    std::optional<std::uint32_t> chosen;
    for (std::uint32_t x = 0; x < g.order && !chosen; ++x) {
      // Order of the coset of x modulo the current span.
      std::uint32_t t = 1;
      std::uint32_t power = x;
      while (span.find(power) == span.end()) {
        power = g.mul(power, x);
        ++t;
      }
      if (t != d) continue;

      // x^d lands in the span; write it over the generators. The candidate
      // yields a direct summand exactly when every exponent is divisible by
      // d, in which case dividing out produces a representative of the same
      // coset whose order is exactly d.
      const std::vector<std::uint32_t>& dlog = span.find(power)->second;
      std::uint32_t y = x;
      bool pure = true;
      for (std::size_t j = 0; j < dlog.size() && pure; ++j) {
        if (dlog[j] % d != 0) {
          pure = false;
          break;
        }
        const std::uint32_t quotient = gen_orders[j] / d;
        const std::uint32_t s = (quotient - (dlog[j] / d) % quotient) % quotient;
        y = g.mul(y, g.power(gens[j], s));
      }
      if (pure) chosen = y;
    }
    if (!chosen)
      throw std::logic_error("abelian presentation found no generator");

    std::map<std::uint32_t, std::vector<std::uint32_t>> grown;
    for (const auto& [elem, dlog] : span) {
      std::uint32_t shifted = elem;
      for (std::uint32_t p = 0; p < d; ++p) {
        std::vector<std::uint32_t> extended = dlog;
        extended.push_back(p);
        if (!grown.emplace(shifted, std::move(extended)).second)
          throw std::logic_error("abelian presentation generators overlap");
        shifted = g.mul(shifted, *chosen);
      }
    }
    span = std::move(grown);
    gens.push_back(*chosen);
    gen_orders.push_back(d);
  }

  // Labels live in the direct sum with the smallest factor leftmost, so the
  // digit for factor j pairs with the generator found at the opposite end.
  FiniteGroup labels = group_from_cyclics(factors);
  std::vector<std::uint32_t> map(g.order);
  for (std::uint32_t label = 0; label < labels.order; ++label) {
    std::vector<std::uint32_t> digits = mixed_radix_digits(label, factors);
    std::uint32_t elem = g.unit;
    for (std::size_t j = 0; j < digits.size(); ++j)
      elem = g.mul(elem, g.power(gens[gens.size() - 1 - j], digits[j]));
    map[elem] = label;
  }
  return GroupHom::make(g, std::move(labels), std::move(map));
}

namespace {

// Backtracking isomorphism search state: a partial bijection defined on a
// subgroup, extended one generator at a time.
struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<std::uint32_t> orders_a, orders_b;

  IsoSearch(const FiniteGroup& a_, const FiniteGroup& b_) : a(a_), b(b_) {
    orders_a.resize(a.order);
    orders_b.resize(b.order);
    for (std::uint32_t x = 0; x < a.order; ++x) orders_a[x] = a.element_order(x);
    for (std::uint32_t x = 0; x < b.order; ++x) orders_b[x] = b.element_order(x);
  }

  // Closes the partial map under multiplication. `map` uses UINT32_MAX for
  // unassigned elements; `members` lists the currently mapped subgroup.
  bool close(std::vector<std::uint32_t>& map,
             std::vector<std::uint32_t>& members) const {
    std::vector<std::uint32_t> used(b.order, 0);
    for (std::uint32_t x : members) used[map[x]] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        std::uint32_t prod = a.mul(members[i], members[j]);
        std::uint32_t image = b.mul(map[members[i]], map[members[j]]);
        if (map[prod] == UINT32_MAX) {
          if (used[image]) return false;
          map[prod] = image;
          used[image] = 1;
          members.push_back(prod);
        } else if (map[prod] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(const std::vector<std::uint32_t>& map,
              const std::vector<std::uint32_t>& members,
              std::vector<std::uint32_t>& out) const {
    if (members.size() == a.order) {
      out = map;
      return true;
    }
    // Next generator: an unmapped element of maximal order.
    std::uint32_t gen = UINT32_MAX;
    for (std::uint32_t x = 0; x < a.order; ++x) {
      if (map[x] != UINT32_MAX) continue;
      if (gen == UINT32_MAX || orders_a[x] > orders_a[gen]) gen = x;
    }
    std::vector<bool> used(b.order, false);
    for (std::uint32_t x : members) used[map[x]] = true;
    for (std::uint32_t img = 0; img < b.order; ++img) {
      if (used[img] || orders_b[img] != orders_a[gen]) continue;
      std::vector<std::uint32_t> next_map = map;
      std::vector<std::uint32_t> next_members = members;
      next_map[gen] = img;
      next_members.push_back(gen);
      if (!close(next_map, next_members)) continue;
      if (extend(next_map, next_members, out)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a,
                                         const FiniteGroup& b) {
  if (a.order != b.order || a.abelian != b.abelian) return std::nullopt;
  IsoSearch search(a, b);
  {
    auto stats_a = search.orders_a;
    auto stats_b = search.orders_b;
    std::sort(stats_a.begin(), stats_a.end());
    std::sort(stats_b.begin(), stats_b.end());
    if (stats_a != stats_b) return std::nullopt;
  }
  std::vector<std::uint32_t> map(a.order, UINT32_MAX);
  std::vector<std::uint32_t> members{a.unit};
  map[a.unit] = b.unit;
  std::vector<std::uint32_t> out;
  if (!search.extend(map, members, out)) return std::nullopt;
  return GroupHom::make(a, b, out);
}

FiniteGroup symmetric3() {
  // Permutations of {0,1,2}: identity, transpositions, 3-cycles, in the
  // documented order. Products compose left action first: (fg)(x) = f(g(x)).
  const std::vector<std::array<std::uint32_t, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto find = [&perms](const std::array<std::uint32_t, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<std::uint32_t>(i);
    throw std::logic_error("permutation closure failure");
  };
  FiniteGroup g;
  g.order = 6;
  g.table.resize(36);
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j) {
      std::array<std::uint32_t, 3> comp;
      for (std::uint32_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i * 6 + j] = find(comp);
    }
  g.unit = 0;
  fill_inverses(g);
  g.abelian = false;
  g.name = "S3";
  return g;
}

FiniteGroup dihedral(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("dihedral parameter must be positive");
  FiniteGroup g;
  g.order = 2 * n;
  g.table.assign(static_cast<std::size_t>(g.order) * g.order, 0);
  auto enc = [n](bool flip, std::uint32_t k) {
    return (flip ? n : 0u) + (k % n);
  };
  for (std::uint32_t a = 0; a < g.order; ++a) {
    bool fa = a >= n;
    std::uint32_t ka = fa ? a - n : a;
    for (std::uint32_t b = 0; b < g.order; ++b) {
      bool fb = b >= n;
      std::uint32_t kb = fb ? b - n : b;
      // (s^fa r^ka)(s^fb r^kb) = s^(fa xor fb) r^(kb +- ka): the rotation
      // index flips sign when it crosses a reflection.
      std::uint32_t k = fb ? (kb + n - ka % n) % n : (ka + kb) % n;
      g.table[a * g.order + b] = enc(fa != fb, k);
    }
  }
  g.unit = 0;
  fill_inverses(g);
  g.abelian = detect_abelian(g);
  g.name = "D" + std::to_string(n);
  return g;
}

FiniteGroup quaternion8() {
  // Index encoding: basis element (1, i, j, k) times sign, as
  // index = 2 * basis + (sign < 0 ? 1 : 0).
  auto mul_basis = [](std::uint32_t x, std::uint32_t y) {
    // Returns (basis, sign) for the product of basis elements.
    static const std::uint32_t basis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    return std::pair<std::uint32_t, int>(basis[x][y], sign[x][y]);
  };
  FiniteGroup g;
  g.order = 8;
  g.table.resize(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      std::uint32_t xa = a / 2, xb = b / 2;
      int sa = (a % 2) ? -1 : 1, sb = (b % 2) ? -1 : 1;
      auto [basis, s] = mul_basis(xa, xb);
      int total = sa * sb * s;
      g.table[a * 8 + b] = 2 * basis + (total < 0 ? 1 : 0);
    }
  g.unit = 0;
  fill_inverses(g);
  g.abelian = false;
  g.name = "Q8";
  return g;
}

FiniteGroup named_group(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "Q8") return quaternion8();
  if (name.size() > 1 && name[0] == 'D') {
    const std::string tail = name.substr(1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
      return dihedral(static_cast<std::uint32_t>(std::stoul(tail)));
  }
  if (name.size() > 1 && name[0] == 'Z') {
    const std::string tail = name.substr(1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
      return group_from_cyclics({static_cast<std::uint32_t>(std::stoul(tail))});
  }
  throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace hopfft
