#include "skewlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "skewlab/error.hpp"
#include "skewlab/io.hpp"

namespace skewlab::catalog {

namespace {

void check_order_bound(long long n, const std::string& what) {
  if (n < 1 || n > FiniteGroup::kMaxOrder) {
    throw InputError(what + " order " + std::to_string(n) +
                     " outside supported range 1.." +
                     std::to_string(FiniteGroup::kMaxOrder));
  }
}

}  // namespace

FiniteGroup cyclic(int n) {
  check_order_bound(n, "cyclic group");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return FiniteGroup(n, std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral(int order) {
  if (order < 4 || order % 2 != 0) {
    throw InputError("dihedral group needs an even order of at least 4, got " +
                     std::to_string(order));
  }
  check_order_bound(order, "dihedral group");
  const int m = order / 2;
  // index i < m: rotation r^i; index m + i: reflection r^i s
  auto idx = [&](int rot, bool flip) { return (flip ? m : 0) + ((rot % m + m) % m); };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    const int ri = i % m;
    const bool fi = i >= m;
    for (int j = 0; j < order; ++j) {
      const int rj = j % m;
      const bool fj = j >= m;
      // (r^a s^e)(r^b s^f) = r^(a + b or a - b) s^(e xor f)
      const int rot = fi ? ri - rj : ri + rj;
      table[static_cast<std::size_t>(i) * order + j] = idx(rot, fi != fj);
    }
  }
  return FiniteGroup(order, std::move(table), "D" + std::to_string(order));
}

FiniteGroup quaternion8() {
  // axes 0..3 = 1, i, j, k; element index = 2 * axis + (1 if negated)
  struct Ax {
    int sign;
    int axis;
  };
  // axis_mul[a][b] for a, b in {1, i, j, k}
  static const Ax axis_mul[4][4] = {
      {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
      {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
      {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
      {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const Ax prod = axis_mul[x / 2][y / 2];
      int sign = prod.sign;
      if (x % 2) sign = -sign;
      if (y % 2) sign = -sign;
      table[static_cast<std::size_t>(x) * 8 + y] = 2 * prod.axis + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup(8, std::move(table), "Q8");
}

std::vector<std::vector<int>> permutations_lex(int n) {
  if (n < 1 || n > 5) {
    throw InputError("permutation degree must be between 1 and 5");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int permutation_index(int n, const std::vector<int>& perm) {
  const auto all = permutations_lex(n);
  const auto it = std::find(all.begin(), all.end(), perm);
  if (it == all.end()) {
    throw InputError("not a permutation of the requested degree");
  }
  return static_cast<int>(it - all.begin());
}

namespace {

bool is_even_permutation(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

// Composition table over a list of permutations; (p∘q)(x) = p(q(x)).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms,
                              std::string name) {
  const int k = static_cast<int>(perms.size());
  const int deg = static_cast<int>(perms.front().size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[perms[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<int> composed(deg);
      for (int x = 0; x < deg; ++x) composed[x] = perms[i][perms[j][x]];
      const auto it = index.find(composed);
      if (it == index.end()) {
        throw InternalError("permutation list is not closed under composition");
      }
      table[static_cast<std::size_t>(i) * k + j] = it->second;
    }
  }
  return FiniteGroup(k, std::move(table), std::move(name));
}

}  // namespace

FiniteGroup alternating4() {
  std::vector<std::vector<int>> even;
  for (const auto& p : permutations_lex(4)) {
    if (is_even_permutation(p)) even.push_back(p);
  }
  return permutation_group(even, "A4");
}

FiniteGroup symmetric(int n) {
  return permutation_group(permutations_lex(n), "S" + std::to_string(n));
}

void ZGroupParams::validate() const {
  if (m < 1 || n < 1 || r < 1 || r > std::max(m, 1)) {
    throw InputError("metacyclic parameters must satisfy m, n >= 1 and 1 <= r <= m");
  }
  check_order_bound(static_cast<long long>(m) * n, "metacyclic group");
  if (std::gcd(m, n) != 1) {
    throw InputError("metacyclic parameters need gcd(m, n) = 1");
  }
  if (m > 1 && std::gcd(m, r - 1) != 1) {
    throw InputError("metacyclic parameters need gcd(m, r - 1) = 1");
  }
  long long rn = 1;
  for (int i = 0; i < n; ++i) rn = (rn * r) % std::max(m, 1);
  if (m > 1 && rn != 1) {
    throw InputError("metacyclic parameters need r^n = 1 (mod m)");
  }
}

FiniteGroup metacyclic(const ZGroupParams& params) {
  params.validate();
  const int m = params.m, n = params.n;
  // r^j mod m for j < n
  std::vector<int> rpow(n, m == 1 ? 0 : 1);
  for (int j = 1; j < n; ++j) rpow[j] = static_cast<int>((static_cast<long long>(rpow[j - 1]) * params.r) % m);
  const int k = m * n;
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  // index of a^i b^j is i * n + j; (a^i b^j)(a^u b^v) = a^(i + u r^j) b^(j + v)
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
          const int ii = static_cast<int>((i + static_cast<long long>(u) * rpow[j]) % m);
          const int jj = (j + v) % n;
          table[static_cast<std::size_t>(i * n + j) * k + (u * n + v)] = ii * n + jj;
        }
      }
    }
  }
  std::ostringstream name;
  name << "M(" << m << "," << n << "," << params.r << ")";
  return FiniteGroup(k, std::move(table), name.str());
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long long k = static_cast<long long>(a.order()) * b.order();
  check_order_bound(k, "direct product");
  const int nb = b.order();
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < nb; ++j) {
      for (int u = 0; u < a.order(); ++u) {
        for (int v = 0; v < nb; ++v) {
          table[static_cast<std::size_t>(i * nb + j) * k + (u * nb + v)] =
              a.op(i, u) * nb + b.op(j, v);
        }
      }
    }
  }
  const std::string name =
      (a.name().empty() || b.name().empty()) ? "" : a.name() + "x" + b.name();
  return FiniteGroup(static_cast<int>(k), std::move(table), name);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<GroupMap>& action) {
  if (static_cast<int>(action.size()) != k.order()) {
    throw ContractViolation("semidirect action must list one automorphism per element");
  }
  for (const GroupMap& f : action) {
    if (!f.source().same_table(n) || !f.target().same_table(n) || !f.is_bijective()) {
      throw ContractViolation("semidirect action entries must be automorphisms of the kernel");
    }
  }
  for (int x = 0; x < n.order(); ++x) {
    if (action[0](x) != x) {
      throw ContractViolation("semidirect action must send the identity to the identity map");
    }
  }
  for (int k1 = 0; k1 < k.order(); ++k1) {
    for (int k2 = 0; k2 < k.order(); ++k2) {
      for (int x = 0; x < n.order(); ++x) {
        if (action[k.op(k1, k2)](x) != action[k1](action[k2](x))) {
          throw ContractViolation("semidirect action is not a homomorphism into the automorphisms");
        }
      }
    }
  }
  const long long size = static_cast<long long>(n.order()) * k.order();
  check_order_bound(size, "semidirect product");
  const int nk = k.order();
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  // (n1, k1)(n2, k2) = (n1 ∘ action[k1](n2), k1 k2)
  for (int n1 = 0; n1 < n.order(); ++n1) {
    for (int k1 = 0; k1 < nk; ++k1) {
      for (int n2 = 0; n2 < n.order(); ++n2) {
        for (int k2 = 0; k2 < nk; ++k2) {
          table[static_cast<std::size_t>(n1 * nk + k1) * size + (n2 * nk + k2)] =
              n.op(n1, action[k1](n2)) * nk + k.op(k1, k2);
        }
      }
    }
  }
  const std::string name =
      (n.name().empty() || k.name().empty()) ? "" : n.name() + ":" + k.name();
  return FiniteGroup(static_cast<int>(size), std::move(table), name);
}

namespace {

// Keeps the lexicographically smallest Cayley table per isomorphism class,
// in table order.
std::vector<FiniteGroup> dedupe_by_isomorphism(const std::vector<FiniteGroup>& candidates) {
  std::vector<FiniteGroup> reps;
  for (const FiniteGroup& g : candidates) {
    bool placed = false;
    for (FiniteGroup& rep : reps) {
      if (is_isomorphic(rep, g)) {
        if (g.flat_table() < rep.flat_table()) rep = g;
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(g);
  }
  std::sort(reps.begin(), reps.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.flat_table() < b.flat_table();
  });
  return reps;
}

}  // namespace

std::vector<FiniteGroup> enumerate_z_groups(int order) {
  check_order_bound(order, "group");
  std::vector<FiniteGroup> candidates;
  candidates.push_back(cyclic(order));
  for (int m = 2; m <= order; ++m) {
    if (order % m != 0) continue;
    const int n = order / m;
    if (std::gcd(m, n) != 1) continue;
    for (int r = 2; r <= m; ++r) {
      ZGroupParams params{m, n, r};
      try {
        params.validate();
      } catch (const InputError&) {
        continue;
      }
      candidates.push_back(metacyclic(params));
    }
  }
  return dedupe_by_isomorphism(candidates);
}

namespace {

std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // descending parts
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

std::vector<FiniteGroup> abelian_groups(int n) {
  std::vector<std::pair<int, int>> factorization;  // (prime, exponent)
  int rest = n;
  for (int p : prime_divisors(n)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factorization.emplace_back(p, e);
  }
  std::vector<std::vector<int>> primary_choices{{}};  // cyclic factor orders
  for (const auto& [p, e] : factorization) {
    std::vector<std::vector<int>> next;
    for (const auto& base : primary_choices) {
      for (const auto& partition : partitions(e)) {
        std::vector<int> extended = base;
        for (int part : partition) {
          int q = 1;
          for (int i = 0; i < part; ++i) q *= p;
          extended.push_back(q);
        }
        next.push_back(std::move(extended));
      }
    }
    primary_choices = std::move(next);
  }
  std::vector<FiniteGroup> out;
  for (const auto& factors : primary_choices) {
    FiniteGroup g = cyclic(factors.empty() ? 1 : factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
      g = direct_product(g, cyclic(factors[i]));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Automorphism group of base as a composition table plus the maps themselves.
std::pair<FiniteGroup, std::vector<GroupMap>> automorphisms_as_group(const FiniteGroup& base) {
  std::vector<GroupMap> auts = automorphism_group(base);
  const int k = static_cast<int>(auts.size());
  if (k > FiniteGroup::kMaxOrder) {
    throw InternalError("automorphism group too large to tabulate for " + base.name());
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[auts[i].images()] = i;
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<int> composed(base.order());
      for (int x = 0; x < base.order(); ++x) composed[x] = auts[i](auts[j](x));
      const auto it = index.find(composed);
      if (it == index.end()) {
        throw InternalError("automorphism composition left the computed set");
      }
      table[static_cast<std::size_t>(i) * k + j] = it->second;
    }
  }
  return {FiniteGroup(k, std::move(table), "Aut(" + base.name() + ")"), std::move(auts)};
}

FiniteGroup heisenberg3() {
  // (C3 x C3) ⋊ C3 with the generator acting by (x, y) -> (x + y, y)
  const FiniteGroup base = direct_product(cyclic(3), cyclic(3));
  std::vector<int> shear(9);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) shear[x * 3 + y] = ((x + y) % 3) * 3 + y;
  }
  const GroupMap step(base, base, shear);
  std::vector<int> twice(9);
  for (int i = 0; i < 9; ++i) twice[i] = step(step(i));
  std::vector<int> ident(9);
  std::iota(ident.begin(), ident.end(), 0);
  const std::vector<GroupMap> action{GroupMap(base, base, ident), step,
                                     GroupMap(base, base, twice)};
  return semidirect_product(base, cyclic(3), action).with_name("H27");
}

FiniteGroup extraspecial27_exponent9() {
  // C9 ⋊ C3 with the generator acting by x -> 4x
  const FiniteGroup base = cyclic(9);
  std::vector<int> quad(9), ident(9), quad2(9);
  std::iota(ident.begin(), ident.end(), 0);
  for (int i = 0; i < 9; ++i) quad[i] = (4 * i) % 9;
  for (int i = 0; i < 9; ++i) quad2[i] = quad[quad[i]];
  const std::vector<GroupMap> action{GroupMap(base, base, ident),
                                     GroupMap(base, base, quad),
                                     GroupMap(base, base, quad2)};
  return semidirect_product(base, cyclic(3), action).with_name("C9:C3");
}

struct OddOrderCache {
  std::mutex mu;
  std::map<int, std::vector<FiniteGroup>> entries;
};

OddOrderCache& odd_order_cache() {
  static OddOrderCache cache;
  return cache;
}

}  // namespace

std::vector<FiniteGroup> groups_of_odd_order(int n) {
  if (n < 1 || n % 2 == 0 || n > 63) {
    throw InputError("odd-order catalog covers odd orders 1..63, got " +
                     std::to_string(n));
  }
  auto& cache = odd_order_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    const auto it = cache.entries.find(n);
    if (it != cache.entries.end()) return it->second;
  }
  std::vector<FiniteGroup> candidates = abelian_groups(n);
  if (n == 27) {
    // Seeded: the two nonabelian classes next to the three abelian ones.
    candidates.push_back(heisenberg3());
    candidates.push_back(extraspecial27_exponent9());
  } else {
    for (int d = 3; d < n; d += 2) {
      if (n % d != 0) continue;
      const std::vector<FiniteGroup> kernels = groups_of_odd_order(d);
      const std::vector<FiniteGroup> complements = groups_of_odd_order(n / d);
      for (const FiniteGroup& kernel : kernels) {
        const auto [aut_group, auts] = automorphisms_as_group(kernel);
        for (const FiniteGroup& complement : complements) {
          const auto homs = all_homomorphisms(complement, aut_group);
          int label = 0;
          for (const auto& hom : homs) {
            const bool trivial =
                std::all_of(hom.begin(), hom.end(), [](int f) { return f == 0; });
            if (trivial) {
              // direct product; covered by the abelian sweep unless a factor
              // is nonabelian
              if (!kernel.is_abelian() || !complement.is_abelian()) {
                candidates.push_back(direct_product(kernel, complement));
              }
              continue;
            }
            std::vector<GroupMap> action;
            action.reserve(hom.size());
            for (int f : hom) action.push_back(auts[f]);
            FiniteGroup g = semidirect_product(kernel, complement, action);
            candidates.push_back(g.with_name(g.name() + "#" + std::to_string(label)));
            ++label;
          }
        }
      }
    }
  }
  std::vector<FiniteGroup> result = dedupe_by_isomorphism(candidates);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.entries.emplace(n, result);
  }
  return result;
}

FiniteGroup load_group(const std::string& document) {
  return io::parse_group(document);
}

FiniteGroup group_by_name(const std::string& name) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : name) {
    if (c == 'x') {
      tokens.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  tokens.push_back(current);
  auto parse_one = [&](const std::string& token) -> FiniteGroup {
    if (token.size() >= 2 && (token[0] == 'C' || token[0] == 'D' || token[0] == 'S')) {
      int value = 0;
      for (std::size_t i = 1; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
          throw InputError("unknown group name: " + token);
        }
        value = value * 10 + (token[i] - '0');
      }
      if (token[0] == 'C') return cyclic(value);
      if (token[0] == 'D') return dihedral(value);
      return symmetric(value);
    }
    if (token == "Q8") return quaternion8();
    if (token == "A4") return alternating4();
    throw InputError("unknown group name: " + token);
  };
  FiniteGroup g = parse_one(tokens.front());
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    g = direct_product(g, parse_one(tokens[i]));
  }
  return g;
}

}  // namespace skewlab::catalog
