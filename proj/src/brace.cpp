#include "skewlab/brace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

struct SkewBrace::Data {
  FiniteGroup add;
  FiniteGroup mul;
  std::vector<std::vector<int>> lambda;  // per element, a permutation
  std::string name;
  std::string provenance;

  Data(FiniteGroup a, FiniteGroup m) : add(std::move(a)), mul(std::move(m)) {}
};

SkewBrace::SkewBrace(FiniteGroup additive, FiniteGroup multiplicative,
                     std::string name, std::string provenance) {
  if (additive.order() != multiplicative.order()) {
    throw InputError("brace structures have different orders");
  }
  auto data = std::make_shared<Data>(std::move(additive), std::move(multiplicative));
  data->name = std::move(name);
  data->provenance = std::move(provenance);
  const FiniteGroup& add = data->add;
  const FiniteGroup& mul = data->mul;
  const int n = add.order();
  // a·(b + c) = a·b − a + a·c
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = mul.op(a, b);
      for (int c = 0; c < n; ++c) {
        if (mul.op(a, add.op(b, c)) !=
            add.op(add.op(ab, add.inverse(a)), mul.op(a, c))) {
          throw InputError("brace law fails at triple (" + std::to_string(a) +
                           ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  data->lambda.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int>& perm = data->lambda[a];
    perm.resize(n);
    std::vector<char> hit(n, 0);
    for (int b = 0; b < n; ++b) {
      perm[b] = add.op(add.inverse(a), mul.op(a, b));
      hit[perm[b]] = 1;
    }
    for (int b = 0; b < n; ++b) {
      if (!hit[b]) {
        throw InputError("lambda map of element " + std::to_string(a) +
                         " is not a bijection");
      }
    }
    // additive automorphism
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (perm[add.op(b, c)] != add.op(perm[b], perm[c])) {
          throw InputError("lambda map of element " + std::to_string(a) +
                           " is not additive at pair (" + std::to_string(b) +
                           ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  // λ is a homomorphism from the multiplicative group
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::vector<int>& left = data->lambda[mul.op(a, b)];
      const std::vector<int>& fa = data->lambda[a];
      const std::vector<int>& fb = data->lambda[b];
      for (int x = 0; x < n; ++x) {
        if (left[x] != fa[fb[x]]) {
          throw InputError("lambda is not multiplicative at pair (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
        }
      }
    }
  }
  d_ = std::move(data);
}

SkewBrace SkewBrace::trivial(const FiniteGroup& g) {
  return SkewBrace(g, g, g.name().empty() ? "trivial" : g.name() + "-trivial",
                   "trivial brace on " + (g.name().empty() ? "group" : g.name()));
}

int SkewBrace::order() const noexcept { return d_->add.order(); }
const std::string& SkewBrace::name() const noexcept { return d_->name; }
const std::string& SkewBrace::provenance() const noexcept { return d_->provenance; }
const FiniteGroup& SkewBrace::additive_group() const noexcept { return d_->add; }
const FiniteGroup& SkewBrace::multiplicative_group() const noexcept { return d_->mul; }

int SkewBrace::add(int a, int b) const { return d_->add.op(a, b); }
int SkewBrace::neg(int a) const { return d_->add.inverse(a); }
int SkewBrace::mul(int a, int b) const { return d_->mul.op(a, b); }
int SkewBrace::mul_inverse(int a) const { return d_->mul.inverse(a); }
int SkewBrace::lambda(int a, int b) const { return d_->lambda[a][b]; }
const std::vector<int>& SkewBrace::lambda_perm(int a) const { return d_->lambda[a]; }

SkewBrace SkewBrace::renamed(std::string name, std::string provenance) const {
  SkewBrace copy = *this;
  auto data = std::make_shared<Data>(*d_);
  data->name = std::move(name);
  data->provenance = std::move(provenance);
  copy.d_ = std::move(data);
  return copy;
}

SkewBrace from_regular_subgroup(const LambdaTable& table, std::string name) {
  const FiniteGroup& h = table.base();
  const int n = h.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const std::vector<int>& fa = table.auts().perm(table.lam()[a]);
    for (int b = 0; b < n; ++b) {
      mul[static_cast<std::size_t>(a) * n + b] = h.op(a, fa[b]);
    }
  }
  if (name.empty()) {
    name = (h.name().empty() ? "brace" : h.name()) + "-brace";
  }
  std::ostringstream prov;
  prov << "regular-subgroup additive=" << (h.name().empty() ? "?" : h.name())
       << " lam=[";
  for (int x = 0; x < n; ++x) prov << (x ? "," : "") << table.lam()[x];
  prov << "]";
  FiniteGroup mul_group(n, std::move(mul), name + "-mult");
  return SkewBrace(h, std::move(mul_group), std::move(name), prov.str());
}

SkewBrace from_exact_factorization(const FiniteGroup& g, const Subgroup& a,
                                   const Subgroup& c) {
  if (!a.parent().same_table(g) || !c.parent().same_table(g)) {
    throw ContractViolation("factors must be subgroups of the factored group");
  }
  if (a.order() * c.order() != g.order()) {
    throw InputError("factor orders do not multiply to the group order");
  }
  for (int x : a.elements()) {
    if (x != 0 && c.contains(x)) {
      throw InputError("factors intersect beyond the identity at element " +
                       std::to_string(x));
    }
  }
  const int n = g.order();
  std::vector<int> a_part(n, -1), c_part(n, -1);
  for (int x : a.elements()) {
    for (int y : c.elements()) {
      const int v = g.op(x, y);
      if (a_part[v] != -1) {
        throw InternalError("factorization is not unique at element " +
                            std::to_string(v));
      }
      a_part[v] = x;
      c_part[v] = y;
    }
  }
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = 0; g2 < n; ++g2) {
      mul[static_cast<std::size_t>(g1) * n + g2] =
          g.op(g.op(a_part[g1], a_part[g2]), g.op(c_part[g2], c_part[g1]));
    }
  }
  const std::string base_name = g.name().empty() ? "G" : g.name();
  std::ostringstream prov;
  prov << "exact-factorization group=" << base_name << " A=[";
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    prov << (i ? "," : "") << a.elements()[i];
  }
  prov << "] C=[";
  for (std::size_t i = 0; i < c.elements().size(); ++i) {
    prov << (i ? "," : "") << c.elements()[i];
  }
  prov << "]";
  FiniteGroup mul_group(n, std::move(mul), base_name + "-factored-mult");
  return SkewBrace(g, std::move(mul_group), base_name + "-factored", prov.str());
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool is_subbrace(const SkewBrace& b, const std::vector<int>& subset) {
  const std::vector<int> elems = sorted_unique(subset);
  if (elems.empty() || elems.front() != 0) return false;
  if (elems.back() >= b.order()) {
    throw InputError("subset element out of range: " + std::to_string(elems.back()));
  }
  std::vector<char> in(b.order(), 0);
  for (int x : elems) in[x] = 1;
  for (int x : elems) {
    if (!in[b.neg(x)] || !in[b.mul_inverse(x)]) return false;
    for (int y : elems) {
      if (!in[b.add(x, y)] || !in[b.mul(x, y)]) return false;
    }
  }
  return true;
}

bool is_ideal(const SkewBrace& b, const std::vector<int>& subset) {
  if (!is_subbrace(b, subset)) return false;
  const std::vector<int> elems = sorted_unique(subset);
  std::vector<char> in(b.order(), 0);
  for (int x : elems) in[x] = 1;
  for (int a = 0; a < b.order(); ++a) {
    for (int x : elems) {
      // normal in (B, +): a + x - a stays in
      if (!in[b.add(b.add(a, x), b.neg(a))]) return false;
      // normal in (B, ·)
      if (!in[b.mul(b.mul(a, x), b.mul_inverse(a))]) return false;
      // λ-invariant
      if (!in[b.lambda(a, x)]) return false;
    }
  }
  return true;
}

std::vector<int> socle(const SkewBrace& b) {
  const int n = b.order();
  std::vector<int> out;
  for (int a = 0; a < n; ++a) {
    bool identity_lambda = true;
    const std::vector<int>& perm = b.lambda_perm(a);
    for (int x = 0; x < n; ++x) {
      if (perm[x] != x) {
        identity_lambda = false;
        break;
      }
    }
    if (!identity_lambda) continue;
    bool central = true;
    for (int x = 0; x < n; ++x) {
      if (b.add(a, x) != b.add(x, a)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(a);
  }
  return out;
}

BraceQuotient quotient_brace(const SkewBrace& b, const std::vector<int>& ideal) {
  if (!is_ideal(b, ideal)) {
    throw ContractViolation("quotient requires an ideal");
  }
  const std::vector<int> elems = sorted_unique(ideal);
  const int n = b.order();
  std::vector<int> rep_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    std::set<int> additive, multiplicative;
    for (int i : elems) {
      additive.insert(b.add(x, i));
      multiplicative.insert(b.mul(x, i));
    }
    if (additive != multiplicative) {
      throw InternalError("additive and multiplicative cosets disagree at element " +
                          std::to_string(x));
    }
    rep = *additive.begin();
    rep_of[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep_of[x] == x) reps.push_back(x);
  }
  std::vector<int> index_of(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);
  const int k = static_cast<int>(reps.size());
  std::vector<int> add_table(static_cast<std::size_t>(k) * k);
  std::vector<int> mul_table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      add_table[static_cast<std::size_t>(i) * k + j] = index_of[rep_of[b.add(reps[i], reps[j])]];
      mul_table[static_cast<std::size_t>(i) * k + j] = index_of[rep_of[b.mul(reps[i], reps[j])]];
    }
  }
  const std::string qname =
      (b.name().empty() ? "brace" : b.name()) + "/" + std::to_string(elems.size());
  SkewBrace quotient(FiniteGroup(k, std::move(add_table), qname + "-add"),
                     FiniteGroup(k, std::move(mul_table), qname + "-mult"), qname,
                     "quotient of " + (b.name().empty() ? "brace" : b.name()) +
                         " by an ideal of order " + std::to_string(elems.size()));
  std::vector<int> coset_of(n);
  for (int x = 0; x < n; ++x) coset_of[x] = index_of[rep_of[x]];
  return BraceQuotient{std::move(quotient), std::move(coset_of)};
}

std::vector<std::vector<int>> minimal_prime_ideals(const SkewBrace& b) {
  std::set<std::vector<int>> candidates;
  const FiniteGroup& add = b.additive_group();
  for (int x = 1; x < b.order(); ++x) {
    if (!is_prime(add.element_order(x))) continue;
    std::vector<int> cyc;
    int y = 0;
    do {
      cyc.push_back(y);
      y = add.op(y, x);
    } while (y != 0);
    std::sort(cyc.begin(), cyc.end());
    candidates.insert(std::move(cyc));
  }
  std::vector<std::vector<int>> out;
  for (const auto& cyc : candidates) {
    if (is_ideal(b, cyc)) out.push_back(cyc);
  }
  return out;
}

std::optional<IdealChain> supersolvable_chain(const SkewBrace& b) {
  if (b.order() == 1) {
    return IdealChain{{{0}}, {}};
  }
  for (const auto& ideal : minimal_prime_ideals(b)) {
    const BraceQuotient q = quotient_brace(b, ideal);
    const auto tail = supersolvable_chain(q.brace);
    if (!tail) continue;
    IdealChain chain;
    chain.levels.push_back({0});
    for (const auto& level : tail->levels) {
      std::vector<char> in(q.brace.order(), 0);
      for (int c : level) in[c] = 1;
      std::vector<int> lifted;
      for (int x = 0; x < b.order(); ++x) {
        if (in[q.coset_of[x]]) lifted.push_back(x);
      }
      chain.levels.push_back(std::move(lifted));
    }
    chain.factor_orders.push_back(static_cast<int>(ideal.size()));
    chain.factor_orders.insert(chain.factor_orders.end(), tail->factor_orders.begin(),
                               tail->factor_orders.end());
    return chain;
  }
  return std::nullopt;
}

bool verify_ideal_chain(const SkewBrace& b, const IdealChain& chain) {
  if (chain.levels.empty()) return false;
  if (chain.levels.front() != std::vector<int>{0}) return false;
  if (static_cast<int>(chain.levels.back().size()) != b.order()) return false;
  if (chain.factor_orders.size() + 1 != chain.levels.size()) return false;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    if (!is_ideal(b, chain.levels[i])) return false;
    if (i > 0) {
      const std::size_t prev = chain.levels[i - 1].size();
      const std::size_t cur = chain.levels[i].size();
      if (cur % prev != 0) return false;
      const int factor = static_cast<int>(cur / prev);
      if (factor != chain.factor_orders[i - 1] || !is_prime(factor)) return false;
      if (!std::includes(chain.levels[i].begin(), chain.levels[i].end(),
                         chain.levels[i - 1].begin(), chain.levels[i - 1].end())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace skewlab
