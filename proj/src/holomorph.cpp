#include "skewlab/holomorph.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

#include "skewlab/error.hpp"
#include "skewlab/parallel.hpp"

namespace skewlab {

EngineBudget EngineBudget::from_env() {
  EngineBudget budget;
  auto read = [](const char* var, auto& field) {
    const char* raw = std::getenv(var);
    if (!raw) return;
    try {
      if constexpr (std::is_same_v<std::decay_t<decltype(field)>, double>) {
        field = std::stod(raw);
      } else {
        field = std::stoll(raw);
      }
    } catch (const std::exception&) {
      throw InputError(std::string(var) + " is not a number: " + raw);
    }
  };
  read("SKEWLAB_MAX_HOL_ELEMENTS", budget.max_holomorph_elements);
  read("SKEWLAB_MAX_SEARCH_NODES", budget.max_search_nodes);
  read("SKEWLAB_MAX_SECONDS", budget.max_seconds);
  return budget;
}

// ---- AutomorphismTable ----

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<int>& perm) const {
    std::size_t h = perm.size();
    for (int v : perm) h = h * 1099511628211ULL + static_cast<std::size_t>(v) + 1;
    return h;
  }
};

}  // namespace

struct AutomorphismTable::Data {
  FiniteGroup base;
  std::vector<std::vector<int>> perms;
  std::unordered_map<std::vector<int>, int, PermHash> index;
  std::vector<int> inverse;
  std::vector<int> order;
  // full composition table, precomputed when the count is modest
  std::vector<int> compose_table;
  int size = 0;

  explicit Data(const FiniteGroup& b) : base(b) {}
};

AutomorphismTable::AutomorphismTable(const FiniteGroup& base)
    : d_(std::make_shared<Data>(base)) {
  for (const GroupMap& f : automorphism_group(base)) {
    d_->perms.push_back(f.images());
  }
  d_->size = static_cast<int>(d_->perms.size());
  const int k = d_->size;
  const int n = base.order();
  d_->index.reserve(static_cast<std::size_t>(k) * 2);
  for (int i = 0; i < k; ++i) d_->index.emplace(d_->perms[i], i);
  d_->inverse.resize(k);
  d_->order.resize(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[d_->perms[i][x]] = x;
    const auto it = d_->index.find(inv);
    if (it == d_->index.end()) {
      throw InternalError("automorphism inverse missing from the table");
    }
    d_->inverse[i] = it->second;
    // cycle-length lcm
    std::vector<char> seen(n, 0);
    long long ord = 1;
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      int len = 0, y = x;
      do {
        seen[y] = 1;
        y = d_->perms[i][y];
        ++len;
      } while (y != x);
      ord = std::lcm(ord, static_cast<long long>(len));
    }
    d_->order[i] = static_cast<int>(ord);
  }
  if (k <= 1024) {
    d_->compose_table.assign(static_cast<std::size_t>(k) * k, -1);
    std::vector<int> buffer(n);
    for (int f = 0; f < k; ++f) {
      for (int g = 0; g < k; ++g) {
        for (int x = 0; x < n; ++x) buffer[x] = d_->perms[f][d_->perms[g][x]];
        const auto it = d_->index.find(buffer);
        if (it == d_->index.end()) {
          throw InternalError("automorphism composition missing from the table");
        }
        d_->compose_table[static_cast<std::size_t>(f) * k + g] = it->second;
      }
    }
  }
}

const FiniteGroup& AutomorphismTable::base() const noexcept { return d_->base; }
int AutomorphismTable::size() const noexcept { return d_->size; }
int AutomorphismTable::apply(int f, int x) const { return d_->perms[f][x]; }
const std::vector<int>& AutomorphismTable::perm(int f) const { return d_->perms[f]; }
int AutomorphismTable::inverse(int f) const { return d_->inverse[f]; }
int AutomorphismTable::order_of(int f) const { return d_->order[f]; }

int AutomorphismTable::compose(int f, int g) const {
  if (!d_->compose_table.empty()) {
    return d_->compose_table[static_cast<std::size_t>(f) * d_->size + g];
  }
  const int n = d_->base.order();
  std::vector<int> buffer(n);
  for (int x = 0; x < n; ++x) buffer[x] = d_->perms[f][d_->perms[g][x]];
  const auto it = d_->index.find(buffer);
  if (it == d_->index.end()) {
    throw InternalError("automorphism composition missing from the table");
  }
  return it->second;
}

int AutomorphismTable::index_of(const std::vector<int>& perm) const {
  const auto it = d_->index.find(perm);
  if (it == d_->index.end()) {
    throw InternalError("permutation is not an automorphism in the table");
  }
  return it->second;
}

std::shared_ptr<const AutomorphismTable> make_automorphism_table(const FiniteGroup& base) {
  return std::make_shared<const AutomorphismTable>(base);
}

// ---- HolomorphGroup ----

HolomorphGroup::HolomorphGroup(FiniteGroup base, const EngineBudget& budget)
    : HolomorphGroup(std::move(base), nullptr, budget) {}

HolomorphGroup::HolomorphGroup(FiniteGroup base,
                               std::shared_ptr<const AutomorphismTable> auts,
                               const EngineBudget& budget)
    : base_(std::move(base)), auts_(std::move(auts)) {
  if (!auts_) auts_ = make_automorphism_table(base_);
  if (!auts_->base().same_table(base_)) {
    throw ContractViolation("automorphism table belongs to a different group");
  }
  if (budget.max_holomorph_elements > 0 && size() > budget.max_holomorph_elements) {
    throw ResourceError("holomorph of " + base_.name() + " has " +
                        std::to_string(size()) + " elements, over the budget of " +
                        std::to_string(budget.max_holomorph_elements));
  }
}

const FiniteGroup& HolomorphGroup::base() const noexcept { return base_; }
const AutomorphismTable& HolomorphGroup::auts() const noexcept { return *auts_; }
std::shared_ptr<const AutomorphismTable> HolomorphGroup::auts_ptr() const noexcept {
  return auts_;
}

long long HolomorphGroup::size() const noexcept {
  return static_cast<long long>(base_.order()) * auts_->size();
}

HolomorphElement HolomorphGroup::identity() const noexcept { return {0, 0}; }

HolomorphElement HolomorphGroup::product(const HolomorphElement& a,
                                         const HolomorphElement& b) const {
  return {base_.op(a.x, auts_->apply(a.f, b.x)), auts_->compose(a.f, b.f)};
}

HolomorphElement HolomorphGroup::inverse(const HolomorphElement& a) const {
  const int finv = auts_->inverse(a.f);
  return {auts_->apply(finv, base_.inverse(a.x)), finv};
}

int HolomorphGroup::act(const HolomorphElement& a, int h) const {
  return base_.op(a.x, auts_->apply(a.f, h));
}

std::optional<FiniteGroup> HolomorphGroup::as_finite_group() const {
  if (size() > FiniteGroup::kMaxOrder) return std::nullopt;
  const int s = static_cast<int>(size());
  const int k = auts_->size();
  std::vector<int> table(static_cast<std::size_t>(s) * s);
  for (int i = 0; i < s; ++i) {
    const HolomorphElement a{i / k, i % k};
    for (int j = 0; j < s; ++j) {
      const HolomorphElement b{j / k, j % k};
      const HolomorphElement p = product(a, b);
      table[static_cast<std::size_t>(i) * s + j] = p.x * k + p.f;
    }
  }
  const std::string name = base_.name().empty() ? "" : "Hol(" + base_.name() + ")";
  return FiniteGroup(s, std::move(table), name);
}

HolomorphGroup holomorph(const FiniteGroup& base, const EngineBudget& budget) {
  return HolomorphGroup(base, budget);
}

// ---- LambdaTable ----

LambdaTable::LambdaTable(std::shared_ptr<const AutomorphismTable> auts,
                         std::vector<int> lam)
    : auts_(std::move(auts)), lam_(std::move(lam)) {
  if (!auts_) throw ContractViolation("lambda table needs an automorphism table");
  const FiniteGroup& h = auts_->base();
  const int n = h.order();
  if (static_cast<int>(lam_.size()) != n) {
    throw InputError("lambda table length does not match the group order");
  }
  for (int f : lam_) {
    if (f < 0 || f >= auts_->size()) {
      throw InputError("lambda table entry is not an automorphism index");
    }
  }
  if (lam_[0] != 0) {
    throw InputError("lambda table must send 0 to the identity automorphism");
  }
  // Graph closure: (x, lam x)(y, lam y) = (x∘(lam x)(y), lam x ∘ lam y) must
  // itself lie on the graph.  With lam[0] = identity this makes the graph a
  // regular subgroup of the holomorph.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int z = h.op(x, auts_->apply(lam_[x], y));
      if (lam_[z] != auts_->compose(lam_[x], lam_[y])) {
        throw InputError("lambda table graph is not closed at pair (" +
                         std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
}

const FiniteGroup& LambdaTable::base() const noexcept { return auts_->base(); }
const AutomorphismTable& LambdaTable::auts() const noexcept { return *auts_; }
std::shared_ptr<const AutomorphismTable> LambdaTable::auts_ptr() const noexcept {
  return auts_;
}
const std::vector<int>& LambdaTable::lam() const noexcept { return lam_; }

std::vector<HolomorphElement> LambdaTable::elements() const {
  std::vector<HolomorphElement> out;
  out.reserve(lam_.size());
  for (int x = 0; x < static_cast<int>(lam_.size()); ++x) out.push_back({x, lam_[x]});
  return out;
}

// ---- regularity ----

bool is_regular_subgroup(const HolomorphGroup& hol,
                         const std::vector<HolomorphElement>& elements) {
  const int n = hol.base().order();
  if (elements.empty()) return false;
  std::set<HolomorphElement> members(elements.begin(), elements.end());
  if (static_cast<int>(members.size()) != static_cast<int>(elements.size())) return false;
  if (!members.count(hol.identity())) return false;
  for (const HolomorphElement& a : elements) {
    if (!members.count(hol.inverse(a))) return false;
    for (const HolomorphElement& b : elements) {
      if (!members.count(hol.product(a, b))) return false;
    }
  }
  // Regular = transitive with trivial point stabilizers; both are checked
  // outright rather than inferred from |S| = |H| alone.
  std::vector<int> hits(n, 0);
  for (const HolomorphElement& a : elements) ++hits[hol.act(a, 0)];
  for (int h = 0; h < n; ++h) {
    if (hits[h] == 0) return false;
  }
  for (const HolomorphElement& a : elements) {
    if (a == hol.identity()) continue;
    for (int h = 0; h < n; ++h) {
      if (hol.act(a, h) == h) return false;
    }
  }
  return true;
}

// ---- enumeration ----

namespace {

struct SearchContext {
  const FiniteGroup& h;
  const AutomorphismTable& auts;
  std::vector<int> ranked;                     // branch order over 1..n-1
  std::vector<std::vector<int>> candidates;    // per element: admissible aut indices
  std::atomic<long long>* nodes = nullptr;
  long long node_cap = 0;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
};

struct SearchState {
  std::vector<int> lam;       // -1 = unassigned
  std::vector<int> assigned;  // elements in assignment order
};

// Order of (x, f) in the holomorph: ord(f) times the order of the base part
// of (x, f)^ord(f), which telescopes to x∘f(x)∘f²(x)∘...
int holomorph_element_order(const FiniteGroup& h, const AutomorphismTable& auts,
                            int x, int f) {
  const int of = auts.order_of(f);
  int acc = x, fx = x;
  for (int i = 1; i < of; ++i) {
    fx = auts.apply(f, fx);
    acc = h.op(acc, fx);
  }
  return of * h.element_order(acc);
}

// Forces every product implied by the newly assigned elements.  Returns
// false on a clash.  On success the assigned set is closed under the graph
// product, so its size must divide |H|.
bool propagate(const SearchContext& ctx, SearchState& state, std::vector<int> queue) {
  const FiniteGroup& h = ctx.h;
  while (!queue.empty()) {
    const int u = queue.back();
    queue.pop_back();
    const std::size_t snapshot = state.assigned.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const int v = state.assigned[i];
      const int pair[2][2] = {{u, v}, {v, u}};
      for (const auto& p : pair) {
        const int a = p[0], b = p[1];
        const int z = h.op(a, ctx.auts.apply(state.lam[a], b));
        const int fz = ctx.auts.compose(state.lam[a], state.lam[b]);
        if (state.lam[z] < 0) {
          state.lam[z] = fz;
          state.assigned.push_back(z);
          queue.push_back(z);
        } else if (state.lam[z] != fz) {
          return false;
        }
      }
    }
  }
  return h.order() % static_cast<int>(state.assigned.size()) == 0;
}

void search(const SearchContext& ctx, SearchState& state,
            std::vector<std::vector<int>>& solutions) {
  if (ctx.nodes) {
    const long long seen = ctx.nodes->fetch_add(1) + 1;
    if (ctx.node_cap > 0 && seen > ctx.node_cap) {
      throw ResourceError("enumeration exceeded the search node budget of " +
                          std::to_string(ctx.node_cap));
    }
    if (ctx.has_deadline && (seen & 1023) == 0 &&
        std::chrono::steady_clock::now() > ctx.deadline) {
      throw ResourceError("enumeration exceeded the wall clock budget");
    }
  }
  int next = -1;
  for (int x : ctx.ranked) {
    if (state.lam[x] < 0) {
      next = x;
      break;
    }
  }
  if (next < 0) {
    solutions.push_back(state.lam);
    return;
  }
  for (int f : ctx.candidates[next]) {
    SearchState copy = state;
    copy.lam[next] = f;
    copy.assigned.push_back(next);
    if (propagate(ctx, copy, {next})) {
      search(ctx, copy, solutions);
    }
  }
}

SearchContext build_context(const HolomorphGroup& hol) {
  const FiniteGroup& h = hol.base();
  const AutomorphismTable& auts = hol.auts();
  SearchContext ctx{h, auts, {}, {}, nullptr, 0, {}, false};
  ctx.ranked.resize(h.order() - 1);
  std::iota(ctx.ranked.begin(), ctx.ranked.end(), 1);
  std::sort(ctx.ranked.begin(), ctx.ranked.end(), [&](int a, int b) {
    if (h.element_order(a) != h.element_order(b)) {
      return h.element_order(a) < h.element_order(b);
    }
    return a < b;
  });
  // (x, f) can only sit in a subgroup of order |H| if its element order
  // divides |H|; precompute the admissible automorphisms per element.
  std::vector<int> aut_ok;
  for (int f = 0; f < auts.size(); ++f) {
    if (h.order() % auts.order_of(f) == 0) aut_ok.push_back(f);
  }
  ctx.candidates.resize(h.order());
  for (int x = 1; x < h.order(); ++x) {
    for (int f : aut_ok) {
      if (h.order() % holomorph_element_order(h, auts, x, f) == 0) {
        ctx.candidates[x].push_back(f);
      }
    }
  }
  return ctx;
}

}  // namespace

std::vector<LambdaTable> enumerate_regular_subgroups(const HolomorphGroup& hol,
                                                     const EngineBudget& budget,
                                                     int workers) {
  const FiniteGroup& h = hol.base();
  SearchContext ctx = build_context(hol);
  std::atomic<long long> nodes{0};
  ctx.nodes = &nodes;
  ctx.node_cap = budget.max_search_nodes;
  if (budget.max_seconds > 0) {
    ctx.has_deadline = true;
    ctx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(budget.max_seconds));
  }
  std::vector<std::vector<int>> all;
  if (h.order() == 1) {
    all.push_back({0});
  } else {
    SearchState root;
    root.lam.assign(h.order(), -1);
    root.lam[0] = 0;
    root.assigned.push_back(0);
    const int first = ctx.ranked.front();
    const std::vector<int>& first_candidates = ctx.candidates[first];
    if (workers <= 1 || first_candidates.size() <= 1) {
      search(ctx, root, all);
    } else {
      // split at the root branch; merging in candidate order reproduces the
      // serial traversal order exactly
      auto chunks = parallel_map<std::vector<std::vector<int>>>(
          first_candidates.size(), workers, [&](std::size_t i) {
            std::vector<std::vector<int>> local;
            SearchState copy = root;
            copy.lam[first] = first_candidates[i];
            copy.assigned.push_back(first);
            if (propagate(ctx, copy, {first})) {
              search(ctx, copy, local);
            }
            return local;
          });
      for (auto& chunk : chunks) {
        for (auto& lam : chunk) all.push_back(std::move(lam));
      }
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<LambdaTable> out;
  out.reserve(all.size());
  for (auto& lam : all) {
    out.emplace_back(hol.auts_ptr(), std::move(lam));
  }
  return out;
}

std::vector<LambdaTable> enumerate_regular_subgroups(const FiniteGroup& base,
                                                     const EngineBudget& budget,
                                                     int workers) {
  return enumerate_regular_subgroups(HolomorphGroup(base, budget), budget, workers);
}

// ---- brute-force oracle ----

std::vector<LambdaTable> brute_force_regular_subgroups(const HolomorphGroup& hol) {
  constexpr int kOracleBound = 512;
  if (hol.size() > kOracleBound) {
    throw ResourceError("oracle requires |Hol| <= 512, got " +
                        std::to_string(hol.size()));
  }
  const int s = static_cast<int>(hol.size());
  const int k = hol.auts().size();
  const int n = hol.base().order();
  std::vector<int> table(static_cast<std::size_t>(s) * s);
  for (int i = 0; i < s; ++i) {
    const HolomorphElement a{i / k, i % k};
    for (int j = 0; j < s; ++j) {
      const HolomorphElement b{j / k, j % k};
      const HolomorphElement p = hol.product(a, b);
      table[static_cast<std::size_t>(i) * s + j] = p.x * k + p.f;
    }
  }
  // Bottom-up subgroup walk keeping only orders that divide |H|; every
  // subgroup of an order-|H| subgroup shows up along some one-generator
  // extension chain, so the walk reaches all of them.
  auto grow = [&](const std::vector<int>& sub, int extra) -> std::optional<std::vector<int>> {
    std::bitset<kOracleBound> in;
    std::vector<int> elems = sub;
    for (int e : elems) in.set(e);
    std::vector<int> queue{extra};
    elems.push_back(extra);
    in.set(extra);
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      const std::size_t snapshot = elems.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        for (int z : {table[static_cast<std::size_t>(x) * s + elems[i]],
                      table[static_cast<std::size_t>(elems[i]) * s + x]}) {
          if (!in.test(z)) {
            if (static_cast<int>(elems.size()) >= n) return std::nullopt;
            in.set(z);
            elems.push_back(z);
            queue.push_back(z);
          }
        }
      }
    }
    if (n % static_cast<int>(elems.size()) != 0) return std::nullopt;
    std::sort(elems.begin(), elems.end());
    return elems;
  };
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  queue.push_back({0});
  seen.insert(queue.front());
  std::vector<std::vector<int>> full;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> current = queue[head];
    if (static_cast<int>(current.size()) == n) {
      full.push_back(current);
      continue;
    }
    std::bitset<kOracleBound> in;
    for (int e : current) in.set(e);
    for (int x = 0; x < s; ++x) {
      if (in.test(x)) continue;
      auto bigger = grow(current, x);
      if (bigger && seen.insert(*bigger).second) {
        queue.push_back(std::move(*bigger));
      }
    }
  }
  std::vector<std::vector<int>> lams;
  for (const auto& sub : full) {
    // order |H| makes regular equivalent to transitive on the base, and the
    // orbit of 0 under (x, f) is just the x-parts
    std::vector<int> lam(n, -1);
    bool regular = true;
    for (int e : sub) {
      const int x = e / k;
      if (lam[x] != -1) {
        regular = false;
        break;
      }
      lam[x] = e % k;
    }
    if (regular) lams.push_back(std::move(lam));
  }
  std::sort(lams.begin(), lams.end());
  std::vector<LambdaTable> out;
  out.reserve(lams.size());
  for (auto& lam : lams) out.emplace_back(hol.auts_ptr(), std::move(lam));
  return out;
}

// ---- conjugacy dedupe ----

std::vector<LambdaTable> dedupe_by_aut_conjugacy(const std::vector<LambdaTable>& tables) {
  if (tables.empty()) return {};
  const auto auts = tables.front().auts_ptr();
  for (const LambdaTable& t : tables) {
    if (!t.base().same_table(tables.front().base())) {
      throw ContractViolation("lambda tables come from different base groups");
    }
  }
  const int n = tables.front().base().order();
  const int k = auts->size();
  std::set<std::vector<int>> reps;
  for (const LambdaTable& t : tables) {
    // conjugating the graph by (0, g) sends (x, f) to (g(x), g∘f∘g⁻¹)
    std::vector<int> best = t.lam();
    for (int g = 0; g < k; ++g) {
      const int ginv = auts->inverse(g);
      std::vector<int> moved(n);
      for (int x = 0; x < n; ++x) {
        moved[auts->apply(g, x)] = auts->compose(g, auts->compose(t.lam()[x], ginv));
      }
      if (moved < best) best = std::move(moved);
    }
    reps.insert(std::move(best));
  }
  std::vector<LambdaTable> out;
  for (const auto& lam : reps) out.emplace_back(auts, lam);
  return out;
}

}  // namespace skewlab
