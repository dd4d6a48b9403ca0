#include "skewlab/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

struct FiniteGroup::Data {
  int order = 0;
  std::vector<int> table;      // row-major, order * order
  std::vector<int> inverse;    // per element
  std::vector<int> elt_order;  // per element
  std::string name;
};

namespace {

std::string triple_text(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::shared_ptr<const FiniteGroup::Data> validate_table(int order,
                                                        std::vector<int> table,
                                                        std::string name) {
  if (order < 1 || order > FiniteGroup::kMaxOrder) {
    throw InputError("group order " + std::to_string(order) +
                     " outside supported range 1.." +
                     std::to_string(FiniteGroup::kMaxOrder));
  }
  const std::size_t n = static_cast<std::size_t>(order);
  if (table.size() != n * n) {
    throw InputError("Cayley table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= order) {
      throw InputError("Cayley table entry out of range at position " +
                       std::to_string(i) + ": " + std::to_string(table[i]));
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw InputError("element 0 is not a two-sided identity at element " +
                       std::to_string(a));
    }
  }
  // Latin square: every row and column is a permutation.
  for (int a = 0; a < order; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < order; ++b) {
      if (row[at(a, b)]++) {
        throw InputError("row " + std::to_string(a) +
                         " repeats value " + std::to_string(at(a, b)));
      }
      if (col[at(b, a)]++) {
        throw InputError("column " + std::to_string(a) +
                         " repeats value " + std::to_string(at(b, a)));
      }
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < order; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw InputError("not associative at triple " + triple_text(a, b, c));
        }
      }
    }
  }
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = order;
  data->name = std::move(name);
  data->inverse.assign(n, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (at(a, b) == 0) {
        data->inverse[a] = b;
        break;
      }
    }
    if (data->inverse[a] < 0) {
      throw InputError("element " + std::to_string(a) + " has no inverse");
    }
  }
  data->elt_order.assign(n, 0);
  for (int a = 0; a < order; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = at(x, a);
      ++k;
    }
    data->elt_order[a] = k;
  }
  data->table = std::move(table);
  return data;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> flat_table, std::string name)
    : d_(validate_table(order, std::move(flat_table), std::move(name))) {}

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table, std::string name) {
  std::vector<int> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) {
    if (row.size() != table.size()) {
      throw InputError("Cayley table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  d_ = validate_table(static_cast<int>(table.size()), std::move(flat), std::move(name));
}

int FiniteGroup::order() const noexcept { return d_->order; }
const std::string& FiniteGroup::name() const noexcept { return d_->name; }

FiniteGroup FiniteGroup::with_name(std::string name) const {
  FiniteGroup copy = *this;
  auto data = std::make_shared<Data>(*d_);
  data->name = std::move(name);
  copy.d_ = std::move(data);
  return copy;
}

int FiniteGroup::op(int a, int b) const {
  return d_->table[static_cast<std::size_t>(a) * d_->order + b];
}

int FiniteGroup::inverse(int a) const { return d_->inverse[a]; }
int FiniteGroup::element_order(int a) const { return d_->elt_order[a]; }

int FiniteGroup::power(int a, long long k) const {
  const int m = element_order(a);
  long long r = k % m;
  if (r < 0) r += m;
  int acc = 0;
  for (long long i = 0; i < r; ++i) acc = op(acc, a);
  return acc;
}

int FiniteGroup::conjugate(int g, int a) const { return op(op(g, a), inverse(g)); }

int FiniteGroup::commutator(int a, int b) const {
  return op(op(a, b), op(inverse(a), inverse(b)));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

const std::vector<int>& FiniteGroup::flat_table() const noexcept { return d_->table; }

std::vector<std::pair<int, int>> FiniteGroup::order_profile() const {
  std::map<int, int> counts;
  for (int a = 0; a < order(); ++a) ++counts[element_order(a)];
  return {counts.begin(), counts.end()};
}

std::vector<int> FiniteGroup::conjugacy_class_sizes() const {
  std::vector<char> seen(order(), 0);
  std::vector<int> sizes;
  for (int a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    int size = 0;
    for (int g = 0; g < order(); ++g) {
      const int c = conjugate(g, a);
      if (!seen[c]) {
        seen[c] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return d_ == other.d_ ||
         (d_->order == other.d_->order && d_->table == other.d_->table);
}

// ---- Subgroup ----

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) {
    throw InputError("subgroup must contain the identity");
  }
  if (elements_.back() >= parent_.order()) {
    throw InputError("subgroup element out of range: " +
                     std::to_string(elements_.back()));
  }
  std::vector<char> in(parent_.order(), 0);
  for (int x : elements_) in[x] = 1;
  for (int a : elements_) {
    if (!in[parent_.inverse(a)]) {
      throw InputError("subgroup not closed under inverse at element " +
                       std::to_string(a));
    }
    for (int b : elements_) {
      if (!in[parent_.op(a, b)]) {
        throw InputError("subgroup not closed under product at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  if (parent_.order() % static_cast<int>(elements_.size()) != 0) {
    throw InternalError("subgroup order does not divide group order");
  }
}

const FiniteGroup& Subgroup::parent() const noexcept { return parent_; }
const std::vector<int>& Subgroup::elements() const noexcept { return elements_; }
int Subgroup::order() const noexcept { return static_cast<int>(elements_.size()); }

bool Subgroup::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

int Subgroup::index() const { return parent_.order() / order(); }

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_.order(); ++g) {
    for (int s : elements_) {
      if (!contains(parent_.conjugate(g, s))) return false;
    }
  }
  return true;
}

bool Subgroup::is_trivial() const { return order() == 1; }
bool Subgroup::is_whole_group() const { return order() == parent_.order(); }

FiniteGroup Subgroup::to_group(std::string name) const {
  std::vector<int> pos(parent_.order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) pos[elements_[i]] = static_cast<int>(i);
  const int k = order();
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<std::size_t>(i) * k + j] = pos[parent_.op(elements_[i], elements_[j])];
    }
  }
  if (name.empty() && !parent_.name().empty()) {
    name = parent_.name() + "-sub" + std::to_string(k);
  }
  return FiniteGroup(k, std::move(table), std::move(name));
}

// ---- GroupMap ----

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.order()) {
    throw InputError("map image list has wrong length");
  }
  for (int v : images_) {
    if (v < 0 || v >= target_.order()) {
      throw InputError("map image out of range: " + std::to_string(v));
    }
  }
  if (images_[0] != 0) {
    throw InputError("map does not send identity to identity");
  }
  for (int a = 0; a < source_.order(); ++a) {
    for (int b = 0; b < source_.order(); ++b) {
      if (images_[source_.op(a, b)] != target_.op(images_[a], images_[b])) {
        throw InputError("not a homomorphism at pair (" + std::to_string(a) +
                         ", " + std::to_string(b) + ")");
      }
    }
  }
}

const FiniteGroup& GroupMap::source() const noexcept { return source_; }
const FiniteGroup& GroupMap::target() const noexcept { return target_; }
const std::vector<int>& GroupMap::images() const noexcept { return images_; }
int GroupMap::operator()(int x) const { return images_[x]; }

bool GroupMap::is_injective() const {
  std::vector<char> used(target_.order(), 0);
  for (int v : images_) {
    if (used[v]++) return false;
  }
  return true;
}

bool GroupMap::is_bijective() const {
  return source_.order() == target_.order() && is_injective();
}

// ---- subgroup operations ----

namespace {

// Product closure; inverses come along because the group is finite.
std::vector<int> closure_elements(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
      return true;
    }
    return false;
  };
  add(0);
  std::vector<int> queue;
  for (int x : generators) {
    if (x < 0 || x >= g.order()) {
      throw InputError("generator out of range: " + std::to_string(x));
    }
    if (add(x)) queue.push_back(x);
  }
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    const std::size_t snapshot = elems.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const int y = elems[i];
      if (add(g.op(x, y))) queue.push_back(g.op(x, y));
      if (add(g.op(y, x))) queue.push_back(g.op(y, x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> normalizer_elements(const FiniteGroup& g, const std::vector<int>& sub) {
  std::vector<char> in(g.order(), 0);
  for (int s : sub) in[s] = 1;
  std::vector<int> result;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : sub) {
      if (!in[g.conjugate(x, s)]) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(x);
  }
  return result;
}

}  // namespace

Subgroup closure(const FiniteGroup& g, const std::vector<int>& generators) {
  return Subgroup(g, closure_elements(g, generators));
}

namespace {

std::vector<int> derived_of(const FiniteGroup& g, const std::vector<int>& sub) {
  std::vector<int> gens;
  for (int a : sub) {
    for (int b : sub) {
      gens.push_back(g.commutator(a, b));
    }
  }
  return closure_elements(g, gens);
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, derived_of(g, all));
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  std::vector<int> current(g.order());
  std::iota(current.begin(), current.end(), 0);
  series.emplace_back(g, current);
  while (true) {
    std::vector<int> next = derived_of(g, current);
    if (next == current) break;
    series.emplace_back(g, next);
    current = std::move(next);
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) {
  return derived_series(g).back().order() == 1;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> elems;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order(); ++b) {
      if (g.op(a, b) != g.op(b, a)) {
        central = false;
        break;
      }
    }
    if (central) elems.push_back(a);
  }
  return Subgroup(g, elems);
}

Subgroup sylow(const FiniteGroup& g, int p) {
  if (!is_prime(p)) {
    throw ContractViolation("sylow requires a prime, got " + std::to_string(p));
  }
  if (g.order() % p != 0) {
    throw ContractViolation("sylow requires p to divide the group order");
  }
  const int target = p_part(g.order(), p);
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < target) {
    const int want = static_cast<int>(current.size()) * p;
    std::vector<char> in(g.order(), 0);
    for (int s : current) in[s] = 1;
    bool extended = false;
    for (int y : normalizer_elements(g, current)) {
      if (in[y]) continue;
      std::vector<int> gens = current;
      gens.push_back(y);
      std::vector<int> bigger = closure_elements(g, gens);
      if (static_cast<int>(bigger.size()) == want) {
        current = std::move(bigger);
        extended = true;
        break;
      }
    }
    if (!extended) {
      throw InternalError("sylow extension step found no enlargement");
    }
  }
  return Subgroup(g, current);
}

namespace {

// Largest normal p-subgroup: intersection of all conjugates of one Sylow p.
std::vector<int> p_core(const FiniteGroup& g, int p) {
  if (g.order() % p != 0) return {0};
  const Subgroup syl = sylow(g, p);
  std::vector<char> keep(g.order(), 0);
  for (int s : syl.elements()) keep[s] = 1;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<char> conj(g.order(), 0);
    for (int s : syl.elements()) conj[g.conjugate(x, s)] = 1;
    for (int e = 0; e < g.order(); ++e) keep[e] = keep[e] && conj[e];
  }
  std::vector<int> elems;
  for (int e = 0; e < g.order(); ++e) {
    if (keep[e]) elems.push_back(e);
  }
  return elems;
}

}  // namespace

Subgroup fitting(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int p : prime_divisors(g.order())) {
    for (int e : p_core(g, p)) gens.push_back(e);
  }
  return Subgroup(g, closure_elements(g, gens));
}

std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  queue.push_back({0});
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> current = queue[head];
    if (static_cast<int>(current.size()) == g.order()) continue;
    std::vector<char> in(g.order(), 0);
    for (int s : current) in[s] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> gens = current;
      gens.push_back(x);
      std::vector<int> bigger = closure_elements(g, gens);
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---- predicates ----

bool is_cyclic(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == g.order()) return true;
  }
  return false;
}

bool is_z_group(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    if (!is_cyclic(sylow(g, p).to_group())) return false;
  }
  return true;
}

bool is_almost_sylow_cyclic(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    const Subgroup s = sylow(g, p);
    if (p != 2) {
      if (!is_cyclic(s.to_group())) return false;
      continue;
    }
    if (s.order() == 1) continue;
    // cyclic subgroup of index at most 2 inside the Sylow 2-subgroup
    const FiniteGroup s2 = s.to_group();
    bool ok = false;
    for (int a = 0; a < s2.order(); ++a) {
      if (2 * s2.element_order(a) >= s2.order()) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    if (!sylow(g, p).is_normal()) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> prime_order_normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  for (int x = 1; x < g.order(); ++x) {
    if (!is_prime(g.element_order(x))) continue;
    std::vector<int> cyc;
    int y = 0;
    do {
      cyc.push_back(y);
      y = g.op(y, x);
    } while (y != 0);
    std::sort(cyc.begin(), cyc.end());
    seen.insert(std::move(cyc));
  }
  std::vector<std::vector<int>> result;
  for (const auto& cyc : seen) {
    bool normal = true;
    std::vector<char> in(g.order(), 0);
    for (int s : cyc) in[s] = 1;
    for (int t = 0; t < g.order() && normal; ++t) {
      for (int s : cyc) {
        if (!in[g.conjugate(t, s)]) {
          normal = false;
          break;
        }
      }
    }
    if (normal) result.push_back(cyc);
  }
  return result;
}

// Memo keyed by isomorphism class; guards concurrent sweep workers.
struct SupersolvableCache {
  std::mutex mu;
  std::vector<std::pair<FiniteGroup, bool>> entries;
};

SupersolvableCache& supersolvable_cache() {
  static SupersolvableCache cache;
  return cache;
}

}  // namespace

bool is_supersolvable_group(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  auto& cache = supersolvable_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    for (const auto& [known, verdict] : cache.entries) {
      if (known.order() == g.order() && is_isomorphic(known, g)) return verdict;
    }
  }
  bool verdict = false;
  for (const auto& n : prime_order_normal_subgroups(g)) {
    const QuotientGroup q = quotient_group(g, Subgroup(g, n));
    if (is_supersolvable_group(q.group)) {
      verdict = true;
      break;
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.entries.emplace_back(g, verdict);
  }
  return verdict;
}

bool has_normal_p_complement(const FiniteGroup& g, int p) {
  if (!is_prime(p)) {
    throw ContractViolation("has_normal_p_complement requires a prime");
  }
  const int m = g.order() / p_part(g.order(), p);
  std::vector<int> candidate;
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) % p != 0) candidate.push_back(x);
  }
  if (static_cast<int>(candidate.size()) != m) return false;
  std::vector<char> in(g.order(), 0);
  for (int x : candidate) in[x] = 1;
  for (int a : candidate) {
    for (int b : candidate) {
      if (!in[g.op(a, b)]) return false;
    }
  }
  // A subgroup that is exactly the set of p'-elements is conjugation-stable.
  return true;
}

bool is_characteristic(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_table(g)) {
    throw ContractViolation("subgroup does not belong to the given group");
  }
  for (const GroupMap& f : automorphism_group(g)) {
    for (int x : s.elements()) {
      if (!s.contains(f(x))) return false;
    }
  }
  return true;
}

// ---- quotient ----

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_table(g)) {
    throw ContractViolation("subgroup does not belong to the given group");
  }
  if (!s.is_normal()) {
    throw ContractViolation("quotient requires a normal subgroup");
  }
  const int n = g.order();
  std::vector<int> rep_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int h : s.elements()) rep = std::min(rep, g.op(x, h));
    rep_of[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep_of[x] == x) reps.push_back(x);
  }
  std::vector<int> index_of(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);
  const int k = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<std::size_t>(i) * k + j] = index_of[rep_of[g.op(reps[i], reps[j])]];
    }
  }
  std::string qname = g.name().empty() ? "" : g.name() + "/" + std::to_string(s.order());
  FiniteGroup quotient(k, std::move(table), std::move(qname));
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = index_of[rep_of[x]];
  GroupMap projection(g, quotient, std::move(proj));
  return QuotientGroup{std::move(quotient), std::move(projection)};
}

// ---- arithmetic ----

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return out;
}

int p_part(int n, int p) {
  int pk = 1;
  while (n % p == 0) {
    pk *= p;
    n /= p;
  }
  return pk;
}

}  // namespace skewlab
