#include <algorithm>
#include <numeric>
#include <set>

#include "skewlab/error.hpp"
#include "skewlab/group.hpp"

// Isomorphism testing and automorphism enumeration via backtracking over the
// images of a short generating sequence.  Partial maps are grown with a
// paired-closure propagation that checks multiplicativity and injectivity as
// it goes, so dead branches are cut early.

namespace skewlab {
namespace {

std::vector<int> closure_raw(const FiniteGroup& g, std::vector<int> elems,
                             std::vector<char>& in, int extra) {
  // elems must already be closed; returns closure(elems + extra) and updates in.
  std::vector<int> queue{extra};
  elems.push_back(extra);
  in[extra] = 1;
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    const std::size_t snapshot = elems.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (int z : {g.op(x, elems[i]), g.op(elems[i], x)}) {
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return elems;
}

}  // namespace

// Greedy generating sequence: each step adds the element whose closure with
// the current subgroup is largest (ties to the smallest index).
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> current{0};
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  while (static_cast<int>(current.size()) < g.order()) {
    int best = -1;
    std::size_t best_size = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<char> trial_in = in;
      const std::vector<int> trial = closure_raw(g, current, trial_in, x);
      if (trial.size() > best_size) {
        best_size = trial.size();
        best = x;
      }
    }
    gens.push_back(best);
    current = closure_raw(g, current, in, best);
  }
  return gens;
}

namespace {

std::vector<int> per_element_class_size(const FiniteGroup& g) {
  std::vector<int> size(g.order(), 0);
  std::vector<char> seen(g.order(), 0);
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
      const int c = g.conjugate(x, a);
      if (!seen[c]) {
        seen[c] = 1;
        members.push_back(c);
      }
    }
    for (int m : members) size[m] = static_cast<int>(members.size());
  }
  return size;
}

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<int> gens;
  std::vector<int> class_a;
  std::vector<int> class_b;
  bool collect_all = false;

  std::vector<int> img;
  std::vector<char> used;
  std::vector<int> assigned;
  std::vector<std::vector<int>> solutions;
  bool done = false;

  IsoSearch(const FiniteGroup& a_, const FiniteGroup& b_, bool all)
      : a(a_), b(b_), collect_all(all) {
    gens = generating_sequence(a);
    class_a = per_element_class_size(a);
    class_b = per_element_class_size(b);
    img.assign(a.order(), -1);
    used.assign(b.order(), 0);
    img[0] = 0;
    used[0] = 1;
    assigned.push_back(0);
  }

  // Adds x -> y and propagates forced images; appends every new assignment
  // to trail for rollback.  Returns false on any clash.
  bool extend(int x, int y, std::vector<int>& trail) {
    if (used[y]) return false;
    img[x] = y;
    used[y] = 1;
    assigned.push_back(x);
    trail.push_back(x);
    std::vector<int> queue{x};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      const std::size_t snapshot = assigned.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        const int v = assigned[i];
        const int pa[2] = {a.op(u, v), a.op(v, u)};
        const int pb[2] = {b.op(img[u], img[v]), b.op(img[v], img[u])};
        for (int k = 0; k < 2; ++k) {
          const int za = pa[k], zb = pb[k];
          if (img[za] < 0) {
            if (used[zb]) return false;
            img[za] = zb;
            used[zb] = 1;
            assigned.push_back(za);
            trail.push_back(za);
            queue.push_back(za);
          } else if (img[za] != zb) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void rollback(const std::vector<int>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      used[img[*it]] = 0;
      img[*it] = -1;
      assigned.pop_back();
    }
  }

  void dfs(std::size_t level) {
    if (done) return;
    if (level == gens.size()) {
      if (static_cast<int>(assigned.size()) != a.order()) {
        throw InternalError("generating sequence did not close the group");
      }
      solutions.push_back(img);
      if (!collect_all) done = true;
      return;
    }
    const int x = gens[level];
    for (int y = 0; y < b.order(); ++y) {
      if (used[y]) continue;
      if (a.element_order(x) != b.element_order(y)) continue;
      if (class_a[x] != class_b[y]) continue;
      std::vector<int> trail;
      if (extend(x, y, trail)) {
        dfs(level + 1);
      }
      rollback(trail);
      if (done) return;
    }
  }
};

bool invariants_match(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && a.is_abelian() == b.is_abelian() &&
         a.order_profile() == b.order_profile() &&
         a.conjugacy_class_sizes() == b.conjugacy_class_sizes();
}

}  // namespace

std::optional<GroupMap> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (!invariants_match(a, b)) return std::nullopt;
  if (a.same_table(b)) {
    std::vector<int> id(a.order());
    std::iota(id.begin(), id.end(), 0);
    return GroupMap(a, b, std::move(id));
  }
  IsoSearch search(a, b, false);
  search.dfs(0);
  if (search.solutions.empty()) return std::nullopt;
  return GroupMap(a, b, std::move(search.solutions.front()));
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.same_table(b)) return true;
  return find_isomorphism(a, b).has_value();
}

std::vector<GroupMap> automorphism_group(const FiniteGroup& g) {
  IsoSearch search(g, g, true);
  search.dfs(0);
  std::sort(search.solutions.begin(), search.solutions.end());
  // The identity image list is lexicographically least among permutations,
  // so after sorting it must sit at index 0.
  if (search.solutions.empty()) {
    throw InternalError("automorphism search lost the identity map");
  }
  for (int i = 0; i < g.order(); ++i) {
    if (search.solutions.front()[i] != i) {
      throw InternalError("automorphism search lost the identity map");
    }
  }
  if (search.solutions.size() <= 512) {
    std::set<std::vector<int>> known(search.solutions.begin(), search.solutions.end());
    for (const auto& f : search.solutions) {
      for (const auto& h : search.solutions) {
        std::vector<int> composed(g.order());
        for (int x = 0; x < g.order(); ++x) composed[x] = f[h[x]];
        if (!known.count(composed)) {
          throw InternalError("automorphism set not closed under composition");
        }
      }
    }
  }
  std::vector<GroupMap> out;
  out.reserve(search.solutions.size());
  for (auto& images : search.solutions) {
    out.emplace_back(g, g, std::move(images));
  }
  return out;
}

namespace {

// Like IsoSearch but without the injectivity constraint: enumerates every
// homomorphism by branching over generator images.
struct HomSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<int> gens;
  std::vector<int> img;
  std::vector<int> assigned;
  std::vector<std::vector<int>> solutions;

  HomSearch(const FiniteGroup& a_, const FiniteGroup& b_) : a(a_), b(b_) {
    gens = generating_sequence(a);
    img.assign(a.order(), -1);
    img[0] = 0;
    assigned.push_back(0);
  }

  bool extend(int x, int y, std::vector<int>& trail) {
    img[x] = y;
    assigned.push_back(x);
    trail.push_back(x);
    std::vector<int> queue{x};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      const std::size_t snapshot = assigned.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        const int v = assigned[i];
        const int pa[2] = {a.op(u, v), a.op(v, u)};
        const int pb[2] = {b.op(img[u], img[v]), b.op(img[v], img[u])};
        for (int k = 0; k < 2; ++k) {
          if (img[pa[k]] < 0) {
            img[pa[k]] = pb[k];
            assigned.push_back(pa[k]);
            trail.push_back(pa[k]);
            queue.push_back(pa[k]);
          } else if (img[pa[k]] != pb[k]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void rollback(const std::vector<int>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      img[*it] = -1;
      assigned.pop_back();
    }
  }

  void dfs(std::size_t level) {
    if (level == gens.size()) {
      if (static_cast<int>(assigned.size()) != a.order()) {
        throw InternalError("generating sequence did not close the group");
      }
      solutions.push_back(img);
      return;
    }
    const int x = gens[level];
    for (int y = 0; y < b.order(); ++y) {
      if (a.element_order(x) % b.element_order(y) != 0) continue;
      std::vector<int> trail;
      if (extend(x, y, trail)) dfs(level + 1);
      rollback(trail);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& source,
                                                const FiniteGroup& target) {
  HomSearch search(source, target);
  search.dfs(0);
  std::sort(search.solutions.begin(), search.solutions.end());
  return search.solutions;
}

}  // namespace skewlab
