#include "raatc/clique.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace raatc {

bool CliqueTuple::valid_for(const Graph& g) const {
  if (cliques.empty()) return false;
  VertexSet common = g.vertex_mask();
  int sum = 0;
  for (VertexSet c : cliques) {
    if ((c & ~g.vertex_mask()) != 0) return false;
    if (!g.is_clique(c)) return false;
    common &= c;
    sum += set_size(c);
  }
  return common == 0 && sum == total;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of p|x with most neighbors in p
  int pivot = -1, best = -1;
  for (VertexSet cand = p | x; cand;) {
    int u = std::countr_zero(cand);
    cand &= cand - 1;
    int deg = set_size(g.neighbors(u) & p);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  VertexSet ext = p & ~g.neighbors(pivot);
  while (ext) {
    int v = std::countr_zero(ext);
    ext &= ext - 1;
    VertexSet vb = VertexSet{1} << v;
    bron_kerbosch(g, r | vb, p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~vb;
    x |= vb;
  }
}

bool member_list_less(VertexSet a, VertexSet b) {
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.num_vertices() == 0) return out;
  bron_kerbosch(g, 0, g.vertex_mask(), 0, out);
  std::sort(out.begin(), out.end(), member_list_less);
  return out;
}

std::vector<VertexSet> all_cliques(const Graph& g) {
  std::set<VertexSet> seen;
  seen.insert(0);
  for (VertexSet m : maximal_cliques(g)) {
    // all submasks of m
    VertexSet s = m;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & m;
    }
  }
  return {seen.begin(), seen.end()};
}

int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet m : maximal_cliques(g)) best = std::max(best, set_size(m));
  return best;
}

bool has_two_disjoint_max_cliques(const Graph& g) {
  const int c = clique_number(g);
  if (c == 0) return false;
  std::vector<VertexSet> maxima;
  for (VertexSet m : maximal_cliques(g))
    if (set_size(m) == c) maxima.push_back(m);
  for (size_t i = 0; i < maxima.size(); ++i)
    for (size_t j = i + 1; j < maxima.size(); ++j)
      if ((maxima[i] & maxima[j]) == 0) return true;
  return false;
}

namespace {

// z_r reduces to choosing a multiset of r maximal cliques: any optimal
// tuple extends member-wise into maximal cliques M_1..M_r, and a multiset
// with per-vertex coverage cov_v scores exactly sum_v min(cov_v, r-1)
// after trimming over-covered vertices (trimmed members are still
// cliques, and the cap cov <= r-1 is exactly the empty-intersection
// constraint). See docs/algorithms.md for the full argument.
struct MultisetSearch {
  const std::vector<VertexSet>& cliques;
  int r;
  int best = 0;
  std::vector<int> cov;

  MultisetSearch(const std::vector<VertexSet>& mc, int n, int r)
      : cliques(mc), r(r), cov(n, 0) {}

  void run(size_t idx, int slots, int value) {
    if (slots == 0 || idx == cliques.size()) {
      best = std::max(best, value);
      return;
    }
    // cliques sorted by descending size: each remaining slot adds at most
    // |cliques[idx]| new coverage
    if (value + slots * set_size(cliques[idx]) <= best) return;
    for (int k = slots; k >= 0; --k) {
      int delta = 0;
      VertexSet m = cliques[idx];
      std::vector<int> members = set_members(m);
      for (int v : members) {
        delta += std::min(cov[v] + k, r - 1) - std::min(cov[v], r - 1);
        cov[v] += k;
      }
      run(idx + 1, slots - k, value + delta);
      for (int v : members) cov[v] -= k;
    }
  }
};

}  // namespace

int z_r(const Graph& g, int r) {
  if (r < 2) throw std::invalid_argument("z_r requires r >= 2");
  if (g.num_vertices() == 0) return 0;
  std::vector<VertexSet> mc = maximal_cliques(g);
  std::sort(mc.begin(), mc.end(), [](VertexSet a, VertexSet b) {
    return set_size(a) > set_size(b);
  });
  MultisetSearch search(mc, g.num_vertices(), r);
  search.run(0, r, 0);
  return search.best;
}

namespace {

// Lexicographically smallest per-vertex label assignment achieving a known
// optimum. Labels are bits 0..r-1; assignment order is by vertex, masks
// compared numerically.
struct WitnessSearch {
  const Graph& g;
  int r;
  int target;
  VertexSet full;
  std::vector<VertexSet> assign;
  std::vector<VertexSet> forbidden;  // labels used by earlier non-neighbors
  bool found = false;

  WitnessSearch(const Graph& g, int r, int target)
      : g(g),
        r(r),
        target(target),
        full((r == 64) ? ~VertexSet{0} : (VertexSet{1} << r) - 1),
        assign(g.num_vertices(), 0),
        forbidden(g.num_vertices(), 0) {}

  int tail_bound(int from) const {
    int sum = 0;
    for (int w = from; w < g.num_vertices(); ++w)
      sum += std::min(set_size(full & ~forbidden[w]), r - 1);
    return sum;
  }

  bool run(int v, int current) {
    if (v == g.num_vertices()) {
      found = current == target;
      return found;
    }
    const VertexSet allowed = full & ~forbidden[v];
    const VertexSet nonneigh =
        g.vertex_mask() & ~g.neighbors(v) & ~(VertexSet{1} << v);
    VertexSet s = 0;
    while (true) {
      if (s != full) {
        int value = current + set_size(s);
        // apply, compute admissible tail, recurse
        std::vector<std::pair<int, VertexSet>> undo;
        for (int w = v + 1; w < g.num_vertices(); ++w) {
          if ((nonneigh >> w) & 1) {
            undo.emplace_back(w, forbidden[w]);
            forbidden[w] |= s;
          }
        }
        if (value + tail_bound(v + 1) >= target) {
          assign[v] = s;
          if (run(v + 1, value)) return true;
        }
        for (auto [w, old] : undo) forbidden[w] = old;
      }
      if (s == allowed) break;
      s = (s - allowed) & allowed;  // next submask, ascending
    }
    return false;
  }
};

}  // namespace

ZrResult z_r_with_witness(const Graph& g, int r) {
  if (r < 2) throw std::invalid_argument("z_r requires r >= 2");
  if (r > 32)
    throw std::invalid_argument("witness search supports r <= 32 only");
  ZrResult result;
  result.value = z_r(g, r);
  result.witness.cliques.assign(r, 0);
  result.witness.total = result.value;
  if (g.num_vertices() == 0) return result;
  WitnessSearch search(g, r, result.value);
  if (!search.run(0, 0))
    throw std::logic_error("no assignment reaches the computed optimum");
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < r; ++i)
      if ((search.assign[v] >> i) & 1)
        result.witness.cliques[i] |= VertexSet{1} << v;
  return result;
}

namespace {

struct OracleSearch {
  const Graph& g;
  int r;
  VertexSet full;
  std::vector<VertexSet> forbidden;
  int best = 0;

  OracleSearch(const Graph& g, int r)
      : g(g),
        r(r),
        full((VertexSet{1} << r) - 1),
        forbidden(g.num_vertices(), 0) {}

  void run(int v, int current) {
    if (v == g.num_vertices()) {
      best = std::max(best, current);
      return;
    }
    const VertexSet allowed = full & ~forbidden[v];
    const VertexSet nonneigh =
        g.vertex_mask() & ~g.neighbors(v) & ~(VertexSet{1} << v);
    // try larger label sets first so the bound bites early
    std::vector<VertexSet> options;
    VertexSet s = 0;
    while (true) {
      if (s != full) options.push_back(s);
      if (s == allowed) break;
      s = (s - allowed) & allowed;
    }
    std::stable_sort(options.begin(), options.end(),
                     [](VertexSet a, VertexSet b) {
                       return set_size(a) > set_size(b);
                     });
    for (VertexSet opt : options) {
      int value = current + set_size(opt);
      std::vector<std::pair<int, VertexSet>> undo;
      for (int w = v + 1; w < g.num_vertices(); ++w) {
        if ((nonneigh >> w) & 1) {
          undo.emplace_back(w, forbidden[w]);
          forbidden[w] |= opt;
        }
      }
      int tail = 0;
      for (int w = v + 1; w < g.num_vertices(); ++w)
        tail += std::min(set_size(full & ~forbidden[w]), r - 1);
      if (value + tail > best) run(v + 1, value);
      for (auto [w, old] : undo) forbidden[w] = old;
    }
  }
};

}  // namespace

int z_r_oracle(const Graph& g, int r) {
  if (r < 2) throw std::invalid_argument("z_r requires r >= 2");
  if (g.num_vertices() > 12 || r > 5)
    throw std::invalid_argument("oracle guard: |V| <= 12 and r <= 5");
  if (g.num_vertices() == 0) return 0;
  OracleSearch search(g, r);
  search.run(0, 0);
  return search.best;
}

std::optional<int> z_shortcut_check(const Graph& g, int r,
                                    const CliqueTuple& witness) {
  if (static_cast<int>(witness.cliques.size()) != r || !witness.valid_for(g))
    throw std::invalid_argument("invalid witness tuple");
  if (witness.total != z_r(g, r))
    throw std::invalid_argument("witness does not realize z_r");
  const VertexSet all = g.vertex_mask();
  for (int k = 1; k < r; ++k) {
    // subsets of size k with empty intersection
    std::vector<int> pick(k);
    std::function<bool(int, int, VertexSet)> combos = [&](int start, int depth,
                                                          VertexSet inter) {
      if (inter == 0 && depth > 0 && depth == k) return true;
      if (depth == k) return false;
      for (int i = start; i < r; ++i) {
        if (combos(i + 1, depth + 1, inter & witness.cliques[i])) return true;
      }
      return false;
    };
    if (combos(0, 0, all)) {
      int zk = (k == 1) ? 0 : z_r(g, k);
      int certified = zk + (r - k) * clique_number(g);
      if (certified != witness.total)
        throw std::logic_error("shortcut value disagrees with z_r");
      return certified;
    }
  }
  return std::nullopt;
}

}  // namespace raatc
