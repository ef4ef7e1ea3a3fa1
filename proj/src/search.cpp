#include "sosq/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace sosq {

IntMatrix SignedInjection::to_matrix(std::size_t n) const {
  const std::size_t s = rows.size();
  std::vector<Entry> entries(n * s, 0);
  for (std::size_t c = 0; c < s; ++c)
    entries[rows[c] * s + c] = signs[c];
  return IntMatrix(n, s, std::move(entries));
}

bool anticommute(const SignedInjection &a, const SignedInjection &b) {
  const std::size_t s = a.rows.size();
  // (A^t B)(c, d) is sign_a(c) sign_b(d) when column c of A and column d of
  // B hit the same row, else 0. Need (A^t B) + (A^t B)^t = 0.
  auto entry = [&](std::size_t c, std::size_t d) -> int {
    return a.rows[c] == b.rows[d] ? a.signs[c] * b.signs[d] : 0;
  };
  for (std::size_t c = 0; c < s; ++c)
    for (std::size_t d = c; d < s; ++d)
      if (entry(c, d) + entry(d, c) != 0)
        return false;
  return true;
}

std::uint64_t pool_size(std::size_t s, std::size_t n) {
  if (s > n)
    return 0;
  std::uint64_t count = 1;
  for (std::size_t c = 0; c < s; ++c)
    if (__builtin_mul_overflow(count, std::uint64_t{2} * (n - c), &count))
      throw ResourceError("candidate pool size overflows 64 bits");
  return count;
}

namespace {

void check_dims(std::size_t s, std::size_t n) {
  if (s == 0 || n == 0)
    throw DomainError("search dimensions must be positive");
  if (n > 0xFFFF)
    throw DomainError("search supports at most 65535 rows");
}

// Visits every candidate in pool order; stops early when visit returns false.
void for_each_candidate(
    std::size_t s, std::size_t n,
    const std::function<bool(const SignedInjection &)> &visit) {
  if (s > n)
    return;
  SignedInjection cur{std::vector<std::uint16_t>(s),
                      std::vector<std::int8_t>(s)};
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t col) -> bool {
    if (col == s)
      return visit(cur);
    for (std::size_t row = 0; row < n; ++row) {
      if (used[row])
        continue;
      used[row] = true;
      cur.rows[col] = static_cast<std::uint16_t>(row);
      for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
        cur.signs[col] = sign;
        if (!place(col + 1))
          return false;
      }
      used[row] = false;
    }
    return true;
  };
  place(0);
}

using Bits = std::vector<std::uint64_t>;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w; });
}

// Branch and bound with greedy colouring bounds over a dense bitset graph.
class MaxClique {
public:
  MaxClique(std::size_t vertices, std::uint64_t budget)
      : n_(vertices), words_((vertices + 63) / 64), budget_(budget),
        adj_(vertices, Bits(words_, 0)) {}

  void connect(std::size_t u, std::size_t v) {
    adj_[u][v / 64] |= std::uint64_t{1} << (v % 64);
    adj_[v][u / 64] |= std::uint64_t{1} << (u % 64);
  }

  // Returns false when the budget ran out; best() is then a lower bound.
  bool run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(all, current);
    return !exhausted_;
  }

  const std::vector<std::size_t> &best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void colour_sort(const Bits &p, std::vector<std::size_t> &order,
                   std::vector<std::size_t> &bound) const {
    Bits uncoloured = p;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + std::countr_zero(q[w]);
          const std::uint64_t bit = std::uint64_t{1} << (v % 64);
          uncoloured[w] &= ~bit;
          q[w] &= ~bit;
          for (std::size_t x = w; x < words_; ++x)
            q[x] &= ~adj_[v][x];
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
  }

  void expand(Bits p, std::vector<std::size_t> &current) {
    if (exhausted_)
      return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<std::size_t> order, bound;
    colour_sort(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + bound[idx] <= best_.size() || exhausted_)
        return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w)
        next[w] = p[w] & adj_[v][w];
      if (!any(next)) {
        if (current.size() > best_.size())
          best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

SearchResult solve(std::size_t s, std::size_t n,
                   const std::vector<SignedInjection> &vertices,
                   const std::optional<SignedInjection> &fixed,
                   const SearchOptions &options) {
  SearchResult result;
  result.s = s;
  result.n = n;
  result.graph_vertices = vertices.size();

  // Process vertices by decreasing degree (stable), the usual initial order
  // for colouring bounds; map back to pool order for the witness.
  const std::size_t count = vertices.size();
  std::vector<std::vector<bool>> edge(count, std::vector<bool>(count, false));
  std::vector<std::size_t> degree(count, 0);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = u + 1; v < count; ++v)
      if (anticommute(vertices[u], vertices[v])) {
        edge[u][v] = edge[v][u] = true;
        ++degree[u];
        ++degree[v];
      }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return degree[a] > degree[b];
                   });

  MaxClique clique(count, options.node_budget);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = u + 1; v < count; ++v)
      if (edge[order[u]][order[v]])
        clique.connect(u, v);
  const bool complete = clique.run();

  std::vector<std::size_t> members;
  for (std::size_t v : clique.best())
    members.push_back(order[v]);
  std::sort(members.begin(), members.end());

  std::vector<IntMatrix> matrices;
  if (fixed)
    matrices.push_back(fixed->to_matrix(n));
  for (std::size_t m : members)
    matrices.push_back(vertices[m].to_matrix(n));

  result.r_max = matrices.size();
  if (!matrices.empty())
    result.witness = HurwitzSystem(std::move(matrices));
  result.nodes = clique.nodes();
  result.exhaustive = complete;
  return result;
}

} // namespace

CandidatePool enumerate_candidates(std::size_t s, std::size_t n,
                                   std::uint64_t pool_cap) {
  check_dims(s, n);
  const std::uint64_t size = pool_size(s, n);
  if (size > pool_cap)
    throw ResourceError("candidate pool for s=" + std::to_string(s) +
                        ", n=" + std::to_string(n) + " has " +
                        std::to_string(size) + " members, above the cap of " +
                        std::to_string(pool_cap));
  CandidatePool pool{s, n, {}};
  pool.candidates.reserve(size);
  for_each_candidate(s, n, [&](const SignedInjection &c) {
    pool.candidates.push_back(c);
    return true;
  });
  return pool;
}

SearchBudgetExceeded::SearchBudgetExceeded(SearchResult partial)
    : ResourceError("search budget exhausted after " +
                    std::to_string(partial.nodes) +
                    " nodes; inconclusive above r = " +
                    std::to_string(partial.r_max)),
      partial_(std::move(partial)) {}

SearchResult max_r(std::size_t s, std::size_t n, const SearchOptions &options) {
  check_dims(s, n);
  const std::uint64_t total = pool_size(s, n);
  if (total == 0) {
    SearchResult empty;
    empty.s = s;
    empty.n = n;
    return empty;
  }
  if (total > options.scan_cap)
    throw ResourceError("candidate pool of " + std::to_string(total) +
                        " members exceeds the scan cap of " +
                        std::to_string(options.scan_cap));

  std::vector<SignedInjection> vertices;
  std::optional<SignedInjection> fixed;
  bool overflow = false;
  auto keep = [&](const SignedInjection &c) {
    if (vertices.size() >= options.vertex_cap) {
      overflow = true;
      return false;
    }
    vertices.push_back(c);
    return true;
  };
  if (options.fix_first) {
    for_each_candidate(s, n, [&](const SignedInjection &c) {
      if (!fixed) {
        fixed = c;
        return true;
      }
      return anticommute(*fixed, c) ? keep(c) : true;
    });
  } else {
    for_each_candidate(s, n, keep);
  }
  if (overflow)
    throw ResourceError("compatibility graph for s=" + std::to_string(s) +
                        ", n=" + std::to_string(n) +
                        " exceeds the vertex cap of " +
                        std::to_string(options.vertex_cap));

  SearchResult result = solve(s, n, vertices, fixed, options);
  if (!result.exhaustive)
    throw SearchBudgetExceeded(std::move(result));
  return result;
}

} // namespace sosq
