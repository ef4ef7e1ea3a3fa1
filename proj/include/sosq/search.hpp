#ifndef SOSQ_SEARCH_HPP
#define SOSQ_SEARCH_HPP

#include "sosq/error.hpp"
#include "sosq/hurwitz.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sosq {

/// An n x s integer matrix with A^t A = 1_s. Over the integers every column
/// is then a signed standard basis vector and distinct columns sit in
/// distinct rows, so the matrix is fully described by a row and a sign per
/// column.
struct SignedInjection {
  std::vector<std::uint16_t> rows;
  std::vector<std::int8_t> signs;

  IntMatrix to_matrix(std::size_t n) const;
  friend bool operator==(const SignedInjection &,
                         const SignedInjection &) = default;
};

/// A^t B + B^t A = 0 for the matrices the two injections describe.
bool anticommute(const SignedInjection &a, const SignedInjection &b);

/// Every n x s integer matrix with A^t A = 1_s, in lexicographic order of
/// (row_1, sign_1, row_2, sign_2, ...) with + before -. The first member is
/// the canonical injection [1_s; 0].
struct CandidatePool {
  std::size_t s = 0;
  std::size_t n = 0;
  std::vector<SignedInjection> candidates;
};

/// 2^s n! / (n - s)!, or 0 when s > n. Throws ResourceError on overflow.
std::uint64_t pool_size(std::size_t s, std::size_t n);

inline constexpr std::uint64_t kDefaultPoolCap = 1'000'000;

/// Throws ResourceError when pool_size(s, n) exceeds pool_cap.
CandidatePool enumerate_candidates(std::size_t s, std::size_t n,
                                   std::uint64_t pool_cap = kDefaultPoolCap);

struct SearchOptions {
  /// Branch-and-bound nodes before the search gives up.
  std::uint64_t node_budget = 50'000'000;
  /// Largest compatibility graph that will be built.
  std::size_t vertex_cap = 20'000;
  /// Largest number of candidates streamed through the enumerator.
  std::uint64_t scan_cap = 50'000'000;
  /// Fix A_1 to the canonical injection. Sound because left multiplication
  /// by a signed permutation maps systems to systems and acts transitively
  /// on the pool; shrinks the graph to the neighbours of one vertex.
  bool fix_first = true;
};

struct SearchResult {
  std::size_t s = 0;
  std::size_t n = 0;
  /// Largest r with an integer [r, s, n] system (best found if incomplete).
  std::size_t r_max = 0;
  /// Members in pool order; empty only when r_max = 0 (s > n).
  std::optional<HurwitzSystem> witness;
  std::uint64_t nodes = 0;
  std::size_t graph_vertices = 0;
  bool exhaustive = true;
};

/// The node budget ran out; `partial` carries the best clique found, with
/// exhaustive = false, so r_max is a lower bound only.
class SearchBudgetExceeded : public ResourceError {
public:
  explicit SearchBudgetExceeded(SearchResult partial);
  const SearchResult &partial() const noexcept { return partial_; }

private:
  SearchResult partial_;
};

/// Maximum r for which an [r, s, n] formula with integer coefficients exists,
/// by exact maximum-clique search on the anticommutation graph of the pool.
/// Deterministic: single-threaded, fixed vertex order.
SearchResult max_r(std::size_t s, std::size_t n,
                   const SearchOptions &options = {});

} // namespace sosq

#endif // SOSQ_SEARCH_HPP
