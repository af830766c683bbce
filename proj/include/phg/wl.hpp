#pragma once

#include <map>
#include <vector>

#include "phg/graph.hpp"

namespace phg {

// Injective map from structured refinement keys to fresh color ids, shared
// across every coloring of one comparison session. Ids start at 1 and are
// only meaningful relative to their table.
class ColorTable {
 public:
  ColorTable();
  int relabel(const std::vector<long long>& key);
  int id() const { return table_id_; }
  int size() const { return next_ - 1; }

 private:
  std::map<std::vector<long long>, int> table_;
  int next_ = 1;
  int table_id_;
};

enum class WlInit { degree, labels, constant };

// Per-iteration color maps on vertices (k = 1) or on all n^k ordered
// k-tuples (k >= 2). iterations[0] holds the initial colors.
struct WLColoring {
  int table_id = 0;
  int k = 1;
  std::vector<std::vector<int>> iterations;
  int stable_at = 0;  // first index whose partition matches the previous one

  std::map<int, long long> histogram(size_t iteration) const;
};

// Color refinement: repeatedly relabel (own color, multiset of neighbor
// colors) until the induced partition stops changing. When forced_rounds is
// nonnegative, exactly that many rounds run instead, which keeps colors
// comparable across graphs refined to a common horizon.
WLColoring wl1_refine(const Graph& g, WlInit init, ColorTable& table, int forced_rounds = -1);

// Folklore k-WL (k = 2 or 3): tuples start from the ordered isomorphism type
// of their induced subgraph and are refined with the replacement vertex u
// ranging over all of V. Size bounds: n <= 40 for k = 2, n <= 16 for k = 3.
WLColoring kwl_refine(const Graph& g, int k, ColorTable& table, int forced_rounds = -1);

// True iff some common iteration has differing color histograms. Both
// colorings must come from the same table.
bool colorings_distinguish(const WLColoring& c1, const WLColoring& c2);

// Key tag reserved for relabeling multisets of tuple colors into canonical
// simplex colors; disjoint from the tags used internally by refinement.
inline constexpr long long kSimplexMultisetTag = 7;

}  // namespace phg
