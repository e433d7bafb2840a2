#pragma once

#include <vector>

namespace polygame {

// Maximum bipartite matching by augmenting paths (Kuhn). adj[l] lists the
// admissible right vertices of left vertex l; both sides and the adjacency
// lists are explored in index order, so the result is deterministic for a
// given input. Returns the matched right vertex per left vertex, -1 when
// unmatched.
std::vector<int> augmenting_path_matching(const std::vector<std::vector<int>>& adj, int n_right);

}  // namespace polygame
