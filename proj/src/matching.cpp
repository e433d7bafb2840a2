#include "polygame/matching.hpp"

namespace polygame {

namespace {

bool try_augment(int left, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
                 std::vector<bool>& visited) {
    for (int r : adj[static_cast<std::size_t>(left)]) {
        if (visited[static_cast<std::size_t>(r)]) continue;
        visited[static_cast<std::size_t>(r)] = true;
        if (match_right[static_cast<std::size_t>(r)] < 0 ||
            try_augment(match_right[static_cast<std::size_t>(r)], adj, match_right, visited)) {
            match_right[static_cast<std::size_t>(r)] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> augmenting_path_matching(const std::vector<std::vector<int>>& adj, int n_right) {
    std::vector<int> match_right(static_cast<std::size_t>(n_right), -1);
    for (int l = 0; l < static_cast<int>(adj.size()); ++l) {
        std::vector<bool> visited(static_cast<std::size_t>(n_right), false);
        try_augment(l, adj, match_right, visited);
    }
    std::vector<int> match_left(adj.size(), -1);
    for (int r = 0; r < n_right; ++r)
        if (match_right[static_cast<std::size_t>(r)] >= 0)
            match_left[static_cast<std::size_t>(match_right[static_cast<std::size_t>(r)])] = r;
    return match_left;
}

}  // namespace polygame
