// Copyright 2026 The mqng Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

namespace mqng {

/// Simple undirected graph as an edge list over vertices 0..n_vertices-1.
struct EdgeList {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Parses the plain-text edge-list format: one "u v" pair per line, 0-based
/// vertex indices; blank lines and lines starting with '#' are ignored.
/// The vertex count is max index + 1.
EdgeList parse_edge_list(std::istream &in);

EdgeList load_edge_list(const std::filesystem::path &path);

bool is_connected(const EdgeList &graph);

/// Seeded Erdos-Renyi draw, retried (with the attempt counter mixed into the
/// seed) until connected. Deterministic per (n, p, seed).
EdgeList erdos_renyi_connected(int n_vertices, double edge_probability,
                               std::uint64_t seed);

/// Fixed default instance for 4-vertex runs.
EdgeList default_graph_4();

} // namespace mqng
