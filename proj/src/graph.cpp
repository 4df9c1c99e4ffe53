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
#include "mqng/graph.hpp"

#include "mqng/errors.hpp"
#include "mqng/rng.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mqng {

namespace {

int find_root(std::vector<int> &parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

} // namespace

EdgeList parse_edge_list(std::istream &in) {
    EdgeList graph;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long u = -1;
        long v = -1;
        if (!(fields >> u >> v)) {
            throw std::invalid_argument("malformed edge at line " +
                                        std::to_string(line_no) + ": '" +
                                        line + "'");
        }
        std::string rest;
        if (fields >> rest && rest[0] != '#') {
            throw std::invalid_argument("trailing tokens at line " +
                                        std::to_string(line_no) + ": '" +
                                        line + "'");
        }
        if (u < 0 || v < 0) {
            throw std::invalid_argument("negative vertex index at line " +
                                        std::to_string(line_no));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at line " +
                                        std::to_string(line_no));
        }
        graph.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        graph.n_vertices =
            std::max({graph.n_vertices, static_cast<int>(u) + 1,
                      static_cast<int>(v) + 1});
    }
    if (graph.edges.empty()) {
        throw std::invalid_argument("edge list is empty");
    }
    // Duplicate edges would double-count penalty terms.
    auto canon = graph.edges;
    for (auto &[u, v] : canon) {
        if (u > v) std::swap(u, v);
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) {
        throw std::invalid_argument("duplicate edge in edge list");
    }
    return graph;
}

EdgeList load_edge_list(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open graph file: " + path.string());
    }
    return parse_edge_list(in);
}

bool is_connected(const EdgeList &graph) {
    if (graph.n_vertices <= 1) {
        return true;
    }
    std::vector<int> parent(graph.n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &[u, v] : graph.edges) {
        parent[find_root(parent, u)] = find_root(parent, v);
    }
    const int root = find_root(parent, 0);
    for (int v = 1; v < graph.n_vertices; ++v) {
        if (find_root(parent, v) != root) {
            return false;
        }
    }
    return true;
}

EdgeList erdos_renyi_connected(int n_vertices, double edge_probability,
                               std::uint64_t seed) {
    if (n_vertices < 2) {
        throw std::invalid_argument("graph needs at least 2 vertices");
    }
    if (edge_probability <= 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("edge probability must be in (0, 1]");
    }
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto rng = seeded_engine(seed + static_cast<std::uint64_t>(attempt) *
                                            0x9e3779b97f4a7c15ull,
                                 SeedStream::kGraph);
        EdgeList graph;
        graph.n_vertices = n_vertices;
        for (int u = 0; u < n_vertices; ++u) {
            for (int v = u + 1; v < n_vertices; ++v) {
                if (uniform_unit(rng) < edge_probability) {
                    graph.edges.emplace_back(u, v);
                }
            }
        }
        if (is_connected(graph)) {
            return graph;
        }
    }
    throw std::invalid_argument(
        "failed to draw a connected graph; increase edge probability");
}

EdgeList default_graph_4() {
    return EdgeList{4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}};
}

} // namespace mqng
