// Copyright 2026 The simgraph Authors
//
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

#include "simgraph/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "simgraph/random.hpp"

namespace simgraph {
namespace {

void check_shape(std::size_t n1, std::size_t n2, std::size_t nx) {
  if (nx > n1 || nx > n2) throw std::invalid_argument("nx must not exceed n1 or n2");
}

std::size_t name_width(std::size_t total) {
  std::size_t digits = 1;
  for (std::size_t t = total; t >= 10; t /= 10) ++digits;
  return std::max<std::size_t>(2, digits);
}

std::string make_name(char prefix, std::size_t index, std::size_t width) {
  std::string digits = std::to_string(index);
  return prefix + std::string(width - std::min(width, digits.size()), '0') + digits;
}

// Adjacency matrix over 0..n-1, filled by the class generators below.
using Matrix = std::vector<std::vector<char>>;

Matrix random_chordal(std::size_t n, double density, SplitMix64& rng) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(density)) {
        rows[u].set(v);
        rows[v].set(u);
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  // Eliminating v makes its remaining neighbours a clique, so `order` ends
  // up a perfect elimination ordering.
  Bitset remaining(n);
  remaining.set();
  for (std::size_t v : order) {
    remaining.reset(v);
    const Bitset later = rows[v] & remaining;
    for_each_bit(later, [&](VertexId w) {
      rows[w] |= later;
      rows[w].reset(w);
    });
  }
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for_each_bit(rows[u], [&](VertexId v) { adj[u][v] = 1; });
  }
  return adj;
}

Matrix random_comparability(std::size_t n, double density, SplitMix64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  // reach[i][j]: order[i] < order[j] in the generated partial order.
  Matrix reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) reach[i][j] = rng.chance(density);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = k + 1; j < n; ++j) reach[i][j] |= reach[k][j];
    }
  }
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (reach[i][j]) adj[order[i]][order[j]] = adj[order[j]][order[i]] = 1;
    }
  }
  return adj;
}

Matrix random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  rng.shuffle(pi);
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (pi[u] > pi[v]) adj[u][v] = adj[v][u] = 1;
    }
  }
  return adj;
}

// Vertex roles for a split: shared, first-private, second-private.
struct Layout {
  std::vector<std::string> names;
  std::vector<int> role;  // 0 = X, 1 = V1 - X, 2 = V2 - X
};

Layout make_layout(std::size_t n1, std::size_t n2, std::size_t nx,
                   const std::vector<std::size_t>& slots) {
  const std::size_t total = n1 + n2 - nx;
  const std::size_t width = name_width(total);
  Layout out;
  out.names.resize(total);
  out.role.resize(total);
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t v = slots[k];
    if (k < nx) {
      out.names[v] = make_name('x', k, width);
      out.role[v] = 0;
    } else if (k < n1) {
      out.names[v] = make_name('a', k - nx, width);
      out.role[v] = 1;
    } else {
      out.names[v] = make_name('b', k - n1, width);
      out.role[v] = 2;
    }
  }
  return out;
}

SharedInstance split(const Layout& layout, const Matrix& adj) {
  std::vector<std::string> v1;
  std::vector<std::string> v2;
  for (std::size_t v = 0; v < layout.names.size(); ++v) {
    if (layout.role[v] != 2) v1.push_back(layout.names[v]);
    if (layout.role[v] != 1) v2.push_back(layout.names[v]);
  }
  std::vector<NamedEdge> e1;
  std::vector<NamedEdge> e2;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v = u + 1; v < adj.size(); ++v) {
      if (!adj[u][v]) continue;
      const int ru = layout.role[u];
      const int rv = layout.role[v];
      if ((ru | rv) == 3) continue;  // V1 - X against V2 - X
      NamedEdge e{layout.names[u], layout.names[v]};
      if (ru != 2 && rv != 2) e1.push_back(e);
      if (ru != 1 && rv != 1) e2.push_back(e);
    }
  }
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  return SharedInstance::from_lists(std::move(v1), std::move(v2), e1, e2);
}

}  // namespace

SharedInstance planted_yes(GraphClass cls, std::size_t n1, std::size_t n2, std::size_t nx,
                           std::uint64_t seed, const PlantedOptions& options) {
  check_shape(n1, n2, nx);
  const std::size_t total = n1 + n2 - nx;
  SplitMix64 rng(seed);
  Matrix adj;
  switch (cls) {
    case GraphClass::kChordal:
      adj = random_chordal(total, options.density.value_or(total > 1 ? 2.0 / total : 0.0), rng);
      break;
    case GraphClass::kComparability:
      adj = random_comparability(total, options.density.value_or(0.5), rng);
      break;
    case GraphClass::kPermutation: adj = random_permutation(total, rng); break;
  }
  std::vector<std::size_t> slots(total);
  std::iota(slots.begin(), slots.end(), 0);
  rng.shuffle(slots);
  return split(make_layout(n1, n2, nx, slots), adj);
}

SharedInstance random_instance(std::size_t n1, std::size_t n2, std::size_t nx, double edge_prob,
                               std::uint64_t seed) {
  check_shape(n1, n2, nx);
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw std::invalid_argument("edge_prob must lie in [0, 1]");
  }
  const std::size_t total = n1 + n2 - nx;
  std::vector<std::size_t> slots(total);
  std::iota(slots.begin(), slots.end(), 0);
  const Layout layout = make_layout(n1, n2, nx, slots);
  SplitMix64 rng(seed);
  Matrix adj(total, std::vector<char>(total, 0));
  // Draw order: pairs inside X, then pairs touching V1 - X, then V2 - X.
  for (int pass = 0; pass < 3; ++pass) {
    for (std::size_t u = 0; u < total; ++u) {
      for (std::size_t v = u + 1; v < total; ++v) {
        const int ru = layout.role[u];
        const int rv = layout.role[v];
        if ((ru | rv) == 3) continue;
        const int block = (ru | rv) == 0 ? 0 : (ru | rv);
        if (block != pass) continue;
        if (rng.chance(edge_prob)) adj[u][v] = adj[v][u] = 1;
      }
    }
  }
  return split(layout, adj);
}

}  // namespace simgraph
