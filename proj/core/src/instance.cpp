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

#include "simgraph/instance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

void check_names(const std::vector<std::string>& names, std::string_view label) {
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (!valid_name(name)) {
      throw Error(ErrorCode::kSyntaxError, "invalid vertex name '" + name + "' in " +
                                               std::string(label));
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kSyntaxError,
                  "duplicate vertex '" + name + "' in " + std::string(label));
    }
  }
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

NamedEdge parse_named_edge(const std::string& token, std::size_t line_no) {
  auto dash = token.find('-');
  if (dash == std::string::npos || token.find('-', dash + 1) != std::string::npos) {
    throw Error(ErrorCode::kSyntaxError,
                "line " + std::to_string(line_no) + ": malformed edge '" + token + "'");
  }
  NamedEdge edge{token.substr(0, dash), token.substr(dash + 1)};
  if (!valid_name(edge.first) || !valid_name(edge.second)) {
    throw Error(ErrorCode::kSyntaxError,
                "line " + std::to_string(line_no) + ": malformed edge '" + token + "'");
  }
  return edge;
}

}  // namespace

SharedInstance SharedInstance::from_lists(std::vector<std::string> v1,
                                          std::vector<std::string> v2,
                                          const std::vector<NamedEdge>& e1,
                                          const std::vector<NamedEdge>& e2,
                                          const std::vector<NamedEdge>& forced) {
  check_names(v1, "V1");
  check_names(v2, "V2");

  SharedInstance inst;
  inst.names_ = v1;
  inst.names_.insert(inst.names_.end(), v2.begin(), v2.end());
  std::sort(inst.names_.begin(), inst.names_.end());
  inst.names_.erase(std::unique(inst.names_.begin(), inst.names_.end()), inst.names_.end());

  const std::size_t n = inst.names_.size();
  const std::array<const std::vector<std::string>*, 2> side_names = {&v1, &v2};
  for (Side s : kBothSides) {
    Bitset mask(n);
    for (const auto& name : *side_names[index_of(s)]) mask.set(*inst.find(name));
    inst.side_[index_of(s)] = std::move(mask);
    inst.adj_[index_of(s)].assign(n, Bitset(n));
  }
  inst.shared_ = inst.side_[0] & inst.side_[1];

  const std::array<const std::vector<NamedEdge>*, 2> side_edges = {&e1, &e2};
  for (Side s : kBothSides) {
    const std::string label = s == Side::kFirst ? "E1" : "E2";
    auto& adj = inst.adj_[index_of(s)];
    for (const auto& [a, b] : *side_edges[index_of(s)]) {
      auto u = inst.find(a);
      auto v = inst.find(b);
      if (!u || !v || !inst.in_side(s, *u) || !inst.in_side(s, *v)) {
        throw Error(ErrorCode::kIllegalEdge, label + " edge " + a + "-" + b +
                                                 " has an endpoint outside V" +
                                                 (s == Side::kFirst ? "1" : "2"));
      }
      if (*u == *v) throw Error(ErrorCode::kIllegalEdge, "loop " + a + "-" + b);
      if (adj[*u].test(*v)) {
        throw Error(ErrorCode::kIllegalEdge, "duplicate " + label + " edge " + a + "-" + b);
      }
      adj[*u].set(*v);
      adj[*v].set(*u);
    }
  }

  for_each_bit(inst.shared_, [&](VertexId u) {
    Bitset one = inst.adj_[0][u] & inst.shared_;
    Bitset two = inst.adj_[1][u] & inst.shared_;
    if (one != two) {
      Bitset diff = one ^ two;
      VertexId v = static_cast<VertexId>(diff.find_first());
      throw Error(ErrorCode::kXInducedMismatch,
                  "X pair " + inst.names_[u] + "-" + inst.names_[v] +
                      " is an edge in exactly one of E1, E2");
    }
  });

  for (const auto& [a, b] : forced) {
    auto u = inst.find(a);
    auto v = inst.find(b);
    if (!u || !v || !inst.is_augmenting_pair(*u, *v)) {
      throw Error(ErrorCode::kIllegalForced,
                  "forced edge " + a + "-" + b + " does not join V1 - X to V2 - X");
    }
    if (!inst.forced_.insert(Edge::of(*u, *v))) {
      throw Error(ErrorCode::kIllegalEdge, "duplicate forced edge " + a + "-" + b);
    }
  }
  return inst;
}

std::optional<VertexId> SharedInstance::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

bool SharedInstance::is_augmenting_pair(VertexId u, VertexId v) const {
  return (is_private(Side::kFirst, u) && is_private(Side::kSecond, v)) ||
         (is_private(Side::kSecond, u) && is_private(Side::kFirst, v));
}

EdgeSet SharedInstance::edges(Side s) const {
  std::vector<Edge> out;
  const auto& adj = adj_[index_of(s)];
  for (VertexId u = 0; u < size(); ++u) {
    for_each_bit(adj[u], [&](VertexId v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return EdgeSet(std::move(out));
}

EdgeSet SharedInstance::all_edges() const {
  return edges(Side::kFirst).united(edges(Side::kSecond));
}

EdgeSet SharedInstance::shared_edges() const {
  std::vector<Edge> out;
  for_each_bit(shared_, [&](VertexId u) {
    for_each_bit(adj_[0][u] & shared_, [&](VertexId v) {
      if (u < v) out.push_back({u, v});
    });
  });
  return EdgeSet(std::move(out));
}

Graph SharedInstance::graph(Side s) const {
  const Bitset& mask = side_[index_of(s)];
  std::vector<VertexId> ids = to_vector(mask);
  std::vector<std::string> local_names;
  local_names.reserve(ids.size());
  std::vector<VertexId> local(size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    local_names.push_back(names_[ids[i]]);
    local[ids[i]] = static_cast<VertexId>(i);
  }
  Graph g(std::move(local_names));
  for (VertexId u : ids) {
    for_each_bit(adj_[index_of(s)][u], [&](VertexId v) {
      if (u < v) g.add_edge(local[u], local[v]);
    });
  }
  return g;
}

VertexId SharedInstance::from_local(Side s, VertexId local) const {
  const Bitset& mask = side_[index_of(s)];
  auto v = mask.find_first();
  for (VertexId i = 0; i < local; ++i) v = mask.find_next(v);
  return static_cast<VertexId>(v);
}

void SharedInstance::validate_forced() const {
  for (const Edge& e : forced_) {
    if (e.u >= size() || e.v >= size() || !is_augmenting_pair(e.u, e.v)) {
      throw Error(ErrorCode::kIllegalForced, "forced edge does not join V1 - X to V2 - X");
    }
  }
}

SharedInstance SharedInstance::with_forced(const EdgeSet& forced) const {
  SharedInstance out = *this;
  out.forced_ = forced;
  out.validate_forced();
  return out;
}

SharedInstance SharedInstance::without_edges(const EdgeSet& edges) const {
  SharedInstance out = *this;
  for (const Edge& e : edges) {
    for (auto& adj : out.adj_) {
      adj[e.u].reset(e.v);
      adj[e.v].reset(e.u);
    }
  }
  return out;
}

SharedInstance parse_instance(std::string_view text) {
  std::map<std::string, std::vector<std::string>> statements;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kSyntaxError,
                  "line " + std::to_string(line_no) + ": expected '<key>:'");
    }
    std::string key(trim(line.substr(0, colon)));
    if (key != "V1" && key != "V2" && key != "E1" && key != "E2" && key != "F") {
      throw Error(ErrorCode::kSyntaxError,
                  "line " + std::to_string(line_no) + ": unknown statement '" + key + "'");
    }
    if (statements.count(key)) {
      throw Error(ErrorCode::kSyntaxError,
                  "line " + std::to_string(line_no) + ": repeated statement '" + key + "'");
    }
    auto tokens = split_tokens(line.substr(colon + 1));
    if (key == "E1" || key == "E2" || key == "F") {
      for (const auto& t : tokens) parse_named_edge(t, line_no);
    }
    statements[key] = std::move(tokens);
  }
  if (!statements.count("V1") || !statements.count("V2")) {
    throw Error(ErrorCode::kSyntaxError, "instance needs both V1 and V2 statements");
  }
  auto edges_of = [&](const std::string& key) {
    std::vector<NamedEdge> out;
    if (auto it = statements.find(key); it != statements.end()) {
      for (const auto& t : it->second) out.push_back(parse_named_edge(t, 0));
    }
    return out;
  };
  return SharedInstance::from_lists(statements["V1"], statements["V2"], edges_of("E1"),
                                    edges_of("E2"), edges_of("F"));
}

std::string format_edge(const SharedInstance& inst, Edge e) {
  return inst.name(e.u) + "-" + inst.name(e.v);
}

std::string format_edges(const SharedInstance& inst, const EdgeSet& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += format_edge(inst, e);
  }
  return out;
}

std::string format_vertices(const SharedInstance& inst, std::span<const VertexId> vertices) {
  std::string out;
  for (VertexId v : vertices) {
    if (!out.empty()) out += ' ';
    out += inst.name(v);
  }
  return out;
}

std::string serialize_instance(const SharedInstance& inst) {
  auto line = [](std::string key, const std::string& body) {
    return body.empty() ? key + ":\n" : key + ": " + body + "\n";
  };
  std::string out;
  out += line("V1", format_vertices(inst, to_vector(inst.side_set(Side::kFirst))));
  out += line("V2", format_vertices(inst, to_vector(inst.side_set(Side::kSecond))));
  out += line("E1", format_edges(inst, inst.edges(Side::kFirst)));
  out += line("E2", format_edges(inst, inst.edges(Side::kSecond)));
  if (!inst.forced().empty()) out += line("F", format_edges(inst, inst.forced()));
  return out;
}

SharedInstance complement_pair(const SharedInstance& inst) {
  if (!inst.forced().empty()) {
    throw Error(ErrorCode::kForcedNotSupported, "cannot complement an instance with forced edges");
  }
  std::array<std::vector<std::string>, 2> sides;
  std::array<std::vector<NamedEdge>, 2> edges;
  for (Side s : kBothSides) {
    auto ids = to_vector(inst.side_set(s));
    for (VertexId v : ids) sides[index_of(s)].push_back(inst.name(v));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (!inst.has_edge(s, ids[i], ids[j])) {
          edges[index_of(s)].push_back({inst.name(ids[i]), inst.name(ids[j])});
        }
      }
    }
  }
  return SharedInstance::from_lists(sides[0], sides[1], edges[0], edges[1]);
}

EdgeSet augmenting_pairs(const SharedInstance& inst) {
  std::vector<Edge> out;
  Bitset one = inst.private_set(Side::kFirst);
  Bitset two = inst.private_set(Side::kSecond);
  for_each_bit(one, [&](VertexId u) {
    for_each_bit(two, [&](VertexId v) { out.push_back(Edge::of(u, v)); });
  });
  return EdgeSet(std::move(out));
}

Graph union_graph(const SharedInstance& inst, const EdgeSet& a) {
  Graph g(inst.names());
  for (Side s : kBothSides) {
    for (const Edge& e : inst.edges(s)) g.add_edge(e);
  }
  for (const Edge& e : inst.forced()) g.add_edge(e);
  for (const Edge& e : a) {
    if (e.u >= inst.size() || e.v >= inst.size() || !inst.is_augmenting_pair(e.u, e.v)) {
      throw Error(ErrorCode::kIllegalEdge, "not an augmenting pair");
    }
    g.add_edge(e);
  }
  return g;
}

}  // namespace simgraph
