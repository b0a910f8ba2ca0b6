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

#include "simgraph/format.hpp"

#include <regex>
#include <sstream>
#include <utility>
#include <vector>

#include "simgraph/errors.hpp"

namespace simgraph {
namespace {

struct Line {
  std::size_t number = 0;
  std::string key;   // empty for a bare word such as YES
  std::string body;  // text after the colon, trimmed
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    Line parsed{number, {}, {}};
    // Split at the first colon only: segment tokens contain colons too.
    if (auto colon = line.find(':'); colon != std::string::npos) {
      parsed.key = trim(std::string_view(line).substr(0, colon));
      parsed.body = trim(std::string_view(line).substr(colon + 1));
    } else {
      parsed.body = line;
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& body) {
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Sequential reader over the non-blank lines.
class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  bool done() const { return next_ == lines_.size(); }
  std::size_t line_number() const {
    return done() ? (lines_.empty() ? 1 : lines_.back().number + 1) : lines_[next_].number;
  }

  bool peek_key(std::string_view key) const { return !done() && lines_[next_].key == key; }

  std::string word() {
    if (done() || !lines_[next_].key.empty()) syntax(line_number(), "expected YES or NO");
    return lines_[next_++].body;
  }

  std::string field(std::string_view key) {
    if (!peek_key(key)) syntax(line_number(), "expected '" + std::string(key) + ":'");
    return lines_[next_++].body;
  }

  void header(std::string_view key) {
    const std::string body = field(key);
    if (!body.empty()) syntax(line_number() - 1, "unexpected text after header");
  }

  void expect_end() {
    if (!done()) syntax(line_number(), "unexpected trailing line");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

VertexId vertex(const SharedInstance& inst, std::string_view name) {
  auto id = inst.find(name);
  if (!id) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *id;
}

std::vector<VertexId> parse_vertices(const SharedInstance& inst, const std::string& body) {
  std::vector<VertexId> out;
  for (const auto& t : tokens(body)) out.push_back(vertex(inst, t));
  return out;
}

Edge parse_edge(const SharedInstance& inst, const std::string& token) {
  auto dash = token.find('-');
  if (dash == std::string::npos || token.find('-', dash + 1) != std::string::npos) {
    throw Error(ErrorCode::kSyntaxError, "malformed edge '" + token + "'");
  }
  VertexId u = vertex(inst, token.substr(0, dash));
  VertexId v = vertex(inst, token.substr(dash + 1));
  if (u == v) throw Error(ErrorCode::kSyntaxError, "loop '" + token + "'");
  return Edge::of(u, v);
}

EdgeSet parse_edges(const SharedInstance& inst, const std::string& body) {
  EdgeSet out;
  for (const auto& t : tokens(body)) out.insert(parse_edge(inst, t));
  return out;
}

Arc parse_arc(const SharedInstance& inst, const std::string& token) {
  auto arrow = token.find("->");
  if (arrow == std::string::npos || token.find('-', arrow + 2) != std::string::npos) {
    throw Error(ErrorCode::kSyntaxError, "malformed arc '" + token + "'");
  }
  return Arc{vertex(inst, token.substr(0, arrow)), vertex(inst, token.substr(arrow + 2))};
}

DirectedEdgeSet parse_arcs(const SharedInstance& inst, const std::string& body) {
  DirectedEdgeSet out;
  for (const auto& t : tokens(body)) out.insert(parse_arc(inst, t));
  return out;
}

std::string line(std::string_view key, const std::string& body) {
  std::string out(key);
  out += ':';
  if (!body.empty()) out += ' ' + body;
  out += '\n';
  return out;
}

std::string side_name(Side s) { return s == Side::kFirst ? "E1" : "E2"; }

std::string comparability_block(const SharedInstance& inst, const ComparabilityCertificate& c) {
  return line("T", format_arcs(inst, c.t)) + line("A'", format_arcs(inst, c.a_prime));
}

std::string witness_block(const SharedInstance& inst, const ForcingWitness& w) {
  std::string chain;
  for (const ForcingStep& step : w.chain) {
    if (!chain.empty()) chain += ' ';
    chain += '(' + format_arc(inst, step.from) + " ~ " + format_arc(inst, step.to) + " via " +
             side_name(step.side) + ", nonedge " + format_edge(inst, step.nonedge) + ')';
  }
  return line("CONFLICT", format_arc(inst, w.conflict)) + line("CHAIN", chain);
}

ComparabilityCertificate read_comparability_block(const SharedInstance& inst, Reader& in) {
  ComparabilityCertificate cert;
  cert.t = parse_arcs(inst, in.field("T"));
  cert.a_prime = parse_arcs(inst, in.field("A'"));
  cert.t_full = cert.t.united(cert.a_prime);
  return cert;
}

ForcingWitness read_witness_block(const SharedInstance& inst, Reader& in) {
  ForcingWitness w;
  const std::size_t conflict_line = in.line_number();
  auto conflict = tokens(in.field("CONFLICT"));
  if (conflict.size() != 1) syntax(conflict_line, "CONFLICT takes one arc");
  w.conflict = parse_arc(inst, conflict.front());

  const std::size_t chain_line = in.line_number();
  const std::string body = in.field("CHAIN");
  static const std::regex step_re(
      R"(\(\s*(\S+)\s*~\s*(\S+)\s+via\s+(E1|E2)\s*,\s*nonedge\s+(\S+?)\s*\))");
  std::string rest;
  auto it = std::sregex_iterator(body.begin(), body.end(), step_re);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    rest += body.substr(consumed, static_cast<std::size_t>(m.position()) - consumed);
    consumed = static_cast<std::size_t>(m.position() + m.length());
    ForcingStep step;
    step.from = parse_arc(inst, m[1]);
    step.to = parse_arc(inst, m[2]);
    step.side = m[3] == "E1" ? Side::kFirst : Side::kSecond;
    step.nonedge = parse_edge(inst, m[4]);
    w.class_edges.insert(step.from);
    w.class_edges.insert(step.to);
    w.chain.push_back(step);
  }
  rest += body.substr(consumed);
  if (!trim(rest).empty()) syntax(chain_line, "malformed CHAIN step");
  return w;
}

bool read_answer(Reader& in) {
  const std::size_t n = in.line_number();
  const std::string w = in.word();
  if (w == "YES") return true;
  if (w == "NO") return false;
  syntax(n, "expected YES or NO");
}

}  // namespace

std::string format_arc(const SharedInstance& inst, Arc a) {
  return inst.name(a.tail) + "->" + inst.name(a.head);
}

std::string format_arcs(const SharedInstance& inst, const DirectedEdgeSet& arcs) {
  std::string out;
  for (const Arc& a : arcs) {
    if (!out.empty()) out += ' ';
    out += format_arc(inst, a);
  }
  return out;
}

std::string serialize_chordal_result(const SharedInstance& inst, const ChordalResult& result) {
  if (const auto* cert = std::get_if<ChordalCertificate>(&result)) {
    return "YES\n" + line("A", format_edges(inst, cert->augmenting)) +
           line("PEO", format_vertices(inst, cert->elimination_order));
  }
  const auto& diag = std::get<ChordalDiagnostic>(result);
  return "NO\n" + line("RESIDUAL", format_vertices(inst, to_vector(diag.residual_vertices))) +
         line("F", format_edges(inst, diag.accumulated_f));
}

std::string serialize_comparability_result(const SharedInstance& inst,
                                           const ComparabilityResult& result) {
  if (const auto* cert = std::get_if<ComparabilityCertificate>(&result)) {
    return "YES\n" + comparability_block(inst, *cert);
  }
  return "NO\n" + witness_block(inst, std::get<ForcingWitness>(result));
}

std::string serialize_permutation_result(const SharedInstance& inst,
                                         const PermutationResult& result) {
  if (const auto* cert = std::get_if<PermutationCertificate>(&result)) {
    std::string segments;
    for (const Segment& s : cert->segments()) {
      if (!segments.empty()) segments += ' ';
      segments += inst.name(s.vertex) + ':' + std::to_string(s.top) + ',' +
                  std::to_string(s.bottom);
    }
    return "YES\n" + line("L", format_vertices(inst, cert->global_pair.l)) +
           line("P", format_vertices(inst, cert->global_pair.p)) + line("SEGMENTS", segments) +
           "COMP:\n" + comparability_block(inst, cert->comparability_cert) + "CO-COMP:\n" +
           comparability_block(inst, cert->co_comparability_cert);
  }
  const auto& w = std::get<PermutationWitness>(result);
  return std::string("NO\n") +
         (w.side == FailedSide::kComparability ? "COMP:\n" : "CO-COMP:\n") +
         witness_block(inst, w.witness);
}

ChordalResult parse_chordal_result(const SharedInstance& inst, std::string_view text) {
  Reader in(text);
  ChordalResult out;
  if (read_answer(in)) {
    ChordalCertificate cert;
    cert.augmenting = parse_edges(inst, in.field("A"));
    cert.elimination_order = parse_vertices(inst, in.field("PEO"));
    out = std::move(cert);
  } else {
    ChordalDiagnostic diag;
    diag.residual_vertices = to_bitset(parse_vertices(inst, in.field("RESIDUAL")), inst.size());
    diag.accumulated_f = parse_edges(inst, in.field("F"));
    out = std::move(diag);
  }
  in.expect_end();
  return out;
}

ComparabilityResult parse_comparability_result(const SharedInstance& inst,
                                               std::string_view text) {
  Reader in(text);
  ComparabilityResult out;
  if (read_answer(in)) {
    out = read_comparability_block(inst, in);
  } else {
    out = read_witness_block(inst, in);
  }
  in.expect_end();
  return out;
}

PermutationResult parse_permutation_result(const SharedInstance& inst, std::string_view text) {
  Reader in(text);
  PermutationResult out;
  if (read_answer(in)) {
    PermutationCertificate cert;
    cert.global_pair.l = parse_vertices(inst, in.field("L"));
    cert.global_pair.p = parse_vertices(inst, in.field("P"));
    if (in.peek_key("SEGMENTS")) in.field("SEGMENTS");
    in.header("COMP");
    cert.comparability_cert = read_comparability_block(inst, in);
    in.header("CO-COMP");
    cert.co_comparability_cert = read_comparability_block(inst, in);
    out = std::move(cert);
  } else {
    PermutationWitness w;
    if (in.peek_key("COMP")) {
      in.header("COMP");
      w.side = FailedSide::kComparability;
    } else {
      in.header("CO-COMP");
      w.side = FailedSide::kCoComparability;
    }
    w.witness = read_witness_block(inst, in);
    out = std::move(w);
  }
  in.expect_end();
  return out;
}

}  // namespace simgraph
