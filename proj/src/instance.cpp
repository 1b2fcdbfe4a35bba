#include "steiner/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace steiner {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

Instance::Instance(int vertex_count, std::vector<Edge> edges, std::vector<Vertex> terminals)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0) throw std::invalid_argument("instance needs at least one vertex");

  std::unordered_map<std::uint64_t, EdgeId> slot;
  slot.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.cost < 0) throw std::invalid_argument("negative edge cost");
    if (e.u == e.v) continue;  // self-loop
    auto [it, fresh] = slot.try_emplace(pair_key(e.u, e.v), static_cast<EdgeId>(edges_.size()));
    if (fresh) {
      edges_.push_back(e);
    } else if (e.cost < edges_[it->second].cost) {
      edges_[it->second].cost = e.cost;  // parallel edges keep the cheapest
    }
  }

  is_terminal_.assign(vertex_count, 0);
  for (Vertex t : terminals) {
    if (t < 0 || t >= vertex_count) throw std::invalid_argument("terminal out of range");
    is_terminal_[t] = 1;
  }
  for (Vertex v = 0; v < vertex_count; ++v)
    if (is_terminal_[v]) terminals_.push_back(v);
  if (terminals_.empty()) throw std::invalid_argument("instance needs at least one terminal");

  adj_offset_.assign(vertex_count + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offset_[e.u + 1];
    ++adj_offset_[e.v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) adj_offset_[v + 1] += adj_offset_[v];
  adj_edges_.resize(2 * edges_.size());
  std::vector<int> fill(adj_offset_.begin(), adj_offset_.end() - 1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    adj_edges_[fill[edges_[e].u]++] = e;
    adj_edges_[fill[edges_[e].v]++] = e;
  }

  edges_by_cost_.resize(edges_.size());
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) edges_by_cost_[e] = e;
  std::sort(edges_by_cost_.begin(), edges_by_cost_.end(), [&](EdgeId a, EdgeId b) {
    if (edges_[a].cost != edges_[b].cost) return edges_[a].cost < edges_[b].cost;
    return a < b;
  });

  Cost m = std::max<Cost>(1, static_cast<Cost>(edges_.size()));
  cost_cap_ = kInfCost / (m + 1);
  for (const Edge& e : edges_)
    if (e.cost > cost_cap_)
      throw std::invalid_argument("edge cost too large for overflow-free accumulation");
}

namespace {

struct Tokenizer {
  std::istream& in;
  int line_no = 0;
  std::string line;

  // Next non-empty, non-comment line split into tokens; empty vector = EOF.
  std::vector<std::string> next() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (toks.empty()) continue;
      if (toks[0][0] == '#') continue;
      return toks;
    }
    return {};
  }
};

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

long long parse_int(const std::string& tok, const char* what, int line) {
  // SteinLib costs are integers; anything fractional is rejected, not rounded.
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError(std::string("non-integer ") + what + " '" + tok + "'", line);
  return value;
}

}  // namespace

Instance parse_stp(std::istream& in) {
  Tokenizer tz{in};

  long long n = -1, m = -1, k = -1;
  std::vector<Edge> edges;
  std::vector<Vertex> terminals;
  bool seen_graph = false, seen_terminals = false;

  auto vertex_of = [&](const std::string& tok, int line) -> Vertex {
    long long id = parse_int(tok, "vertex id", line);
    if (id < 1 || id > n) throw ParseError("vertex id out of range: " + tok, line);
    return static_cast<Vertex>(id - 1);
  };

  std::vector<std::string> toks = tz.next();
  // The magic header ("33D32945 STP File ...") is optional in practice.
  if (!toks.empty() && toks[0] == "33D32945") toks = tz.next();

  while (!toks.empty()) {
    std::string key = lower(toks[0]);
    if (key == "section") {
      if (toks.size() < 2) throw ParseError("SECTION without a name", tz.line_no);
      std::string section = lower(toks[1]);
      if (section == "graph") {
        seen_graph = true;
        for (toks = tz.next(); !toks.empty(); toks = tz.next()) {
          std::string gk = lower(toks[0]);
          if (gk == "end") break;
          if (gk == "nodes") {
            if (toks.size() < 2) throw ParseError("Nodes needs a count", tz.line_no);
            n = parse_int(toks[1], "node count", tz.line_no);
            if (n < 1) throw ParseError("node count must be positive", tz.line_no);
          } else if (gk == "edges" || gk == "arcs") {
            if (toks.size() < 2) throw ParseError("Edges needs a count", tz.line_no);
            m = parse_int(toks[1], "edge count", tz.line_no);
          } else if (gk == "e" || gk == "a") {
            if (n < 0) throw ParseError("edge before Nodes declaration", tz.line_no);
            if (toks.size() < 4) throw ParseError("edge needs endpoints and cost", tz.line_no);
            Vertex u = vertex_of(toks[1], tz.line_no);
            Vertex v = vertex_of(toks[2], tz.line_no);
            long long c = parse_int(toks[3], "edge cost", tz.line_no);
            if (c < 0) throw ParseError("negative edge cost", tz.line_no);
            edges.push_back({u, v, static_cast<Cost>(c)});
          } else {
            throw ParseError("unknown Graph entry '" + toks[0] + "'", tz.line_no);
          }
        }
        if (toks.empty()) throw ParseError("Graph section not closed by END", tz.line_no);
        if (m >= 0 && static_cast<long long>(edges.size()) != m)
          throw ParseError("edge count mismatch: declared " + std::to_string(m) + ", found " +
                               std::to_string(edges.size()),
                           tz.line_no);
      } else if (section == "terminals") {
        seen_terminals = true;
        for (toks = tz.next(); !toks.empty(); toks = tz.next()) {
          std::string tk = lower(toks[0]);
          if (tk == "end") break;
          if (tk == "terminals") {
            if (toks.size() < 2) throw ParseError("Terminals needs a count", tz.line_no);
            k = parse_int(toks[1], "terminal count", tz.line_no);
          } else if (tk == "t") {
            if (n < 0) throw ParseError("terminal before Graph section", tz.line_no);
            if (toks.size() < 2) throw ParseError("T needs a vertex id", tz.line_no);
            terminals.push_back(vertex_of(toks[1], tz.line_no));
          } else if (tk == "root" || tk == "rootp") {
            // group-steiner extensions; the root is a terminal in these files
          } else {
            throw ParseError("unknown Terminals entry '" + toks[0] + "'", tz.line_no);
          }
        }
        if (toks.empty()) throw ParseError("Terminals section not closed by END", tz.line_no);
        if (k >= 0 && static_cast<long long>(terminals.size()) != k)
          throw ParseError("terminal count mismatch: declared " + std::to_string(k) +
                               ", found " + std::to_string(terminals.size()),
                           tz.line_no);
      } else {
        // Comment, Coordinates, MaximumDegrees, ... skipped wholesale.
        for (toks = tz.next(); !toks.empty(); toks = tz.next())
          if (lower(toks[0]) == "end") break;
        if (toks.empty())
          throw ParseError("section '" + section + "' not closed by END", tz.line_no);
      }
    } else if (key == "eof") {
      break;
    } else {
      throw ParseError("unexpected token '" + toks[0] + "'", tz.line_no);
    }
    toks = tz.next();
  }

  if (!seen_graph) throw ParseError("missing Graph section", tz.line_no);
  if (!seen_terminals) throw ParseError("missing Terminals section", tz.line_no);
  if (terminals.empty()) throw ParseError("no terminals", tz.line_no);

  try {
    return Instance(static_cast<int>(n), std::move(edges), std::move(terminals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), tz.line_no);
  }
}

Instance parse_stp_string(const std::string& text) {
  std::istringstream in(text);
  return parse_stp(in);
}

Instance parse_stp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_stp(in);
}

void write_stp(std::ostream& out, const Instance& inst, const std::string& name) {
  out << "33D32945 STP File, STP Format Version 1.0\n";
  out << "SECTION Comment\n";
  out << "Name \"" << name << "\"\n";
  out << "END\n\n";
  out << "SECTION Graph\n";
  out << "Nodes " << inst.vertex_count() << "\n";
  out << "Edges " << inst.edge_count() << "\n";
  for (const Edge& e : inst.edges())
    out << "E " << (e.u + 1) << " " << (e.v + 1) << " " << e.cost << "\n";
  out << "END\n\n";
  out << "SECTION Terminals\n";
  out << "Terminals " << inst.terminal_count() << "\n";
  for (Vertex t : inst.terminals()) out << "T " << (t + 1) << "\n";
  out << "END\n\nEOF\n";
}

}  // namespace steiner
