#include "artin/defgraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace artin {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

DefiningGraph::DefiningGraph(
    std::vector<std::string> names,
    std::vector<std::tuple<std::string, std::string, int>> edges) {
  std::sort(names.begin(), names.end());
  for (std::size_t i = 0; i + 1 < names.size(); ++i)
    if (names[i] == names[i + 1])
      throw parse_error("duplicate vertex '" + names[i] + "'");
  for (const auto& n : names)
    if (!valid_name(n)) throw parse_error("invalid vertex name '" + n + "'");
  if (names.size() > 64) throw parse_error("graphs are limited to 64 vertices");
  names_ = std::move(names);

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names_.size(); ++i) index[names_[i]] = static_cast<int>(i);

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b, m] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw parse_error("unknown vertex '" + a + "' in edge");
    if (ib == index.end()) throw parse_error("unknown vertex '" + b + "' in edge");
    if (ia->second == ib->second) throw parse_error("self-loop at '" + a + "'");
    if (m < 2) throw parse_error("edge label must be >= 2");
    int u = std::min(ia->second, ib->second), v = std::max(ia->second, ib->second);
    if (!seen.insert({u, v}).second)
      throw parse_error("duplicate edge {" + a + "," + b + "}");
    edges_.push_back({u, v, m});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  build_tables();
}

void DefiningGraph::build_tables() {
  int n = vertex_count();
  label_.assign(static_cast<std::size_t>(n) * n, 0);
  adj_.assign(n, 0);
  adj2_.assign(n, 0);
  for (const Edge& e : edges_) {
    label_[static_cast<std::size_t>(e.u) * n + e.v] = e.label;
    label_[static_cast<std::size_t>(e.v) * n + e.u] = e.label;
    adj_[e.u] |= 1ull << e.v;
    adj_[e.v] |= 1ull << e.u;
    if (e.label == 2) {
      adj2_[e.u] |= 1ull << e.v;
      adj2_[e.v] |= 1ull << e.u;
    }
  }
}

std::optional<VertexId> DefiningGraph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

bool DefiningGraph::adjacent(VertexId u, VertexId v) const {
  return u != v && (adj_[u] >> v) & 1u;
}

std::optional<int> DefiningGraph::label(VertexId u, VertexId v) const {
  if (u == v) return std::nullopt;
  int m = label_[static_cast<std::size_t>(u) * vertex_count() + v];
  if (m == 0) return std::nullopt;
  return m;
}

VertexSet DefiningGraph::full_vertex_set() const {
  VertexSet s(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) s[i] = i;
  return s;
}

VertexSet DefiningGraph::vertex_set_from_names(const std::vector<std::string>& names) const {
  VertexSet s;
  for (const auto& n : names) {
    auto id = index_of(n);
    if (!id) throw parse_error("unknown vertex '" + n + "'");
    s.push_back(*id);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::string> DefiningGraph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(name(v));
  return out;
}

DefiningGraph DefiningGraph::full_subgraph(const VertexSet& r) const {
  std::vector<std::string> names;
  for (VertexId v : r) {
    if (v < 0 || v >= vertex_count()) throw parse_error("vertex index out of range");
    names.push_back(name(v));
  }
  std::vector<std::tuple<std::string, std::string, int>> es;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (auto m = label(r[i], r[j])) es.emplace_back(name(r[i]), name(r[j]), *m);
  return DefiningGraph(std::move(names), std::move(es));
}

std::vector<VertexSet> DefiningGraph::maximal_cliques() const {
  std::vector<std::uint64_t> found;
  int n = vertex_count();
  if (n == 0) return {};
  // Bron-Kerbosch with pivoting on bitmasks.
  auto pick_pivot = [&](std::uint64_t p, std::uint64_t x) {
    std::uint64_t cand = p | x;
    int best = -1, best_deg = -1;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      int deg = std::popcount(adj_[v] & p);
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    return best;
  };
  struct Frame {
    std::uint64_t r, p, x;
  };
  std::vector<Frame> stack{{0, n == 64 ? ~0ull : (1ull << n) - 1, 0}};
  while (!stack.empty()) {
    auto [r, p, x] = stack.back();
    stack.pop_back();
    if (!p && !x) {
      found.push_back(r);
      continue;
    }
    if (!p) continue;
    int piv = pick_pivot(p, x);
    std::uint64_t ext = p & ~adj_[piv];
    while (ext) {
      int v = std::countr_zero(ext);
      std::uint64_t bit = 1ull << v;
      ext &= ext - 1;
      stack.push_back({r | bit, p & adj_[v], x & adj_[v]});
      p &= ~bit;
      x |= bit;
    }
  }
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (auto m : found) out.push_back(mask_to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Canonical orientation: min vertex first, then its smaller cycle neighbour.
std::array<VertexId, 4> orient_cycle(VertexId a, VertexId n1, VertexId opp, VertexId n2) {
  if (n1 > n2) std::swap(n1, n2);
  return {a, n1, opp, n2};
}

}  // namespace

std::vector<std::array<VertexId, 4>> DefiningGraph::induced_four_cycles() const {
  std::vector<std::array<VertexId, 4>> out;
  int n = vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int quad[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edge_count = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (adjacent(quad[i], quad[j])) {
                ++edge_count;
                ++deg[i];
                ++deg[j];
              }
          if (edge_count != 4) continue;
          if (deg[0] != 2 || deg[1] != 2 || deg[2] != 2 || deg[3] != 2) continue;
          // a has exactly two neighbours among {b,c,d}; the non-neighbour is
          // opposite.
          VertexId nb[2];
          int k = 0;
          VertexId opp = -1;
          for (int i = 1; i < 4; ++i) {
            if (adjacent(a, quad[i]))
              nb[k++] = quad[i];
            else
              opp = quad[i];
          }
          out.push_back(orient_cycle(a, nb[0], opp, nb[1]));
        }
  return out;
}

std::vector<FourCircuit> DefiningGraph::four_circuits() const {
  std::vector<FourCircuit> out;
  int n = vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // Three ways to choose the diagonal pairs of {a,b,c,d}.
          const std::array<std::array<VertexId, 4>, 3> cycles = {{
              {a, b, c, d},  // diagonals (a,c),(b,d)
              {a, c, b, d},  // diagonals (a,b),(c,d)
              {a, b, d, c},  // diagonals (a,d),(b,c)
          }};
          for (const auto& cyc : cycles) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
              if (!adjacent(cyc[i], cyc[(i + 1) % 4])) ok = false;
            if (!ok) continue;
            FourCircuit fc;
            fc.cycle = orient_cycle(cyc[0], cyc[1], cyc[2], cyc[3]);
            for (auto [x, y] : {std::pair{cyc[0], cyc[2]}, std::pair{cyc[1], cyc[3]}})
              if (adjacent(x, y)) fc.chords.emplace_back(std::min(x, y), std::max(x, y));
            out.push_back(std::move(fc));
          }
        }
  return out;
}

std::string DefiningGraph::serialize() const {
  std::ostringstream out;
  for (const auto& n : names_) out << "vertex " << n << "\n";
  for (const Edge& e : edges_)
    out << "edge " << name(e.u) << " " << name(e.v) << " " << e.label << "\n";
  return out.str();
}

DefiningGraph parse_defining_graph(const std::string& text, bool strict) {
  std::vector<std::string> declared;
  std::vector<std::tuple<std::string, std::string, int>> edges;
  std::set<std::string> declared_set;
  std::set<std::pair<std::string, std::string>> edge_set;
  std::vector<std::pair<std::string, int>> implicit;  // name, line

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "vertex") {
      if (toks.size() != 2)
        throw parse_error("expected 'vertex <name>'", lineno, toks[0].column);
      if (!valid_name(toks[1].text))
        throw parse_error("invalid vertex name '" + toks[1].text + "'", lineno,
                          toks[1].column);
      if (!declared_set.insert(toks[1].text).second)
        throw parse_error("duplicate vertex '" + toks[1].text + "'", lineno,
                          toks[1].column);
      declared.push_back(toks[1].text);
    } else if (kw == "edge") {
      if (toks.size() != 4)
        throw parse_error("expected 'edge <name> <name> <label>'", lineno,
                          toks[0].column);
      for (int i = 1; i <= 2; ++i)
        if (!valid_name(toks[i].text))
          throw parse_error("invalid vertex name '" + toks[i].text + "'", lineno,
                            toks[i].column);
      const std::string& a = toks[1].text;
      const std::string& b = toks[2].text;
      if (a == b) throw parse_error("self-loop at '" + a + "'", lineno, toks[2].column);
      int m = 0;
      try {
        std::size_t pos = 0;
        m = std::stoi(toks[3].text, &pos);
        if (pos != toks[3].text.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw parse_error("invalid edge label '" + toks[3].text + "'", lineno,
                          toks[3].column);
      }
      if (m < 2)
        throw parse_error("edge label must be >= 2, got " + toks[3].text, lineno,
                          toks[3].column);
      auto key = std::minmax(a, b);
      if (!edge_set.insert({key.first, key.second}).second)
        throw parse_error("duplicate edge {" + a + "," + b + "}", lineno, toks[1].column);
      for (const auto& v : {a, b})
        if (!declared_set.count(v)) {
          if (strict)
            throw parse_error("undeclared vertex '" + v + "' in edge (strict mode)",
                              lineno, toks[1].column);
          implicit.emplace_back(v, lineno);
        }
      edges.emplace_back(a, b, m);
    } else {
      throw parse_error("unknown statement '" + kw + "'", lineno, toks[0].column);
    }
  }
  for (auto& [v, ln] : implicit)
    if (declared_set.insert(v).second) declared.push_back(v);
  return DefiningGraph(std::move(declared), std::move(edges));
}

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t set_to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (VertexId v : s) m |= 1ull << v;
  return m;
}

}  // namespace artin
