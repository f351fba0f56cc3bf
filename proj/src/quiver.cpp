#include "fundom/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fundom {

Quiver Quiver::with_default_labels(int n, std::vector<std::pair<int, int>> arrows) {
  Quiver q;
  q.n = n;
  q.arrows = std::move(arrows);
  q.labels.reserve(n);
  for (int i = 0; i < n; ++i) q.labels.push_back(std::to_string(i + 1));
  return q;
}

namespace {

void check_arrow(int s, int t, int n, const std::string& where) {
  if (s < 1 || s > n || t < 1 || t > n)
    throw ParseError(where + ": vertex out of range");
  if (s == t) throw ParseError(where + ": loops are not allowed");
}

Quiver parse_json_quiver(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON quiver: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer())
    throw ParseError("JSON quiver: integer field \"vertices\" required");
  int n = j["vertices"].get<int>();
  if (n < 0) throw ParseError("JSON quiver: negative vertex count");
  std::vector<std::pair<int, int>> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("JSON quiver: \"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
          !a[1].is_number_integer())
        throw ParseError("JSON quiver: each arrow must be [source, target]");
      int s = a[0].get<int>(), t = a[1].get<int>();
      check_arrow(s, t, n, "JSON quiver");
      arrows.emplace_back(s - 1, t - 1);
    }
  }
  return Quiver::with_default_labels(n, std::move(arrows));
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_quiver(text);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> arrows;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    std::string where = "line " + std::to_string(lineno);
    if (word == "vertices") {
      if (n >= 0) throw ParseError(where + ": duplicate vertices line");
      if (!(ls >> n) || n < 0) throw ParseError(where + ": expected `vertices <n>`");
    } else if (word == "arrow") {
      if (n < 0) throw ParseError(where + ": arrow before vertices line");
      int s, t;
      if (!(ls >> s >> t)) throw ParseError(where + ": expected `arrow <s> <t>`");
      check_arrow(s, t, n, where);
      arrows.emplace_back(s - 1, t - 1);
    } else {
      throw ParseError(where + ": unknown directive `" + word + "`");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(where + ": trailing tokens");
  }
  if (n < 0) throw ParseError("missing `vertices <n>` line");
  return Quiver::with_default_labels(n, std::move(arrows));
}

std::vector<int> topological_order(const Quiver& q) {
  std::vector<int> indeg(q.n, 0);
  for (auto [s, t] : q.arrows) ++indeg[t];
  std::vector<int> order;
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < q.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) ready.push(t);
  }
  if (static_cast<int>(order.size()) != q.n)
    throw std::invalid_argument("quiver has an oriented cycle");
  return order;
}

bool is_acyclic(const Quiver& q) {
  try {
    topological_order(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_connected(const Quiver& q) {
  if (q.n == 0) return true;
  std::vector<bool> seen(q.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [s, t] : q.arrows) {
      if (s == v && !seen[t]) seen[t] = true, stack.push_back(t);
      if (t == v && !seen[s]) seen[s] = true, stack.push_back(s);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<int> sinks(const Quiver& q) {
  std::vector<bool> has_out(q.n, false);
  for (auto [s, t] : q.arrows) has_out[s] = true;
  std::vector<int> r;
  for (int v = 0; v < q.n; ++v)
    if (!has_out[v]) r.push_back(v);
  return r;
}

std::vector<int> sources(const Quiver& q) {
  std::vector<bool> has_in(q.n, false);
  for (auto [s, t] : q.arrows) has_in[t] = true;
  std::vector<int> r;
  for (int v = 0; v < q.n; ++v)
    if (!has_in[v]) r.push_back(v);
  return r;
}

Quiver opposite(const Quiver& q) {
  Quiver r = q;
  for (auto& [s, t] : r.arrows) std::swap(s, t);
  return r;
}

namespace {

// Classifies one connected component given its vertex set.
std::string classify_component(const Quiver& q, const std::vector<int>& comp) {
  int n = static_cast<int>(comp.size());
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[comp[i]] = i;
  // Undirected multiplicity between component vertices.
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  int edges = 0;
  for (auto [s, t] : q.arrows) {
    auto is = index.find(s), it = index.find(t);
    if (is == index.end() || it == index.end()) continue;
    ++mult[is->second][it->second];
    ++mult[it->second][is->second];
    ++edges;
  }
  if (n == 1) return "A1";
  // Dynkin graphs are trees with simple edges.
  if (edges != n - 1) return "non-Dynkin";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mult[i][j] > 1) return "non-Dynkin";
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += mult[i][j];
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) return "non-Dynkin";
    if (deg[i] == 3) {
      if (branch >= 0) return "non-Dynkin";  // two branch vertices
      branch = i;
    }
  }
  if (branch < 0) return "A" + std::to_string(n);
  // Arm lengths from the unique branch vertex.
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (mult[branch][j] == 0) continue;
    int len = 0, prev = branch, cur = j;
    while (true) {
      ++len;
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (mult[cur][k] > 0 && k != prev) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  return "non-Dynkin";
}

}  // namespace

std::string dynkin_type(const Quiver& q) {
  if (q.n == 0) return "empty";
  // Connected components of the underlying graph.
  std::vector<int> comp_of(q.n, -1);
  int ncomp = 0;
  for (int v0 = 0; v0 < q.n; ++v0) {
    if (comp_of[v0] >= 0) continue;
    std::vector<int> stack{v0};
    comp_of[v0] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [s, t] : q.arrows) {
        if (s == v && comp_of[t] < 0) comp_of[t] = ncomp, stack.push_back(t);
        if (t == v && comp_of[s] < 0) comp_of[s] = ncomp, stack.push_back(s);
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> comps(ncomp);
  for (int v = 0; v < q.n; ++v) comps[comp_of[v]].push_back(v);
  std::string out;
  for (int c = 0; c < ncomp; ++c) {
    if (c) out += " + ";
    out += classify_component(q, comps[c]);
  }
  return out;
}

bool is_dynkin(const Quiver& q) {
  std::string t = dynkin_type(q);
  return q.n > 0 && t.find("non-Dynkin") == std::string::npos &&
         t.find('+') == std::string::npos;
}

std::string to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 0; v < q.n; ++v) out << "  \"" << q.labels[v] << "\";\n";
  for (auto [s, t] : q.arrows)
    out << "  \"" << q.labels[s] << "\" -> \"" << q.labels[t] << "\";\n";
  out << "}\n";
  return out.str();
}

std::vector<Path> all_paths(const Quiver& q) {
  if (!is_acyclic(q)) throw std::invalid_argument("all_paths: quiver must be acyclic");
  std::vector<Path> out;
  for (int v = 0; v < q.n; ++v) {
    // BFS by length keeps the deterministic (length, lex) order per source.
    std::vector<Path> frontier{{v, v, {}}};
    while (!frontier.empty()) {
      for (const auto& p : frontier) out.push_back(p);
      std::vector<Path> next;
      for (const auto& p : frontier)
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
          if (q.arrows[a].first == p.to) {
            Path e = p;
            e.to = q.arrows[a].second;
            e.arrows.push_back(a);
            next.push_back(std::move(e));
          }
      frontier = std::move(next);
    }
  }
  return out;
}

ExchangeMatrix exchange_matrix(const Quiver& q) {
  ExchangeMatrix b = ExchangeMatrix::Zero(q.n, q.n);
  for (auto [s, t] : q.arrows) {
    ++b(s, t);
    --b(t, s);
  }
  return b;
}

Quiver matrix_quiver(const ExchangeMatrix& b) {
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int m = 0; m < b(i, j); ++m) arrows.emplace_back(i, j);
  return Quiver::with_default_labels(static_cast<int>(b.rows()), std::move(arrows));
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
  int n = static_cast<int>(b.rows());
  if (k < 0 || k >= n) throw std::invalid_argument("mutate: vertex out of range");
  ExchangeMatrix r = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        r(i, j) = -b(i, j);
      else
        r(i, j) = b(i, j) +
                  (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
    }
  return r;
}

namespace {

bool lex_less(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

}  // namespace

ExchangeMatrix canonical_form(const ExchangeMatrix& b) {
  int n = static_cast<int>(b.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExchangeMatrix best = b;
  ExchangeMatrix cand(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cand(i, j) = b(perm[i], perm[j]);
    if (lex_less(cand, best)) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<ExchangeMatrix> mutation_class(const Quiver& q, std::size_t cap) {
  auto cmp = [](const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return lex_less(a, b);
  };
  std::set<ExchangeMatrix, decltype(cmp)> seen(cmp);
  std::vector<ExchangeMatrix> frontier{canonical_form(exchange_matrix(q))};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ExchangeMatrix> next;
    for (const auto& b : frontier)
      for (int k = 0; k < q.n; ++k) {
        ExchangeMatrix m = canonical_form(mutate(b, k));
        if (seen.insert(m).second) {
          if (seen.size() > cap)
            throw MutationClassCapExceeded(
                "mutation class exceeds cap of " + std::to_string(cap) +
                " matrices; quiver is likely not of Dynkin type");
          next.push_back(std::move(m));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool same_up_to_iso(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace fundom
