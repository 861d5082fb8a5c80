#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "crosscap/characterize.hpp"
#include "crosscap/errors.hpp"

namespace crosscap {

std::string to_string(TreeFamily f) {
  switch (f) {
    case TreeFamily::TOdd: return "T_odd";
    case TreeFamily::TEven: return "T_even";
    case TreeFamily::OT: return "OT";
    case TreeFamily::NT: return "NT";
    case TreeFamily::Daisy: return "Daisy";
  }
  return "?";
}

TreeFamily parse_tree_family(std::string_view text) {
  for (auto f : {TreeFamily::TOdd, TreeFamily::TEven, TreeFamily::OT, TreeFamily::NT, TreeFamily::Daisy})
    if (text == to_string(f)) return f;
  throw PreconditionViolated("unknown tree family '" + std::string(text) + "'");
}

int TreeTemplate::vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  throw UnknownCurve("template has no vertex '" + std::string(name) + "'");
}

int TreeTemplate::expected_vertex_count() const {
  switch (family) {
    case TreeFamily::TOdd: return 4 * g + k - 1;
    case TreeFamily::TEven: return 4 * g + k;
    case TreeFamily::OT: return 4 * g + k - 2;
    case TreeFamily::NT: return 4 * g + k - 1;
    case TreeFamily::Daisy: return r + 1;
  }
  return 0;
}

std::vector<int> TreeTemplate::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> TreeTemplate::leaf_paths() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (neighbors(v).size() <= 1) leaves.push_back(v);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      // path by parent pointers from a breadth-first search
      std::vector<int> parent(n, -2);
      std::vector<int> queue{leaves[i]};
      parent[leaves[i]] = -1;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : neighbors(queue[q]))
          if (parent[w] == -2) {
            parent[w] = queue[q];
            queue.push_back(w);
          }
      if (parent[leaves[j]] == -2) continue;
      std::vector<int> path;
      for (int v = leaves[j]; v != -1; v = parent[v]) path.push_back(v);
      out.push_back(path);
    }
  if (n == 1) out.push_back({0});
  return out;
}

int TreeTemplate::longest_chain() const {
  int best = vertices.empty() ? 0 : 1;
  for (const auto& p : leaf_paths()) best = std::max(best, static_cast<int>(p.size()));
  return best;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int column_of(const std::string& line, const std::string& word) {
  const auto p = line.find(word);
  return p == std::string::npos ? 1 : static_cast<int>(p) + 1;
}

int read_int(const std::string& value, int line, int col) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(line, col, "expected an integer, got '" + value + "'");
  }
}

}  // namespace

TreeTemplate parse_template(std::string_view text) {
  TreeTemplate t;
  bool have_family = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::map<std::string, int> index;
  auto lookup = [&](const std::string& name, int line, int col) {
    auto it = index.find(name);
    if (it == index.end()) throw SyntaxError(line, col, "unknown vertex '" + name + "'");
    return it->second;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto w = words(line);
    if (w.empty()) continue;
    const int col = column_of(line, w[0]);
    if (w[0].rfind("family=", 0) == 0) {
      if (have_family) throw SyntaxError(lineno, col, "family given twice");
      have_family = true;
      try {
        t.family = parse_tree_family(w[0].substr(7));
      } catch (const Error& e) {
        throw SyntaxError(lineno, col, e.what());
      }
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto eq = w[i].find('=');
        const int c = column_of(line, w[i]);
        if (eq == std::string::npos) throw SyntaxError(lineno, c, "expected key=value, got '" + w[i] + "'");
        const std::string key = w[i].substr(0, eq);
        const int v = read_int(w[i].substr(eq + 1), lineno, c);
        if (key == "g") t.g = v;
        else if (key == "k") t.k = v;
        else if (key == "r") t.r = v;
        else throw SyntaxError(lineno, c, "unknown parameter '" + key + "'");
      }
    } else if (w[0] == "vertex") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (index.count(w[i])) throw SyntaxError(lineno, column_of(line, w[i]), "vertex '" + w[i] + "' declared twice");
        index[w[i]] = static_cast<int>(t.vertices.size());
        t.vertices.push_back(w[i]);
      }
    } else if (w[0] == "colored") {
      for (std::size_t i = 1; i < w.size(); ++i) t.colored.push_back(lookup(w[i], lineno, column_of(line, w[i])));
    } else if (w[0] == "edge") {
      if (w.size() != 3) throw SyntaxError(lineno, col, "edge takes two vertices");
      t.edges.emplace_back(lookup(w[1], lineno, column_of(line, w[1])), lookup(w[2], lineno, column_of(line, w[2])));
    } else if (w[0] == "pair") {
      if (w.size() != 4 || w[3] != "separating") throw SyntaxError(lineno, col, "expected 'pair <u> <v> separating'");
      t.separating_pairs.emplace_back(lookup(w[1], lineno, column_of(line, w[1])), lookup(w[2], lineno, column_of(line, w[2])));
    } else if (w[0] == "chain") {
      if (w.size() < 3 || w.back() != "maximal") throw SyntaxError(lineno, col, "expected 'chain <v...> maximal'");
      std::vector<int> ch;
      for (std::size_t i = 1; i + 1 < w.size(); ++i) ch.push_back(lookup(w[i], lineno, column_of(line, w[i])));
      t.maximal_chains.push_back(ch);
    } else if (w[0] == "corner") {
      for (std::size_t i = 1; i < w.size(); ++i) t.right_corner.push_back(lookup(w[i], lineno, column_of(line, w[i])));
    } else {
      throw SyntaxError(lineno, col, "unknown directive '" + w[0] + "'");
    }
  }
  if (!have_family) throw SyntaxError(lineno + 1, 1, "missing family line");
  return t;
}

TreeTemplate load_template(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionViolated("cannot read template file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_template(ss.str());
}

std::string serialize_template(const TreeTemplate& t) {
  std::ostringstream out;
  out << "family=" << to_string(t.family);
  if (t.family == TreeFamily::Daisy)
    out << " r=" << t.r << "\n";
  else
    out << " g=" << t.g << " k=" << t.k << "\n";
  out << "vertex";
  for (const auto& v : t.vertices) out << ' ' << v;
  out << "\n";
  if (!t.colored.empty()) {
    out << "colored";
    for (int v : t.colored) out << ' ' << t.vertices[v];
    out << "\n";
  }
  for (auto [a, b] : t.edges) out << "edge " << t.vertices[a] << ' ' << t.vertices[b] << "\n";
  if (!t.right_corner.empty()) {
    out << "corner";
    for (int v : t.right_corner) out << ' ' << t.vertices[v];
    out << "\n";
  }
  for (auto [a, b] : t.separating_pairs) out << "pair " << t.vertices[a] << ' ' << t.vertices[b] << " separating\n";
  for (const auto& ch : t.maximal_chains) {
    out << "chain";
    for (int v : ch) out << ' ' << t.vertices[v];
    out << " maximal\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

// Vertex of the NT tree that the extra curve a0 meets.
constexpr int kNtAnchor = 2;

int min_g(TreeFamily f) { return f == TreeFamily::TEven ? 1 : 2; }

}  // namespace

TreeTemplate standard_template(TreeFamily family, int g, int k) {
  if (family == TreeFamily::Daisy) return daisy_template(g);
  if (g < 1 || k < 0) throw PreconditionViolated("tree parameters need g >= 1 and k >= 0");
  if (g < min_g(family)) throw PreconditionViolated(to_string(family) + " needs g >= " + std::to_string(min_g(family)));
  TreeTemplate t;
  t.family = family;
  t.g = g;
  t.k = k;
  std::map<int, int> pos;  // a_i -> vertex position, filled in index order at the end
  std::set<int> used;
  std::vector<std::pair<int, int>> edges;
  auto edge = [&](int a, int b) {
    used.insert(a);
    used.insert(b);
    edges.emplace_back(a, b);
  };
  const bool nt = family == TreeFamily::NT;
  const int center = nt ? 4 * g - 3 : 4 * g - 2;
  used.insert(center);
  // OT(g, 0) drops the side leaf of the first block
  const bool trimmed = family == TreeFamily::OT && k == 0;
  for (int j = 1; j < g; ++j) {
    edge(4 * j - 3, 4 * j - 2);
    if (!(trimmed && j == 1)) edge(4 * j - 2, 4 * j - 1);
    edge(4 * j - 2, 4 * j);
    edge(4 * j, j + 1 < g ? 4 * j + 2 : center);
  }
  std::vector<int> corner;
  if (nt) {
    for (int i = 4 * g - 2; i <= 4 * g + k - 2; ++i) corner.push_back(i);
  } else {
    const int extra_end = family == TreeFamily::TOdd ? 4 * g + k - 1 : family == TreeFamily::TEven ? 4 * g + k : 4 * g + k - 2;
    corner.push_back(4 * g - 3);
    for (int i = 4 * g; i <= extra_end; ++i) corner.push_back(i);
    corner.push_back(4 * g - 1);
  }
  for (int v : corner) edge(v, center);
  if (nt) edge(0, g == 1 ? center : kNtAnchor);
  for (int i : used) {
    pos[i] = static_cast<int>(t.vertices.size());
    t.vertices.push_back("a" + std::to_string(i));
  }
  for (auto [a, b] : edges) t.edges.emplace_back(pos[a], pos[b]);
  for (int v : corner) t.right_corner.push_back(pos[v]);
  for (std::size_t i = 0; i + 1 < corner.size(); ++i) t.separating_pairs.emplace_back(pos[corner[i]], pos[corner[i + 1]]);
  if (family == TreeFamily::TOdd || family == TreeFamily::TEven)
    t.colored = {pos[4 * g - 3], pos[used.count(4 * g) ? 4 * g : 4 * g - 1]};
  else if (family == TreeFamily::OT)
    t.colored = {pos[4 * g - 3], pos[4 * g - 1]};
  t.maximal_chains = t.leaf_paths();
  return t;
}

TreeTemplate daisy_template(int r) {
  if (r < 1) throw PreconditionViolated("a daisy needs at least one petal");
  TreeTemplate t;
  t.family = TreeFamily::Daisy;
  t.r = r;
  t.vertices.push_back("d0");
  for (int i = 1; i <= r; ++i) {
    t.vertices.push_back("d" + std::to_string(i));
    t.edges.emplace_back(0, i);
  }
  t.maximal_chains = t.leaf_paths();
  return t;
}

// ---------------------------------------------------------------------------

namespace {

bool tree_shaped(const TreeTemplate& t) {
  const int n = static_cast<int>(t.vertices.size());
  if (n == 0 || static_cast<int>(t.edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : t.edges) {
    if (a == b) return false;
    const int x = find(a), y = find(b);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

bool adjacent(const TreeTemplate& t, int a, int b) {
  return std::any_of(t.edges.begin(), t.edges.end(), [&](const Edge& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

}  // namespace

LemmaReport validate_template(const TreeTemplate& t) {
  LemmaReport rep;
  rep.lemma = "template";
  rep.facts["family"] = to_string(t.family);
  const int n = static_cast<int>(t.vertices.size());
  rep.facts["vertices"] = n;
  const bool daisy = t.family == TreeFamily::Daisy;

  if (daisy ? t.r < 1 : (t.g < min_g(t.family) || t.k < 0))
    rep.add("parameters", Verdict::Fails, "parameters out of range for " + to_string(t.family));
  else
    rep.add("parameters", Verdict::Holds, daisy ? "r=" + std::to_string(t.r) : "g=" + std::to_string(t.g) + " k=" + std::to_string(t.k));

  const int want = t.expected_vertex_count();
  if (n == want)
    rep.add("vertex-count", Verdict::Holds, std::to_string(n) + " vertices");
  else
    rep.add("vertex-count", Verdict::Fails, std::to_string(n) + " vertices, expected " + std::to_string(want), std::to_string(n));

  const bool shaped = tree_shaped(t);
  if (shaped)
    rep.add("tree", Verdict::Holds, std::to_string(t.edges.size()) + " edges, connected, acyclic");
  else
    rep.add("tree", Verdict::Fails, "edges do not form a tree on the vertices");

  // abstract neighborhood: one crossing per edge, so chi = -(edges)
  const int chi = -static_cast<int>(t.edges.size());
  rep.facts["neighborhood_chi"] = chi;
  if (!daisy && shaped) {
    int expect = 0, seen = chi;
    std::string what = "whole tree";
    switch (t.family) {
      case TreeFamily::TOdd: expect = 2 - 4 * t.g - t.k; break;
      case TreeFamily::TEven: expect = 1 - 4 * t.g - t.k; break;
      case TreeFamily::OT: expect = 3 - 4 * t.g - t.k; break;
      case TreeFamily::NT:
        expect = 3 - 4 * t.g - t.k;
        seen = chi + 1;
        what = "tree without a0";
        break;
      case TreeFamily::Daisy: break;
    }
    if (t.family == TreeFamily::NT) {
      const auto it = std::find(t.vertices.begin(), t.vertices.end(), "a0");
      if (it == t.vertices.end() || t.neighbors(static_cast<int>(it - t.vertices.begin())).size() != 1) {
        rep.add("euler", Verdict::Fails, "NT needs a leaf named a0");
        seen = expect + 1;
      }
    }
    if (seen == expect)
      rep.add("euler", Verdict::Holds, what + " has chi " + std::to_string(seen));
    else if (rep.conditions.back().id != "euler")
      rep.add("euler", Verdict::Fails, what + " has chi " + std::to_string(seen) + ", expected " + std::to_string(expect),
              std::to_string(seen));
  }

  if (daisy) {
    bool star = shaped && n == t.r + 1;
    for (int i = 1; star && i < n; ++i) star = adjacent(t, 0, i);
    if (star)
      rep.add("shape", Verdict::Holds, "one center with " + std::to_string(t.r) + " petals");
    else
      rep.add("shape", Verdict::Fails, "not a star with " + std::to_string(t.r) + " petals");
    return rep;
  }

  auto named = [&](int i) {
    const auto it = std::find(t.vertices.begin(), t.vertices.end(), "a" + std::to_string(i));
    return it == t.vertices.end() ? -1 : static_cast<int>(it - t.vertices.begin());
  };
  std::set<int> want_colored;
  if (t.family == TreeFamily::TOdd || t.family == TreeFamily::TEven)
    want_colored = {named(4 * t.g - 3), named(t.family == TreeFamily::TOdd && t.k == 0 ? 4 * t.g - 1 : 4 * t.g)};
  else if (t.family == TreeFamily::OT)
    want_colored = {named(4 * t.g - 3), named(4 * t.g - 1)};
  const std::set<int> have_colored(t.colored.begin(), t.colored.end());
  if (have_colored == want_colored && !want_colored.count(-1))
    rep.add("colored", Verdict::Holds, std::to_string(t.colored.size()) + " colored vertices");
  else
    rep.add("colored", Verdict::Fails, "colored vertices differ from the family's", "colored");

  int want_pairs = 0;
  switch (t.family) {
    case TreeFamily::TOdd: want_pairs = t.k + 1; break;
    case TreeFamily::TEven: want_pairs = t.k + 2; break;
    case TreeFamily::OT: want_pairs = std::max(t.k, 1); break;
    case TreeFamily::NT: want_pairs = t.k; break;
    case TreeFamily::Daisy: break;
  }
  bool corner_ok = static_cast<int>(t.right_corner.size()) == want_pairs + 1;
  if (corner_ok && !t.right_corner.empty()) {
    const int hub = named(t.family == TreeFamily::NT ? 4 * t.g - 3 : 4 * t.g - 2);
    for (int v : t.right_corner) corner_ok = corner_ok && hub >= 0 && adjacent(t, v, hub);
  }
  bool pairs_ok = static_cast<int>(t.separating_pairs.size()) == want_pairs;
  for (std::size_t i = 0; pairs_ok && i < t.separating_pairs.size(); ++i) {
    const auto [a, b] = t.separating_pairs[i];
    pairs_ok = i + 1 < t.right_corner.size() && ((a == t.right_corner[i] && b == t.right_corner[i + 1]) ||
                                                 (b == t.right_corner[i] && a == t.right_corner[i + 1]));
  }
  if (corner_ok && pairs_ok)
    rep.add("right-corner", Verdict::Holds, std::to_string(want_pairs) + " consecutive separating pairs");
  else
    rep.add("right-corner", Verdict::Fails,
            std::to_string(t.separating_pairs.size()) + " declared pairs, expected " + std::to_string(want_pairs) +
                " consecutive pairs along a corner of " + std::to_string(want_pairs + 1) + " leaves of the hub",
            std::to_string(t.separating_pairs.size()));

  bool chains_ok = shaped;
  for (const auto& ch : t.maximal_chains) {
    for (std::size_t i = 0; chains_ok && i + 1 < ch.size(); ++i) chains_ok = adjacent(t, ch[i], ch[i + 1]);
    chains_ok = chains_ok && std::set<int>(ch.begin(), ch.end()).size() == ch.size() &&
                t.neighbors(ch.front()).size() <= 1 && t.neighbors(ch.back()).size() <= 1;
  }
  if (chains_ok)
    rep.add("chains", Verdict::Holds, std::to_string(t.maximal_chains.size()) + " declared maximal chains run leaf to leaf");
  else
    rep.add("chains", Verdict::Fails, "a declared maximal chain is not a leaf-to-leaf path of the tree");
  return rep;
}

Embedding parse_embedding(std::string_view text) {
  Embedding out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw PreconditionViolated("embedding entries look like vertex=curve: '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

std::optional<SurfaceInvariants> claimed_component(const TreeTemplate& t) {
  switch (t.family) {
    case TreeFamily::TOdd: return nonorientable_surface(2 * t.g + 1, t.k, 1);
    case TreeFamily::TEven: return nonorientable_surface(2 * t.g + 2, t.k, 1);
    case TreeFamily::OT: return orientable_surface(t.g, t.k, 1);
    default: return std::nullopt;
  }
}

}  // namespace crosscap
