#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "crosscap/config.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"
#include "crosscap/transform.hpp"

namespace crosscap {

int CurveConfiguration::find_curve(std::string_view name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i] == name) return static_cast<int>(i);
  return -1;
}

int CurveConfiguration::curve_index(std::string_view name) const {
  const int i = find_curve(name);
  if (i < 0) throw UnknownCurve("no curve named '" + std::string(name) + "'");
  return i;
}

int CurveConfiguration::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  return -1;
}

int CurveConfiguration::arc_count() const {
  int n = 0;
  for (const auto& v : visits) n += static_cast<int>(v.size());
  return n;
}

int CurveConfiguration::crossing_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const Vertex& v) { return v.is_crossing(); }));
}

int CurveConfiguration::shared_crossings(int a, int b) const {
  int n = 0;
  for (const auto& v : vertices)
    if (v.is_crossing() && ((v.first == a && v.second == b) || (v.first == b && v.second == a))) ++n;
  return n;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.' || ch == '+' || ch == '~';
  });
}

int parse_int(const Token& t, std::string_view s, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw SyntaxError(line, t.column, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

int parse_sign(const Token& t, std::string_view s, int line) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw SyntaxError(line, t.column, "sign must be + or -, got '" + std::string(s) + "'");
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t p = s.find(sep, start);
    const std::size_t end = p == std::string_view::npos ? s.size() : p;
    if (end > start) out.emplace_back(s.substr(start, end - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

struct RawRegion {
  std::string name;
  SurfaceInvariants type;
  std::vector<std::pair<int, int>> faces;  // (face id, line)
  std::map<int, int> attach;
  int collars = 0;
  int line = 0;
};

int parse_face_id(const Token& t, std::string_view s, int line) {
  if (s.size() < 2 || s[0] != 'f') throw SyntaxError(line, t.column, "face ids look like f0, f1, ...: '" + std::string(s) + "'");
  return parse_int(t, s.substr(1), line);
}

}  // namespace

CurveConfiguration parse_config(std::string_view text) {
  CurveConfiguration c;
  bool have_surface = false;
  std::map<std::string, int> curve_line;
  std::vector<std::string> curve_order;
  struct RawVertex {
    std::string name, a, b;
    int line, column;
  };
  std::vector<RawVertex> raw_vertices;
  std::map<std::string, std::pair<std::vector<std::string>, int>> raw_seq;
  struct RawArc {
    std::string curve;
    int index, sign, line, column;
  };
  std::vector<RawArc> raw_arcs;
  std::vector<RawRegion> raw_regions;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t n) {
      if (toks.size() < n)
        throw SyntaxError(lineno, static_cast<int>(line.size()) + 1, "'" + kw + "' needs " + std::to_string(n - 1) + " argument(s)");
    };
    auto name_at = [&](std::size_t i) -> const std::string& {
      if (!valid_name(toks[i].text)) throw SyntaxError(lineno, toks[i].column, "invalid name '" + toks[i].text + "'");
      return toks[i].text;
    };
    if (kw == "surface") {
      need(2);
      if (toks.size() > 2) throw SyntaxError(lineno, toks[2].column, "unexpected token");
      if (have_surface) throw SyntaxError(lineno, toks[0].column, "surface declared twice");
      try {
        c.ambient = parse_surface_literal(toks[1].text);
      } catch (const InvalidSurface& e) {
        throw SyntaxError(lineno, toks[1].column, e.what());
      }
      have_surface = true;
    } else if (kw == "curve") {
      need(2);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& n = name_at(i);
        if (curve_line.count(n)) throw SyntaxError(lineno, toks[i].column, "curve '" + n + "' declared twice");
        curve_line[n] = lineno;
        curve_order.push_back(n);
      }
    } else if (kw == "cross") {
      need(4);
      if (toks.size() > 4) throw SyntaxError(lineno, toks[4].column, "unexpected token");
      raw_vertices.push_back({name_at(1), name_at(2), name_at(3), lineno, toks[1].column});
      if (toks[2].text == toks[3].text)
        throw ArityError("line " + std::to_string(lineno) + ": crossing '" + toks[1].text + "' needs two distinct curves");
    } else if (kw == "basept") {
      need(3);
      if (toks.size() > 3) throw SyntaxError(lineno, toks[3].column, "unexpected token");
      raw_vertices.push_back({name_at(1), name_at(2), "", lineno, toks[1].column});
    } else if (kw == "seq") {
      need(2);
      std::string cname = toks[1].text;
      std::size_t first = 2;
      if (!cname.empty() && cname.back() == ':') {
        cname.pop_back();
      } else if (toks.size() > 2 && toks[2].text == ":") {
        first = 3;
      } else {
        throw SyntaxError(lineno, toks[1].column, "expected 'seq <curve>: <vertices>'");
      }
      if (!valid_name(cname)) throw SyntaxError(lineno, toks[1].column, "invalid curve name '" + cname + "'");
      if (raw_seq.count(cname)) throw SyntaxError(lineno, toks[0].column, "seq for '" + cname + "' given twice");
      std::vector<std::string> verts;
      for (std::size_t i = first; i < toks.size(); ++i) verts.push_back(name_at(i));
      if (verts.empty()) throw SyntaxError(lineno, static_cast<int>(line.size()) + 1, "empty visit sequence");
      raw_seq[cname] = {verts, lineno};
    } else if (kw == "arc") {
      need(3);
      int sign = 1;
      for (std::size_t i = 3; i < toks.size(); ++i) {
        const auto& t = toks[i].text;
        if (t.rfind("sign=", 0) == 0)
          sign = parse_sign(toks[i], std::string_view(t).substr(5), lineno);
        else
          throw SyntaxError(lineno, toks[i].column, "unknown arc attribute '" + t + "'");
      }
      raw_arcs.push_back({name_at(1), parse_int(toks[2], toks[2].text, lineno), sign, lineno, toks[2].column});
    } else if (kw == "region") {
      need(2);
      RawRegion r;
      r.name = name_at(1);
      r.line = lineno;
      bool have_type = false;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw SyntaxError(lineno, toks[i].column, "expected key=value, got '" + t + "'");
        const std::string key = t.substr(0, eq);
        const std::string val = t.substr(eq + 1);
        if (key == "faces") {
          for (const auto& f : split(val, ',')) r.faces.push_back({parse_face_id(toks[i], f, lineno), lineno});
        } else if (key == "type") {
          try {
            r.type = parse_surface_literal(val);
          } catch (const InvalidSurface& e) {
            throw SyntaxError(lineno, toks[i].column, e.what());
          }
          have_type = true;
        } else if (key == "attach") {
          for (const auto& item : split(val, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw SyntaxError(lineno, toks[i].column, "attach entries look like f0:match");
            const int fid = parse_face_id(toks[i], std::string_view(item).substr(0, colon), lineno);
            const std::string how = item.substr(colon + 1);
            int flag;
            if (how == "match")
              flag = kMatch;
            else if (how == "reverse")
              flag = kReverse;
            else
              throw SyntaxError(lineno, toks[i].column, "attachment must be match or reverse, got '" + how + "'");
            r.attach[fid] = flag;
          }
        } else if (key == "boundary-collar") {
          r.collars = parse_int(toks[i], val, lineno);
          if (r.collars < 0) throw SyntaxError(lineno, toks[i].column, "negative collar count");
        } else {
          throw SyntaxError(lineno, toks[i].column, "unknown region attribute '" + key + "'");
        }
      }
      if (!have_type) throw SyntaxError(lineno, toks[0].column, "region '" + r.name + "' has no type");
      raw_regions.push_back(std::move(r));
    } else {
      throw SyntaxError(lineno, toks[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_surface) throw SyntaxError(lineno + 1, 1, "missing 'surface' line");

  // curves in alphabetical order
  std::vector<std::string> names = curve_order;
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  c.curves = names;
  std::map<std::string, int> cidx;
  for (std::size_t i = 0; i < names.size(); ++i) cidx[names[i]] = static_cast<int>(i);

  std::map<std::string, int> vidx;
  for (const auto& rv : raw_vertices) {
    if (vidx.count(rv.name)) throw SyntaxError(rv.line, rv.column, "vertex '" + rv.name + "' declared twice");
    Vertex v;
    v.name = rv.name;
    auto lookup = [&](const std::string& n) {
      auto it = cidx.find(n);
      if (it == cidx.end()) throw ReferenceError("line " + std::to_string(rv.line) + ": unknown curve '" + n + "'");
      return it->second;
    };
    v.first = lookup(rv.a);
    v.second = rv.b.empty() ? -1 : lookup(rv.b);
    vidx[rv.name] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(v);
  }

  const int nc = static_cast<int>(names.size());
  c.visits.assign(nc, {});
  c.signs.assign(nc, {});
  std::vector<int> rotation(nc, 0);
  for (const auto& [cname, entry] : raw_seq) {
    auto it = cidx.find(cname);
    if (it == cidx.end()) throw ReferenceError("line " + std::to_string(entry.second) + ": seq for unknown curve '" + cname + "'");
    std::vector<int> vis;
    for (const auto& vn : entry.first) {
      auto vt = vidx.find(vn);
      if (vt == vidx.end()) throw ReferenceError("line " + std::to_string(entry.second) + ": unknown vertex '" + vn + "'");
      vis.push_back(vt->second);
    }
    c.visits[it->second] = vis;
    c.signs[it->second].assign(vis.size(), 1);
  }
  for (int i = 0; i < nc; ++i)
    if (c.visits[i].empty()) throw ArityError("curve '" + names[i] + "' has no visit sequence");
  // every crossing used exactly once by each curve, basepoints once
  std::vector<int> uses(c.vertices.size(), 0);
  for (int i = 0; i < nc; ++i)
    for (int v : c.visits[i]) {
      const Vertex& vx = c.vertices[v];
      if (vx.first != i && vx.second != i)
        throw ArityError("curve '" + names[i] + "' visits '" + vx.name + "' which is not on it");
      ++uses[v];
    }
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const int want = c.vertices[v].is_crossing() ? 2 : 1;
    if (uses[v] != want)
      throw ArityError("vertex '" + c.vertices[v].name + "' is used " + std::to_string(uses[v]) + " time(s), expected " + std::to_string(want));
  }
  for (const auto& ra : raw_arcs) {
    auto it = cidx.find(ra.curve);
    if (it == cidx.end()) throw ReferenceError("line " + std::to_string(ra.line) + ": arc of unknown curve '" + ra.curve + "'");
    const int n = static_cast<int>(c.visits[it->second].size());
    if (ra.index < 0 || ra.index >= n) throw ReferenceError("line " + std::to_string(ra.line) + ": arc index out of range");
    c.signs[it->second][ra.index] = ra.sign;
  }
  // rotate visits to start at the least vertex name
  for (int i = 0; i < nc; ++i) {
    auto& vis = c.visits[i];
    const int n = static_cast<int>(vis.size());
    int best = 0;
    for (int j = 1; j < n; ++j)
      if (natural_less(c.vertices[vis[j]].name, c.vertices[vis[best]].name)) best = j;
    std::rotate(vis.begin(), vis.begin() + best, vis.end());
    std::rotate(c.signs[i].begin(), c.signs[i].begin() + best, c.signs[i].end());
  }

  const int nfaces = nc == 0 ? 0 : static_cast<int>(RibbonMap(c).faces().size());
  std::vector<std::string> owner(nfaces);
  std::set<std::string> region_names;
  for (auto& rr : raw_regions) {
    if (!region_names.insert(rr.name).second) throw SyntaxError(rr.line, 1, "region '" + rr.name + "' declared twice");
    Region r;
    r.name = rr.name;
    r.type = rr.type;
    r.collars = rr.collars;
    std::set<int> seen;
    for (auto [fid, ln] : rr.faces) {
      if (fid < 0 || fid >= nfaces) throw ReferenceError("line " + std::to_string(ln) + ": unknown face f" + std::to_string(fid));
      if (!owner[fid].empty())
        throw ReferenceError("line " + std::to_string(ln) + ": face f" + std::to_string(fid) + " assigned to both '" + owner[fid] + "' and '" + rr.name + "'");
      if (!seen.insert(fid).second) continue;
      owner[fid] = rr.name;
      r.faces.push_back(fid);
    }
    for (auto [fid, how] : rr.attach)
      if (!seen.count(fid)) throw ReferenceError("line " + std::to_string(rr.line) + ": attachment for face f" + std::to_string(fid) + " not in region '" + rr.name + "'");
    std::sort(r.faces.begin(), r.faces.end());
    for (int fid : r.faces) {
      auto it = rr.attach.find(fid);
      r.attach.push_back(it == rr.attach.end() ? kMatch : it->second);
    }
    c.regions.push_back(std::move(r));
  }
  std::sort(c.regions.begin(), c.regions.end(), [](const Region& a, const Region& b) { return natural_less(a.name, b.name); });
  return c;
}

CurveConfiguration load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ReferenceError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const CurveConfiguration& input) {
  // curves in name order, as the parser rebuilds them
  CurveConfiguration sorted;
  const bool in_order = std::is_sorted(input.curves.begin(), input.curves.end(),
                                       [](const auto& a, const auto& b) { return natural_less(a, b); });
  if (!in_order) {
    Relabel r = identity_relabel(input);
    std::sort(r.order.begin(), r.order.end(),
              [&](int a, int b) { return natural_less(input.curves[a], input.curves[b]); });
    sorted = apply_relabel(input, r);
  }
  const CurveConfiguration& c = in_order ? input : sorted;
  std::ostringstream out;
  out << "surface " << to_literal(c.ambient) << "\n";
  for (const auto& n : c.curves) out << "curve " << n << "\n";
  std::vector<int> order(c.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return natural_less(c.vertices[a].name, c.vertices[b].name); });
  for (int v : order) {
    const Vertex& vx = c.vertices[v];
    if (vx.is_crossing()) out << "cross " << vx.name << " " << c.curves[vx.first] << " " << c.curves[vx.second] << "\n";
  }
  for (int v : order) {
    const Vertex& vx = c.vertices[v];
    if (!vx.is_crossing()) out << "basept " << vx.name << " " << c.curves[vx.first] << "\n";
  }
  for (std::size_t i = 0; i < c.curves.size(); ++i) {
    out << "seq " << c.curves[i] << ":";
    for (int v : c.visits[i]) out << " " << c.vertices[v].name;
    out << "\n";
  }
  for (std::size_t i = 0; i < c.curves.size(); ++i)
    for (std::size_t j = 0; j < c.signs[i].size(); ++j)
      if (c.signs[i][j] < 0) out << "arc " << c.curves[i] << " " << j << " sign=-\n";
  std::vector<const Region*> regions;
  for (const auto& r : c.regions) regions.push_back(&r);
  std::sort(regions.begin(), regions.end(), [](const Region* a, const Region* b) { return natural_less(a->name, b->name); });
  for (const Region* r : regions) {
    out << "region " << r->name;
    if (!r->faces.empty()) {
      out << " faces=";
      for (std::size_t i = 0; i < r->faces.size(); ++i) out << (i ? "," : "") << "f" << r->faces[i];
    }
    out << " type=" << to_literal(r->type);
    if (!r->faces.empty()) {
      out << " attach=";
      for (std::size_t i = 0; i < r->faces.size(); ++i)
        out << (i ? "," : "") << "f" << r->faces[i] << ":" << (r->attach[i] > 0 ? "match" : "reverse");
    }
    if (r->collars > 0) out << " boundary-collar=" << r->collars;
    out << "\n";
  }
  return out.str();
}

}  // namespace crosscap
