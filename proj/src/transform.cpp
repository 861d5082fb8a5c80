#include "crosscap/transform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

std::vector<int> arc_offsets(const CurveConfiguration& c) {
  std::vector<int> off(c.curves.size() + 1, 0);
  for (std::size_t i = 0; i < c.curves.size(); ++i) off[i + 1] = off[i] + static_cast<int>(c.visits[i].size());
  return off;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

Relabel identity_relabel(const CurveConfiguration& c) {
  Relabel r;
  const int n = static_cast<int>(c.curves.size());
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), 0);
  r.reversed.assign(n, 0);
  r.start.assign(n, 0);
  r.basepoint_gauge.assign(c.vertices.size(), 1);
  r.swap_declaration.assign(c.vertices.size(), 0);
  return r;
}

void transfer_regions(const CurveConfiguration& old, const RibbonMap& old_map, CurveConfiguration& fresh,
                      const RibbonMap& fresh_map, const std::function<std::pair<int, int>(int)>& corr) {
  fresh.regions = old.regions;
  if (fresh.curves.empty()) return;
  std::vector<int> region_of(old_map.faces().size(), -1), slot_of(old_map.faces().size(), -1);
  for (std::size_t r = 0; r < old.regions.size(); ++r)
    for (std::size_t k = 0; k < old.regions[r].faces.size(); ++k) {
      const int f = old.regions[r].faces[k];
      if (f >= 0 && f < static_cast<int>(region_of.size())) {
        region_of[f] = static_cast<int>(r);
        slot_of[f] = static_cast<int>(k);
      }
    }
  for (auto& r : fresh.regions) {
    r.faces.clear();
    r.attach.clear();
  }
  for (const Face& face : fresh_map.faces()) {
    const auto [x, g] = corr(face.flags.front());
    const int f = old_map.face_of(x);
    const int r = region_of[f];
    if (r < 0) continue;  // unassigned face stays unassigned
    const int phi = old.regions[r].attach[slot_of[f]] * old_map.epsilon(x) * g;
    fresh.regions[r].faces.push_back(face.id);
    fresh.regions[r].attach.push_back(phi);
  }
}

void normalize_attachments(CurveConfiguration& c) {
  for (auto& r : c.regions) {
    std::vector<int> idx(r.faces.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return r.faces[a] < r.faces[b]; });
    std::vector<int> faces, attach;
    for (int i : idx) {
      faces.push_back(r.faces[i]);
      attach.push_back(r.attach[i]);
    }
    if (!r.type.orientable) {
      std::fill(attach.begin(), attach.end(), kMatch);
    } else if (!attach.empty() && attach.front() < 0) {
      for (auto& a : attach) a = -a;
    }
    r.faces = std::move(faces);
    r.attach = std::move(attach);
  }
}

CurveConfiguration apply_relabel(const CurveConfiguration& c, const Relabel& r, bool with_regions) {
  const int nc = static_cast<int>(c.curves.size());
  const int nv = static_cast<int>(c.vertices.size());
  const auto off = arc_offsets(c);

  // old rotation of each crossing as old darts; pos of a dart within it
  std::vector<int> visit_pos_first(nv, -1), visit_pos_second(nv, -1);
  for (int i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < c.visits[i].size(); ++j) {
      const int v = c.visits[i][j];
      if (c.vertices[v].first == i)
        visit_pos_first[v] = static_cast<int>(j);
      else
        visit_pos_second[v] = static_cast<int>(j);
    }
  std::vector<int> new_index(nc);
  for (int k = 0; k < nc; ++k) new_index[r.order[k]] = k;

  // gauge per vertex
  std::vector<int> gauge(nv, 1);
  std::vector<std::pair<int, int>> decl(nv);  // new (first, second) as old curve indices
  for (int v = 0; v < nv; ++v) {
    const Vertex& vx = c.vertices[v];
    if (!vx.is_crossing()) {
      gauge[v] = r.basepoint_gauge.empty() ? 1 : r.basepoint_gauge[v];
      decl[v] = {vx.first, -1};
      continue;
    }
    const int A = vx.first, B = vx.second;
    int P = A, Q = B;
    if (r.canonical_declaration) {
      if (new_index[B] < new_index[A]) std::swap(P, Q);
    } else if (!r.swap_declaration.empty() && r.swap_declaration[v]) {
      std::swap(P, Q);
    }
    decl[v] = {P, Q};
    // old positions: A-in 0, B-in 1, A-out 2, B-out 3
    auto pos_in = [&](int curve) {
      const int base = curve == A ? 0 : 1;
      return r.reversed[curve] ? base + 2 : base;
    };
    const int p0 = pos_in(P), p1 = pos_in(Q);
    gauge[v] = mod(p1 - p0, 4) == 1 ? 1 : -1;
  }

  CurveConfiguration out;
  out.ambient = c.ambient;
  out.curves.resize(nc);
  for (int k = 0; k < nc; ++k)
    out.curves[k] = (r.curve_names.empty() || r.curve_names[k].empty()) ? c.curves[r.order[k]] : r.curve_names[k];
  out.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) {
    Vertex nvx;
    nvx.name = (r.vertex_names.empty() || r.vertex_names[v].empty()) ? c.vertices[v].name : r.vertex_names[v];
    nvx.first = new_index[decl[v].first];
    nvx.second = decl[v].second < 0 ? -1 : new_index[decl[v].second];
    out.vertices[v] = nvx;
  }
  out.visits.assign(nc, {});
  out.signs.assign(nc, {});
  // new dart -> old dart, per new curve (offsets of the new numbering)
  std::vector<int> new_off(nc + 1, 0);
  for (int k = 0; k < nc; ++k) new_off[k + 1] = new_off[k] + static_cast<int>(c.visits[r.order[k]].size());
  std::vector<int> dart_map(2 * new_off[nc]);
  for (int k = 0; k < nc; ++k) {
    const int i = r.order[k];
    const auto& vis = c.visits[i];
    const int n = static_cast<int>(vis.size());
    const int s = r.start.empty() ? 0 : r.start[i];
    for (int m = 0; m < n; ++m) {
      int old_arc, tail, head;
      bool rev = r.reversed[i];
      if (!rev) {
        old_arc = mod(s + m, n);
        tail = vis[old_arc];
        head = vis[mod(old_arc + 1, n)];
        out.visits[k].push_back(vis[mod(s + m, n)]);
        dart_map[2 * (new_off[k] + m)] = 2 * (off[i] + old_arc);
        dart_map[2 * (new_off[k] + m) + 1] = 2 * (off[i] + old_arc) + 1;
      } else {
        old_arc = mod(s - m - 1, n);
        tail = vis[mod(s - m, n)];
        head = vis[old_arc];
        out.visits[k].push_back(vis[mod(s - m, n)]);
        dart_map[2 * (new_off[k] + m)] = 2 * (off[i] + old_arc) + 1;
        dart_map[2 * (new_off[k] + m) + 1] = 2 * (off[i] + old_arc);
      }
      out.signs[k].push_back(c.signs[i][old_arc] * gauge[tail] * gauge[head]);
    }
  }
  if (!with_regions || nc == 0) {
    if (with_regions) out.regions = c.regions;
    return out;
  }
  const RibbonMap old_map(c);
  const RibbonMap new_map(out);
  transfer_regions(c, old_map, out, new_map, [&](int f) {
    const int d = dart_map[RibbonMap::flag_dart(f)];
    const int g = gauge[old_map.dart_vertex(d)];
    return std::pair<int, int>{RibbonMap::flag(d, RibbonMap::flag_side(f) * g), g};
  });
  return out;
}

CurveConfiguration smooth(const CurveConfiguration& c) {
  const int nc = static_cast<int>(c.curves.size());
  std::vector<std::vector<int>> keep(nc);
  bool changed = false;
  for (int i = 0; i < nc; ++i) {
    const auto& vis = c.visits[i];
    for (std::size_t j = 0; j < vis.size(); ++j)
      if (c.vertices[vis[j]].is_crossing()) keep[i].push_back(static_cast<int>(j));
    if (keep[i].empty()) {
      int best = 0;
      for (std::size_t j = 1; j < vis.size(); ++j)
        if (natural_less(c.vertices[vis[j]].name, c.vertices[vis[best]].name)) best = static_cast<int>(j);
      keep[i].push_back(best);
    }
    if (keep[i].size() != vis.size()) changed = true;
  }
  if (!changed) return c;

  const auto off = arc_offsets(c);
  std::vector<int> used(c.vertices.size(), 0);
  for (int i = 0; i < nc; ++i)
    for (int j : keep[i]) used[c.visits[i][j]] = 1;
  std::vector<int> vmap(c.vertices.size(), -1);
  CurveConfiguration out;
  out.ambient = c.ambient;
  out.curves = c.curves;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if (used[v]) {
      vmap[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(c.vertices[v]);
    }
  out.visits.assign(nc, {});
  out.signs.assign(nc, {});
  std::vector<int> new_off(nc + 1, 0);
  for (int i = 0; i < nc; ++i) new_off[i + 1] = new_off[i] + static_cast<int>(keep[i].size());
  std::vector<int> dart_map(2 * new_off[nc]);
  for (int i = 0; i < nc; ++i) {
    const auto& vis = c.visits[i];
    const int n = static_cast<int>(vis.size());
    const int m = static_cast<int>(keep[i].size());
    for (int t = 0; t < m; ++t) {
      const int from = keep[i][t];
      const int to = keep[i][(t + 1) % m];
      int sign = 1;
      int j = from;
      do {
        sign *= c.signs[i][j];
        j = (j + 1) % n;
      } while (j != to);
      out.visits[i].push_back(vmap[vis[from]]);
      out.signs[i].push_back(sign);
      dart_map[2 * (new_off[i] + t)] = 2 * (off[i] + from);
      dart_map[2 * (new_off[i] + t) + 1] = 2 * (off[i] + mod(to - 1, n)) + 1;
    }
  }
  const RibbonMap old_map(c);
  const RibbonMap new_map(out);
  transfer_regions(c, old_map, out, new_map, [&](int f) {
    return std::pair<int, int>{RibbonMap::flag(dart_map[RibbonMap::flag_dart(f)], RibbonMap::flag_side(f)), 1};
  });
  return out;
}

CurveConfiguration sub_structure(const CurveConfiguration& c, const std::vector<char>& keep) {
  const int nc = static_cast<int>(c.curves.size());
  std::vector<int> cmap(nc, -1);
  CurveConfiguration out;
  out.ambient = c.ambient;
  for (int i = 0; i < nc; ++i)
    if (keep[i]) {
      cmap[i] = static_cast<int>(out.curves.size());
      out.curves.push_back(c.curves[i]);
    }
  std::vector<int> vmap(c.vertices.size(), -1);
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const Vertex& vx = c.vertices[v];
    const bool a = keep[vx.first];
    const bool b = vx.is_crossing() && keep[vx.second];
    if (!a && !b) continue;
    Vertex nvx;
    nvx.name = vx.name;
    if (a && b) {
      nvx.first = cmap[vx.first];
      nvx.second = cmap[vx.second];
    } else {
      nvx.first = a ? cmap[vx.first] : cmap[vx.second];
    }
    vmap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(nvx);
  }
  for (int i = 0; i < nc; ++i) {
    if (!keep[i]) continue;
    std::vector<int> vis;
    for (int v : c.visits[i]) vis.push_back(vmap[v]);
    out.visits.push_back(vis);
    out.signs.push_back(c.signs[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

CurveConfiguration reverse_curve(const CurveConfiguration& c, int curve) {
  Relabel r = identity_relabel(c);
  r.reversed.at(curve) = 1;
  return apply_relabel(c, r);
}

CurveConfiguration flip_crossing(const CurveConfiguration& c, int vertex) {
  if (!c.vertices.at(vertex).is_crossing()) throw ReferenceError("'" + c.vertices[vertex].name + "' is not a crossing");
  Relabel r = identity_relabel(c);
  r.swap_declaration[vertex] = 1;
  return apply_relabel(c, r);
}

namespace {

std::vector<int> basepoints_of(const CurveConfiguration& c) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if (!c.vertices[v].is_crossing()) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

CurveConfiguration canonical(const CurveConfiguration& input) {
  const CurveConfiguration c = smooth(input);
  const int nc = static_cast<int>(c.curves.size());
  Relabel r = identity_relabel(c);
  std::sort(r.order.begin(), r.order.end(), [&](int a, int b) { return natural_less(c.curves[a], c.curves[b]); });
  for (int i = 0; i < nc; ++i) {
    const auto& vis = c.visits[i];
    int best = 0;
    for (std::size_t j = 1; j < vis.size(); ++j)
      if (natural_less(c.vertices[vis[j]].name, c.vertices[vis[best]].name)) best = static_cast<int>(j);
    r.start[i] = best;
  }
  r.canonical_declaration = true;
  const auto bps = basepoints_of(c);
  CurveConfiguration best;
  std::string best_text;
  const int combos = 1 << std::min<int>(static_cast<int>(bps.size()), 12);
  for (int mask = 0; mask < combos; ++mask) {
    for (std::size_t b = 0; b < bps.size(); ++b) r.basepoint_gauge[bps[b]] = (mask >> b) & 1 ? -1 : 1;
    CurveConfiguration cand = apply_relabel(c, r);
    normalize_attachments(cand);
    std::sort(cand.regions.begin(), cand.regions.end(), [](const Region& a, const Region& b) { return natural_less(a.name, b.name); });
    std::string text = serialize(cand);
    if (mask == 0 || text < best_text) {
      best_text = std::move(text);
      best = std::move(cand);
    }
  }
  std::vector<int> vorder(best.vertices.size());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return natural_less(best.vertices[a].name, best.vertices[b].name); });
  std::vector<int> inv(vorder.size());
  std::vector<Vertex> verts;
  for (std::size_t k = 0; k < vorder.size(); ++k) {
    inv[vorder[k]] = static_cast<int>(k);
    verts.push_back(best.vertices[vorder[k]]);
  }
  best.vertices = verts;
  for (auto& vis : best.visits)
    for (auto& v : vis) v = inv[v];
  return best;
}

std::string canonical_text(const CurveConfiguration& c) { return serialize(canonical(c)); }

namespace {

// Rename regions r1, r2, ... by least face; faceless regions follow by type.
void rename_regions(CurveConfiguration& c) {
  normalize_attachments(c);
  std::sort(c.regions.begin(), c.regions.end(), [](const Region& a, const Region& b) {
    if (a.faces.empty() != b.faces.empty()) return b.faces.empty();
    if (!a.faces.empty()) return a.faces.front() < b.faces.front();
    return std::tie(a.type, a.collars) < std::tie(b.type, b.collars);
  });
  for (std::size_t i = 0; i < c.regions.size(); ++i) c.regions[i].name = "r" + std::to_string(i + 1);
}

}  // namespace

std::string anonymous_key(const CurveConfiguration& input, const std::vector<std::string>& fixed) {
  return serialize(anonymous_form(input, fixed));
}

CurveConfiguration anonymous_form(const CurveConfiguration& input, const std::vector<std::string>& fixed) {
  const CurveConfiguration c = smooth(input);
  const int nc = static_cast<int>(c.curves.size());
  const int nv = static_cast<int>(c.vertices.size());
  if (nc == 0) {
    CurveConfiguration copy = c;
    rename_regions(copy);
    return copy;
  }
  std::vector<int> free_curves;
  std::vector<std::string> base_names(nc);
  for (int i = 0; i < nc; ++i) {
    if (std::find(fixed.begin(), fixed.end(), c.curves[i]) != fixed.end())
      base_names[i] = c.curves[i];
    else
      free_curves.push_back(i);
  }
  // placeholders sort after ordinary names
  std::vector<std::string> slots;
  for (std::size_t k = 0; k < free_curves.size(); ++k) slots.push_back("~" + std::to_string(k));

  std::vector<Relabel> winners;
  std::string best_structure;
  bool have = false;

  std::vector<int> perm(free_curves.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::string> names = base_names;
    for (std::size_t k = 0; k < free_curves.size(); ++k) names[free_curves[k]] = slots[perm[k]];
    Relabel r = identity_relabel(c);
    std::sort(r.order.begin(), r.order.end(), [&](int a, int b) { return natural_less(names[a], names[b]); });
    r.curve_names.resize(nc);
    for (int k = 0; k < nc; ++k) r.curve_names[k] = names[r.order[k]];
    r.canonical_declaration = true;
    r.vertex_names.assign(nv, "");
    // starting visit and direction curve by curve in the new order; a
    // labelled curve starts at its least label and heads to the smaller neighbour
    std::vector<int> label(nv, 0);
    std::function<void(int, int)> rec = [&](int k, int next_label) {
      if (k == nc) {
        for (int v = 0; v < nv; ++v) r.vertex_names[v] = "v" + std::to_string(label[v]);
        CurveConfiguration s = apply_relabel(c, r, false);
        std::string text = serialize(s);
        if (!have || text < best_structure) {
          have = true;
          best_structure = std::move(text);
          winners.clear();
          winners.push_back(r);
        } else if (text == best_structure) {
          winners.push_back(r);
        }
        return;
      }
      const int i = r.order[k];
      const auto& vis = c.visits[i];
      const int n = static_cast<int>(vis.size());
      auto visit_at = [&](int s, int m) { return r.reversed[i] ? vis[mod(s - m, n)] : vis[mod(s + m, n)]; };
      int least = -1;
      for (int j = 0; j < n; ++j)
        if (label[vis[j]] > 0 && (least < 0 || label[vis[j]] < label[vis[least]])) least = j;
      std::vector<std::pair<int, int>> choices;  // (start, reversed)
      if (least >= 0) {
        auto rank = [&](int v) { return label[v] > 0 ? label[v] : nv + 1; };
        const int ahead = rank(vis[mod(least + 1, n)]);
        const int behind = rank(vis[mod(least - 1, n)]);
        if (ahead <= behind) choices.emplace_back(least, 0);
        if (behind <= ahead) choices.emplace_back(least, 1);
      } else {
        for (int j = 0; j < n; ++j)
          for (int d : {0, 1}) choices.emplace_back(j, d);
      }
      for (auto [st, d] : choices) {
        r.start[i] = st;
        r.reversed[i] = static_cast<char>(d);
        std::vector<int> assigned;
        int nl = next_label;
        for (int m = 0; m < n; ++m) {
          const int v = visit_at(st, m);
          if (label[v] == 0) {
            label[v] = nl++;
            assigned.push_back(v);
          }
        }
        rec(k + 1, nl);
        for (int v : assigned) label[v] = 0;
      }
    };
    rec(0, 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto bps = basepoints_of(c);
  std::string best;
  CurveConfiguration best_config;
  bool have_best = false;
  for (Relabel r : winners) {
    const int combos = 1 << std::min<int>(static_cast<int>(bps.size()), 12);
    for (int mask = 0; mask < combos; ++mask) {
      for (std::size_t b = 0; b < bps.size(); ++b) r.basepoint_gauge[bps[b]] = (mask >> b) & 1 ? -1 : 1;
      CurveConfiguration cand = apply_relabel(c, r);
      rename_regions(cand);
      std::string text = serialize(cand);
      if (!have_best || text < best) {
        best = std::move(text);
        best_config = std::move(cand);
        have_best = true;
      }
    }
  }
  return best_config;
}

}  // namespace crosscap
