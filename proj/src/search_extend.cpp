// Enumeration of new curves added to a configuration.
//
// A new curve with n crossings is a cyclic sequence of (old arc, entry
// side) pairs; consecutive pairs must see the same old region. Each
// structure is completed by the ways the touched regions split into
// pieces, and every completion is checked by deleting the new curve again
// and comparing with the input.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "crosscap/curveconfig.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/parity_union_find.hpp"
#include "crosscap/ribbon.hpp"
#include "crosscap/search.hpp"
#include "crosscap/transform.hpp"

namespace crosscap {

SearchBudget SearchBudget::parse(const std::string& text, SearchBudget base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionViolated("budget entries look like key=value: '" + item + "'");
    const std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionViolated("budget value is not an integer: '" + item + "'");
    }
    if (value <= 0) throw PreconditionViolated("budget values must be positive: '" + item + "'");
    if (key == "max_arcs")
      base.max_arcs = static_cast<int>(value);
    else if (key == "max_crossings")
      base.max_crossings = static_cast<int>(value);
    else if (key == "max_candidates")
      base.max_candidates = value;
    else
      throw PreconditionViolated("unknown budget key '" + key + "'");
  }
  return base;
}

SearchBudget SearchBudget::parse(const std::string& text) { return parse(text, SearchBudget{}); }

SearchBudget SearchBudget::from_env() {
  const char* env = std::getenv("CROSSCAP_BUDGET");
  if (env == nullptr) return {};
  return parse(env);
}

std::string SearchBudget::to_string() const {
  return "max_arcs=" + std::to_string(max_arcs) + ",max_crossings=" + std::to_string(max_crossings) +
         ",max_candidates=" + std::to_string(max_candidates);
}

CurveSpec CurveSpec::any(const CurveConfiguration& c) {
  CurveSpec s;
  s.exact.assign(c.curves.size(), -1);
  return s;
}

CurveSpec CurveSpec::disjoint_from_all(const CurveConfiguration& c) {
  CurveSpec s;
  s.exact.assign(c.curves.size(), 0);
  return s;
}

CurveConfiguration restrict_to(const CurveConfiguration& c, const std::vector<int>& curves) {
  return smooth(restrict_curves(c, curve_mask(c, curves)).config);
}

namespace {

std::string unused_name(const CurveConfiguration& c, const std::string& want) {
  auto taken = [&](const std::string& n) { return c.find_vertex(n) >= 0 || c.find_curve(n) >= 0; };
  if (!taken(want)) return want;
  for (int k = 1;; ++k) {
    const std::string n = want + "_" + std::to_string(k);
    if (!taken(n)) return n;
  }
}

// Piece types with sum of "genus weight" gamma (2g orientable, g otherwise).
void distribute_gamma(int total, const std::vector<char>& may_be_nonorientable, std::size_t i,
                      std::vector<std::pair<bool, int>>& acc,
                      const std::function<bool(const std::vector<std::pair<bool, int>>&)>& emit, bool& stop) {
  if (stop) return;
  if (i == acc.size()) {
    if (total == 0 && !emit(acc)) stop = true;
    return;
  }
  if (i + 1 == acc.size()) {
    if (total % 2 == 0) {
      acc[i] = {true, total / 2};
      distribute_gamma(0, may_be_nonorientable, i + 1, acc, emit, stop);
    }
    if (may_be_nonorientable[i] && total >= 1) {
      acc[i] = {false, total};
      distribute_gamma(0, may_be_nonorientable, i + 1, acc, emit, stop);
    }
    return;
  }
  for (int g = 0; 2 * g <= total && !stop; ++g) {
    acc[i] = {true, g};
    distribute_gamma(total - 2 * g, may_be_nonorientable, i + 1, acc, emit, stop);
  }
  if (!may_be_nonorientable[i]) return;
  for (int g = 1; g <= total && !stop; ++g) {
    acc[i] = {false, g};
    distribute_gamma(total - g, may_be_nonorientable, i + 1, acc, emit, stop);
  }
}

// All ways to write `total` as an ordered sum of `parts` nonnegative terms.
void compositions(int total, int parts, std::vector<int>& acc, const std::function<bool()>& emit, bool& stop) {
  if (stop) return;
  const int i = static_cast<int>(acc.size());
  if (i + 1 == parts) {
    acc.push_back(total);
    if (!emit()) stop = true;
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= total && !stop; ++v) {
    acc.push_back(v);
    compositions(total - v, parts, acc, emit, stop);
    acc.pop_back();
  }
}

struct RegionSplit {
  int region = -1;
  std::vector<int> faces;    // faces of the extended map inside the region
  std::vector<char> fresh;   // face meets the new curve
  std::vector<std::pair<int, int>> links;  // faces on the two sides of a strip of the new curve
  int strips = 0;
};

// Candidate pieces for one region, as regions of the extended map.
void split_region(const Region& old, const RegionSplit& work, const std::function<bool(std::vector<Region>&)>& emit,
                  bool& stop) {
  const int q = static_cast<int>(work.faces.size());
  std::map<int, int> pos;
  for (int i = 0; i < q; ++i) pos[work.faces[i]] = i;
  const int target_chi = euler_characteristic(old.type) + work.strips;

  std::vector<int> block(q, 0);
  std::function<void(int, int)> partition = [&](int i, int nblocks) {
    if (stop) return;
    if (i == q) {
      // every block holds a face met by the new curve
      std::vector<char> has_fresh(nblocks, 0);
      for (int k = 0; k < q; ++k)
        if (work.fresh[k]) has_fresh[block[k]] = 1;
      if (std::find(has_fresh.begin(), has_fresh.end(), 0) != has_fresh.end()) return;
      std::vector<int> parent(nblocks);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      int joins = 0;
      for (auto [a, b] : work.links) {
        const int x = find(block[pos[a]]), y = find(block[pos[b]]);
        if (x != y) {
          parent[x] = y;
          ++joins;
        }
      }
      if (joins != nblocks - 1) return;
      std::vector<int> nfaces(nblocks, 0);
      for (int k = 0; k < q; ++k) ++nfaces[block[k]];
      std::vector<int> collars, punct;
      compositions(old.collars, nblocks, collars, [&] {
        compositions(old.type.punctures, nblocks, punct, [&] {
          int gamma = -target_chi;
          for (int b = 0; b < nblocks; ++b) gamma += 2 - nfaces[b] - collars[b] - punct[b];
          if (gamma < 0) return true;
          std::vector<char> may_non(nblocks, old.type.orientable ? 0 : 1);
          std::vector<std::pair<bool, int>> types(nblocks);
          distribute_gamma(gamma, may_non, 0, types, [&](const std::vector<std::pair<bool, int>>& t) {
            std::vector<Region> pieces(nblocks);
            for (int b = 0; b < nblocks; ++b) {
              pieces[b].type = SurfaceInvariants{t[b].first, t[b].second, punct[b], nfaces[b] + collars[b]};
              pieces[b].collars = collars[b];
              pieces[b].name = nblocks == 1 ? old.name : old.name + "." + std::to_string(b + 1);
            }
            for (int k = 0; k < q; ++k) {
              pieces[block[k]].faces.push_back(work.faces[k]);
              pieces[block[k]].attach.push_back(kMatch);
            }
            // free attachment flags: all but the first face of each orientable piece
            std::vector<std::pair<int, int>> free;
            for (int b = 0; b < nblocks; ++b)
              if (pieces[b].type.orientable)
                for (std::size_t s = 1; s < pieces[b].faces.size(); ++s) free.emplace_back(b, static_cast<int>(s));
            const long combos = 1L << free.size();
            for (long mask = 0; mask < combos; ++mask) {
              for (std::size_t k = 0; k < free.size(); ++k)
                pieces[free[k].first].attach[free[k].second] = (mask >> k) & 1 ? kReverse : kMatch;
              if (!emit(pieces)) return false;
            }
            return true;
          }, stop);
          return !stop;
        }, stop);
        return !stop;
      }, stop);
      return;
    }
    for (int b = 0; b <= nblocks && !stop; ++b) {
      block[i] = b;
      partition(i + 1, std::max(nblocks, b + 1));
    }
  };
  partition(0, 0);
}

class Extender {
 public:
  Extender(const CurveConfiguration& c, const CurveSpec& spec, const SearchBudget& budget, std::string name,
           const std::function<bool(const CurveConfiguration&)>& visit)
      : c_(smooth(c)), spec_(spec), budget_(budget), map_(c_), visit_(visit) {
    const int nc = static_cast<int>(c_.curves.size());
    if (spec_.exact.empty()) spec_.exact.assign(nc, -1);
    if (static_cast<int>(spec_.exact.size()) != nc) throw PreconditionViolated("intersection spec has the wrong length");
    name_ = unused_name(c_, name);
    const int nfaces = static_cast<int>(map_.faces().size());
    region_of_face_.assign(nfaces, -1);
    slot_of_face_.assign(nfaces, -1);
    for (std::size_t r = 0; r < c_.regions.size(); ++r)
      for (std::size_t k = 0; k < c_.regions[r].faces.size(); ++k) {
        region_of_face_[c_.regions[r].faces[k]] = static_cast<int>(r);
        slot_of_face_[c_.regions[r].faces[k]] = static_cast<int>(k);
      }
    for (int f = 0; f < nfaces; ++f)
      if (region_of_face_[f] < 0) throw PreconditionViolated("configuration has unassigned faces");
    side_region_.resize(map_.arc_count());
    for (int a = 0; a < map_.arc_count(); ++a)
      for (int s : {1, -1}) side_region_[a][s < 0] = region_of_face_[map_.face_of(RibbonMap::flag(2 * a, s))];
    std::vector<std::string> names = c_.curves;
    key0_ = anonymous_key(c_, names);
    regions0_ = region_set(c_);
    fixed_ = names;
  }

  SearchStats run() {
    const int nc = static_cast<int>(c_.curves.size());
    int need = 0;
    bool any = false;
    for (int i = 0; i < nc; ++i) {
      if (spec_.exact[i] < 0)
        any = true;
      else
        need += spec_.exact[i];
    }
    const int max_n = std::min(budget_.max_arcs, budget_.max_crossings);
    if (need == 0 && !stop_) crossing_free();
    for (int n = std::max(1, need); n <= max_n && !stop_; ++n) {
      if (!any && n != need) break;
      if (map_.arc_count() == 0) break;
      seq_arc_.assign(n, -1);
      seq_side_.assign(n, 0);
      count_.assign(nc, 0);
      walk(0, n);
    }
    return stats_;
  }

 private:
  bool region_allowed(int r) const { return spec_.allowed_regions.empty() || spec_.allowed_regions[r]; }

  bool budget_hit() {
    if (stats_.structures >= budget_.max_candidates) {
      stats_.truncated = true;
      stop_ = true;
    }
    return stop_;
  }

  void crossing_free() {
    for (std::size_t r = 0; r < c_.regions.size() && !stop_; ++r) {
      if (!region_allowed(static_cast<int>(r))) continue;
      for (int tau : {1, -1}) {
        if (stop_ || budget_hit()) return;
        ++stats_.structures;
        CurveConfiguration ext = c_;
        ext.curves.push_back(name_);
        ext.vertices.push_back(Vertex{unused_name(c_, name_ + "1"), static_cast<int>(c_.curves.size()), -1});
        ext.visits.push_back({static_cast<int>(ext.vertices.size()) - 1});
        ext.signs.push_back({tau});
        ext.regions.clear();
        const RibbonMap m(ext);
        // old flags keep their numbers: the new curve comes last
        std::vector<int> region_of(m.faces().size(), -1);
        std::vector<char> fresh(m.faces().size(), 0);
        for (const Face& f : m.faces()) {
          const int x = f.flags.front();
          if (m.arc_curve(RibbonMap::flag_arc(x)) == static_cast<int>(c_.curves.size())) {
            region_of[f.id] = static_cast<int>(r);
            fresh[f.id] = 1;
          } else {
            region_of[f.id] = region_of_face_[map_.face_of(x)];
          }
        }
        RegionSplit work;
        work.region = static_cast<int>(r);
        for (const Face& f : m.faces())
          if (region_of[f.id] == static_cast<int>(r)) {
            work.faces.push_back(f.id);
            work.fresh.push_back(fresh[f.id]);
          }
        const int arc = m.arc_id(static_cast<int>(c_.curves.size()), 0);
        work.links.emplace_back(m.face_of(RibbonMap::flag(2 * arc, 1)), m.face_of(RibbonMap::flag(2 * arc, -1)));
        finish(ext, m, region_of, [&](int f) { return f; }, {work});
      }
    }
  }

  // Depth-first choice of (arc, entry side) for crossing i.
  void walk(int i, int n) {
    if (stop_) return;
    const int nc = static_cast<int>(c_.curves.size());
    if (i == n) {
      for (int k = 0; k < nc; ++k)
        if (spec_.exact[k] >= 0 && count_[k] != spec_.exact[k]) return;
      const int last = side_region_[seq_arc_[n - 1]][seq_side_[n - 1] > 0];  // region after exit
      if (last != side_region_[seq_arc_[0]][seq_side_[0] < 0]) return;
      orders(n);
      return;
    }
    for (int a = (i == 0 ? 0 : seq_arc_[0]); a < map_.arc_count() && !stop_; ++a) {
      const int curve = map_.arc_curve(a);
      if (spec_.exact[curve] >= 0 && count_[curve] >= spec_.exact[curve]) continue;
      for (int s : {1, -1}) {
        const int entry_region = side_region_[a][s < 0];
        const int exit_region = side_region_[a][s > 0];
        if (!region_allowed(exit_region) || !region_allowed(entry_region)) continue;
        if (i > 0 && side_region_[seq_arc_[i - 1]][seq_side_[i - 1] > 0] != entry_region) continue;
        seq_arc_[i] = a;
        seq_side_[i] = s;
        ++count_[curve];
        walk(i + 1, n);
        --count_[curve];
        if (stop_) return;
      }
    }
  }

  // Orders of the new crossings along each old arc.
  void orders(int n) {
    std::map<int, std::vector<int>> on_arc;
    for (int i = 0; i < n; ++i) on_arc[seq_arc_[i]].push_back(i);
    std::vector<std::vector<int>> groups;
    for (auto& [a, v] : on_arc) groups.push_back(v);
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
      if (stop_) return;
      if (g == groups.size()) {
        for (long mask = 0; mask < (1L << n) && !stop_; ++mask) {
          std::vector<int> tau(n);
          for (int i = 0; i < n; ++i) tau[i] = (mask >> i) & 1 ? -1 : 1;
          build(n, on_arc, tau);
        }
        return;
      }
      std::vector<int>& v = groups[g];
      std::sort(v.begin(), v.end());
      const int arc = seq_arc_[v.front()];
      do {
        // the starting crossing comes first along its arc
        if (arc == seq_arc_[0] && v.front() != 0) continue;
        on_arc[arc] = v;
        rec(g + 1);
      } while (!stop_ && std::next_permutation(v.begin(), v.end()));
    };
    rec(0);
  }

  void build(int n, const std::map<int, std::vector<int>>& on_arc, const std::vector<int>& tau) {
    if (budget_hit()) return;
    ++stats_.structures;
    const int nc = static_cast<int>(c_.curves.size());
    CurveConfiguration ext;
    ext.ambient = c_.ambient;
    ext.curves = c_.curves;
    ext.curves.push_back(name_);
    ext.vertices = c_.vertices;
    const int base = static_cast<int>(ext.vertices.size());
    for (int i = 0; i < n; ++i)
      ext.vertices.push_back(
          Vertex{unused_name(c_, name_ + std::to_string(i + 1)), map_.arc_curve(seq_arc_[i]), nc});
    ext.visits.assign(nc + 1, {});
    ext.signs.assign(nc + 1, {});
    // per new arc of an old curve: old arc, prefix sign product, piece sign
    struct Piece {
      int old_arc, prefix, sign;
      bool first, last;
    };
    std::vector<Piece> pieces;
    std::vector<int> unsplit_new_arc(map_.arc_count(), -1);
    for (int k = 0; k < nc; ++k) {
      for (std::size_t j = 0; j < c_.visits[k].size(); ++j) {
        const int a = map_.arc_id(k, static_cast<int>(j));
        const int sigma = c_.signs[k][j];
        ext.visits[k].push_back(c_.visits[k][j]);
        auto it = on_arc.find(a);
        if (it == on_arc.end()) {
          unsplit_new_arc[a] = static_cast<int>(pieces.size());
          ext.signs[k].push_back(sigma);
          pieces.push_back({a, 1, sigma, true, true});
          continue;
        }
        const auto& ord = it->second;
        int prefix = 1;
        for (std::size_t t = 0; t <= ord.size(); ++t) {
          int piece_sign;
          if (t == 0)
            piece_sign = -seq_side_[ord[0]];
          else if (t == ord.size())
            piece_sign = -sigma * seq_side_[ord[t - 1]];
          else
            piece_sign = seq_side_[ord[t - 1]] * seq_side_[ord[t]];
          ext.signs[k].push_back(piece_sign);
          pieces.push_back({a, prefix, piece_sign, t == 0, t == ord.size()});
          prefix *= piece_sign;
          if (t < ord.size()) ext.visits[k].push_back(base + ord[t]);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      ext.visits[nc].push_back(base + i);
      ext.signs[nc].push_back(tau[i]);
    }
    const RibbonMap m(ext);
    const int old_arcs_new = static_cast<int>(pieces.size());
    // old flag seen from a flag of an old curve in the extended map
    auto old_flag = [&](int x) {
      const int arc = RibbonMap::flag_arc(x);
      const Piece& p = pieces[arc];
      const int end = (x / 2) & 1;
      const int t = RibbonMap::flag_side(x);
      if ((end == 0 && p.first) || (end == 1 && p.last)) return RibbonMap::flag(2 * p.old_arc + end, t);
      const int tail_side = end == 0 ? t : -p.sign * t;
      return RibbonMap::flag(2 * p.old_arc, tail_side * p.prefix);
    };
    std::vector<int> region_of(m.faces().size(), -1);
    std::vector<char> fresh(m.faces().size(), 0);
    for (const Face& f : m.faces()) {
      int r = -1;
      for (int x : f.flags) {
        if (RibbonMap::flag_arc(x) >= old_arcs_new) {
          fresh[f.id] = 1;
          continue;
        }
        if (m.flag_vertex(x) >= base) fresh[f.id] = 1;
        const int rr = region_of_face_[map_.face_of(old_flag(x))];
        if (r >= 0 && rr != r) return;  // inconsistent structure
        r = rr;
      }
      region_of[f.id] = r;
    }
    std::map<int, RegionSplit> works;
    for (int i = 0; i < n; ++i) {
      const int r = side_region_[seq_arc_[i]][seq_side_[i] > 0];
      RegionSplit& w = works[r];
      w.region = r;
      ++w.strips;
      const int arc = m.arc_id(nc, i);
      w.links.emplace_back(m.face_of(RibbonMap::flag(2 * arc, 1)), m.face_of(RibbonMap::flag(2 * arc, -1)));
    }
    for (auto& [r, w] : works)
      for (const Face& f : m.faces())
        if (region_of[f.id] == r) {
          w.faces.push_back(f.id);
          w.fresh.push_back(fresh[f.id]);
        }
    std::vector<RegionSplit> list;
    for (auto& [r, w] : works) list.push_back(std::move(w));
    finish(ext, m, region_of, old_flag, list);
  }

  // Fills regions: untouched ones are carried over, touched ones split.
  void finish(CurveConfiguration& ext, const RibbonMap& m, const std::vector<int>& region_of,
              const std::function<int(int)>& old_flag, const std::vector<RegionSplit>& works) {
    std::vector<char> touched(c_.regions.size(), 0);
    for (const auto& w : works) touched[w.region] = 1;
    std::vector<Region> fixed_regions;
    for (std::size_t r = 0; r < c_.regions.size(); ++r) {
      if (touched[r]) continue;
      Region reg = c_.regions[r];
      reg.faces.clear();
      reg.attach.clear();
      for (const Face& f : m.faces()) {
        if (region_of[f.id] != static_cast<int>(r)) continue;
        const int x = old_flag(f.flags.front());
        const int of = map_.face_of(x);
        reg.faces.push_back(f.id);
        reg.attach.push_back(c_.regions[r].attach[slot_of_face_[of]] * map_.epsilon(x));
      }
      fixed_regions.push_back(std::move(reg));
    }
    std::vector<std::vector<Region>> chosen(works.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (stop_) return;
      if (k == works.size()) {
        ext.regions = fixed_regions;
        for (const auto& p : chosen)
          for (const auto& reg : p) ext.regions.push_back(reg);
        check(ext);
        return;
      }
      split_region(c_.regions[works[k].region], works[k], [&](std::vector<Region>& pieces) {
        chosen[k] = pieces;
        rec(k + 1);
        return !stop_;
      }, stop_);
    };
    rec(0);
  }

  static std::vector<std::tuple<SurfaceInvariants, int, std::vector<int>, std::vector<int>>> region_set(
      CurveConfiguration c) {
    normalize_attachments(c);
    std::vector<std::tuple<SurfaceInvariants, int, std::vector<int>, std::vector<int>>> out;
    for (const Region& r : c.regions) out.emplace_back(r.type, r.collars, r.faces, r.attach);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool restores_input(const CurveConfiguration& del) const {
    if (del.vertices == c_.vertices && del.visits == c_.visits && del.signs == c_.signs)
      return region_set(del) == regions0_;
    return anonymous_key(del, fixed_) == key0_;
  }

  void check(const CurveConfiguration& ext) {
    const int b = static_cast<int>(c_.curves.size());
    try {
      if (assembled_invariants(ext) != c_.ambient) return;
      if (!restores_input(delete_curve(ext, b))) return;
      if (spec_.sidedness && sidedness(ext, b) != *spec_.sidedness) return;
      for (int a = 0; a < b; ++a)
        if (ext.shared_crossings(a, b) > 0) {
          const CurveConfiguration pair = restrict_to(ext, {a, b});
          if (!find_bigons(pair).empty()) return;
        }
      if (spec_.nontrivial) {
        const CurveClass k = classify_curve(ext, b);
        if (k.trivial == Triviality::BoundaryParallel) {
          if (!spec_.boundary_parallel_ok) return;
        } else if (k.is_trivial()) {
          return;
        }
      }
      if (spec_.distinct)
        for (int a = 0; a < b; ++a)
          if (isotopic_disjoint(ext, a, b)) return;
    } catch (const Error&) {
      return;
    }
    const std::string key = anonymous_key(ext, fixed_);
    if (!seen_.insert(key).second) return;
    ++stats_.emitted;
    if (!visit_(ext)) stop_ = true;
  }

  CurveConfiguration c_;
  CurveSpec spec_;
  SearchBudget budget_;
  RibbonMap map_;
  std::function<bool(const CurveConfiguration&)> visit_;
  std::string name_;
  std::vector<int> region_of_face_, slot_of_face_;
  std::vector<std::array<int, 2>> side_region_;
  std::string key0_;
  std::vector<std::tuple<SurfaceInvariants, int, std::vector<int>, std::vector<int>>> regions0_;
  std::vector<std::string> fixed_;
  std::vector<int> seq_arc_, seq_side_, count_;
  std::set<std::string> seen_;
  SearchStats stats_;
  bool stop_ = false;
};

}  // namespace

SearchStats for_each_candidate(const CurveConfiguration& c, const CurveSpec& spec, const SearchBudget& budget,
                               const std::function<bool(const CurveConfiguration&)>& visit, const std::string& name) {
  Extender e(c, spec, budget, name, visit);
  return e.run();
}

std::vector<CurveConfiguration> enumerate_candidate_curves(const CurveConfiguration& c, const CurveSpec& spec,
                                                           const SearchBudget& budget, const std::string& name,
                                                           SearchStats* stats) {
  std::vector<CurveConfiguration> out;
  const SearchStats s = for_each_candidate(c, spec, budget, [&](const CurveConfiguration& e) {
    out.push_back(e);
    return true;
  }, name);
  if (stats) *stats = s;
  return out;
}

}  // namespace crosscap
