#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "crosscap/errors.hpp"
#include "crosscap/search.hpp"

namespace crosscap {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const char* kCurveLetters = "abcdefghijklmnopqrstuvwxyz";

// Anonymous form with free curves renamed a, b, c, ...
CurveConfiguration presentable(const CurveConfiguration& c) {
  CurveConfiguration f = anonymous_form(c);
  for (std::size_t i = 0; i < f.curves.size(); ++i) f.curves[i] = std::string(1, kCurveLetters[i % 26]) + (i >= 26 ? std::to_string(i / 26) : "");
  return f;
}

CurveConfiguration empty_configuration(const SurfaceInvariants& ambient) {
  CurveConfiguration c;
  c.ambient = ambient;
  Region r;
  r.name = "r1";
  r.type = ambient;
  r.collars = ambient.boundary;
  c.regions.push_back(r);
  return c;
}

void guard(const SurfaceInvariants& ambient, int n_curves, const SearchBudget& budget) {
  check_surface(ambient);
  if (euler_characteristic(ambient) < -12)
    throw BudgetTooLarge("ambient " + describe(ambient) + " is beyond desk scale (chi < -12)");
  if (n_curves > 6) throw BudgetTooLarge("at most 6 curves per enumerated configuration");
  if (budget.max_crossings > 12) throw BudgetTooLarge("at most 12 crossings per enumerated configuration");
  if (n_curves < 0) throw PreconditionViolated("negative curve count");
}

std::vector<CurveConfiguration> next_level(const std::vector<CurveConfiguration>& level, const SearchBudget& budget,
                                           int jobs) {
  std::vector<std::vector<std::pair<std::string, CurveConfiguration>>> found(level.size());
  std::vector<char> truncated(level.size(), 0);
  parallel_for(static_cast<int>(level.size()), jobs, [&](int i) {
    const CurveConfiguration& parent = level[i];
    SearchBudget b = budget;
    b.max_crossings = budget.max_crossings - parent.crossing_count();
    if (b.max_crossings < 0) return;
    std::map<std::string, CurveConfiguration> local;
    const SearchStats st = for_each_candidate(parent, CurveSpec::any(parent), b, [&](const CurveConfiguration& e) {
      CurveConfiguration f = presentable(e);
      std::string key = serialize(f);
      local.emplace(std::move(key), std::move(f));
      return true;
    }, "new");
    if (st.truncated) truncated[i] = 1;
    for (auto& kv : local) found[i].push_back(std::move(kv));
  });
  if (std::find(truncated.begin(), truncated.end(), 1) != truncated.end())
    throw BudgetTooLarge("candidate limit reached while enumerating; raise max_candidates");
  std::map<std::string, CurveConfiguration> merged;
  for (auto& list : found)
    for (auto& [k, v] : list) merged.emplace(k, std::move(v));
  std::vector<CurveConfiguration> out;
  out.reserve(merged.size());
  for (auto& kv : merged) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace

std::vector<CurveConfiguration> enumerate_configurations(const SurfaceInvariants& ambient, int n_curves,
                                                         const SearchBudget& budget, int jobs) {
  guard(ambient, n_curves, budget);
  std::vector<CurveConfiguration> level{empty_configuration(ambient)};
  for (int k = 0; k < n_curves; ++k) level = next_level(level, budget, jobs);
  return level;
}

std::vector<CorpusEntry> build_corpus(const SurfaceInvariants& ambient, int max_curves, const SearchBudget& budget,
                                      int jobs) {
  guard(ambient, max_curves, budget);
  std::vector<CorpusEntry> out;
  std::vector<CurveConfiguration> level{empty_configuration(ambient)};
  const std::string prefix = to_literal(ambient);
  for (int k = 0;; ++k) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      CorpusEntry e;
      char buf[32];
      std::snprintf(buf, sizeof buf, "-c%d-%05zu", k, i + 1);
      e.id = prefix + buf;
      e.n_curves = k;
      e.crossings = level[i].crossing_count();
      e.hash = content_hash(serialize(level[i]));
      e.config = level[i];
      out.push_back(std::move(e));
    }
    if (k == max_curves) break;
    level = next_level(level, budget, jobs);
  }
  return out;
}

std::string corpus_index(const std::vector<CorpusEntry>& corpus) {
  std::string out = "id\tn_curves\tcrossings\thash\n";
  for (const auto& e : corpus)
    out += e.id + "\t" + std::to_string(e.n_curves) + "\t" + std::to_string(e.crossings) + "\t" + e.hash + "\n";
  return out;
}

void write_corpus(const std::vector<CorpusEntry>& corpus, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const auto& e : corpus) {
    std::ofstream f(fs::path(dir) / (e.id + ".crv"));
    if (!f) throw PreconditionViolated("cannot write into " + dir);
    f << serialize(e.config);
  }
  std::ofstream idx(fs::path(dir) / "index.tsv");
  idx << corpus_index(corpus);
}

}  // namespace crosscap
