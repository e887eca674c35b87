#ifndef PGCOVER_SEARCH_HPP
#define PGCOVER_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pgcover/covers.hpp"

namespace pgcover {

enum class SearchMode { FirstWitness, EnumerateAll };
enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

struct SearchTask {
  int m;
  PrimeModulus modulus;
  int n;
  SearchMode mode = SearchMode::FirstWitness;
  int thread_count = 1;
  std::uint64_t node_budget = 10'000'000'000ULL;

  SearchTask(int m_, PrimeModulus mod_, int n_) : m(m_), modulus(mod_), n(n_) {
    if (m < 1) throw Error("search: m must be >= 1");
    if (n < m + 1) throw Error("search: n must be >= m+1");
    if (thread_count < 1) thread_count = 1;
  }
};

/// Suspended-run state: which first-extra branch was active and the extras
/// chosen on the current DFS path (global point indices). Only produced by
/// single-threaded runs.
struct Checkpoint {
  int version = 1;
  std::uint32_t p = 0;
  int m = 0;
  int n = 0;
  SearchMode mode = SearchMode::FirstWitness;
  std::uint64_t nodes_done = 0;
  std::size_t branch = 0;                              // index into the first-extra list
  std::vector<std::size_t> path;                       // extras on the suspended path
  std::vector<std::vector<std::size_t>> witnesses_so_far;  // extras lists of earlier finds

  void save(const std::string& file) const {
    std::ofstream out(file);
    if (!out) throw Error("cannot write checkpoint file: " + file);
    out << "pgcover-checkpoint v" << version << "\n";
    out << "task p " << p << " m " << m << " n " << n << " mode "
        << (mode == SearchMode::FirstWitness ? "first" : "all") << "\n";
    out << "nodes " << nodes_done << "\n";
    out << "branch " << branch << "\n";
    out << "path";
    for (std::size_t g : path) out << " " << g;
    out << "\n";
    for (const auto& w : witnesses_so_far) {
      out << "witness";
      for (std::size_t g : w) out << " " << g;
      out << "\n";
    }
  }

  static Checkpoint load(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read checkpoint file: " + file);
    Checkpoint ck;
    std::string line;
    if (!std::getline(in, line) || line != "pgcover-checkpoint v1")
      throw ParseError(1, "bad checkpoint header");
    std::string word, mode_word;
    in >> word >> word >> ck.p >> word >> ck.m >> word >> ck.n >> word >> mode_word;
    ck.mode = mode_word == "all" ? SearchMode::EnumerateAll : SearchMode::FirstWitness;
    in >> word >> ck.nodes_done;
    in >> word >> ck.branch;
    std::getline(in, line);  // eat rest of branch line
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      std::vector<std::size_t> idx;
      std::size_t g;
      while (ls >> g) idx.push_back(g);
      if (tag == "path")
        ck.path = idx;
      else if (tag == "witness")
        ck.witnesses_so_far.push_back(idx);
    }
    return ck;
  }
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<PointSet> witnesses;           // deduplicated canonical representatives
  std::vector<std::string> witness_keys;     // aligned with witnesses
  bool weak_dedup = false;                   // canonical_key hit OrbitTooLarge
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
  std::string exhausted_reason;              // set for the pre-search shortcuts
  std::optional<Checkpoint> checkpoint;      // set on BudgetExceeded (threads=1)
};

namespace detail {

using Mask = std::vector<std::uint64_t>;

inline std::size_t popcount(const Mask& m) {
  std::size_t c = 0;
  for (std::uint64_t w : m) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

inline bool mask_empty(const Mask& m) {
  for (std::uint64_t w : m)
    if (w) return false;
  return true;
}

inline std::size_t and_popcount(const Mask& a, const Mask& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

/// Immutable-per-task geometry tables for the reduced search.
struct SearchContext {
  SpaceDescriptor space;
  PointCatalog catalog;
  std::size_t words;                   // mask words over hyperplane indices
  std::vector<Mask> inc;               // point g -> hyperplanes through it
  Mask residual;                       // hyperplanes missed by the frame
  std::vector<std::size_t> frame;      // global indices of e_1..e_{m+1}
  std::vector<std::size_t> cands;      // non-frame points, increasing index
  std::vector<std::size_t> sufmax;     // suffix max of |inc & residual| over cands
  std::vector<std::size_t> branch_pos; // positions in cands of canonical first extras

  explicit SearchContext(const SpaceDescriptor& sp) : space(sp), catalog(sp) {
    const std::size_t np = catalog.size();
    words = (np + 63) / 64;
    inc.assign(np, Mask(words, 0));
    for (std::size_t q = 0; q < np; ++q)
      for (std::size_t h = 0; h < np; ++h)
        if (incident(catalog[h], catalog[q])) inc[q][h / 64] |= 1ULL << (h % 64);

    const std::size_t len = static_cast<std::size_t>(space.m) + 1;
    std::set<std::size_t> frame_set;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t g =
          catalog.index_of(ProjectivePoint(FieldVector::unit(space.mod, len, i)));
      frame.push_back(g);
      frame_set.insert(g);
    }
    // residual hyperplanes = those avoiding every frame point = all
    // coordinates nonzero
    residual.assign(words, 0);
    for (std::size_t h = 0; h < np; ++h) {
      bool all_nonzero = true;
      for (std::size_t c = 0; c < len; ++c)
        if (catalog[h][c] == 0) {
          all_nonzero = false;
          break;
        }
      if (all_nonzero) residual[h / 64] |= 1ULL << (h % 64);
    }
    for (std::size_t g = 0; g < np; ++g)
      if (!frame_set.count(g)) cands.push_back(g);
    sufmax.assign(cands.size() + 1, 0);
    for (std::size_t i = cands.size(); i-- > 0;)
      sufmax[i] = std::max(sufmax[i + 1], and_popcount(inc[cands[i]], residual));

    // canonical first extras: the monomial-orbit minima (0,..,0,1,..,1)
    // with at least two ones
    for (std::size_t b = 2; b <= len; ++b) {
      std::vector<Residue> v(len, 0);
      for (std::size_t i = len - b; i < len; ++i) v[i] = 1;
      const std::size_t g = catalog.index_of(ProjectivePoint(FieldVector::of(space.mod, v)));
      const auto it = std::lower_bound(cands.begin(), cands.end(), g);
      branch_pos.push_back(static_cast<std::size_t>(it - cands.begin()));
    }
    std::sort(branch_pos.begin(), branch_pos.end());
  }
};

/// One DFS branch: first extra fixed at cands[root_pos], remaining extras
/// strictly above it. Returns false when the node budget was hit, the
/// suspended path is then in `suspend`.
struct BranchRun {
  const SearchContext& ctx;
  std::size_t extras;
  SearchMode mode;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool found = false;
  bool budget_hit = false;
  std::vector<std::vector<std::size_t>> witnesses;  // extras global-index lists
  std::vector<std::size_t> suspend;                 // path at budget exhaustion
  std::vector<std::size_t> resume;                  // path to continue strictly after

  BranchRun(const SearchContext& c, std::size_t e, SearchMode md, std::uint64_t bu)
      : ctx(c), extras(e), mode(md), budget(bu) {}

  struct State {
    std::vector<std::size_t> chosen;   // extras, candidate positions
    std::vector<Mask> tangents;        // frame first, then extras
    Mask covered;                      // hyperplanes through any chosen point
    Mask uncovered;                    // residual & ~covered
  };

  void run(std::size_t root_pos) {
    State st;
    st.covered.assign(ctx.words, 0);
    for (std::size_t g : ctx.frame)
      for (std::size_t w = 0; w < ctx.words; ++w) st.covered[w] |= ctx.inc[g][w];
    for (std::size_t g : ctx.frame) {
      Mask t = ctx.inc[g];
      for (std::size_t o : ctx.frame)
        if (o != g)
          for (std::size_t w = 0; w < ctx.words; ++w) t[w] &= ~ctx.inc[o][w];
      st.tangents.push_back(std::move(t));
    }
    st.uncovered = ctx.residual;  // residual is disjoint from frame coverage
    if (!place(st, root_pos)) return;
    dfs(st, root_pos + 1, 1);
  }

  bool place(State& st, std::size_t pos) {
    ++nodes;
    const std::size_t g = ctx.cands[pos];
    const Mask& ig = ctx.inc[g];
    Mask tq(ctx.words);
    for (std::size_t w = 0; w < ctx.words; ++w) tq[w] = ig[w] & ~st.covered[w];
    if (mask_empty(tq)) return false;  // the new point could never get a tangent
    for (Mask& t : st.tangents) {
      for (std::size_t w = 0; w < ctx.words; ++w) t[w] &= ~ig[w];
      if (mask_empty(t)) return false;  // an earlier point just lost all tangents
    }
    st.tangents.push_back(std::move(tq));
    for (std::size_t w = 0; w < ctx.words; ++w) {
      st.covered[w] |= ig[w];
      st.uncovered[w] &= ~ig[w];
    }
    st.chosen.push_back(pos);
    return true;
  }

  /// depth = number of extras already placed; candidates from `from` up
  void dfs(const State& st, std::size_t from, std::size_t depth) {
    if (depth == extras) {
      if (mask_empty(st.uncovered)) {
        std::vector<std::size_t> w;
        for (std::size_t pos : st.chosen) w.push_back(ctx.cands[pos]);
        witnesses.push_back(std::move(w));
        if (mode == SearchMode::FirstWitness) found = true;
      }
      return;
    }
    const std::size_t slots = extras - depth;
    const std::size_t need = popcount(st.uncovered);
    // greedy coverage bound: the `slots` best remaining candidates must be
    // able to close the uncovered residual set
    std::vector<std::size_t> cov(ctx.cands.size() - from);
    for (std::size_t pos = from; pos < ctx.cands.size(); ++pos)
      cov[pos - from] = and_popcount(ctx.inc[ctx.cands[pos]], st.uncovered);
    {
      std::vector<std::size_t> top = cov;
      const std::size_t k = std::min(slots, top.size());
      std::partial_sort(top.begin(), top.begin() + k, top.end(), std::greater<>());
      std::size_t best = 0;
      for (std::size_t i = 0; i < k; ++i) best += top[i];
      if (best < need) return;
    }
    std::size_t resume_floor = 0;
    bool resume_here = false;
    if (!resume.empty() && depth < resume.size()) {
      resume_floor = resume[depth];
      resume_here = true;
    }
    for (std::size_t pos = from; pos + (slots - 1) < ctx.cands.size(); ++pos) {
      if (resume_here) {
        if (pos < resume_floor) continue;  // fully explored before suspension
        if (pos == resume_floor && depth + 1 < resume.size()) {
          // interior node of the suspended path: descend without recounting
          State next = st;
          if (place_unchecked(next, pos)) dfs(next, pos + 1, depth + 1);
          resume.clear();
          if (found || budget_hit) return;
          continue;
        }
        // deepest suspended node (never visited) or a later sibling:
        // normal processing from here on
        resume.clear();
        resume_here = false;
      }
      if (budget_hit) return;
      if (nodes >= budget) {
        budget_hit = true;
        suspend.clear();
        for (std::size_t c : st.chosen) suspend.push_back(ctx.cands[c]);
        suspend.push_back(ctx.cands[pos]);  // the node about to be expanded
        return;
      }
      if (need > slots * ctx.sufmax[pos]) return;  // sufmax non-increasing: no later pos works
      if (need > cov[pos - from] + (slots - 1) * ctx.sufmax[pos + 1]) continue;
      State next = st;
      if (!place(next, pos)) continue;
      dfs(next, pos + 1, depth + 1);
      if (found || budget_hit) return;
    }
  }

  /// replay a checkpointed placement; prune checks still apply but the
  /// node counter is not incremented again
  bool place_unchecked(State& st, std::size_t pos) {
    --nodes;  // compensate: place() counts it, but the original run already did
    return place(st, pos);
  }
};

inline std::string witness_key(const PointSet& set, bool* weak) {
  try {
    return canonical_key(set);
  } catch (const OrbitTooLarge&) {
    *weak = true;
    std::vector<std::vector<Residue>> pts;
    for (const ProjectivePoint& pt : set.points()) pts.push_back(pt.coords().coords());
    std::sort(pts.begin(), pts.end());
    std::string key = "raw:";
    for (const auto& v : pts) {
      for (Residue c : v) key += std::to_string(c) + ",";
      key += ";";
    }
    return key;
  }
}

}  // namespace detail

/// All nonzero length-`len` vectors over GF(p) with zero coordinate sum,
/// reduced under coordinate permutation and global scaling: representative
/// is the minimum over scalings of the ascending-sorted coordinate tuple.
inline std::vector<FieldVector> zero_sum_canonical_vectors(PrimeModulus p, int len) {
  if (len < 2) throw Error("zero_sum_canonical_vectors: need len >= 2");
  const std::uint32_t pv = p.value();
  std::set<std::vector<Residue>> reps;
  std::vector<Residue> v(static_cast<std::size_t>(len), 0);
  while (true) {
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == pv - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
    std::uint64_t sum = 0;
    for (Residue c : v) sum += c;
    if (sum % pv != 0) continue;
    std::vector<Residue> best;
    for (Residue lam = 1; lam < pv; ++lam) {
      std::vector<Residue> s(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) s[j] = p.mul(v[j], lam);
      std::sort(s.begin(), s.end());
      if (best.empty() || s < best) best = std::move(s);
    }
    reps.insert(best);
  }
  std::vector<FieldVector> out;
  for (const std::vector<Residue>& r : reps) out.push_back(FieldVector::of(p, r));
  return out;
}

/// Exhaustive symmetry-reduced enumeration of size-n minimal blocking sets
/// spanning PG(m,p). The frame e_1..e_{m+1} is fixed WLOG (normal form);
/// extras run in strictly increasing global index order with the lowest
/// extra restricted to its monomial-orbit minimum (0,..,0,1,..,1).
inline SearchOutcome enumerate_spanning_minimal(const SearchTask& task,
                                                const Checkpoint* resume_from = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  auto finish = [&]() -> SearchOutcome& {
    out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return out;
  };
  const std::uint32_t p = task.modulus.value();
  const SpaceDescriptor space(task.m, task.modulus);

  if (resume_from) {
    if (resume_from->p != p || resume_from->m != task.m || resume_from->n != task.n ||
        resume_from->mode != task.mode)
      throw Error("checkpoint does not match the search task");
    if (task.thread_count != 1) throw Error("checkpoint resume requires a single thread");
  }

  // the line is the only blocking set of PG(1,p), and it is minimal
  if (task.m == 1) {
    if (static_cast<std::uint64_t>(task.n) == space.point_count()) {
      PointSet line(space, enumerate_points(space));
      out.status = SearchStatus::Found;
      out.witness_keys.push_back(detail::witness_key(line, &out.weak_dedup));
      out.witnesses.push_back(std::move(line));
    } else {
      out.status = SearchStatus::ExhaustedNone;
      out.exhausted_reason = "the only blocking set of a projective line is the full line";
    }
    return finish();
  }

  if (bound_filter(task.n, task.modulus) == Admissibility::Inadmissible) {
    out.status = SearchStatus::ExhaustedNone;
    out.exhausted_reason = "inadmissible by the maximal irredundant cover bounds (n != p+1 and 2n < 3(p+1), or p > n-1)";
    return finish();
  }

  const std::size_t extras = static_cast<std::size_t>(task.n - task.m - 1);
  // every extra blocks at most (p-1)^{m-1} of the (p-1)^m residual
  // hyperplanes, so fewer than p-1 extras can never block them all
  if (extras < static_cast<std::size_t>(p) - 1) {
    out.status = SearchStatus::ExhaustedNone;
    out.exhausted_reason = "residual coverage bound: " + std::to_string(extras) +
                           " extra points cannot block (p-1)^m all-nonzero hyperplanes";
    return finish();
  }

  const detail::SearchContext ctx(space);
  const std::size_t nb = ctx.branch_pos.size();
  std::vector<detail::BranchRun> runs;
  runs.reserve(nb);
  const std::uint64_t per_branch_budget =
      task.thread_count > 1 ? std::max<std::uint64_t>(1, task.node_budget / nb) : task.node_budget;
  for (std::size_t b = 0; b < nb; ++b)
    runs.emplace_back(ctx, extras, task.mode, per_branch_budget);

  std::size_t start_branch = 0;
  if (resume_from) {
    start_branch = resume_from->branch;
    out.nodes_explored = resume_from->nodes_done;
    if (!resume_from->path.empty() && start_branch < nb) {
      std::vector<std::size_t> rp;
      for (std::size_t g : resume_from->path) {
        const auto it = std::lower_bound(ctx.cands.begin(), ctx.cands.end(), g);
        if (it == ctx.cands.end() || *it != g) throw Error("checkpoint path point not found");
        rp.push_back(static_cast<std::size_t>(it - ctx.cands.begin()));
      }
      runs[start_branch].resume = std::move(rp);
    }
  }

  std::size_t winner = nb;  // first branch (in order) holding a witness
  bool budget_hit = false;
  std::size_t budget_branch = nb;

  if (task.thread_count <= 1) {
    // the node budget is per invocation; nodes_explored accumulates across
    // checkpoint resumes for reporting
    std::uint64_t spent = 0;
    for (std::size_t b = start_branch; b < nb; ++b) {
      runs[b].budget = task.node_budget > spent ? task.node_budget - spent : 0;
      if (runs[b].budget == 0) {
        budget_hit = true;
        budget_branch = b;
        break;
      }
      if (!runs[b].resume.empty()) {
        // replay the branch root (already counted before suspension), then
        // let dfs walk the stored path; resume[0] is always the branch root
        detail::BranchRun& r = runs[b];
        detail::BranchRun::State st;
        st.covered.assign(ctx.words, 0);
        for (std::size_t g : ctx.frame)
          for (std::size_t w = 0; w < ctx.words; ++w) st.covered[w] |= ctx.inc[g][w];
        for (std::size_t g : ctx.frame) {
          detail::Mask t = ctx.inc[g];
          for (std::size_t o : ctx.frame)
            if (o != g)
              for (std::size_t w = 0; w < ctx.words; ++w) t[w] &= ~ctx.inc[o][w];
          st.tangents.push_back(std::move(t));
        }
        st.uncovered = ctx.residual;
        const std::size_t root = r.resume[0];
        if (r.resume.size() == 1) {
          r.resume.clear();
          if (r.place(st, root)) r.dfs(st, root + 1, 1);
        } else if (r.place_unchecked(st, root)) {
          r.dfs(st, root + 1, 1);
        }
      } else {
        runs[b].run(ctx.branch_pos[b]);
      }
      spent += runs[b].nodes;
      if (runs[b].budget_hit) {
        budget_hit = true;
        budget_branch = b;
        break;
      }
      if (!runs[b].witnesses.empty() && winner == nb) {
        winner = b;
        if (task.mode == SearchMode::FirstWitness) break;
      }
    }
    out.nodes_explored += spent;
  } else {
    std::atomic<std::size_t> next{start_branch};
    auto worker = [&]() {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= nb) return;
        runs[b].run(ctx.branch_pos[b]);
      }
    };
    std::vector<std::thread> pool;
    const int nt = std::min<int>(task.thread_count, static_cast<int>(nb - start_branch) > 0
                                                        ? static_cast<int>(nb - start_branch)
                                                        : 1);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (std::size_t b = start_branch; b < nb; ++b) {
      if (runs[b].budget_hit && budget_branch == nb) {
        budget_hit = true;
        budget_branch = b;
      }
      if (!runs[b].witnesses.empty() && winner == nb) winner = b;
    }
    if (budget_hit && winner != nb && winner < budget_branch) budget_hit = false;
    // deterministic node accounting: in first-witness mode only branches up
    // to the decisive one contribute
    const std::size_t last = task.mode == SearchMode::FirstWitness
                                 ? std::min(winner, budget_hit ? budget_branch : nb - 1)
                                 : nb - 1;
    for (std::size_t b = start_branch; b <= last && b < nb; ++b)
      out.nodes_explored += runs[b].nodes;
  }

  if (task.thread_count <= 1 && budget_hit) {
    out.status = SearchStatus::BudgetExceeded;
    Checkpoint ck;
    ck.p = p;
    ck.m = task.m;
    ck.n = task.n;
    ck.mode = task.mode;
    ck.nodes_done = out.nodes_explored;
    ck.branch = budget_branch;
    ck.path = runs[budget_branch].suspend;
    for (std::size_t b = start_branch; b <= budget_branch; ++b)
      for (const auto& w : runs[b].witnesses) ck.witnesses_so_far.push_back(w);
    if (resume_from)
      for (const auto& w : resume_from->witnesses_so_far)
        ck.witnesses_so_far.insert(ck.witnesses_so_far.begin(), w);
    out.checkpoint = std::move(ck);
    return finish();
  }
  if (budget_hit && (task.mode == SearchMode::EnumerateAll || winner == nb ||
                     winner > budget_branch)) {
    out.status = SearchStatus::BudgetExceeded;
    return finish();
  }

  // collect witnesses in deterministic branch order, verify, deduplicate
  std::map<std::string, PointSet> dedup;
  auto take = [&](const std::vector<std::size_t>& extra_idx) {
    std::vector<ProjectivePoint> pts;
    for (std::size_t g : ctx.frame) pts.push_back(ctx.catalog[g]);
    for (std::size_t g : extra_idx) pts.push_back(ctx.catalog[g]);
    PointSet set(space, std::move(pts));
    const MinimalityReport mr = minimality_report(set);
    if (!mr.is_minimal() || span_dimension(set) != task.m)
      throw Error("search produced a non-minimal or non-spanning candidate");
    const std::string key = detail::witness_key(set, &out.weak_dedup);
    dedup.emplace(key, std::move(set));
  };
  if (resume_from)
    for (const auto& w : resume_from->witnesses_so_far) take(w);
  if (task.mode == SearchMode::FirstWitness) {
    if (winner < nb) take(runs[winner].witnesses.front());
  } else {
    for (std::size_t b = start_branch; b < nb; ++b)
      for (const auto& w : runs[b].witnesses) take(w);
  }
  for (auto& [key, set] : dedup) {
    out.witness_keys.push_back(key);
    out.witnesses.push_back(std::move(set));
  }
  out.status = out.witnesses.empty() ? SearchStatus::ExhaustedNone : SearchStatus::Found;
  return finish();
}

/// One (n, p, m) search cell of the classification table.
struct TableCell {
  int n = 0;
  std::uint32_t p = 0;
  int m = 0;
  std::string method;  // "forced_line", "gf2_closed_form", "search", "bound"
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::uint64_t nodes = 0;
};

struct TableRow {
  int n = 0;
  std::vector<std::pair<int, std::uint32_t>> pairs;  // (m, p), sorted by (p, m)
  std::vector<TableCell> cells;
};

/// Existence classification of spanning minimal blocking sets of size
/// n <= n_max: the (m,p) pairs per n. Primes gated by bound_filter, the
/// line case contributes (1,p), GF(2) uses the closed form, the rest is
/// exhaustive search.
inline std::vector<TableRow> build_table(int n_max, int thread_count = 1,
                                         std::uint64_t node_budget = 10'000'000'000ULL) {
  std::vector<TableRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    for (std::uint32_t p = 2; static_cast<int>(p) <= n - 1; ++p) {
      if (!PrimeModulus::is_prime(p)) continue;
      const PrimeModulus mod(p);
      const Admissibility verdict = bound_filter(n, mod);
      if (verdict == Admissibility::Inadmissible) continue;
      if (verdict == Admissibility::ForcedLine) {
        TableCell cell{n, p, 1, "forced_line", SearchStatus::Found, 0};
        row.cells.push_back(cell);
        row.pairs.emplace_back(1, p);
      }
      for (int m = 2; m <= n - 2; ++m) {
        TableCell cell{n, p, m, "search", SearchStatus::ExhaustedNone, 0};
        if (p == 2) {
          // closed form: a spanning minimal set of PG(m,2) exists iff m is
          // odd, and then has size exactly m+2
          cell.method = "gf2_closed_form";
          cell.status = (m % 2 == 1 && n == m + 2) ? SearchStatus::Found
                                                   : SearchStatus::ExhaustedNone;
        } else {
          SearchTask task(m, mod, n);
          task.mode = SearchMode::FirstWitness;
          task.thread_count = thread_count;
          task.node_budget = node_budget;
          const SearchOutcome oc = enumerate_spanning_minimal(task);
          cell.status = oc.status;
          cell.nodes = oc.nodes_explored;
        }
        if (cell.status == SearchStatus::Found) row.pairs.emplace_back(m, p);
        row.cells.push_back(cell);
      }
    }
    std::sort(row.pairs.begin(), row.pairs.end(),
              [](const auto& a, const auto& b) {
                return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pgcover

#endif
