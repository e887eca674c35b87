// pgcover: minimal blocking sets in PG(m,p) and covers of (C_p)^d by
// maximal subgroups. Subcommands: verify, cover, search, table, triangle,
// gf2. Emits one JSON document per run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgcover/io.hpp"
#include "pgcover/report.hpp"

namespace {

using namespace pgcover;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int default_threads() {
  if (const char* env = std::getenv("PGCOVER_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json verify_payload(const PointSet& set) {
  const MinimalityReport mr = minimality_report(set);
  Json j = json_minimality(set, mr);
  j["cover"] = json_cover_report(verify_cover(cover_from_blocking(set)));
  return j;
}

int cmd_verify(const std::string& file, int ambient, bool timing) {
  Timer timer;
  const std::string bytes = slurp(file);
  std::istringstream in(bytes);
  const PointSet set = read_point_set(in);
  if (ambient >= 0 && ambient != set.space().m)
    throw DimensionMismatch("file declares m=" + std::to_string(set.space().m) +
                            ", --ambient requested " + std::to_string(ambient));
  emit(run_report("verify", input_digest(bytes), verify_payload(set), timer.ms(), timing));
  return 0;
}

int cmd_cover(const std::string& file, bool timing) {
  Timer timer;
  const std::string bytes = slurp(file);
  std::istringstream in(bytes);
  const DualCover cover = read_cover(in);
  const CoverReport rep = verify_cover(cover);
  Json j;
  j["p"] = cover.mod().value();
  j["d"] = cover.d();
  j["n"] = cover.n();
  Json duals = Json::array();
  for (const ProjectivePoint& b : cover.duals()) duals.push_back(json_point(b));
  j["duals"] = duals;
  j["report"] = json_cover_report(rep);
  // k-wise intersection sizes, listed as the multiset per level
  if (cover.group_order() <= 6561) {
    Json levels = Json::array();
    for (std::size_t k = 1; k <= cover.n(); ++k) {
      std::map<std::uint64_t, std::size_t> sizes;
      detail::for_each_subset(cover.n(), k, [&](const std::vector<std::size_t>& sub) {
        ++sizes[intersection_size(cover, sub)];
      });
      Json lv = Json::object();
      for (const auto& [sz, cnt] : sizes) lv[std::to_string(sz)] = cnt;
      levels.push_back({{"k", k}, {"sizes", lv}});
    }
    j["intersection_levels"] = levels;
    j["union_size"] = union_size_direct(cover);
    if (rep.covers && rep.irredundant && rep.maximal && rep.core_free)
      j["lemma_audit"] = json_lemma_audit(lemma_audit(cover));
  }
  emit(run_report("cover", input_digest(bytes), j, timer.ms(), timing));
  return 0;
}

int cmd_search(int m, std::uint32_t p, int n, bool all, int threads, std::uint64_t budget,
               const std::string& checkpoint_path, bool timing) {
  Timer timer;
  SearchTask task(m, PrimeModulus(p), n);
  task.mode = all ? SearchMode::EnumerateAll : SearchMode::FirstWitness;
  task.thread_count = threads;
  task.node_budget = budget;
  Checkpoint resume;
  bool have_resume = false;
  if (!checkpoint_path.empty()) {
    if (threads != 1) throw Error("--checkpoint requires --threads 1");
    std::ifstream probe(checkpoint_path);
    if (probe.good()) {
      resume = Checkpoint::load(checkpoint_path);
      have_resume = true;
    }
  }
  const SearchOutcome oc = enumerate_spanning_minimal(task, have_resume ? &resume : nullptr);
  if (!checkpoint_path.empty()) {
    if (oc.status == SearchStatus::BudgetExceeded && oc.checkpoint)
      oc.checkpoint->save(checkpoint_path);
    else if (have_resume)
      std::remove(checkpoint_path.c_str());  // run completed; drop the stale state
  }
  std::ostringstream cmd;
  cmd << "search -m " << m << " -p " << p << " -n " << n << (all ? " --all" : " --first");
  emit(run_report(cmd.str(), input_digest(cmd.str()), json_search_outcome(oc, timing),
                  timer.ms(), timing));
  switch (oc.status) {
    case SearchStatus::Found: return 0;
    case SearchStatus::ExhaustedNone: return 3;
    case SearchStatus::BudgetExceeded: return 4;
  }
  return 1;
}

int cmd_table(int max_n, int threads, std::uint64_t budget, bool human, bool timing) {
  Timer timer;
  const std::vector<TableRow> rows = build_table(max_n, threads, budget);
  if (human) {
    for (const TableRow& row : rows) {
      std::cout << "n=" << row.n << ":";
      for (const auto& [m, p] : row.pairs) std::cout << " (" << m << "," << p << ")";
      std::cout << "\n";
    }
    return 0;
  }
  std::ostringstream cmd;
  cmd << "table --max-n " << max_n;
  emit(run_report(cmd.str(), input_digest(cmd.str()), json_table(rows), timer.ms(), timing));
  return 0;
}

int cmd_triangle(std::uint32_t p, bool timing) {
  Timer timer;
  const PointSet tri = projective_triangle(PrimeModulus(p));
  Json j = verify_payload(tri);
  std::ostringstream file;
  write_point_set(file, tri);
  j["file"] = file.str();
  std::ostringstream cmd;
  cmd << "triangle -p " << p;
  emit(run_report(cmd.str(), input_digest(cmd.str()), j, timer.ms(), timing));
  return 0;
}

int cmd_gf2(int m, bool timing) {
  Timer timer;
  const Gf2Family fam = gf2_minimal_sets(m, m);
  Json j;
  j["m"] = m;
  j["exists"] = fam.exists;
  if (fam.exists) {
    j["size"] = m + 2;
    j["spanning_count"] = fam.spanning_count;
    j["representative"] = verify_payload(*fam.representative);
    std::ostringstream file;
    write_point_set(file, *fam.representative);
    j["file"] = file.str();
  } else {
    j["note"] = "no spanning minimal blocking set (d=" + std::to_string(m) + " even)";
  }
  std::ostringstream cmd;
  cmd << "gf2 -m " << m;
  emit(run_report(cmd.str(), input_digest(cmd.str()), j, timer.ms(), timing));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal blocking sets in PG(m,p) and covers of (C_p)^d"};
  app.require_subcommand(1);
  bool omit_timing = false;
  app.add_flag("--omit-timing", omit_timing, "omit timing fields for byte-identical output");
  app.callback([] {});  // subcommands registered below also accept the flag

  auto* verify = app.add_subcommand("verify", "verify a point-set file");
  verify->add_flag("--omit-timing", omit_timing);
  std::string verify_file;
  int ambient = -1;
  verify->add_option("file", verify_file)->required();
  verify->add_option("--ambient", ambient, "required ambient dimension m");

  auto* cover = app.add_subcommand("cover", "verify a cover file");
  cover->add_flag("--omit-timing", omit_timing);
  std::string cover_file;
  cover->add_option("file", cover_file)->required();

  auto* search = app.add_subcommand("search", "search for spanning minimal blocking sets");
  search->add_flag("--omit-timing", omit_timing);
  int sm = 0, sn = 0;
  std::uint32_t sp = 0;
  bool all = false, first = false;
  int threads = default_threads();
  std::uint64_t budget = 10'000'000'000ULL;
  std::string checkpoint_path;
  search->add_option("-m", sm)->required();
  search->add_option("-p", sp)->required();
  search->add_option("-n", sn)->required();
  search->add_flag("--all", all, "enumerate all canonical classes");
  search->add_flag("--first", first, "stop at the first witness (default)");
  search->add_option("--threads", threads);
  search->add_option("--budget", budget, "node budget");
  search->add_option("--checkpoint", checkpoint_path, "resumable checkpoint file");

  auto* table = app.add_subcommand("table", "build the existence table");
  table->add_flag("--omit-timing", omit_timing);
  int max_n = 9;
  bool human = false;
  int table_threads = default_threads();
  std::uint64_t table_budget = 10'000'000'000ULL;
  table->add_option("--max-n", max_n);
  table->add_flag("--human", human, "plain text rows instead of JSON");
  table->add_option("--threads", table_threads);
  table->add_option("--budget", table_budget);

  auto* triangle = app.add_subcommand("triangle", "emit the projective triangle");
  triangle->add_flag("--omit-timing", omit_timing);
  std::uint32_t tp = 0;
  triangle->add_option("-p", tp)->required();

  auto* gf2 = app.add_subcommand("gf2", "GF(2) spanning classification");
  gf2->add_flag("--omit-timing", omit_timing);
  int gm = 0;
  gf2->add_option("-m", gm)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool timing = !omit_timing;
    if (*verify) return cmd_verify(verify_file, ambient, timing);
    if (*cover) return cmd_cover(cover_file, timing);
    if (*search) {
      if (all && first) throw Error("--all and --first are mutually exclusive");
      return cmd_search(sm, sp, sn, all, threads, budget, checkpoint_path, timing);
    }
    if (*table) return cmd_table(max_n, table_threads, table_budget, human, timing);
    if (*triangle) return cmd_triangle(tp, timing);
    if (*gf2) return cmd_gf2(gm, timing);
  } catch (const ParseError& e) {
    std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
