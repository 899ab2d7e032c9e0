#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

const std::string& work_dir() {
  static const std::string dir = [] {
    std::string d = (fs::temp_directory_path() /
                     ("numforge_cli_" + std::to_string(::getpid())))
                        .string();
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_in(const std::string& name) { return work_dir() + "/" + name; }

// NUMFORGE_SEED is scrubbed by default so the surrounding environment can
// never leak into seed-resolution tests.
RunResult run_cli(const std::string& args,
                  const std::string& env = "env -u NUMFORGE_SEED") {
  std::string cmd = env + " " + NUMFORGE_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

const char* kCensusDataset = R"({
  "p1": {
    "passage": "As of the census, 98.97% of the population were not African American.",
    "qa_pairs": [
      {
        "question": "How many percent of people were not African American?",
        "query_id": "p1-q1",
        "answer": {"number": "98.97", "date": {"day": "", "month": "", "year": ""}, "spans": []}
      }
    ]
  }
})";

}  // namespace

TEST_CASE("gen-nd writes the requested records deterministically") {
  std::string x1 = path_in("x1.jsonl");
  std::string x2 = path_in("x2.jsonl");
  auto r = run_cli("gen-nd --kind signed-combo --count 10 --seed 7 --split train --out " + x1);
  CHECK(r.exit_code == 0);
  auto lines = lines_of(read_file(x1));
  REQUIRE(lines.size() == 10);
  for (const std::string& line : lines) {
    ordered_json j = ordered_json::parse(line);
    CHECK(j.at("kind") == "signed-combo");
    CHECK(j.at("split") == "train");
    CHECK_FALSE(j.at("question").get<std::string>().empty());
    CHECK_FALSE(j.at("answer").at("number").get<std::string>().empty());
  }

  r = run_cli("gen-nd --kind signed-combo --count 10 --seed 7 --split train --out " + x2);
  CHECK(r.exit_code == 0);
  CHECK(read_file(x1) == read_file(x2));

  // a different seed changes the content
  r = run_cli("gen-nd --kind signed-combo --count 10 --seed 8 --split train --out " + x2);
  CHECK(r.exit_code == 0);
  CHECK(read_file(x1) != read_file(x2));
}

TEST_CASE("smaller counts are strict prefixes under the same seed") {
  std::string small = path_in("prefix_small.jsonl");
  std::string large = path_in("prefix_large.jsonl");
  CHECK(run_cli("gen-nd --count 5 --seed 21 --out " + small).exit_code == 0);
  CHECK(run_cli("gen-nd --count 17 --seed 21 --out " + large).exit_code == 0);
  std::string s = read_file(small);
  std::string l = read_file(large);
  REQUIRE(l.size() > s.size());
  CHECK(l.compare(0, s.size(), s) == 0);
  CHECK(lines_of(s).size() == 5);
  CHECK(lines_of(l).size() == 17);
}

TEST_CASE("output bytes do not depend on the job count") {
  std::string one = path_in("jobs1.jsonl");
  std::string four = path_in("jobs4.jsonl");
  CHECK(run_cli("gen-nd --count 64 --seed 11 --jobs 1 --out " + one).exit_code == 0);
  CHECK(run_cli("gen-nd --count 64 --seed 11 --jobs 4 --out " + four).exit_code == 0);
  CHECK(read_file(one) == read_file(four));

  CHECK(run_cli("gen-td --count 12 --seed 5 --jobs 1 --out " + one).exit_code == 0);
  CHECK(run_cli("gen-td --count 12 --seed 5 --jobs 3 --out " + four).exit_code == 0);
  CHECK(read_file(one) == read_file(four));
}

TEST_CASE("seed resolution prefers flag over config over environment") {
  std::string base = path_in("seed_base.jsonl");
  std::string probe = path_in("seed_probe.jsonl");
  CHECK(run_cli("gen-nd --count 6 --seed 7 --out " + base).exit_code == 0);

  SUBCASE("no seed anywhere is a usage error") {
    auto r = run_cli("gen-nd --count 6 --out " + probe);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("seed") != std::string::npos);
  }

  SUBCASE("environment variable fallback") {
    auto r = run_cli("gen-nd --count 6 --out " + probe, "env NUMFORGE_SEED=7");
    CHECK(r.exit_code == 0);
    CHECK(read_file(probe) == read_file(base));
  }

  SUBCASE("flag wins over environment") {
    auto r = run_cli("gen-nd --count 6 --seed 7 --out " + probe, "env NUMFORGE_SEED=9");
    CHECK(r.exit_code == 0);
    CHECK(read_file(probe) == read_file(base));
  }

  SUBCASE("config seed wins over environment") {
    write_file(path_in("seed7.json"), R"({"seed": 7})");
    auto r = run_cli("gen-nd --count 6 --config " + path_in("seed7.json") + " --out " + probe,
                     "env NUMFORGE_SEED=9");
    CHECK(r.exit_code == 0);
    CHECK(read_file(probe) == read_file(base));
  }

  SUBCASE("flag wins over config") {
    write_file(path_in("seed9.json"), R"({"seed": 9})");
    auto r = run_cli("gen-nd --count 6 --seed 7 --config " + path_in("seed9.json") +
                     " --out " + probe);
    CHECK(r.exit_code == 0);
    CHECK(read_file(probe) == read_file(base));
  }

  SUBCASE("unparseable environment seed is a usage error") {
    auto r = run_cli("gen-nd --count 6 --out " + probe, "env NUMFORGE_SEED=abc");
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("config files mirror the flags") {
  std::string ref = path_in("cfg_ref.jsonl");
  std::string got = path_in("cfg_got.jsonl");
  CHECK(run_cli("gen-nd --kind signed-combo --count 10 --seed 7 --split train --out " + ref)
            .exit_code == 0);

  std::string cfg = path_in("run.json");
  write_file(cfg, R"({"seed": 7, "count": 10, "kind": "signed-combo", "split": "train"})");
  CHECK(run_cli("gen-nd --config " + cfg + " --out " + got).exit_code == 0);
  CHECK(read_file(got) == read_file(ref));

  // flags override config values
  CHECK(run_cli("gen-nd --config " + cfg + " --count 3 --out " + got).exit_code == 0);
  CHECK(lines_of(read_file(got)).size() == 3);

  write_file(path_in("broken.json"), "{nope");
  CHECK(run_cli("gen-nd --config " + path_in("broken.json") + " --out " + got).exit_code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("gen-nd --seed 1 --kind no-such-kind --out -").exit_code == 1);
  CHECK(run_cli("gen-nd --seed 1 --split weird --out -").exit_code == 1);
  CHECK(run_cli("gen-nd --seed 1 --count 0 --out -").exit_code == 1);
  CHECK(run_cli("gen-nd --seed 1 --format xml --out -").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("gen-td --seed 1 --reuse-p 1.5 --out -").exit_code == 1);
  CHECK(run_cli("mask --seed 1 --mask-p 1.5 --in /dev/null").exit_code == 1);
  CHECK(run_cli("eval --gold g --pred p --group-by sideways").exit_code == 1);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  auto r = run_cli("gen-nd --help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("--seed") != std::string::npos);
}

TEST_CASE("data errors exit 2") {
  write_file(path_in("garbage.json"), "this is not json\n");
  CHECK(run_cli("augment --in " + path_in("garbage.json") +
                " --augmentators compl-percent --out " + path_in("aug_fail.json"))
            .exit_code == 2);
  CHECK(run_cli("augment --in " + path_in("does_not_exist.json") +
                " --augmentators compl-percent --out " + path_in("aug_fail.json"))
            .exit_code == 2);
  write_file(path_in("preds.jsonl"), "");
  CHECK(run_cli("eval --gold " + path_in("garbage.json") + " --pred " +
                path_in("preds.jsonl"))
            .exit_code == 2);
  CHECK(run_cli("stats --in " + path_in("garbage.json")).exit_code == 2);
  // unwritable output directory
  CHECK(run_cli("gen-nd --seed 1 --count 1 --out /no/such/dir/x.jsonl").exit_code == 2);
}

TEST_CASE("augment applies the requested rules and reports stats") {
  std::string in = path_in("drop.json");
  std::string out = path_in("aug.json");
  std::string stats = path_in("stats.json");
  write_file(in, kCensusDataset);
  std::string before = read_file(in);

  auto r = run_cli("augment --in " + in + " --augmentators compl-percent --out " + out +
                   " --stats " + stats);
  CHECK(r.exit_code == 0);
  CHECK(read_file(in) == before);

  ordered_json sj = ordered_json::parse(read_file(stats));
  REQUIRE(sj.size() == 1);
  CHECK(sj.at("compl-percent") == 1);

  ordered_json aug = ordered_json::parse(read_file(out));
  REQUIRE(aug.size() == 1);
  const auto& [pid, entry] = *aug.items().begin();
  CHECK(pid == "p1-q1:compl-percent");
  REQUIRE(entry.at("qa_pairs").size() == 1);
  const auto& qa = entry.at("qa_pairs")[0];
  CHECK(qa.at("query_id") == "p1-q1:compl-percent");
  CHECK(qa.at("question") == "How many percent of people were African American?");
  CHECK(qa.at("answer").at("number") == "1.03");
}

TEST_CASE("augment rejects unknown augmentator names before reading data") {
  std::string in = path_in("drop2.json");
  std::string out = path_in("aug2.json");
  write_file(in, kCensusDataset);
  auto r = run_cli("augment --in " + in + " --augmentators no-such-rule --out " + out);
  CHECK(r.exit_code == 1);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("eval prints a perfect scoreboard for perfect predictions") {
  std::string gold = path_in("gold.json");
  std::string pred = path_in("pred.jsonl");
  std::string report = path_in("report.json");
  write_file(gold, kCensusDataset);
  write_file(pred, R"({"query_id": "p1-q1", "answer": "98.97"})" "\n");

  auto r = run_cli("eval --gold " + gold + " --pred " + pred + " --out " + report);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("EM 100.00") != std::string::npos);
  CHECK(r.output.find("F1 100.00") != std::string::npos);

  ordered_json rj = ordered_json::parse(read_file(report));
  CHECK(rj.at("overall").at("em") == doctest::Approx(100.0));
  CHECK(rj.at("overall").at("count") == 1);

  // a wrong prediction drags EM down and group-by none skips breakdowns
  write_file(pred, R"({"query_id": "p1-q1", "answer": "13"})" "\n");
  r = run_cli("eval --gold " + gold + " --pred " + pred + " --group-by none");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("EM 0.00") != std::string::npos);
  CHECK(r.output.find("by answer type") == std::string::npos);
}

TEST_CASE("tokenize splits digit runs and is idempotent") {
  std::string in = path_in("tok_in.txt");
  std::string out1 = path_in("tok_out1.jsonl");
  std::string out2 = path_in("tok_out2.jsonl");
  write_file(in, "went for 28 yards\na crowd of 4,482 fans saw 1234 plays\n");

  CHECK(run_cli("tokenize --in " + in + " --out " + out1).exit_code == 0);
  auto lines = lines_of(read_file(out1));
  REQUIRE(lines.size() == 2);
  auto t0 = ordered_json::parse(lines[0]).at("tokens").get<std::vector<std::string>>();
  CHECK(t0 == std::vector<std::string>{"went", "for", "2", "##8", "yards"});
  auto t1 = ordered_json::parse(lines[1]).at("tokens").get<std::vector<std::string>>();
  CHECK(std::find(t1.begin(), t1.end(), "4,482") != t1.end());
  CHECK(std::find(t1.begin(), t1.end(), "1") != t1.end());
  CHECK(std::find(t1.begin(), t1.end(), "##4") != t1.end());

  // tokenized output is valid input and does not change further
  CHECK(run_cli("tokenize --in " + out1 + " --out " + out2).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("shift emits deterministic position windows") {
  std::string in = path_in("shift_in.txt");
  std::string out1 = path_in("shift_out1.jsonl");
  std::string out2 = path_in("shift_out2.jsonl");
  write_file(in, "went for 28 yards\nshort line\n");

  CHECK(run_cli("shift --seed 3 --in " + in + " --out " + out1).exit_code == 0);
  CHECK(run_cli("shift --seed 3 --in " + in + " --out " + out2).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));

  for (const std::string& line : lines_of(read_file(out1))) {
    ordered_json j = ordered_json::parse(line);
    auto toks = j.at("tokens").get<std::vector<std::string>>();
    auto ids = j.at("position_ids").get<std::vector<int>>();
    int offset = j.at("offset").get<int>();
    REQUIRE(ids.size() == toks.size());
    CHECK(ids.front() == offset);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      CHECK(ids[i] == offset + static_cast<int>(i));
      CHECK(ids[i] < 512);
    }
  }

  // over-long records are data errors
  std::string big;
  for (int i = 0; i < 513; ++i) big += "tok ";
  write_file(in, big + "\n");
  auto r = run_cli("shift --seed 3 --in " + in + " --out " + out1);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("record 0") != std::string::npos);
}

TEST_CASE("mask selects limited positions and honors the filter") {
  std::string in = path_in("mask_in.txt");
  std::string out1 = path_in("mask_out1.jsonl");
  std::string out2 = path_in("mask_out2.jsonl");
  std::string text;
  for (int i = 0; i < 40; ++i) text += "lorem ipsum dolor ";
  write_file(in, text + "\n");

  CHECK(run_cli("mask --seed 5 --in " + in + " --out " + out1).exit_code == 0);
  CHECK(run_cli("mask --seed 5 --in " + in + " --out " + out2).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));

  auto lines = lines_of(read_file(out1));
  REQUIRE(lines.size() == 1);
  ordered_json j = ordered_json::parse(lines[0]);
  auto positions = j.at("mask_positions").get<std::vector<int>>();
  CHECK(positions.size() <= 65);
  CHECK(std::is_sorted(positions.begin(), positions.end()));
  CHECK(j.contains("originals"));

  // the paragraph filter drops number-poor lines entirely
  CHECK(run_cli("mask --seed 5 --filter --in " + in + " --out " + out1).exit_code == 0);
  CHECK(lines_of(read_file(out1)).empty());

  std::string numbery;
  for (int i = 0; i < 20; ++i) numbery += std::to_string(100 + i) + " points ";
  write_file(in, numbery + "\n");
  CHECK(run_cli("mask --seed 5 --filter --in " + in + " --out " + out1).exit_code == 0);
  CHECK(lines_of(read_file(out1)).size() == 1);
}

TEST_CASE("stats summarizes jsonl and drop inputs") {
  std::string nd = path_in("stats_nd.jsonl");
  CHECK(run_cli("gen-nd --kind signed-combo --count 10 --seed 7 --split train --out " + nd)
            .exit_code == 0);
  auto r = run_cli("stats --in " + nd);
  CHECK(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.output);
  CHECK(j.at("format") == "jsonl");
  CHECK(j.at("records") == 10);
  CHECK(j.at("by_kind").at("signed-combo") == 10);
  CHECK(j.at("by_split").at("train") == 10);

  std::string aug = path_in("stats_aug.json");
  write_file(path_in("stats_drop_in.json"), kCensusDataset);
  CHECK(run_cli("augment --in " + path_in("stats_drop_in.json") +
                " --augmentators compl-percent --out " + aug)
            .exit_code == 0);
  r = run_cli("stats --in " + aug);
  CHECK(r.exit_code == 0);
  j = ordered_json::parse(r.output);
  CHECK(j.at("format") == "drop");
  CHECK(j.at("passages") == 1);
  CHECK(j.at("qa_pairs") == 1);
  CHECK(j.at("augmentators").at("compl-percent") == 1);

  // multi-line DROP files are sniffed too
  write_file(path_in("stats_pretty.json"), kCensusDataset);
  r = run_cli("stats --in " + path_in("stats_pretty.json"));
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.output).at("format") == "drop");

  // explicit --format overrides sniffing
  r = run_cli("stats --in " + aug + " --format jsonl");
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.output).at("records") == 1);
}

TEST_CASE("gen-td emits one record per question over the requested passages") {
  std::string out1 = path_in("td1.jsonl");
  std::string out2 = path_in("td2.jsonl");
  CHECK(run_cli("gen-td --count 5 --seed 3 --out " + out1).exit_code == 0);
  CHECK(run_cli("gen-td --count 5 --seed 3 --out " + out2).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));

  std::set<std::string> passages;
  for (const std::string& line : lines_of(read_file(out1))) {
    ordered_json j = ordered_json::parse(line);
    passages.insert(j.at("passage").get<std::string>());
    CHECK_FALSE(j.at("question").get<std::string>().empty());
    CHECK_FALSE(j.at("skill").get<std::string>().empty());
    CHECK(j.at("answer").is_object());
  }
  CHECK(passages.size() == 5);

  CHECK(run_cli("gen-td --count 5 --seed 3 --vocab nfl --out " + out2).exit_code == 0);
  CHECK(read_file(out2) != read_file(out1));

  auto r = run_cli("gen-td --count 3 --seed 3 --format drop --out " + out2);
  CHECK(r.exit_code == 0);
  r = run_cli("stats --in " + out2);
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.output).at("passages") == 3);
}

TEST_CASE("drop format works for gen-nd as well") {
  std::string out = path_in("nd_drop.json");
  CHECK(run_cli("gen-nd --count 4 --seed 9 --format drop --out " + out).exit_code == 0);
  ordered_json j = ordered_json::parse(read_file(out));
  REQUIRE(j.size() == 4);
  CHECK(j.contains("nd-0"));
  CHECK(j.at("nd-0").at("qa_pairs")[0].at("query_id") == "nd-0");

  auto r = run_cli("stats --in " + out);
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.output).at("qa_pairs") == 4);
}

TEST_CASE("stdin and stdout work as streaming endpoints") {
  std::string cmd = std::string("echo 'went for 28 yards' | env -u NUMFORGE_SEED ") +
                    NUMFORGE_CLI_PATH + " tokenize 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = ::pclose(pipe);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  ordered_json j = ordered_json::parse(out);
  CHECK(j.at("tokens").get<std::vector<std::string>>() ==
        std::vector<std::string>{"went", "for", "2", "##8", "yards"});
}
