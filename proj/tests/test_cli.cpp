#include <doctest.h>

#include "lpr/cli.hpp"
#include "lpr/matcher.hpp"
#include "lpr/synth.hpp"
#include "support.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace lpr;

namespace {

struct Captured {
    int status;
    std::string out;
    std::string err;
};

Captured run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int status = run_cli(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {status, out.str(), err.str()};
}

int run_exe(const std::string& args) {
    const int raw = std::system((std::string(LPRTRACK_EXE) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Detection stored(const std::string& text, int frame) {
    Detection d;
    d.camera_id = "cam-3";
    d.video_id = "v";
    d.frame_index = frame;
    d.timestamp_s = frame / 25.0;
    d.box = BBox{0, 0, 100, 20};
    d.candidates = {RecognitionCandidate{text, text, 0.9, TransformVariant{}}};
    d.best_text = text;
    return d;
}

}  // namespace

TEST_CASE("usage errors exit 1 with a one-line diagnostic") {
    const Captured none = run({});
    CHECK(none.status == 1);
    const Captured unknown = run({"frobnicate"});
    CHECK(unknown.status == 1);
    CHECK(std::count(unknown.err.begin(), unknown.err.end(), '\n') == 1);
    CHECK(run({"query", "--store", "x.jsonl"}).status == 1);
    CHECK(run({"gen", "--plates", "0", "--out", "x"}).status == 1);
    CHECK(run({"gen", "--plates", "2", "--out", "x", "--tier", "medium"}).status == 1);
    CHECK(run({"--help"}).status == 0);
    CHECK(run_exe("frobnicate") == 1);
}

TEST_CASE("invalid plates are usage errors") {
    TempDir dir("cli-plate");
    store_append(dir / "s.jsonl", stored("TS09UB8902", 108));
    const Captured bad = run({"query", "--plate", "TS#09", "--store", (dir / "s.jsonl").string()});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("invalid plate") != std::string::npos);
}

TEST_CASE("io errors exit 2") {
    TempDir dir("cli-io");
    CHECK(run({"query", "--plate", "TS09UB8902", "--store", (dir / "missing.jsonl").string()}).status == 2);
    CHECK(run({"process", "--manifest", (dir / "missing.json").string(), "--store", (dir / "s.jsonl").string()})
              .status == 2);
    std::ofstream(dir / "bad.jsonl") << "garbage\n";
    CHECK(run({"query", "--plate", "TS09UB8902", "--store", (dir / "bad.jsonl").string()}).status == 2);
}

TEST_CASE("query normalizes the target and prints matches") {
    TempDir dir("cli-query");
    const auto store = (dir / "s.jsonl").string();
    store_append(store, stored("TS09UB8902", 108));
    store_append(store, stored("KA51MD4182", 200));
    const Captured q = run({"query", "--plate", "ts 09 ub 8902", "--store", store});
    CHECK(q.status == 0);
    CHECK(q.out.rfind("1 match\n", 0) == 0);
    CHECK(q.out.find("TS09UB8902,4.32,cam-3,v,108,0") != std::string::npos);

    const Captured none = run({"query", "--plate", "AA00AA0000", "--store", store, "--threshold", "0"});
    CHECK(none.status == 0);
    CHECK(none.out == "0 matches\n");
}

TEST_CASE("report writes csv") {
    TempDir dir("cli-report");
    const auto store = (dir / "s.jsonl").string();
    store_append(store, stored("TS09UB8902", 108));
    store_append(store, stored("TS09UB8902", 150));
    const auto csv = dir / "r.csv";
    CHECK(run({"report", "--store", store, "--plate", "TS09UB8902", "--out", csv.string()}).status == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == kReportHeader);
    int rows = 0;
    for (std::string line; std::getline(in, line);)
        ++rows;
    CHECK(rows == 2);
    CHECK(run({"report", "--store", store, "--plate", "TS09UB8902", "--out", (dir / "no" / "r.csv").string()})
              .status == 2);
}

TEST_CASE("gen, process, query end to end") {
    TempDir dir("cli-e2e");
    const auto corpus = dir / "corpus";
    REQUIRE(run_exe("gen --plates 2 --seed 5 --out " + corpus.string() + " --tier mild") == 0);
    const auto entries = load_corpus_index(corpus);
    REQUIRE(entries.size() == 2);
    const auto store = (dir / "store.jsonl").string();
    const auto trace = (dir / "trace.jsonl").string();
    const Captured p = run({"process", "--manifest", entries[0].manifest.string(), entries[1].manifest.string(),
                            "--store", store, "--trace", trace});
    REQUIRE(p.status == 0);
    CHECK(std::filesystem::file_size(trace) > 0);
    const Captured q = run({"query", "--plate", entries[0].plate_text, "--store", store});
    CHECK(q.status == 0);
    CHECK(q.out.rfind("0 matches", 0) != 0);
    CHECK(q.out.find(entries[0].video_id) != std::string::npos);
}
