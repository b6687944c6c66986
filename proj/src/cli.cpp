#include "lpr/cli.hpp"

#include "lpr/errors.hpp"
#include "lpr/matcher.hpp"
#include "lpr/pipeline.hpp"
#include "lpr/plate_format.hpp"
#include "lpr/synth.hpp"
#include "lpr/video.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace lpr {

namespace {

struct UsageError : Error {
    using Error::Error;
};

PlateText plate_arg(const std::string& text) {
    try {
        return normalize(text);
    } catch (const Error& e) {
        throw UsageError("invalid plate '" + text + "': " + e.what());
    }
}

void print_matches(std::ostream& out, const std::vector<MatchResult>& hits) {
    out << hits.size() << (hits.size() == 1 ? " match" : " matches") << '\n';
    if (!hits.empty())
        out << report(hits);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Track a vehicle across surveillance videos by its license plate", "lprtrack"};
    app.require_subcommand(1);

    int n_plates = 53;
    std::uint64_t seed = 1;
    std::string out_dir;
    std::vector<std::string> tiers{"mild"};
    auto* gen = app.add_subcommand("gen", "Generate a synthetic corpus");
    gen->add_option("--plates", n_plates, "Number of plates")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--out", out_dir, "Output directory")->required();
    gen->add_option("--tier", tiers, "Degradation tier")->check(CLI::IsMember({"mild", "harsh"}));

    std::vector<std::string> manifests;
    std::string store;
    std::string trace;
    std::string enhancer = "builtin";
    unsigned threads = 0;
    auto* proc = app.add_subcommand("process", "Run the pipeline over videos");
    proc->add_option("--manifest", manifests, "Video manifest(s)")->required()->expected(1, -1);
    proc->add_option("--store", store, "Detection store (JSONL)")->required();
    proc->add_option("--trace", trace, "Write a JSONL stage trace");
    proc->add_option("--enhancer", enhancer, "builtin or none")->check(CLI::IsMember({"builtin", "none"}));
    proc->add_option("--threads", threads, "Videos processed concurrently (0 = all cores)");

    std::string plate;
    int threshold = kDefaultMatchThreshold;
    auto* qry = app.add_subcommand("query", "Find a plate in the detection store");
    qry->add_option("--plate", plate, "Target plate")->required();
    qry->add_option("--store", store, "Detection store (JSONL)")->required();
    qry->add_option("--threshold", threshold, "Maximum mismatch distance")->check(CLI::NonNegativeNumber);

    std::string csv;
    auto* rep = app.add_subcommand("report", "Write the sighting report as CSV");
    rep->add_option("--store", store, "Detection store (JSONL)")->required();
    rep->add_option("--plate", plate, "Target plate")->required();
    rep->add_option("--out", csv, "CSV output file")->required();
    rep->add_option("--threshold", threshold, "Maximum mismatch distance")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gen) {
            std::vector<DegradeTier> specs;
            for (const auto& t : tiers)
                specs.push_back(DegradeTier::named(t));
            const auto entries = gen_corpus(n_plates, seed, specs, out_dir);
            std::cout << "wrote " << entries.size() << " scenes to " << out_dir << '\n';
        } else if (*proc) {
            PipelineConfig cfg;
            cfg.enhancer_name = enhancer;
            cfg.enhancer = make_enhancer(enhancer);
            std::vector<VideoManifest> videos;
            for (const auto& m : manifests)
                videos.push_back(load_manifest(m));
            const std::filesystem::path trace_path = trace;
            const std::size_t n =
                process_all(videos, cfg, store, trace.empty() ? nullptr : &trace_path, threads);
            std::cout << n << " detections\n";
        } else if (*qry) {
            print_matches(std::cout, query(store, plate_arg(plate).str(), threshold));
        } else if (*rep) {
            const auto hits = query(store, plate_arg(plate).str(), threshold);
            std::ofstream out(csv, std::ios::trunc);
            if (!out)
                throw IoFailure("cannot write report " + csv);
            out << report(hits);
            if (!out)
                throw IoFailure("write to report " + csv + " failed");
            std::cout << hits.size() << (hits.size() == 1 ? " match" : " matches") << " written to " << csv << '\n';
        }
    } catch (const UsageError& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoFailure& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitIo;
    } catch (const MalformedRecord& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitIo;
    } catch (const SpecInvalid& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "lprtrack: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace lpr
