// Command-line driver: application demos, the security-game suite, and
// micro-benchmarks over the tumbling layer, all deterministic under --seed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtl/games.hpp"
#include "dtl/scenario.hpp"

namespace {

using namespace dtl;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_demo(const std::string& app, const std::string& scenario_path, std::uint64_t seed,
             bool seed_set, const std::string& out_path) {
    std::string text =
        scenario_path.empty() ? default_scenario_text(app) : read_file(scenario_path);
    Scenario scenario = parse_scenario(text);
    if (!scenario.app.empty() && scenario.app != app) {
        std::cerr << "scenario is for app '" << scenario.app << "', requested '" << app
                  << "'\n";
        return 2;
    }
    if (seed_set) scenario.seed = seed;

    ScenarioRun run = run_scenario(scenario, &std::cout);
    if (!run.ok) return 1;

    if (!out_path.empty()) {
        Bytes log = encode_run_log(run_log_of(scenario, run));
        std::ofstream out(out_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(log.data()), log.size());
        std::cout << "log " << out_path << " bytes " << log.size() << "\n";
    }
    return 0;
}

int cmd_games(std::uint64_t seed, std::uint64_t trials, unsigned depth, unsigned window_k) {
    SecParams sec;
    sec.tree_depth = depth;
    sec.root_window_k = window_k;
    sec.validate();

    bool all_pass = true;
    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        const char* mode_name = mode == Mode::fixed ? "fixed" : "arbitrary";
        Digest setup_seed = Hasher(Domain::transcript).str("games").u64(seed).finish();
        DtlParams params = dtl_setup(mode, sec, setup_seed);

        for (auto& adv : shipped_one_more_adversaries()) {
            for (bool with_oracles : {false, true}) {
                GameOutcome out = run_one_more_redeem(params, *adv, seed, with_oracles);
                bool pass = !out.win;
                all_pass = all_pass && pass;
                std::cout << "game " << out.game << " mode " << mode_name << " adversary "
                          << out.adversary << " result " << (pass ? "pass" : "FAIL")
                          << " transcript " << to_hex(out.transcript).substr(0, 16) << "\n";
            }
        }
        for (auto& adv : shipped_theft_adversaries()) {
            GameOutcome out = run_theft(params, *adv, seed);
            bool pass = !out.win;
            all_pass = all_pass && pass;
            std::cout << "game " << out.game << " mode " << mode_name << " adversary "
                      << out.adversary << " result " << (pass ? "pass" : "FAIL")
                      << " transcript " << to_hex(out.transcript).substr(0, 16) << "\n";
        }
        for (auto& adv : shipped_nslander_adversaries()) {
            GameOutcome out = run_nslander(params, *adv, seed);
            bool pass = !out.win;
            all_pass = all_pass && pass;
            std::cout << "game " << out.game << " mode " << mode_name << " adversary "
                      << out.adversary << " result " << (pass ? "pass" : "FAIL")
                      << " transcript " << to_hex(out.transcript).substr(0, 16) << "\n";
        }
        // 3-sigma binomial bound at the requested trial count.
        double bound = 3.0 * std::sqrt(0.25 / static_cast<double>(trials));
        for (auto& adv : shipped_unlink_adversaries(mode)) {
            UnlinkOutcome out = run_unlink(params, *adv, seed, trials);
            bool pass = out.advantage <= bound;
            all_pass = all_pass && pass;
            std::cout << "game unlink mode " << mode_name << " adversary "
                      << out.outcome.adversary << " trials " << out.outcome.trials
                      << " advantage " << out.advantage << " bound " << bound << " result "
                      << (pass ? "pass" : "FAIL") << " transcript "
                      << to_hex(out.outcome.transcript).substr(0, 16) << "\n";
        }
    }
    std::cout << (all_pass ? "all games pass" : "UNEXPECTED ADVERSARY WIN") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_bench(std::uint64_t seed, const std::vector<unsigned>& depths,
              const std::vector<std::size_t>& sizes) {
    using clock = std::chrono::steady_clock;
    const int kRedeemIters = 5;
    const int kVerifyIters = 100;
    std::cout << "mode depth n redeem_us verify_us proof_bytes\n";
    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        for (unsigned depth : depths) {
            SecParams sec;
            sec.tree_depth = depth;
            Digest setup_seed = Hasher(Domain::transcript).str("bench").u64(seed).finish();
            DtlParams params = dtl_setup(mode, sec, setup_seed);
            Rng rng(seed);
            double min_verify = 1e18, max_verify = 0;
            for (std::size_t n : sizes) {
                if (depth < 64 && n > (1ull << depth)) continue;
                std::vector<CoinPublicKey> cpks;
                std::vector<CoinSecret> secrets;
                for (std::size_t i = 0; i < n; ++i) {
                    auto data = mode == Mode::arbitrary
                                    ? std::optional<std::uint64_t>(rng.below(1000))
                                    : std::nullopt;
                    auto [cpk, csk] = dtl_create(params, rng, data);
                    cpks.push_back(cpk);
                    secrets.push_back(csk);
                }
                Bytes m = random_message(params, rng);

                auto t0 = clock::now();
                std::optional<RedeemResult> red;
                for (int it = 0; it < kRedeemIters; ++it)
                    red = dtl_redeem(params, cpks, secrets[n / 2], m, rng);
                auto t1 = clock::now();

                AccumulatorState st = dtl_accumulate(params, cpks);
                bool ok = true;
                auto t2 = clock::now();
                for (int it = 0; it < kVerifyIters; ++it)
                    ok = ok && dtl_verify(params, st, red->tag, red->proof, m,
                                          red->ciphertext);
                auto t3 = clock::now();
                if (!ok) {
                    std::cerr << "bench verification failed\n";
                    return 1;
                }
                double redeem_us =
                    std::chrono::duration<double, std::micro>(t1 - t0).count() /
                    kRedeemIters;
                double verify_us =
                    std::chrono::duration<double, std::micro>(t3 - t2).count() /
                    kVerifyIters;
                min_verify = std::min(min_verify, verify_us);
                max_verify = std::max(max_verify, verify_us);
                std::cout << (mode == Mode::fixed ? "fixed" : "arbitrary") << " " << depth
                          << " " << n << " " << redeem_us << " " << verify_us << " "
                          << red->proof.bytes.size() << "\n";
            }
            // verification work does not depend on the anonymity set size
            std::cout << "# verify-vs-n at " << (mode == Mode::fixed ? "fixed" : "arbitrary")
                      << "/" << depth << ": min " << min_verify << " us, max " << max_verify
                      << " us\n";
        }
    }
    return 0;
}

int cmd_replay(const std::string& log_path) {
    std::string raw = read_file(log_path);
    RunLog log = decode_run_log(
        ByteView(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
    ReplayVerdict verdict = replay_run_log(log);
    std::cout << "expected " << to_hex(verdict.expected) << "\n";
    std::cout << "recomputed " << to_hex(verdict.recomputed) << "\n";
    std::cout << "verdict " << (verdict.match ? "match" : "mismatch") << "\n";
    if (!verdict.match && !verdict.detail.empty())
        std::cout << "detail " << verdict.detail << "\n";
    return verdict.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"data tumbling layer demos, security games, and benchmarks"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    bool seed_set = false;
    app.add_option("--seed", seed, "deterministic seed")->each([&](const std::string&) {
        seed_set = true;
    });

    auto* demo = app.add_subcommand("demo", "run an application scenario");
    std::string demo_app;
    std::string scenario_path;
    std::string out_path;
    demo->add_option("app", demo_app, "fixed-pay | confidential-pay | vote")->required();
    demo->add_option("--scenario", scenario_path, "scenario file path");
    demo->add_option("--out", out_path, "write a binary replay log");

    auto* games = app.add_subcommand("games", "run every security experiment");
    std::uint64_t trials = 1000;
    unsigned depth = 20;
    unsigned window_k = 30;
    games->add_option("--trials", trials, "unlinkability trials")->check(CLI::Range(1, 1 << 20));
    games->add_option("--depth", depth, "accumulator depth");
    games->add_option("--window-k", window_k, "recent-root window size");

    auto* bench = app.add_subcommand("bench", "redeem/verify micro-benchmarks");
    std::vector<unsigned> depths{4, 10, 20};
    std::vector<std::size_t> sizes{1, 16, 256, 1024};
    bench->add_option("--depth", depths, "depths to measure");
    bench->add_option("--n", sizes, "anonymity-set sizes to measure");

    auto* replay = app.add_subcommand("replay", "re-apply a replay log and compare digests");
    std::string log_path;
    replay->add_option("log", log_path, "replay log path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (demo->parsed()) return cmd_demo(demo_app, scenario_path, seed, seed_set, out_path);
        if (games->parsed()) return cmd_games(seed, trials, depth, window_k);
        if (bench->parsed()) return cmd_bench(seed, depths, sizes);
        if (replay->parsed()) return cmd_replay(log_path);
    } catch (const dtl::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
