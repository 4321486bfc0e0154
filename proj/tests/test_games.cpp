#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dtl/games.hpp"

using namespace dtl;

namespace {

DtlParams game_params(Mode mode) {
    SecParams sec;
    sec.tree_depth = 8;
    sec.plaintext_range_bits = 16;
    return dtl_setup(mode, sec, Bytes(16, 0x42));
}

}  // namespace

TEST_CASE("oracles follow the experiment definitions") {
    DtlParams params = game_params(Mode::fixed);
    Rng rng(110);
    Oracles oracles(params, rng);

    CoinPublicKey cpk = oracles.create();
    CHECK(oracles.log().created_contains(cpk));

    // redeem of a coin not created by the oracle: bottom, nothing logged
    Rng other_rng(111);
    auto [foreign, foreign_csk] = dtl_create(params, other_rng);
    std::vector<CoinPublicKey> with_foreign{cpk, foreign};
    CHECK_FALSE(oracles.redeem(with_foreign, 1, Bytes{1, 2}).has_value());
    CHECK(oracles.log().redeemed.empty());

    // create then redeem: verifies and R records the tuple
    std::vector<CoinPublicKey> cpks{cpk};
    Bytes m = random_message(params, rng);
    auto red = oracles.redeem(cpks, 0, m);
    REQUIRE(red.has_value());
    AccumulatorState st = dtl_accumulate(params, cpks);
    CHECK(dtl_verify(params, st, red->tag, red->proof, m, red->ciphertext));
    REQUIRE(oracles.log().redeemed.size() == 1);
    CHECK(oracles.log().redeemed_matches(st, red->tag, m));
    CHECK(oracles.log().redeemed_coin(cpk));
}

TEST_CASE("all shipped adversaries lose the deterministic games") {
    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = game_params(mode);
        for (std::uint64_t seed : {1ull, 77ull, 123456789ull}) {
            for (auto& adv : shipped_one_more_adversaries()) {
                CHECK_FALSE(run_one_more_redeem(params, *adv, seed, false).win);
                CHECK_FALSE(run_one_more_redeem(params, *adv, seed, true).win);
            }
            for (auto& adv : shipped_theft_adversaries())
                CHECK_FALSE(run_theft(params, *adv, seed).win);
            for (auto& adv : shipped_nslander_adversaries())
                CHECK_FALSE(run_nslander(params, *adv, seed).win);
        }
    }
}

TEST_CASE("unlink advantage stays under the binomial bound") {
    const std::uint64_t trials = 300;
    const double bound = 3.0 * std::sqrt(0.25 / static_cast<double>(trials));
    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = game_params(mode);
        for (auto& adv : shipped_unlink_adversaries(mode)) {
            UnlinkOutcome out = run_unlink(params, *adv, 2024, trials);
            INFO("adversary ", out.outcome.adversary, " advantage ", out.advantage);
            CHECK(out.advantage <= bound);
        }
    }
}

TEST_CASE("game outcomes replay bit-identically under a seed") {
    DtlParams params = game_params(Mode::arbitrary);
    auto theft = shipped_theft_adversaries();
    GameOutcome a = run_theft(params, *theft[0], 99);
    GameOutcome b = run_theft(params, *theft[0], 99);
    CHECK(a.transcript == b.transcript);
    GameOutcome c = run_theft(params, *theft[0], 100);
    CHECK(a.transcript != c.transcript);

    auto unlink = shipped_unlink_adversaries(Mode::arbitrary);
    UnlinkOutcome u1 = run_unlink(params, *unlink[0], 7, 50);
    UnlinkOutcome u2 = run_unlink(params, *unlink[0], 7, 50);
    CHECK(u1.outcome.transcript == u2.outcome.transcript);
    CHECK(u1.outcome.wins == u2.outcome.wins);
}

TEST_CASE("a window into why the games hold: proof replay across messages fails") {
    DtlParams params = game_params(Mode::fixed);
    Rng rng(112);
    Oracles oracles(params, rng);
    CoinPublicKey cpk = oracles.create();
    std::vector<CoinPublicKey> cpks{cpk};
    Bytes m = random_message(params, rng);
    auto red = oracles.redeem(cpks, 0, m);
    AccumulatorState st = dtl_accumulate(params, cpks);

    Bytes other = random_message(params, rng);
    CHECK_FALSE(dtl_verify(params, st, red->tag, red->proof, other, red->ciphertext));
}

TEST_CASE("blanked adversary keys cannot produce verifying proofs") {
    DtlParams params = game_params(Mode::fixed);
    DtlParams blanked = params;
    blanked.keys = NizkKeys{};
    Rng rng(113);
    auto [cpk, csk] = dtl_create(params, rng);
    std::vector<CoinPublicKey> cpks{cpk};
    Bytes m = random_message(params, rng);

    auto forged = dtl_redeem(blanked, cpks, csk, m, rng);
    REQUIRE(forged.has_value());
    AccumulatorState st = dtl_accumulate(params, cpks);
    CHECK_FALSE(dtl_verify(params, st, forged->tag, forged->proof, m, forged->ciphertext));
}
