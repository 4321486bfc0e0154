// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "dtl/client.hpp"
#include "dtl/games.hpp"
#include "dtl/scenario.hpp"

using namespace dtl;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << number << " " << name << " "
              << (pass ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
    if (!pass) ++failures;
}

Address addr(const std::string& name) { return address_from_label(name); }

// --- criterion 1: correctness, probability 1, runtime < 60 s -----------------

struct PipelineResult {
    std::uint64_t redeems = 0;
    std::uint64_t verified = 0;
};

PipelineResult run_pipeline(const DtlParams& params, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    PipelineResult res;
    std::vector<CoinPublicKey> cpks;
    std::vector<CoinSecret> secrets;
    cpks.reserve(n);
    secrets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto data = params.mode == Mode::arbitrary
                        ? std::optional<std::uint64_t>(rng.below(1u << 16))
                        : std::nullopt;
        auto [cpk, csk] = dtl_create(params, rng, data);
        cpks.push_back(cpk);
        secrets.push_back(csk);
    }
    AccumulatorState st = dtl_accumulate(params, cpks);
    HomKeypair recipient = hom_kgen(rng);
    Bytes m;
    if (params.mode == Mode::arbitrary) {
        m.assign(recipient.ek.begin(), recipient.ek.end());
    } else {
        m = rng.bytes(20);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto result = dtl_redeem(params, cpks, secrets[i], m, rng);
        ++res.redeems;
        if (result &&
            dtl_verify(params, st, result->tag, result->proof, m, result->ciphertext))
            ++res.verified;
    }
    return res;
}

void criterion_1() {
    auto start = clock_type::now();
    const std::size_t kSizes[] = {1, 2, 17, 256, 1024};
    SecParams sec;  // defaults: depth 20
    std::uint64_t total = 0, verified = 0;

    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = dtl_setup(mode, sec, Bytes(16, 0xA1));
        Rng pick(mode == Mode::fixed ? 1001 : 2002);
        std::vector<std::future<PipelineResult>> futures;
        for (int p = 0; p < 100; ++p) {
            std::size_t n = kSizes[pick.below(5)];
            std::uint64_t seed = pick.next_u64();
            futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                         [&params, seed, n] {
                                             return run_pipeline(params, seed, n);
                                         }));
        }
        for (auto& f : futures) {
            PipelineResult r = f.get();
            total += r.redeems;
            verified += r.verified;
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << verified << "/" << total << " redeems verified across 200 pipelines, "
           << elapsed << "s";
    report(1, "correctness", verified == total && total > 0 && elapsed < 60.0,
           detail.str());
}

// --- criterion 2: incremental merkle oracle, runtime < 30 s ------------------

void criterion_2() {
    auto start = clock_type::now();
    Rng rng(3003);
    const unsigned depths[] = {4, 10, 20};
    int sequences = 0, matched = 0;
    for (int round = 0; round < 200; ++round) {
        unsigned depth = depths[round % 3];
        std::uint64_t cap = std::min<std::uint64_t>(512, 1ull << depth);
        std::size_t len = 1 + rng.below(cap);
        IncrementalTree tree(depth);
        std::vector<CoinPublicKey> leaves;
        bool all_match = true;
        for (std::size_t i = 0; i < len; ++i) {
            CoinPublicKey leaf;
            rng.fill(leaf.bytes);
            leaves.push_back(leaf);
            tree.insert(leaf);
            all_match = all_match && tree.state() == mt_build(leaves, depth);
        }
        ++sequences;
        matched += all_match ? 1 : 0;
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << matched << "/" << sequences << " sequences bit-exact, " << elapsed << "s";
    report(2, "incremental-merkle-oracle", matched == sequences && elapsed < 30.0,
           detail.str());
}

// --- criterion 3: double-redeem and window semantics --------------------------

void criterion_3() {
    auto start = clock_type::now();
    Rng rng(4004);
    bool pass = true;
    std::ostringstream detail;

    // 100/100 immediate replays rejected with DoubleRedeem
    {
        std::vector<std::pair<Address, std::uint64_t>> accounts{{addr("alice"), 100000}};
        LedgerState state = genesis(accounts);
        SecParams sec;  // k = 30
        std::uint32_t tumbler = deploy_fixed_tumbler(state, sec, Bytes(16, 0xB2), 10);
        int double_redeems = 0;
        for (int i = 0; i < 100; ++i) {
            const TumblerContract& tum = tumbler_at(state, tumbler);
            ClientCoin coin = create_fixed_coin(tum, rng);
            auto [s1, r1] =
                apply_tx(state, make_fixed_deposit(addr("alice"), tumbler, tum, coin));
            state = std::move(s1);
            if (!r1.ok) { pass = false; break; }
            Transaction wdr = make_fixed_withdraw(addr("alice"), tumbler,
                                                  tumbler_at(state, tumbler), coin.csk,
                                                  addr("bob"), rng);
            auto [s2, r2] = apply_tx(state, wdr);
            state = std::move(s2);
            if (!r2.ok) { pass = false; break; }
            auto [s3, r3] = apply_tx(state, wdr);  // replay
            state = std::move(s3);
            if (!r3.ok && r3.code == Errc::double_redeem) ++double_redeems;
        }
        detail << double_redeems << "/100 replays DoubleRedeem";
        pass = pass && double_redeems == 100;
    }

    // window: proof against root i accepted iff at most k-1 deposits followed
    {
        const unsigned k = 30;
        int correct = 0;
        const int js = static_cast<int>(k) + 6;  // j in [0, k+5]
        for (int j = 0; j < js; ++j) {
            std::vector<std::pair<Address, std::uint64_t>> accounts{{addr("alice"), 100000}};
            LedgerState state = genesis(accounts);
            SecParams sec;
            sec.root_window_k = k;
            std::uint32_t tumbler = deploy_fixed_tumbler(state, sec, Bytes(16, 0xB3), 10);

            const TumblerContract& tum = tumbler_at(state, tumbler);
            ClientCoin coin = create_fixed_coin(tum, rng);
            state = apply_tx(state, make_fixed_deposit(addr("alice"), tumbler, tum, coin))
                        .first;
            Transaction wdr = make_fixed_withdraw(addr("alice"), tumbler,
                                                  tumbler_at(state, tumbler), coin.csk,
                                                  addr("bob"), rng);
            for (int d = 0; d < j; ++d) {
                const TumblerContract& cur = tumbler_at(state, tumbler);
                ClientCoin other = create_fixed_coin(cur, rng);
                state =
                    apply_tx(state, make_fixed_deposit(addr("alice"), tumbler, cur, other))
                        .first;
            }
            auto [next, result] = apply_tx(state, wdr);
            bool expected_ok = j <= static_cast<int>(k) - 1;
            bool as_expected = expected_ok
                                   ? result.ok
                                   : (!result.ok && result.code == Errc::stale_root);
            correct += as_expected ? 1 : 0;
        }
        detail << ", window " << correct << "/" << js << " exhaustive";
        pass = pass && correct == js;
    }
    detail << ", " << seconds_since(start) << "s";
    report(3, "double-redeem-and-window", pass, detail.str());
}

// --- criterion 4: statement binding over single-byte mutations ---------------

void criterion_4() {
    auto start = clock_type::now();
    SecParams sec;
    sec.tree_depth = 10;
    Rng rng(5005);
    std::uint64_t mutations = 0, rejected = 0;

    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = dtl_setup(mode, sec, Bytes(16, 0xC4));
        for (int instance = 0; instance < 3; ++instance) {
            std::vector<CoinPublicKey> cpks;
            std::vector<CoinSecret> secrets;
            for (int i = 0; i < 5; ++i) {
                auto data = mode == Mode::arbitrary
                                ? std::optional<std::uint64_t>(rng.below(1u << 16))
                                : std::nullopt;
                auto [cpk, csk] = dtl_create(params, rng, data);
                cpks.push_back(cpk);
                secrets.push_back(csk);
            }
            HomKeypair recipient = hom_kgen(rng);
            Bytes m;
            if (mode == Mode::arbitrary) {
                m.assign(recipient.ek.begin(), recipient.ek.end());
                Bytes aux = rng.bytes(8);
                m.insert(m.end(), aux.begin(), aux.end());
            } else {
                m = rng.bytes(20);
            }
            AccumulatorState st = dtl_accumulate(params, cpks);
            auto red = dtl_redeem(params, cpks, secrets[2], m, rng);
            if (!red ||
                !dtl_verify(params, st, red->tag, red->proof, m, red->ciphertext)) {
                report(4, "statement-binding", false, "honest baseline failed");
                return;
            }

            auto attempt = [&](const AccumulatorState& st2, const Tag& tag2, ByteView m2,
                               const std::optional<HomCiphertext>& c2) {
                ++mutations;
                if (!dtl_verify(params, st2, tag2, red->proof, m2, c2)) ++rejected;
            };
            for (std::uint8_t flip : {0x01, 0x80}) {
                for (std::size_t i = 0; i < st.root.size(); ++i) {
                    AccumulatorState mut = st;
                    mut.root[i] ^= flip;
                    attempt(mut, red->tag, m, red->ciphertext);
                }
                for (int b = 0; b < 8; ++b) {
                    AccumulatorState mut = st;
                    mut.leaf_count ^= (static_cast<std::uint64_t>(flip) << (8 * b));
                    attempt(mut, red->tag, m, red->ciphertext);
                }
                for (std::size_t i = 0; i < red->tag.bytes.size(); ++i) {
                    Tag mut = red->tag;
                    mut.bytes[i] ^= flip;
                    attempt(st, mut, m, red->ciphertext);
                }
                for (std::size_t i = 0; i < m.size(); ++i) {
                    Bytes mut = m;
                    mut[i] ^= flip;
                    attempt(st, red->tag, mut, red->ciphertext);
                }
                if (red->ciphertext) {
                    for (std::size_t i = 0; i < 32; ++i) {
                        HomCiphertext mut = *red->ciphertext;
                        mut.c1[i] ^= flip;
                        attempt(st, red->tag, m, mut);
                        mut = *red->ciphertext;
                        mut.c2[i] ^= flip;
                        attempt(st, red->tag, m, mut);
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << rejected << "/" << mutations << " mutations rejected, "
           << seconds_since(start) << "s";
    report(4, "statement-binding", mutations >= 1000 && rejected == mutations,
           detail.str());
}

// --- criterion 5: security games ----------------------------------------------

void criterion_5() {
    auto start = clock_type::now();
    SecParams sec;  // depth 20 defaults
    bool pass = true;
    std::uint64_t game_runs = 0;

    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = dtl_setup(mode, sec, Bytes(16, 0xD5));
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            for (auto& adv : shipped_one_more_adversaries()) {
                pass = pass && !run_one_more_redeem(params, *adv, seed, false).win;
                pass = pass && !run_one_more_redeem(params, *adv, seed, true).win;
                game_runs += 2;
            }
            for (auto& adv : shipped_theft_adversaries()) {
                pass = pass && !run_theft(params, *adv, seed).win;
                ++game_runs;
            }
            for (auto& adv : shipped_nslander_adversaries()) {
                pass = pass && !run_nslander(params, *adv, seed).win;
                ++game_runs;
            }
        }
    }

    const std::uint64_t trials = 1000;
    const double bound = 0.05;  // 3 sigma over Binomial(1000, 1/2)
    double worst = 0.0;
    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = dtl_setup(mode, sec, Bytes(16, 0xD6));
        for (auto& adv : shipped_unlink_adversaries(mode)) {
            UnlinkOutcome out = run_unlink(params, *adv, 31337, trials);
            worst = std::max(worst, out.advantage);
            pass = pass && out.advantage <= bound;
        }
    }
    std::ostringstream detail;
    detail << game_runs << " deterministic game runs, worst unlink advantage " << worst
           << " (bound " << bound << "), " << seconds_since(start) << "s";
    report(5, "security-games", pass, detail.str());
}

// --- criterion 6: homomorphic conservation -------------------------------------

void criterion_6() {
    auto start = clock_type::now();
    SecParams sec;
    sec.plaintext_range_bits = 32;
    bool pass = true;
    std::ostringstream detail;
    Rng rng(6006);

    // confidential-pay: 50 random deposits/withdraws conserve decrypted value
    {
        std::vector<std::pair<Address, std::uint64_t>> accounts{{addr("alice"), 1u << 20}};
        LedgerState state = genesis(accounts);
        std::uint32_t conf = deploy_conf(state);
        std::uint32_t tumbler = deploy_arb_tumbler(state, sec, Bytes(16, 0xE6), conf);

        std::vector<std::string> holders{"p0", "p1", "p2", "p3"};
        std::map<std::string, std::uint64_t> expect;
        std::uint64_t committed = 0;  // value inside unredeemed coins
        std::vector<std::pair<ClientCoin, std::string>> pending;  // coin -> recipient

        // seed one encrypted account so confidential deposits are possible
        {
            HomKeypair kp = scenario_keypair(11, holders[0]);
            Transaction tx;
            tx.sender = addr("alice");
            tx.target = conf;
            tx.value = 5000;
            tx.payload = ConfFundCall{kp.ek, 5000};
            auto [next, result] = apply_tx(state, tx);
            state = std::move(next);
            pass = pass && result.ok;
            expect[holders[0]] = 5000;
        }

        int ops = 0;
        while (ops < 50) {
            int choice = static_cast<int>(rng.below(3));
            if (choice == 0) {  // transparent deposit
                std::uint64_t amt = 1 + rng.below(1000);
                const TumblerContract& tum = tumbler_at(state, tumbler);
                ClientCoin coin = create_arb_coin(tum, amt, rng);
                auto [next, result] = apply_tx(
                    state, make_transparent_deposit(addr("alice"), tumbler, tum, coin, amt));
                state = std::move(next);
                pass = pass && result.ok;
                committed += amt;
                pending.emplace_back(coin, holders[rng.below(holders.size())]);
            } else if (choice == 1) {  // confidential deposit
                std::string who = holders[rng.below(holders.size())];
                std::uint64_t bal = expect[who];
                if (bal == 0) continue;
                std::uint64_t amt = 1 + rng.below(bal);
                HomKeypair kp = scenario_keypair(11, who);
                auto plan = make_confidential_deposit(addr("alice"), tumbler, state, kp.dk,
                                                      bal, amt, rng);
                auto [next, result] = apply_tx(state, plan.tx);
                state = std::move(next);
                pass = pass && result.ok;
                expect[who] -= amt;
                committed += amt;
                pending.emplace_back(plan.coin, holders[rng.below(holders.size())]);
            } else {  // withdraw a pending coin
                if (pending.empty()) continue;
                std::size_t pick = rng.below(pending.size());
                auto [coin, recipient] = pending[pick];
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
                HomKeypair kp = scenario_keypair(11, recipient);
                auto [next, result] = apply_tx(
                    state, make_uc_withdraw(addr("alice"), tumbler,
                                            tumbler_at(state, tumbler), coin.csk, kp.ek, {},
                                            rng));
                state = std::move(next);
                pass = pass && result.ok;
                committed -= *coin.csk.data;
                expect[recipient] += *coin.csk.data;
            }
            ++ops;
        }

        // decrypt oracle: every account decrypts to the tracked plaintext
        std::uint64_t decrypted_sum = 0, expected_sum = 0;
        const ConfContract& cc = conf_at(state, conf);
        for (const auto& who : holders) {
            HomKeypair kp = scenario_keypair(11, who);
            std::uint64_t dec = cc.state.has(kp.ek)
                                    ? hom_dec(kp.dk, cc.state.read(kp.ek), sec)
                                    : 0;
            pass = pass && dec == expect[who];
            decrypted_sum += dec;
            expected_sum += expect[who];
        }
        // conservation identity: decrypted + still-committed = everything
        // that entered encrypted-land
        pass = pass && decrypted_sum == expected_sum;
        detail << "50 ops, decrypted sum " << decrypted_sum << " with " << committed
               << " still committed";
    }

    // voting: 20 voters, random powers in [1, 100]
    {
        std::vector<std::pair<Address, std::uint64_t>> accounts{{addr("alice"), 1000}};
        LedgerState state = genesis(accounts);
        std::uint32_t vote_id = deploy_vote(state, sec, Bytes(16, 0xE7));
        std::vector<std::string> candidates{"carol", "dave", "erin"};
        auto tx_of = [&](const CallPayload& payload) {
            Transaction tx;
            tx.sender = addr("alice");
            tx.target = vote_id;
            tx.payload = payload;
            return tx;
        };
        for (const auto& c : candidates) {
            auto [next, result] =
                apply_tx(state, tx_of(RegisterCandidateCall{scenario_keypair(12, c).ek}));
            state = std::move(next);
            pass = pass && result.ok;
        }
        state = apply_tx(state, tx_of(AdvanceStageCall{})).first;

        std::vector<std::pair<ClientCoin, std::uint64_t>> voters;
        for (int v = 0; v < 20; ++v) {
            std::uint64_t power = 1 + rng.below(100);
            auto reg = make_vote_registration(addr("alice"), vote_id,
                                              vote_at(state, vote_id), power, rng);
            auto [next, result] = apply_tx(state, reg.tx);
            state = std::move(next);
            pass = pass && result.ok;
            voters.emplace_back(reg.coin, power);
        }
        state = apply_tx(state, tx_of(AdvanceStageCall{})).first;

        std::map<std::string, std::uint64_t> expected_tally;
        std::uint64_t spent = 0;
        for (std::size_t v = 0; v < voters.size(); ++v) {
            // voter 7 abstains: spent power is allowed to undercut registered
            if (v == 7) continue;
            const std::string& target = candidates[rng.below(candidates.size())];
            auto [next, result] = apply_tx(
                state, make_vote(addr("alice"), vote_id, vote_at(state, vote_id),
                                 voters[v].first.csk, scenario_keypair(12, target).ek, rng));
            state = std::move(next);
            pass = pass && result.ok;
            expected_tally[target] += voters[v].second;
            spent += voters[v].second;
        }
        state = apply_tx(state, tx_of(AdvanceStageCall{})).first;

        std::uint64_t revealed_sum = 0;
        for (const auto& c : candidates) {
            HomKeypair kp = scenario_keypair(12, c);
            // perturbed reveals must be rejected
            for (std::int64_t delta : {-1, +1}) {
                Transaction rev =
                    make_reveal(addr("alice"), vote_id, vote_at(state, vote_id), kp.dk);
                auto& call = std::get<RevealCall>(rev.payload);
                if (delta < 0 && call.bal == 0) continue;
                call.bal = static_cast<std::uint64_t>(
                    static_cast<std::int64_t>(call.bal) + delta);
                auto [next, result] = apply_tx(state, rev);
                state = std::move(next);
                pass = pass && !result.ok && result.code == Errc::invalid_proof;
            }
            auto [next, result] = apply_tx(
                state, make_reveal(addr("alice"), vote_id, vote_at(state, vote_id), kp.dk));
            state = std::move(next);
            pass = pass && result.ok;
            std::uint64_t tally = vote_at(state, vote_id).revealed.at(kp.ek);
            pass = pass && tally == expected_tally[c];
            revealed_sum += tally;
        }
        pass = pass && revealed_sum == spent;
        detail << "; vote tallies sum " << revealed_sum << " == spent " << spent;
    }
    detail << ", " << seconds_since(start) << "s";
    report(6, "homomorphic-conservation", pass, detail.str());
}

// --- criterion 7: Eq. 3 boundary -------------------------------------------------

void criterion_7() {
    auto start = clock_type::now();
    SecParams sec;
    Rng rng(7007);
    std::vector<std::pair<Address, std::uint64_t>> accounts{{addr("alice"), 1u << 22}};
    LedgerState state = genesis(accounts);
    std::uint32_t conf = deploy_conf(state);
    std::uint32_t tumbler = deploy_arb_tumbler(state, sec, Bytes(16, 0xF7), conf);

    int accepted_at_bound = 0, refused_above_bound = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::string who = "holder" + std::to_string(trial);
        std::uint64_t bal = 1 + rng.below(10000);
        HomKeypair kp = scenario_keypair(13, who);
        Transaction fund;
        fund.sender = addr("alice");
        fund.target = conf;
        fund.value = bal;
        fund.payload = ConfFundCall{kp.ek, bal};
        auto [s1, r1] = apply_tx(state, fund);
        state = std::move(s1);
        if (!r1.ok) continue;

        try {
            (void)make_confidential_deposit(addr("alice"), tumbler, state, kp.dk, bal,
                                            bal + 1, rng);
        } catch (const Error& err) {
            if (err.code() == Errc::unsatisfied_relation) ++refused_above_bound;
        }

        auto plan =
            make_confidential_deposit(addr("alice"), tumbler, state, kp.dk, bal, bal, rng);
        auto [s2, r2] = apply_tx(state, plan.tx);
        state = std::move(s2);
        if (r2.ok) ++accepted_at_bound;
    }
    std::ostringstream detail;
    detail << accepted_at_bound << "/50 amt=bal accepted, " << refused_above_bound
           << "/50 amt=bal+1 refused at prove time, " << seconds_since(start) << "s";
    report(7, "spend-bound-boundary", accepted_at_bound == 50 && refused_above_bound == 50,
           detail.str());
}

// --- criterion 8: desk-scale performance sanity ----------------------------------

void criterion_8() {
    auto start = clock_type::now();
    SecParams sec;  // depth 20
    Rng rng(8008);
    bool pass = true;
    double worst_ms = 0.0;
    std::set<std::size_t> proof_sizes;

    for (Mode mode : {Mode::fixed, Mode::arbitrary}) {
        DtlParams params = dtl_setup(mode, sec, Bytes(16, 0x88));
        for (std::size_t n : {1u, 16u, 256u, 1024u}) {
            std::vector<CoinPublicKey> cpks;
            std::vector<CoinSecret> secrets;
            for (std::size_t i = 0; i < n; ++i) {
                auto data = mode == Mode::arbitrary
                                ? std::optional<std::uint64_t>(rng.below(1u << 16))
                                : std::nullopt;
                auto [cpk, csk] = dtl_create(params, rng, data);
                cpks.push_back(cpk);
                secrets.push_back(csk);
            }
            HomKeypair recipient = hom_kgen(rng);
            Bytes m;
            if (mode == Mode::arbitrary) {
                m.assign(recipient.ek.begin(), recipient.ek.end());
            } else {
                m = rng.bytes(20);
            }

            auto t0 = clock_type::now();
            auto red = dtl_redeem(params, cpks, secrets[n / 2], m, rng);
            AccumulatorState st = dtl_accumulate(params, cpks);
            bool ok = dtl_verify(params, st, red->tag, red->proof, m, red->ciphertext);
            double ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0)
                            .count();
            worst_ms = std::max(worst_ms, ms);
            pass = pass && ok && ms < 100.0;
            proof_sizes.insert(red->proof.bytes.size());
        }
    }
    std::ostringstream detail;
    detail << "worst redeem+verify " << worst_ms << " ms (< 100), proof size"
           << (proof_sizes.size() == 1 ? " constant" : " VARIES") << " at "
           << *proof_sizes.begin() << " bytes, " << seconds_since(start) << "s";
    report(8, "performance-sanity", pass && proof_sizes.size() == 1, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: FAILURES present")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
