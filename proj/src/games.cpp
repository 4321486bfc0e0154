#include "dtl/games.hpp"

#include <algorithm>

#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

bool OracleLog::created_contains(const CoinPublicKey& cpk) const {
    for (const auto& [pk, sk] : created)
        if (pk == cpk) return true;
    return false;
}

const CoinSecret* OracleLog::secret_of(const CoinPublicKey& cpk) const {
    for (const auto& [pk, sk] : created)
        if (pk == cpk) return &sk;
    return nullptr;
}

bool OracleLog::redeemed_matches(const AccumulatorState& st, const Tag& tag,
                                 ByteView m) const {
    for (const auto& rec : redeemed) {
        if (rec.st == st && rec.tag == tag && rec.m.size() == m.size() &&
            std::equal(rec.m.begin(), rec.m.end(), m.begin()))
            return true;
    }
    return false;
}

bool OracleLog::redeemed_coin(const CoinPublicKey& cpk) const {
    for (const auto& rec : redeemed)
        if (rec.cpk == cpk) return true;
    return false;
}

CoinPublicKey Oracles::create(std::optional<std::uint64_t> data) {
    auto [cpk, csk] = dtl_create(params_, rng_, data);
    log_.created.emplace_back(cpk, csk);
    return cpk;
}

std::optional<RedeemResult> Oracles::redeem(std::span<const CoinPublicKey> cpks,
                                            std::size_t i, ByteView m) {
    if (i >= cpks.size()) return std::nullopt;
    for (const auto& w : watched_)
        if (w == cpks[i]) watched_query_ = true;
    const CoinSecret* csk = log_.secret_of(cpks[i]);
    if (!csk) return std::nullopt;  // only oracle-created coins are redeemable
    AccumulatorState st = dtl_accumulate(params_, cpks);
    auto result = dtl_redeem(params_, cpks, *csk, m, rng_);
    if (!result) return std::nullopt;
    log_.redeemed.push_back(
        OracleLog::RedeemRecord{st, cpks[i], result->tag, result->proof, to_bytes(m),
                                result->ciphertext});
    return result;
}

void Oracles::watch(const CoinPublicKey& a, const CoinPublicKey& b) {
    watched_.push_back(a);
    watched_.push_back(b);
}

Bytes random_message(const DtlParams& params, Rng& rng) {
    if (params.mode == Mode::fixed) return rng.bytes(24);
    HomKeypair kp = hom_kgen(rng);
    Bytes m(kp.ek.begin(), kp.ek.end());
    Bytes aux = rng.bytes(8);
    m.insert(m.end(), aux.begin(), aux.end());
    return m;
}

namespace {

AdversaryView make_view(const DtlParams& params) {
    AdversaryView view;
    view.pp = params;
    view.pp.keys = NizkKeys{};  // adversaries never hold prvK
    view.redeem = [&params](std::span<const CoinPublicKey> cpks, const CoinSecret& csk,
                            ByteView m, Rng& rng) { return dtl_redeem(params, cpks, csk, m, rng); };
    view.verify = [&params](const AccumulatorState& st, const Tag& tag, const Proof& proof,
                            ByteView m, const std::optional<HomCiphertext>& c) {
        return dtl_verify(params, st, tag, proof, m, c);
    };
    return view;
}

void absorb_tuple(Hasher& h, const RedeemTuple& t) {
    h.raw(t.tag.bytes).raw(t.proof.bytes).blob(t.m);
    if (t.c) h.raw(t.c->c1).raw(t.c->c2);
}

std::uint64_t sample_data(const DtlParams& params, Rng& rng) {
    std::uint64_t bound = std::min<std::uint64_t>(params.sec.plaintext_bound(), 1u << 16);
    return rng.below(bound);
}

std::optional<std::uint64_t> oracle_data(const DtlParams& params, Rng& rng) {
    if (params.mode == Mode::fixed) return std::nullopt;
    return sample_data(params, rng);
}

}  // namespace

GameOutcome run_one_more_redeem(const DtlParams& params, OneMoreRedeemAdversary& adversary,
                                std::uint64_t seed, bool with_oracles) {
    GameOutcome outcome;
    outcome.game = with_oracles ? "one-more-redeem+oracles" : "one-more-redeem";
    outcome.adversary = adversary.name();
    Hasher transcript(Domain::transcript);
    transcript.u64(seed).u8(static_cast<std::uint8_t>(params.mode));

    Rng challenger_rng(seed);
    Rng adv_rng = challenger_rng.fork();
    Oracles oracles(params, challenger_rng);
    AdversaryView view = make_view(params);

    try {
        OneMoreRedeemOutput out =
            adversary.run(view, with_oracles ? &oracles : nullptr, adv_rng);
        const std::size_t n = out.cpks.size();
        transcript.u64(n).u64(out.tuples.size());
        for (const auto& t : out.tuples) absorb_tuple(transcript, t);

        bool win = out.tuples.size() == n + 1;
        if (win) {
            AccumulatorState st = dtl_accumulate(params, out.cpks);
            for (const auto& t : out.tuples)
                win = win && dtl_verify(params, st, t.tag, t.proof, t.m, t.c);
            for (std::size_t i = 0; win && i < out.tuples.size(); ++i)
                for (std::size_t j = i + 1; win && j < out.tuples.size(); ++j)
                    win = out.tuples[i].tag != out.tuples[j].tag;
        }
        outcome.win = win;
        outcome.wins = win ? 1 : 0;
    } catch (const std::exception&) {
        outcome.win = false;  // adversary (or its data) misbehaved
    }
    transcript.u8(outcome.win ? 1 : 0);
    outcome.transcript = transcript.finish();
    return outcome;
}

GameOutcome run_theft(const DtlParams& params, TheftAdversary& adversary,
                      std::uint64_t seed) {
    GameOutcome outcome;
    outcome.game = "theft";
    outcome.adversary = adversary.name();
    Hasher transcript(Domain::transcript);
    transcript.u64(seed).u8(static_cast<std::uint8_t>(params.mode));

    Rng challenger_rng(seed);
    Rng adv_rng = challenger_rng.fork();
    Oracles oracles(params, challenger_rng);
    AdversaryView view = make_view(params);

    try {
        TheftOutput out = adversary.run(view, oracles, adv_rng);
        transcript.u64(out.cpks.size());
        absorb_tuple(transcript, out.tuple);

        AccumulatorState st = dtl_accumulate(params, out.cpks);
        bool b0 = dtl_verify(params, st, out.tuple.tag, out.tuple.proof, out.tuple.m,
                             out.tuple.c);
        bool b1 = true;
        for (const auto& cpk : out.cpks) b1 = b1 && oracles.log().created_contains(cpk);
        bool b2 = !oracles.log().redeemed_matches(st, out.tuple.tag, out.tuple.m);
        outcome.win = b0 && b1 && b2;
        outcome.wins = outcome.win ? 1 : 0;
    } catch (const std::exception&) {
        outcome.win = false;
    }
    transcript.u8(outcome.win ? 1 : 0);
    outcome.transcript = transcript.finish();
    return outcome;
}

GameOutcome run_nslander(const DtlParams& params, NSlanderAdversary& adversary,
                         std::uint64_t seed) {
    GameOutcome outcome;
    outcome.game = "nslander";
    outcome.adversary = adversary.name();
    Hasher transcript(Domain::transcript);
    transcript.u64(seed).u8(static_cast<std::uint8_t>(params.mode));

    Rng challenger_rng(seed);
    Rng adv_rng = challenger_rng.fork();
    Oracles oracles(params, challenger_rng);
    AdversaryView view = make_view(params);

    try {
        NSlanderOutput out = adversary.run(view, oracles, adv_rng);
        absorb_tuple(transcript, out.tuple);

        bool b0 = oracles.log().created_contains(out.cpk);
        std::vector<CoinPublicKey> pair{out.cpk, out.cpk_star};
        AccumulatorState st = dtl_accumulate(params, pair);
        Bytes m = random_message(params, challenger_rng);
        auto honest = oracles.redeem(pair, 0, m);
        bool b1 = honest.has_value() && honest->tag == out.tuple.tag;
        bool b2 = dtl_verify(params, st, out.tuple.tag, out.tuple.proof, out.tuple.m,
                             out.tuple.c);
        bool b3 = honest.has_value() &&
                  !oracles.log().redeemed_matches(st, honest->tag, out.tuple.m);
        outcome.win = b0 && b1 && b2 && b3;
        outcome.wins = outcome.win ? 1 : 0;
    } catch (const std::exception&) {
        outcome.win = false;
    }
    transcript.u8(outcome.win ? 1 : 0);
    outcome.transcript = transcript.finish();
    return outcome;
}

UnlinkOutcome run_unlink(const DtlParams& params, UnlinkAdversary& adversary,
                         std::uint64_t seed, std::uint64_t trials) {
    UnlinkOutcome result;
    result.outcome.game = "unlink";
    result.outcome.adversary = adversary.name();
    result.outcome.trials = trials;
    Hasher transcript(Domain::transcript);
    transcript.u64(seed).u64(trials).u8(static_cast<std::uint8_t>(params.mode));

    Rng challenger_rng(seed);
    Rng adv_rng = challenger_rng.fork();
    AdversaryView view = make_view(params);

    std::uint64_t wins = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Oracles oracles(params, challenger_rng);
        Bytes m = random_message(params, challenger_rng);

        std::optional<std::uint64_t> data0, data1;
        if (params.mode == Mode::arbitrary) {
            auto [d0, d1] = adversary.choose_data(view, m, adv_rng);
            data0 = std::min<std::uint64_t>(d0, params.sec.plaintext_bound() - 1);
            data1 = std::min<std::uint64_t>(d1, params.sec.plaintext_bound() - 1);
        } else {
            // In fixed mode every coin carries the default data; the
            // adversary's choice is moot by construction.
            (void)adversary.choose_data(view, m, adv_rng);
        }

        auto [cpk0, csk0] = dtl_create(params, challenger_rng, data0);
        auto [cpk1, csk1] = dtl_create(params, challenger_rng, data1);
        std::vector<CoinPublicKey> pair{cpk0, cpk1};
        auto red0 = dtl_redeem(params, pair, csk0, m, challenger_rng);
        auto red1 = dtl_redeem(params, pair, csk1, m, challenger_rng);

        const bool b = challenger_rng.coin();
        UnlinkChallenge challenge;
        challenge.cpk0 = cpk0;
        challenge.cpk1 = cpk1;
        challenge.m = m;
        const RedeemResult& for_first = b ? *red1 : *red0;
        const RedeemResult& for_second = b ? *red0 : *red1;
        challenge.first = RedeemTuple{for_first.tag, for_first.proof, m, for_first.ciphertext};
        challenge.second =
            RedeemTuple{for_second.tag, for_second.proof, m, for_second.ciphertext};

        oracles.watch(cpk0, cpk1);
        bool win = false;
        try {
            int guess = adversary.guess(view, challenge, oracles, adv_rng);
            bool fresh = !oracles.watched_query() &&
                         !oracles.log().redeemed_coin(cpk0) &&
                         !oracles.log().redeemed_coin(cpk1);
            win = fresh && (guess == (b ? 1 : 0));
        } catch (const std::exception&) {
            win = false;
        }
        wins += win ? 1 : 0;
        transcript.u8(win ? 1 : 0);
    }
    result.outcome.wins = wins;
    result.outcome.win = false;  // unlink reports an advantage, not a single win bit
    result.advantage =
        trials == 0 ? 0.0
                    : std::abs(static_cast<double>(wins) / static_cast<double>(trials) - 0.5);
    result.outcome.transcript = transcript.finish();
    return result;
}

// ---------------------------------------------------------------------------
// Shipped adversaries
// ---------------------------------------------------------------------------

namespace {

struct HonestBatch {
    std::vector<CoinPublicKey> cpks;
    std::vector<CoinSecret> secrets;
    std::vector<RedeemTuple> tuples;
};

// n coins with verifying redemptions, created through the oracles when
// available and locally otherwise.
HonestBatch honest_batch(const AdversaryView& view, Oracles* oracles, Rng& rng,
                         std::size_t n) {
    HonestBatch batch;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::uint64_t> data = oracle_data(view.pp, rng);
        if (oracles) {
            batch.cpks.push_back(oracles->create(data));
        } else {
            auto [cpk, csk] = dtl_create(view.pp, rng, data);
            batch.cpks.push_back(cpk);
            batch.secrets.push_back(csk);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Bytes m = random_message(view.pp, rng);
        std::optional<RedeemResult> red;
        if (oracles) {
            red = oracles->redeem(batch.cpks, i, m);
        } else {
            red = view.redeem(batch.cpks, batch.secrets[i], m, rng);
        }
        batch.tuples.push_back(RedeemTuple{red->tag, red->proof, m, red->ciphertext});
    }
    return batch;
}

class DuplicateTupleAdversary final : public OneMoreRedeemAdversary {
public:
    std::string name() const override { return "duplicate-tuple"; }
    OneMoreRedeemOutput run(const AdversaryView& view, Oracles* oracles, Rng& rng) override {
        HonestBatch batch = honest_batch(view, oracles, rng, 3);
        batch.tuples.push_back(batch.tuples.front());  // the (n+1)-th entry
        return {batch.cpks, batch.tuples};
    }
};

class SameCoinTwoMessagesAdversary final : public OneMoreRedeemAdversary {
public:
    std::string name() const override { return "same-coin-two-messages"; }
    OneMoreRedeemOutput run(const AdversaryView& view, Oracles* oracles, Rng& rng) override {
        HonestBatch batch = honest_batch(view, oracles, rng, 3);
        // A fresh statement for coin 0; verifies, but the tag repeats.
        Bytes m2 = random_message(view.pp, rng);
        std::optional<RedeemResult> red;
        if (oracles) {
            red = oracles->redeem(batch.cpks, 0, m2);
        } else {
            red = view.redeem(batch.cpks, batch.secrets[0], m2, rng);
        }
        batch.tuples.push_back(RedeemTuple{red->tag, red->proof, m2, red->ciphertext});
        return {batch.cpks, batch.tuples};
    }
};

class RandomForgeryOneMoreAdversary final : public OneMoreRedeemAdversary {
public:
    std::string name() const override { return "random-forgery"; }
    OneMoreRedeemOutput run(const AdversaryView& view, Oracles* oracles, Rng& rng) override {
        HonestBatch batch = honest_batch(view, oracles, rng, 2);
        AccumulatorState st = dtl_accumulate(view.pp, batch.cpks);

        RedeemTuple forged;
        forged.m = random_message(view.pp, rng);
        rng.fill(forged.tag.bytes);
        if (view.pp.mode == Mode::arbitrary) {
            HomKeypair junk = hom_kgen(rng);
            forged.c = hom_enc(junk.ek, sample_data(view.pp, rng), scalar_random(rng),
                               view.pp.sec);
        }
        // 10^4 proof guesses against the public verifier; none survive.
        for (int attempt = 0; attempt < 10000; ++attempt) {
            rng.fill(forged.proof.bytes);
            if (view.verify(st, forged.tag, forged.proof, forged.m, forged.c)) break;
        }
        batch.tuples.push_back(forged);
        return {batch.cpks, batch.tuples};
    }
};

class ReplayTheftAdversary final : public TheftAdversary {
public:
    std::string name() const override { return "replay"; }
    TheftOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        std::vector<CoinPublicKey> cpks{oracles.create(oracle_data(view.pp, rng))};
        Bytes m = random_message(view.pp, rng);
        auto red = oracles.redeem(cpks, 0, m);
        return {cpks, RedeemTuple{red->tag, red->proof, m, red->ciphertext}};
    }
};

class MSubstitutionTheftAdversary final : public TheftAdversary {
public:
    std::string name() const override { return "m-substitution"; }
    TheftOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        std::vector<CoinPublicKey> cpks{oracles.create(oracle_data(view.pp, rng))};
        Bytes m = random_message(view.pp, rng);
        auto red = oracles.redeem(cpks, 0, m);
        Bytes other = random_message(view.pp, rng);  // redirect the payout
        return {cpks, RedeemTuple{red->tag, red->proof, other, red->ciphertext}};
    }
};

class RandomForgeryTheftAdversary final : public TheftAdversary {
public:
    std::string name() const override { return "random-forgery"; }
    TheftOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        std::vector<CoinPublicKey> cpks{oracles.create(oracle_data(view.pp, rng)),
                                        oracles.create(oracle_data(view.pp, rng))};
        AccumulatorState st = dtl_accumulate(view.pp, cpks);
        RedeemTuple forged;
        forged.m = random_message(view.pp, rng);
        rng.fill(forged.tag.bytes);
        if (view.pp.mode == Mode::arbitrary) {
            HomKeypair junk = hom_kgen(rng);
            forged.c = hom_enc(junk.ek, sample_data(view.pp, rng), scalar_random(rng),
                               view.pp.sec);
        }
        for (int attempt = 0; attempt < 10000; ++attempt) {
            rng.fill(forged.proof.bytes);
            if (view.verify(st, forged.tag, forged.proof, forged.m, forged.c)) break;
        }
        return {cpks, forged};
    }
};

class ForeignCoinTheftAdversary final : public TheftAdversary {
public:
    std::string name() const override { return "foreign-coin"; }
    TheftOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        // A verifying redemption of the adversary's own, non-oracle coin;
        // the C-membership condition rejects the list.
        std::vector<CoinPublicKey> cpks{oracles.create(oracle_data(view.pp, rng))};
        auto [own_cpk, own_csk] = dtl_create(view.pp, rng, oracle_data(view.pp, rng));
        cpks.push_back(own_cpk);
        Bytes m = random_message(view.pp, rng);
        auto red = view.redeem(cpks, own_csk, m, rng);
        return {cpks, RedeemTuple{red->tag, red->proof, m, red->ciphertext}};
    }
};

class TagCopyNSlanderAdversary final : public NSlanderAdversary {
public:
    std::string name() const override { return "tag-copy"; }
    NSlanderOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        CoinPublicKey cpk = oracles.create(oracle_data(view.pp, rng));
        CoinPublicKey cpk_star = oracles.create(oracle_data(view.pp, rng));
        std::vector<CoinPublicKey> pair{cpk, cpk_star};
        // Learn the victim's tag, then try to slander it under a fresh
        // message with a guessed proof.
        auto probe = oracles.redeem(pair, 0, random_message(view.pp, rng));
        RedeemTuple tuple;
        tuple.tag = probe->tag;
        tuple.m = random_message(view.pp, rng);
        tuple.c = probe->ciphertext;
        rng.fill(tuple.proof.bytes);
        return {cpk, cpk_star, tuple};
    }
};

class OwnCoinNSlanderAdversary final : public NSlanderAdversary {
public:
    std::string name() const override { return "own-coin"; }
    NSlanderOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        CoinPublicKey cpk = oracles.create(oracle_data(view.pp, rng));
        auto [cpk_star, csk_star] = dtl_create(view.pp, rng, oracle_data(view.pp, rng));
        std::vector<CoinPublicKey> pair{cpk, cpk_star};
        Bytes m_star = random_message(view.pp, rng);
        auto red = view.redeem(pair, csk_star, m_star, rng);
        // Verifies, but the tag belongs to cpk_star, not to the victim.
        return {cpk, cpk_star, RedeemTuple{red->tag, red->proof, m_star, red->ciphertext}};
    }
};

class ReplayNSlanderAdversary final : public NSlanderAdversary {
public:
    std::string name() const override { return "replay"; }
    NSlanderOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) override {
        CoinPublicKey cpk = oracles.create(oracle_data(view.pp, rng));
        CoinPublicKey cpk_star = oracles.create(oracle_data(view.pp, rng));
        std::vector<CoinPublicKey> pair{cpk, cpk_star};
        Bytes m_star = random_message(view.pp, rng);
        // The genuine tuple for the victim coin; its oracle record makes
        // the freshness condition fail.
        auto red = oracles.redeem(pair, 0, m_star);
        return {cpk, cpk_star, RedeemTuple{red->tag, red->proof, m_star, red->ciphertext}};
    }
};

class CoinFlipUnlinkAdversary final : public UnlinkAdversary {
public:
    std::string name() const override { return "coin-flip"; }
    std::pair<std::uint64_t, std::uint64_t> choose_data(const AdversaryView&, ByteView,
                                                        Rng& rng) override {
        return {rng.below(100), rng.below(100)};
    }
    int guess(const AdversaryView&, const UnlinkChallenge&, Oracles&, Rng& rng) override {
        return rng.coin() ? 1 : 0;
    }
};

class ByteMatchUnlinkAdversary final : public UnlinkAdversary {
public:
    std::string name() const override { return "byte-match"; }
    std::pair<std::uint64_t, std::uint64_t> choose_data(const AdversaryView&, ByteView,
                                                        Rng& rng) override {
        return {rng.below(100), rng.below(100)};
    }
    int guess(const AdversaryView&, const UnlinkChallenge& challenge, Oracles&,
              Rng&) override {
        // Compares deposit-side bytes with redemption-side bytes; tags and
        // proofs are independent oracle outputs, so this carries no signal.
        int score = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            score += (challenge.first.tag.bytes[i] == challenge.cpk0.bytes[i]) ? 1 : 0;
            score -= (challenge.first.proof.bytes[i] == challenge.cpk1.bytes[i]) ? 1 : 0;
        }
        if (score == 0)
            return (challenge.first.tag.bytes[0] ^ challenge.cpk0.bytes[0]) & 1;
        return score > 0 ? 0 : 1;
    }
};

class CiphertextCompareUnlinkAdversary final : public UnlinkAdversary {
public:
    std::string name() const override { return "ciphertext-compare"; }
    std::pair<std::uint64_t, std::uint64_t> choose_data(const AdversaryView&, ByteView,
                                                        Rng&) override {
        return {3, 200};  // maximally distinct payloads
    }
    int guess(const AdversaryView&, const UnlinkChallenge& challenge, Oracles&,
              Rng&) override {
        // Fresh r_enc makes ciphertexts of different payloads look alike;
        // byte comparison of the two challenge ciphertexts is noise.
        if (!challenge.first.c || !challenge.second.c) return 0;
        return challenge.first.c->c2 < challenge.second.c->c2 ? 0 : 1;
    }
};

}  // namespace

std::vector<std::unique_ptr<OneMoreRedeemAdversary>> shipped_one_more_adversaries() {
    std::vector<std::unique_ptr<OneMoreRedeemAdversary>> out;
    out.push_back(std::make_unique<DuplicateTupleAdversary>());
    out.push_back(std::make_unique<SameCoinTwoMessagesAdversary>());
    out.push_back(std::make_unique<RandomForgeryOneMoreAdversary>());
    return out;
}

std::vector<std::unique_ptr<TheftAdversary>> shipped_theft_adversaries() {
    std::vector<std::unique_ptr<TheftAdversary>> out;
    out.push_back(std::make_unique<ReplayTheftAdversary>());
    out.push_back(std::make_unique<MSubstitutionTheftAdversary>());
    out.push_back(std::make_unique<RandomForgeryTheftAdversary>());
    out.push_back(std::make_unique<ForeignCoinTheftAdversary>());
    return out;
}

std::vector<std::unique_ptr<NSlanderAdversary>> shipped_nslander_adversaries() {
    std::vector<std::unique_ptr<NSlanderAdversary>> out;
    out.push_back(std::make_unique<TagCopyNSlanderAdversary>());
    out.push_back(std::make_unique<OwnCoinNSlanderAdversary>());
    out.push_back(std::make_unique<ReplayNSlanderAdversary>());
    return out;
}

std::vector<std::unique_ptr<UnlinkAdversary>> shipped_unlink_adversaries(Mode mode) {
    std::vector<std::unique_ptr<UnlinkAdversary>> out;
    out.push_back(std::make_unique<CoinFlipUnlinkAdversary>());
    out.push_back(std::make_unique<ByteMatchUnlinkAdversary>());
    if (mode == Mode::arbitrary)
        out.push_back(std::make_unique<CiphertextCompareUnlinkAdversary>());
    return out;
}

}  // namespace dtl
