#include "dtl/scenario.hpp"

#include <cstring>
#include <ostream>
#include <sstream>

#include "dtl/encode.hpp"
#include "dtl/hash.hpp"

namespace dtl {

namespace {

constexpr const char kScenarioMagic[] = "dtl-scenario";
constexpr int kScenarioVersion = 1;
constexpr const char kLogMagic[] = "DTLG";
constexpr std::uint8_t kLogVersion = 1;

[[noreturn]] void scenario_error(int line, const std::string& what) {
    raise(Errc::bad_payload, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        scenario_error(line, "expected a number, got '" + tok + "'");
    }
}

}  // namespace

SecParams ScenarioOverrides::make_sec() const {
    SecParams sec;
    if (tree_depth) sec.tree_depth = *tree_depth;
    if (window_k) sec.root_window_k = *window_k;
    if (range_bits) sec.plaintext_range_bits = *range_bits;
    sec.validate();
    return sec;
}

Scenario parse_scenario(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Scenario scenario;
    bool saw_magic = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        if (!saw_magic) {
            if (toks.size() != 2 || toks[0] != kScenarioMagic ||
                parse_u64(toks[1], lineno) != kScenarioVersion)
                scenario_error(lineno, "expected 'dtl-scenario 1' header");
            saw_magic = true;
            continue;
        }
        if (toks[0] == "app") {
            if (toks.size() != 2) scenario_error(lineno, "app takes one argument");
            scenario.app = toks[1];
            continue;
        }
        if (toks[0] == "seed") {
            if (toks.size() != 2) scenario_error(lineno, "seed takes one argument");
            scenario.seed = parse_u64(toks[1], lineno);
            continue;
        }
        if (toks[0] == "param") {
            if (toks.size() != 3) scenario_error(lineno, "param takes name and value");
            std::uint64_t v = parse_u64(toks[2], lineno);
            if (toks[1] == "tree_depth") scenario.overrides.tree_depth = static_cast<unsigned>(v);
            else if (toks[1] == "window_k") scenario.overrides.window_k = static_cast<unsigned>(v);
            else if (toks[1] == "range_bits") scenario.overrides.range_bits = static_cast<unsigned>(v);
            else if (toks[1] == "amt_fixed") scenario.overrides.amt_fixed = v;
            else scenario_error(lineno, "unknown param '" + toks[1] + "'");
            continue;
        }
        ScenarioAction action;
        action.verb = toks[0];
        action.args.assign(toks.begin() + 1, toks.end());
        action.line = lineno;
        scenario.actions.push_back(std::move(action));
    }
    if (!saw_magic) raise(Errc::bad_payload, "missing scenario header");
    if (scenario.app.empty()) raise(Errc::bad_payload, "scenario does not name an app");
    return scenario;
}

Address scenario_address(const std::string& name) { return address_from_label(name); }

HomKeypair scenario_keypair(std::uint64_t seed, const std::string& name) {
    Digest d = Hasher(Domain::transcript).str("wallet-key").u64(seed).str(name).finish();
    return hom_kgen(d);
}

namespace {

struct Runner {
    const Scenario& scenario;
    std::ostream* report;
    ScenarioRun run;

    LedgerState state;
    std::uint32_t tumbler_id = 0;
    std::uint32_t conf_id = 0;
    std::uint32_t vote_id = 0;
    Rng rng;

    std::map<std::string, ClientCoin> coins;
    std::map<std::string, std::string> coin_owner;
    std::map<std::string, std::uint64_t> coin_amount;
    std::vector<std::string> principals;
    int step = 0;

    explicit Runner(const Scenario& s, std::ostream* rep)
        : scenario(s), report(rep), rng(s.seed) {}

    void note(const ScenarioAction& a, const TxResult& result) {
        ++step;
        if (report) {
            *report << "step " << step << " line " << a.line << " action " << a.verb
                    << " result " << (result.ok ? "ok" : errc_name(result.code)) << "\n";
        }
        if (!result.ok)
            scenario_error(a.line, "honest action rejected: " + result.detail);
    }

    void submit(const ScenarioAction& a, const Transaction& tx) {
        LedgerState before = state;
        auto [next, result] = apply_tx(state, tx);
        state = std::move(next);
        if (result.ok) run.txs.push_back(tx);
        note(a, result);
        if (report && result.ok) {
            for (const auto& p : principals) {
                Address address = scenario_address(p);
                auto old_it = before.balances.find(address);
                auto new_it = state.balances.find(address);
                std::uint64_t old_bal = old_it == before.balances.end() ? 0 : old_it->second;
                std::uint64_t new_bal = new_it == state.balances.end() ? 0 : new_it->second;
                if (old_bal != new_bal)
                    *report << "  diff balance " << p << " " << old_bal << " -> " << new_bal
                            << "\n";
            }
            for (const auto& [id, rec] : state.contracts) {
                auto old_it = before.contracts.find(id);
                std::uint64_t old_pool =
                    old_it == before.contracts.end() ? 0 : old_it->second.pool;
                if (old_pool != rec.pool)
                    *report << "  diff pool " << id << " " << old_pool << " -> " << rec.pool
                            << "\n";
            }
        }
    }

    void ensure_principal(const std::string& name) {
        for (const auto& p : principals)
            if (p == name) return;
        principals.push_back(name);
    }

    const ClientCoin& coin(const std::string& name, int line) {
        auto it = coins.find(name);
        if (it == coins.end()) scenario_error(line, "unknown coin '" + name + "'");
        return it->second;
    }

    // Which argument positions of each verb name a principal (the rest
    // are coin names or numbers).
    static std::vector<std::size_t> principal_args(const std::string& verb) {
        if (verb == "account" || verb == "conf-account" || verb == "candidate" ||
            verb == "reveal")
            return {0};
        if (verb == "deposit" || verb == "tdeposit" || verb == "cdeposit") return {0};
        if (verb == "withdraw" || verb == "ucwithdraw" || verb == "vote") return {1};
        if (verb == "register") return {1};
        return {};
    }

    void collect_accounts() {
        // Genesis: every declared account, plus zero-balance entries for
        // any principal that only ever signs.
        if (scenario.app == "vote") ensure_principal("sequencer");
        std::map<std::string, std::uint64_t> declared;
        for (const auto& a : scenario.actions) {
            if (a.verb == "account") {
                if (a.args.size() != 2) scenario_error(a.line, "account <name> <balance>");
                declared[a.args[0]] = parse_u64(a.args[1], a.line);
                ensure_principal(a.args[0]);
                continue;
            }
            for (std::size_t pos : principal_args(a.verb))
                if (pos < a.args.size()) ensure_principal(a.args[pos]);
        }
        for (const auto& p : principals) {
            std::uint64_t bal = declared.count(p) ? declared[p] : 0;
            run.genesis_accounts.emplace_back(scenario_address(p), bal);
        }
        state = genesis(run.genesis_accounts);
    }

    void deploy() {
        SecParams sec = scenario.overrides.make_sec();
        Digest seed_digest =
            Hasher(Domain::transcript).str("deploy").u64(scenario.seed).finish();
        if (scenario.app == "fixed-pay") {
            tumbler_id = deploy_fixed_tumbler(state, sec, seed_digest,
                                              scenario.overrides.amt_fixed.value_or(10));
        } else if (scenario.app == "confidential-pay") {
            conf_id = deploy_conf(state);
            tumbler_id = deploy_arb_tumbler(state, sec, seed_digest, conf_id);
        } else if (scenario.app == "vote") {
            vote_id = deploy_vote(state, sec, seed_digest);
        } else {
            raise(Errc::bad_payload, "unknown app '" + scenario.app + "'");
        }
    }

    void exec(const ScenarioAction& a) {
        if (a.verb == "account") return;  // handled at genesis
        if (scenario.app == "fixed-pay") return exec_fixed(a);
        if (scenario.app == "confidential-pay") return exec_conf(a);
        return exec_vote(a);
    }

    void exec_fixed(const ScenarioAction& a) {
        const TumblerContract& tumbler = tumbler_at(state, tumbler_id);
        if (a.verb == "deposit") {
            if (a.args.size() != 2) scenario_error(a.line, "deposit <sender> <coin>");
            ClientCoin coin = create_fixed_coin(tumbler, rng);
            coins[a.args[1]] = coin;
            coin_owner[a.args[1]] = a.args[0];
            submit(a, make_fixed_deposit(scenario_address(a.args[0]), tumbler_id, tumbler,
                                         coin));
            return;
        }
        if (a.verb == "withdraw") {
            if (a.args.size() != 2) scenario_error(a.line, "withdraw <coin> <recipient>");
            const ClientCoin& c = coin(a.args[0], a.line);
            ensure_principal(a.args[1]);
            submit(a, make_fixed_withdraw(scenario_address(coin_owner[a.args[0]]), tumbler_id,
                                          tumbler, c.csk, scenario_address(a.args[1]), rng));
            return;
        }
        scenario_error(a.line, "unknown fixed-pay action '" + a.verb + "'");
    }

    void exec_conf(const ScenarioAction& a) {
        const TumblerContract& tumbler = tumbler_at(state, tumbler_id);
        if (a.verb == "conf-account") {
            if (a.args.size() != 2) scenario_error(a.line, "conf-account <name> <amount>");
            std::uint64_t amt = parse_u64(a.args[1], a.line);
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[0]);
            Transaction tx;
            tx.sender = scenario_address(a.args[0]);
            tx.target = conf_id;
            tx.value = amt;
            tx.payload = ConfFundCall{kp.ek, amt};
            submit(a, tx);
            run.conf_balances[a.args[0]] += amt;
            return;
        }
        if (a.verb == "tdeposit") {
            if (a.args.size() != 3) scenario_error(a.line, "tdeposit <sender> <coin> <amt>");
            std::uint64_t amt = parse_u64(a.args[2], a.line);
            ClientCoin coin = create_arb_coin(tumbler, amt, rng);
            coins[a.args[1]] = coin;
            coin_owner[a.args[1]] = a.args[0];
            coin_amount[a.args[1]] = amt;
            submit(a, make_transparent_deposit(scenario_address(a.args[0]), tumbler_id,
                                               tumbler, coin, amt));
            return;
        }
        if (a.verb == "cdeposit") {
            if (a.args.size() != 3) scenario_error(a.line, "cdeposit <sender> <coin> <amt>");
            std::uint64_t amt = parse_u64(a.args[2], a.line);
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[0]);
            std::uint64_t bal = run.conf_balances[a.args[0]];
            auto plan = make_confidential_deposit(scenario_address(a.args[0]), tumbler_id,
                                                  state, kp.dk, bal, amt, rng);
            coins[a.args[1]] = plan.coin;
            coin_owner[a.args[1]] = a.args[0];
            coin_amount[a.args[1]] = amt;
            submit(a, plan.tx);
            run.conf_balances[a.args[0]] -= amt;
            return;
        }
        if (a.verb == "ucwithdraw") {
            if (a.args.size() != 2) scenario_error(a.line, "ucwithdraw <coin> <recipient>");
            const ClientCoin& c = coin(a.args[0], a.line);
            ensure_principal(a.args[1]);
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[1]);
            submit(a, make_uc_withdraw(scenario_address(coin_owner[a.args[0]]), tumbler_id,
                                       tumbler, c.csk, kp.ek, {}, rng));
            run.conf_balances[a.args[1]] += coin_amount[a.args[0]];
            return;
        }
        scenario_error(a.line, "unknown confidential-pay action '" + a.verb + "'");
    }

    void exec_vote(const ScenarioAction& a) {
        const VoteContract& vote = vote_at(state, vote_id);
        if (a.verb == "candidate") {
            if (a.args.size() != 1) scenario_error(a.line, "candidate <name>");
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[0]);
            Transaction tx;
            tx.sender = scenario_address(a.args[0]);
            tx.target = vote_id;
            tx.payload = RegisterCandidateCall{kp.ek};
            submit(a, tx);
            return;
        }
        if (a.verb == "advance") {
            Transaction tx;
            tx.sender = scenario_address("sequencer");
            tx.target = vote_id;
            tx.payload = AdvanceStageCall{};
            submit(a, tx);
            return;
        }
        if (a.verb == "register") {
            if (a.args.size() != 3) scenario_error(a.line, "register <coin> <voter> <power>");
            std::uint64_t power = parse_u64(a.args[2], a.line);
            auto reg = make_vote_registration(scenario_address(a.args[1]), vote_id, vote,
                                              power, rng);
            coins[a.args[0]] = reg.coin;
            coin_owner[a.args[0]] = a.args[1];
            coin_amount[a.args[0]] = power;
            submit(a, reg.tx);
            return;
        }
        if (a.verb == "vote") {
            if (a.args.size() != 2) scenario_error(a.line, "vote <coin> <candidate>");
            const ClientCoin& c = coin(a.args[0], a.line);
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[1]);
            submit(a, make_vote(scenario_address(coin_owner[a.args[0]]), vote_id, vote,
                                c.csk, kp.ek, rng));
            return;
        }
        if (a.verb == "reveal") {
            if (a.args.size() != 1) scenario_error(a.line, "reveal <candidate>");
            HomKeypair kp = scenario_keypair(scenario.seed, a.args[0]);
            submit(a, make_reveal(scenario_address(a.args[0]), vote_id, vote, kp.dk));
            const VoteContract& after = vote_at(state, vote_id);
            run.tallies[a.args[0]] = after.revealed.at(kp.ek);
            return;
        }
        scenario_error(a.line, "unknown vote action '" + a.verb + "'");
    }

    void finish() {
        run.final_state = state;
        run.event_digest = event_log_digest(state);
        run.state_digest = ledger_digest(state);
        run.ok = true;
        if (!report) return;
        for (const auto& p : principals) {
            auto it = state.balances.find(scenario_address(p));
            if (it != state.balances.end())
                *report << "balance " << p << " " << it->second << "\n";
        }
        for (const auto& [id, rec] : state.contracts)
            *report << "pool " << id << " " << rec.pool << "\n";
        for (const auto& [name, bal] : run.conf_balances)
            *report << "conf-balance " << name << " " << bal << "\n";
        for (const auto& [name, tally] : run.tallies)
            *report << "tally " << name << " " << tally << "\n";
        *report << "events " << state.events.size() << " digest " << to_hex(run.event_digest)
                << "\n";
        *report << "state digest " << to_hex(run.state_digest) << "\n";
    }
};

}  // namespace

ScenarioRun run_scenario(const Scenario& scenario, std::ostream* report) {
    Runner runner(scenario, report);
    if (report)
        *report << "scenario app " << scenario.app << " seed " << scenario.seed << "\n";
    try {
        runner.collect_accounts();
        runner.deploy();
        for (const auto& action : scenario.actions) runner.exec(action);
        runner.finish();
    } catch (const Error& err) {
        runner.run.ok = false;
        runner.run.error = err.what();
        if (report) *report << "error " << err.what() << "\n";
    }
    return runner.run;
}

RunLog run_log_of(const Scenario& scenario, const ScenarioRun& run) {
    RunLog log;
    log.app = scenario.app;
    log.seed = scenario.seed;
    log.overrides = scenario.overrides;
    log.genesis_accounts = run.genesis_accounts;
    log.txs = run.txs;
    log.final_digest = run.state_digest;
    return log;
}

Bytes encode_run_log(const RunLog& log) {
    Encoder e;
    e.raw(ByteView(reinterpret_cast<const std::uint8_t*>(kLogMagic), 4));
    e.u8(kLogVersion);
    e.str(log.app);
    e.u64(log.seed);
    e.u8(log.overrides.tree_depth ? 1 : 0);
    e.u32(log.overrides.tree_depth.value_or(0));
    e.u8(log.overrides.window_k ? 1 : 0);
    e.u32(log.overrides.window_k.value_or(0));
    e.u8(log.overrides.range_bits ? 1 : 0);
    e.u32(log.overrides.range_bits.value_or(0));
    e.u8(log.overrides.amt_fixed ? 1 : 0);
    e.u64(log.overrides.amt_fixed.value_or(0));
    e.u32(static_cast<std::uint32_t>(log.genesis_accounts.size()));
    for (const auto& [addr, bal] : log.genesis_accounts) e.raw(addr).u64(bal);
    e.u32(static_cast<std::uint32_t>(log.txs.size()));
    for (const auto& tx : log.txs) e.blob(encode_tx(tx));
    e.raw(log.final_digest);
    return e.take();
}

RunLog decode_run_log(ByteView data) {
    Decoder d(data);
    auto magic = d.fixed<4>();
    if (std::memcmp(magic.data(), kLogMagic, 4) != 0)
        raise(Errc::bad_payload, "not a replay log");
    if (d.u8() != kLogVersion) raise(Errc::bad_payload, "unsupported log version");
    RunLog log;
    log.app = d.str();
    log.seed = d.u64();
    bool has_depth = d.u8() != 0;
    std::uint32_t depth = d.u32();
    if (has_depth) log.overrides.tree_depth = depth;
    bool has_k = d.u8() != 0;
    std::uint32_t k = d.u32();
    if (has_k) log.overrides.window_k = k;
    bool has_range = d.u8() != 0;
    std::uint32_t range = d.u32();
    if (has_range) log.overrides.range_bits = range;
    bool has_amt = d.u8() != 0;
    std::uint64_t amt = d.u64();
    if (has_amt) log.overrides.amt_fixed = amt;
    std::uint32_t n_accounts = d.u32();
    for (std::uint32_t i = 0; i < n_accounts; ++i) {
        Address addr = d.fixed<20>();
        std::uint64_t bal = d.u64();
        log.genesis_accounts.emplace_back(addr, bal);
    }
    std::uint32_t n_txs = d.u32();
    for (std::uint32_t i = 0; i < n_txs; ++i) log.txs.push_back(decode_tx(d.blob()));
    log.final_digest = d.fixed<32>();
    if (!d.done()) raise(Errc::bad_payload, "trailing bytes in replay log");
    return log;
}

ReplayVerdict replay_run_log(const RunLog& log) {
    ReplayVerdict verdict;
    verdict.expected = log.final_digest;
    try {
        LedgerState state = genesis(log.genesis_accounts);
        SecParams sec = log.overrides.make_sec();
        Digest seed_digest = Hasher(Domain::transcript).str("deploy").u64(log.seed).finish();
        if (log.app == "fixed-pay") {
            deploy_fixed_tumbler(state, sec, seed_digest, log.overrides.amt_fixed.value_or(10));
        } else if (log.app == "confidential-pay") {
            std::uint32_t conf = deploy_conf(state);
            deploy_arb_tumbler(state, sec, seed_digest, conf);
        } else if (log.app == "vote") {
            deploy_vote(state, sec, seed_digest);
        } else {
            raise(Errc::bad_payload, "unknown app in log");
        }
        for (const auto& tx : log.txs) {
            auto [next, result] = apply_tx(state, tx);
            state = std::move(next);
            if (!result.ok)
                raise(Errc::bad_payload, std::string("logged tx rejected: ") + result.detail);
        }
        verdict.recomputed = ledger_digest(state);
        verdict.match = verdict.recomputed == verdict.expected;
        if (!verdict.match) verdict.detail = "state digest mismatch";
    } catch (const Error& err) {
        verdict.match = false;
        verdict.detail = err.what();
    }
    return verdict;
}

const char* default_scenario_text(const std::string& app) {
    if (app == "fixed-pay") {
        return R"(dtl-scenario 1
app fixed-pay
seed 7
param amt_fixed 10
account alice 100
account bob 0
account carol 0
deposit alice c1
deposit alice c2
deposit alice c3
withdraw c1 bob
withdraw c2 carol
withdraw c3 bob
)";
    }
    if (app == "confidential-pay") {
        return R"(dtl-scenario 1
app confidential-pay
seed 7
account alice 100
account bob 50
conf-account bob 40
tdeposit alice c1 7
tdeposit alice c2 12
cdeposit bob c3 25
ucwithdraw c1 dana
ucwithdraw c2 bob
ucwithdraw c3 dana
)";
    }
    if (app == "vote") {
        return R"(dtl-scenario 1
app vote
seed 7
candidate carol
candidate dave
advance
register v1 alice 5
register v2 bob 2
advance
vote v1 carol
vote v2 dave
advance
reveal carol
reveal dave
)";
    }
    raise(Errc::bad_payload, "no bundled scenario for app '" + app + "'");
}

}  // namespace dtl
