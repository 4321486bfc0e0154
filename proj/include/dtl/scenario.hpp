#pragma once

#include <iosfwd>

#include "dtl/client.hpp"

namespace dtl {

// Text scenario files: first line "dtl-scenario 1", then one action per
// line, '#' comments. Principals are named; addresses and encryption
// keys derive deterministically from the scenario seed.

struct ScenarioOverrides {
    std::optional<unsigned> tree_depth;
    std::optional<unsigned> window_k;
    std::optional<unsigned> range_bits;
    std::optional<std::uint64_t> amt_fixed;

    SecParams make_sec() const;
};

struct ScenarioAction {
    std::string verb;
    std::vector<std::string> args;
    int line = 0;
};

struct Scenario {
    std::string app;  // fixed-pay | confidential-pay | vote
    std::uint64_t seed = 1;
    ScenarioOverrides overrides;
    std::vector<ScenarioAction> actions;
};

Scenario parse_scenario(const std::string& text);
const char* default_scenario_text(const std::string& app);

struct ScenarioRun {
    bool ok = false;
    std::string error;
    LedgerState final_state;
    std::vector<Transaction> txs;
    std::vector<std::pair<Address, std::uint64_t>> genesis_accounts;
    Digest event_digest{};
    Digest state_digest{};
    // Decrypted views for the report (the runner holds the wallet keys).
    std::map<std::string, std::uint64_t> conf_balances;
    std::map<std::string, std::uint64_t> tallies;
};

// Applies the scenario against a fresh ledger. When report is non-null,
// one structured record per step plus final balances and digests are
// written to it (stable field order; no timing fields).
ScenarioRun run_scenario(const Scenario& scenario, std::ostream* report);

// Binary replay log: magic + version byte, the deterministic deployment
// inputs, the transaction list, and the final state digest.
struct RunLog {
    std::string app;
    std::uint64_t seed = 1;
    ScenarioOverrides overrides;
    std::vector<std::pair<Address, std::uint64_t>> genesis_accounts;
    std::vector<Transaction> txs;
    Digest final_digest{};
};

RunLog run_log_of(const Scenario& scenario, const ScenarioRun& run);
Bytes encode_run_log(const RunLog& log);
RunLog decode_run_log(ByteView data);

struct ReplayVerdict {
    bool match = false;
    Digest expected{};
    Digest recomputed{};
    std::string detail;
};

ReplayVerdict replay_run_log(const RunLog& log);

// Deterministic per-principal identities.
Address scenario_address(const std::string& name);
HomKeypair scenario_keypair(std::uint64_t seed, const std::string& name);

}  // namespace dtl
