#pragma once

#include <stdexcept>
#include <string>

namespace dtl {

enum class Errc {
    none = 0,
    invalid_key,
    range_violation,
    tree_full,
    index_error,
    decode_failure,
    relation_mismatch,
    unsatisfied_relation,
    mode_mismatch,
    malformed_message,
    duplicate_account,
    unknown_account,
    unknown_contract,
    insufficient_funds,
    amount_mismatch,
    stale_root,
    double_redeem,
    invalid_proof,
    wrong_stage,
    unknown_candidate,
    bad_payload,
    fault_injected,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace dtl
