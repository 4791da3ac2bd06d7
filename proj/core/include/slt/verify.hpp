#pragma once

#include <iosfwd>

#include "slt/index_bound.hpp"
#include "slt/serialize.hpp"

namespace slt {

// One ledger line.  `verdict` is "erratum" for a divergence between a
// literally transcribed source formula and the oracle-validated behaviour
// (documented in the catalog below), "violation" for anything else - a
// violation means a property that must hold failed and the run exits nonzero.
struct Finding {
    std::string check;     // stable catalog id
    std::string ref;       // what the transcribed statement says
    std::string instance;  // parameters pinning the divergence
    std::string expected;
    std::string got;
    std::string verdict;
};

// id -> short description of every documented erratum class
const std::map<std::string, std::string>& errata_catalog();

struct VerifyOptions {
    long max_m = 12;
    long max_d = 3;
    long max_m_nonnormal = 20;
    long roundtrip_r = 200;
    long transform_m = 200;
    long pullback_r = 60;
    int random_pairs = 200;
    unsigned seed = 0;
};

struct VerifyResult {
    std::vector<Finding> findings;
    long checks = 0;
    long errata = 0;
    long violations = 0;
    bool ok() const { return violations == 0; }
};

VerifyResult run_verify(const VerifyOptions& opt);

json to_json(const Finding& f);
void write_ledger(std::ostream& os, const VerifyResult& res);

}  // namespace slt
