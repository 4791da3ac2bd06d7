#pragma once

#include "slt/model.hpp"

namespace slt {

// Digit sequences are stored positionally: digits[i-1] is the entry at index
// i, 1 <= i <= k.  For lambda sequences odd positions hold j-digits and even
// positions hold l-digits; for mu sequences it is the other way around; tau
// sequences have one digit per position.
struct LambdaSeq {
    std::vector<long> digits;
};
struct MuSeq {
    std::vector<long> digits;
};
struct TauSeq {
    std::vector<long> digits;
};

enum class SeqKind { Lambda, Mu, Tau };

// Weight sigma(i-2) + (j-1) sigma(i-1) shared by the odd-side lambda values
// and the even-side mu values (0 when j = 0).
Int block_weight(const SltModel& model, int i, long j);

Int lambda_valuation(const SltModel& model, const LambdaSeq& seq);
Int mu_valuation(const SltModel& model, const MuSeq& seq);
Int tau_valuation(const SltModel& model, const TauSeq& seq);

LambdaSeq lambda_expand(const SltModel& model, const Int& n);
MuSeq mu_expand(const SltModel& model, const Int& n);
TauSeq tau_expand(const SltModel& model, const Int& t);

// Corrected predicates: exactly the digit vectors produced by the greedy
// expansions (digit bounds plus remainder/maximality inequalities).  The
// _literal variants transcribe the defining clauses as printed; where the two
// disagree the enumeration oracle decides and verify records the difference.
bool is_lambda_sequence(const SltModel& model, const std::vector<long>& digits);
bool is_mu_sequence(const SltModel& model, const std::vector<long>& digits);
bool is_tau_sequence(const SltModel& model, const std::vector<long>& digits);
bool is_lambda_sequence_literal(const SltModel& model, const std::vector<long>& digits);
bool is_mu_sequence_literal(const SltModel& model, const std::vector<long>& digits);

// a < b in the sequence order: compared at the highest position where they
// differ.
bool sequence_less(const std::vector<long>& a, const std::vector<long>& b);

// All sequences of the given kind in increasing sequence order.  Tau
// enumeration is restricted to the expansion domain [1, m-3]; the unrestricted
// predicate set additionally contains the all-max sequence of value m-2
// (see enumerate_tau_unrestricted and verify).
std::vector<std::vector<long>> enumerate_sequences(const SltModel& model, SeqKind kind);
std::vector<std::vector<long>> enumerate_tau_unrestricted(const SltModel& model);

// Star condition at cutoff h (1 <= h <= k-1) for a lambda digit vector.
bool star_condition(const SltModel& model, const std::vector<long>& digits, int h);

// Alternating remainder sum: for bounded t-vectors with t_{i0} > 0,
// 0 < sum < r_{i0-1} (odd i0) resp. -r_{i0-1} < sum < 0 (even i0).
bool remainder_inequality_check(const SltModel& model, const std::vector<long>& t, int i0);

// Exhaustive check that the alternating sum equals 1 exactly for the tau
// sequences of the stated shape (even k: i0 = k-1, t_{k-1} = 1, t_k = q_k-1).
bool tau_unit_check(const SltModel& model);

}  // namespace slt
