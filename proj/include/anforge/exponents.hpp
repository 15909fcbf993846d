#pragma once

#include "anforge/numbers.hpp"

#include <string>
#include <vector>

namespace anforge {

/// (n-4)(n^2-4)/(8(n^3-n^2)) for even n, (n-7)(n+2)/(8n^2) for odd n. n >= 6.
BigRat theorem1_exponent(int n);
/// (1 - 2/n!)/(4n - 4). n >= 5.
BigRat ptbw_exponent(int n);
/// Parameter-count exponent: (n^2+2n+8)/8 for even n, (n^2+7)/8 for odd n.
BigRat parameter_count(int n);
/// (n + 2)/4.
BigRat schmidt_e(int n);

/// Which formula of the reduction applies: 1 when C >= n(e + 1/2) or e <= 1/2.
int reduction_branch(int n, const BigRat& e, const BigRat& C);
/// Requires e >= 1/(n-1) and C >= n (C = n gives 0); d is carried but does not enter.
BigRat reduction_exponent(int n, int d, const BigRat& e, const BigRat& C);
/// The Schmidt specialization, e = (n+2)/4. Requires n >= 3 and C >= n.
BigRat schmidt_corollary_exponent(int n, const BigRat& C);

struct BestPossible {
    BigRat hypothesis_upper;
    BigRat lower;
};
BestPossible best_possible(int n);

struct ExponentRow {
    int n = 0;
    int d = 1;
    BigRat theorem1;
    BigRat ptbw;
    BigRat schmidt_e;
    BigRat param_count_C;
    BigRat reduction;
    BigRat best_possible_lower;
    BigRat best_possible_upper_hypothesis;
    /// "theorem1", "ptbw" or "equal".
    std::string larger;
};

std::vector<ExponentRow> comparison_table(int n_lo, int n_hi);

struct IdentityCheck {
    std::string name;
    bool ok = true;
    int cases = 0;
    std::string first_failure;
};

/// Every exact identity tying the formulas together, over n_lo..n_hi.
std::vector<IdentityCheck> identity_suite(int n_lo, int n_hi);

std::string exponents_csv(const std::vector<ExponentRow>& rows, bool decimals);
std::string exponents_text(const std::vector<ExponentRow>& rows, bool decimals);

}  // namespace anforge
