#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intspec/search.hpp"

namespace intspec {

struct MuRecord {
    int t = 0;
    SearchOutcome mu1;
    SearchOutcome mu2;
};

// One row per t in [χ'(G), |E(G)|].
struct MuTable {
    std::string graph;
    std::vector<MuRecord> rows;
};

struct MuParam {
    int value = 0;
    int t = 0;  // smallest t attaining the value
    bool exact = false;
};

struct MuParams {
    MuParam mu11, mu12, mu21, mu22;
};

enum class GameObjective { Mu21, Mu12 };

// Alice picks t, Bob colors. For Mu21 Alice minimizes and Bob maximizes the
// number of interval vertices; Mu12 swaps the roles.
struct GameResult {
    GameObjective objective = GameObjective::Mu21;
    int alice_t = 0;
    std::optional<EdgeColoring> bob_witness;
    int value = 0;
    bool exact = false;
};

MuTable mu_table(const Graph& g, const SearchBudget& budget = {}, Symmetry symmetry = Symmetry::Reversal);

MuParams mu_params(const MuTable& table);

GameResult game_solve(const Graph& g, GameObjective objective, const SearchBudget& budget = {},
                      Symmetry symmetry = Symmetry::Reversal);

// Closed forms for K_{m,n}. Arguments are normalized so that m >= n; Y is the
// larger part. All throw std::invalid_argument on nonpositive input.
int mu21_closed_form(int m, int n);
int w_closed(int m, int n);
int W_closed(int m, int n);
int wY_closed(int m, int n);

// max ≤ min·⌈max/min⌉ ≤ m+n-gcd ≤ m+n-1 ≤ mn
bool corollary_chain_check(int m, int n);

enum class ClaimStatus { Pass, Fail, Skipped };

struct ClaimRecord {
    std::string claim;
    int m = 0;
    int n = 0;
    std::optional<int> t;
    int expected = 0;
    std::optional<int> got;
    ClaimStatus status = ClaimStatus::Skipped;
};

struct VerificationReport {
    std::vector<ClaimRecord> claims;

    int count(ClaimStatus s) const;
    bool passed() const { return count(ClaimStatus::Fail) == 0; }
};

// Checks every closed-form claim for K_{m,n} against the exhaustive solver
// and the constructions, for all n <= m <= max_m with n <= max_n. Results of
// budget-limited searches are reported as skipped.
VerificationReport verify_suite(int max_m, int max_n, const SearchBudget& budget = SearchBudget::defaults());

std::string to_string(ClaimStatus s);
std::string to_string(GameObjective o);

}  // namespace intspec
