#pragma once

// Labelled structures behind the polynomial coefficients and moments:
// colored cycle permutations paired with families of disjoint strict lists,
// their word statistics (inv, rl), permutation statistics (wex, rec, cros),
// and the Biane-style bijection from permutations to Laguerre histories.

#include <functional>
#include <string>
#include <vector>

#include "qylag/mpoly.hpp"

namespace qylag {

struct EmptyWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidHistory : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Strict list: a word over the positive integers with no repeated letter.
using Word = std::vector<int>;

/// Number of pairs i < j with w_i > w_j (letters compared as integers, so it
/// also serves the {0,1}-words, reading 1 > 0).
int inv(const Word& w);

/// Number of letters strictly after the maximum.  Throws EmptyWord.
int rl(const Word& w);

/// One cycle of a colored permutation, stored rotated so the maximum leads.
struct ColoredCycle {
    std::vector<int> elements;  // elements[i] maps to elements[i+1], last wraps
    int color;
};

/// Disjoint colored cycles, kept sorted by (color, maximum element).  The
/// per-color word sigma-hat is the concatenation of its cycles written from
/// their maxima in increasing order of maxima (records mark cycle starts).
struct ColoredPermutation {
    std::vector<ColoredCycle> cycles;

    int support_size() const;
    int cycle_count() const { return static_cast<int>(cycles.size()); }
};

/// Family of non-empty pairwise-disjoint strict lists, sorted by minimum.
struct ListFamily {
    std::vector<Word> lists;

    int support_size() const;
    int total_rl() const;
};

struct LaguerreConfig {
    int n;
    int alpha;
    ColoredPermutation sigma;
    ListFamily lambda;
};

/// Builds a canonical cycle: rotation to the maximum.
ColoredCycle make_cycle(std::vector<int> elements, int color);

/// Sorts cycles/lists into canonical order and checks the structural
/// invariants (disjoint supports covering [n], colors within [0, alpha]).
LaguerreConfig make_config(int n, int alpha, std::vector<ColoredCycle> cycles,
                           std::vector<Word> lists);

struct ConfigWords {
    Word sigma_word;                // sigma-hat_0 ... sigma-hat_alpha
    std::vector<int> binary_word;   // 0^{|s_0|} 1 0^{|s_1|} 1 ... 1 0^{|s_alpha|}
    Word lambda_word;               // lambda_1 ... lambda_k
};

ConfigWords config_words(const LaguerreConfig& c);

/// Monomial y^{|sigma_word| + rl(lambda)} q^{inv(sigma_word.lambda_word) - rl(lambda) + inv(binary_word)}.
MPoly config_weight(const LaguerreConfig& c);

/// Visits every configuration on [n] with k lists and cycle colors in
/// [0, alpha] exactly once, in a deterministic order.
void for_each_config(int n, int k, int alpha,
                     const std::function<void(const LaguerreConfig&)>& visit);

/// Sum of colored-permutation weights q^{inv(sigma_word) + inv(binary_word)}
/// over all colored permutations of [n] equals n!_q [n+alpha, alpha]_q.
bool lemma1_check(int n, int alpha);

/// Sum of list-family weights y^{rl} q^{inv - rl} over families of k lists
/// on [n] equals ell_{n,k}(y; q) at alpha = -1.
bool lemma2_check(int n, int k);

struct PermStats {
    int wex;
    int rec;
    int cros;
};

/// Weak excedances, records (left-to-right maxima) and crossings of a
/// permutation given in one-line notation (1-based values).
PermStats perm_stats(const std::vector<int>& sigma);

/// sum over S_n of beta^rec y^wex q^cros, beta kept symbolic.
MPoly moments_bruteforce(int n);

/// Dyck word plus choice sequence; xi_i = 1 on up steps and
/// 1 <= xi_i <= ceil(h_i / 2) on down steps (h_i = height before step i).
struct LaguerreHistory {
    std::string steps;  // over {'u', 'd'}, length 2n
    std::vector<int> xi;

    friend bool operator==(const LaguerreHistory& lhs, const LaguerreHistory& rhs) {
        return lhs.steps == rhs.steps && lhs.xi == rhs.xi;
    }
};

/// The bijection from permutations to Laguerre histories.  Column i of the
/// two-row vertex order (1, 1', 2, 2', ...) contributes steps 2i-1, 2i; a
/// step is 'u' when the matched partner has not arrived yet, 'd' when it
/// closes an edge, in which case xi is the partner's right-to-left rank
/// among the currently isolated vertices of its row.
LaguerreHistory biane_phi(const std::vector<int>& sigma);

/// Inverse reconstruction; throws InvalidHistory when h violates the
/// LaguerreHistory invariants.
std::vector<int> biane_inverse(const LaguerreHistory& h);

/// Visits every valid history of length 2n once.
void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& visit);

}  // namespace qylag
