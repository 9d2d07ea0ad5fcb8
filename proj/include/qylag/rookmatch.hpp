#pragma once

// Rook-placement and matching models: colored two-part boards carrying
// maximal non-attacking placements with statistics cw/cd/inv/ind, the
// word bijection between configurations and placements, matchings of
// complete bipartite graphs, and the classical identities tying both
// models to the Laguerre coefficients.

#include <utility>
#include <vector>

#include "qylag/combstat.hpp"
#include "qylag/mpoly.hpp"

namespace qylag {

struct CellOutsideBoard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Cells as (row, column), rows top-to-bottom, columns left-to-right.
struct RookPlacement {
    std::vector<std::pair<int, int>> cells;
};

/// Uncrossed-cell count on the Ferrers board whose j-th column holds rows
/// 1..shape[j-1]: each rook crosses its own cell, everything strictly below
/// it in its column and strictly to its right in its row.
int inv_rook(const std::vector<int>& shape, const RookPlacement& placement);

/// n x n square split into column blocks: m[i] columns of color i (i <= alpha)
/// followed by the k list blocks of widths nn[j].
struct ColoredBoard {
    int n;
    std::vector<int> m;   // alpha + 1 entries, each >= 0 (empty for alpha = -1)
    std::vector<int> nn;  // k entries, each >= 1
};

/// Board plus a maximal (n-rook) placement; valid configurations also have
/// strictly increasing minimum row indices across the nn-blocks.
struct ColoredRookConfig {
    ColoredBoard board;
    RookPlacement placement;
};

struct RookStats {
    int cw;   // sum m_i
    int cd;   // sum i * m_i
    int inv;  // inv_rook over the full n x n square
    int ind;  // per nn-block: rooks right of the block's bottom-most rook
};

RookStats stats_rook(const ColoredRookConfig& r);

/// Is the placement maximal, non-attacking, and block-minima increasing?
bool valid_rook_config(const ColoredRookConfig& r);

/// Word bijection: column j gets a rook in row w_j where w is the
/// concatenation sigma-hat_0 ... sigma-hat_alpha lambda_1 ... lambda_k.
ColoredRookConfig phi_config_to_rook(const LaguerreConfig& c);

/// Inverse reading: block words are cut back out of the placement, cycle
/// words decoded at their left-to-right maxima.
LaguerreConfig rook_to_config(const ColoredRookConfig& r);

/// Aggregate identity: sum over colored rook configurations of
/// y^{cw+ind} q^{inv+cd-ind} equals ell_{n,k}(y; q).
bool theorem_rook_check(int n, int k, int alpha);

/// Matching of a complete bipartite graph; an edge (a, b) stands for the
/// pair (a, b') between top vertex a in [n] and bottom vertex b'.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // sorted by a

    friend bool operator==(const Matching& lhs, const Matching& rhs) {
        return lhs.edges == rhs.edges;
    }
    friend bool operator<(const Matching& lhs, const Matching& rhs) {
        return lhs.edges < rhs.edges;
    }
};

/// Edges: sigma_0-images, consecutive letters of the sentinel-terminated
/// word sigma-hat_1 (n+1) ... sigma-hat_alpha (n+alpha), and consecutive
/// letters inside each list; n - k edges total.
Matching config_to_matching(const LaguerreConfig& c);

/// Number of k-edge matchings of K_{n,m} = C(n,k) C(m,k) k!.
Int matching_count(int n, int m_vertices, int k_edges);

/// alpha(K_{n,n+alpha}, x) = x^alpha L_n(x^2) for the classical signed
/// Laguerre polynomial, compared coefficient by coefficient.
bool matching_identity_check(int n, int alpha);

/// Brute-force count of configurations (colors included) against the
/// classical closed form n!/k! C(n+alpha, n-k).
bool foata_strehl_check(int n, int k, int alpha);

}  // namespace qylag
