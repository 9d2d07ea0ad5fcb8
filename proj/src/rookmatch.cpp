#include "qylag/rookmatch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qylag/laguerre.hpp"
#include "qylag/qnum.hpp"

namespace qylag {

int inv_rook(const std::vector<int>& shape, const RookPlacement& placement) {
    const int cols = static_cast<int>(shape.size());
    std::set<int> used_rows, used_cols;
    for (const auto& [row, col] : placement.cells) {
        if (col < 1 || col > cols || row < 1 || row > shape[static_cast<std::size_t>(col - 1)])
            throw CellOutsideBoard("inv_rook: rook outside the board");
        if (!used_rows.insert(row).second || !used_cols.insert(col).second)
            throw std::invalid_argument("inv_rook: attacking rooks");
    }
    // rook_in_col[c] = row of the rook in column c (0 if none), same per row
    std::map<int, int> rook_in_col, rook_in_row;
    for (const auto& [row, col] : placement.cells) {
        rook_in_col[col] = row;
        rook_in_row[row] = col;
    }
    int uncrossed = 0;
    for (int c = 1; c <= cols; ++c) {
        for (int r = 1; r <= shape[static_cast<std::size_t>(c - 1)]; ++r) {
            const auto col_it = rook_in_col.find(c);
            if (col_it != rook_in_col.end() && col_it->second <= r) continue;
            const auto row_it = rook_in_row.find(r);
            if (row_it != rook_in_row.end() && row_it->second <= c) continue;
            ++uncrossed;
        }
    }
    return uncrossed;
}

namespace {

std::vector<int> placement_word(const ColoredRookConfig& r) {
    // w_j = row of the rook in column j; requires a maximal placement.
    std::vector<int> w(static_cast<std::size_t>(r.board.n), 0);
    for (const auto& [row, col] : r.placement.cells) {
        if (col < 1 || col > r.board.n || row < 1 || row > r.board.n)
            throw CellOutsideBoard("placement: rook outside the square");
        if (w[static_cast<std::size_t>(col - 1)] != 0)
            throw std::invalid_argument("placement: two rooks share a column");
        w[static_cast<std::size_t>(col - 1)] = row;
    }
    for (int v : w)
        if (v == 0) throw std::invalid_argument("placement: not maximal");
    return w;
}

std::vector<int> block_minima(const ColoredBoard& board, const std::vector<int>& w) {
    std::vector<int> minima;
    int offset = 0;
    for (int mi : board.m) offset += mi;
    for (int width : board.nn) {
        int lowest = board.n + 1;
        for (int j = offset; j < offset + width; ++j)
            lowest = std::min(lowest, w[static_cast<std::size_t>(j)]);
        minima.push_back(lowest);
        offset += width;
    }
    return minima;
}

}  // namespace

bool valid_rook_config(const ColoredRookConfig& r) {
    int total = 0;
    for (int mi : r.board.m) {
        if (mi < 0) return false;
        total += mi;
    }
    for (int ni : r.board.nn) {
        if (ni < 1) return false;
        total += ni;
    }
    if (total != r.board.n) return false;
    std::vector<int> w;
    try {
        w = placement_word(r);
    } catch (const std::exception&) {
        return false;
    }
    std::set<int> rows(w.begin(), w.end());
    if (static_cast<int>(rows.size()) != r.board.n) return false;
    const auto minima = block_minima(r.board, w);
    for (std::size_t i = 1; i < minima.size(); ++i)
        if (minima[i - 1] >= minima[i]) return false;
    return true;
}

RookStats stats_rook(const ColoredRookConfig& r) {
    RookStats stats{0, 0, 0, 0};
    for (std::size_t i = 0; i < r.board.m.size(); ++i) {
        stats.cw += r.board.m[i];
        stats.cd += static_cast<int>(i) * r.board.m[i];
    }
    const std::vector<int> square(static_cast<std::size_t>(r.board.n), r.board.n);
    stats.inv = inv_rook(square, r.placement);
    const auto w = placement_word(r);
    int offset = 0;
    for (int mi : r.board.m) offset += mi;
    for (int width : r.board.nn) {
        int max_row = 0, max_col = 0;
        for (int j = offset; j < offset + width; ++j) {
            if (w[static_cast<std::size_t>(j)] > max_row) {
                max_row = w[static_cast<std::size_t>(j)];
                max_col = j;
            }
        }
        stats.ind += offset + width - 1 - max_col;  // rooks right of the bottom-most one
        offset += width;
    }
    return stats;
}

ColoredRookConfig phi_config_to_rook(const LaguerreConfig& c) {
    ColoredRookConfig r;
    r.board.n = c.n;
    if (c.alpha >= 0) {
        r.board.m.assign(static_cast<std::size_t>(c.alpha) + 1, 0);
        for (const auto& cyc : c.sigma.cycles)
            r.board.m[static_cast<std::size_t>(cyc.color)] +=
                static_cast<int>(cyc.elements.size());
    }
    for (const auto& l : c.lambda.lists) r.board.nn.push_back(static_cast<int>(l.size()));
    const ConfigWords words = config_words(c);
    Word w = words.sigma_word;
    w.insert(w.end(), words.lambda_word.begin(), words.lambda_word.end());
    for (int j = 1; j <= c.n; ++j)
        r.placement.cells.emplace_back(w[static_cast<std::size_t>(j - 1)], j);
    return r;
}

namespace {

// Foata decoding: cycle starts are the left-to-right maxima of the word.
std::vector<ColoredCycle> cycles_from_word(const Word& word, int color) {
    std::vector<ColoredCycle> cycles;
    std::size_t start = 0;
    while (start < word.size()) {
        std::size_t end = start + 1;
        while (end < word.size() && word[end] < word[start]) ++end;
        cycles.push_back({Word(word.begin() + static_cast<std::ptrdiff_t>(start),
                               word.begin() + static_cast<std::ptrdiff_t>(end)),
                          color});
        start = end;
    }
    return cycles;
}

}  // namespace

LaguerreConfig rook_to_config(const ColoredRookConfig& r) {
    const auto w = placement_word(r);
    std::vector<ColoredCycle> cycles;
    std::vector<Word> lists;
    int offset = 0;
    for (std::size_t color = 0; color < r.board.m.size(); ++color) {
        const Word word(w.begin() + offset, w.begin() + offset + r.board.m[color]);
        auto decoded = cycles_from_word(word, static_cast<int>(color));
        cycles.insert(cycles.end(), decoded.begin(), decoded.end());
        offset += r.board.m[color];
    }
    for (int width : r.board.nn) {
        lists.emplace_back(w.begin() + offset, w.begin() + offset + width);
        offset += width;
    }
    const int alpha = static_cast<int>(r.board.m.size()) - 1;
    return make_config(r.board.n, alpha, std::move(cycles), std::move(lists));
}

namespace {

// Weak compositions of total into `parts` non-negative entries.
void weak_compositions(int total, int parts, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(current);
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        weak_compositions(total - first, parts - 1, current, emit);
        current.pop_back();
    }
}

// Compositions of total into `parts` positive entries.
void positive_compositions(int total, int parts, std::vector<int>& current,
                           const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(current);
        return;
    }
    for (int first = 1; first + (parts - 1) <= total; ++first) {
        current.push_back(first);
        positive_compositions(total - first, parts - 1, current, emit);
        current.pop_back();
    }
}

}  // namespace

bool theorem_rook_check(int n, int k, int alpha) {
    if (n < 0 || k < 0 || k > n || alpha < -1)
        throw std::invalid_argument("theorem_rook_check: bad parameters");
    MPoly sum;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    const auto add_board = [&](const ColoredBoard& board) {
        std::vector<int> perm = w;
        do {
            ColoredRookConfig r{board, {}};
            for (int j = 1; j <= n; ++j)
                r.placement.cells.emplace_back(perm[static_cast<std::size_t>(j - 1)], j);
            const auto minima = block_minima(board, perm);
            bool increasing = true;
            for (std::size_t i = 1; i < minima.size(); ++i)
                if (minima[i - 1] >= minima[i]) {
                    increasing = false;
                    break;
                }
            if (!increasing) continue;
            const RookStats s = stats_rook(r);
            Exponents e{};
            e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint32_t>(s.cw + s.ind);
            e[static_cast<std::size_t>(Var::q)] =
                static_cast<std::uint32_t>(s.inv + s.cd - s.ind);
            sum.add_term(e, 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    std::vector<int> colored;
    for (int s = 0; s <= n; ++s) {
        if (alpha == -1 && s > 0) continue;
        std::vector<int> list_part;
        positive_compositions(n - s, k, list_part, [&](const std::vector<int>& nn) {
            if (alpha == -1) {
                add_board({n, {}, nn});
                return;
            }
            std::vector<int> m_part;
            weak_compositions(s, alpha + 1, m_part, [&](const std::vector<int>& m) {
                add_board({n, m, nn});
            });
        });
    }
    return sum == coeff_l(n, k, Alpha(alpha));
}

Matching config_to_matching(const LaguerreConfig& c) {
    Matching gamma;
    // (1) images under the color-0 permutation
    for (const auto& cyc : c.sigma.cycles) {
        if (cyc.color != 0) continue;
        const auto& e = cyc.elements;
        for (std::size_t i = 0; i < e.size(); ++i)
            gamma.edges.emplace_back(e[i], e[(i + 1) % e.size()]);
    }
    // (2) consecutive letters of sigma-hat_1 (n+1) sigma-hat_2 (n+2) ...,
    //     keeping only pairs whose first letter lies in [n]
    if (c.alpha >= 1) {
        Word word;
        int cycle_pos = 0;
        while (cycle_pos < c.sigma.cycle_count() &&
               c.sigma.cycles[static_cast<std::size_t>(cycle_pos)].color == 0)
            ++cycle_pos;
        for (int color = 1; color <= c.alpha; ++color) {
            while (cycle_pos < c.sigma.cycle_count() &&
                   c.sigma.cycles[static_cast<std::size_t>(cycle_pos)].color == color) {
                const auto& e = c.sigma.cycles[static_cast<std::size_t>(cycle_pos)].elements;
                word.insert(word.end(), e.begin(), e.end());
                ++cycle_pos;
            }
            word.push_back(c.n + color);
        }
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] <= c.n) gamma.edges.emplace_back(word[i], word[i + 1]);
    }
    // (3) consecutive letters inside each list
    for (const auto& l : c.lambda.lists)
        for (std::size_t i = 0; i + 1 < l.size(); ++i)
            gamma.edges.emplace_back(l[i], l[i + 1]);
    std::sort(gamma.edges.begin(), gamma.edges.end());
    return gamma;
}

Int matching_count(int n, int m_vertices, int k_edges) {
    return binomial(n, k_edges) * binomial(m_vertices, k_edges) * factorial(k_edges);
}

bool matching_identity_check(int n, int alpha) {
    if (n < 0 || alpha < -1)
        throw std::invalid_argument("matching_identity_check: bad parameters");
    // Both sides as exponent -> coefficient maps; zero terms never enter, so
    // the nominal x^{-1} term at alpha = -1 (whose count C(n-1, n) vanishes)
    // never materializes.
    std::map<int, Int> lhs, rhs;
    for (int k = 0; 2 * k <= 2 * n + alpha; ++k) {
        const Int count = matching_count(n, n + alpha, k);
        if (count == 0) continue;
        lhs[2 * n + alpha - 2 * k] = (k % 2 == 0) ? count : Int(-count);
    }
    for (int j = 0; j <= n; ++j) {
        const Int coeff = (factorial(n) / factorial(j)) * binomial(n + alpha, n - j);
        if (coeff == 0) continue;
        rhs[2 * j + alpha] = ((n - j) % 2 == 0) ? coeff : Int(-coeff);
    }
    return lhs == rhs;
}

bool foata_strehl_check(int n, int k, int alpha) {
    Int count = 0;
    for_each_config(n, k, alpha, [&](const LaguerreConfig&) { ++count; });
    return count == (factorial(n) / factorial(k)) * binomial(n + alpha, n - k);
}

}  // namespace qylag
