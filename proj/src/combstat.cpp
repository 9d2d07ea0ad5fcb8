#include "qylag/combstat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qylag/qnum.hpp"
#include "qylag/laguerre.hpp"

namespace qylag {

int inv(const Word& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

int rl(const Word& w) {
    if (w.empty()) throw EmptyWord("rl: empty word");
    const auto max_it = std::max_element(w.begin(), w.end());
    return static_cast<int>(w.end() - max_it) - 1;
}

int ColoredPermutation::support_size() const {
    int total = 0;
    for (const auto& c : cycles) total += static_cast<int>(c.elements.size());
    return total;
}

int ListFamily::support_size() const {
    int total = 0;
    for (const auto& l : lists) total += static_cast<int>(l.size());
    return total;
}

int ListFamily::total_rl() const {
    int total = 0;
    for (const auto& l : lists) total += rl(l);
    return total;
}

ColoredCycle make_cycle(std::vector<int> elements, int color) {
    if (elements.empty()) throw std::invalid_argument("make_cycle: empty cycle");
    const auto max_it = std::max_element(elements.begin(), elements.end());
    std::rotate(elements.begin(), max_it, elements.end());
    return {std::move(elements), color};
}

LaguerreConfig make_config(int n, int alpha, std::vector<ColoredCycle> cycles,
                           std::vector<Word> lists) {
    for (auto& c : cycles) c = make_cycle(std::move(c.elements), c.color);
    std::sort(cycles.begin(), cycles.end(), [](const ColoredCycle& l, const ColoredCycle& r) {
        return std::make_pair(l.color, l.elements.front()) <
               std::make_pair(r.color, r.elements.front());
    });
    std::sort(lists.begin(), lists.end(), [](const Word& l, const Word& r) {
        return *std::min_element(l.begin(), l.end()) < *std::min_element(r.begin(), r.end());
    });

    std::set<int> support;
    for (const auto& c : cycles) {
        if (c.color < 0 || c.color > alpha)
            throw std::invalid_argument("make_config: cycle color out of range");
        for (int e : c.elements)
            if (!support.insert(e).second)
                throw std::invalid_argument("make_config: repeated element");
    }
    for (const auto& l : lists) {
        if (l.empty()) throw std::invalid_argument("make_config: empty list");
        for (int e : l)
            if (!support.insert(e).second)
                throw std::invalid_argument("make_config: repeated element");
    }
    if (static_cast<int>(support.size()) != n ||
        (!support.empty() && (*support.begin() < 1 || *support.rbegin() > n)))
        throw std::invalid_argument("make_config: support must be exactly [n]");
    return {n, alpha, {std::move(cycles)}, {std::move(lists)}};
}

ConfigWords config_words(const LaguerreConfig& c) {
    ConfigWords w;
    // Cycles arrive sorted by (color, max); writing each from its maximum
    // makes the per-color concatenation the word whose records mark cycle
    // starts, which is what the inverse reading relies on.
    int cycle_pos = 0;
    for (int color = 0; color <= c.alpha; ++color) {
        int block = 0;
        while (cycle_pos < c.sigma.cycle_count() &&
               c.sigma.cycles[static_cast<std::size_t>(cycle_pos)].color == color) {
            const auto& cyc = c.sigma.cycles[static_cast<std::size_t>(cycle_pos)];
            w.sigma_word.insert(w.sigma_word.end(), cyc.elements.begin(), cyc.elements.end());
            block += static_cast<int>(cyc.elements.size());
            ++cycle_pos;
        }
        w.binary_word.insert(w.binary_word.end(), static_cast<std::size_t>(block), 0);
        if (color < c.alpha) w.binary_word.push_back(1);
    }
    for (const auto& l : c.lambda.lists)
        w.lambda_word.insert(w.lambda_word.end(), l.begin(), l.end());
    return w;
}

MPoly config_weight(const LaguerreConfig& c) {
    const ConfigWords w = config_words(c);
    Word concat = w.sigma_word;
    concat.insert(concat.end(), w.lambda_word.begin(), w.lambda_word.end());
    const int total_rl = c.lambda.total_rl();
    Exponents e{};
    e[static_cast<std::size_t>(Var::y)] =
        static_cast<std::uint32_t>(static_cast<int>(w.sigma_word.size()) + total_rl);
    e[static_cast<std::size_t>(Var::q)] =
        static_cast<std::uint32_t>(inv(concat) - total_rl + inv(w.binary_word));
    return MPoly::monomial(e, 1);
}

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& domain,
                                        const std::vector<int>& image) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(domain.size(), false);
    for (std::size_t start = 0; start < domain.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        std::size_t pos = start;
        while (!seen[pos]) {
            seen[pos] = true;
            cycle.push_back(domain[pos]);
            const int next = image[pos];
            pos = static_cast<std::size_t>(
                std::lower_bound(domain.begin(), domain.end(), next) - domain.begin());
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// All partitions of `elements` (ascending) into exactly k non-empty blocks;
// blocks are created in order of their minima, so the canonical family order
// is the creation order.
void partitions_into_blocks(const std::vector<int>& elements, int k, std::size_t pos,
                            std::vector<std::vector<int>>& blocks,
                            const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const int remaining = static_cast<int>(elements.size() - pos);
    const int open = static_cast<int>(blocks.size());
    if (open + remaining < k || open > k) return;
    if (pos == elements.size()) {
        if (open == k) emit(blocks);
        return;
    }
    // index loop: the recursion below grows and shrinks `blocks`
    for (int b = 0; b < open; ++b) {
        blocks[static_cast<std::size_t>(b)].push_back(elements[pos]);
        partitions_into_blocks(elements, k, pos + 1, blocks, emit);
        blocks[static_cast<std::size_t>(b)].pop_back();
    }
    if (open < k) {
        blocks.push_back({elements[pos]});
        partitions_into_blocks(elements, k, pos + 1, blocks, emit);
        blocks.pop_back();
    }
}

void orderings_of_blocks(const std::vector<std::vector<int>>& blocks, std::size_t idx,
                         std::vector<Word>& lists,
                         const std::function<void(const std::vector<Word>&)>& emit) {
    if (idx == blocks.size()) {
        emit(lists);
        return;
    }
    Word word = blocks[idx];
    std::sort(word.begin(), word.end());
    do {
        lists.push_back(word);
        orderings_of_blocks(blocks, idx + 1, lists, emit);
        lists.pop_back();
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<ListFamily> list_families(const std::vector<int>& elements, int k) {
    std::vector<ListFamily> families;
    if (k == 0) {
        if (elements.empty()) families.push_back({});
        return families;
    }
    std::vector<std::vector<int>> blocks;
    partitions_into_blocks(elements, k, 0, blocks,
                           [&](const std::vector<std::vector<int>>& partition) {
                               std::vector<Word> lists;
                               orderings_of_blocks(partition, 0, lists,
                                                   [&](const std::vector<Word>& ordered) {
                                                       families.push_back({ordered});
                                                   });
                           });
    return families;
}

std::vector<ColoredPermutation> colored_permutations(const std::vector<int>& domain, int alpha) {
    std::vector<ColoredPermutation> perms;
    if (alpha < 0 && !domain.empty()) return perms;  // no color available for a cycle
    std::vector<int> image = domain;
    do {
        const auto raw_cycles = cycles_of(domain, image);
        const std::size_t cycle_count = raw_cycles.size();
        std::vector<int> colors(cycle_count, 0);
        while (true) {
            std::vector<ColoredCycle> cycles;
            cycles.reserve(cycle_count);
            for (std::size_t i = 0; i < cycle_count; ++i)
                cycles.push_back(make_cycle(raw_cycles[i], colors[i]));
            std::sort(cycles.begin(), cycles.end(),
                      [](const ColoredCycle& l, const ColoredCycle& r) {
                          return std::make_pair(l.color, l.elements.front()) <
                                 std::make_pair(r.color, r.elements.front());
                      });
            perms.push_back({std::move(cycles)});
            // mixed-radix increment over per-cycle colors
            std::size_t j = 0;
            while (j < cycle_count && colors[j] == alpha) colors[j++] = 0;
            if (j == cycle_count) break;
            ++colors[j];
        }
    } while (std::next_permutation(image.begin(), image.end()));
    return perms;
}

}  // namespace

void for_each_config(int n, int k, int alpha,
                     const std::function<void(const LaguerreConfig&)>& visit) {
    if (n < 0 || k < 0 || k > n || alpha < -1)
        throw std::invalid_argument("for_each_config: bad parameters");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> list_support, cycle_support;
        for (int v = 1; v <= n; ++v)
            ((mask >> (v - 1)) & 1u ? list_support : cycle_support).push_back(v);
        if (static_cast<int>(list_support.size()) < k) continue;
        if (k == 0 && !list_support.empty()) continue;
        if (alpha == -1 && !cycle_support.empty()) continue;

        const auto families = list_families(list_support, k);
        if (families.empty()) continue;
        const auto perms = colored_permutations(cycle_support, alpha);
        for (const auto& sigma : perms)
            for (const auto& lambda : families)
                visit({n, alpha, sigma, lambda});
    }
}

bool lemma1_check(int n, int alpha) {
    if (alpha < 0) throw std::invalid_argument("lemma1_check: alpha must be >= 0");
    MPoly sum;
    for_each_config(n, 0, alpha, [&](const LaguerreConfig& c) {
        const ConfigWords w = config_words(c);
        sum += var_pow(Var::q, static_cast<std::uint32_t>(inv(w.sigma_word) + inv(w.binary_word)));
    });
    return sum == q_factorial(n) * q_binomial(n + alpha, alpha);
}

bool lemma2_check(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lemma2_check: need 1 <= k <= n");
    MPoly sum;
    for_each_config(n, k, -1, [&](const LaguerreConfig& c) { sum += config_weight(c); });
    return sum == coeff_l(n, k, Alpha(-1));
}

PermStats perm_stats(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    PermStats stats{0, 0, 0};
    int running_max = 0;
    for (int i = 1; i <= n; ++i) {
        const int si = sigma[static_cast<std::size_t>(i - 1)];
        if (si >= i) ++stats.wex;
        if (si > running_max) {
            ++stats.rec;
            running_max = si;
        }
        for (int j = i + 1; j <= n; ++j) {
            const int sj = sigma[static_cast<std::size_t>(j - 1)];
            if (j <= si && si < sj) ++stats.cros;  // i < j <= s(i) < s(j)
            if (si < sj && sj < i) ++stats.cros;   // s(i) < s(j) < i < j, nested non-excedances
        }
    }
    return stats;
}

MPoly moments_bruteforce(int n) {
    MPoly sum;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        const PermStats s = perm_stats(sigma);
        Exponents e{};
        e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint32_t>(s.wex);
        e[static_cast<std::size_t>(Var::beta)] = static_cast<std::uint32_t>(s.rec);
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(s.cros);
        sum.add_term(e, 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

namespace {

// Right-to-left rank of `value` in `isolated` (ascending), then removal.
int take_rank(std::vector<int>& isolated, int value) {
    const auto it = std::find(isolated.begin(), isolated.end(), value);
    if (it == isolated.end()) throw std::logic_error("biane: partner not isolated");
    const int rank = static_cast<int>(isolated.end() - it);
    isolated.erase(it);
    return rank;
}

}  // namespace

LaguerreHistory biane_phi(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> sigma_inv(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = sigma[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > n || sigma_inv[static_cast<std::size_t>(v)] != 0)
            throw std::invalid_argument("biane_phi: not a permutation");
        sigma_inv[static_cast<std::size_t>(v)] = i;
    }
    LaguerreHistory h;
    std::vector<int> iso_top, iso_bottom;
    for (int i = 1; i <= n; ++i) {
        // step 2i-1: top vertex i, partner sigma(i)' at position 2 sigma(i)
        const int si = sigma[static_cast<std::size_t>(i - 1)];
        if (si >= i) {
            h.steps += 'u';
            h.xi.push_back(1);
            iso_top.push_back(i);
        } else {
            h.steps += 'd';
            h.xi.push_back(take_rank(iso_bottom, si));
        }
        // step 2i: bottom vertex i', partner sigma^{-1}(i) at position 2 sigma^{-1}(i) - 1
        const int pi = sigma_inv[static_cast<std::size_t>(i)];
        if (pi > i) {
            h.steps += 'u';
            h.xi.push_back(1);
            iso_bottom.push_back(i);
        } else {
            h.steps += 'd';
            h.xi.push_back(take_rank(iso_top, pi));
        }
    }
    return h;
}

namespace {

void validate_history(const LaguerreHistory& h) {
    if (h.steps.size() % 2 != 0 || h.steps.size() != h.xi.size())
        throw InvalidHistory("history: length mismatch");
    int height = 0;
    for (std::size_t i = 0; i < h.steps.size(); ++i) {
        const char s = h.steps[i];
        if (s == 'u') {
            if (h.xi[i] != 1) throw InvalidHistory("history: xi must be 1 on up steps");
            ++height;
        } else if (s == 'd') {
            const int bound = (height + 1) / 2;
            if (height == 0) throw InvalidHistory("history: step below height 0");
            if (h.xi[i] < 1 || h.xi[i] > bound)
                throw InvalidHistory("history: xi out of range on down step");
            --height;
        } else {
            throw InvalidHistory("history: steps must be 'u' or 'd'");
        }
    }
    if (height != 0) throw InvalidHistory("history: does not return to height 0");
}

}  // namespace

std::vector<int> biane_inverse(const LaguerreHistory& h) {
    validate_history(h);
    const int n = static_cast<int>(h.steps.size() / 2);
    std::vector<int> sigma(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> iso_top, iso_bottom;
    for (int i = 1; i <= n; ++i) {
        const std::size_t odd = static_cast<std::size_t>(2 * i - 2);
        const std::size_t even = static_cast<std::size_t>(2 * i - 1);
        if (h.steps[odd] == 'u') {
            iso_top.push_back(i);
        } else {
            const std::size_t m = static_cast<std::size_t>(h.xi[odd]);
            if (m > iso_bottom.size()) throw InvalidHistory("history: xi exceeds bottom row");
            const int j = iso_bottom[iso_bottom.size() - m];
            iso_bottom.erase(iso_bottom.end() - static_cast<std::ptrdiff_t>(m));
            sigma[static_cast<std::size_t>(i)] = j;
        }
        if (h.steps[even] == 'u') {
            iso_bottom.push_back(i);
        } else {
            const std::size_t m = static_cast<std::size_t>(h.xi[even]);
            if (m > iso_top.size()) throw InvalidHistory("history: xi exceeds top row");
            const int j = iso_top[iso_top.size() - m];
            iso_top.erase(iso_top.end() - static_cast<std::ptrdiff_t>(m));
            sigma[static_cast<std::size_t>(j)] = i;
        }
    }
    std::vector<int> one_line;
    one_line.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (sigma[static_cast<std::size_t>(i)] == 0)
            throw InvalidHistory("history: reconstruction left a gap");
        one_line.push_back(sigma[static_cast<std::size_t>(i)]);
    }
    return one_line;
}

namespace {

void history_rec(int total_steps, int height, LaguerreHistory& h,
                 const std::function<void(const LaguerreHistory&)>& visit) {
    const int pos = static_cast<int>(h.steps.size());
    if (pos == total_steps) {
        visit(h);
        return;
    }
    const int remaining = total_steps - pos;
    if (height + 1 <= remaining - 1) {
        h.steps += 'u';
        h.xi.push_back(1);
        history_rec(total_steps, height + 1, h, visit);
        h.steps.pop_back();
        h.xi.pop_back();
    }
    if (height > 0) {
        for (int m = 1; m <= (height + 1) / 2; ++m) {
            h.steps += 'd';
            h.xi.push_back(m);
            history_rec(total_steps, height - 1, h, visit);
            h.steps.pop_back();
            h.xi.pop_back();
        }
    }
}

}  // namespace

void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& visit) {
    LaguerreHistory h;
    history_rec(2 * n, 0, h, visit);
}

}  // namespace qylag
