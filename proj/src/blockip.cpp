#include "graug/blockip.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace graug::blockip {

namespace {

struct Node {
    Int obj = 0;
    const Node* prev = nullptr;
    Int chosen = 0;
};

// prefixes have equal length; -1/0/1 like strcmp
int cmp_prefix(const Node* a, const Node* b) {
    if (a == b) return 0;
    int c = cmp_prefix(a->prev, b->prev);
    if (c != 0) return c;
    if (a->chosen != b->chosen) return a->chosen < b->chosen ? -1 : 1;
    return 0;
}

}  // namespace

std::optional<IntVec> solve_small_ip(const IntMatrix& m, const IntVec& rhs, const IntVec& lower,
                                     const IntVec& upper, const IntVec& objective,
                                     const Config& cfg) {
    if (int(rhs.size()) != m.rows) throw std::invalid_argument("solve_small_ip: rhs length");
    if (int(lower.size()) != m.cols || int(upper.size()) != m.cols ||
        int(objective.size()) != m.cols)
        throw std::invalid_argument("solve_small_ip: bound or objective length");
    for (int j = 0; j < m.cols; ++j)
        if (lower[j] > upper[j]) throw std::invalid_argument("solve_small_ip: lower > upper");

    if (m.cols == 0) {
        if (is_zero(rhs)) return IntVec{};
        return std::nullopt;
    }

    // per row, tightest possible contribution of variables j.. to the row sum
    std::vector<IntVec> min_rem(m.cols + 1, IntVec(m.rows, 0));
    std::vector<IntVec> max_rem(m.cols + 1, IntVec(m.rows, 0));
    for (int j = m.cols - 1; j >= 0; --j) {
        for (int r = 0; r < m.rows; ++r) {
            Int lo = checked_mul(m.at(r, j), lower[j]);
            Int hi = checked_mul(m.at(r, j), upper[j]);
            if (lo > hi) std::swap(lo, hi);
            min_rem[j][r] = checked_add(min_rem[j + 1][r], lo);
            max_rem[j][r] = checked_add(max_rem[j + 1][r], hi);
        }
    }

    std::deque<Node> arena;
    std::map<IntVec, const Node*> states;
    {
        IntVec zero(m.rows, 0);
        bool ok = true;
        for (int r = 0; r < m.rows && ok; ++r)
            ok = min_rem[0][r] <= rhs[r] && rhs[r] <= max_rem[0][r];
        if (!ok) return std::nullopt;
        arena.push_back(Node{});
        states.emplace(std::move(zero), &arena.back());
    }

    for (int j = 0; j < m.cols; ++j) {
        std::map<IntVec, const Node*> next;
        for (const auto& [partial, node] : states) {
            for (Int v = lower[j]; v <= upper[j]; ++v) {
                IntVec p = partial;
                bool ok = true;
                for (int r = 0; r < m.rows; ++r) {
                    p[r] = checked_add(p[r], checked_mul(m.at(r, j), v));
                    if (checked_add(p[r], min_rem[j + 1][r]) > rhs[r] ||
                        checked_add(p[r], max_rem[j + 1][r]) < rhs[r]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                Int obj = checked_add(node->obj, checked_mul(objective[j], v));
                auto it = next.find(p);
                if (it == next.end()) {
                    arena.push_back(Node{obj, node, v});
                    next.emplace(std::move(p), &arena.back());
                } else if (obj > it->second->obj ||
                           (obj == it->second->obj &&
                            [&] {
                                int c = cmp_prefix(node, it->second->prev);
                                return c < 0 || (c == 0 && v < it->second->chosen);
                            }())) {
                    arena.push_back(Node{obj, node, v});
                    it->second = &arena.back();
                }
            }
        }
        if ((long long)next.size() > cfg.max_states)
            throw budget_error("solve_small_ip: state budget exceeded");
        states = std::move(next);
        if (states.empty()) return std::nullopt;
    }

    auto it = states.find(rhs);
    if (it == states.end()) return std::nullopt;
    IntVec x(m.cols);
    const Node* node = it->second;
    for (int j = m.cols - 1; j >= 0; --j) {
        x[j] = node->chosen;
        node = node->prev;
    }
    return x;
}

std::optional<IntVec> feasible_point(const IntMatrix& m, const IntVec& rhs, const IntVec& lower,
                                     const IntVec& upper, const Config& cfg) {
    return solve_small_ip(m, rhs, lower, upper, IntVec(m.cols, 0), cfg);
}

}  // namespace graug::blockip
