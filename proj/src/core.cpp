#include "graug/core.hpp"

#include <stdexcept>

namespace graug {

IntVec matvec(const IntMatrix& m, const IntVec& x) {
    if (int(x.size()) != m.cols) throw std::invalid_argument("matvec: dimension mismatch");
    IntVec y(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        Int s = 0;
        for (int c = 0; c < m.cols; ++c) s = checked_add(s, checked_mul(m.at(r, c), x[c]));
        y[r] = s;
    }
    return y;
}

Int TwoStageInstance::delta() const {
    Int d = 0;
    for (const IntMatrix& m : a_blocks) d = std::max(d, m.max_abs());
    for (const IntMatrix& m : b_blocks) d = std::max(d, m.max_abs());
    return d;
}

std::vector<std::string> validate_instance(const TwoStageInstance& inst) {
    std::vector<std::string> bad;
    if (inst.n < 1) bad.push_back("n must be positive");
    if (inst.r < 1) bad.push_back("r must be positive");
    if (inst.s < 1) bad.push_back("s must be positive");
    if (inst.t < 1) bad.push_back("t must be positive");
    if (!bad.empty()) return bad;

    if (int(inst.a_blocks.size()) != inst.n) bad.push_back("expected n A-blocks");
    if (int(inst.b_blocks.size()) != inst.n) bad.push_back("expected n B-blocks");
    for (size_t i = 0; i < inst.a_blocks.size(); ++i) {
        const IntMatrix& m = inst.a_blocks[i];
        if (m.rows != inst.r || m.cols != inst.s || int(m.a.size()) != inst.r * inst.s)
            bad.push_back("A-block " + std::to_string(i) + " is not r x s");
    }
    for (size_t i = 0; i < inst.b_blocks.size(); ++i) {
        const IntMatrix& m = inst.b_blocks[i];
        if (m.rows != inst.r || m.cols != inst.t || int(m.a.size()) != inst.r * inst.t)
            bad.push_back("B-block " + std::to_string(i) + " is not r x t");
    }
    if (int(inst.rhs.size()) != inst.num_rows()) bad.push_back("rhs length must be n*r");
    if (int(inst.lower.size()) != inst.num_vars()) bad.push_back("lower length must be s+n*t");
    if (int(inst.upper.size()) != inst.num_vars()) bad.push_back("upper length must be s+n*t");
    if (int(inst.objective.size()) != inst.num_vars()) bad.push_back("objective length must be s+n*t");
    if (inst.lower.size() == inst.upper.size()) {
        for (size_t j = 0; j < inst.lower.size(); ++j)
            if (inst.lower[j] > inst.upper[j])
                bad.push_back("lower > upper at variable " + std::to_string(j));
    }
    return bad;
}

IntMatrix assemble_matrix(const TwoStageInstance& inst) {
    auto bad = validate_instance(inst);
    if (!bad.empty()) throw std::invalid_argument("assemble_matrix: " + bad.front());
    IntMatrix m(inst.n * inst.r, inst.s + inst.n * inst.t);
    for (int i = 0; i < inst.n; ++i) {
        for (int r = 0; r < inst.r; ++r) {
            for (int c = 0; c < inst.s; ++c) m.at(i * inst.r + r, c) = inst.a_blocks[i].at(r, c);
            for (int c = 0; c < inst.t; ++c)
                m.at(i * inst.r + r, inst.s + i * inst.t + c) = inst.b_blocks[i].at(r, c);
        }
    }
    return m;
}

IntVec residual(const TwoStageInstance& inst, const IntVec& x) {
    if (int(x.size()) != inst.num_vars()) throw std::invalid_argument("residual: x has wrong length");
    IntVec head(x.begin(), x.begin() + inst.s);
    IntVec res(inst.num_rows(), 0);
    for (int i = 0; i < inst.n; ++i) {
        IntVec tail(x.begin() + inst.s + i * inst.t, x.begin() + inst.s + (i + 1) * inst.t);
        IntVec ah = matvec(inst.a_blocks[i], head);
        IntVec bt = matvec(inst.b_blocks[i], tail);
        for (int r = 0; r < inst.r; ++r)
            res[i * inst.r + r] =
                checked_sub(checked_add(ah[r], bt[r]), inst.rhs[i * inst.r + r]);
    }
    return res;
}

}  // namespace graug
