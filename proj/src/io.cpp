#include "graug/io.hpp"

#include <charconv>
#include <sstream>
#include <utility>

#include "graug/ints.hpp"

namespace graug::io {

parse_error::parse_error(long line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}

namespace {

struct Reader {
    std::istream& in;
    long lineno = 0;

    bool next(std::vector<std::string>& toks) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            size_t at = line.find_first_not_of(" \t");
            if (at == std::string::npos || line[at] == '#') continue;
            toks.clear();
            std::istringstream ss(line);
            std::string t;
            while (ss >> t) toks.push_back(t);
            return true;
        }
        return false;
    }

    // payload tokens of a line that must start with the given keyword
    std::vector<std::string> take(const std::string& keyword) {
        std::vector<std::string> toks;
        if (!next(toks)) throw parse_error(lineno, "expected '" + keyword + "', got end of input");
        if (toks.front() != keyword)
            throw parse_error(lineno, "expected '" + keyword + "', got '" + toks.front() + "'");
        toks.erase(toks.begin());
        return toks;
    }

    void done() {
        std::vector<std::string> toks;
        if (next(toks)) throw parse_error(lineno, "unexpected trailing content");
    }

    Int integer(const std::string& tok) const {
        Int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw parse_error(lineno, "not an integer: '" + tok + "'");
        return v;
    }

    int count(const std::string& tok, const std::string& what) const {
        Int v = integer(tok);
        if (v < 0 || v > 1000000000) throw parse_error(lineno, "bad " + what + ": " + tok);
        return (int)v;
    }

    IntVec vec(const std::vector<std::string>& toks, size_t from, size_t n,
               const std::string& what) const {
        if (toks.size() != from + n)
            throw parse_error(lineno, what + ": expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(toks.size() - from));
        IntVec v;
        v.reserve(n);
        for (size_t i = from; i < toks.size(); ++i) v.push_back(integer(toks[i]));
        return v;
    }
};

void put(std::ostringstream& os, const IntVec& v) {
    for (Int x : v) os << " " << x;
}

}  // namespace

TwoStageInstance parse_twostage(std::istream& in) {
    Reader r{in};
    auto hd = r.take("twostage");
    if (hd.size() != 4) throw parse_error(r.lineno, "twostage header needs n r s t");
    TwoStageInstance inst;
    inst.n = r.count(hd[0], "block count");
    inst.r = r.count(hd[1], "rows per block");
    inst.s = r.count(hd[2], "shared columns");
    inst.t = r.count(hd[3], "block columns");
    if (inst.n < 1 || inst.r < 1 || inst.s < 1 || inst.t < 1)
        throw parse_error(r.lineno, "twostage dimensions must be positive");

    for (int i = 0; i < inst.n; ++i) {
        auto toks = r.take("a_block");
        inst.a_blocks.emplace_back(inst.r, inst.s,
                                   r.vec(toks, 0, (size_t)inst.r * inst.s, "a_block"));
    }
    for (int i = 0; i < inst.n; ++i) {
        auto toks = r.take("b_block");
        inst.b_blocks.emplace_back(inst.r, inst.t,
                                   r.vec(toks, 0, (size_t)inst.r * inst.t, "b_block"));
    }
    inst.rhs = r.vec(r.take("rhs"), 0, (size_t)inst.num_rows(), "rhs");
    inst.lower = r.vec(r.take("lower"), 0, (size_t)inst.num_vars(), "lower");
    inst.upper = r.vec(r.take("upper"), 0, (size_t)inst.num_vars(), "upper");
    inst.objective = r.vec(r.take("objective"), 0, (size_t)inst.num_vars(), "objective");
    r.done();

    auto errs = validate_instance(inst);
    if (!errs.empty()) throw parse_error(r.lineno, errs.front());
    return inst;
}

std::string serialize(const TwoStageInstance& inst) {
    std::ostringstream os;
    os << "twostage " << inst.n << " " << inst.r << " " << inst.s << " " << inst.t << "\n";
    for (const IntMatrix& m : inst.a_blocks) {
        os << "a_block";
        put(os, m.a);
        os << "\n";
    }
    for (const IntMatrix& m : inst.b_blocks) {
        os << "b_block";
        put(os, m.a);
        os << "\n";
    }
    os << "rhs";
    put(os, inst.rhs);
    os << "\nlower";
    put(os, inst.lower);
    os << "\nupper";
    put(os, inst.upper);
    os << "\nobjective";
    put(os, inst.objective);
    os << "\n";
    return os.str();
}

multistage::TreeInstance parse_tree(std::istream& in) {
    Reader r{in};
    auto hd = r.take("tree");
    if (hd.size() != 3) throw parse_error(r.lineno, "tree header needs nrows ncols nblocks");
    multistage::TreeInstance t;
    t.nrows = r.count(hd[0], "row count");
    t.ncols = r.count(hd[1], "column count");
    int nblocks = r.count(hd[2], "block count");
    if (t.nrows < 1 || t.ncols < 1 || nblocks < 1)
        throw parse_error(r.lineno, "tree dimensions must be positive");

    for (int i = 0; i < nblocks; ++i) {
        auto toks = r.take("block");
        if (toks.size() < 5) throw parse_error(r.lineno, "block line needs parent and intervals");
        multistage::TreeBlock b;
        Int parent = r.integer(toks[0]);
        if (parent < -1 || parent >= nblocks) throw parse_error(r.lineno, "bad parent index");
        b.parent = (int)parent;
        b.row_lo = r.count(toks[1], "row_lo");
        b.row_hi = r.count(toks[2], "row_hi");
        b.col_lo = r.count(toks[3], "col_lo");
        b.col_hi = r.count(toks[4], "col_hi");
        if (b.row_hi <= b.row_lo || b.col_hi <= b.col_lo)
            throw parse_error(r.lineno, "bad block intervals");
        b.mat = IntMatrix(b.nrows(), b.ncols(),
                          r.vec(toks, 5, (size_t)b.nrows() * (size_t)b.ncols(), "block entries"));
        t.blocks.push_back(std::move(b));
    }
    t.rhs = r.vec(r.take("rhs"), 0, (size_t)t.nrows, "rhs");
    t.lower = r.vec(r.take("lower"), 0, (size_t)t.ncols, "lower");
    t.upper = r.vec(r.take("upper"), 0, (size_t)t.ncols, "upper");
    t.objective = r.vec(r.take("objective"), 0, (size_t)t.ncols, "objective");
    r.done();

    auto errs = multistage::validate_shape(t);
    if (!errs.empty()) throw parse_error(r.lineno, errs.front());
    return t;
}

std::string serialize(const multistage::TreeInstance& t) {
    std::ostringstream os;
    os << "tree " << t.nrows << " " << t.ncols << " " << t.blocks.size() << "\n";
    for (const multistage::TreeBlock& b : t.blocks) {
        os << "block " << b.parent << " " << b.row_lo << " " << b.row_hi << " " << b.col_lo << " "
           << b.col_hi;
        put(os, b.mat.a);
        os << "\n";
    }
    os << "rhs";
    put(os, t.rhs);
    os << "\nlower";
    put(os, t.lower);
    os << "\nupper";
    put(os, t.upper);
    os << "\nobjective";
    put(os, t.objective);
    os << "\n";
    return os.str();
}

IntMatrix parse_matrix(std::istream& in) {
    Reader r{in};
    auto hd = r.take("matrix");
    if (hd.size() != 2) throw parse_error(r.lineno, "matrix header needs rows cols");
    int rows = r.count(hd[0], "row count");
    int cols = r.count(hd[1], "column count");
    if (rows < 1 || cols < 1) throw parse_error(r.lineno, "matrix dimensions must be positive");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        std::vector<std::string> toks;
        if (!r.next(toks)) throw parse_error(r.lineno, "missing matrix row");
        IntVec row = r.vec(toks, 0, (size_t)cols, "matrix row");
        for (int c = 0; c < cols; ++c) m.at(i, c) = row[(size_t)c];
    }
    r.done();
    return m;
}

std::string serialize(const IntMatrix& m) {
    std::ostringstream os;
    os << "matrix " << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int c = 0; c < m.cols; ++c) os << (c ? " " : "") << m.at(i, c);
        os << "\n";
    }
    return os.str();
}

std::vector<IntVec> parse_vectors(std::istream& in) {
    Reader r{in};
    auto hd = r.take("vectors");
    if (hd.size() != 2) throw parse_error(r.lineno, "vectors header needs count dim");
    int n = r.count(hd[0], "vector count");
    int d = r.count(hd[1], "dimension");
    if (d < 1) throw parse_error(r.lineno, "dimension must be positive");
    std::vector<IntVec> vs;
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> toks;
        if (!r.next(toks)) throw parse_error(r.lineno, "missing vector line");
        vs.push_back(r.vec(toks, 0, (size_t)d, "vector"));
    }
    r.done();
    return vs;
}

std::string serialize(const std::vector<IntVec>& vs) {
    std::ostringstream os;
    os << "vectors " << vs.size() << " " << (vs.empty() ? 1 : vs.front().size()) << "\n";
    for (const IntVec& v : vs) {
        for (size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << v[c];
        os << "\n";
    }
    return os.str();
}

cones::GeneratorSet parse_generators(std::istream& in) {
    Reader r{in};
    auto hd = r.take("generators");
    if (hd.size() != 2) throw parse_error(r.lineno, "generators header needs count dim");
    int n = r.count(hd[0], "generator count");
    int d = r.count(hd[1], "dimension");
    if (d < 1) throw parse_error(r.lineno, "dimension must be positive");
    std::vector<IntVec> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> toks;
        if (!r.next(toks)) throw parse_error(r.lineno, "missing generator line");
        gens.push_back(r.vec(toks, 0, (size_t)d, "generator"));
    }
    r.done();
    try {
        return cones::make_generator_set(d, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw parse_error(r.lineno, e.what());
    }
}

std::string serialize(const cones::GeneratorSet& g) {
    std::ostringstream os;
    os << "generators " << g.gens.size() << " " << g.dim << "\n";
    for (const IntVec& v : g.gens) {
        for (size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << v[c];
        os << "\n";
    }
    return os.str();
}

std::vector<equalsum::VectorMultiset> parse_multisets(std::istream& in) {
    Reader r{in};
    auto hd = r.take("multisets");
    if (hd.size() != 2) throw parse_error(r.lineno, "multisets header needs count dim");
    int n = r.count(hd[0], "multiset count");
    int d = r.count(hd[1], "dimension");
    if (n < 1 || d < 1) throw parse_error(r.lineno, "multisets dimensions must be positive");
    std::vector<equalsum::VectorMultiset> sets;
    for (int i = 0; i < n; ++i) {
        auto st = r.take("set");
        if (st.size() != 1) throw parse_error(r.lineno, "set header needs a line count");
        int k = r.count(st[0], "distinct vector count");
        equalsum::VectorMultiset ms;
        ms.dim = d;
        for (int j = 0; j < k; ++j) {
            std::vector<std::string> toks;
            if (!r.next(toks)) throw parse_error(r.lineno, "missing multiset line");
            if (toks.empty()) throw parse_error(r.lineno, "empty multiset line");
            Int mult = r.integer(toks[0]);
            if (mult < 1) throw parse_error(r.lineno, "multiplicity must be positive");
            IntVec v = r.vec(toks, 1, (size_t)d, "multiset vector");
            if (!ms.counts.emplace(std::move(v), mult).second)
                throw parse_error(r.lineno, "repeated vector in multiset");
        }
        sets.push_back(std::move(ms));
    }
    r.done();
    return sets;
}

std::string serialize(const std::vector<equalsum::VectorMultiset>& sets) {
    std::ostringstream os;
    int d = sets.empty() ? 1 : sets.front().dim;
    os << "multisets " << sets.size() << " " << d << "\n";
    for (const equalsum::VectorMultiset& ms : sets) {
        os << "set " << ms.counts.size() << "\n";
        for (const auto& [v, mult] : ms.counts) {
            os << mult;
            put(os, v);
            os << "\n";
        }
    }
    return os.str();
}

std::string render_report(const twostage::SolveReport& rep) {
    std::ostringstream os;
    os << "status " << twostage::to_string(rep.status) << "\n";
    os << "iterations " << rep.iterations << "\n";
    os << "augmentations " << rep.augmentations.size() << "\n";
    for (const twostage::Augmentation& a : rep.augmentations) {
        os << "augment " << a.lambda << " " << a.gain;
        put(os, a.head);
        os << "\n";
    }
    if (!rep.solution.empty()) {
        os << "objective " << rep.objective << "\n";
        os << "solution";
        put(os, rep.solution);
        os << "\n";
    }
    return os.str();
}

}  // namespace graug::io
