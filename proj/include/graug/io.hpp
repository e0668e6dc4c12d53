#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graug/cones.hpp"
#include "graug/core.hpp"
#include "graug/equalsum.hpp"
#include "graug/multistage.hpp"
#include "graug/twostage.hpp"

namespace graug::io {

// line-oriented text formats; tokens are base-10 integers, blank lines and
// lines starting with '#' are skipped, serialization is canonical so that
// parse(serialize(x)) == x and serialize(parse(s)) == s on canonical input

struct parse_error : std::runtime_error {
    long line;
    parse_error(long line, const std::string& msg);
};

TwoStageInstance parse_twostage(std::istream& in);
std::string serialize(const TwoStageInstance& inst);

multistage::TreeInstance parse_tree(std::istream& in);
std::string serialize(const multistage::TreeInstance& t);

IntMatrix parse_matrix(std::istream& in);
std::string serialize(const IntMatrix& m);

std::vector<IntVec> parse_vectors(std::istream& in);
std::string serialize(const std::vector<IntVec>& vs);

cones::GeneratorSet parse_generators(std::istream& in);
std::string serialize(const cones::GeneratorSet& g);

std::vector<equalsum::VectorMultiset> parse_multisets(std::istream& in);
std::string serialize(const std::vector<equalsum::VectorMultiset>& sets);

// stable report text: no timestamps, no machine specifics
std::string render_report(const twostage::SolveReport& rep);

}  // namespace graug::io
