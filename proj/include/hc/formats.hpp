#pragma once

#include "hc/errors.hpp"
#include "hc/pairs.hpp"
#include "hc/stratified.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hc {

/// Malformed input; the message starts with "name:line:column:".
struct ParseError : ValidationError {
    ParseError(const std::string& source, int line, int column, const std::string& what);
    int line;
    int column;
};

/// Line-oriented text formats. Blank lines and lines starting with '#' are
/// ignored. Matrices are JSON arrays of rows of "p/q" strings; domains are JSON
/// arrays of basis vectors.
///
///   format cplx 1          format pair 1            format strat 1
///   length 2               (a cplx body for L)      vertices 4
///   dims 1 2 1             domain 1 [["1","0"]]     simplex 0 1 2 +
///   gram 1 [[...],[...]]   phi 0 [[...]]            stratum a 0
///   diff 0 [["1"],["0"]]   constant 0 1/2           label 3 a
///   domain 1 [["1","0"]]                            weight a 1/2
///
/// In a pair file the domains belong to D; L always has full domains.
/// Omitted grams are the identity, omitted differentials are zero and omitted
/// domains are the full space.

struct PairFile {
    ComplexPair pair;
    std::optional<LinkMaps> links;
};

FiniteComplex parse_complex(std::string_view text, const std::string& source = "<input>");
PairFile parse_pair(std::string_view text, const std::string& source = "<input>");
StratifiedInput parse_strat(std::string_view text, const std::string& source = "<input>");

std::string emit_complex(const FiniteComplex& c);
std::string emit_pair(const PairFile& p);
/// Emits the canonical form (sorted simplices, folded signs).
std::string emit_strat(const StratifiedInput& s);

bool same_pair_file(const PairFile& a, const PairFile& b);

/// Whole file contents; throws ValidationError if unreadable.
std::string read_file(const std::string& path);

}  // namespace hc
