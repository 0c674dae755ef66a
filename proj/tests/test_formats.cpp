#include "doctest.h"
#include "hc/formats.hpp"
#include "hc/random.hpp"
#include "hc/triangulations.hpp"
#include "support.hpp"

#include <filesystem>

using namespace hc;
using test::mat;

namespace {

std::string fixture(const std::string& name) { return std::string(HC_FIXTURES) + "/" + name; }

std::vector<std::filesystem::path> fixtures_with(const std::string& ext) {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(HC_FIXTURES))
        if (e.path().extension() == ext && e.path().stem() != "bad") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

// Message of the ParseError thrown by f.
template <typename F>
std::string parse_error(F f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "no error";
}

}  // namespace

TEST_CASE("complex format: parse, defaults, emit") {
    const auto c = parse_complex("format cplx 1\n# circle\nlength 1\ndims 3 3\n"
                                 "diff 0 [[\"-1\",\"1\",\"0\"],[\"-1\",\"0\",\"1\"],[\"0\",\"-1\",\"1\"]]\n");
    CHECK(c.length() == 1);
    CHECK(c.gram(0) == identity(3));
    CHECK(c.domain(1).is_full());
    CHECK(c.diff(0) == mat(3, 3, {-1, 1, 0, -1, 0, 1, 0, -1, 1}));
    CHECK(parse_complex(emit_complex(c)) == c);

    const auto p = parse_complex("format cplx 1\nlength 0\ndims 1\n");
    CHECK(p.length() == 0);
    CHECK(p.dim(0) == 1);
}

TEST_CASE("round trip of random complexes and pairs") {
    Generator gen(51);
    for (int t = 0; t < 100; ++t) {
        const auto c = gen.full_complex(gen.uniform(0, 4), 4, gen.coin(1, 2));
        const std::string text = emit_complex(c);
        CHECK(parse_complex(text) == c);
        CHECK(emit_complex(parse_complex(text)) == text);

        PairFile pf;
        pf.pair = gen.pair(gen.uniform(1, 4), 4, gen.coin(1, 2));
        const std::string ptext = emit_pair(pf);
        CHECK(same_pair_file(parse_pair(ptext), pf));
        CHECK(emit_pair(parse_pair(ptext)) == ptext);
    }
}

TEST_CASE("pair with link maps") {
    const auto pf = parse_pair(read_file(fixture("scaled.pair")), "scaled.pair");
    REQUIRE(pf.links.has_value());
    CHECK(pf.links->c == std::vector<Rational>{1});
    CHECK(check_related(pf.pair, *pf.links).related);
    CHECK(same_pair_file(parse_pair(emit_pair(pf)), pf));

    const auto missing = "format pair 1\nlength 1\ndims 1 1\ndiff 0 [[\"2\"]]\nphi 0 [[\"1\"]]\n";
    CHECK_THROWS_AS(parse_pair(missing), ValidationError);
}

TEST_CASE("strat format round trip and canonical form") {
    const auto in = parse_strat("format strat 1\nvertices 3\nsimplex 1 0 +\nsimplex 1 2 -\nsimplex 2 0 +\n");
    const auto canon = in.canonical();
    CHECK(canon.tops == std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(canon.signs == std::vector<int>{-1, -1, -1});
    CHECK(parse_strat(emit_strat(in)) == canon);

    const auto sigma = suspension_input(tri::torus7(), 7);
    CHECK(parse_strat(emit_strat(sigma)) == sigma.canonical());
}

TEST_CASE("every fixture survives parse and emit") {
    int seen = 0;
    for (const auto& path : fixtures_with(".cplx")) {
        const auto c = parse_complex(read_file(path.string()), path.filename().string());
        CHECK(parse_complex(emit_complex(c)) == c);
        ++seen;
    }
    for (const auto& path : fixtures_with(".pair")) {
        const auto p = parse_pair(read_file(path.string()), path.filename().string());
        CHECK(same_pair_file(parse_pair(emit_pair(p)), p));
        ++seen;
    }
    for (const auto& path : fixtures_with(".strat")) {
        const auto s = parse_strat(read_file(path.string()), path.filename().string());
        CHECK(parse_strat(emit_strat(s)) == s.canonical());
        CHECK(emit_strat(parse_strat(emit_strat(s))) == emit_strat(s));
        ++seen;
    }
    CHECK(seen >= 12);
}

TEST_CASE("errors carry line and column") {
    CHECK(parse_error([] { parse_complex("format cplx 2\n", "a.cplx"); }).rfind("a.cplx:1:", 0) == 0);
    CHECK(parse_error([] { parse_complex("length 1\n", "a.cplx"); }).rfind("a.cplx:1:1:", 0) == 0);
    CHECK(parse_error([] { parse_complex("format cplx 1\nlength 1\ndims 1 1\nbogus 3\n", "a.cplx"); })
              .rfind("a.cplx:4:1:", 0) == 0);
    CHECK(parse_error([] { parse_complex("format cplx 1\nlength 1\ndims 1 1\ndiff 0 [[\"1/0\"]]\n", "a.cplx"); })
              .rfind("a.cplx:4:", 0) == 0);
    CHECK(parse_error([] { parse_complex("format cplx 1\nlength 1\ndims 1 1\ndiff 0 [[\"1\",\"2\"]]\n", "a.cplx"); })
              .rfind("a.cplx:4:", 0) == 0);
    CHECK(parse_error([] { parse_complex("format cplx 1\nlength 2\ndims 1 1\n", "a.cplx"); }).rfind("a.cplx:3:", 0) == 0);
    CHECK(parse_error([] { parse_strat("format strat 1\nvertices 3\nsimplex 0 1 *\n", "s"); }).rfind("s:3:", 0) == 0);
    CHECK(parse_error([] { parse_strat("format strat 1\nvertices x\n", "s"); }).rfind("s:2:10:", 0) == 0);

    const std::string bad = parse_error([] { parse_complex(read_file(fixture("bad.cplx")), "bad.cplx"); });
    CHECK(bad.rfind("bad.cplx:4:", 0) == 0);
    CHECK_THROWS_AS(read_file(fixture("missing.cplx")), ValidationError);
}

TEST_CASE("a well-formed but invalid complex is a validation error") {
    const auto text = "format cplx 1\nlength 2\ndims 1 1 1\ndiff 0 [[\"1\"]]\ndiff 1 [[\"1\"]]\n";
    CHECK_THROWS_AS(require_valid(parse_complex(text)), ValidationError);
}
