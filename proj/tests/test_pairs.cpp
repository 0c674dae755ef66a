#include "doctest.h"
#include "hc/oracles.hpp"
#include "hc/pairs.hpp"
#include "hc/random.hpp"
#include "support.hpp"

using namespace hc;
using test::mat;
using test::q;

namespace {

// H_0 = Q, H_1 = Q^2, L_0 = (1,0)^T, V_0 = 0, V_1 = Q^2.
ComplexPair line_pair() {
    ComplexPair p;
    p.big = FiniteComplex::with_standard_grams({1, 2}, {mat(2, 1, {1, 0})});
    p.domains = {Subspace::zero(1), Subspace::full(2)};
    return p;
}

ComplexPair full_pair(const FiniteComplex& l) {
    ComplexPair p;
    p.big = l;
    p.domains = l.domains;
    return p;
}

std::vector<Index> image_dims(const ComplexPair& p) {
    std::vector<Index> out;
    for (const auto& d : image_cohomology(p).degrees) out.push_back(d.dim);
    return out;
}

std::vector<Index> harmonic_dims(const FiniteComplex& c) {
    std::vector<Index> out;
    for (const auto& d : cohomology(c).degrees) out.push_back(d.harmonic.dim());
    return out;
}

LinkMaps identity_links(int n, Index dim) {
    LinkMaps links;
    for (int i = 0; i <= n; ++i) links.phi.push_back(identity(dim));
    for (int i = 0; i < n; ++i) links.c.push_back(1);
    return links;
}

}  // namespace

TEST_CASE("image cohomology of the one-step example") {
    const auto p = line_pair();
    CHECK(image_dims(p) == std::vector<Index>{0, 1});
    CHECK(oracle::image_dims(p) == std::vector<Index>{0, 1});
    const auto r = image_cohomology(p);
    CHECK_FALSE(r.degrees[1].injective);
    CHECK(r.degrees[1].surjective);
    CHECK(r.euler() == -1);
}

TEST_CASE("image cohomology degenerate cases") {
    const auto l = FiniteComplex::with_standard_grams({3, 3}, {mat(3, 3, {-1, 1, 0, -1, 0, 1, 0, -1, 1})});
    CHECK(image_dims(full_pair(l)) == std::vector<Index>{1, 1});

    ComplexPair zero;
    zero.big = l;
    zero.domains = {Subspace::zero(3), Subspace::zero(3)};
    CHECK(image_dims(zero) == std::vector<Index>{0, 0});

    ComplexPair bad = zero;
    bad.domains = {Subspace::full(3), Subspace::zero(3)};
    CHECK_THROWS_AS(require_valid(bad), ValidationError);
}

TEST_CASE("link maps: related and complementary") {
    const auto zero = FiniteComplex::with_standard_grams({1, 1}, {mat(1, 1, {0})});
    auto links = identity_links(1, 1);
    auto rel = check_related(zero, zero, links);
    CHECK(rel.related);
    CHECK(rel.complementary);

    links.phi[0] = mat(1, 1, {3});
    rel = check_related(zero, zero, links);
    CHECK(rel.related);
    CHECK_FALSE(rel.complementary);

    const auto d = FiniteComplex::with_standard_grams({1, 1}, {mat(1, 1, {2})});
    const auto l = build_complementary(d, identity_links(1, 1));
    CHECK(l.diff(0) == mat(1, 1, {2}));
    CHECK(check_related(d, l, identity_links(1, 1)).related);
    CHECK(harmonic_dims(d) == std::vector<Index>{0, 0});
    CHECK(harmonic_dims(l) == std::vector<Index>{0, 0});

    const auto flat = FiniteComplex::with_standard_grams({2, 2, 2}, {zeros(2, 2), zeros(2, 2)});
    const auto lf = build_complementary(flat, identity_links(2, 2));
    CHECK(is_zero_matrix(lf.diff(0)));
    CHECK(is_zero_matrix(lf.diff(1)));

    auto singular = identity_links(1, 1);
    singular.phi[1] = mat(1, 1, {0});
    CHECK_THROWS(build_complementary(d, singular));
}

TEST_CASE("complementary construction mirrors harmonic dimensions") {
    Generator gen(21);
    for (int t = 0; t < 100; ++t) {
        const int n = gen.uniform(1, 4);
        const Index dim = gen.uniform(1, 4);
        std::vector<Index> dims(static_cast<size_t>(n) + 1, dim);
        const auto d = gen.full_complex(dims, false);
        LinkMaps links;
        for (int i = 0; i <= n; ++i) links.phi.push_back(gen.cayley_orthogonal(dim));
        for (int i = 0; i < n; ++i) links.c.push_back(1);
        const auto l = build_complementary(d, links);
        REQUIRE_FALSE(validate(l).has_value());
        const auto rel = check_related(d, l, links);
        CHECK(rel.related);
        CHECK(rel.complementary);
        const auto hd = harmonic_dims(d), hl = harmonic_dims(l);
        for (int j = 0; j <= n; ++j) CHECK(hd[static_cast<size_t>(j)] == hl[static_cast<size_t>(n - j)]);
    }
}

TEST_CASE("Friedrichs identities") {
    const auto fr = friedrichs_identities(line_pair());
    CHECK(fr.kernel_identity);
    CHECK(fr.range_equal);
    CHECK(fr.kernel.dim() == 1);
    CHECK(fr.expected[1] == Subspace::span(mat(2, 1, {0, 1})));
    CHECK(fr.expected[0].dim() == 0);

    Generator gen(22);
    for (int t = 0; t < 150; ++t) {
        const auto p = gen.pair(gen.uniform(1, 4), 5, gen.coin(1, 2));
        const auto r = friedrichs_identities(p);
        CHECK(r.kernel_identity);
    }
}

TEST_CASE("five splitting conditions agree") {
    const auto p = line_pair();
    CHECK(splitting_conditions(p, 0).agree());
    CHECK(splitting_conditions(p, 1).agree());

    const auto l = FiniteComplex::with_standard_grams({3, 3}, {mat(3, 3, {-1, 1, 0, -1, 0, 1, 0, -1, 1})});
    for (int i = 0; i <= 1; ++i) {
        const auto s = splitting_conditions(full_pair(l), i);
        for (bool b : s.holds) CHECK(b);
    }

    Generator gen(23);
    for (int t = 0; t < 200; ++t) {
        const auto r = gen.pair(gen.uniform(1, 4), 5, gen.coin(1, 2));
        for (int i = 0; i <= r.length(); ++i) CHECK(splitting_conditions(r, i).agree());
    }
}

TEST_CASE("harmonic projections and the image oracle on random pairs") {
    Generator gen(24);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen.pair(gen.uniform(1, 4), 6, gen.coin(1, 2));
        const auto r = image_cohomology(p);
        const auto oracle_dims = oracle::image_dims(p);
        for (int j = 0; j <= p.length(); ++j) {
            const auto& d = r.degrees[static_cast<size_t>(j)];
            CHECK(d.dim == oracle_dims[static_cast<size_t>(j)]);
            CHECK(d.harmonic_image.dim() == d.dim);
            const auto h = harmonic_projections(p, j);
            CHECK(h.mutually_adjoint);
            CHECK(h.vanishes_on_adjoint_range);
        }
    }
}

TEST_CASE("sandwich monotonicity") {
    Generator gen(25);
    for (int t = 0; t < 150; ++t) {
        const auto p = gen.pair(gen.uniform(1, 4), 5, gen.coin(1, 2));
        ComplexPair middle = p;
        middle.domains = gen.between(p);
        REQUIRE_NOTHROW(require_valid(middle));
        const auto inner = image_dims(p), outer = image_dims(middle);
        for (size_t j = 0; j < inner.size(); ++j) CHECK(inner[j] <= outer[j]);
    }
}
