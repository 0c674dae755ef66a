#include "hc/pairs.hpp"

namespace hc {

FiniteComplex ComplexPair::small() const {
    FiniteComplex d = big;
    d.domains = domains;
    return d;
}

void require_valid(const ComplexPair& p) {
    require_valid(p.big);
    if (!p.big.full_domains()) throw ValidationError("the larger complex of a pair must have full domains");
    if (static_cast<int>(p.domains.size()) != p.length() + 1)
        throw ValidationError("pair needs one domain subspace per degree");
    for (int i = 0; i <= p.length(); ++i)
        if (p.domains[static_cast<size_t>(i)].ambient() != p.big.dim(i))
            throw ValidationError("domain " + std::to_string(i) + " has the wrong ambient dimension");
    for (int i = 0; i < p.length(); ++i)
        if (!p.domains[static_cast<size_t>(i) + 1].contains(apply(p.big.diff(i), p.domains[static_cast<size_t>(i)])))
            throw ValidationError("invalid pair (degree " + std::to_string(i) +
                                  "): L does not map the domain into the next domain");
}

long ImageReport::euler() const {
    long chi = 0;
    for (size_t i = 0; i < degrees.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(degrees[i].dim);
    return chi;
}

namespace {

Subspace harmonic_space(const FiniteComplex& c, int i) {
    const Subspace ker = kernel(c, i);
    if (i == 0) return ker;
    return meet(ker, kernel_basis(adjoint(c, i - 1)));
}

Subspace full_kernel_of_adjoint(const FiniteComplex& c, int i) {
    if (i == 0) return Subspace::full(c.dim(0));
    return kernel_basis(adjoint(c, i - 1));
}

}  // namespace

ImageReport image_cohomology(const ComplexPair& p) {
    require_valid(p);
    const FiniteComplex d = p.small();
    const int n = p.length();
    ImageReport report;
    for (int j = 0; j <= n; ++j) {
        ImageDegree deg;
        const Subspace ker_d = kernel(d, j);
        const Subspace ran_l = incoming_range(p.big, j);
        deg.dim = ker_d.dim() - meet(ran_l, p.domains[static_cast<size_t>(j)]).dim();
        const Subspace h_small = harmonic_space(d, j);
        const Subspace h_big = harmonic_space(p.big, j);
        deg.harmonic_image = image_basis(mul(projector(h_big, p.big.gram(j)), h_small.basis()));
        if (deg.harmonic_image.dim() != deg.dim)
            throw InvariantError("image cohomology: harmonic projection has dimension " +
                                 std::to_string(deg.harmonic_image.dim()) + " but the quotient has dimension " +
                                 std::to_string(deg.dim) + " in degree " + std::to_string(j));
        deg.injective = deg.dim == h_small.dim();
        deg.surjective = deg.dim == h_big.dim();
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

HarmonicProjections harmonic_projections(const ComplexPair& p, int j) {
    require_valid(p);
    if (j < 0 || j > p.length()) throw ValidationError("harmonic_projections: degree out of range");
    const FiniteComplex d = p.small();
    const Mat& g = p.big.gram(j);
    HarmonicProjections out;
    out.small_harmonic = harmonic_space(d, j);
    out.big_harmonic = harmonic_space(p.big, j);
    const Mat& bs = out.small_harmonic.basis();
    const Mat& bb = out.big_harmonic.basis();
    const Mat cross = mul(mul(Mat(bs.transpose()), g), bb);
    const Mat gs = mul(mul(Mat(bs.transpose()), g), bs);
    const Mat gb = mul(mul(Mat(bb.transpose()), g), bb);
    out.onto_big = solve(gb, Mat(cross.transpose()));
    out.onto_small = solve(gs, cross);
    out.mutually_adjoint = mul(gb, out.onto_big) == Mat(mul(gs, out.onto_small).transpose());
    if (j == p.length()) {
        out.vanishes_on_adjoint_range = true;
    } else {
        const Subspace adj = image_basis(adjoint(p.big, j));
        out.vanishes_on_adjoint_range = is_zero_matrix(mul(projector(adj, g), bs));
    }
    return out;
}

Relatedness check_related(const FiniteComplex& d, const FiniteComplex& l, const LinkMaps& links) {
    check_shapes(d);
    check_shapes(l);
    const int n = d.length();
    if (l.length() != n) throw ValidationError("check_related: complexes have different lengths");
    if (static_cast<int>(links.phi.size()) != n + 1 || static_cast<int>(links.c.size()) != n)
        throw ValidationError("check_related: need n+1 link maps and n constants");
    for (int i = 0; i <= n; ++i) {
        if (d.dim(i) != l.dim(i)) throw ValidationError("check_related: complexes have different spaces");
        const Mat& phi = links.phi[static_cast<size_t>(i)];
        if (phi.rows() != d.dim(n - i) || phi.cols() != d.dim(i))
            throw ValidationError("link map " + std::to_string(i) + " has the wrong shape");
        if (rank(phi) != phi.cols() || phi.rows() != phi.cols())
            throw ValidationError("link map " + std::to_string(i) + " is not invertible");
    }
    for (const auto& c : links.c)
        if (c == 0) throw ValidationError("link constants must be nonzero");

    Relatedness out;
    out.related = true;
    for (int i = 0; i < n && out.related; ++i) {
        const Mat& b = d.domain(i).basis();
        const Mat lhs = adjoint(l, n - i - 1) * links.phi[static_cast<size_t>(i)] * b;
        const Mat rhs = links.c[static_cast<size_t>(i)] * (links.phi[static_cast<size_t>(i) + 1] * (d.diff(i) * b));
        out.related = lhs == rhs;
    }
    bool isometric = true;
    for (int i = 0; i <= n && isometric; ++i) {
        const Mat& phi = links.phi[static_cast<size_t>(i)];
        isometric = Mat(phi.transpose() * d.gram(n - i) * phi) == d.gram(i);
    }
    out.complementary = out.related && isometric;
    return out;
}

Relatedness check_related(const ComplexPair& p, const LinkMaps& links) {
    return check_related(p.small(), p.big, links);
}

FiniteComplex build_complementary(const FiniteComplex& d, const LinkMaps& links) {
    require_valid(d);
    if (!d.full_domains()) throw ValidationError("build_complementary needs a full-domain complex");
    const int n = d.length();
    if (static_cast<int>(links.phi.size()) != n + 1) throw ValidationError("build_complementary: need n+1 link maps");
    std::vector<Mat> phi_inv;
    for (int i = 0; i <= n; ++i) {
        const Mat& phi = links.phi[static_cast<size_t>(i)];
        if (phi.rows() != d.dim(n - i) || phi.cols() != d.dim(i))
            throw ValidationError("link map " + std::to_string(i) + " has the wrong shape");
        phi_inv.push_back(inverse(phi));   // throws on singular maps
    }
    FiniteComplex l;
    l.grams = d.grams;
    l.domains = d.domains;
    for (int i = 0; i < n; ++i) {
        // T = phi_{n-i} D_{n-i-1} phi_{n-i-1}^{-1} : H_{i+1} -> H_i, and L_i = T^*.
        const Mat t = links.phi[static_cast<size_t>(n - i)] * d.diff(n - i - 1) * phi_inv[static_cast<size_t>(n - i - 1)];
        l.diffs.push_back(solve(d.gram(i + 1), Mat(t.transpose() * d.gram(i))));
    }
    return l;
}

std::vector<Index> degree_offsets(const FiniteComplex& c) {
    std::vector<Index> off{0};
    for (int i = 0; i <= c.length(); ++i) off.push_back(off.back() + c.dim(i));
    return off;
}

FriedrichsReport friedrichs_identities(const ComplexPair& p) {
    require_valid(p);
    const FiniteComplex d = p.small();
    const int n = p.length();
    const auto off = degree_offsets(p.big);
    const Index total = off.back();

    Index vdim = 0;
    for (const auto& v : p.domains) vdim += v.dim();
    Mat domain_basis = zeros(total, vdim);
    Mat a_min = zeros(total, total);
    Mat a_max = zeros(total, total);
    Index col = 0;
    for (int i = 0; i <= n; ++i) {
        const Subspace& v = p.domains[static_cast<size_t>(i)];
        domain_basis.block(off[static_cast<size_t>(i)], col, p.big.dim(i), v.dim()) = v.basis();
        col += v.dim();
    }
    for (int i = 0; i < n; ++i) {
        const auto r = off[static_cast<size_t>(i) + 1], c = off[static_cast<size_t>(i)];
        // Degree i+1 block of column i: D_i / L_i (same matrix). Degree i block of column i+1: the adjoints.
        a_min.block(r, c, p.big.dim(i + 1), p.big.dim(i)) = p.big.diff(i);
        a_max.block(r, c, p.big.dim(i + 1), p.big.dim(i)) = p.big.diff(i);
        a_min.block(c, r, p.big.dim(i), p.big.dim(i + 1)) = adjoint(p.big, i);
        a_max.block(c, r, p.big.dim(i), p.big.dim(i + 1)) = adjoint(d, i);
    }
    const Mat composite = mul(a_max, mul(a_min, domain_basis));
    FriedrichsReport out;
    out.kernel = Subspace::span(mul(domain_basis, kernel_basis(composite).basis()));

    Mat expected_total = zeros(total, 0);
    for (int i = 0; i <= n; ++i) {
        const Subspace e = meet(kernel(d, i), full_kernel_of_adjoint(p.big, i));
        Mat block = zeros(total, e.dim());
        block.block(off[static_cast<size_t>(i)], 0, p.big.dim(i), e.dim()) = e.basis();
        Mat grown(total, expected_total.cols() + e.dim());
        grown << expected_total, block;
        expected_total = grown;
        out.expected.push_back(e);
    }
    out.kernel_identity = out.kernel == Subspace::span(expected_total);
    const Subspace ran_composite = image_basis(composite);
    const Subspace ran_max = image_basis(a_max);
    out.range_composite = ran_composite.dim();
    out.range_max = ran_max.dim();
    out.range_equal = ran_composite == ran_max;
    return out;
}

bool SplittingConditions::agree() const {
    for (bool b : holds)
        if (b != holds[0]) return false;
    return true;
}

SplittingConditions splitting_conditions(const ComplexPair& p, int i) {
    require_valid(p);
    const int n = p.length();
    if (i < 0 || i > n) throw ValidationError("splitting_conditions: degree out of range");
    const FiniteComplex d = p.small();
    const Mat& g = p.big.gram(i);
    const Index dim = p.big.dim(i);
    const Subspace& v = p.domains[static_cast<size_t>(i)];

    const Subspace ker_d = kernel(d, i);
    const Subspace ker_l_adj = full_kernel_of_adjoint(p.big, i);
    const Subspace h_abs = harmonic_space(p.big, i);
    const Subspace h_rel = harmonic_space(d, i);
    const Subspace h_min = meet(ker_d, ker_l_adj);

    const Subspace ran_dmax = incoming_range(p.big, i);
    const Subspace ran_dmin = incoming_range(d, i);
    // Range of the adjoint relation of D_i: the minimal-norm adjoint plus the orthogonal complement of V_i.
    Subspace ran_delta_max = complement_within(v, Subspace::full(dim), g);
    if (i < n) ran_delta_max = join(ran_delta_max, image_basis(adjoint(d, i)));

    const Index image_dim = ker_d.dim() - meet(ran_dmax, v).dim();

    SplittingConditions out;
    out.holds[0] = h_min.dim() == image_dim;
    out.holds[1] = is_direct_sum({h_min, meet(ran_delta_max, h_abs)}, h_abs);
    const Mat pr = projector(h_rel, g), pa = projector(h_abs, g), pm = projector(h_min, g);
    out.holds[2] = mul(pr, pa) == pm && mul(pa, pr) == pm;
    out.holds[3] = is_direct_sum({h_min, meet(ran_dmax, h_rel)}, h_rel);
    out.holds[4] = is_direct_sum({meet(ran_dmax, h_rel), ran_dmin, meet(ran_dmax, ran_delta_max)}, ran_dmax);
    return out;
}

}  // namespace hc
