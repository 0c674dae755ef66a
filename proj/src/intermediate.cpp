#include "hc/intermediate.hpp"

namespace hc {

Mat graph_gram(const FiniteComplex& l, int i) {
    if (i == l.length()) return l.gram(i);
    return l.gram(i) + mul(mul(Mat(l.diff(i).transpose()), l.gram(i + 1)), l.diff(i));
}

IntermediateComplex build_intermediate(const ComplexPair& pair) {
    require_valid(pair);
    const FiniteComplex& l = pair.big;
    const FiniteComplex d = pair.small();
    const int n = pair.length();

    IntermediateComplex ic;
    ic.base = pair;
    for (int i = 0; i <= n; ++i) {
        const Mat gg = graph_gram(l, i);
        const Subspace full = Subspace::full(l.dim(i));
        const Subspace& v = pair.domains[static_cast<size_t>(i)];
        ConstructionTrace t;
        t.kernel_big = kernel(l, i);
        t.kernel_complement = complement_within(t.kernel_big, full, gg);
        t.pullback = i < n ? preimage(l.diff(i), pair.domains[static_cast<size_t>(i) + 1]) : full;
        t.w = meet(t.pullback, t.kernel_complement);
        const Subspace kernel_small = kernel(d, i);
        t.a = complement_within(kernel_small, v, gg);
        t.projected_a = apply(projector(t.kernel_complement, gg), t.a);
        t.n = complement_within(t.projected_a, t.w, gg);
        t.shortcut = kernel_small == t.kernel_big;
        Subspace b = t.shortcut ? t.pullback : join(v, t.n);
        t.m = complement_within(kernel_small, b, gg);
        ic.b.push_back(std::move(b));
        ic.trace.push_back(std::move(t));
    }
    ic.p = l;
    ic.p.domains = ic.b;
    return ic;
}

std::optional<std::string> check_invariants(const IntermediateComplex& ic) {
    const ComplexPair& pair = ic.base;
    const FiniteComplex& l = pair.big;
    const FiniteComplex d = pair.small();
    const int n = pair.length();
    auto fail = [](int i, const std::string& what) {
        return std::optional<std::string>("degree " + std::to_string(i) + ": " + what);
    };
    if (auto v = validate(ic.p)) return fail(v->degree, "P is not a complex: " + v->what);
    for (int i = 0; i <= n; ++i) {
        const auto& t = ic.trace[static_cast<size_t>(i)];
        const Subspace& v = pair.domains[static_cast<size_t>(i)];
        const Subspace& b = ic.b[static_cast<size_t>(i)];
        const Mat gg = graph_gram(l, i);
        if (!b.contains(v)) return fail(i, "domain of D is not inside B");
        if (kernel(ic.p, i) != kernel(d, i)) return fail(i, "Ker P differs from Ker D");
        if (i < n) {
            const Subspace expected = meet(image_basis(l.diff(i)), pair.domains[static_cast<size_t>(i) + 1]);
            if (apply(l.diff(i), b) != expected) return fail(i, "ran P differs from ran L ∩ next domain of D");
        }
        if (!is_direct_sum({v, t.n}, b)) return fail(i, "B is not the direct sum of the domain of D and N");
        if (!is_zero_matrix(mul(mul(Mat(v.basis().transpose()), gg), t.n.basis())))
            return fail(i, "N is not graph-orthogonal to the domain of D");
        if (!is_direct_sum({kernel(d, i), t.m}, b)) return fail(i, "B is not Ker D plus M");
        if (t.projected_a.dim() != t.a.dim()) return fail(i, "projection of A is not injective");
        if (!t.w.contains(t.projected_a)) return fail(i, "projection of A is not inside W");
    }
    return std::nullopt;
}

std::optional<int> verify_against_oracle(const IntermediateComplex& ic) {
    const auto hp = cohomology(ic.p);
    const auto im = image_cohomology(ic.base);
    for (size_t i = 0; i < hp.degrees.size(); ++i)
        if (hp.degrees[i].dim != im.degrees[i].dim) return static_cast<int>(i);
    return std::nullopt;
}

KernelReport laplacian_m(const IntermediateComplex& ic, int i) {
    const FiniteComplex& p = ic.p;
    if (i < 0 || i > p.length()) throw ValidationError("laplacian_m: degree out of range");
    Mat delta = zeros(p.dim(i), p.dim(i));
    if (i < p.length()) delta += mul(adjoint(p, i), p.diff(i));
    if (i > 0) delta += mul(p.diff(i - 1), adjoint(p, i - 1));
    KernelReport out;
    out.kernel_dim = kernel_on(delta, p.domain(i)).dim();
    out.expected = kernel(p, i).dim() - incoming_range(p, i).dim();
    out.matrix = std::move(delta);
    return out;
}

IndexReport index_even(const IntermediateComplex& ic) {
    const FiniteComplex& p = ic.p;
    const int n = p.length();
    // The complex (B_i, P_i) in coordinates of the canonical bases of B_i.
    FiniteComplex r;
    for (int i = 0; i <= n; ++i) {
        const Mat& b = p.domain(i).basis();
        r.grams.push_back(mul(mul(Mat(b.transpose()), p.gram(i)), b));
        r.domains.push_back(Subspace::full(b.cols()));
    }
    for (int i = 0; i < n; ++i)
        r.diffs.push_back(p.domain(i + 1).coordinates_of(mul(p.diff(i), p.domain(i).basis())));

    std::vector<Index> row_off{0}, col_off{0};
    for (int i = 0; i <= n; ++i) {
        if (i % 2 == 0) col_off.push_back(col_off.back() + r.dim(i));
        else row_off.push_back(row_off.back() + r.dim(i));
    }
    Mat op = zeros(row_off.back(), col_off.back());
    for (int i = 0; i <= n; i += 2) {
        const Index c = col_off[static_cast<size_t>(i / 2)];
        if (i < n) op.block(row_off[static_cast<size_t>(i / 2)], c, r.dim(i + 1), r.dim(i)) = r.diff(i);
        if (i > 0) op.block(row_off[static_cast<size_t>((i - 1) / 2)], c, r.dim(i - 1), r.dim(i)) = adjoint(r, i - 1);
    }
    const Index rk = rank(op);
    IndexReport out;
    out.kernel = op.cols() - rk;
    out.cokernel = op.rows() - rk;
    out.index = static_cast<long>(out.kernel) - static_cast<long>(out.cokernel);
    out.euler = cohomology(p).euler();
    return out;
}

}  // namespace hc
