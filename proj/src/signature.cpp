#include "hc/signature.hpp"

#include "hc/errors.hpp"

#include <algorithm>

namespace hc {

namespace {

// Columns of `candidates` chosen greedily so they stay independent modulo `modulo`:
// the pivot columns of [modulo | candidates] that fall in the second block.
Mat independent_modulo(const Mat& candidates, const Subspace& modulo) {
    Mat both(candidates.rows(), modulo.dim() + candidates.cols());
    both << modulo.basis(), candidates;
    std::vector<Index> chosen;
    for (Index c : rref_in_place(both))
        if (c >= modulo.dim()) chosen.push_back(c - modulo.dim());
    Mat out(candidates.rows(), static_cast<Index>(chosen.size()));
    for (size_t i = 0; i < chosen.size(); ++i) out.col(static_cast<Index>(i)) = candidates.col(chosen[i]);
    return out;
}

Index image_dim(const ComplexPair& p, int k) {
    const Subspace& v = p.domains[static_cast<size_t>(k)];
    return kernel(p.small(), k).dim() - meet(incoming_range(p.big, k), v).dim();
}

Subspace perp(const Subspace& s) { return kernel_basis(Mat(s.basis().transpose())); }

void finish(PairingReport& r, int n) {
    const Mat& m = r.matrix;
    r.symmetric = is_symmetric(m);
    r.nondegenerate = rank(m) == m.rows();
    if (r.symmetric) {
        r.inertia = congruence_signature(m);
        r.signature = static_cast<long>(r.inertia.pos) - static_cast<long>(r.inertia.neg);
    } else if (n % 4 == 0 && r.model == "cup") {
        throw InvariantError("cup pairing in degree " + std::to_string(r.degree) + " is not symmetric");
    }
}

}  // namespace

Vec fundamental_cycle(const StratifiedComplex& x, int flip) {
    const auto signs = orientation(x, flip);
    if (!signs) throw ValidationError("no coherent orientation of the top simplices");
    Vec cycle = Vec::Zero(x.sc.count(x.n));
    for (size_t t = 0; t < x.input.tops.size(); ++t) cycle(x.sc.find(x.input.tops[t])) = (*signs)[t];
    if (x.n >= 1 && !is_zero_matrix(Mat(r0_boundary(x, x.n) * cycle)))
        throw InvariantError("fundamental cycle has nonzero boundary");
    return cycle;
}

RelAbsPair build_rel_abs_pair(const std::vector<Simplex>& tops, int flip) {
    RelAbsPair m;
    for (const auto& t : tops) m.tops.push_back(sorted(t));
    if (m.tops.empty()) throw ValidationError("no top simplices");
    for (const auto& t : m.tops)
        if (t.size() != m.tops.front().size()) throw ValidationError("non-pure complex");
    m.sc = SimplicialComplex::generated_by(m.tops);
    const int n = m.sc.dim();
    std::vector<int> count(static_cast<size_t>(m.sc.count(n - 1)), 0);
    for (const auto& t : m.tops)
        for (const auto& f : codim_one_faces(t)) ++count[static_cast<size_t>(m.sc.find(f))];
    for (Index f = 0; f < m.sc.count(n - 1); ++f) {
        const int c = count[static_cast<size_t>(f)];
        if (c > 2) throw ValidationError("not a manifold: a codimension-one face lies in " + std::to_string(c) + " facets");
        if (c == 1) m.boundary.push_back(m.sc.faces[static_cast<size_t>(n - 1)][static_cast<size_t>(f)]);
    }
    m.orientation = coherent_orientation(m.tops, std::vector<int>(m.tops.size(), flip), {}, m.sc);

    const auto bsc = m.boundary.empty() ? SimplicialComplex{} : SimplicialComplex::generated_by(m.boundary);
    std::vector<Index> dims;
    std::vector<Mat> diffs;
    for (int i = 0; i <= n; ++i) dims.push_back(m.sc.count(i));
    for (int i = 0; i < n; ++i) diffs.push_back(boundary_matrix(m.sc, i + 1).transpose());
    m.pair.big = FiniteComplex::with_standard_grams(dims, diffs);
    for (int i = 0; i <= n; ++i) {
        std::vector<Index> interior;
        for (Index f = 0; f < m.sc.count(i); ++f)
            if (!bsc.contains(m.sc.faces[static_cast<size_t>(i)][static_cast<size_t>(f)])) interior.push_back(f);
        Mat basis = zeros(dims[static_cast<size_t>(i)], static_cast<Index>(interior.size()));
        for (size_t c = 0; c < interior.size(); ++c) basis(interior[c], static_cast<Index>(c)) = 1;
        m.pair.domains.push_back(Subspace::span(basis));
    }
    require_valid(m.pair);
    return m;
}

Rational cup_evaluate(const SimplicialComplex& sc, const std::vector<Simplex>& tops, const std::vector<int>& signs,
                      int k, const Vec& a, const Vec& b) {
    Rational total = 0;
    for (size_t t = 0; t < tops.size(); ++t) {
        const Simplex s = sorted(tops[t]);
        const Simplex front(s.begin(), s.begin() + k + 1);
        const Simplex back(s.begin() + k, s.end());
        const Rational& x = a(sc.find(front));
        if (x == 0) continue;
        total += signs[t] * x * b(sc.find(back));
    }
    return total;
}

PairingReport image_pairing(const RelAbsPair& m, int k) {
    const Index n = m.sc.dim();
    return image_pairing(m, k, identity(n == 2 * k ? image_dim(m.pair, k) : 0));
}

PairingReport image_pairing(const RelAbsPair& m, int k, const Mat& change) {
    const int n = m.sc.dim();
    if (n != 2 * k) throw ValidationError("pairing needs n = 2k, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    if (!m.orientation) throw ValidationError("manifold is not orientable");
    const Subspace cocycles = kernel(m.pair.small(), k);
    const Subspace coboundaries = incoming_range(m.pair.big, k);
    PairingReport r;
    r.degree = k;
    r.model = "cup";
    const Mat chosen = independent_modulo(cocycles.basis(), coboundaries);
    if (chosen.cols() != image_dim(m.pair, k))
        throw InvariantError("image basis has the wrong size");
    if (change.rows() != chosen.cols() || change.cols() != chosen.cols() || rank(change) != change.rows())
        throw ValidationError("basis change must be invertible of size " + std::to_string(chosen.cols()));
    r.basis = chosen * change;
    const Index d = r.basis.cols();
    r.matrix = zeros(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            r.matrix(i, j) = cup_evaluate(m.sc, m.tops, *m.orientation, k, r.basis.col(i), r.basis.col(j));
    finish(r, n);
    return r;
}

PairingReport perverse_signature(const StratifiedComplex& x, const Perversity& p, const Perversity& q, int flip) {
    if (x.n == 0 || x.n % 4 != 0) throw ValidationError("signature needs dimension divisible by 4, got " + std::to_string(x.n));
    if (!(q == dual(x, p))) throw ValidationError("second perversity must be the dual of the first");
    const bool up = leq(p, q);
    if (!up && !leq(q, p)) throw ValidationError("perversities are not comparable");
    const Perversity& lo = up ? p : q;
    const Perversity& hi = up ? q : p;
    const int k = x.n / 2;
    const auto signs = orientation(x, flip);
    if (!signs) throw ValidationError("no coherent orientation of the top simplices");

    const auto small = intersection_chains(x, lo);
    const auto large = intersection_chains(x, hi);
    const size_t ks = static_cast<size_t>(k);
    const Index m = small.chains[ks].ambient();
    const Mat id = identity(m);

    // Cocycles on I^{hi}S_k. Restriction to I^{lo}S_k sends coboundaries to coboundaries,
    // so the RREF basis serves as well as harmonic representatives and keeps entries small.
    const Subspace& wq = large.chains[ks];
    const Subspace bd_q = apply(large.boundary[ks + 1], large.chains[ks + 1]);
    const Subspace z_q = meet(wq, perp(bd_q));

    // Restrict to I^{lo}S_k; the minimal-norm extension of a functional on a subspace is its representer there.
    const Subspace& wp = small.chains[ks];
    const Mat pp = projector(wp, id);
    const Subspace cob_p = apply(mul(pp, Mat(small.boundary[ks].transpose())), small.chains[ks - 1]);
    const Mat chosen = independent_modulo(mul(pp, z_q.basis()), cob_p);
    const auto image = image_ih(x, lo, hi);
    if (chosen.cols() != image.image[ks]) throw InvariantError("cohomology image and homology image differ in size");

    const auto regular = x.regular_mask(k);
    PairingReport r;
    r.degree = k;
    r.model = x.strata.empty() ? "cup" : "model-signature";
    r.basis = zeros(x.sc.count(k), chosen.cols());
    Index pos = 0;
    for (size_t f = 0; f < regular.size(); ++f)
        if (regular[f]) r.basis.row(static_cast<Index>(f)) = chosen.row(pos++);
    const Index d = r.basis.cols();
    r.matrix = zeros(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            r.matrix(i, j) = cup_evaluate(x.sc, x.input.tops, *signs, k, r.basis.col(i), r.basis.col(j));
    finish(r, x.n);
    return r;
}

}  // namespace hc
