#include "hc/stratified.hpp"

#include "hc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hc {

namespace {

std::string show(const Simplex& s) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '}';
    return out.str();
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

StratifiedInput StratifiedInput::canonical() const {
    StratifiedInput out = *this;
    out.signs.resize(out.tops.size(), 1);
    for (size_t t = 0; t < out.tops.size(); ++t) {
        out.signs[t] *= permutation_sign(tops[t]);
        out.tops[t] = sorted(tops[t]);
    }
    for (auto& [s, l] : out.labels) s = sorted(s);
    return out;
}

std::vector<bool> StratifiedComplex::regular_mask(int k) const {
    std::vector<bool> mask(static_cast<size_t>(sc.count(k)));
    for (Index f = 0; f < sc.count(k); ++f) mask[static_cast<size_t>(f)] = regular(k, f);
    return mask;
}

int StratifiedComplex::stratum_index(const std::string& name) const {
    for (size_t s = 0; s < strata.size(); ++s)
        if (strata[s].label == name) return static_cast<int>(s);
    throw ValidationError("unknown stratum '" + name + "'");
}

StratifiedComplex load_validate(const StratifiedInput& raw) {
    StratifiedComplex x;
    x.input = raw.canonical();
    const auto& in = x.input;
    if (in.tops.empty()) throw ValidationError("no top simplices");
    const size_t width = in.tops.front().size();
    std::set<Simplex> seen;
    for (size_t t = 0; t < in.tops.size(); ++t) {
        const auto& s = in.tops[t];
        if (s.size() != width)
            throw ValidationError("non-pure complex: simplex " + show(s) + " has dimension " +
                                  std::to_string(s.size() - 1) + ", expected " + std::to_string(width - 1));
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= in.vertices)
                throw ValidationError("simplex " + show(s) + " uses a vertex outside 0.." + std::to_string(in.vertices - 1));
            if (i > 0 && s[i] == s[i - 1]) throw ValidationError("simplex " + show(s) + " repeats a vertex");
        }
        if (in.signs[t] != 1 && in.signs[t] != -1) throw ValidationError("orientation of " + show(s) + " must be + or -");
        if (!seen.insert(s).second) throw ValidationError("simplex " + show(s) + " listed twice");
    }
    x.sc = SimplicialComplex::generated_by(in.tops);
    x.n = x.sc.dim();
    if (x.sc.count(0) != in.vertices)
        throw ValidationError("non-pure complex: some vertex lies in no top simplex");

    std::set<std::string> names;
    for (const auto& d : in.strata) {
        if (!names.insert(d.label).second) throw ValidationError("stratum '" + d.label + "' declared twice");
        if (d.dim < 0 || d.dim >= x.n)
            throw ValidationError("singular stratum '" + d.label + "' must have dimension in 0.." + std::to_string(x.n - 1));
        x.strata.push_back({d.label, d.dim, x.n - d.dim});
    }
    for (const auto& [name, w] : in.weights)
        if (!names.count(name)) throw ValidationError("weight given for unknown stratum '" + name + "'");

    x.label.resize(static_cast<size_t>(x.n) + 1);
    for (int k = 0; k <= x.n; ++k) x.label[static_cast<size_t>(k)].assign(static_cast<size_t>(x.sc.count(k)), -1);
    for (const auto& [s, name] : in.labels) {
        const Index f = x.sc.find(s);
        if (f < 0) throw ValidationError("labelled simplex " + show(s) + " is not in the complex");
        const int y = x.stratum_index(name);
        const int k = static_cast<int>(s.size()) - 1;
        if (k > x.strata[static_cast<size_t>(y)].dim)
            throw ValidationError("simplex " + show(s) + " is larger than its stratum '" + name + "'");
        int& slot = x.label[static_cast<size_t>(k)][static_cast<size_t>(f)];
        if (slot >= 0) throw ValidationError("simplex " + show(s) + " labelled twice");
        slot = y;
    }

    auto stratum_dim = [&](int k, Index f) {
        const int y = x.label[static_cast<size_t>(k)][static_cast<size_t>(f)];
        return y < 0 ? x.n : x.strata[static_cast<size_t>(y)].dim;
    };
    // Closure: faces of a singular simplex lie in its stratum or in lower ones.
    for (int k = 1; k <= x.n; ++k) {
        for (Index f = 0; f < x.sc.count(k); ++f) {
            const int y = x.label[static_cast<size_t>(k)][static_cast<size_t>(f)];
            if (y < 0) continue;
            for (const auto& g : codim_one_faces(x.sc.faces[static_cast<size_t>(k)][static_cast<size_t>(f)])) {
                const Index gi = x.sc.find(g);
                const int z = x.label[static_cast<size_t>(k - 1)][static_cast<size_t>(gi)];
                const int dz = stratum_dim(k - 1, gi);
                if (z < 0 || dz > x.strata[static_cast<size_t>(y)].dim || (dz == x.strata[static_cast<size_t>(y)].dim && z != y))
                    throw ValidationError("incompatible filtration: face " + show(g) + " of singular simplex " +
                                          show(x.sc.faces[static_cast<size_t>(k)][static_cast<size_t>(f)]) +
                                          " is not in the closure of its stratum");
            }
        }
    }
    // Each skeleton meets each simplex in one face.
    std::set<int> skeleton_dims;
    for (const auto& s : x.strata) skeleton_dims.insert(s.dim);
    for (int k = 1; k <= x.n; ++k) {
        for (const auto& s : x.sc.faces[static_cast<size_t>(k)]) {
            for (int j : skeleton_dims) {
                Simplex inside;
                for (int v : s)
                    if (stratum_dim(0, x.sc.find({v})) <= j) inside.push_back(v);
                if (inside.empty()) continue;
                const Index fi = x.sc.find(inside);
                if (stratum_dim(static_cast<int>(inside.size()) - 1, fi) > j)
                    throw ValidationError("incompatible filtration: the " + std::to_string(j) + "-skeleton meets " +
                                          show(s) + " in more than one face");
            }
        }
    }
    // Two-facet condition on regular codimension-one faces.
    if (x.n >= 1) {
        std::vector<int> count(static_cast<size_t>(x.sc.count(x.n - 1)), 0);
        for (const auto& t : in.tops)
            for (const auto& g : codim_one_faces(t)) ++count[static_cast<size_t>(x.sc.find(g))];
        for (Index f = 0; f < x.sc.count(x.n - 1); ++f)
            if (x.regular(x.n - 1, f) && count[static_cast<size_t>(f)] != 2)
                throw ValidationError("not a pseudomanifold: regular face " +
                                      show(x.sc.faces[static_cast<size_t>(x.n - 1)][static_cast<size_t>(f)]) + " lies in " +
                                      std::to_string(count[static_cast<size_t>(f)]) + " top simplices");
    }
    return x;
}

StratifiedInput manifold_input(const std::vector<Simplex>& tops) {
    StratifiedInput in;
    for (const auto& t : tops)
        for (int v : t) in.vertices = std::max(in.vertices, v + 1);
    in.tops = tops;
    in.signs.assign(tops.size(), 1);
    return in;
}

StratifiedInput suspension_input(const std::vector<Simplex>& tops, int v) {
    StratifiedInput in;
    in.vertices = v + 2;
    for (const auto& t : tops) {
        for (int apex : {v, v + 1}) {
            Simplex s = t;
            s.push_back(apex);
            in.tops.push_back(s);
        }
    }
    in.signs.assign(in.tops.size(), 1);
    in.strata = {{"north", 0}, {"south", 0}};
    in.labels = {{{v}, "north"}, {{v + 1}, "south"}};
    return in;
}

void require_total(const StratifiedComplex& x, const Perversity& p) {
    for (const auto& s : x.strata)
        if (!p.values.count(s.label)) throw ValidationError("perversity has no value on stratum '" + s.label + "'");
    for (const auto& [name, v] : p.values) x.stratum_index(name);
}

Perversity perversity_by_name(const StratifiedComplex& x, const std::string& spec) {
    Perversity p;
    auto fill = [&](auto f) {
        for (const auto& s : x.strata) p.values[s.label] = f(s.codim);
    };
    if (spec == "zero") {
        fill([](int) { return 0; });
    } else if (spec == "top") {
        fill([](int c) { return c - 2; });
    } else if (spec == "lower-middle") {
        fill([](int c) { return static_cast<int>(floor_div(c - 2, 2)); });
    } else if (spec == "upper-middle") {
        fill([](int c) { return static_cast<int>(floor_div(c - 1, 2)); });
    } else if (spec.find('=') != std::string::npos) {
        std::istringstream items(spec);
        std::string item;
        while (std::getline(items, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw ValidationError("perversity entry '" + item + "' is not label=value");
            const std::string name = item.substr(0, eq);
            try {
                size_t used = 0;
                const int v = std::stoi(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) throw std::invalid_argument(item);
                if (!p.values.emplace(name, v).second) throw ValidationError("perversity repeats stratum '" + name + "'");
            } catch (const std::logic_error&) {
                throw ValidationError("perversity entry '" + item + "' has a non-integer value");
            }
        }
    } else {
        throw ValidationError("unknown perversity '" + spec + "'");
    }
    require_total(x, p);
    return p;
}

Perversity dual(const StratifiedComplex& x, const Perversity& p) {
    require_total(x, p);
    Perversity q;
    for (const auto& s : x.strata) q.values[s.label] = s.codim - 2 - p.values.at(s.label);
    return q;
}

long strict_floor(const Rational& x) {
    using boost::multiprecision::mpz_int;
    const mpz_int num = numerator(x), den = denominator(x);
    mpz_int q = num / den;
    if (q * den != num && num < 0) q -= 1;    // floor
    if (q * den == num) q -= 1;               // strictly below an integer
    return q.convert_to<long>();
}

int pg_value(int l, const Rational& c) {
    if (c <= 0) throw ValidationError("weights must be positive, got " + to_string(c));
    if (l < 0) throw ValidationError("link dimension must be nonnegative");
    if (l == 0) return 0;
    const Rational inv = Rational(1) / (2 * c);
    if (l % 2 == 0) return l / 2 + static_cast<int>(strict_floor(inv));
    return (l - 1) / 2 + static_cast<int>(strict_floor(Rational(1, 2) + inv));
}

Perversity from_weights(const StratifiedComplex& x, const std::map<std::string, Rational>& weights) {
    Perversity p;
    for (const auto& s : x.strata) {
        const auto it = weights.find(s.label);
        if (it == weights.end()) throw ValidationError("no weight for stratum '" + s.label + "'");
        p.values[s.label] = pg_value(s.codim - 1, it->second);
    }
    for (const auto& [name, w] : weights) x.stratum_index(name);
    return p;
}

bool leq(const Perversity& p, const Perversity& q) {
    for (const auto& [name, v] : p.values) {
        const auto it = q.values.find(name);
        if (it == q.values.end() || v > it->second) return false;
    }
    return true;
}

std::vector<bool> allowable_faces(const StratifiedComplex& x, int i, const Perversity& p) {
    if (i < 0 || i > x.n) throw ValidationError("degree " + std::to_string(i) + " out of range 0.." + std::to_string(x.n));
    require_total(x, p);
    std::vector<int> bound;
    for (const auto& s : x.strata) bound.push_back(i - s.codim + p.values.at(s.label));
    std::vector<bool> out(static_cast<size_t>(x.sc.count(i)), false);
    for (Index f = 0; f < x.sc.count(i); ++f) {
        if (!x.regular(i, f)) continue;
        const Simplex& s = x.sc.faces[static_cast<size_t>(i)][static_cast<size_t>(f)];
        std::vector<int> largest(x.strata.size(), -1);
        bool touches = false;
        for (unsigned long mask = 1; mask + 1 < (1ul << s.size()); ++mask) {
            Simplex g;
            for (size_t b = 0; b < s.size(); ++b)
                if (mask & (1ul << b)) g.push_back(s[b]);
            const int k = static_cast<int>(g.size()) - 1;
            const int y = x.label[static_cast<size_t>(k)][static_cast<size_t>(x.sc.find(g))];
            if (y >= 0) {
                largest[static_cast<size_t>(y)] = std::max(largest[static_cast<size_t>(y)], k);
                touches = true;
            }
        }
        bool ok = true;
        if (touches)
            for (size_t y = 0; y < x.strata.size(); ++y)
                if (largest[y] >= 0 && largest[y] > bound[y]) ok = false;
        out[static_cast<size_t>(f)] = ok;
    }
    return out;
}

Subspace allowable_subspace(const StratifiedComplex& x, int i, const Perversity& p) {
    const auto allowed = allowable_faces(x, i, p);
    const auto regular = x.regular_mask(i);
    const Index dim = static_cast<Index>(std::count(regular.begin(), regular.end(), true));
    std::vector<Index> cols;
    Index pos = 0;
    for (size_t f = 0; f < allowed.size(); ++f) {
        if (!regular[f]) continue;
        if (allowed[f]) cols.push_back(pos);
        ++pos;
    }
    Mat basis = zeros(dim, static_cast<Index>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) basis(cols[c], static_cast<Index>(c)) = 1;
    return Subspace::span(basis);
}

Mat r0_boundary(const StratifiedComplex& x, int i) {
    if (i == 0) {
        const auto regular = x.regular_mask(0);
        return zeros(0, static_cast<Index>(std::count(regular.begin(), regular.end(), true)));
    }
    return boundary_matrix(x.sc, i, x.regular_mask(i - 1), x.regular_mask(i));
}

IntersectionChains intersection_chains(const StratifiedComplex& x, const Perversity& p) {
    IntersectionChains out;
    Subspace previous;
    for (int i = 0; i <= x.n; ++i) {
        const Subspace a = allowable_subspace(x, i, p);
        out.boundary.push_back(r0_boundary(x, i));
        out.chains.push_back(i == 0 ? a : meet(a, preimage(out.boundary.back(), previous)));
        previous = a;
    }
    return out;
}

long IHReport::euler() const {
    long e = 0;
    for (size_t i = 0; i < dims.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(dims[i]);
    return e;
}

long ImageIH::euler() const {
    long e = 0;
    for (size_t i = 0; i < image.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(image[i]);
    return e;
}

namespace {

Subspace cycles(const IntersectionChains& c, int i) {
    return kernel_on(c.boundary[static_cast<size_t>(i)], c.chains[static_cast<size_t>(i)]);
}

Subspace boundaries(const IntersectionChains& c, int i) {
    if (static_cast<size_t>(i) + 1 >= c.chains.size()) return Subspace::zero(c.chains[static_cast<size_t>(i)].ambient());
    return apply(c.boundary[static_cast<size_t>(i) + 1], c.chains[static_cast<size_t>(i) + 1]);
}

std::vector<Index> homology_dims(const IntersectionChains& c) {
    std::vector<Index> dims;
    for (int i = 0; i < static_cast<int>(c.chains.size()); ++i) dims.push_back(cycles(c, i).dim() - boundaries(c, i).dim());
    return dims;
}

}  // namespace

IHReport intersection_homology(const StratifiedComplex& x, const Perversity& p) {
    return {homology_dims(intersection_chains(x, p))};
}

ImageIH image_ih(const StratifiedComplex& x, const Perversity& p, const Perversity& q) {
    require_total(x, p);
    require_total(x, q);
    if (!leq(p, q)) throw ValidationError("perversities are not comparable in the order p <= q");
    const auto small = intersection_chains(x, p);
    const auto big = intersection_chains(x, q);
    ImageIH out;
    out.source = homology_dims(small);
    out.target = homology_dims(big);
    for (int i = 0; i <= x.n; ++i) {
        const Subspace z = cycles(small, i);
        out.image.push_back(z.dim() - meet(z, boundaries(big, i)).dim());
    }
    return out;
}

std::optional<std::vector<int>> orientation(const StratifiedComplex& x, int flip) {
    std::vector<int> given = x.input.signs;
    for (int& s : given) s *= flip;
    return coherent_orientation(x.input.tops, given, x.n >= 1 ? x.regular_mask(x.n - 1) : std::vector<bool>{}, x.sc);
}

std::vector<Index> regular_part_betti(const StratifiedComplex& x) {
    std::vector<Simplex> faces;
    for (int k = 0; k <= x.n; ++k) {
        for (const auto& s : x.sc.faces[static_cast<size_t>(k)]) {
            const bool all_regular = std::all_of(s.begin(), s.end(), [&](int v) { return x.regular(0, x.sc.find({v})); });
            if (all_regular) faces.push_back(s);
        }
    }
    if (faces.empty()) return {};
    return betti_numbers(SimplicialComplex::generated_by(faces));
}

DualityReport duality_chi_report(const StratifiedComplex& x, const Perversity& p, const Perversity& q) {
    require_total(x, p);
    require_total(x, q);
    if (!orientation(x)) throw ValidationError("no coherent orientation of the top simplices");
    DualityReport r;
    r.q_is_dual = (q == dual(x, p));
    const bool up = leq(p, q);
    if (!up && !leq(q, p)) throw ValidationError("perversities are not comparable");
    r.image = up ? image_ih(x, p, q) : image_ih(x, q, p);

    bool case_a = up, case_b = leq(q, p);
    for (const auto& s : x.strata) {
        const int v = p.values.at(s.label);
        case_a = case_a && (s.codim == 1 ? v == -1 : v >= 0);
        case_b = case_b && (s.codim == 1 ? v == 0 : v >= 0);
    }
    r.hypotheses = r.q_is_dual && (case_a || case_b);

    const int n = x.n;
    r.duality = true;
    for (int j = 0; j <= n; ++j) {
        const bool m = r.image.image[static_cast<size_t>(j)] == r.image.image[static_cast<size_t>(n - j)];
        r.mirrored.push_back(m);
        r.duality = r.duality && m;
    }
    r.euler = r.image.euler();
    if (n % 2 == 1) {
        r.euler_odd_zero = (r.euler == 0);
    } else {
        const long mid = static_cast<long>(r.image.image[static_cast<size_t>(n / 2)]);
        r.euler_parity = ((r.euler - mid) % 2 == 0);
        r.euler_literal = (r.euler == ((n / 2) % 2 == 0 ? mid : -mid));
    }
    r.regular_betti = regular_part_betti(x);
    for (size_t j = 0; j < r.regular_betti.size(); ++j) {
        r.regular_bound_small.push_back(r.regular_betti[j] <= r.image.source[j]);
        r.regular_bound_large.push_back(r.regular_betti[j] <= r.image.target[j]);
    }
    return r;
}

}  // namespace hc
