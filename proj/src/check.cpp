#include "hc/check.hpp"

#include "hc/intermediate.hpp"
#include "hc/oracles.hpp"
#include "hc/random.hpp"
#include "hc/signature.hpp"
#include "hc/stratified.hpp"
#include "hc/triangulations.hpp"

#include <functional>
#include <optional>

namespace hc {

namespace {

using Outcome = std::optional<std::string>;

std::string dims_text(const std::vector<Index>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

class Runner {
public:
    explicit Runner(CheckSuite& suite) : suite_(suite) {}

    void run(const std::string& name, const std::string& where, const std::function<Outcome()>& body) {
        CheckResult& r = slot(name);
        ++r.cases;
        Outcome failure;
        try {
            failure = body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++r.failures;
            if (r.first_failure.empty()) r.first_failure = where + ": " + *failure;
        }
    }

private:
    CheckResult& slot(const std::string& name) {
        for (auto& r : suite_.results)
            if (r.name == name) return r;
        suite_.results.push_back({name, 0, 0, {}});
        return suite_.results.back();
    }
    CheckSuite& suite_;
};

std::vector<Index> image_dims_of(const ComplexPair& p) {
    std::vector<Index> out;
    for (const auto& d : image_cohomology(p).degrees) out.push_back(d.dim);
    return out;
}

std::vector<Index> cohomology_dims_of(const FiniteComplex& c) {
    std::vector<Index> out;
    for (const auto& d : cohomology(c).degrees) out.push_back(d.dim);
    return out;
}

bool orthogonal(const Subspace& a, const Subspace& b, const Mat& g) {
    return is_zero_matrix(Mat(a.basis().transpose() * g * b.basis()));
}

void pair_checks(Runner& run, const ComplexPair& pair, const std::string& where) {
    std::optional<IntermediateComplex> ic;
    run.run("intermediate-invariants", where, [&]() -> Outcome {
        ic = build_intermediate(pair);
        return check_invariants(*ic);
    });
    if (!ic) return;
    run.run("intermediate-cohomology", where, [&]() -> Outcome {
        const auto expected = oracle::image_dims(pair);
        if (image_dims_of(pair) != expected) return "image dims " + dims_text(image_dims_of(pair)) + " vs reference " + dims_text(expected);
        if (cohomology_dims_of(ic->p) != expected) return "H(P) " + dims_text(cohomology_dims_of(ic->p)) + " vs reference " + dims_text(expected);
        if (auto bad = verify_against_oracle(*ic)) return "mismatch in degree " + std::to_string(*bad);
        return std::nullopt;
    });
    run.run("image-harmonic", where, [&]() -> Outcome {
        const auto im = image_cohomology(pair);
        for (int j = 0; j <= pair.length(); ++j) {
            const auto hp = harmonic_projections(pair, j);
            if (!hp.mutually_adjoint) return "projections not adjoint in degree " + std::to_string(j);
            if (!hp.vanishes_on_adjoint_range) return "D-harmonic vector with a component along ran L^* in degree " + std::to_string(j);
            if (im.degrees[static_cast<size_t>(j)].harmonic_image.dim() != im.degrees[static_cast<size_t>(j)].dim)
                return "projected harmonic space has the wrong size in degree " + std::to_string(j);
        }
        return std::nullopt;
    });
    run.run("five-way", where, [&]() -> Outcome {
        for (int i = 0; i <= pair.length(); ++i)
            if (!splitting_conditions(pair, i).agree()) return "conditions disagree in degree " + std::to_string(i);
        return std::nullopt;
    });
    run.run("friedrichs", where, [&]() -> Outcome {
        if (!friedrichs_identities(pair).kernel_identity) return std::string("kernel identity fails");
        return std::nullopt;
    });
    run.run("laplacian-m", where, [&]() -> Outcome {
        for (int i = 0; i <= pair.length(); ++i) {
            const auto k = laplacian_m(*ic, i);
            if (k.kernel_dim != k.expected) return "kernel dim differs in degree " + std::to_string(i);
        }
        return std::nullopt;
    });
    run.run("index", where, [&]() -> Outcome {
        const auto r = index_even(*ic);
        if (r.index != r.euler) return "index " + std::to_string(r.index) + " vs euler " + std::to_string(r.euler);
        if (r.euler != image_cohomology(pair).euler()) return std::string("euler differs from the image euler");
        return std::nullopt;
    });
    run.run("idempotence", where, [&]() -> Outcome {
        const ComplexPair again{pair.big, ic->b};
        const auto ic2 = build_intermediate(again);
        if (auto bad = check_invariants(ic2)) return "second pass: " + *bad;
        if (cohomology_dims_of(ic2.p) != cohomology_dims_of(ic->p)) return std::string("second pass changes H(P)");
        return std::nullopt;
    });
}

void random_checks(Runner& run, const CheckConfig& cfg) {
    Generator gen(cfg.seed);
    for (int t = 0; t < cfg.instances; ++t) {
        const std::string where = "instance " + std::to_string(t);
        const int n = gen.uniform(0, cfg.max_length);
        const bool grams = gen.coin(1, 2);
        const ComplexPair pair = gen.pair(n, cfg.max_dim, grams);
        pair_checks(run, pair, where);

        const auto between = gen.between(pair);
        run.run("sandwich", where, [&]() -> Outcome {
            const auto lo = image_dims_of(pair);
            const auto hi = image_dims_of(ComplexPair{pair.big, between});
            for (size_t j = 0; j < lo.size(); ++j)
                if (lo[j] > hi[j]) return "degree " + std::to_string(j) + ": " + dims_text(lo) + " vs " + dims_text(hi);
            return std::nullopt;
        });

        const FiniteComplex c = gen.full_complex(gen.uniform(0, cfg.max_length), cfg.max_dim, gen.coin(1, 2));
        run.run("kodaira", where, [&]() -> Outcome {
            const auto rep = cohomology(c);
            if (cohomology_dims_of(c) != oracle::cohomology_dims(c)) return std::string("dims differ from reference");
            long euler = 0;
            for (int i = 0; i <= c.length(); ++i) {
                const auto& d = rep.degrees[static_cast<size_t>(i)];
                if (!d.kodaira_exact) return "decomposition not exact in degree " + std::to_string(i);
                if (d.dim != d.harmonic.dim()) return "dim H != dim harmonic in degree " + std::to_string(i);
                if (!orthogonal(d.harmonic, d.incoming, c.gram(i)) || !orthogonal(d.harmonic, d.adjoint_range, c.gram(i)) ||
                    !orthogonal(d.incoming, d.adjoint_range, c.gram(i)))
                    return "pieces not orthogonal in degree " + std::to_string(i);
                if (laplacian(c, i).kernel != d.harmonic) return "Laplacian kernel differs in degree " + std::to_string(i);
                if (i < c.length() && kernel_basis(adjoint(c, i)) != orth(image_basis(c.diff(i)), c.gram(i + 1)).complement)
                    return "Ker D^* is not the complement of ran D in degree " + std::to_string(i);
                euler += (i % 2 ? -1 : 1) * static_cast<long>(c.dim(i));
            }
            if (rep.euler() != euler) return std::string("euler characteristic differs");
            const auto dual = dual_complex(c);
            const auto rd = cohomology(dual);
            for (int i = 0; i <= c.length(); ++i)
                if (rep.degrees[static_cast<size_t>(i)].harmonic.dim() != rd.degrees[static_cast<size_t>(c.length() - i)].harmonic.dim())
                    return "dual harmonic dims do not mirror in degree " + std::to_string(i);
            if (!(dual_complex(dual) == c)) return std::string("dual of dual differs");
            return std::nullopt;
        });

        const int m = gen.uniform(0, cfg.max_length);
        std::vector<Index> dims(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m / 2; ++i) dims[static_cast<size_t>(i)] = dims[static_cast<size_t>(m - i)] = gen.uniform(0, cfg.max_dim);
        const FiniteComplex d = gen.full_complex(dims, false);
        LinkMaps links;
        for (int i = 0; i <= m; ++i) links.phi.push_back(gen.cayley_orthogonal(dims[static_cast<size_t>(i)]));
        links.c.assign(static_cast<size_t>(m), Rational(1));
        run.run("complementary", where, [&]() -> Outcome {
            const FiniteComplex l = build_complementary(d, links);
            const auto rel = check_related(d, l, links);
            if (!rel.related || !rel.complementary) return std::string("built complex is not complementary");
            const auto hd = cohomology(d), hl = cohomology(l);
            for (int j = 0; j <= m; ++j)
                if (hd.degrees[static_cast<size_t>(j)].harmonic.dim() != hl.degrees[static_cast<size_t>(m - j)].harmonic.dim())
                    return "harmonic dims do not mirror in degree " + std::to_string(j);
            return std::nullopt;
        });

        const Index rows = gen.uniform(0, cfg.max_dim), cols = gen.uniform(0, cfg.max_dim);
        const Mat a = gen.matrix_of_rank(rows, cols, gen.uniform(0, cfg.max_dim));
        const Index s = gen.uniform(0, cfg.max_dim);
        Mat sym = gen.matrix(s, s);
        sym = Mat(sym + Mat(sym.transpose()));
        const Mat change = gen.invertible(s);
        run.run("linalg", where, [&]() -> Outcome {
            const Index rk = oracle::rank(a);
            if (kernel_basis(a).dim() != cols - rk || image_basis(a).dim() != rk) return std::string("rank-nullity");
            const Inertia in = congruence_signature(sym);
            if (!(in == oracle::sturm_inertia(sym))) return std::string("inertia differs from the Sturm count");
            if (!(congruence_signature(Mat(change.transpose() * sym * change)) == in)) return std::string("Sylvester invariance");
            return std::nullopt;
        });
    }
}

struct Surface {
    std::string name;
    std::vector<Simplex> tops;
};

void geometric_checks(Runner& run) {
    const std::vector<Surface> closed = {{"torus", tri::torus7()},
                                         {"S3", tri::simplex_boundary(4)},
                                         {"suspended torus", tri::suspension(tri::torus7(), 7, 8)},
                                         {"S2xS2", tri::product(tri::simplex_boundary(3), tri::simplex_boundary(3), 4)},
                                         {"CP2", tri::cp2()}};
    for (const auto& s : closed) {
        run.run("simplicial-homology", s.name, [&]() -> Outcome {
            const auto mine = betti_numbers(SimplicialComplex::generated_by(s.tops));
            const auto ref = oracle::betti(s.tops);
            if (mine != ref) return dims_text(mine) + " vs reference " + dims_text(ref);
            return std::nullopt;
        });
    }

    const std::vector<Surface> bounded = {{"cylinder", tri::cylinder()},
                                          {"disk", tri::disk()},
                                          {"torus minus disk", tri::torus_minus_disk()},
                                          {"genus 2 minus disk", tri::genus2_minus_disk()},
                                          {"torus", tri::torus7()}};
    for (const auto& s : bounded) {
        const auto m = build_rel_abs_pair(s.tops);
        run.run("relative-image", s.name, [&]() -> Outcome {
            const auto mine = image_dims_of(m.pair);
            const auto ref = oracle::relative_to_absolute_image(s.tops, tri::boundary_faces(s.tops));
            if (mine != ref) return dims_text(mine) + " vs reference " + dims_text(ref);
            for (size_t j = 0; j < mine.size(); ++j)
                if (mine[j] != mine[mine.size() - 1 - j]) return "image dims not mirrored " + dims_text(mine);
            return std::nullopt;
        });
        pair_checks(run, m.pair, s.name);
    }

    struct Suspended {
        std::string name;
        std::vector<Simplex> base;
        int vertices;
    };
    const std::vector<Suspended> suspended = {{"suspended torus", tri::torus7(), 7},
                                              {"suspended S3", tri::simplex_boundary(4), 5},
                                              {"suspended S2", tri::simplex_boundary(3), 4}};
    for (const auto& s : suspended) {
        const auto x = load_validate(suspension_input(s.base, s.vertices));
        const auto b = oracle::betti(s.base);
        const int m = static_cast<int>(b.size()) - 1;
        for (int p = 0; p <= m - 1; ++p) {
            run.run("suspension-ih", s.name + ", p = " + std::to_string(p), [&]() -> Outcome {
                Perversity per;
                for (const auto& st : x.strata) per.values[st.label] = p;
                const auto mine = intersection_homology(x, per).dims;
                const auto ref = oracle::suspension_ih(b, p);
                if (mine != ref) return dims_text(mine) + " vs reference " + dims_text(ref);
                return std::nullopt;
            });
        }
    }

    for (const auto& s : closed) {
        const auto x = load_validate(manifold_input(s.tops));
        if (!x.strata.empty()) continue;
        run.run("manifold-ih", s.name, [&]() -> Outcome {
            const auto mine = intersection_homology(x, perversity_by_name(x, "zero")).dims;
            const auto ref = oracle::betti(s.tops);
            if (mine != ref) return dims_text(mine) + " vs reference " + dims_text(ref);
            return std::nullopt;
        });
    }
}

}  // namespace

bool CheckSuite::ok() const {
    for (const auto& r : results)
        if (r.failures) return false;
    return !results.empty();
}

const CheckResult& CheckSuite::get(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return r;
    throw std::out_of_range("no check named " + name);
}

CheckSuite run_checks(const CheckConfig& config) {
    CheckSuite suite;
    suite.config = config;
    Runner run(suite);
    random_checks(run, config);
    geometric_checks(run);
    return suite;
}

}  // namespace hc
