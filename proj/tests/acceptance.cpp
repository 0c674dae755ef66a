// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hc/check.hpp"
#include "hc/formats.hpp"
#include "hc/oracles.hpp"
#include "hc/random.hpp"
#include "hc/report.hpp"
#include "hc/signature.hpp"
#include "hc/triangulations.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>

using namespace hc;

namespace {

using Dims = std::vector<Index>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures with a short reason each.
class Verdict {
public:
    void require(bool ok, const std::string& what) {
        if (ok) return;
        out_.pass = false;
        if (!out_.detail.empty()) out_.detail += "; ";
        out_.detail += what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
    Outcome done() {
        if (out_.pass) out_.detail = notes_;
        return out_;
    }

private:
    Outcome out_;
    std::string notes_;
};

std::string text(const Dims& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

Dims image_dims(const ComplexPair& p) {
    Dims out;
    for (const auto& d : image_cohomology(p).degrees) out.push_back(d.dim);
    return out;
}

bool clean(const CheckSuite& s, const std::string& name, long at_least, Verdict& v) {
    const auto& r = s.get(name);
    v.require(r.cases >= at_least, name + ": only " + std::to_string(r.cases) + " cases");
    v.require(r.failures == 0, name + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
    return r.cases >= at_least && r.failures == 0;
}

Perversity constant(const StratifiedComplex& x, int value) {
    Perversity p;
    for (const auto& s : x.strata) p.values[s.label] = value;
    return p;
}

std::vector<Simplex> s2xs2() { return tri::product(tri::simplex_boundary(3), tri::simplex_boundary(3), 4); }

CheckConfig config;
CheckSuite suite;
double suite_seconds = 0;

Outcome intermediate_theorem() {
    Verdict v;
    clean(suite, "intermediate-invariants", config.instances, v);
    clean(suite, "intermediate-cohomology", config.instances, v);
    v.require(suite_seconds < 60, "suite took " + std::to_string(suite_seconds) + " s");
    v.note(std::to_string(suite.get("intermediate-invariants").cases) + " pairs");
    v.note("suite " + std::to_string(static_cast<int>(suite_seconds)) + " s");
    return v.done();
}

Outcome five_way() {
    Verdict v;
    clean(suite, "five-way", config.instances, v);
    v.note(std::to_string(suite.get("five-way").cases) + " pairs");
    return v.done();
}

Outcome friedrichs() {
    Verdict v;
    clean(suite, "friedrichs", config.instances, v);
    v.note(std::to_string(suite.get("friedrichs").cases) + " pairs");
    return v.done();
}

Outcome kodaira() {
    Verdict v;
    clean(suite, "kodaira", 1000, v);
    v.note(std::to_string(suite.get("kodaira").cases) + " complexes");
    return v.done();
}

Outcome complementary() {
    Verdict v;
    clean(suite, "complementary", 200, v);
    v.note(std::to_string(suite.get("complementary").cases) + " complexes");
    return v.done();
}

Outcome lefschetz() {
    Verdict v;
    const std::vector<std::pair<std::string, std::vector<Simplex>>> surfaces = {
        {"cylinder", tri::cylinder()},
        {"disk", tri::disk()},
        {"torus minus disk", tri::torus_minus_disk()},
        {"genus 2 minus disk", tri::genus2_minus_disk()}};
    for (const auto& [name, tops] : surfaces) {
        const auto m = build_rel_abs_pair(tops);
        v.require(!m.boundary.empty(), name + " has no boundary");
        const Dims d = image_dims(m.pair);
        const Dims ref = oracle::relative_to_absolute_image(tops, tri::boundary_faces(tops));
        v.require(d == ref, name + " " + text(d) + " vs reference " + text(ref));
        for (size_t j = 0; j < d.size(); ++j) v.require(d[j] == d[d.size() - 1 - j], name + " not mirrored " + text(d));
        v.note(name + " " + text(d));
    }
    const Dims t = image_dims(build_rel_abs_pair(tri::torus_minus_disk()).pair);
    v.require(t.size() == 3 && t[1] == 2, "torus minus disk degree 1 is " + text(t));
    clean(suite, "relative-image", 4, v);
    return v.done();
}

Outcome intersection_homology_oracle() {
    Verdict v;
    const auto x = load_validate(suspension_input(tri::torus7(), 7));
    const auto lower = perversity_by_name(x, "lower-middle"), upper = perversity_by_name(x, "upper-middle");
    const Dims lo = intersection_homology(x, lower).dims, hi = intersection_homology(x, upper).dims;
    const Dims torus = oracle::betti(tri::torus7());
    v.require(lo == Dims{1, 2, 0, 1} && lo == oracle::suspension_ih(torus, 0), "lower-middle " + text(lo));
    v.require(hi == Dims{1, 0, 2, 1} && hi == oracle::suspension_ih(torus, 1), "upper-middle " + text(hi));
    const auto d = duality_chi_report(x, lower, upper);
    v.require(d.image.image == Dims{1, 0, 0, 1}, "image " + text(d.image.image));
    v.require(d.duality, "image duality fails");
    v.require(d.euler == 0 && d.euler_odd_zero, "image euler " + std::to_string(d.euler));

    const auto s3 = load_validate(manifold_input(tri::simplex_boundary(4)));
    v.require(intersection_homology(s3, Perversity{}).dims == Dims{1, 0, 0, 1}, "S3 as a manifold");
    // S3 again, as the suspension of S2 with its two cone points declared singular.
    const auto sigma = load_validate(suspension_input(tri::simplex_boundary(3), 4));
    for (int p = 0; p <= 1; ++p) {
        const Dims s = intersection_homology(sigma, constant(sigma, p)).dims;
        v.require(s == Dims{1, 0, 0, 1}, "suspended S2 at p = " + std::to_string(p) + " " + text(s));
    }
    for (const auto& name : {"zero", "lower-middle", "upper-middle", "top"})
        v.require(intersection_homology(sigma, perversity_by_name(sigma, name)).dims == Dims{1, 0, 0, 1},
                  std::string("suspended S2 at ") + name);
    clean(suite, "suspension-ih", 1, v);
    v.note("lower " + text(lo) + ", upper " + text(hi) + ", image " + text(d.image.image));
    return v.done();
}

Outcome weight_formula() {
    Verdict v;
    struct Case {
        int l;
        Rational c;
        int hand;
    };
    // [[l/2 + 1/(2c)]], [[x]] the greatest integer strictly below x, and 0 when l = 0.
    const std::vector<Case> table = {
        {0, Rational(1, 4), 0}, {0, Rational(2), 0},
        {1, Rational(1, 4), 2}, {1, Rational(1, 2), 1}, {1, Rational(1), 0}, {1, Rational(2), 0},
        {2, Rational(1, 4), 2}, {2, Rational(1, 2), 1}, {2, Rational(1), 1}, {2, Rational(2), 1},
        {3, Rational(1, 4), 3}, {3, Rational(1), 1},
    };
    for (const auto& t : table) {
        const int got = pg_value(t.l, t.c);
        v.require(got == t.hand, "l = " + std::to_string(t.l) + ", c = " + to_string(t.c) + ": " + std::to_string(got) +
                                     " instead of " + std::to_string(t.hand));
    }
    v.note(std::to_string(table.size()) + " cases");
    return v.done();
}

Outcome signatures() {
    Verdict v;
    const auto s4 = image_pairing(build_rel_abs_pair(tri::simplex_boundary(5)), 2);
    v.require(s4.signature == 0, "S4 signature " + std::to_string(s4.signature));

    const auto prod = build_rel_abs_pair(s2xs2());
    const auto h = image_pairing(prod, 2);
    v.require(h.signature == 0 && h.matrix.rows() == 2, "S2xS2 signature " + std::to_string(h.signature));

    const auto cp2 = build_rel_abs_pair(tri::cp2(), 1);
    const auto plus = image_pairing(cp2, 2);
    const auto minus = image_pairing(build_rel_abs_pair(tri::cp2(), -1), 2);
    v.require(plus.signature == 1 || plus.signature == -1, "CP2 signature " + std::to_string(plus.signature));
    v.require(minus.signature == -plus.signature, "CP2 signature does not flip");

    const auto xcp2 = load_validate(manifold_input(tri::cp2()));
    v.require(perverse_signature(xcp2, Perversity{}, Perversity{}).signature == plus.signature,
              "stratified CP2 disagrees with the manifold pairing");

    Generator gen(config.seed);
    for (int t = 0; t < 5; ++t) {
        v.require(image_pairing(cp2, 2, gen.invertible(1)).signature == plus.signature, "CP2 basis change");
        v.require(image_pairing(prod, 2, gen.invertible(2)).signature == 0, "S2xS2 basis change");
    }

    // Nondegeneracy wherever the image is nonzero.
    const std::vector<std::pair<std::string, PairingReport>> forms = {
        {"S2xS2", h},
        {"CP2", plus},
        {"punctured CP2", image_pairing(build_rel_abs_pair(tri::remove_star(tri::cp2(), 0)), 2)},
        {"torus minus disk", image_pairing(build_rel_abs_pair(tri::torus_minus_disk()), 1)},
        {"genus 2 minus disk", image_pairing(build_rel_abs_pair(tri::genus2_minus_disk()), 1)},
        {"torus", image_pairing(build_rel_abs_pair(tri::torus7()), 1)}};
    for (const auto& [name, r] : forms) {
        v.require(r.matrix.rows() > 0, name + " has an empty image");
        v.require(r.nondegenerate, name + " pairing is degenerate");
    }
    v.note("S4 0, S2xS2 0, CP2 " + std::to_string(plus.signature) + "/" + std::to_string(minus.signature));
    return v.done();
}

Outcome index_identity() {
    Verdict v;
    clean(suite, "index", config.instances, v);
    const std::vector<std::pair<std::string, std::vector<Simplex>>> spaces = {
        {"cylinder", tri::cylinder()},          {"disk", tri::disk()},
        {"torus minus disk", tri::torus_minus_disk()}, {"genus 2 minus disk", tri::genus2_minus_disk()},
        {"torus", tri::torus7()},               {"mobius band", tri::mobius_band()},
        {"S3", tri::simplex_boundary(4)}};
    for (const auto& [name, tops] : spaces) {
        const auto ic = build_intermediate(build_rel_abs_pair(tops).pair);
        const auto r = index_even(ic);
        long chi = 0;
        for (size_t i = 0; i < ic.b.size(); ++i)
            chi += (i % 2 ? -1 : 1) * static_cast<long>(cohomology(ic.p).degrees[i].dim);
        v.require(r.index == chi && r.euler == chi, name + ": index " + std::to_string(r.index) + " vs " + std::to_string(chi));
    }
    v.note(std::to_string(suite.get("index").cases) + " pairs and " + std::to_string(spaces.size()) + " triangulations");
    return v.done();
}

Outcome determinism_round_trip() {
    Verdict v;
    const std::string first = check_report(suite).render(OutputFormat::structured);
    const std::string second = check_report(run_checks(config)).render(OutputFormat::structured);
    v.require(first == second, "two runs with seed " + std::to_string(config.seed) + " differ");

    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(HC_FIXTURES)) {
        const auto path = e.path();
        if (path.stem() == "bad") continue;
        const std::string name = path.filename().string();
        const std::string body = read_file(path.string());
        const auto ext = path.extension();
        try {
            if (ext == ".cplx") {
                const auto c = parse_complex(body, name);
                v.require(parse_complex(emit_complex(c)) == c, name);
            } else if (ext == ".pair") {
                const auto p = parse_pair(body, name);
                v.require(same_pair_file(parse_pair(emit_pair(p)), p), name);
            } else if (ext == ".strat") {
                const auto s = parse_strat(body, name);
                const std::string once = emit_strat(s);
                v.require(parse_strat(once) == s.canonical() && emit_strat(parse_strat(once)) == once, name);
            } else {
                continue;
            }
            ++files;
        } catch (const std::exception& ex) {
            v.require(false, name + ": " + ex.what());
        }
    }
    v.require(files > 0, "no fixtures found");
    v.note("reports identical, " + std::to_string(files) + " fixtures");
    return v.done();
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    suite = run_checks(config);
    suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"intermediate complex invariants and cohomology", intermediate_theorem},
        {"five splitting conditions agree", five_way},
        {"Friedrichs kernel identity", friedrichs},
        {"Kodaira decomposition and harmonic dimensions", kodaira},
        {"complementary harmonic mirror", complementary},
        {"relative/absolute image duality on surfaces", lefschetz},
        {"intersection homology against the suspension formula", intersection_homology_oracle},
        {"weight formula table", weight_formula},
        {"signatures", signatures},
        {"index identity", index_identity},
        {"determinism and round trip", determinism_round_trip},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
