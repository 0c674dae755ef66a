#include "hc/report.hpp"

#include <algorithm>
#include <sstream>

namespace hc {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::set(const std::string& key, const std::string& value) {
    order_.push_back(static_cast<int>(entries_.size()));
    entries_.emplace_back(key, value);
}

void Report::set(const std::string& key, long value) { set(key, std::to_string(value)); }

void Report::flag(const std::string& key, bool value) { set(key, value ? "true" : "false"); }

void Report::table(const std::string& name, std::vector<Series> columns) {
    order_.push_back(-static_cast<int>(tables_.size()) - 1);
    tables_.push_back({name, std::move(columns)});
}

void Report::matrix(const std::string& key, const Mat& m) {
    std::string rows = "[";
    for (Index r = 0; r < m.rows(); ++r) {
        rows += r ? ",[" : "[";
        for (Index c = 0; c < m.cols(); ++c) rows += (c ? "," : "") + to_string(m(r, c));
        rows += "]";
    }
    set(key, rows + "]");
}

std::string Report::render(OutputFormat format) const {
    std::ostringstream out;
    if (format == OutputFormat::structured) {
        out << "hcx-report 1\ncommand " << command_ << "\n";
        for (int o : order_) {
            if (o >= 0) {
                out << entries_[static_cast<size_t>(o)].first << ' ' << entries_[static_cast<size_t>(o)].second << "\n";
                continue;
            }
            const Table& t = tables_[static_cast<size_t>(-o - 1)];
            for (const auto& s : t.columns) {
                out << t.name << '.' << s.name;
                for (const auto& v : s.values) out << ' ' << v;
                out << "\n";
            }
        }
        return out.str();
    }
    size_t width = 0;
    for (const auto& [k, v] : entries_) width = std::max(width, k.size());
    out << command_ << "\n";
    for (int o : order_) {
        if (o >= 0) {
            const auto& [k, v] = entries_[static_cast<size_t>(o)];
            out << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
            continue;
        }
        const Table& t = tables_[static_cast<size_t>(-o - 1)];
        size_t rows = 0;
        for (const auto& s : t.columns) rows = std::max(rows, s.values.size());
        std::vector<size_t> w{6};
        for (const auto& s : t.columns) {
            size_t cw = s.name.size();
            for (const auto& v : s.values) cw = std::max(cw, v.size());
            w.push_back(cw);
        }
        out << "  " << t.name << "\n    degree";
        for (size_t c = 0; c < t.columns.size(); ++c)
            out << "  " << t.columns[c].name << std::string(w[c + 1] - t.columns[c].name.size(), ' ');
        out << "\n";
        for (size_t r = 0; r < rows; ++r) {
            const std::string deg = std::to_string(r);
            out << "    " << deg << std::string(w[0] - deg.size(), ' ');
            for (size_t c = 0; c < t.columns.size(); ++c) {
                const std::string v = r < t.columns[c].values.size() ? t.columns[c].values[r] : "";
                out << "  " << v << std::string(w[c + 1] - v.size(), ' ');
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {

template <typename T>
Series series(const std::string& name, const std::vector<T>& values) {
    Series s{name, {}};
    for (const auto& v : values) {
        if constexpr (std::is_same_v<T, bool>) s.values.push_back(v ? "yes" : "no");
        else if constexpr (std::is_same_v<T, std::string>) s.values.push_back(v);
        else s.values.push_back(std::to_string(v));
    }
    return s;
}

std::vector<Index> dims_of(const FiniteComplex& c) {
    std::vector<Index> d;
    for (int i = 0; i <= c.length(); ++i) d.push_back(c.dim(i));
    return d;
}

std::string perversity_text(const Perversity& p) {
    if (p.values.empty()) return "(no singular strata)";
    std::string s;
    for (const auto& [k, v] : p.values) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
    return s;
}

}  // namespace

Report complex_report(const FiniteComplex& c) {
    require_valid(c);
    Report r("analyze-complex");
    r.set("length", c.length());
    const auto h = cohomology(c);
    std::vector<Index> dim, harm;
    std::vector<bool> exact;
    for (const auto& d : h.degrees) {
        dim.push_back(d.dim);
        harm.push_back(d.harmonic.dim());
        exact.push_back(d.kodaira_exact);
    }
    std::vector<Series> cols{series("space", dims_of(c)), series("H", dim), series("harmonic", harm), series("kodaira_exact", exact)};
    if (c.full_domains()) {
        std::vector<Index> lap;
        for (int i = 0; i <= c.length(); ++i) lap.push_back(laplacian(c, i).kernel.dim());
        cols.push_back(series("laplacian_kernel", lap));
    }
    r.table("cohomology", cols);
    r.set("euler", h.euler());
    return r;
}

Report pair_report(const PairFile& pf) {
    const ComplexPair& p = pf.pair;
    require_valid(p);
    Report r("analyze-pair");
    r.set("length", p.length());
    const auto im = image_cohomology(p);
    const auto hd = cohomology(p.small());
    const auto hl = cohomology(p.big);
    std::vector<Index> image, small, big;
    std::vector<bool> inj, surj, agree;
    std::vector<std::string> five;
    for (int j = 0; j <= p.length(); ++j) {
        const auto& d = im.degrees[static_cast<size_t>(j)];
        image.push_back(d.dim);
        small.push_back(hd.degrees[static_cast<size_t>(j)].dim);
        big.push_back(hl.degrees[static_cast<size_t>(j)].dim);
        inj.push_back(d.injective);
        surj.push_back(d.surjective);
        const auto sc = splitting_conditions(p, j);
        std::string bits;
        for (bool b : sc.holds) bits += b ? '1' : '0';
        five.push_back(bits);
        agree.push_back(sc.agree());
    }
    r.table("image", {series("H_small", small), series("H_big", big), series("image", image), series("injective", inj),
                      series("surjective", surj), series("five_way", five), series("five_way_agree", agree)});
    r.set("image.euler", im.euler());
    const auto f = friedrichs_identities(p);
    r.flag("friedrichs.kernel_identity", f.kernel_identity);
    r.set("friedrichs.kernel_dim", static_cast<long>(f.kernel.dim()));
    r.set("friedrichs.range_composite", static_cast<long>(f.range_composite));
    r.set("friedrichs.range_max", static_cast<long>(f.range_max));
    r.flag("friedrichs.range_equal", f.range_equal);
    if (pf.links) {
        const auto rel = check_related(p, *pf.links);
        r.flag("links.related", rel.related);
        r.flag("links.complementary", rel.complementary);
    }
    for (bool a : agree)
        if (!a) throw InvariantError("five-way conditions disagree\n" + r.render(OutputFormat::structured));
    if (!f.kernel_identity) throw InvariantError("Friedrichs kernel identity fails\n" + r.render(OutputFormat::structured));
    return r;
}

Report intermediate_report(const ComplexPair& p) {
    require_valid(p);
    const auto ic = build_intermediate(p);
    Report r("build-intermediate");
    r.set("length", p.length());
    std::vector<Index> kb, kc, pb, w, a, pa, nn, mm, b;
    std::vector<bool> shortcut;
    for (size_t i = 0; i < ic.trace.size(); ++i) {
        const auto& t = ic.trace[i];
        kb.push_back(t.kernel_big.dim());
        kc.push_back(t.kernel_complement.dim());
        pb.push_back(t.pullback.dim());
        w.push_back(t.w.dim());
        a.push_back(t.a.dim());
        pa.push_back(t.projected_a.dim());
        nn.push_back(t.n.dim());
        mm.push_back(t.m.dim());
        b.push_back(ic.b[i].dim());
        shortcut.push_back(t.shortcut);
    }
    std::vector<Index> vd;
    for (const auto& v : p.domains) vd.push_back(v.dim());
    r.table("trace", {series("domain_D", vd), series("ker_L", kb), series("ker_L_perp", kc), series("pullback", pb),
                      series("W", w), series("A", a), series("proj_A", pa), series("N", nn), series("M", mm),
                      series("B", b), series("shortcut", shortcut)});
    std::vector<Index> hp, im, lap;
    const auto coh = cohomology(ic.p);
    const auto img = image_cohomology(p);
    for (int i = 0; i <= p.length(); ++i) {
        hp.push_back(coh.degrees[static_cast<size_t>(i)].dim);
        im.push_back(img.degrees[static_cast<size_t>(i)].dim);
        lap.push_back(laplacian_m(ic, i).kernel_dim);
    }
    r.table("cohomology", {series("H_P", hp), series("image", im), series("laplacian_m_kernel", lap)});
    const auto idx = index_even(ic);
    r.set("index.kernel", static_cast<long>(idx.kernel));
    r.set("index.cokernel", static_cast<long>(idx.cokernel));
    r.set("index.value", idx.index);
    r.set("index.euler", idx.euler);
    const auto inv = check_invariants(ic);
    const auto oracle = verify_against_oracle(ic);
    r.set("invariants", inv ? *inv : "ok");
    r.set("oracle", oracle ? "mismatch in degree " + std::to_string(*oracle) : "ok");
    if (inv || oracle || idx.index != idx.euler || hp != lap)
        throw InvariantError("intermediate complex check failed\n" + r.render(OutputFormat::structured));
    return r;
}

Report ih_report(const StratifiedComplex& x, const Perversity& p, const std::optional<Perversity>& q_in) {
    const Perversity q = q_in ? *q_in : dual(x, p);
    Report r("ih");
    r.set("dimension", x.n);
    r.set("strata", static_cast<long>(x.strata.size()));
    r.set("perversity", perversity_text(p));
    r.set("second_perversity", perversity_text(q));
    const auto ihp = intersection_homology(x, p);
    const auto ihq = intersection_homology(x, q);
    r.table("ih", {series("IH_p", ihp.dims), series("IH_q", ihq.dims)});
    r.set("ih.euler_p", ihp.euler());
    if (!leq(p, q) && !leq(q, p)) {
        r.set("image", "skipped: perversities are not comparable");
        return r;
    }
    if (!orientation(x)) {
        const auto im = leq(p, q) ? image_ih(x, p, q) : image_ih(x, q, p);
        r.table("image", {series("image", im.image)});
        r.set("duality", "skipped: not orientable");
        return r;
    }
    const auto d = duality_chi_report(x, p, q);
    r.set("image.direction", leq(p, q) ? "p->q" : "q->p");
    r.table("image", {series("image", d.image.image), series("mirrored", d.mirrored)});
    r.flag("duality.holds", d.duality);
    r.flag("duality.hypotheses", d.hypotheses);
    r.flag("duality.q_is_dual", d.q_is_dual);
    r.set("chi", d.euler);
    if (x.n % 2 == 1) {
        r.flag("chi.odd_zero", d.euler_odd_zero);
    } else {
        r.flag("chi.parity", d.euler_parity);
        r.flag("chi.signed_middle", d.euler_literal);
    }
    if (!d.regular_betti.empty())
        r.table("regular_part", {series("betti", d.regular_betti), series("le_IH_small", d.regular_bound_small),
                                 series("le_IH_large", d.regular_bound_large)});
    if (d.hypotheses && (!d.duality || !d.euler_odd_zero || !d.euler_parity))
        throw InvariantError("duality or euler check failed\n" + r.render(OutputFormat::structured));
    return r;
}

Report signature_report(const StratifiedComplex& x, const Perversity& p, int flip) {
    const auto pr = perverse_signature(x, p, dual(x, p), flip);
    Report r("signature");
    r.set("dimension", x.n);
    r.set("perversity", perversity_text(p));
    r.set("model", pr.model);
    r.set("degree", pr.degree);
    r.set("image_dim", static_cast<long>(pr.matrix.rows()));
    r.matrix("pairing", pr.matrix);
    r.flag("symmetric", pr.symmetric);
    r.set("inertia", std::to_string(pr.inertia.pos) + " " + std::to_string(pr.inertia.neg) + " " + std::to_string(pr.inertia.zero));
    r.set("signature", pr.signature);
    r.flag("nondegenerate", pr.nondegenerate);
    return r;
}

Report check_report(const CheckSuite& suite) {
    Report r("check");
    r.set("seed", std::to_string(suite.config.seed));
    r.set("instances", suite.config.instances);
    r.set("max_dim", suite.config.max_dim);
    r.set("max_length", suite.config.max_length);
    for (const auto& c : suite.results) {
        r.set("check." + c.name + ".cases", c.cases);
        r.set("check." + c.name + ".failures", c.failures);
        if (!c.first_failure.empty()) r.set("check." + c.name + ".first_failure", c.first_failure);
    }
    r.set("status", suite.ok() ? "ok" : "failed");
    return r;
}

}  // namespace hc
