#include "hc/formats.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hc {

ParseError::ParseError(const std::string& source, int line_, int column_, const std::string& what)
    : ValidationError(source + ":" + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

namespace {

using nlohmann::json;

struct Token {
    std::string text;
    int column;   // 1-based
};

struct Line {
    int number;
    std::string raw;
    std::vector<Token> tokens;
};

class Reader {
public:
    Reader(std::string_view text, std::string source) : source_(std::move(source)) {
        std::istringstream in{std::string(text)};
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            Line line{number, raw, {}};
            size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
                if (i >= raw.size()) break;
                const size_t start = i;
                while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
                line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
            }
            if (line.tokens.empty() || line.tokens.front().text[0] == '#') continue;
            lines_.push_back(std::move(line));
        }
    }

    [[noreturn]] void fail(const Line& l, int column, const std::string& what) const {
        throw ParseError(source_, l.number, column, what);
    }
    [[noreturn]] void fail(const Line& l, size_t token, const std::string& what) const {
        fail(l, token < l.tokens.size() ? l.tokens[token].column : static_cast<int>(l.raw.size()) + 1, what);
    }
    [[noreturn]] void fail_end(const std::string& what) const {
        throw ParseError(source_, lines_.empty() ? 1 : lines_.back().number + 1, 1, what);
    }

    /// Checks the header and returns the remaining lines.
    std::vector<Line> body(const std::string& kind) const {
        if (lines_.empty()) throw ParseError(source_, 1, 1, "empty input, expected 'format " + kind + " 1'");
        const Line& h = lines_.front();
        if (h.tokens.size() != 3 || h.tokens[0].text != "format" || h.tokens[1].text != kind || h.tokens[2].text != "1")
            fail(h, size_t{0}, "expected header 'format " + kind + " 1'");
        return {lines_.begin() + 1, lines_.end()};
    }

    void arity(const Line& l, size_t n) const {
        if (l.tokens.size() < n) fail(l, l.tokens.size(), "expected " + std::to_string(n - 1) + " argument(s) after '" + l.tokens[0].text + "'");
        if (l.tokens.size() > n) fail(l, n, "unexpected token '" + l.tokens[n].text + "'");
    }

    long integer(const Line& l, size_t token, long lo, long hi) const {
        const std::string& t = l.tokens[token].text;
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::logic_error&) {
            fail(l, token, "expected an integer, got '" + t + "'");
        }
        if (used != t.size()) fail(l, token, "expected an integer, got '" + t + "'");
        if (v < lo || v > hi) fail(l, token, "value " + t + " out of range " + std::to_string(lo) + ".." + std::to_string(hi));
        return v;
    }

    Rational rational(const Line& l, size_t token) const {
        try {
            return parse_rational(l.tokens[token].text);
        } catch (const std::invalid_argument&) {
            fail(l, token, "expected a rational p/q, got '" + l.tokens[token].text + "'");
        }
    }

    /// JSON literal running from the given token to the end of the line.
    json literal(const Line& l, size_t token) const {
        if (token >= l.tokens.size()) fail(l, token, "missing matrix literal");
        const int col = l.tokens[token].column;
        try {
            return json::parse(l.raw.substr(static_cast<size_t>(col) - 1));
        } catch (const json::parse_error& e) {
            fail(l, col + static_cast<int>(e.byte) - 1, "malformed literal");
        }
    }

    Rational entry(const Line& l, size_t token, const json& e) const {
        try {
            if (e.is_string()) return parse_rational(e.get<std::string>());
            if (e.is_number_integer()) return Rational(e.get<long long>());
        } catch (const std::invalid_argument&) {
        }
        fail(l, token, "matrix entry " + e.dump() + " is not a rational string");
    }

    Mat matrix(const Line& l, size_t token, Index rows, Index cols) const {
        const json j = literal(l, token);
        if (!j.is_array() || static_cast<Index>(j.size()) != rows)
            fail(l, token, "expected " + std::to_string(rows) + " rows");
        Mat m = zeros(rows, cols);
        for (Index r = 0; r < rows; ++r) {
            const json& row = j[static_cast<size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != cols)
                fail(l, token, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
            for (Index c = 0; c < cols; ++c) m(r, c) = entry(l, token, row[static_cast<size_t>(c)]);
        }
        return m;
    }

    /// A list of vectors of the given length, returned as columns.
    Mat vectors(const Line& l, size_t token, Index length) const {
        const json j = literal(l, token);
        if (!j.is_array()) fail(l, token, "expected a list of vectors");
        Mat m = zeros(length, static_cast<Index>(j.size()));
        for (size_t c = 0; c < j.size(); ++c) {
            if (!j[c].is_array() || static_cast<Index>(j[c].size()) != length)
                fail(l, token, "vector " + std::to_string(c) + " must have " + std::to_string(length) + " entries");
            for (Index r = 0; r < length; ++r) m(r, static_cast<Index>(c)) = entry(l, token, j[c][static_cast<size_t>(r)]);
        }
        return m;
    }

private:
    std::string source_;
    std::vector<Line> lines_;
};

// Shared reader for the complex part of .cplx and .pair files.
struct ComplexBuilder {
    explicit ComplexBuilder(const Reader& r) : reader(r) {}

    const Reader& reader;
    int length = -1;
    std::vector<Index> dims;
    FiniteComplex c;
    std::set<std::pair<std::string, long>> seen;

    void degree_key(const Line& l, long i) {
        if (!seen.insert({l.tokens[0].text, i}).second)
            reader.fail(l, size_t{1}, "duplicate '" + l.tokens[0].text + " " + std::to_string(i) + "'");
    }

    void need_dims(const Line& l) const {
        if (dims.empty()) reader.fail(l, size_t{0}, "'length' and 'dims' must come first");
    }

    /// Returns false if the key is not a complex key.
    bool take(const Line& l) {
        const std::string& key = l.tokens[0].text;
        if (key == "length") {
            reader.arity(l, 2);
            if (length >= 0) reader.fail(l, size_t{0}, "duplicate 'length'");
            length = static_cast<int>(reader.integer(l, 1, 0, 1000));
        } else if (key == "dims") {
            if (length < 0) reader.fail(l, size_t{0}, "'length' must come before 'dims'");
            if (!dims.empty()) reader.fail(l, size_t{0}, "duplicate 'dims'");
            reader.arity(l, static_cast<size_t>(length) + 2);
            for (int i = 0; i <= length; ++i) dims.push_back(reader.integer(l, static_cast<size_t>(i) + 1, 0, 100000));
            for (Index d : dims) {
                c.grams.push_back(identity(d));
                c.domains.push_back(Subspace::full(d));
            }
            for (int i = 0; i < length; ++i)
                c.diffs.push_back(zeros(dims[static_cast<size_t>(i) + 1], dims[static_cast<size_t>(i)]));
        } else if (key == "gram" || key == "diff" || key == "domain") {
            need_dims(l);
            if (l.tokens.size() < 3) reader.fail(l, l.tokens.size(), "expected a degree and a literal");
            const long top = key == "diff" ? length - 1 : length;
            const long i = reader.integer(l, 1, 0, top);
            degree_key(l, i);
            const size_t u = static_cast<size_t>(i);
            if (key == "gram") c.grams[u] = reader.matrix(l, 2, dims[u], dims[u]);
            else if (key == "diff") c.diffs[u] = reader.matrix(l, 2, dims[u + 1], dims[u]);
            else c.domains[u] = Subspace::span(reader.vectors(l, 2, dims[u]));
        } else {
            return false;
        }
        return true;
    }

    void finish() const {
        if (length < 0) reader.fail_end("missing 'length'");
        if (dims.empty()) reader.fail_end("missing 'dims'");
    }
};

std::string literal(const Mat& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows.dump();
}

void emit_body(std::ostringstream& out, const FiniteComplex& c, bool with_domains) {
    out << "length " << c.length() << "\n";
    out << "dims";
    for (int i = 0; i <= c.length(); ++i) out << ' ' << c.dim(i);
    out << "\n";
    for (int i = 0; i <= c.length(); ++i)
        if (!same_matrix(c.gram(i), identity(c.dim(i)))) out << "gram " << i << ' ' << literal(c.gram(i)) << "\n";
    for (int i = 0; i < c.length(); ++i) out << "diff " << i << ' ' << literal(c.diff(i)) << "\n";
    if (with_domains)
        for (int i = 0; i <= c.length(); ++i)
            if (!c.domain(i).is_full()) out << "domain " << i << ' ' << literal(c.domain(i).basis().transpose()) << "\n";
}

}  // namespace

FiniteComplex parse_complex(std::string_view text, const std::string& source) {
    Reader reader(text, source);
    ComplexBuilder b(reader);
    for (const Line& l : reader.body("cplx"))
        if (!b.take(l)) reader.fail(l, size_t{0}, "unknown key '" + l.tokens[0].text + "'");
    b.finish();
    return b.c;
}

PairFile parse_pair(std::string_view text, const std::string& source) {
    Reader reader(text, source);
    ComplexBuilder b(reader);
    std::map<long, Mat> phi;
    std::map<long, Rational> constants;
    const Line* first_link = nullptr;
    const auto lines = reader.body("pair");
    for (const Line& l : lines) {
        const std::string& key = l.tokens[0].text;
        if (key == "phi") {
            b.need_dims(l);
            if (l.tokens.size() < 3) reader.fail(l, l.tokens.size(), "expected a degree and a literal");
            const long i = reader.integer(l, 1, 0, b.length);
            b.degree_key(l, i);
            phi[i] = reader.matrix(l, 2, b.dims[static_cast<size_t>(b.length - i)], b.dims[static_cast<size_t>(i)]);
            if (!first_link) first_link = &l;
        } else if (key == "constant") {
            b.need_dims(l);
            reader.arity(l, 3);
            const long i = reader.integer(l, 1, 0, b.length - 1);
            b.degree_key(l, i);
            constants[i] = reader.rational(l, 2);
            if (!first_link) first_link = &l;
        } else if (!b.take(l)) {
            reader.fail(l, size_t{0}, "unknown key '" + key + "'");
        }
    }
    b.finish();
    PairFile out;
    out.pair.domains = b.c.domains;
    out.pair.big = b.c;
    for (auto& d : out.pair.big.domains) d = Subspace::full(d.ambient());
    if (first_link) {
        if (static_cast<int>(phi.size()) != b.length + 1 || static_cast<int>(constants.size()) != b.length)
            reader.fail(*first_link, size_t{0}, "link maps need 'phi' for every degree and 'constant' for every differential");
        LinkMaps links;
        for (auto& [i, m] : phi) links.phi.push_back(m);
        for (auto& [i, v] : constants) links.c.push_back(v);
        out.links = std::move(links);
    }
    return out;
}

StratifiedInput parse_strat(std::string_view text, const std::string& source) {
    Reader reader(text, source);
    StratifiedInput s;
    bool have_vertices = false;
    for (const Line& l : reader.body("strat")) {
        const std::string& key = l.tokens[0].text;
        if (key == "vertices") {
            reader.arity(l, 2);
            if (have_vertices) reader.fail(l, size_t{0}, "duplicate 'vertices'");
            s.vertices = static_cast<int>(reader.integer(l, 1, 1, 1000000));
            have_vertices = true;
        } else if (key == "simplex") {
            if (!have_vertices) reader.fail(l, size_t{0}, "'vertices' must come first");
            if (l.tokens.size() < 3) reader.fail(l, l.tokens.size(), "expected vertices and an orientation sign");
            Simplex t;
            for (size_t i = 1; i + 1 < l.tokens.size(); ++i)
                t.push_back(static_cast<int>(reader.integer(l, i, 0, s.vertices - 1)));
            const std::string& sign = l.tokens.back().text;
            if (sign != "+" && sign != "-") reader.fail(l, l.tokens.size() - 1, "orientation must be '+' or '-'");
            s.tops.push_back(t);
            s.signs.push_back(sign == "+" ? 1 : -1);
        } else if (key == "stratum") {
            reader.arity(l, 3);
            s.strata.push_back({l.tokens[1].text, static_cast<int>(reader.integer(l, 2, 0, 1000))});
        } else if (key == "label") {
            if (!have_vertices) reader.fail(l, size_t{0}, "'vertices' must come first");
            if (l.tokens.size() < 3) reader.fail(l, l.tokens.size(), "expected vertices and a stratum");
            Simplex t;
            for (size_t i = 1; i + 1 < l.tokens.size(); ++i)
                t.push_back(static_cast<int>(reader.integer(l, i, 0, s.vertices - 1)));
            s.labels.push_back({t, l.tokens.back().text});
        } else if (key == "weight") {
            reader.arity(l, 3);
            if (!s.weights.emplace(l.tokens[1].text, reader.rational(l, 2)).second)
                reader.fail(l, size_t{1}, "duplicate weight for '" + l.tokens[1].text + "'");
        } else {
            reader.fail(l, size_t{0}, "unknown key '" + key + "'");
        }
    }
    if (!have_vertices) reader.fail_end("missing 'vertices'");
    return s;
}

std::string emit_complex(const FiniteComplex& c) {
    std::ostringstream out;
    out << "format cplx 1\n";
    emit_body(out, c, true);
    return out.str();
}

std::string emit_pair(const PairFile& p) {
    std::ostringstream out;
    out << "format pair 1\n";
    FiniteComplex body = p.pair.big;
    body.domains = p.pair.domains;
    emit_body(out, body, true);
    if (p.links) {
        for (size_t i = 0; i < p.links->phi.size(); ++i) out << "phi " << i << ' ' << literal(p.links->phi[i]) << "\n";
        for (size_t i = 0; i < p.links->c.size(); ++i) out << "constant " << i << ' ' << to_string(p.links->c[i]) << "\n";
    }
    return out.str();
}

std::string emit_strat(const StratifiedInput& raw) {
    const StratifiedInput s = raw.canonical();
    std::ostringstream out;
    out << "format strat 1\n";
    out << "vertices " << s.vertices << "\n";
    for (size_t t = 0; t < s.tops.size(); ++t) {
        out << "simplex";
        for (int v : s.tops[t]) out << ' ' << v;
        out << ' ' << (s.signs[t] > 0 ? '+' : '-') << "\n";
    }
    for (const auto& d : s.strata) out << "stratum " << d.label << ' ' << d.dim << "\n";
    for (const auto& [t, name] : s.labels) {
        out << "label";
        for (int v : t) out << ' ' << v;
        out << ' ' << name << "\n";
    }
    for (const auto& [name, w] : s.weights) out << "weight " << name << ' ' << to_string(w) << "\n";
    return out.str();
}

bool same_pair_file(const PairFile& a, const PairFile& b) {
    if (!(a.pair.big == b.pair.big) || a.pair.domains != b.pair.domains) return false;
    if (a.links.has_value() != b.links.has_value()) return false;
    if (!a.links) return true;
    if (a.links->phi.size() != b.links->phi.size() || a.links->c != b.links->c) return false;
    for (size_t i = 0; i < a.links->phi.size(); ++i)
        if (!same_matrix(a.links->phi[i], b.links->phi[i])) return false;
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace hc
