#pragma once

// Text formats: algebra files, representation files and module expressions.
//
// Algebra file, one directive per line, `#` starts a comment:
//   field q | field p=<prime>
//   vertices <n>
//   arrow <name>: <i> -> <j>          (vertices numbered from 1)
//   relation [+|-][<c>*]<word> ...    (word a.b.c: c applied first)
//   cutoff <N>                        (optional for acyclic quivers)
//
// Representation file:
//   dims <d1> ... <dn>
//   map <arrow>: <row>; <row> ...     (entries are integers or a/b)
//
// Module expressions: S(i), P(i), I(i), [k]S(i), gen(d1,...,dn), @file,
// (X), X/soc, X^n and X + Y.

#include "analysis.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace quivstat {

class ParseError : public UsageError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct AlgebraFile {
    FieldSpec field;
    BoundQuiver bound_quiver;
    bool operator==(const AlgebraFile&) const = default;
};

namespace detail {

/// Whitespace tokenizer over one line that remembers 1-based columns.
class LineCursor {
public:
    LineCursor(std::string text, std::size_t line) : text_(std::move(text)), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    /// Letters, digits, '_' and '.'.
    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.'))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }
    long long integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string s = text_.substr(start, pos_ - start);
        if (s.empty() || s == "-" || s == "+") {
            pos_ = start;
            fail("expected an integer");
        }
        try {
            return std::stoll(s);
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
    }
    std::size_t count() {
        const std::size_t col = column();
        const long long v = integer();
        if (v < 0) throw ParseError("expected a nonnegative integer", line_, col);
        return static_cast<std::size_t>(v);
    }
    std::size_t column() {
        skip_space();
        return pos_ + 1;
    }
    std::size_t line() const { return line_; }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, column()); }

private:
    std::string text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline FieldSpec parse_field_spec(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec::rationals();
    if (s.rfind("p=", 0) == 0) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(s.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() - 2) throw UsageError("bad field '" + s + "': expected q or p=<prime>");
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
    throw UsageError("bad field '" + s + "': expected q or p=<prime>");
}

}  // namespace detail

inline FieldSpec parse_field_spec(const std::string& s) { return detail::parse_field_spec(s); }

inline AlgebraFile parse_algebra(const std::string& text) {
    AlgebraFile out;
    std::optional<std::size_t> vertices;
    bool have_field = false, have_cutoff = false;
    struct PendingRelation {
        std::vector<std::tuple<long long, std::vector<std::string>, std::size_t>> terms;  // coeff, names, column
        std::size_t line;
    };
    std::vector<PendingRelation> pending;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        detail::LineCursor cur(detail::strip_comment(raw), line_no);
        if (cur.at_end()) continue;
        const std::size_t key_col = cur.column();
        const std::string key = cur.word();
        if (key == "field") {
            if (have_field) throw ParseError("duplicate field", line_no, key_col);
            const std::size_t col = cur.column();
            std::string spec = cur.word();
            if (cur.accept('=')) spec += "=" + std::to_string(cur.count());
            try {
                out.field = detail::parse_field_spec(spec);
            } catch (const UsageError& e) {
                throw ParseError(e.what(), line_no, col);
            }
            have_field = true;
        } else if (key == "vertices") {
            if (vertices) throw ParseError("duplicate vertices", line_no, key_col);
            vertices = cur.count();
            out.bound_quiver.quiver = Quiver(*vertices);
        } else if (key == "arrow") {
            if (!vertices) throw ParseError("arrow before vertices", line_no, key_col);
            const std::size_t name_col = cur.column();
            const std::string name = cur.word();
            if (name.find('.') != std::string::npos) throw ParseError("arrow names cannot contain '.'", line_no, name_col);
            if (out.bound_quiver.quiver.find_arrow(name)) throw ParseError("duplicate arrow " + name, line_no, name_col);
            cur.expect(':');
            const std::size_t s_col = cur.column();
            const std::size_t s = cur.count();
            cur.expect('-');
            cur.expect('>');
            const std::size_t t_col = cur.column();
            const std::size_t t = cur.count();
            if (s < 1 || s > *vertices) throw ParseError("vertex out of range", line_no, s_col);
            if (t < 1 || t > *vertices) throw ParseError("vertex out of range", line_no, t_col);
            out.bound_quiver.quiver.add_arrow(name, s - 1, t - 1);
        } else if (key == "relation") {
            PendingRelation rel{{}, line_no};
            while (!cur.at_end()) {
                long long sign = 1;
                if (cur.accept('-')) sign = -1;
                else cur.accept('+');
                long long coeff = 1;
                if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                    coeff = cur.integer();
                    cur.expect('*');
                }
                const std::size_t col = cur.column();
                rel.terms.emplace_back(sign * coeff, detail::split(cur.word(), '.'), col);
            }
            if (rel.terms.empty()) throw ParseError("empty relation", line_no, key_col);
            pending.push_back(std::move(rel));
        } else if (key == "cutoff") {
            if (have_cutoff) throw ParseError("duplicate cutoff", line_no, key_col);
            const std::size_t col = cur.column();
            out.bound_quiver.relations.cutoff = cur.count();
            if (out.bound_quiver.relations.cutoff == 0) throw ParseError("cutoff must be positive", line_no, col);
            have_cutoff = true;
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, key_col);
        }
        if (!cur.at_end() && key != "relation") cur.fail("unexpected trailing text");
    }
    if (!vertices) throw ParseError("missing vertices", line_no + 1, 1);
    const Quiver& q = out.bound_quiver.quiver;
    for (const auto& rel : pending) {
        Relation r;
        for (const auto& [coeff, names, col] : rel.terms) {
            std::vector<std::size_t> word;
            for (const auto& n : names) {
                const auto a = q.find_arrow(n);
                if (!a) throw ParseError("unknown arrow '" + n + "'", rel.line, col);
                word.push_back(*a);
            }
            try {
                r.terms.push_back({coeff, path_from_word(q, word)});
            } catch (const UsageError& e) {
                throw ParseError(e.what(), rel.line, col);
            }
        }
        out.bound_quiver.relations.relations.push_back(std::move(r));
    }
    return out;
}

inline std::string print_algebra(const AlgebraFile& a) {
    std::ostringstream os;
    const Quiver& q = a.bound_quiver.quiver;
    os << "field " << a.field.to_string() << "\n";
    os << "vertices " << q.vertex_count() << "\n";
    for (const auto& arr : q.arrows()) os << "arrow " << arr.name << ": " << arr.source + 1 << " -> " << arr.target + 1 << "\n";
    for (const auto& r : a.bound_quiver.relations.relations) {
        os << "relation";
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            const auto& [c, p] = r.terms[i];
            os << ' ' << (c < 0 ? "-" : (i ? "+" : ""));
            if (c != 1 && c != -1) os << (c < 0 ? -c : c) << '*';
            os << path_word(q, p);
        }
        os << "\n";
    }
    if (a.bound_quiver.relations.cutoff) os << "cutoff " << a.bound_quiver.relations.cutoff << "\n";
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalars and representation files

template <class K>
K parse_scalar(const Field<K>& f, const std::string& s) {
    const auto slash = s.find('/');
    auto integer = [&](const std::string& t) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != t.size()) throw UsageError("bad scalar '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return f.from_int(integer(s));
    const K den = f.from_int(integer(s.substr(slash + 1)));
    if (f.is_zero(den)) throw UsageError("zero denominator in '" + s + "'");
    return f.from_int(integer(s.substr(0, slash))) * f.inv(den);
}

template <class K>
Rep<K> parse_representation(const AlgebraPtr<K>& alg, const std::string& text) {
    const Quiver& q = alg->quiver();
    std::optional<std::vector<std::size_t>> dims;
    std::vector<std::optional<Matrix<K>>> maps(q.arrows().size());
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string body = detail::strip_comment(raw);
        detail::LineCursor cur(body, line_no);
        if (cur.at_end()) continue;
        const std::size_t key_col = cur.column();
        const std::string key = cur.word();
        if (key == "dims") {
            if (dims) throw ParseError("duplicate dims", line_no, key_col);
            dims.emplace();
            while (!cur.at_end()) dims->push_back(cur.count());
            if (dims->size() != q.vertex_count())
                throw ParseError("dims needs " + std::to_string(q.vertex_count()) + " entries", line_no, key_col);
        } else if (key == "map") {
            if (!dims) throw ParseError("map before dims", line_no, key_col);
            const std::size_t name_col = cur.column();
            const std::string name = cur.word();
            const auto a = q.find_arrow(name);
            if (!a) throw ParseError("unknown arrow '" + name + "'", line_no, name_col);
            if (maps[*a]) throw ParseError("duplicate map for " + name, line_no, name_col);
            cur.expect(':');
            const std::size_t rows = (*dims)[q.arrow(*a).target], cols = (*dims)[q.arrow(*a).source];
            Matrix<K> m(alg->field(), rows, cols);
            const auto colon = body.find(':');
            const auto row_texts = detail::split(body.substr(colon + 1), ';');
            std::size_t r = 0;
            for (const auto& rt : row_texts) {
                std::istringstream rs(rt);
                std::vector<std::string> entries;
                for (std::string e; rs >> e;) entries.push_back(e);
                if (entries.empty() && row_texts.size() == 1 && rows * cols == 0) break;
                if (r >= rows || entries.size() != cols)
                    throw ParseError("map " + name + " must be " + std::to_string(rows) + "x" + std::to_string(cols),
                                     line_no, name_col);
                for (std::size_t c = 0; c < cols; ++c) {
                    try {
                        m(r, c) = parse_scalar(alg->field(), entries[c]);
                    } catch (const UsageError& e) {
                        throw ParseError(e.what(), line_no, name_col);
                    }
                }
                ++r;
            }
            if (r != rows)
                throw ParseError("map " + name + " must be " + std::to_string(rows) + "x" + std::to_string(cols),
                                 line_no, name_col);
            maps[*a] = m;
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, key_col);
        }
    }
    if (!dims) throw ParseError("missing dims", line_no + 1, 1);
    std::vector<Matrix<K>> out;
    for (std::size_t a = 0; a < maps.size(); ++a)
        out.push_back(maps[a] ? *maps[a]
                              : Matrix<K>(alg->field(), (*dims)[q.arrow(a).target], (*dims)[q.arrow(a).source]));
    return make_rep(alg, *dims, std::move(out));
}

template <class K>
std::string print_representation(const Rep<K>& x) {
    std::ostringstream os;
    os << "dims";
    for (auto d : x->dims()) os << ' ' << d;
    os << "\n";
    const Quiver& q = x->quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& m = x->map(a);
        if (m.rows() * m.cols() == 0) continue;
        os << "map " << q.arrow(a).name << ":";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            os << (r ? ";" : "");
            for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << x->field().to_string(m(r, c));
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Module expressions

template <class K>
struct ModuleParser {
    AlgebraPtr<K> alg;
    std::string text;
    std::size_t pos = 0;
    /// Certified generic indecomposable of a dimension vector (hereditary algebras only).
    std::function<Rep<K>(const std::vector<std::size_t>&)> generic;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos + 1); }
    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(const std::string& s) {
        skip();
        if (text.compare(pos, s.size(), s) != 0) return false;
        pos += s.size();
        return true;
    }
    void expect(const std::string& s) {
        if (!accept(s)) fail("expected '" + s + "'");
    }
    std::size_t number() {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoul(text.substr(start, pos - start));
    }
    std::size_t vertex() {
        const std::size_t at = pos;
        const std::size_t v = number();
        if (v < 1 || v > alg->quiver().vertex_count()) {
            pos = at;
            fail("vertex out of range");
        }
        return v - 1;
    }

    Rep<K> atom() {
        skip();
        if (accept("(")) {
            auto x = sum();
            expect(")");
            return x;
        }
        if (accept("[")) {
            const std::size_t len = number();
            expect("]");
            expect("S(");
            const std::size_t v = vertex();
            expect(")");
            if (len == 0) fail("length must be positive");
            return serial_module(alg, v, len);
        }
        for (const char* kind : {"S(", "P(", "I("}) {
            if (!accept(kind)) continue;
            const std::size_t v = vertex();
            expect(")");
            if (kind[0] == 'S') return simple(alg, v);
            if (kind[0] == 'P') return projective(alg, v);
            return injective(alg, v);
        }
        if (accept("gen(")) {
            std::vector<std::size_t> dims{number()};
            while (accept(",")) dims.push_back(number());
            expect(")");
            if (dims.size() != alg->quiver().vertex_count()) fail("gen needs one entry per vertex");
            if (!generic) fail("gen(...) is not available here");
            return generic(dims);
        }
        if (accept("@")) {
            skip();
            const std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ')' &&
                   text[pos] != '+')
                ++pos;
            return parse_representation(alg, read_file(text.substr(start, pos - start)));
        }
        fail("expected S(i), P(i), I(i), [k]S(i), gen(...), @file or (...)");
    }

    Rep<K> postfix() {
        auto x = atom();
        while (true) {
            if (accept("/soc")) {
                x = quotient_representation(x, socle_subspaces(x)).first;
            } else if (accept("^")) {
                x = power(x, number());
            } else {
                return x;
            }
        }
    }

    Rep<K> sum() {
        std::vector<Rep<K>> parts{postfix()};
        while (accept("+")) parts.push_back(postfix());
        return parts.size() == 1 ? parts[0] : direct_sum(alg, parts).sum;
    }

    Rep<K> parse() {
        auto x = sum();
        skip();
        if (pos != text.size()) fail("unexpected trailing text");
        return x;
    }
};

template <class K>
Rep<K> parse_module(const AlgebraPtr<K>& alg, const std::string& expr,
                    std::function<Rep<K>(const std::vector<std::size_t>&)> generic = {}) {
    ModuleParser<K> p{alg, expr, 0, std::move(generic)};
    return p.parse();
}

}  // namespace quivstat
