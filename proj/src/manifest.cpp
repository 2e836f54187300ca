#include "ddbar/manifest.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "ddbar/errors.hpp"

namespace ddbar {

namespace {

struct Token {
    std::string text;
    int line;
    int col;  // 1-based
};

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/' ||
           c == '^' || c == '.';
}

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", lineno, col});
            i += 2;
        } else if (c == '=' || c == ':' || c == ',' || c == '+' || c == '-') {
            out.push_back({std::string(1, c), lineno, col});
            ++i;
        } else if (word_char(c)) {
            size_t j = i;
            while (j < line.size() && word_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), lineno, col});
            i = j;
        } else {
            throw ParseError(lineno, col,
                             std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

// cursor over one line of tokens
class Cursor {
public:
    Cursor(const std::vector<Token>& toks, int lineno)
        : toks_(toks), lineno_(lineno) {
        eol_col_ = toks.empty() ? 1 : toks.back().col +
                                          static_cast<int>(toks.back().text.size());
    }
    bool done() const { return i_ >= toks_.size(); }
    const Token& peek() const {
        if (done()) throw ParseError(lineno_, eol_col_, "unexpected end of line");
        return toks_[i_];
    }
    Token next() {
        const Token& t = peek();
        ++i_;
        return t;
    }
    Token expect(const std::string& text) {
        if (done() || peek().text != text) {
            int col = done() ? eol_col_ : peek().col;
            std::string got = done() ? "end of line" : "'" + peek().text + "'";
            throw ParseError(lineno_, col, "expected '" + text + "', got " + got);
        }
        return next();
    }
    void expect_end() const {
        if (!done())
            throw ParseError(lineno_, peek().col,
                             "unexpected trailing token '" + peek().text + "'");
    }
    int line() const { return lineno_; }
    int eol_col() const { return eol_col_; }

private:
    const std::vector<Token>& toks_;
    size_t i_ = 0;
    int lineno_;
    int eol_col_;
};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

long parse_uint(const Token& t, const char* what) {
    if (!all_digits(t.text) || t.text.size() > 9)
        throw ParseError(t.line, t.col,
                         std::string("expected ") + what + ", got '" + t.text + "'");
    return std::stol(t.text);
}

Rational parse_rational_token(const Token& t) {
    auto slash = t.text.find('/');
    std::string num = t.text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) ||
        t.text.find('/', slash + 1) != std::string::npos)
        throw BadCoefficient(t.line, t.col,
                             "malformed rational literal '" + t.text + "'");
    if (BigInt(den) == 0)
        throw BadCoefficient(t.line, t.col, "zero denominator in '" + t.text + "'");
    return make_rational(BigInt(num), BigInt(den));
}

Cyclotomic parse_zeta_token(const Token& t, unsigned order) {
    if (t.text == "z") return Cyclotomic::zeta(order);
    if (t.text.rfind("z^", 0) == 0) {
        std::string exp = t.text.substr(2);
        if (!all_digits(exp) || exp.size() > 9)
            throw BadCoefficient(t.line, t.col,
                                 "malformed power of z: '" + t.text + "'");
        return Cyclotomic::zeta_power(order, std::stol(exp));
    }
    throw BadCoefficient(t.line, t.col, "malformed coefficient '" + t.text + "'");
}

// index of a plain phiK / bphiK factor; 0 when the word is not one
std::pair<bool, unsigned> generator_factor(std::string_view s, unsigned n,
                                           const Token& t, bool* is_anti) {
    bool anti = false;
    std::string_view rest = s;
    if (rest.rfind("bphi", 0) == 0) {
        anti = true;
        rest.remove_prefix(4);
    } else if (rest.rfind("phi", 0) == 0) {
        rest.remove_prefix(3);
    } else {
        throw ParseError(t.line, t.col,
                         "expected a phiI or bphiI factor, got '" +
                             std::string(s) + "'");
    }
    if (!all_digits(rest))
        throw ParseError(t.line, t.col,
                         "malformed generator '" + std::string(s) + "'");
    unsigned idx = static_cast<unsigned>(std::stol(std::string(rest)));
    if (idx < 1 || idx > n)
        throw UndeclaredGenerator(t.line, t.col,
                                  "generator '" + std::string(s) +
                                      "' is not among phi1..phi" +
                                      std::to_string(n));
    *is_anti = anti;
    return {true, idx};
}

Form parse_monomial_token(const Token& t, unsigned n, unsigned order) {
    Form out = Form::scalar(n, order, Cyclotomic::one(order));
    std::string_view s = t.text;
    size_t start = 0;
    while (start <= s.size()) {
        size_t caret = s.find('^', start);
        std::string_view piece =
            s.substr(start, caret == std::string_view::npos ? std::string_view::npos
                                                            : caret - start);
        if (piece.empty())
            throw ParseError(t.line, t.col, "malformed monomial '" + t.text + "'");
        bool anti = false;
        auto [ok, idx] = generator_factor(piece, n, t, &anti);
        (void)ok;
        Form gen = anti ? Form::conj_generator(n, order, idx)
                        : Form::generator(n, order, idx);
        out = wedge(out, gen);
        if (caret == std::string_view::npos) break;
        start = caret + 1;
    }
    return out;
}

bool is_term_atom(const Token& t) {
    return t.text != "+" && t.text != "-" && t.text != "," && t.text != "=" &&
           t.text != ":" && t.text != "->";
}

// signed sum of terms; stops at end of line or (optionally) at a comma
Form parse_expr(Cursor& cur, unsigned n, unsigned order, bool stop_at_comma) {
    Form out = Form::zero(n, order);
    bool first = true;
    while (true) {
        if (cur.done()) break;
        if (stop_at_comma && cur.peek().text == ",") break;
        bool negative = false;
        if (cur.peek().text == "+" || cur.peek().text == "-") {
            negative = cur.next().text == "-";
        } else if (!first) {
            throw ParseError(cur.line(), cur.peek().col,
                             "expected '+' or '-' between terms, got '" +
                                 cur.peek().text + "'");
        }
        if (cur.done())
            throw ParseError(cur.line(), cur.eol_col(), "expected a term");
        // one term: coefficient atoms then at most one monomial
        Cyclotomic coeff = Cyclotomic::one(order);
        std::optional<Form> mono;
        int term_col = cur.peek().col;
        bool any_atom = false;
        while (!cur.done() && is_term_atom(cur.peek())) {
            Token t = cur.next();
            any_atom = true;
            if (std::isdigit(static_cast<unsigned char>(t.text[0]))) {
                if (t.text.find('^') != std::string::npos)
                    throw BadCoefficient(t.line, t.col,
                                         "malformed coefficient '" + t.text + "'");
                coeff = coeff * Cyclotomic::from_rational(parse_rational_token(t), order);
            } else if (t.text[0] == 'z' && t.text.find("phi") == std::string::npos) {
                coeff = coeff * parse_zeta_token(t, order);
            } else if (t.text.find("phi") != std::string::npos) {
                if (mono)
                    throw ParseError(t.line, t.col,
                                     "one monomial per term; separate terms with '+' "
                                     "or '-'");
                mono = parse_monomial_token(t, n, order);
            } else {
                throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
            }
        }
        if (!any_atom)
            throw ParseError(cur.line(), cur.eol_col(), "expected a term");
        Form term(n, order);
        if (mono) {
            term = mono->scaled(coeff);
        } else if (!coeff.is_zero()) {
            throw ParseError(cur.line(), term_col,
                             "a nonzero term needs a monomial (phiI / bphiI)");
        }
        out = negative ? out - term : out + term;
        first = false;
    }
    if (first) throw ParseError(cur.line(), cur.eol_col(), "expected an expression");
    return out;
}

unsigned parse_equation_target(Cursor& cur, unsigned n) {
    const Token t = cur.next();
    bool anti = false;
    auto [ok, idx] = generator_factor(t.text, n, t, &anti);
    (void)ok;
    if (anti)
        throw ParseError(t.line, t.col,
                         "equations are given on holomorphic generators only");
    if (t.text.find('^') != std::string::npos)
        throw ParseError(t.line, t.col, "expected a single generator");
    return idx;
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
    Manifest m;
    bool seen_name = false, seen_field = false, seen_gens = false;
    bool seen_body = false;  // any equation or action so far
    std::vector<bool> has_del, has_delbar;
    int lineno = 0;
    int last_line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        last_line = lineno;
        std::vector<Token> toks = tokenize_line(raw, lineno);
        if (toks.empty()) continue;
        Cursor cur(toks, lineno);
        Token head = cur.next();

        if (head.text == "manifold") {
            if (seen_name)
                throw ParseError(head.line, head.col, "duplicate 'manifold' line");
            Token name = cur.next();
            if (!std::isalpha(static_cast<unsigned char>(name.text[0])))
                throw ParseError(name.line, name.col, "manifold name must start with a letter");
            cur.expect_end();
            m.name = name.text;
            seen_name = true;
        } else if (head.text == "field") {
            if (seen_field)
                throw ParseError(head.line, head.col, "duplicate 'field' line");
            if (seen_gens)
                throw ParseError(head.line, head.col,
                                 "'field' must come before 'gens'");
            cur.expect("zeta");
            long order = parse_uint(cur.next(), "a positive field order");
            cur.expect_end();
            if (order < 1)
                throw ParseError(head.line, head.col, "field order must be >= 1");
            m.field_order = static_cast<unsigned>(order);
            seen_field = true;
        } else if (head.text == "gens") {
            if (seen_gens)
                throw ParseError(head.line, head.col, "duplicate 'gens' line");
            long count = parse_uint(cur.next(), "a generator count");
            cur.expect_end();
            if (count < 1 || count > 16)
                throw ParseError(head.line, head.col,
                                 "generator count must be between 1 and 16");
            m.n = static_cast<unsigned>(count);
            m.del_eqs.assign(m.n, Form::zero(m.n, m.field_order));
            m.delbar_eqs.assign(m.n, Form::zero(m.n, m.field_order));
            has_del.assign(m.n, false);
            has_delbar.assign(m.n, false);
            seen_gens = true;
        } else if (head.text == "del" || head.text == "delbar") {
            if (!seen_gens)
                throw ParseError(head.line, head.col,
                                 "'gens' must be declared before equations");
            seen_body = true;
            unsigned idx = parse_equation_target(cur, m.n);
            cur.expect("=");
            Form rhs = parse_expr(cur, m.n, m.field_order, /*stop_at_comma=*/false);
            bool is_del = head.text == "del";
            std::vector<bool>& seen = is_del ? has_del : has_delbar;
            if (seen[idx - 1])
                throw ParseError(head.line, head.col,
                                 "duplicate '" + head.text + "' equation for phi" +
                                     std::to_string(idx));
            seen[idx - 1] = true;
            (is_del ? m.del_eqs : m.delbar_eqs)[idx - 1] = std::move(rhs);
        } else if (head.text == "action") {
            if (!seen_gens)
                throw ParseError(head.line, head.col,
                                 "'gens' must be declared before actions");
            seen_body = true;
            Token name = cur.next();
            if (!std::isalpha(static_cast<unsigned char>(name.text[0])))
                throw ParseError(name.line, name.col,
                                 "action name must start with a letter");
            for (const auto& a : m.actions)
                if (a.name == name.text)
                    throw ParseError(name.line, name.col,
                                     "duplicate action '" + name.text + "'");
            cur.expect(":");
            GeneratorAction action;
            action.name = name.text;
            action.images.clear();
            for (unsigned i = 1; i <= m.n; ++i)
                action.images.push_back(Form::generator(m.n, m.field_order, i));
            std::vector<bool> assigned(m.n, false);
            while (true) {
                Token gen_tok = cur.peek();
                unsigned idx = parse_equation_target(cur, m.n);
                if (assigned[idx - 1])
                    throw ParseError(gen_tok.line, gen_tok.col,
                                     "duplicate image for phi" + std::to_string(idx));
                assigned[idx - 1] = true;
                cur.expect("->");
                Form img = parse_expr(cur, m.n, m.field_order, /*stop_at_comma=*/true);
                if (!img.has_bidegree(1, 0))
                    throw ParseError(gen_tok.line, gen_tok.col,
                                     "action image of phi" + std::to_string(idx) +
                                         " must be a nonzero (1,0)-form");
                action.images[idx - 1] = std::move(img);
                if (cur.done()) break;
                cur.expect(",");
            }
            m.actions.push_back(std::move(action));
        } else {
            throw ParseError(head.line, head.col,
                             "expected one of: manifold, field, gens, del, delbar, "
                             "action; got '" +
                                 head.text + "'");
        }
    }
    (void)seen_body;
    if (!seen_gens)
        throw ParseError(last_line == 0 ? 1 : last_line, 1,
                         "missing 'gens' declaration");
    return m;
}

Manifest read_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

Cdba build_cdba(const Manifest& m) {
    return Cdba(m.n, m.field_order, m.del_eqs, m.delbar_eqs);
}

const GeneratorAction& find_action(const Manifest& m, const std::string& name) {
    for (const auto& a : m.actions)
        if (a.name == name) return a;
    throw UnknownName("manifest '" + m.name + "' declares no action '" + name + "'");
}

}  // namespace ddbar
