#include "oresolve/io.hpp"

#include <cctype>
#include <sstream>

namespace oresolve {

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string monomial_string(const VarSet& vs, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vs.name(i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string coeff_string(const Rational& c) {
    return to_string(c);
}

}  // namespace

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const VarSet& vs = *p.vars();
    std::string s;
    // Terms descending in the monomial order.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        const std::string mono = monomial_string(vs, it->first);
        Rational ac = c < 0 ? Rational(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mono.empty())
            s += coeff_string(ac);
        else if (ac == 1)
            s += mono;
        else
            s += coeff_string(ac) + "*" + mono;
    }
    return s;
}

std::string to_string(const RatFunc& r) {
    if (r.is_polynomial()) {
        if (r.den().constant_value() == 1) return to_string(r.num());
        // Monic denominators are constant 1 by normalization; other constants
        // can appear only transiently, print as a fraction for safety.
    }
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_string(const OreMatrix& op) {
    std::ostringstream out;
    if (op.is_zero()) {
        out << "0 (" << op.rows() << "x" << op.cols() << ")";
        return out.str();
    }
    bool first = true;
    for (long k = op.hi(); k >= op.lo(); --k) {
        if (!first) out << "\n";
        first = false;
        out << "A[" << k << "] = [";
        for (std::size_t i = 0; i < op.rows(); ++i) {
            if (i) out << ", ";
            out << "[";
            for (std::size_t j = 0; j < op.cols(); ++j) {
                if (j) out << ", ";
                out << to_string(op.entry(k, i, j));
            }
            out << "]";
        }
        out << "]";
    }
    return out.str();
}

std::string to_string(const LinearSystem& sys) {
    std::ostringstream out;
    out << to_string(sys.op) << "\nb = [";
    for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
        if (i) out << ", ";
        out << to_string(sys.rhs[i]);
    }
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Ident, Integer, Punct, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept(const std::string& punct) {
        if (tok_.kind == Token::Punct && tok_.text == punct) {
            advance();
            return true;
        }
        return false;
    }
    void expect(const std::string& punct) {
        if (!accept(punct)) fail("expected '" + punct + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg + " (got '" + tok_.text + "')");
    }

  private:
    void advance() {
        skip_space();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Token::End, "<end>", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                s += take();
            tok_ = {Token::Ident, s, tok_.line, tok_.col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                s += take();
            tok_ = {Token::Integer, s, tok_.line, tok_.col};
        } else {
            tok_ = {Token::Punct, std::string(1, take()), tok_.line, tok_.col};
        }
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::End, "", 1, 1};
};

class ExprParser {
  public:
    ExprParser(Lexer& lex, const VarSetPtr& vars) : lex_(lex), vars_(vars) {}

    RatFunc expression() {
        RatFunc v = term();
        while (true) {
            if (lex_.accept("+"))
                v += term();
            else if (lex_.accept("-"))
                v -= term();
            else
                return v;
        }
    }

  private:
    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (lex_.accept("*"))
                v = v * factor();
            else if (lex_.accept("/"))
                v = v / factor();
            else
                return v;
        }
    }

    RatFunc factor() {
        bool negate = false;
        while (true) {
            if (lex_.accept("-"))
                negate = !negate;
            else if (lex_.accept("+"))
                ;
            else
                break;
        }
        RatFunc v = power();
        return negate ? -v : v;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (lex_.accept("^")) {
            bool neg = lex_.accept("-");
            const Token t = lex_.peek();
            if (t.kind != Token::Integer) lex_.fail("expected integer exponent");
            lex_.next();
            long e = std::stol(t.text);
            RatFunc v = RatFunc::one(vars_);
            if (base.is_zero() && (neg || e == 0)) {
                if (neg) throw ParseError(t.line, t.col, "negative power of zero");
                return RatFunc::one(vars_);
            }
            RatFunc b = neg ? base.inverse() : base;
            for (long i = 0; i < e; ++i) v = v * b;
            return v;
        }
        return base;
    }

    RatFunc atom() {
        const Token t = lex_.peek();
        if (t.kind == Token::Integer) {
            lex_.next();
            return RatFunc::constant(vars_, rational_from_string(t.text));
        }
        if (t.kind == Token::Ident) {
            lex_.next();
            auto idx = vars_->index_of(t.text);
            if (!idx) throw ParseError(t.line, t.col, "unknown variable '" + t.text + "'");
            return RatFunc(MultiPoly::variable(vars_, *idx));
        }
        if (lex_.accept("(")) {
            RatFunc v = expression();
            lex_.expect(")");
            return v;
        }
        lex_.fail("expected value");
    }

    Lexer& lex_;
    const VarSetPtr& vars_;
};

std::vector<std::string> parse_name_list(Lexer& lex) {
    std::vector<std::string> names;
    while (true) {
        const Token t = lex.peek();
        if (t.kind != Token::Ident) lex.fail("expected variable name");
        lex.next();
        names.push_back(t.text);
        if (!lex.accept(",")) break;
    }
    return names;
}

FieldSpecPtr parse_field_body(Lexer& lex) {
    const Token kind_tok = lex.peek();
    if (kind_tok.kind != Token::Ident) lex.fail("expected field kind");
    lex.next();
    const std::string kind = kind_tok.text;
    lex.expect("(");
    std::vector<std::string> first = parse_name_list(lex);
    std::vector<std::string> second;
    bool has_params = lex.accept(";");
    if (has_params) second = parse_name_list(lex);
    lex.expect(")");

    auto wrong = [&](const std::string& msg) -> FieldSpecPtr {
        throw ParseError(kind_tok.line, kind_tok.col, msg);
    };
    if (kind == "rational") {
        if (has_params || first.size() != 1) return wrong("rational expects a single generator");
        return FieldSpec::rational(first[0]);
    }
    if (kind == "qrational") {
        if (!has_params || first.size() != 1 || second.size() != 1)
            return wrong("qrational expects (q; t)");
        return FieldSpec::q_rational(first[0], second[0]);
    }
    if (kind == "multibasic") {
        if (!has_params || first.size() != second.size())
            return wrong("multibasic expects (q1,...,qe; t1,...,te)");
        return FieldSpec::multibasic(first, second);
    }
    if (kind == "mixed") {
        if (!has_params || second.size() != first.size() + 1)
            return wrong("mixed expects (q1,...,qe; t1,...,te, t)");
        std::string t = second.back();
        second.pop_back();
        return FieldSpec::mixed(first, second, t);
    }
    return wrong("unknown field kind '" + kind + "'");
}

std::vector<RatFunc> parse_vector(Lexer& lex, const VarSetPtr& vars) {
    lex.expect("[");
    std::vector<RatFunc> entries;
    if (!lex.accept("]")) {
        ExprParser ep(lex, vars);
        entries.push_back(ep.expression());
        while (lex.accept(",")) entries.push_back(ep.expression());
        lex.expect("]");
    }
    return entries;
}

}  // namespace

MultiPoly parse_poly(const VarSetPtr& vars, const std::string& text) {
    RatFunc r = parse_ratfunc(vars, text);
    if (!r.is_polynomial() || r.den().constant_value() != 1)
        throw Error("expression is not polynomial: " + text);
    return r.num();
}

RatFunc parse_ratfunc(const VarSetPtr& vars, const std::string& text) {
    Lexer lex(text);
    ExprParser ep(lex, vars);
    RatFunc v = ep.expression();
    if (lex.peek().kind != Token::End) lex.fail("trailing input");
    return v;
}

FieldSpecPtr parse_field(const std::string& text) {
    Lexer lex(text);
    FieldSpecPtr f = parse_field_body(lex);
    if (lex.peek().kind != Token::End) lex.fail("trailing input");
    return f;
}

SystemFile parse_system(const std::string& text) {
    Lexer lex(text);
    FieldSpecPtr field;
    std::map<long, std::vector<std::vector<RatFunc>>> blocks;
    std::vector<RatFunc> rhs;
    bool have_rhs = false;
    std::map<std::string, std::string> options;

    while (lex.peek().kind != Token::End) {
        const Token t = lex.peek();
        if (t.kind != Token::Ident) lex.fail("expected statement");
        if (t.text == "field") {
            lex.next();
            if (field) lex.fail("duplicate field header");
            field = parse_field_body(lex);
        } else if (t.text == "A") {
            lex.next();
            if (!field) throw ParseError(t.line, t.col, "field header must come first");
            lex.expect("[");
            const Token kt = lex.peek();
            if (kt.kind != Token::Integer) lex.fail("expected matrix index");
            lex.next();
            long k = std::stol(kt.text);
            lex.expect("]");
            lex.expect("=");
            lex.expect("[");
            std::vector<std::vector<RatFunc>> rows;
            rows.push_back(parse_vector(lex, field->vars()));
            while (lex.accept(",")) rows.push_back(parse_vector(lex, field->vars()));
            lex.expect("]");
            if (blocks.count(k)) throw ParseError(kt.line, kt.col, "duplicate matrix block");
            blocks[k] = std::move(rows);
        } else if (t.text == "b") {
            lex.next();
            if (!field) throw ParseError(t.line, t.col, "field header must come first");
            lex.expect("=");
            rhs = parse_vector(lex, field->vars());
            have_rhs = true;
        } else if (t.text == "option") {
            lex.next();
            const Token name = lex.peek();
            if (name.kind != Token::Ident) lex.fail("expected option name");
            lex.next();
            lex.expect("=");
            std::string value;
            while (lex.peek().kind != Token::End) {
                const Token vt = lex.peek();
                if (vt.kind == Token::Ident || vt.kind == Token::Integer) {
                    value += lex.next().text;
                } else if (vt.kind == Token::Punct &&
                           (vt.text == "," || vt.text == "-" || vt.text == "=")) {
                    value += lex.next().text;
                } else {
                    break;
                }
            }
            options[name.text] = value;
        } else {
            lex.fail("unknown statement '" + t.text + "'");
        }
    }

    if (!field) throw ParseError(1, 1, "missing field header");
    if (blocks.empty()) throw ParseError(1, 1, "missing matrix blocks");
    const long ell = blocks.rbegin()->first;
    std::size_t rows = blocks.begin()->second.size();
    std::size_t cols = blocks.begin()->second.at(0).size();
    for (long k = 0; k <= ell; ++k) {
        if (!blocks.count(k)) throw ParseError(1, 1, "matrix blocks must cover k = 0.." + std::to_string(ell));
        const auto& m = blocks[k];
        if (m.size() != rows) throw ParseError(1, 1, "matrix blocks disagree on row count");
        for (const auto& r : m)
            if (r.size() != cols) throw ParseError(1, 1, "ragged matrix row");
    }
    if (blocks.begin()->first < 0) throw ParseError(1, 1, "negative matrix index");

    OreMatrix op(field, rows, cols);
    for (long k = 0; k <= ell; ++k)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const RatFunc& v = blocks[k][i][j];
                if (!v.is_polynomial())
                    throw ParseError(1, 1, "matrix entries must be polynomial");
                if (!v.is_zero()) op.set_entry(k, i, j, v);
            }

    std::vector<MultiPoly> rhs_poly(rows, MultiPoly::zero(field->vars()));
    if (have_rhs) {
        if (rhs.size() != rows) throw ParseError(1, 1, "rhs length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!rhs[i].is_polynomial()) throw ParseError(1, 1, "rhs entries must be polynomial");
            rhs_poly[i] = rhs[i].num() * rhs[i].den().constant_value();
        }
    }

    SystemFile out{field, LinearSystem{std::move(op), std::move(rhs_poly)}, std::move(options)};
    return out;
}

}  // namespace oresolve
