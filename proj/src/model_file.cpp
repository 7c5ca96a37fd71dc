#include "bvlab/model_file.hpp"

#include "bvlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace bvlab {

namespace {

std::string at(int line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

std::string at(int line, int col, const std::string& msg) {
    return "line " + std::to_string(line) + ", col " + std::to_string(col) +
           ": " + msg;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(at(line, what + " expects an integer, got '" + tok + "'"));
    return value;
}

Rat parse_rat(const std::string& tok, int line, int col) {
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
            throw ParseError(at(line, col, "malformed number '" + tok + "'"));
    try {
        return Rat(tok);
    } catch (const std::exception&) {
        throw ParseError(at(line, col, "malformed number '" + tok + "'"));
    }
}

// --- expression scanner -----------------------------------------------------

struct Token {
    enum Kind { Num, Ident, Op, End } kind = End;
    std::string text;
    int col = 0;  // 1-based within the original line
};

class Lexer {
public:
    Lexer(const std::string& text, int line, int col0)
        : text_(text), line_(line), col0_(col0) {
        advance();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    int line() const { return line_; }

private:
    std::string text_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;
    Token tok_;

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.col = col0_ + static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/' &&
                pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            tok_.kind = Token::Num;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::string("+-*^()").find(c) != std::string::npos) {
            tok_.kind = Token::Op;
            tok_.text = std::string(1, c);
            ++pos_;
            return;
        }
        throw ParseError(at(line_, tok_.col,
                            std::string("unexpected character '") + c + "'"));
    }
};

class ExprParser {
public:
    ExprParser(const TablePtr& tbl, const std::string& text, int line, int col0)
        : tbl_(tbl), lex_(text, line, col0) {}

    GradedPoly parse() {
        GradedPoly p = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError(at(lex_.line(), lex_.peek().col,
                                "unexpected '" + lex_.peek().text + "'"));
        return p;
    }

private:
    TablePtr tbl_;
    Lexer lex_;

    bool is_op(const char* s) const {
        return lex_.peek().kind == Token::Op && lex_.peek().text == s;
    }

    GradedPoly expr() {
        GradedPoly p = term();
        while (is_op("+") || is_op("-")) {
            bool plus = lex_.take().text == "+";
            GradedPoly q = term();
            p = plus ? p + q : p - q;
        }
        return p;
    }

    GradedPoly term() {
        GradedPoly p = factor();
        while (is_op("*")) {
            lex_.take();
            p = p * factor();
        }
        return p;
    }

    GradedPoly factor() {
        if (is_op("-")) {
            lex_.take();
            return -factor();
        }
        if (is_op("+")) {
            lex_.take();
            return factor();
        }
        GradedPoly p = primary();
        while (is_op("^")) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Num || e.text.find('/') != std::string::npos)
                throw ParseError(
                    at(lex_.line(), e.col, "exponent must be a nonnegative integer"));
            p = p.pow(parse_int(e.text, lex_.line(), "exponent"));
        }
        return p;
    }

    GradedPoly primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Num:
                return GradedPoly::constant(tbl_, parse_rat(t.text, lex_.line(), t.col));
            case Token::Ident:
                if (!tbl_->has(t.text))
                    throw ParseError(
                        at(lex_.line(), t.col, "unknown name '" + t.text + "'"));
                return GradedPoly::variable(tbl_, t.text);
            case Token::Op:
                if (t.text == "(") {
                    GradedPoly p = expr();
                    if (!is_op(")"))
                        throw ParseError(at(lex_.line(), lex_.peek().col,
                                            "expected ')'"));
                    lex_.take();
                    return p;
                }
                [[fallthrough]];
            default:
                throw ParseError(at(lex_.line(), t.col,
                                    t.kind == Token::End
                                        ? "unexpected end of expression"
                                        : "unexpected '" + t.text + "'"));
        }
    }
};

// --- directives --------------------------------------------------------------

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
    std::string raw;       // comment-stripped source line
    int action_col0 = 0;   // offset of the action expression within raw
};

std::optional<Rat> parse_relation(const std::string& tok, const std::string& name,
                                  int line) {
    const std::string head = name + "^2";
    auto fail = [&]() -> ParseError {
        return ParseError(at(line, "relation must have the form " + name +
                                       "^2+<rat>=0 or " + name + "^2-<rat>=0"));
    };
    if (tok.compare(0, head.size(), head) != 0) throw fail();
    std::string rest = tok.substr(head.size());
    if (rest.size() < 2 || rest.substr(rest.size() - 2) != "=0") throw fail();
    rest = rest.substr(0, rest.size() - 2);
    if (rest.empty() || (rest[0] != '+' && rest[0] != '-')) throw fail();
    bool plus = rest[0] == '+';
    Rat c = parse_rat(rest.substr(1), line, 1);
    return plus ? -c : c;
}

const std::set<std::string>& known_checks() {
    static const std::set<std::string> s{"cme",      "qme",     "weak_bv",
                                         "lemma_chain", "boundary", "summary",
                                         "quantum",  "all"};
    return s;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> v{"cme",      "qme",      "weak_bv",
                                            "lemma_chain", "boundary", "summary",
                                            "quantum"};
    return v;
}

GradedPoly parse_expression(const TablePtr& tbl, const std::string& text,
                            int line, int col0) {
    return ExprParser(tbl, text, line, col0).parse();
}

ModelSpec parse_model(const std::string& source, std::string name) {
    ModelSpec spec;
    spec.name = std::move(name);

    // Pass 1: split into directive lines.
    std::vector<Line> lines;
    {
        std::istringstream in(source);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.resize(hash);
            Line ln;
            ln.number = number;
            ln.raw = raw;
            std::istringstream ts(raw);
            std::string tok;
            while (ts >> tok) ln.tokens.push_back(tok);
            if (ln.tokens.empty()) continue;
            if (ln.tokens[0] == "action") {
                auto pos = raw.find("action");
                ln.action_col0 = static_cast<int>(pos) + 6;
            }
            lines.push_back(std::move(ln));
        }
    }

    // Pass 2: collect declarations.
    std::string action_src;
    int action_line = 0, action_col0 = 0;
    std::vector<int> pair_lines;
    std::set<std::string> declared;
    bool saw_action = false;

    for (const Line& ln : lines) {
        const auto& t = ln.tokens;
        const std::string& head = t[0];
        if (head == "param") {
            if (t.size() < 2) throw ParseError(at(ln.number, "param needs a name"));
            ParamDecl p;
            p.name = t[1];
            bool saw_ghost = false;
            std::size_t j = 2;
            while (j < t.size()) {
                if (t[j] == "ghost" && j + 1 < t.size()) {
                    p.ghost = parse_int(t[j + 1], ln.number, "ghost");
                    saw_ghost = true;
                    j += 2;
                } else if (t[j] == "relation" && j + 1 < t.size()) {
                    p.square = parse_relation(t[j + 1], p.name, ln.number);
                    j += 2;
                } else {
                    throw ParseError(at(ln.number, "unexpected token '" + t[j] +
                                                       "' in param declaration"));
                }
            }
            if (p.name == "hbar" || p.name == "i" || p.name == "u") {
                // Reserved parameters exist in every table; a declaration is
                // only a consistency assertion and is normalized here.
                int ghost = p.name == "u" ? 2 : 0;
                std::optional<Rat> square;
                if (p.name == "i") square = Rat(-1);
                if ((saw_ghost && p.ghost != ghost) ||
                    (p.square && p.square != square))
                    throw ParseError(
                        at(ln.number, "reserved parameter '" + p.name +
                                          "' has ghost " + std::to_string(ghost) +
                                          (p.name == "i"
                                               ? " and relation i^2+1=0"
                                               : "") +
                                          "; it cannot be redeclared differently"));
                p.ghost = ghost;
                p.square = square;
            }
            if (!declared.insert(p.name).second)
                throw ParseError(at(ln.number, "duplicate name '" + p.name + "'"));
            spec.params.push_back(std::move(p));
        } else if (head == "var") {
            if (t.size() < 4 || t[2] != "ghost")
                throw ParseError(at(ln.number, "expected: var <name> ghost <int> "
                                               "[formdeg <int>]"));
            VarDecl v;
            v.name = t[1];
            v.ghost = parse_int(t[3], ln.number, "ghost");
            if (t.size() == 6 && t[4] == "formdeg")
                v.formdeg = parse_int(t[5], ln.number, "formdeg");
            else if (t.size() != 4)
                throw ParseError(at(ln.number, "expected: var <name> ghost <int> "
                                               "[formdeg <int>]"));
            if (!declared.insert(v.name).second)
                throw ParseError(at(ln.number, "duplicate name '" + v.name + "'"));
            spec.vars.push_back(std::move(v));
        } else if (head == "pair") {
            if (t.size() != 3)
                throw ParseError(at(ln.number, "expected: pair <base> <momentum>"));
            spec.pairs.push_back(PairDecl{t[1], t[2]});
            pair_lines.push_back(ln.number);
        } else if (head == "symplectic") {
            if (t.size() != 3 || t[1] != "k")
                throw ParseError(at(ln.number, "expected: symplectic k <int>"));
            spec.k = parse_int(t[2], ln.number, "k");
        } else if (head == "action") {
            if (saw_action)
                throw ParseError(at(ln.number, "duplicate action"));
            saw_action = true;
            action_src = ln.raw.substr(static_cast<std::size_t>(ln.action_col0));
            action_line = ln.number;
            action_col0 = ln.action_col0;
        } else if (head == "equivariant") {
            if (t.size() != 4 || t[1] != "u" || t[2] != "vector" ||
                (t[3] != "rotation" && t[3] != "axial"))
                throw ParseError(
                    at(ln.number, "expected: equivariant u vector <rotation|axial>"));
            spec.equivariant = true;
            spec.vector_kind = t[3];
        } else if (head == "check") {
            if (t.size() < 2)
                throw ParseError(at(ln.number, "check needs at least one name"));
            for (std::size_t j = 1; j < t.size(); ++j) {
                if (!known_checks().count(t[j]))
                    throw ParseError(at(ln.number, "unknown check '" + t[j] + "'"));
                spec.checks.push_back(t[j]);
            }
        } else {
            throw ParseError(at(ln.number, "unknown directive '" + head + "'"));
        }
    }
    if (!saw_action) throw ParseError("missing action");

    // Pass 3: build the table. The reserved parameters hbar, i, u exist in
    // every table; declaring them is only a consistency assertion.
    auto vt = std::make_shared<VariableTable>();
    for (const auto& p : spec.params) {
        if (p.name == "hbar" || p.name == "i" || p.name == "u") continue;
        vt->add_parameter(p.name, p.ghost, p.square);
    }
    for (const auto& v : spec.vars) vt->add_field(v.name, v.ghost, v.formdeg);
    vt->enable_deltas();
    spec.tbl = vt;

    // Pass 4: pairing with the grading diagnostic.
    spec.D.tbl = spec.tbl;
    spec.D.k = spec.k;
    std::set<std::string> used;
    for (std::size_t idx = 0; idx < spec.pairs.size(); ++idx) {
        const PairDecl& pd = spec.pairs[idx];
        int line = pair_lines[idx];
        for (const std::string& n : {pd.base, pd.mom}) {
            if (!spec.tbl->has(n) ||
                spec.tbl->info(spec.tbl->id(n)).kind != VarKind::Field)
                throw ParseError(at(line, "pair member '" + n +
                                             "' is not a declared variable"));
            if (!used.insert(n).second)
                throw ParseError(at(line, "variable '" + n +
                                             "' appears in two pairs"));
        }
        int gb = spec.tbl->info(spec.tbl->id(pd.base)).ghost;
        int gm = spec.tbl->info(spec.tbl->id(pd.mom)).ghost;
        if (gb + gm != spec.k - 1)
            throw ParseError(
                at(line, "grading: pair (" + pd.base + ", " + pd.mom + ") has gh(" +
                             pd.base + ") + gh(" + pd.mom + ") = " +
                             std::to_string(gb + gm) + ", expected k - 1 = " +
                             std::to_string(spec.k - 1)));
        DarbouxPair pr;
        pr.base = spec.tbl->id(pd.base);
        pr.mom = spec.tbl->id(pd.mom);
        pr.coeff = GradedPoly::zero(spec.tbl);
        spec.D.pairs.push_back(std::move(pr));
    }
    spec.D.validate();

    // Pass 5: the action.
    spec.action = parse_expression(spec.tbl, action_src, action_line, action_col0);
    spec.action_text = spec.action.render();
    return spec;
}

ModelSpec parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str(), std::filesystem::path(path).stem().string());
}

bool ModelSpec::operator==(const ModelSpec& o) const {
    return params == o.params && vars == o.vars && pairs == o.pairs && k == o.k &&
           equivariant == o.equivariant && vector_kind == o.vector_kind &&
           action_text == o.action_text && checks == o.checks;
}

std::string render_model(const ModelSpec& spec) {
    std::ostringstream out;
    for (const auto& p : spec.params) {
        out << "param " << p.name << " ghost " << p.ghost;
        if (p.square) {
            Rat c = *p.square;
            out << " relation " << p.name << "^2";
            if (c > 0)
                out << "-" << to_string(c);
            else
                out << "+" << to_string(-c);
            out << "=0";
        }
        out << "\n";
    }
    for (const auto& v : spec.vars) {
        out << "var " << v.name << " ghost " << v.ghost;
        if (v.formdeg != 0) out << " formdeg " << v.formdeg;
        out << "\n";
    }
    out << "symplectic k " << spec.k << "\n";
    for (const auto& pd : spec.pairs) out << "pair " << pd.base << " " << pd.mom << "\n";
    if (spec.equivariant) out << "equivariant u vector " << spec.vector_kind << "\n";
    out << "action " << spec.action_text << "\n";
    for (const auto& c : spec.checks) out << "check " << c << "\n";
    return out.str();
}

}  // namespace bvlab
