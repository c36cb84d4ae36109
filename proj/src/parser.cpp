#include "sgr/parser.hpp"

#include <cctype>

namespace sgr {

namespace {

enum class Tok {
    Ident,
    Int,
    Arrow,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Colon,
    Equals,
    Newline,
    End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok kind, std::string t) { out.push_back(Token{kind, std::move(t), line, col}); };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            push(Tok::Newline, "\n");
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            push(Tok::Ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Tok::Int, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Tok::Arrow, "->");
            i += 2;
            col += 2;
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case ',': kind = Tok::Comma; break;
            case ';': kind = Tok::Semicolon; break;
            case ':': kind = Tok::Colon; break;
            case '=': kind = Tok::Equals; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(kind, std::string(1, c));
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

// Free-algebra expression value: words with rational coefficients.
using FreeExpr = std::map<Word, Rational>;

FreeExpr free_const(Rational c) {
    FreeExpr e;
    if (c != 0) e[Word{}] = std::move(c);
    return e;
}

FreeExpr free_add(FreeExpr a, const FreeExpr& b, int sign) {
    for (const auto& [w, c] : b) {
        auto [it, inserted] = a.try_emplace(w, sign * c);
        if (!inserted) {
            it->second += sign * c;
            if (it->second == 0) a.erase(it);
        }
    }
    return a;
}

FreeExpr free_mul(const FreeExpr& a, const FreeExpr& b) {
    FreeExpr out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, inserted] = out.try_emplace(std::move(w), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    const Token& peek(bool skip_newlines = false) {
        size_t p = pos_;
        if (skip_newlines)
            while (tokens_[p].kind == Tok::Newline) ++p;
        return tokens_[p];
    }

    Token next(bool skip_newlines = false) {
        if (skip_newlines)
            while (tokens_[pos_].kind == Tok::Newline) ++pos_;
        return tokens_[pos_++];
    }

    Token expect(Tok kind, const std::string& what, bool skip_newlines = false) {
        const Token t = next(skip_newlines);
        if (t.kind != kind) throw ParseError(t.line, t.col, "expected " + what + ", got '" + display(t) + "'");
        return t;
    }

    void expect_keyword(const std::string& kw) {
        const Token t = next(true);
        if (t.kind != Tok::Ident || t.text != kw)
            throw ParseError(t.line, t.col, "expected '" + kw + "', got '" + display(t) + "'");
    }

    bool accept(Tok kind, bool skip_newlines = false) {
        if (peek(skip_newlines).kind != kind) return false;
        next(skip_newlines);
        return true;
    }

    bool at_keyword(const std::string& kw) {
        const Token& t = peek(true);
        return t.kind == Tok::Ident && t.text == kw;
    }

    void end_statement() {
        const Token& t = peek();
        if (t.kind == Tok::Newline) {
            next();
            return;
        }
        if (t.kind == Tok::End) return;
        throw ParseError(t.line, t.col, "expected end of line, got '" + display(t) + "'");
    }

    static std::string display(const Token& t) {
        if (t.kind == Tok::Newline) return "\\n";
        if (t.kind == Tok::End) return "<end of input>";
        return t.text;
    }

    // generator names must be declared before expressions use them
    FreeExpr parse_expr(const std::vector<GeneratorSpec>& gens) {
        int sign = 1;
        if (accept(Tok::Minus)) sign = -1;
        FreeExpr acc = parse_term(gens);
        if (sign < 0) acc = free_add(FreeExpr{}, acc, -1);
        while (true) {
            if (accept(Tok::Plus)) {
                acc = free_add(std::move(acc), parse_term(gens), 1);
            } else if (accept(Tok::Minus)) {
                acc = free_add(std::move(acc), parse_term(gens), -1);
            } else {
                break;
            }
        }
        return acc;
    }

    Rational parse_rational() {
        int sign = 1;
        if (accept(Tok::Minus, true)) sign = -1;
        const Token num = expect(Tok::Int, "an integer", true);
        Rational r(num.text);
        if (accept(Tok::Slash)) {
            const Token den = expect(Tok::Int, "a denominator");
            if (Rational(den.text) == 0) throw ParseError(den.line, den.col, "zero denominator");
            r /= Rational(den.text);
        }
        r.canonicalize();
        return sign < 0 ? Rational(-r) : r;
    }

    int parse_int() {
        int sign = 1;
        if (accept(Tok::Minus, true)) sign = -1;
        const Token t = expect(Tok::Int, "an integer", true);
        return sign * std::stoi(t.text);
    }

  private:
    FreeExpr parse_term(const std::vector<GeneratorSpec>& gens) {
        FreeExpr acc = parse_factor(gens);
        while (accept(Tok::Star)) acc = free_mul(acc, parse_factor(gens));
        return acc;
    }

    FreeExpr parse_factor(const std::vector<GeneratorSpec>& gens) {
        FreeExpr base = parse_primary(gens);
        if (accept(Tok::Caret)) {
            const Token t = expect(Tok::Int, "a positive integer exponent");
            const int e = std::stoi(t.text);
            if (e < 1) throw ParseError(t.line, t.col, "exponents must be positive");
            FreeExpr acc = base;
            for (int i = 1; i < e; ++i) acc = free_mul(acc, base);
            return acc;
        }
        return base;
    }

    FreeExpr parse_primary(const std::vector<GeneratorSpec>& gens) {
        const Token t = next();
        switch (t.kind) {
            case Tok::Int: {
                Rational r(t.text);
                if (accept(Tok::Slash)) {
                    const Token den = expect(Tok::Int, "a denominator");
                    if (Rational(den.text) == 0) throw ParseError(den.line, den.col, "zero denominator");
                    r /= Rational(den.text);
                }
                r.canonicalize();
                return free_const(std::move(r));
            }
            case Tok::Ident: {
                for (size_t g = 0; g < gens.size(); ++g) {
                    if (gens[g].name == t.text) {
                        FreeExpr e;
                        e[Word{static_cast<int>(g)}] = 1;
                        return e;
                    }
                }
                throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
            }
            case Tok::Minus: {
                // unary minus inside a product position, e.g. (-y)
                FreeExpr inner = parse_factor(gens);
                return free_add(FreeExpr{}, inner, -1);
            }
            case Tok::LParen: {
                FreeExpr inner = parse_expr(gens);
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError(t.line, t.col, "expected a polynomial, got '" + display(t) + "'");
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

RawRule to_raw_rule(int hi, int lo, const FreeExpr& rhs) {
    RawRule r{hi, lo, {}};
    for (const auto& [w, c] : rhs) r.rhs.emplace_back(w, c);
    return r;
}

Polynomial normalized(const RingPresentation& ring, const FreeExpr& e) {
    std::vector<std::pair<Word, Rational>> words(e.begin(), e.end());
    return normal_form(ring, words);
}

// "ring"/"gen"/"rule" statements; leaves the cursor at the first foreign
// keyword or the end of input.
RingPresentation parse_presentation_prefix(Parser& p) {
    RingPresentation ring;
    bool named = false;
    std::vector<RawRule> raw;
    while (true) {
        if (p.peek(true).kind == Tok::End) break;
        if (p.at_keyword("ring")) {
            p.expect_keyword("ring");
            const Token name = p.expect(Tok::Ident, "a ring name");
            if (named) throw ParseError(name.line, name.col, "duplicate ring statement");
            ring.name = name.text;
            named = true;
            p.end_statement();
        } else if (p.at_keyword("gen")) {
            p.expect_keyword("gen");
            const Token name = p.expect(Tok::Ident, "a generator name");
            p.expect_keyword("degree");
            const Token deg = p.expect(Tok::Int, "a degree");
            ring.generators.push_back(GeneratorSpec{name.text, std::stoi(deg.text)});
            p.end_statement();
        } else if (p.at_keyword("rule")) {
            p.expect_keyword("rule");
            const Token left = p.expect(Tok::Ident, "a generator name");
            p.expect(Tok::Star, "'*'");
            const Token right = p.expect(Tok::Ident, "a generator name");
            p.expect(Tok::Arrow, "'->'");
            auto find = [&](const Token& t) {
                for (size_t g = 0; g < ring.generators.size(); ++g)
                    if (ring.generators[g].name == t.text) return static_cast<int>(g);
                throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
            };
            const int hi = find(left);
            const int lo = find(right);
            const FreeExpr rhs = p.parse_expr(ring.generators);
            raw.push_back(to_raw_rule(hi, lo, rhs));
            p.end_statement();
        } else {
            break;
        }
    }
    if (!named) {
        const Token& t = p.peek(true);
        throw ParseError(t.line, t.col, "presentation must start with a ring statement");
    }
    install_rules(ring, std::move(raw));
    return ring;
}

ShiftSum parse_shift_sum_inner(Parser& p) {
    ShiftSum sum;
    if (p.peek(true).kind == Tok::Int && p.peek(true).text == "0") {
        p.next(true);
        return sum;  // the zero module
    }
    while (true) {
        const Token r = p.expect(Tok::Ident, "'R'", true);
        if (r.text != "R") throw ParseError(r.line, r.col, "expected 'R'");
        p.expect(Tok::LParen, "'('");
        const int n = p.parse_int();
        p.expect(Tok::RParen, "')'", true);
        int count = 1;
        if (p.accept(Tok::Caret)) {
            const Token c = p.expect(Tok::Int, "a multiplicity");
            count = std::stoi(c.text);
            if (count < 1) throw ParseError(c.line, c.col, "multiplicity must be positive");
        }
        for (int i = 0; i < count; ++i) sum.shifts.push_back(n);
        if (!p.accept(Tok::Plus)) break;
    }
    return sum;
}

std::vector<Polynomial> parse_expr_list(Parser& p, const RingPresentation& ring) {
    std::vector<Polynomial> out;
    while (true) {
        out.push_back(normalized(ring, p.parse_expr(ring.generators)));
        if (!p.accept(Tok::Comma)) break;
    }
    return out;
}

}  // namespace

RingPresentation parse_presentation(const std::string& text) {
    Parser p(text);
    RingPresentation ring = parse_presentation_prefix(p);
    const Token& t = p.peek(true);
    if (t.kind != Tok::End) throw ParseError(t.line, t.col, "unexpected '" + Parser::display(t) + "'");
    return ring;
}

Polynomial parse_polynomial(const RingPresentation& ring, const std::string& text) {
    Parser p(text);
    const FreeExpr e = p.parse_expr(ring.generators);
    const Token& t = p.peek(true);
    if (t.kind != Tok::End) throw ParseError(t.line, t.col, "unexpected '" + Parser::display(t) + "'");
    return normalized(ring, e);
}

ShiftSum parse_shift_sum(const std::string& text) {
    Parser p(text);
    ShiftSum sum = parse_shift_sum_inner(p);
    const Token& t = p.peek(true);
    if (t.kind != Tok::End) throw ParseError(t.line, t.col, "unexpected '" + Parser::display(t) + "'");
    return sum;
}

CertificateFile parse_certificate_file(const std::string& text) {
    Parser p(text);
    CertificateFile file;
    file.ring = parse_presentation_prefix(p);
    while (true) {
        if (p.at_keyword("map")) {
            p.expect_keyword("map");
            MorphismSpec spec;
            spec.name = p.expect(Tok::Ident, "a map name").text;
            p.expect(Tok::Colon, "':'");
            spec.source = parse_shift_sum_inner(p);
            p.expect(Tok::Arrow, "'->'", true);
            spec.target = parse_shift_sum_inner(p);
            p.expect(Tok::Equals, "'='", true);
            p.expect(Tok::LBracket, "'['", true);
            std::vector<Polynomial> flat;
            if (!p.accept(Tok::RBracket, true)) {
                while (true) {
                    while (p.accept(Tok::Newline)) {
                    }
                    flat.push_back(normalized(file.ring, p.parse_expr(file.ring.generators)));
                    if (p.accept(Tok::Comma, true)) continue;
                    p.expect(Tok::RBracket, "']'", true);
                    break;
                }
            }
            const size_t rows = static_cast<size_t>(spec.target.size());
            const size_t cols = static_cast<size_t>(spec.source.size());
            if (flat.size() != rows * cols) {
                const Token& t = p.peek(true);
                throw ParseError(t.line, t.col,
                                 "map " + spec.name + " needs " + std::to_string(rows * cols) + " entries, got " +
                                     std::to_string(flat.size()));
            }
            spec.entries.assign(rows, std::vector<Polynomial>(cols));
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) spec.entries[i][j] = flat[i * cols + j];
            file.maps.push_back(std::move(spec));
            p.end_statement();
        } else if (p.at_keyword("augment")) {
            p.expect_keyword("augment");
            file.augment_gens = parse_expr_list(p, file.ring);
            p.end_statement();
        } else {
            break;
        }
    }
    const Token& t = p.peek(true);
    if (t.kind != Tok::End) throw ParseError(t.line, t.col, "unexpected '" + Parser::display(t) + "'");
    return file;
}

BaerProblemFile parse_baer_problem(const std::string& text) {
    Parser p(text);
    BaerProblemFile file;
    file.ring = parse_presentation_prefix(p);
    bool have_ideal = false, have_module = false, have_values = false;
    while (true) {
        if (p.at_keyword("ideal")) {
            p.expect_keyword("ideal");
            file.ideal_gens = parse_expr_list(p, file.ring);
            have_ideal = true;
            p.end_statement();
        } else if (p.at_keyword("module")) {
            p.expect_keyword("module");
            if (p.at_keyword("truncate")) {
                p.expect_keyword("truncate");
                const Token r = p.expect(Tok::Ident, "'R'");
                if (r.text != "R") throw ParseError(r.line, r.col, "expected 'R'");
                p.expect(Tok::Slash, "'/'");
                p.expect(Tok::LBrace, "'{'");
                file.module.truncate = true;
                if (!p.accept(Tok::RBrace, true)) {
                    file.module.quotient_gens = parse_expr_list(p, file.ring);
                    p.expect(Tok::RBrace, "'}'", true);
                }
                p.expect_keyword("to");
                file.module.D = p.parse_int();
                p.end_statement();
            } else if (p.at_keyword("dims")) {
                p.expect_keyword("dims");
                file.module.truncate = false;
                while (p.peek().kind == Tok::Int) {
                    file.module.dims.push_back(std::stol(p.next().text));
                }
                file.module.D = static_cast<int>(file.module.dims.size()) - 1;
                p.end_statement();
            } else {
                const Token& t = p.peek(true);
                throw ParseError(t.line, t.col, "expected 'truncate' or 'dims' after 'module'");
            }
            have_module = true;
        } else if (p.at_keyword("action")) {
            p.expect_keyword("action");
            const Token gname = p.expect(Tok::Ident, "a generator name");
            const auto g = file.ring.generator_index(gname.text);
            if (!g) throw ParseError(gname.line, gname.col, "unknown generator '" + gname.text + "'");
            BaerModuleSpec::ActionBlock block;
            block.gen = *g;
            block.degree = p.parse_int();
            p.expect(Tok::Equals, "'='", true);
            p.expect(Tok::LBracket, "'['", true);
            std::vector<std::vector<Rational>> rows;
            rows.emplace_back();
            if (!p.accept(Tok::RBracket, true)) {
                while (true) {
                    rows.back().push_back(p.parse_rational());
                    if (p.accept(Tok::Comma, true)) continue;
                    if (p.accept(Tok::Semicolon, true)) {
                        rows.emplace_back();
                        continue;
                    }
                    p.expect(Tok::RBracket, "']'", true);
                    break;
                }
            }
            const size_t cols = rows.front().size();
            QMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != cols) {
                    const Token& t = p.peek(true);
                    throw ParseError(t.line, t.col, "ragged action matrix");
                }
                for (size_t j = 0; j < cols; ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
            }
            block.matrix = std::move(m);
            file.module.actions.push_back(std::move(block));
            p.end_statement();
        } else if (p.at_keyword("values")) {
            p.expect_keyword("values");
            while (true) {
                if (p.peek(true).kind == Tok::LBracket) {
                    p.expect(Tok::LBracket, "'['", true);
                    std::vector<Rational> coords;
                    if (!p.accept(Tok::RBracket, true)) {
                        while (true) {
                            coords.push_back(p.parse_rational());
                            if (p.accept(Tok::Comma, true)) continue;
                            p.expect(Tok::RBracket, "']'", true);
                            break;
                        }
                    }
                    QVector v(static_cast<Index>(coords.size()));
                    for (size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = coords[i];
                    file.values.emplace_back(std::move(v));
                } else {
                    file.values.emplace_back(normalized(file.ring, p.parse_expr(file.ring.generators)));
                }
                if (!p.accept(Tok::Comma, true)) break;
            }
            have_values = true;
            p.end_statement();
        } else {
            break;
        }
    }
    const Token& t = p.peek(true);
    if (t.kind != Tok::End) throw ParseError(t.line, t.col, "unexpected '" + Parser::display(t) + "'");
    if (!have_ideal) throw ParseError(t.line, t.col, "baer problem needs an ideal statement");
    if (!have_module) throw ParseError(t.line, t.col, "baer problem needs a module statement");
    if (!have_values) throw ParseError(t.line, t.col, "baer problem needs a values statement");
    return file;
}

}  // namespace sgr
