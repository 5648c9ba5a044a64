#include <cctype>
#include <string_view>

#include "fointerp/error.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

enum class Tok {
    Ident, LParen, RParen, Comma, Dot, Not, And, Or, Implies, Iff, Equal, Less, Greater, Sim,
    Forall, Exists, True, False, End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Equal: return "'='";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Sim: return "'~'";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::End: return "end of input";
    }
    return "?";
}

[[noreturn]] void syntax_error(std::size_t pos, const std::string& msg) {
    fail(ErrorKind::Parse, "syntax error at offset " + std::to_string(pos) + ": " + msg);
}

struct Alias {
    std::string_view bytes;
    Tok kind;
};

// Longest spellings first where prefixes overlap.
constexpr Alias kSymbols[] = {
    {"<->", Tok::Iff},     {"->", Tok::Implies},  {"\xE2\x86\x94", Tok::Iff}, {"\xE2\x86\x92", Tok::Implies},
    {"\xE2\x88\x80", Tok::Forall}, {"\xE2\x88\x83", Tok::Exists}, {"\xC2\xAC", Tok::Not},
    {"\xE2\x88\xA7", Tok::And}, {"\xE2\x88\xA8", Tok::Or}, {"\xE2\x89\x88", Tok::Sim},
    {"(", Tok::LParen},    {")", Tok::RParen},    {",", Tok::Comma},          {".", Tok::Dot},
    {"!", Tok::Not},       {"&", Tok::And},       {"|", Tok::Or},             {"=", Tok::Equal},
    {"<", Tok::Less},      {">", Tok::Greater},   {"~", Tok::Sim},
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
                ++j;
            std::string word = text.substr(i, j - i);
            Tok kind = Tok::Ident;
            if (word == "forall")
                kind = Tok::Forall;
            else if (word == "exists")
                kind = Tok::Exists;
            else if (word == "true")
                kind = Tok::True;
            else if (word == "false")
                kind = Tok::False;
            out.push_back({kind, std::move(word), i});
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& alias : kSymbols) {
            if (std::string_view(text).substr(i, alias.bytes.size()) == alias.bytes) {
                out.push_back({alias.kind, std::string(alias.bytes), i});
                i += alias.bytes.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            syntax_error(i, "unknown token '" + text.substr(i, c >= 0x80 ? 3 : 1) + "'");
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse_all() {
        Formula f = formula();
        expect(Tok::End);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok t) const { return peek().kind == t; }
    Token take() { return tokens_[pos_++]; }

    Token expect(Tok t) {
        if (!at(t))
            syntax_error(peek().pos, std::string("expected ") + describe(t) + ", got " + describe(peek().kind) +
                                         (peek().text.empty() ? "" : " '" + peek().text + "'"));
        return take();
    }

    Formula formula() { return iff(); }

    Formula iff() {
        Formula left = imp();
        if (at(Tok::Iff)) {
            take();
            return fo::iff(std::move(left), iff());
        }
        return left;
    }

    Formula imp() {
        Formula left = disjunction();
        if (at(Tok::Implies)) {
            take();
            return fo::implies(std::move(left), imp());
        }
        return left;
    }

    Formula disjunction() {
        std::vector<Formula> parts{conjunction()};
        while (at(Tok::Or)) {
            take();
            parts.push_back(conjunction());
        }
        return fo::disj(std::move(parts));
    }

    Formula conjunction() {
        std::vector<Formula> parts{unary()};
        while (at(Tok::And)) {
            take();
            parts.push_back(unary());
        }
        return fo::conj(std::move(parts));
    }

    Formula unary() {
        if (at(Tok::Not)) {
            take();
            return fo::neg(unary());
        }
        if (at(Tok::Forall) || at(Tok::Exists)) {
            bool universal = take().kind == Tok::Forall;
            std::vector<std::string> vars;
            vars.push_back(expect(Tok::Ident).text);
            while (at(Tok::Ident))
                vars.push_back(take().text);
            expect(Tok::Dot);
            Formula body = formula();
            return universal ? fo::forall(std::move(vars), std::move(body)) : fo::exists(std::move(vars), std::move(body));
        }
        return primary();
    }

    Formula primary() {
        if (at(Tok::LParen)) {
            take();
            Formula f = formula();
            expect(Tok::RParen);
            return f;
        }
        if (at(Tok::True)) {
            take();
            return fo::top();
        }
        if (at(Tok::False)) {
            take();
            return fo::bottom();
        }
        Token name = expect(Tok::Ident);
        if (at(Tok::LParen)) {
            take();
            std::vector<std::string> args{expect(Tok::Ident).text};
            while (at(Tok::Comma)) {
                take();
                args.push_back(expect(Tok::Ident).text);
            }
            expect(Tok::RParen);
            return fo::atom(name.text, std::move(args));
        }
        switch (peek().kind) {
        case Tok::Equal:
            take();
            return fo::eq(name.text, expect(Tok::Ident).text);
        case Tok::Less:
            take();
            return fo::atom("<", {name.text, expect(Tok::Ident).text});
        case Tok::Greater:
            take();
            return fo::atom("<", {expect(Tok::Ident).text, name.text});
        case Tok::Sim:
            take();
            return fo::atom("~", {name.text, expect(Tok::Ident).text});
        default:
            syntax_error(peek().pos, "expected '(' or a binary relation after '" + name.text + "', got " +
                                         describe(peek().kind));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool infix(const std::string& relation) { return relation == "<" || relation == "~"; }

// Binding strength used to decide parenthesisation.
int precedence(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Exists:
    case FormulaKind::Forall:
        return 0;
    case FormulaKind::Iff:
        return 1;
    case FormulaKind::Implies:
        return 2;
    case FormulaKind::Or:
        return 3;
    case FormulaKind::And:
        return 4;
    case FormulaKind::Not:
        return 5;
    default:
        return 6;
    }
}

void render_to(const Formula& f, std::string& out);

void render_operand(const Formula& f, int min_prec, std::string& out) {
    if (precedence(f) < min_prec || f.is_quantifier()) {
        out += '(';
        render_to(f, out);
        out += ')';
    } else {
        render_to(f, out);
    }
}

void render_to(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case FormulaKind::True:
        out += "true";
        return;
    case FormulaKind::False:
        out += "false";
        return;
    case FormulaKind::Atom: {
        const auto& args = f.variables();
        if (infix(f.relation()) && args.size() == 2) {
            out += args[0] + " " + f.relation() + " " + args[1];
            return;
        }
        out += f.relation() + "(";
        for (std::size_t i = 0; i < args.size(); ++i)
            out += (i ? "," : "") + args[i];
        out += ')';
        return;
    }
    case FormulaKind::Equal:
        out += f.variables()[0] + " = " + f.variables()[1];
        return;
    case FormulaKind::Not: {
        const Formula& g = f.operand();
        const bool infix_atom = g.kind() == FormulaKind::Equal ||
                                (g.kind() == FormulaKind::Atom && infix(g.relation()) && g.variables().size() == 2);
        out += '!';
        render_operand(g, infix_atom ? 7 : 5, out);
        return;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
        const char* sep = f.kind() == FormulaKind::And ? " & " : " | ";
        const int strict = precedence(f) + 1;
        for (std::size_t i = 0; i < f.children().size(); ++i) {
            if (i)
                out += sep;
            render_operand(f.children()[i], strict, out);
        }
        return;
    }
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
        const int p = precedence(f);
        render_operand(f.lhs(), p + 1, out);
        out += f.kind() == FormulaKind::Implies ? " -> " : " <-> ";
        render_operand(f.rhs(), p, out);
        return;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        out += f.kind() == FormulaKind::Exists ? "exists" : "forall";
        for (const auto& v : f.variables())
            out += " " + v;
        out += ". ";
        const Formula& body = f.operand();
        bool wrap = precedence(body) >= 1 && precedence(body) <= 4;
        if (wrap)
            out += '(';
        render_to(body, out);
        if (wrap)
            out += ')';
        return;
    }
    }
}

} // namespace

Formula parse(const std::string& text) { return Parser(tokenize(text)).parse_all(); }

std::string render(const Formula& f) {
    std::string out;
    render_to(f, out);
    return out;
}

} // namespace fointerp
