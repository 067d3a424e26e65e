#include "qlogic/identity.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qlogic {

struct Term::Node {
    Kind kind;
    std::string name;
    std::vector<Term> children;
};

Term Term::var(std::string name) {
    const bool valid = !name.empty() && std::isalpha(static_cast<unsigned char>(name.front())) &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!valid)
        throw std::invalid_argument("invalid variable name '" + name + "'");
    return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}
Term Term::bottom() { return Term(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}})); }
Term Term::top() { return Term(std::make_shared<const Node>(Node{Kind::Top, {}, {}})); }
Term Term::negation(Term child) {
    return Term(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(child)}}));
}
Term Term::meet(Term left, Term right) {
    return Term(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(left), std::move(right)}}));
}
Term Term::join(Term left, Term right) {
    return Term(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(left), std::move(right)}}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::child() const { return node_->children.at(0); }
const Term& Term::left() const { return node_->children.at(0); }
const Term& Term::right() const { return node_->children.at(1); }

namespace {

void collect(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
    case Term::Kind::Var:
        out.insert(t.name());
        break;
    case Term::Kind::Not:
        collect(t.child(), out);
        break;
    case Term::Kind::And:
    case Term::Kind::Or:
        collect(t.left(), out);
        collect(t.right(), out);
        break;
    default:
        break;
    }
}

} // namespace

std::vector<std::string> Term::variables() const {
    std::set<std::string> names;
    collect(*this, names);
    return {names.begin(), names.end()};
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.node_->children.size() != b.node_->children.size())
        return false;
    for (std::size_t k = 0; k < a.node_->children.size(); ++k)
        if (!(a.node_->children[k] == b.node_->children[k]))
            return false;
    return true;
}

std::vector<std::string> IdentityStatement::variables() const {
    std::set<std::string> names;
    collect(lhs, names);
    collect(rhs, names);
    return {names.begin(), names.end()};
}

namespace {

enum class Tok { Ident, Zero, One, LParen, RParen, And, Or, Not, Eq, Leq, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t position;  // 1-based, in characters
};

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident:
        return "variable";
    case Tok::Zero:
        return "'0'";
    case Tok::One:
        return "'1'";
    case Tok::LParen:
        return "'('";
    case Tok::RParen:
        return "')'";
    case Tok::And:
        return "'&'";
    case Tok::Or:
        return "'|'";
    case Tok::Not:
        return "'!'";
    case Tok::Eq:
        return "'='";
    case Tok::Leq:
        return "'<='";
    case Tok::End:
        return "end of input";
    }
    return "?";
}

struct Alias {
    std::string_view utf8;
    Tok kind;
};

constexpr Alias kAliases[] = {
    {"∧", Tok::And}, {"∨", Tok::Or},     {"¬", Tok::Not},
    {"≤", Tok::Leq}, {"⊥", Tok::Zero},   {"⊤", Tok::One},
};

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80)
        return 1;
    if ((lead >> 5) == 0x6)
        return 2;
    if ((lead >> 4) == 0xE)
        return 3;
    if ((lead >> 3) == 0x1E)
        return 4;
    return 1;
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t column = 1;
    while (i < text.size()) {
        const char c = text[i];
        const auto uc = static_cast<unsigned char>(c);
        if (std::isspace(uc)) {
            ++i;
            ++column;
            continue;
        }
        auto emit = [&](Tok kind, std::size_t bytes) {
            out.push_back(Token{kind, std::string(text.substr(i, bytes)), column});
            i += bytes;
            ++column;
        };
        if (std::isalpha(uc)) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back(Token{Tok::Ident, std::string(text.substr(i, j - i)), column});
            column += j - i;
            i = j;
            continue;
        }
        switch (c) {
        case '0':
            emit(Tok::Zero, 1);
            continue;
        case '1':
            emit(Tok::One, 1);
            continue;
        case '(':
            emit(Tok::LParen, 1);
            continue;
        case ')':
            emit(Tok::RParen, 1);
            continue;
        case '&':
            emit(Tok::And, 1);
            continue;
        case '|':
            emit(Tok::Or, 1);
            continue;
        case '!':
            emit(Tok::Not, 1);
            continue;
        case '=':
            emit(Tok::Eq, 1);
            continue;
        case '<':
            if (i + 1 < text.size() && text[i + 1] == '=') {
                out.push_back(Token{Tok::Leq, "<=", column});
                i += 2;
                column += 2;
                continue;
            }
            break;
        default:
            break;
        }
        bool matched = false;
        for (const auto& alias : kAliases)
            if (text.substr(i, alias.utf8.size()) == alias.utf8) {
                emit(alias.kind, alias.utf8.size());
                matched = true;
                break;
            }
        if (matched)
            continue;
        const auto bad = text.substr(i, std::min(utf8_length(uc), text.size() - i));
        throw ParseError("unexpected character '" + std::string(bad) + "' at position " + std::to_string(column),
                         column);
    }
    out.push_back(Token{Tok::End, "", column});
    return out;
}

// Recursive descent, one function per precedence level.
class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    IdentityStatement statement() {
        Term lhs = term();
        Relation rel;
        if (peek().kind == Tok::Eq)
            rel = Relation::Equal;
        else if (peek().kind == Tok::Leq)
            rel = Relation::Leq;
        else
            fail({Tok::And, Tok::Or, Tok::Eq, Tok::Leq});
        ++pos_;
        Term rhs = term();
        expect_end();
        return IdentityStatement{std::move(lhs), std::move(rhs), rel};
    }

    Term whole_term() {
        Term t = term();
        expect_end();
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
        std::string list;
        std::size_t k = 0;
        for (Tok t : expected) {
            if (k++)
                list += k == expected.size() ? " or " : ", ";
            list += describe(t);
        }
        const Token& got = peek();
        const std::string found = got.kind == Tok::End ? "end of input" : "'" + got.text + "'";
        throw ParseError("expected " + list + " at position " + std::to_string(got.position) + ", found " + found,
                         got.position);
    }

    void expect_end() {
        if (peek().kind != Tok::End)
            fail({Tok::And, Tok::Or, Tok::End});
    }

    Term term() {
        Term t = conjunction();
        while (peek().kind == Tok::Or) {
            ++pos_;
            t = Term::join(std::move(t), conjunction());
        }
        return t;
    }

    Term conjunction() {
        Term t = unary();
        while (peek().kind == Tok::And) {
            ++pos_;
            t = Term::meet(std::move(t), unary());
        }
        return t;
    }

    Term unary() {
        if (peek().kind == Tok::Not) {
            ++pos_;
            return Term::negation(unary());
        }
        return atom();
    }

    Term atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident:
            ++pos_;
            return Term::var(t.text);
        case Tok::Zero:
            ++pos_;
            return Term::bottom();
        case Tok::One:
            ++pos_;
            return Term::top();
        case Tok::LParen: {
            ++pos_;
            Term inner = term();
            if (peek().kind != Tok::RParen)
                fail({Tok::And, Tok::Or, Tok::RParen});
            ++pos_;
            return inner;
        }
        default:
            fail({Tok::Ident, Tok::Zero, Tok::One, Tok::LParen, Tok::Not});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

enum Precedence { kTop = 0, kOr = 1, kAnd = 2, kUnary = 3 };

std::string print(const Term& t, int context) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return t.name();
    case Term::Kind::Bottom:
        return "0";
    case Term::Kind::Top:
        return "1";
    case Term::Kind::Not:
        return "!" + print(t.child(), kUnary);
    case Term::Kind::And: {
        std::string s = print(t.left(), kAnd) + " & " + print(t.right(), kUnary);
        return context > kAnd ? "(" + s + ")" : s;
    }
    case Term::Kind::Or: {
        std::string s = print(t.left(), kOr) + " | " + print(t.right(), kAnd);
        return context > kOr ? "(" + s + ")" : s;
    }
    }
    return "";
}

} // namespace

IdentityStatement parse_statement(std::string_view text) { return Parser(lex(text)).statement(); }

Term parse_term(std::string_view text) { return Parser(lex(text)).whole_term(); }

std::vector<IdentityStatement> parse_statements(std::string_view text) {
    std::vector<IdentityStatement> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;
        try {
            out.push_back(parse_statement(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
        }
    }
    return out;
}

std::string to_string(const Term& t) { return print(t, kTop); }

std::string to_string(const IdentityStatement& s) {
    return print(s.lhs, kTop) + (s.relation == Relation::Equal ? " = " : " <= ") + print(s.rhs, kTop);
}

} // namespace qlogic
