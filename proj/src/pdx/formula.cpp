#include "pdx/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pdx {

char four_value_letter(FourValue v) {
    switch (v) {
        case FourValue::T: return 'T';
        case FourValue::F: return 'F';
        case FourValue::N: return 'N';
        case FourValue::B: return 'B';
    }
    return '?';
}

struct Formula::Node {
    Kind kind;
    std::string name;                   // Atom only
    std::shared_ptr<const Node> lhs;    // Not child / And-Or left
    std::shared_ptr<const Node> rhs;    // And-Or right
};

namespace {

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return name != "top" && name != "bot";
}

} // namespace

Formula Formula::atom(std::string name) {
    if (!valid_atom_name(name)) {
        throw Error(ErrorCode::Domain, "invalid atom name: '" + name + "'");
    }
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::bottom() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Bottom, {}, nullptr, nullptr});
    return Formula(node);
}

Formula Formula::top() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr});
    return Formula(node);
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::atom_name() const {
    if (node_->kind != Kind::Atom) throw Error(ErrorCode::Domain, "atom_name on non-atom node");
    return node_->name;
}

Formula Formula::child() const {
    if (node_->kind != Kind::Not) throw Error(ErrorCode::Domain, "child on non-negation node");
    return Formula(node_->lhs);
}

Formula Formula::left() const {
    if (node_->kind != Kind::And && node_->kind != Kind::Or)
        throw Error(ErrorCode::Domain, "left on leaf node");
    return Formula(node_->lhs);
}

Formula Formula::right() const {
    if (node_->kind != Kind::And && node_->kind != Kind::Or)
        throw Error(ErrorCode::Domain, "right on leaf node");
    return Formula(node_->rhs);
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom: out.insert(f.atom_name()); break;
        case Formula::Kind::Not: collect_atoms(f.child(), out); break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
            break;
        case Formula::Kind::Bottom:
        case Formula::Kind::Top: break;
    }
}

// Precedence levels for printing: | = 0, & = 1, ~/leaf = 2.
int print_level(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Or: return 0;
        case Formula::Kind::And: return 1;
        default: return 2;
    }
}

// Parenthesises a child when its binding is looser than the context, and
// also a right child at the same level, so that right-nested trees survive
// the left-associative reparse.
void print_node(const Formula& f, int context, bool right_child, std::string& out) {
    const int level = print_level(f.kind());
    const bool parens = level < context || (right_child && level == context && level < 2);
    if (parens) out += "(";
    switch (f.kind()) {
        case Formula::Kind::Atom: out += f.atom_name(); break;
        case Formula::Kind::Bottom: out += "bot"; break;
        case Formula::Kind::Top: out += "top"; break;
        case Formula::Kind::Not:
            out += "~";
            print_node(f.child(), 2, false, out);
            break;
        case Formula::Kind::And:
            print_node(f.left(), 1, false, out);
            out += " & ";
            print_node(f.right(), 1, true, out);
            break;
        case Formula::Kind::Or:
            print_node(f.left(), 0, false, out);
            out += " | ";
            print_node(f.right(), 0, true, out);
            break;
    }
    if (parens) out += ")";
}

} // namespace

std::vector<std::string> Formula::atoms() const {
    std::set<std::string> names;
    collect_atoms(*this, names);
    return {names.begin(), names.end()};
}

std::string Formula::to_string() const {
    std::string out;
    print_node(*this, 0, false, out);
    return out;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Kind::Atom: return node_->name == other.node_->name;
        case Kind::Bottom:
        case Kind::Top: return true;
        case Kind::Not: return child() == other.child();
        case Kind::And:
        case Kind::Or: return left() == other.left() && right() == other.right();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class TokenKind { Ident, Top, Bot, Not, And, Or, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokenKind::End, start, ""};
            return;
        }
        const char c = text_[pos_];
        if (c == '~' || c == '!') {
            ++pos_;
            current_ = {TokenKind::Not, start, std::string(1, c)};
        } else if (c == '&') {
            ++pos_;
            current_ = {TokenKind::And, start, "&"};
        } else if (c == '|') {
            ++pos_;
            current_ = {TokenKind::Or, start, "|"};
        } else if (c == '(') {
            ++pos_;
            current_ = {TokenKind::LParen, start, "("};
        } else if (c == ')') {
            ++pos_;
            current_ = {TokenKind::RParen, start, ")"};
        } else if (text_.compare(pos_, 3, "_|_") == 0) {
            pos_ += 3;
            current_ = {TokenKind::Bot, start, "_|_"};
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_ + 1;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "top") {
                current_ = {TokenKind::Top, start, word};
            } else if (word == "bot") {
                current_ = {TokenKind::Bot, start, word};
            } else {
                current_ = {TokenKind::Ident, start, word};
            }
        } else {
            throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{TokenKind::End, 0, ""};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    Formula parse() {
        if (lexer_.peek().kind == TokenKind::End) {
            throw ParseError(lexer_.peek().offset, "empty input");
        }
        Formula f = parse_or();
        const Token& t = lexer_.peek();
        if (t.kind != TokenKind::End) {
            throw ParseError(t.offset, "unexpected '" + t.text + "'");
        }
        return f;
    }

private:
    Formula parse_or() {
        Formula f = parse_and();
        while (lexer_.peek().kind == TokenKind::Or) {
            lexer_.take();
            f = Formula::disjunction(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_not();
        while (lexer_.peek().kind == TokenKind::And) {
            lexer_.take();
            f = Formula::conjunction(std::move(f), parse_not());
        }
        return f;
    }

    Formula parse_not() {
        std::size_t negations = 0;
        while (lexer_.peek().kind == TokenKind::Not) {
            lexer_.take();
            ++negations;
        }
        Formula f = parse_primary();
        for (std::size_t i = 0; i < negations; ++i) f = Formula::negation(std::move(f));
        return f;
    }

    Formula parse_primary() {
        const Token t = lexer_.take();
        switch (t.kind) {
            case TokenKind::Ident: return Formula::atom(t.text);
            case TokenKind::Top: return Formula::top();
            case TokenKind::Bot: return Formula::bottom();
            case TokenKind::LParen: {
                Formula f = parse_or();
                const Token close = lexer_.take();
                if (close.kind != TokenKind::RParen) {
                    throw ParseError(close.offset, "expected ')'");
                }
                return f;
            }
            case TokenKind::End: throw ParseError(t.offset, "expected a formula");
            default: throw ParseError(t.offset, "unexpected '" + t.text + "'");
        }
    }

    Lexer lexer_;
};

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Truth tables and equivalence
// ---------------------------------------------------------------------------

FourValue evaluate(const Formula& f,
                   const std::vector<std::string>& atoms,
                   const std::vector<FourValue>& values) {
    switch (f.kind()) {
        case Formula::Kind::Bottom: return FourValue::F;
        case Formula::Kind::Top: return FourValue::T;
        case Formula::Kind::Atom: {
            const auto it = std::find(atoms.begin(), atoms.end(), f.atom_name());
            if (it == atoms.end()) {
                throw Error(ErrorCode::Domain, "unknown atom: " + f.atom_name());
            }
            return values[static_cast<std::size_t>(it - atoms.begin())];
        }
        case Formula::Kind::Not: return fv_not(evaluate(f.child(), atoms, values));
        case Formula::Kind::And:
            return fv_and(evaluate(f.left(), atoms, values), evaluate(f.right(), atoms, values));
        case Formula::Kind::Or:
            return fv_or(evaluate(f.left(), atoms, values), evaluate(f.right(), atoms, values));
    }
    throw Error(ErrorCode::Domain, "corrupt formula node");
}

bool equivalent(const Formula& lhs, const Formula& rhs) {
    std::set<std::string> names;
    collect_atoms(lhs, names);
    collect_atoms(rhs, names);
    const std::vector<std::string> atoms(names.begin(), names.end());
    if (atoms.size() > kMaxEquivalenceAtoms) {
        throw Error(ErrorCode::Domain,
                    "equivalence check supports at most " + std::to_string(kMaxEquivalenceAtoms) +
                        " atoms (got " + std::to_string(atoms.size()) + ")");
    }
    static constexpr FourValue kAll[4] = {FourValue::N, FourValue::T, FourValue::F, FourValue::B};
    std::vector<FourValue> values(atoms.size(), FourValue::N);
    const std::uint64_t total = std::uint64_t{1} << (2 * atoms.size());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            values[i] = kAll[rest & 3];
            rest >>= 2;
        }
        if (evaluate(lhs, atoms, values) != evaluate(rhs, atoms, values)) return false;
    }
    return true;
}

} // namespace pdx
