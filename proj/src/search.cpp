#include "pirick/search.hpp"

#include <cctype>

#include "pirick/error.hpp"

namespace pirick {

struct PropertyExpr::Node {
    enum Kind { Name, Not, And, Or } kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
};

namespace {

using NodePtr = std::shared_ptr<const PropertyExpr::Node>;
using Node = PropertyExpr::Node;

struct Token {
    enum Kind { Name, And, Or, Not, Open, Close, End } kind;
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t last = 0;  // last non-space column
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        last = col;
        auto single = [&](Token::Kind k) {
            out.push_back({k, std::string(1, c), col});
            ++i;
        };
        switch (c) {
            case '&': single(Token::And); continue;
            case '|': single(Token::Or); continue;
            case '!': single(Token::Not); continue;
            case '(': single(Token::Open); continue;
            case ')': single(Token::Close); continue;
            default: break;
        }
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, c) + "' at column " +
                                                   std::to_string(col),
                        "property name, '(', '!'", col);
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        out.push_back({Token::Name, std::string(s.substr(i, j - i)), col});
        last = j;
        i = j;
    }
    out.push_back({Token::End, "", last == 0 ? 1 : last});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr parse(std::set<std::string>& names) {
        names_ = &names;
        auto n = expr();
        if (peek().kind != Token::End) fail("'&', '|', end of input");
        return n;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string>* names_ = nullptr;

    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const auto& t = peek();
        std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorKind::ParseError,
                    "unexpected " + got + " at column " + std::to_string(t.column) + ", expected " + expected,
                    expected, t.column);
    }

    NodePtr expr() {
        auto n = term();
        while (peek().kind == Token::Or) {
            ++pos_;
            n = std::make_shared<const Node>(Node{Node::Or, {}, n, term()});
        }
        return n;
    }

    NodePtr term() {
        auto n = factor();
        while (peek().kind == Token::And) {
            ++pos_;
            n = std::make_shared<const Node>(Node{Node::And, {}, n, factor()});
        }
        return n;
    }

    NodePtr factor() {
        const auto& t = peek();
        switch (t.kind) {
            case Token::Not:
                ++pos_;
                return std::make_shared<const Node>(Node{Node::Not, {}, factor(), nullptr});
            case Token::Open: {
                ++pos_;
                auto n = expr();
                if (peek().kind != Token::Close) fail("')', '&', '|'");
                ++pos_;
                return n;
            }
            case Token::Name:
                if (!is_property_name(t.text)) fail("property name");
                names_->insert(t.text);
                ++pos_;
                return std::make_shared<const Node>(Node{Node::Name, t.text, nullptr, nullptr});
            default:
                fail("property name, '(', '!'");
        }
    }
};

bool eval(const Node& n, const PropertyReport& r) {
    switch (n.kind) {
        case Node::Name: {
            const auto* p = r.find(n.name);
            if (!p) throw Error(ErrorKind::ParseError, "report lacks property " + n.name);
            return p->status == Status::True;
        }
        case Node::Not: return !eval(*n.left, r);
        case Node::And: return eval(*n.left, r) && eval(*n.right, r);
        case Node::Or: return eval(*n.left, r) || eval(*n.right, r);
    }
    return false;
}

std::string show(const Node& n) {
    switch (n.kind) {
        case Node::Name: return n.name;
        case Node::Not: return "!" + show(*n.left);
        case Node::And: return "(" + show(*n.left) + " & " + show(*n.right) + ")";
        case Node::Or: return "(" + show(*n.left) + " | " + show(*n.right) + ")";
    }
    return {};
}

}  // namespace

PropertyExpr PropertyExpr::parse(std::string_view text) {
    PropertyExpr e;
    e.root_ = Parser(tokenize(text)).parse(e.names_);
    return e;
}

bool PropertyExpr::evaluate(const PropertyReport& r) const { return eval(*root_, r); }

std::string PropertyExpr::to_string() const { return show(*root_); }

SearchResult search(const PropertyExpr& expr, const std::vector<PropertyReport>& reports) {
    SearchResult out;
    for (const auto& r : reports) {
        std::string skipped;
        for (const auto& name : expr.names()) {
            const auto* p = r.find(name);
            if (p && p->status == Status::Skipped) skipped += (skipped.empty() ? "" : ",") + name;
        }
        if (!skipped.empty()) {
            out.notes.push_back(r.instance + ": not matched, skipped " + skipped);
            continue;
        }
        if (expr.evaluate(r)) out.matches.push_back(r.instance);
    }
    return out;
}

SearchResult search(std::string_view expr, const std::vector<PropertyReport>& reports) {
    return search(PropertyExpr::parse(expr), reports);
}

}  // namespace pirick
