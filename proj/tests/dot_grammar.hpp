#pragma once

// Recursive-descent recognizer for the Graphviz DOT language (graph, digraph,
// subgraphs, attribute lists, ports, quoted and HTML ids, comments).

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dot {

struct Token {
    enum Kind { id, punct, edge_op, end } kind;
    std::string text;
    std::size_t offset;
};

class Checker {
public:
    explicit Checker(const std::string& src) : src_(src) {}

    // Empty on success, otherwise a message with the byte offset.
    std::optional<std::string> check() {
        if (!lex()) return error_;
        if (!graph()) return error_.empty() ? std::optional<std::string>("syntax error") : error_;
        if (peek().kind != Token::end) return fail("trailing input");
        return std::nullopt;
    }

    std::size_t statements() const { return statements_; }

private:
    bool lex() {
        std::size_t i = 0;
        const std::size_t n = src_.size();
        while (i < n) {
            const char c = src_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '/' && i + 1 < n && src_[i + 1] == '/') {
                while (i < n && src_[i] != '\n') ++i;
            } else if (c == '/' && i + 1 < n && src_[i + 1] == '*') {
                const std::size_t close = src_.find("*/", i + 2);
                if (close == std::string::npos) return lex_fail("unterminated comment", i);
                i = close + 2;
            } else if (c == '#' && (i == 0 || src_[i - 1] == '\n')) {
                while (i < n && src_[i] != '\n') ++i;
            } else if (c == '-' && i + 1 < n && (src_[i + 1] == '>' || src_[i + 1] == '-')) {
                tokens_.push_back({Token::edge_op, src_.substr(i, 2), i});
                i += 2;
            } else if (std::string("{}[];,=:").find(c) != std::string::npos) {
                tokens_.push_back({Token::punct, std::string(1, c), i});
                ++i;
            } else if (c == '"') {
                std::size_t j = i + 1;
                while (j < n && src_[j] != '"') j += src_[j] == '\\' ? 2 : 1;
                if (j >= n) return lex_fail("unterminated string", i);
                tokens_.push_back({Token::id, src_.substr(i, j + 1 - i), i});
                i = j + 1;
            } else if (c == '<') {
                int depth = 0;
                std::size_t j = i;
                for (; j < n; ++j) {
                    if (src_[j] == '<') ++depth;
                    if (src_[j] == '>' && --depth == 0) break;
                }
                if (j >= n) return lex_fail("unterminated HTML id", i);
                tokens_.push_back({Token::id, src_.substr(i, j + 1 - i), i});
                i = j + 1;
            } else if (is_id_start(c)) {
                std::size_t j = i;
                while (j < n && (is_id_start(src_[j]) || std::isdigit(static_cast<unsigned char>(src_[j])))) ++j;
                tokens_.push_back({Token::id, src_.substr(i, j - i), i});
                i = j;
            } else if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i + (c == '-' ? 1 : 0);
                bool digits = false, dot = false;
                while (j < n && (std::isdigit(static_cast<unsigned char>(src_[j])) || (src_[j] == '.' && !dot))) {
                    if (src_[j] == '.') dot = true;
                    else digits = true;
                    ++j;
                }
                if (!digits) return lex_fail("malformed numeral", i);
                tokens_.push_back({Token::id, src_.substr(i, j - i), i});
                i = j;
            } else {
                return lex_fail(std::string("unexpected character '") + c + "'", i);
            }
        }
        tokens_.push_back({Token::end, "", n});
        return true;
    }

    static bool is_id_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
    }

    static bool keyword(const Token& t, const char* word) {
        if (t.kind != Token::id || t.text.size() != std::char_traits<char>::length(word)) return false;
        for (std::size_t i = 0; i < t.text.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(t.text[i])) != word[i]) return false;
        return true;
    }

    bool lex_fail(const std::string& what, std::size_t at) {
        error_ = what + " at byte " + std::to_string(at);
        return false;
    }

    std::optional<std::string> fail(const std::string& what) {
        error_ = what + " at byte " + std::to_string(peek().offset);
        return error_;
    }

    bool expect_fail(const std::string& what) {
        if (error_.empty()) error_ = "expected " + what + " at byte " + std::to_string(peek().offset);
        return false;
    }

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }

    bool accept(const char* punct) {
        if (peek().kind == Token::punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool graph() {
        if (keyword(peek(), "strict")) ++pos_;
        if (keyword(peek(), "digraph"))
            directed_ = true;
        else if (!keyword(peek(), "graph"))
            return expect_fail("graph or digraph");
        ++pos_;
        if (peek().kind == Token::id) ++pos_;
        if (!accept("{")) return expect_fail("'{'");
        if (!stmt_list()) return false;
        if (!accept("}")) return expect_fail("'}'");
        return true;
    }

    bool stmt_list() {
        while (!(peek().kind == Token::punct && peek().text == "}") && peek().kind != Token::end) {
            if (!stmt()) return false;
            ++statements_;
            accept(";");
        }
        return true;
    }

    bool stmt() {
        const Token& t = peek();
        if (keyword(t, "graph") || keyword(t, "node") || keyword(t, "edge")) {
            ++pos_;
            if (!(peek().kind == Token::punct && peek().text == "[")) return expect_fail("attribute list");
            return attr_list();
        }
        if (t.kind == Token::id && peek(1).kind == Token::punct && peek(1).text == "=") {
            pos_ += 2;
            if (peek().kind != Token::id) return expect_fail("id after '='");
            ++pos_;
            return true;
        }
        if (!node_or_subgraph()) return false;
        if (peek().kind == Token::edge_op) {
            while (peek().kind == Token::edge_op) {
                if ((peek().text == "->") != directed_) return expect_fail(directed_ ? "'->'" : "'--'");
                ++pos_;
                if (!node_or_subgraph()) return false;
            }
        }
        if (peek().kind == Token::punct && peek().text == "[") return attr_list();
        return true;
    }

    bool node_or_subgraph() {
        const Token& t = peek();
        if (keyword(t, "subgraph") || (t.kind == Token::punct && t.text == "{")) return subgraph();
        if (t.kind != Token::id || keyword(t, "node") || keyword(t, "edge") || keyword(t, "graph") ||
            keyword(t, "digraph") || keyword(t, "strict"))
            return expect_fail("node id");
        ++pos_;
        if (accept(":")) {
            if (peek().kind != Token::id) return expect_fail("port");
            ++pos_;
            if (accept(":")) {
                if (peek().kind != Token::id) return expect_fail("compass point");
                ++pos_;
            }
        }
        return true;
    }

    bool subgraph() {
        if (keyword(peek(), "subgraph")) {
            ++pos_;
            if (peek().kind == Token::id) ++pos_;
        }
        if (!accept("{")) return expect_fail("'{'");
        if (!stmt_list()) return false;
        if (!accept("}")) return expect_fail("'}'");
        return true;
    }

    bool attr_list() {
        while (accept("[")) {
            while (!accept("]")) {
                if (peek().kind != Token::id) return expect_fail("attribute name");
                ++pos_;
                if (!accept("=")) return expect_fail("'='");
                if (peek().kind != Token::id) return expect_fail("attribute value");
                ++pos_;
                if (!accept(",")) accept(";");
            }
        }
        return true;
    }

    const std::string& src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool directed_ = false;
    std::size_t statements_ = 0;
    std::string error_;
};

inline std::optional<std::string> check(const std::string& src) {
    return Checker(src).check();
}

}  // namespace dot
