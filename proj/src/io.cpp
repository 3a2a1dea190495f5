#include "kdcc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace kdcc {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_count(const std::string& token, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         token + "'");
    return value;
}

VertexId parse_vertex(const std::string& token, std::size_t line_no) {
    const std::uint64_t value = parse_count(token, line_no);
    if (value >= std::numeric_limits<VertexId>::max())
        throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
    return static_cast<VertexId>(value);
}

// DOT lexer -----------------------------------------------------------------

struct Token {
    enum Kind { id, lbrace, rbrace, semicolon, undirected, other, end } kind = end;
    std::string text;
    std::size_t line = 0;
};

class DotLexer {
  public:
    explicit DotLexer(std::string text) : text_(std::move(text)) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size())
            return tok;
        const char c = text_[pos_];
        if (c == '{' || c == '}' || c == ';') {
            ++pos_;
            tok.kind = c == '{' ? Token::lbrace : c == '}' ? Token::rbrace : Token::semicolon;
            tok.text = std::string(1, c);
            return tok;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            pos_ += 2;
            tok.kind = Token::undirected;
            tok.text = "--";
            return tok;
        }
        if (c == '"') {
            std::string value;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
                    ++pos_;
                if (text_[pos_] == '\n')
                    ++line_;
                value += text_[pos_++];
            }
            if (pos_ >= text_.size())
                throw ParseError("line " + std::to_string(tok.line) + ": unterminated string");
            ++pos_;
            tok.kind = Token::id;
            tok.text = value;
            return tok;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '.'))
                ++pos_;
            tok.kind = Token::id;
            tok.text = text_.substr(start, pos_ - start);
            return tok;
        }
        tok.kind = Token::other;
        tok.text = std::string(1, c);
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')
            tok.text = "->";
        pos_ += tok.text.size();
        return tok;
    }

  private:
    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                const auto close = text_.find("*/", pos_ + 2);
                if (close == std::string::npos)
                    throw ParseError("line " + std::to_string(line_) + ": unterminated comment");
                line_ += static_cast<std::size_t>(
                    std::count(text_.begin() + static_cast<std::ptrdiff_t>(pos_),
                               text_.begin() + static_cast<std::ptrdiff_t>(close), '\n'));
                pos_ = close + 2;
            } else {
                return;
            }
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

[[noreturn]] void reject(const Token& tok, const std::string& what) {
    throw ParseError("line " + std::to_string(tok.line) + ": " + what + " (found '" + tok.text +
                     "'); only undirected node and edge statements are supported");
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::optional<std::uint64_t> declared;
    std::uint64_t needed = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
            if (declared)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate n= header");
            declared = parse_count(trim(line.substr(line.find('=') + 1)), line_no);
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids, got '" + line + "'");
        const VertexId u = parse_vertex(a, line_no);
        const VertexId v = parse_vertex(b, line_no);
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        edges.push_back(Edge::make(u, v));
        needed = std::max<std::uint64_t>(needed, std::max(u, v) + 1ULL);
    }
    if (declared && *declared < needed)
        throw ParseError("n=" + std::to_string(*declared) + " is smaller than the largest vertex id + 1 (" +
                         std::to_string(needed) + ")");
    return Graph::from_edges(declared.value_or(needed), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    std::size_t implied = 0;
    for (const Edge& e : edges)
        implied = std::max<std::size_t>(implied, e.v + 1ULL);
    if (implied != g.order())
        out << "n=" << g.order() << '\n';
    for (const Edge& e : edges)
        out << e.u << ' ' << e.v << '\n';
}

Graph read_dot(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    DotLexer lex(buffer.str());

    Token tok = lex.next();
    if (tok.kind == Token::id && lower(tok.text) == "strict")
        reject(tok, "strict graphs are not supported");
    if (tok.kind == Token::id && lower(tok.text) == "digraph")
        reject(tok, "directed graphs are not supported");
    if (tok.kind != Token::id || lower(tok.text) != "graph")
        reject(tok, "expected 'graph'");
    tok = lex.next();
    if (tok.kind == Token::id)
        tok = lex.next();
    if (tok.kind != Token::lbrace)
        reject(tok, "expected '{'");

    std::map<std::string, VertexId> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto intern = [&](const Token& t) {
        const std::string key = lower(t.text);
        if (key == "node" || key == "edge" || key == "subgraph" || key == "graph")
            reject(t, "'" + t.text + "' statements are not supported");
        const auto [it, inserted] = ids.try_emplace(t.text, static_cast<VertexId>(names.size()));
        if (inserted)
            names.push_back(t.text);
        return it->second;
    };

    tok = lex.next();
    while (tok.kind != Token::rbrace) {
        if (tok.kind == Token::end)
            reject(tok, "missing closing '}'");
        if (tok.kind == Token::semicolon) {
            tok = lex.next();
            continue;
        }
        if (tok.kind != Token::id)
            reject(tok, "expected a node name");
        VertexId prev = intern(tok);
        tok = lex.next();
        while (tok.kind == Token::undirected) {
            const Token target = lex.next();
            if (target.kind != Token::id)
                reject(target, "expected a node name after '--'");
            const VertexId cur = intern(target);
            if (cur == prev)
                throw ParseError("line " + std::to_string(target.line) + ": self-loop at '" + target.text + "'");
            edges.push_back(Edge::make(prev, cur));
            prev = cur;
            tok = lex.next();
        }
        if (tok.kind == Token::other)
            reject(tok, "unsupported syntax");
    }
    tok = lex.next();
    if (tok.kind != Token::end)
        reject(tok, "trailing content after the graph body");
    return Graph::from_edges(names.size(), edges).with_labels(std::move(names));
}

Graph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    const std::string ext = lower(path.extension().string());
    bool dot = ext == ".dot" || ext == ".gv";
    if (!dot) {
        std::string first;
        while (in >> first) {
            if (first.rfind("#", 0) == 0 || first.rfind("//", 0) == 0) {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            break;
        }
        const std::string head = lower(first);
        dot = head == "graph" || head == "strict" || head == "digraph" || head.rfind("graph{", 0) == 0;
        in.clear();
        in.seekg(0);
    }
    return dot ? read_dot(in) : read_edge_list(in);
}

}  // namespace kdcc
