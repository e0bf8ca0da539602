#include "quiverh1/input.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace qh1 {

namespace {

struct Token {
    std::string text;
    int col; // 1-based
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw Error(ErrorKind::InputSyntax,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (is_name_start(c)) {
            size_t j = i;
            while (j < line.size() && is_name_char(line[j])) ++j;
            out.push_back(Token{line.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back(Token{line.substr(i, j - i), col});
            i = j;
        } else if (c == ':') {
            out.push_back(Token{":", col});
            ++i;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back(Token{"->", col});
            i += 2;
        } else {
            fail(lineno, col, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

} // namespace

InputDocument parse_input(const std::string& text) {
    InputDocument doc;
    bool have_field = false;
    struct PendingRelation {
        std::vector<Token> arrows;
        int line;
    };
    std::vector<PendingRelation> pending;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line, lineno);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (kw == "field") {
            if (have_field) fail(lineno, toks[0].col, "duplicate field declaration");
            if (toks.size() < 2) fail(lineno, toks[0].col, "expected 'rational' or 'prime <p>'");
            if (toks[1].text == "rational") {
                if (toks.size() != 2) fail(lineno, toks[2].col, "trailing tokens after 'field rational'");
                doc.field = FieldSpec::rationals();
            } else if (toks[1].text == "prime") {
                if (toks.size() != 3) fail(lineno, toks[1].col, "expected 'field prime <p>'");
                long long p = 0;
                for (char c : toks[2].text) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        fail(lineno, toks[2].col, "expected a prime number");
                    p = p * 10 + (c - '0');
                    if (p > 2000000000LL) fail(lineno, toks[2].col, "prime too large");
                }
                doc.field = FieldSpec::prime(static_cast<uint32_t>(p)); // throws NotPrime
            } else {
                fail(lineno, toks[1].col, "expected 'rational' or 'prime'");
            }
            have_field = true;
        } else if (kw == "vertex") {
            if (toks.size() < 2) fail(lineno, toks[0].col, "expected at least one vertex name");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!is_name_start(toks[i].text[0]))
                    fail(lineno, toks[i].col, "invalid vertex name '" + toks[i].text + "'");
                doc.quiver.add_vertex(toks[i].text);
            }
        } else if (kw == "arrow") {
            if (toks.size() != 6 || toks[2].text != ":" || toks[4].text != "->")
                fail(lineno, toks[0].col, "expected 'arrow <name> : <src> -> <dst>'");
            if (!is_name_start(toks[1].text[0]))
                fail(lineno, toks[1].col, "invalid arrow name '" + toks[1].text + "'");
            if (!doc.quiver.vertex_index(toks[3].text))
                fail(lineno, toks[3].col, "unknown vertex '" + toks[3].text + "'");
            if (!doc.quiver.vertex_index(toks[5].text))
                fail(lineno, toks[5].col, "unknown vertex '" + toks[5].text + "'");
            doc.quiver.add_arrow(toks[1].text, toks[3].text, toks[5].text);
        } else if (kw == "relation") {
            if (toks.size() < 2) fail(lineno, toks[0].col, "expected at least one arrow name");
            pending.push_back(PendingRelation{{toks.begin() + 1, toks.end()}, lineno});
        } else {
            fail(lineno, toks[0].col, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_field) throw Error(ErrorKind::InputSyntax, "missing 'field' declaration");

    std::vector<Path> rels;
    for (const auto& pr : pending) {
        std::vector<int> word;
        for (const auto& t : pr.arrows) {
            auto a = doc.quiver.arrow_index(t.text);
            if (!a) fail(pr.line, t.col, "unknown arrow '" + t.text + "'");
            word.push_back(*a);
        }
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (doc.quiver.arrow(word[i]).dst != doc.quiver.arrow(word[i + 1]).src)
                fail(pr.line, pr.arrows[i + 1].col,
                     "non-composable: target of '" + pr.arrows[i].text + "' is not the source of '" +
                         pr.arrows[i + 1].text + "'");
        rels.push_back(Path{-1, std::move(word)});
    }
    doc.relations = RelationSet(std::move(rels));
    validate_relations(doc.quiver, doc.relations);
    return doc;
}

} // namespace qh1
