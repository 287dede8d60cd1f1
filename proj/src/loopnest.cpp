#include "termirial/loopnest.hpp"

#include "termirial/core.hpp"

#include <algorithm>
#include <cctype>

namespace termirial::loopnest {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::syntax: return "SyntaxError";
        case ErrorKind::unknown_identifier: return "UnknownIdentifier";
        case ErrorKind::non_chain_bound: return "NonChainBound";
        case ErrorKind::duplicate_index: return "DuplicateIndex";
    }
    return "Unknown";
}

ParseError::ParseError(ErrorKind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + " at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + message),
      kind_(kind),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok { ident, integer, equals, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

bool is_keyword(std::string_view word, std::string_view keyword) {
    return word.size() == keyword.size() &&
           std::equal(word.begin(), word.end(), keyword.begin(), [](char a, char b) {
               return std::tolower(static_cast<unsigned char>(a)) == b;
           });
}

bool is_reserved(std::string_view word) { return is_keyword(word, "for") || is_keyword(word, "to"); }

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::ident:
        case Tok::integer: return "'" + t.text + "'";
        case Tok::equals: return "'='";
        case Tok::end: return "end of line";
    }
    return "token";
}

// Tokens of one physical line, comment stripped, terminated by Tok::end.
std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        const auto uc = static_cast<unsigned char>(c);
        const SourcePos pos{line_no, i + 1};
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '=') {
            tokens.push_back({Tok::equals, "=", pos});
            ++i;
        } else if (std::isalpha(uc)) {
            std::size_t j = i + 1;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
                ++j;
            }
            tokens.push_back({Tok::ident, std::string(line.substr(i, j - i)), pos});
            i = j;
        } else if (std::isdigit(uc)) {
            std::size_t j = i + 1;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            if (j < line.size() && (std::isalpha(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
                throw ParseError(ErrorKind::syntax, pos, "malformed number");
            }
            tokens.push_back({Tok::integer, std::string(line.substr(i, j - i)), pos});
            i = j;
        } else {
            throw ParseError(ErrorKind::syntax, pos, std::string("unexpected character '") + c + "'");
        }
    }
    // Position just past the last non-blank character.
    std::size_t end_col = line.size();
    if (auto hash = line.find('#'); hash != std::string_view::npos) end_col = hash;
    while (end_col > 0 && (line[end_col - 1] == ' ' || line[end_col - 1] == '\t' || line[end_col - 1] == '\r')) {
        --end_col;
    }
    tokens.push_back({Tok::end, "", SourcePos{line_no, end_col + 1}});
    return tokens;
}

class LineParser {
public:
    explicit LineParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }

    Token expect_ident(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::ident || is_reserved(t.text)) {
            throw ParseError(ErrorKind::syntax, t.pos, std::string("expected ") + what + ", found " + describe(t));
        }
        return tokens_[pos_++];
    }

    void expect_keyword(std::string_view keyword) {
        const Token& t = peek();
        if (t.kind != Tok::ident || !is_keyword(t.text, keyword)) {
            throw ParseError(ErrorKind::syntax, t.pos,
                             "expected '" + std::string(keyword) + "', found " + describe(t));
        }
        ++pos_;
    }

    void expect_equals() {
        const Token& t = peek();
        if (t.kind != Tok::equals) throw ParseError(ErrorKind::syntax, t.pos, "expected '=', found " + describe(t));
        ++pos_;
    }

    Token expect_integer() {
        const Token& t = peek();
        if (t.kind != Tok::integer) {
            throw ParseError(ErrorKind::syntax, t.pos, "expected an integer, found " + describe(t));
        }
        return tokens_[pos_++];
    }

    void expect_end() {
        const Token& t = peek();
        if (t.kind != Tok::end) throw ParseError(ErrorKind::syntax, t.pos, "expected end of line, found " + describe(t));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

struct DeclaredIndex {
    std::string name;
    SourcePos pos;
};

}  // namespace

LoopNestProgram parse(std::string_view source) {
    LoopNestProgram program;
    bool has_assignment = false;
    std::vector<DeclaredIndex> declared;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        const std::size_t nl = source.find('\n', start);
        const std::string_view line =
            source.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        start = (nl == std::string_view::npos) ? source.size() + 1 : nl + 1;

        LineParser lp(lex_line(line, line_no));
        const Token first = lp.peek();
        if (first.kind == Tok::end) continue;

        if (first.kind == Tok::ident && is_keyword(first.text, "for")) {
            lp.expect_keyword("for");
            const Token index = lp.expect_ident("a loop index");
            lp.expect_equals();
            const Token lower = lp.expect_integer();
            if (lower.text != "1") {
                throw ParseError(ErrorKind::syntax, lower.pos, "lower bound must be 1, found '" + lower.text + "'");
            }
            lp.expect_keyword("to");
            const Token bound = lp.expect_ident("a loop bound identifier");
            lp.expect_end();

            const bool first_loop = program.loops.empty();
            if (first_loop && !has_assignment) program.param_name = bound.text;
            if (index.text == program.param_name) {
                throw ParseError(ErrorKind::duplicate_index, index.pos,
                                 "index '" + index.text + "' shadows the parameter");
            }
            for (const auto& d : declared) {
                if (d.name == index.text) {
                    throw ParseError(ErrorKind::duplicate_index, index.pos,
                                     "index '" + index.text + "' already declared at line " +
                                         std::to_string(d.pos.line));
                }
            }

            Loop loop{index.text, {}};
            if (first_loop) {
                if (bound.text != program.param_name) {
                    if (bound.text == index.text) {
                        throw ParseError(ErrorKind::non_chain_bound, bound.pos,
                                         "loop '" + index.text + "' cannot be bounded by itself");
                    }
                    throw ParseError(ErrorKind::unknown_identifier, bound.pos,
                                     "unknown identifier '" + bound.text + "'");
                }
                loop.bound = {BoundRef::Kind::param, bound.text};
            } else if (bound.text == declared.back().name) {
                loop.bound = {BoundRef::Kind::index, bound.text};
            } else {
                const bool known = bound.text == program.param_name || bound.text == index.text ||
                                   std::any_of(declared.begin(), declared.end(),
                                               [&](const DeclaredIndex& d) { return d.name == bound.text; });
                if (!known) {
                    throw ParseError(ErrorKind::unknown_identifier, bound.pos,
                                     "unknown identifier '" + bound.text + "'");
                }
                throw ParseError(ErrorKind::non_chain_bound, bound.pos,
                                 "bound '" + bound.text + "' is not the enclosing index '" + declared.back().name +
                                     "'");
            }
            declared.push_back({index.text, index.pos});
            program.loops.push_back(std::move(loop));
            continue;
        }

        if (first.kind == Tok::ident && !is_reserved(first.text)) {
            if (!program.loops.empty()) {
                throw ParseError(ErrorKind::syntax, first.pos, "parameter binding must precede the loops");
            }
            if (has_assignment) throw ParseError(ErrorKind::syntax, first.pos, "parameter bound twice");
            const Token name = lp.expect_ident("a parameter name");
            lp.expect_equals();
            const Token value = lp.expect_integer();
            lp.expect_end();
            program.param_name = name.text;
            program.param_value = parse_natural(value.text);
            has_assignment = true;
            continue;
        }

        throw ParseError(ErrorKind::syntax, first.pos, "expected 'for' or a parameter binding, found " + describe(first));
    }

    if (program.loops.empty()) {
        throw ParseError(ErrorKind::syntax, SourcePos{line_no, 1}, "expected at least one 'for' loop");
    }
    return program;
}

std::string render(const LoopNestProgram& program) {
    std::string out;
    if (program.param_value) out += program.param_name + " = " + to_decimal(*program.param_value) + "\n";
    for (const auto& loop : program.loops) {
        out += "for " + loop.index + " = 1 to " + loop.bound.name + "\n";
    }
    return out;
}

AnalysisResult analyze(const LoopNestProgram& program, std::optional<Natural> n_override) {
    AnalysisResult result;
    result.depth = program.depth();
    result.theta_exponent = result.depth;

    const int order = static_cast<int>(result.depth) - 1;
    const std::string& sym = program.param_name;
    result.closed_form.n_symbol = sym;
    result.closed_form.order = order;
    result.closed_form.termirial = sym + "^(" + std::to_string(order) + ")";
    result.closed_form.binomial = "C(" + (order == 0 ? sym : sym + "+" + std::to_string(order)) + ", " +
                                  std::to_string(result.depth) + ")";

    result.param_value = n_override ? n_override : program.param_value;
    if (result.param_value) {
        result.exact_count = termirial_p(*result.param_value, Order(order));
        result.binomial_top = *result.param_value + order;
    }
    return result;
}

namespace {

struct Frame {
    const LoopNestProgram& program;
    std::vector<std::uint64_t> values;  // current value of each enclosing index
    std::uint64_t n;
    std::uint64_t count = 0;

    std::uint64_t bound_of(std::size_t level) const {
        const BoundRef& b = program.loops[level].bound;
        if (b.kind == BoundRef::Kind::param) return n;
        for (std::size_t k = 0; k < level; ++k) {
            if (program.loops[k].index == b.name) return values[k];
        }
        throw std::logic_error("unresolved loop bound '" + b.name + "'");
    }

    void run(std::size_t level) {
        if (level == program.loops.size()) {
            ++count;
            return;
        }
        const std::uint64_t upper = bound_of(level);
        for (std::uint64_t i = 1; i <= upper; ++i) {
            values[level] = i;
            run(level + 1);
        }
    }
};

}  // namespace

std::uint64_t simulate(const LoopNestProgram& program, std::uint64_t n, std::uint64_t budget) {
    if (program.loops.empty()) throw std::invalid_argument("program has no loops");
    const Natural projected = termirial_p(n, Order(static_cast<int>(program.depth()) - 1));
    if (projected > budget) {
        throw GuardExceeded("simulation would take " + to_decimal(projected) + " iterations, budget is " +
                            std::to_string(budget));
    }
    Frame frame{program, std::vector<std::uint64_t>(program.loops.size(), 0), n};
    frame.run(0);
    return frame.count;
}

}  // namespace termirial::loopnest
