#pragma once

// A line-oriented DSL for triangular ("chain") loop nests:
//
//   n = 100            # optional parameter binding
//   for i = 1 to n
//   for j = 1 to i
//   for k = 1 to j
//
// Each inner bound must be the index of the loop immediately enclosing it,
// so the innermost body runs termirial_p(n, depth - 1) times.

#include "termirial/numbers.hpp"
#include "termirial/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace termirial::loopnest {

struct SourcePos {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind { syntax, unknown_identifier, non_chain_bound, duplicate_index };

std::string_view error_kind_name(ErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ErrorKind kind, SourcePos pos, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    SourcePos pos() const noexcept { return pos_; }
    /// The message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    SourcePos pos_;
    std::string detail_;
};

struct BoundRef {
    enum class Kind { param, index };
    Kind kind = Kind::param;
    std::string name;

    friend bool operator==(const BoundRef&, const BoundRef&) = default;
};

struct Loop {
    std::string index;
    BoundRef bound;

    friend bool operator==(const Loop&, const Loop&) = default;
};

struct LoopNestProgram {
    std::string param_name = "n";
    std::optional<Natural> param_value;
    std::vector<Loop> loops;

    std::size_t depth() const noexcept { return loops.size(); }

    friend bool operator==(const LoopNestProgram&, const LoopNestProgram&) = default;
};

/// Throws ParseError on any malformed input.
LoopNestProgram parse(std::string_view source);

/// Canonical DSL text; parse(render(p)) == p.
std::string render(const LoopNestProgram& program);

struct ClosedForm {
    std::string n_symbol;
    int order = 0;             // depth - 1
    std::string termirial;     // e.g. "n^(3)"
    std::string binomial;      // e.g. "C(n+3, 4)"
};

struct AnalysisResult {
    std::size_t depth = 0;
    std::optional<Natural> param_value;
    std::optional<Natural> exact_count;
    ClosedForm closed_form;
    std::optional<Natural> binomial_top;  // n + depth - 1, when n is known
    std::size_t theta_exponent = 0;
};

/// `n_override`, when set, replaces the program's own parameter binding.
AnalysisResult analyze(const LoopNestProgram& program, std::optional<Natural> n_override = std::nullopt);

/// Runs the nest literally and counts entries into the innermost body.
/// Throws GuardExceeded when the projected count exceeds `budget`.
std::uint64_t simulate(const LoopNestProgram& program, std::uint64_t n,
                       std::uint64_t budget = oracle::kDefaultBudget);

}  // namespace termirial::loopnest
