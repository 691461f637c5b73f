#pragma once

#include "tmkit/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmkit {

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
    int line = 0;   // 1-based
    int column = 0; // 1-based
};

std::string diagnostic_text(const Diagnostic& d);

/// A parsed machine together with its source and per-rule source lines.
struct MachineDoc {
    Machine machine;
    std::string source;
    std::vector<int> rule_lines; // rule_lines[i] = source line of machine.rules[i]
};

struct ParseResult {
    std::optional<MachineDoc> doc;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return doc.has_value(); }
};

/**
 * Parses the line-oriented machine description language:
 *
 *   machine <ident>
 *   kind deterministic|reversible|probabilistic|quantum
 *   states <ident>+          (classical kinds)
 *   qubits <int>             (quantum kind; states written as bit patterns)
 *   start <ident|bits>       (optional; defaults to first state / all zeros)
 *   halt <ident>+            (optional; classical kinds only)
 *   rule <state> <bit> -> <bit> <L|N|R> <state> [: <scalar>]
 *
 * `#` starts a comment; LF and CRLF both accepted. Weight domains are
 * validated against the declared kind (deterministic/reversible rules must
 * be weightless or weight 1; probabilistic weights real and nonnegative).
 * Every diagnostic carries a source position.
 */
ParseResult parse_machine(std::string_view text);

/// Canonical form: states as declared, rules sorted by
/// (from, read, write, move, to), canonical scalar text, LF line ends.
/// parse(serialize(m)) reproduces m for machines with sorted rules.
std::string serialize_machine(const Machine& m);

} // namespace tmkit
