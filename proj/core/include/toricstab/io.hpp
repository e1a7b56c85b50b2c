#pragma once

#include <string>

#include "toricstab/rational.hpp"

namespace toric {

// One CLI invocation: a command plus one JSON input document.
struct JobResult {
    int exit_code = 0; // 0 ok, 2 validation failure, 3 mathematical precondition
    std::string output; // JSON report (or error object), LF-terminated
};

// Commands: okounkov-body, s-invariant, flag-s, log-discrepancy, delta,
// alpha, az-bound, zariski-surface, product-check, hirzebruch, bary-bounds,
// curve-delta.
JobResult run_job(const std::string& command, const std::string& input_json,
                  unsigned precision_bits = 128);

// The bundled example suite; prints one PASS/FAIL line per check.
JobResult run_corpus();

// Parses an input document of the given kind ("fan", "divisor", "flag" or
// "problem"; divisor and flag ride along with their fan) and re-serializes it
// in canonical field order.  Idempotent on valid inputs.
std::string canonicalize_input(const std::string& kind, const std::string& input_json);

} // namespace toric
