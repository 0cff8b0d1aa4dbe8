#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fphom {

enum class OutputFormat { table, json, csv };

OutputFormat output_format_from_string(const std::string& s);

struct RunConfig {
    int p = 2;
    bool p_given = true;  // false: a top-level "p" in the input file takes precedence
    int cap = 12;
    int s_max = 4;
    int q_max = 3;
    unsigned seed = 1;
    OutputFormat format = OutputFormat::table;
    std::string input;   // JSON file; some commands run without one
    std::string output;  // empty: caller prints
    bool abelian = false;
    int trials = 200;
    int vertex_degree = 2;
    std::optional<int> projective_unitary;  // emss: generate the PU(n) input instead of reading a file

    /// Throws ValidationError: p prime, 0 <= cap <= 64, s_max and q_max in range.
    void validate() const;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 negative verdict, 2 validation, 3 cross-check mismatch
    std::string output;
    std::string error;
};

const std::vector<std::string>& cli_commands();

/// Runs one pipeline; never throws. Writes the report to config.output when set.
RunResult run(const std::string& command, const RunConfig& config);

}  // namespace fphom
