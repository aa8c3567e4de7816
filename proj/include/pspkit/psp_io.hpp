#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pspkit/graph.hpp"

namespace pspkit {

// PSP text format, version 1:
//   psp 1
//   <n> <m> <p> <k>
//   m lines "<u> <v>"
//   p lines "<t> <v0> ... <vt>"   (t = edge count, t >= 1)
// Lines starting with '#' are comments; blank lines are ignored.
PspInstance parse_psp(std::istream& in);
PspInstance parse_psp_string(std::string_view text);
std::string serialize_psp(const PspInstance& instance);

struct Diagnostic {
    int path_index = -1;  // -1 for instance-level problems
    std::string reason;
};

// Empty iff every instance invariant holds.
std::vector<Diagnostic> validate_psp(const PspInstance& instance);

// Solution format: "solution <count>" then the indices on one line, ascending.
Solution parse_solution(std::istream& in);
Solution parse_solution_string(std::string_view text);
std::string serialize_solution(const Solution& solution);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string instance_digest(const PspInstance& instance);

PspInstance read_psp_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pspkit
