#ifndef OSP_IO_H
#define OSP_IO_H

#include "osp/task.h"

#include <cstdint>
#include <string>

namespace osp {

struct SyntaxError : TaskError {
    int line;
    SyntaxError(int line, const std::string &reason)
        : TaskError("line " + std::to_string(line) + ": " + reason), line(line) {
    }
};

struct SemanticError : TaskError {
    int line;
    SemanticError(int line, const std::string &reason)
        : TaskError("line " + std::to_string(line) + ": " + reason), line(line) {
    }
};

// Parses the OSP-SAS v1 text format (UTF-8, LF, '#' comments,
// whitespace-separated tokens).
OspTask parse_task(const std::string &text);
OspTask parse_task_file(const std::string &path);

// Canonical text form; parse_task(serialize_task(t)) is structurally equal
// to t, including the budget spec.
std::string serialize_task(const OspTask &task);
void write_task_file(const OspTask &task, const std::string &path);

/*
  Casts a classical task (all utilities zero) as an OSP task by assigning
  each fact a utility in {0,1,2}: fact j in declaration order gets
  (j + seed) mod 3. Throws NotClassicalError if any utility is nonzero.
*/
OspTask assign_ipc_values(const OspTask &task, uint64_t seed);

struct GenParams {
    uint64_t seed = 0;
    int num_vars = 3;
    int max_domain = 3;
    int num_actions = 5;
    int max_cost = 2;
    int max_utility = 2;
    double incomplete_pre_probability = 0.5;
    int max_budget = 8;           // budget drawn uniformly from 0..max_budget
    int prevail_percent = 30;     // chance of one extra non-effect precondition
};

// Deterministic in the seed; emits no mutex groups.
OspTask generate_task(const GenParams &params);

} // namespace osp

#endif
