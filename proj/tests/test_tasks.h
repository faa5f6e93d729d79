#ifndef OSP_TESTS_TEST_TASKS_H
#define OSP_TESTS_TEST_TASKS_H

#include "osp/io.h"
#include "osp/task.h"

#include <string>

namespace osp::tests {

/*
  The truck task: locations A..E with E worth 2, fuel levels 0..3 worth their
  level, three drive actions that reach E while burning one fuel level each,
  and the mutex pair (t=D, f=3).
*/
inline std::string truck_text(const std::string &budget_line = "budget 1") {
    return "osp-sas 1\n"
           "vars 2\n"
           "var t 5\n"
           "val A 0\n"
           "val B 0\n"
           "val C 0\n"
           "val D 0\n"
           "val E 2\n"
           "var f 4\n"
           "val 0 0\n"
           "val 1 1\n"
           "val 2 2\n"
           "val 3 3\n"
           "mutex 2 t=D f=3\n"
           "init t=A f=3\n" +
           budget_line + "\n"
           "actions 3\n"
           "action drive_E2 cost 1\n"
           "pre 1 f=3\n"
           "eff 2 t=E f=2\n"
           "action drive_E1 cost 1\n"
           "pre 1 f=2\n"
           "eff 2 t=E f=1\n"
           "action drive_E0 cost 1\n"
           "pre 1 f=1\n"
           "eff 2 t=E f=0\n";
}

inline OspTask truck_task(int budget = 1) {
    return parse_task(truck_text("budget " + std::to_string(budget)));
}

// One binary variable worth 0/2 and a single action moving it up for cost 1.
inline OspTask t1_task(int budget = 1) {
    return parse_task(
        "osp-sas 1\n"
        "vars 1\n"
        "var v 2\n"
        "val a 0\n"
        "val b 2\n"
        "init v=a\n"
        "budget " + std::to_string(budget) + "\n"
        "actions 1\n"
        "action o cost 1\n"
        "pre 1 v=a\n"
        "eff 1 v=b\n");
}

inline State truck_state(const OspTask &truck, const std::string &t,
                         const std::string &f) {
    State state(2);
    state[0] = truck.find_value(0, t);
    state[1] = truck.find_value(1, f);
    return state;
}

} // namespace osp::tests

#endif
