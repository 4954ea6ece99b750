#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heckelab {

// Machine-readable outcome of one verification run. The status drives the
// process exit code: pass -> 0, fail -> 1, error -> 2.
struct RunReport {
    enum class Status { pass, fail, error };

    std::string command;
    Status status = Status::pass;
    std::vector<std::string> artifacts;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    void merge_check(bool ok);  // pass&&ok stays pass, anything false -> fail
    nlohmann::ordered_json to_json() const;
    std::string dump() const;
};

}  // namespace heckelab
