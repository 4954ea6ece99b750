#include "report.hpp"

namespace heckelab {

void RunReport::merge_check(bool ok) {
    if (!ok && status == Status::pass) status = Status::fail;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["command"] = command;
    switch (status) {
        case Status::pass: j["status"] = "pass"; break;
        case Status::fail: j["status"] = "fail"; break;
        case Status::error: j["status"] = "error"; break;
    }
    j["artifacts"] = artifacts;
    j["details"] = details;
    return j;
}

std::string RunReport::dump() const { return to_json().dump(2); }

}  // namespace heckelab
