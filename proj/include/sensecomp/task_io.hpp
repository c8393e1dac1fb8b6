#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sensecomp/task_builder.hpp"

namespace sensecomp {

// One JSON object per line:
// {"id", "lemma", "pos", "target_sense_id", "target": {"tokens", "target_index"},
//  "options": [{"tokens", "target_index", "sense_id"}], "gold_index"}
nlohmann::json instance_to_json(const WsdInstance& inst);
WsdInstance instance_from_json(const nlohmann::json& j);

void write_instances(std::ostream& out, const std::vector<WsdInstance>& instances);
std::vector<WsdInstance> read_instances(std::istream& in);
std::vector<WsdInstance> read_instances_file(const std::string& path);
void write_instances_file(const std::string& path, const std::vector<WsdInstance>& instances);

}  // namespace sensecomp
