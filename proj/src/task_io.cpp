#include "sensecomp/task_io.hpp"

#include <fstream>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

using nlohmann::json;

json instance_to_json(const WsdInstance& inst) {
  json options = json::array();
  for (const auto& opt : inst.options) {
    json o = sentence_to_json(opt.sentence);
    o["sense_id"] = opt.sense_id;
    options.push_back(std::move(o));
  }
  return json{{"id", inst.id},
              {"lemma", inst.lemma},
              {"pos", to_string(inst.pos)},
              {"target_sense_id", inst.target_sense_id},
              {"target", sentence_to_json(inst.target)},
              {"options", std::move(options)},
              {"gold_index", inst.gold_index}};
}

WsdInstance instance_from_json(const json& j) {
  try {
    WsdInstance inst;
    inst.lemma = j.at("lemma").get<std::string>();
    inst.id = j.contains("id") ? j.at("id").get<std::string>() : inst.lemma;
    auto pos = parse_pos(j.at("pos").get<std::string>());
    if (!pos) throw DataError("unknown part of speech in instance " + inst.id);
    inst.pos = *pos;
    inst.target_sense_id = j.at("target_sense_id").get<std::string>();
    inst.target = sentence_from_json(j.at("target"));
    for (const auto& o : j.at("options"))
      inst.options.push_back({sentence_from_json(o), o.at("sense_id").get<std::string>()});
    inst.gold_index = j.at("gold_index").get<std::size_t>();
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed task record: ") + e.what());
  }
}

void write_instances(std::ostream& out, const std::vector<WsdInstance>& instances) {
  for (const auto& inst : instances) out << instance_to_json(inst).dump() << '\n';
}

std::vector<WsdInstance> read_instances(std::istream& in) {
  std::vector<WsdInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::trim(line);
    if (text.empty()) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DataError("task line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      out.push_back(instance_from_json(j));
    } catch (const DataError& e) {
      throw DataError("task line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<WsdInstance> read_instances_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open task file '" + path + "'");
  return read_instances(in);
}

void write_instances_file(const std::string& path, const std::vector<WsdInstance>& instances) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_instances(out, instances);
}

}  // namespace sensecomp
