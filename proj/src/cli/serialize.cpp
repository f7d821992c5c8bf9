#include "unicell/cli/serialize.hpp"

#include <stdexcept>

namespace unicell::cli {

Json table_to_json(const CountTable& table, const std::vector<std::string>& key_names) {
  Json rows = Json::array();
  for (const auto& [key, value] : table.entries()) {
    if (key.size() != key_names.size()) throw std::invalid_argument("table key has the wrong arity");
    Json row = Json::object();
    for (std::size_t k = 0; k < key.size(); ++k) row[key_names[k]] = key[k];
    row["count"] = to_decimal(value);
    rows.push_back(std::move(row));
  }
  return rows;
}

CountTable table_from_json(const Json& rows, const std::vector<std::string>& key_names) {
  CountTable table;
  for (const Json& row : rows) {
    CountTable::Key key;
    for (const std::string& name : key_names) key.push_back(row.at(name).get<int>());
    ExactInteger value;
    if (value.set_str(row.at("count").get<std::string>(), 10) != 0) throw std::invalid_argument("bad decimal count");
    table.set(key, value);
  }
  return table;
}

std::string table_to_csv(const CountTable& table, const std::vector<std::string>& key_names) {
  std::string s;
  for (const std::string& name : key_names) s += name + ",";
  s += "count\n";
  for (const auto& [key, value] : table.entries()) {
    for (int k : key) s += std::to_string(k) + ",";
    s += to_decimal(value) + "\n";
  }
  return s;
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["check"] = v.check;
  j["range"] = v.range;
  j["verdict"] = v.pass ? "pass" : "fail";
  j["counterexample"] = v.counterexample ? Json(*v.counterexample) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace unicell::cli
