// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#include "cmkt/records.hpp"

#include <algorithm>

#include "cmkt/errors.hpp"

namespace cmkt::data {

int ConceptCatalog::add(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const int idx = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, idx);
  return idx;
}

std::optional<int> ConceptCatalog::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ConceptCatalog::require(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DataError("unknown concept id '" + name + "'");
  return it->second;
}

nlohmann::ordered_json ConceptCatalog::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const std::string& n : names_) j.push_back(n);
  return j;
}

ConceptCatalog ConceptCatalog::from_json(const nlohmann::json& j) {
  ConceptCatalog c;
  for (const auto& n : j) c.add(n.get<std::string>());
  return c;
}

int QuestionCatalog::add(const std::string& name, const std::vector<int>& concepts) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    std::vector<int>& existing = concepts_[static_cast<std::size_t>(it->second)];
    for (int k : concepts) {
      if (std::find(existing.begin(), existing.end(), k) == existing.end()) {
        existing.push_back(k);
      }
    }
    return it->second;
  }
  const int idx = static_cast<int>(names_.size());
  names_.push_back(name);
  concepts_.push_back(concepts);
  index_.emplace(name, idx);
  return idx;
}

std::optional<int> QuestionCatalog::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int QuestionCatalog::require(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DataError("unknown question id '" + name + "'");
  return it->second;
}

bool QuestionCatalog::single_concept_per_question() const {
  for (const auto& ks : concepts_) {
    if (ks.size() != 1) return false;
  }
  return !concepts_.empty();
}

nlohmann::ordered_json QuestionCatalog::to_json(const ConceptCatalog& concepts) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    nlohmann::ordered_json q;
    q["id"] = names_[i];
    nlohmann::ordered_json ks = nlohmann::ordered_json::array();
    for (int k : concepts_[i]) ks.push_back(concepts.name(k));
    q["concepts"] = std::move(ks);
    j.push_back(std::move(q));
  }
  return j;
}

QuestionCatalog QuestionCatalog::from_json(const nlohmann::json& j,
                                           const ConceptCatalog& concepts) {
  QuestionCatalog q;
  for (const auto& entry : j) {
    std::vector<int> ks;
    for (const auto& k : entry.at("concepts")) {
      ks.push_back(concepts.require(k.get<std::string>()));
    }
    q.add(entry.at("id").get<std::string>(), ks);
  }
  return q;
}

}  // namespace cmkt::data
