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

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace cmkt::data {

/// One student/question interaction. `concept_ids` is the question's labeled
/// concept set for this row; deduplicated, never empty.
struct PracticeRecord {
  std::string student_id;
  long long order_index = 0;
  std::string question_id;
  int answer = 0;  // 0 or 1
  std::vector<std::string> concept_ids;
};

/// Dense-index catalog; indices follow first-seen order.
class ConceptCatalog {
 public:
  int add(const std::string& name);
  std::optional<int> find(const std::string& name) const;
  int require(const std::string& name) const;  // DataError when missing
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }
  int size() const { return static_cast<int>(names_.size()); }

  nlohmann::ordered_json to_json() const;
  static ConceptCatalog from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Question catalog carrying the question-concept map. Concept sets are the
/// union over a question's rows (dense concept indices, first-seen order).
class QuestionCatalog {
 public:
  int add(const std::string& name, const std::vector<int>& concepts);
  std::optional<int> find(const std::string& name) const;
  int require(const std::string& name) const;
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& concepts_of(int index) const {
    return concepts_[static_cast<std::size_t>(index)];
  }
  int size() const { return static_cast<int>(names_.size()); }

  /// True when every question is labeled with exactly one concept (the
  /// applicability condition for the grouped mastery metric).
  bool single_concept_per_question() const;

  nlohmann::ordered_json to_json(const ConceptCatalog& concepts) const;
  static QuestionCatalog from_json(const nlohmann::json& j, const ConceptCatalog& concepts);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> concepts_;
  std::unordered_map<std::string, int> index_;
};

/// A windowed slice of one student's time-ordered history.
struct StudentSequence {
  std::string student_id;
  int window_index = 0;
  std::vector<PracticeRecord> records;
};

}  // namespace cmkt::data
