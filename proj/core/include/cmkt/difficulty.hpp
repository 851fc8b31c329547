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

#include <span>
#include <vector>

#include <json.hpp>

#include "cmkt/records.hpp"

namespace cmkt::data {

/// Wrong-answer-ratio difficulty statistics with discretized levels.
/// theta values live in [0,1]; levels in [0, C] via round-half-up, so there
/// are C+1 level buckets and theta = 1 lands on level C.
struct DifficultyTable {
  int c_q = 100;
  int c_k = 100;
  std::vector<long long> wrong;   // per question
  std::vector<long long> total;   // per question
  std::vector<double> question_theta;
  std::vector<int> question_level;
  std::vector<double> concept_theta;
  std::vector<int> concept_level;

  nlohmann::ordered_json to_json(const QuestionCatalog& questions,
                                 const ConceptCatalog& concepts) const;
  static DifficultyTable from_json(const nlohmann::json& j,
                                   const QuestionCatalog& questions,
                                   const ConceptCatalog& concepts);
};

int difficulty_level(double theta, int c);

/// Computes the table from training-split sequences only. Questions without
/// training attempts default to theta 0.5. Concept theta is the unweighted
/// mean of theta over all catalog questions tagged with the concept.
DifficultyTable compute_difficulty(std::span<const StudentSequence> train_sequences,
                                   const QuestionCatalog& questions,
                                   const ConceptCatalog& concepts,
                                   int c_q = 100, int c_k = 100);

}  // namespace cmkt::data
