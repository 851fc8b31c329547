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

#include "cmkt/difficulty.hpp"

#include <cmath>

#include "cmkt/errors.hpp"

namespace cmkt::data {

int difficulty_level(double theta, int c) {
  return static_cast<int>(std::floor(theta * static_cast<double>(c) + 0.5));
}

DifficultyTable compute_difficulty(std::span<const StudentSequence> train_sequences,
                                   const QuestionCatalog& questions,
                                   const ConceptCatalog& concepts,
                                   int c_q, int c_k) {
  if (c_q < 1 || c_k < 1) {
    throw DataError("difficulty level constants must be >= 1");
  }
  DifficultyTable t;
  t.c_q = c_q;
  t.c_k = c_k;
  const std::size_t nq = static_cast<std::size_t>(questions.size());
  const std::size_t nk = static_cast<std::size_t>(concepts.size());
  t.wrong.assign(nq, 0);
  t.total.assign(nq, 0);
  for (const StudentSequence& seq : train_sequences) {
    for (const PracticeRecord& r : seq.records) {
      const std::size_t q = static_cast<std::size_t>(questions.require(r.question_id));
      ++t.total[q];
      if (r.answer == 0) ++t.wrong[q];
    }
  }
  t.question_theta.resize(nq);
  t.question_level.resize(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    t.question_theta[q] = t.total[q] > 0
                              ? static_cast<double>(t.wrong[q]) / static_cast<double>(t.total[q])
                              : 0.5;
    t.question_level[q] = difficulty_level(t.question_theta[q], c_q);
  }

  std::vector<double> sum(nk, 0.0);
  std::vector<long long> members(nk, 0);
  for (int q = 0; q < questions.size(); ++q) {
    for (int k : questions.concepts_of(q)) {
      sum[static_cast<std::size_t>(k)] += t.question_theta[static_cast<std::size_t>(q)];
      ++members[static_cast<std::size_t>(k)];
    }
  }
  t.concept_theta.resize(nk);
  t.concept_level.resize(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    t.concept_theta[k] = members[k] > 0 ? sum[k] / static_cast<double>(members[k]) : 0.5;
    t.concept_level[k] = difficulty_level(t.concept_theta[k], c_k);
  }
  return t;
}

nlohmann::ordered_json DifficultyTable::to_json(const QuestionCatalog& questions,
                                                const ConceptCatalog& concepts) const {
  nlohmann::ordered_json j;
  j["c_q"] = c_q;
  j["c_k"] = c_k;
  nlohmann::ordered_json qs = nlohmann::ordered_json::array();
  for (int q = 0; q < questions.size(); ++q) {
    const std::size_t i = static_cast<std::size_t>(q);
    nlohmann::ordered_json e;
    e["id"] = questions.name(q);
    e["wrong"] = wrong[i];
    e["total"] = total[i];
    e["theta"] = question_theta[i];
    e["level"] = question_level[i];
    qs.push_back(std::move(e));
  }
  j["questions"] = std::move(qs);
  nlohmann::ordered_json ks = nlohmann::ordered_json::array();
  for (int k = 0; k < concepts.size(); ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    nlohmann::ordered_json e;
    e["id"] = concepts.name(k);
    e["theta"] = concept_theta[i];
    e["level"] = concept_level[i];
    ks.push_back(std::move(e));
  }
  j["concepts"] = std::move(ks);
  return j;
}

DifficultyTable DifficultyTable::from_json(const nlohmann::json& j,
                                           const QuestionCatalog& questions,
                                           const ConceptCatalog& concepts) {
  DifficultyTable t;
  t.c_q = j.at("c_q").get<int>();
  t.c_k = j.at("c_k").get<int>();
  const std::size_t nq = static_cast<std::size_t>(questions.size());
  const std::size_t nk = static_cast<std::size_t>(concepts.size());
  t.wrong.assign(nq, 0);
  t.total.assign(nq, 0);
  t.question_theta.assign(nq, 0.5);
  t.question_level.assign(nq, difficulty_level(0.5, t.c_q));
  for (const auto& e : j.at("questions")) {
    const std::size_t q = static_cast<std::size_t>(questions.require(e.at("id").get<std::string>()));
    t.wrong[q] = e.at("wrong").get<long long>();
    t.total[q] = e.at("total").get<long long>();
    t.question_theta[q] = e.at("theta").get<double>();
    t.question_level[q] = e.at("level").get<int>();
  }
  t.concept_theta.assign(nk, 0.5);
  t.concept_level.assign(nk, difficulty_level(0.5, t.c_k));
  for (const auto& e : j.at("concepts")) {
    const std::size_t k = static_cast<std::size_t>(concepts.require(e.at("id").get<std::string>()));
    t.concept_theta[k] = e.at("theta").get<double>();
    t.concept_level[k] = e.at("level").get<int>();
  }
  return t;
}

}  // namespace cmkt::data
