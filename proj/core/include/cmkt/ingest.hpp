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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cmkt/records.hpp"

namespace cmkt::data {

/// Column-name mapping for the practice-log CSV.
struct CsvSchema {
  std::string student = "student_id";
  std::string order = "order_index";
  std::string question = "question_id";
  std::string answer = "answer";
  std::string concepts = "concept_ids";  // semicolon-separated
};

struct IngestOptions {
  CsvSchema schema;
  int min_len = 10;   // windows shorter than this are dropped
  int max_len = 200;  // longer histories are split into consecutive windows
};

struct IngestResult {
  std::vector<StudentSequence> sequences;  // student first-seen order, windows in order
  QuestionCatalog questions;
  ConceptCatalog concepts;
  std::vector<std::string> student_ids;  // surviving students, first-seen order
  long long total_rows = 0;
  long long dropped_windows = 0;
  long long dropped_students = 0;  // students left with no surviving window
};

/// Parses the practice-log CSV (UTF-8, header row). Malformed rows raise
/// DataError with the 1-based line number.
IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& opts = {});

/// Same pipeline over in-memory records (row order = file order).
IngestResult ingest_records(std::span<const PracticeRecord> rows, const IngestOptions& opts = {});

}  // namespace cmkt::data
