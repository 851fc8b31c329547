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

#include "cmkt/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "cmkt/errors.hpp"

namespace cmkt::data {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

int column_of(const std::vector<std::string>& header, const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw DataError("missing required column '" + name + "' in CSV header");
  }
  return static_cast<int>(it - header.begin());
}

long long parse_order(const std::string& s, long long line_no) {
  if (s.empty()) throw DataError("line " + std::to_string(line_no) + ": empty order_index");
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw DataError("line " + std::to_string(line_no) +
                      ": order_index '" + s + "' is not a non-negative integer");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

IngestResult ingest_records(std::span<const PracticeRecord> rows, const IngestOptions& opts) {
  IngestResult result;
  // Catalogs follow row order so indices are reproducible.
  std::vector<std::string> student_order;
  std::unordered_map<std::string, std::vector<PracticeRecord>> by_student;
  for (const PracticeRecord& r : rows) {
    std::vector<int> ks;
    ks.reserve(r.concept_ids.size());
    for (const std::string& k : r.concept_ids) ks.push_back(result.concepts.add(k));
    result.questions.add(r.question_id, ks);
    auto [it, inserted] = by_student.try_emplace(r.student_id);
    if (inserted) student_order.push_back(r.student_id);
    it->second.push_back(r);
  }
  result.total_rows = static_cast<long long>(rows.size());

  for (const std::string& sid : student_order) {
    std::vector<PracticeRecord>& recs = by_student[sid];
    std::stable_sort(recs.begin(), recs.end(),
                     [](const PracticeRecord& a, const PracticeRecord& b) {
                       return a.order_index < b.order_index;
                     });
    for (std::size_t i = 1; i < recs.size(); ++i) {
      if (recs[i].order_index == recs[i - 1].order_index) {
        throw DataError("student '" + sid + "': duplicate order_index " +
                        std::to_string(recs[i].order_index));
      }
    }
    int window = 0;
    bool kept_any = false;
    for (std::size_t start = 0; start < recs.size(); start += static_cast<std::size_t>(opts.max_len)) {
      const std::size_t len = std::min(recs.size() - start, static_cast<std::size_t>(opts.max_len));
      if (len < static_cast<std::size_t>(opts.min_len)) {
        ++result.dropped_windows;
        continue;
      }
      StudentSequence seq;
      seq.student_id = sid;
      seq.window_index = window++;
      seq.records.assign(recs.begin() + static_cast<std::ptrdiff_t>(start),
                         recs.begin() + static_cast<std::ptrdiff_t>(start + len));
      result.sequences.push_back(std::move(seq));
      kept_any = true;
    }
    if (kept_any) {
      result.student_ids.push_back(sid);
    } else {
      ++result.dropped_students;
    }
  }
  return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& opts) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open CSV file '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty CSV file '" + path.string() + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split(line, ',');
  const int c_student = column_of(header, opts.schema.student);
  const int c_order = column_of(header, opts.schema.order);
  const int c_question = column_of(header, opts.schema.question);
  const int c_answer = column_of(header, opts.schema.answer);
  const int c_concepts = column_of(header, opts.schema.concepts);
  const std::size_t min_fields = static_cast<std::size_t>(
      std::max({c_student, c_order, c_question, c_answer, c_concepts}) + 1);

  std::vector<PracticeRecord> rows;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() < min_fields) {
      throw DataError("line " + std::to_string(line_no) + ": expected at least " +
                      std::to_string(min_fields) + " fields, got " +
                      std::to_string(fields.size()));
    }
    PracticeRecord r;
    r.student_id = fields[static_cast<std::size_t>(c_student)];
    if (r.student_id.empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty student_id");
    }
    r.order_index = parse_order(fields[static_cast<std::size_t>(c_order)], line_no);
    r.question_id = fields[static_cast<std::size_t>(c_question)];
    if (r.question_id.empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty question_id");
    }
    const std::string& ans = fields[static_cast<std::size_t>(c_answer)];
    if (ans == "0") {
      r.answer = 0;
    } else if (ans == "1") {
      r.answer = 1;
    } else {
      throw DataError("line " + std::to_string(line_no) + ": answer '" + ans +
                      "' must be 0 or 1");
    }
    for (const std::string& k : split(fields[static_cast<std::size_t>(c_concepts)], ';')) {
      if (k.empty()) continue;
      if (std::find(r.concept_ids.begin(), r.concept_ids.end(), k) == r.concept_ids.end()) {
        r.concept_ids.push_back(k);
      }
    }
    if (r.concept_ids.empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty concept_ids");
    }
    rows.push_back(std::move(r));
  }
  return ingest_records(rows, opts);
}

}  // namespace cmkt::data
