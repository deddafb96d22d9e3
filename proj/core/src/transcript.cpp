// Copyright 2026 The Paintlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include "json.hpp"
#include "paintlab/game.hpp"

namespace paintlab {

using ordered_json = nlohmann::ordered_json;

std::string to_jsonl(const Transcript& t) {
  std::ostringstream out;
  ordered_json header;
  header["type"] = "header";
  header["n"] = t.n;
  header["m"] = t.m;
  header["budget"] = t.budget;
  header["painter"] = t.painter;
  header["corrector"] = t.corrector;
  header["painter_seed"] = t.painter_seed;
  header["corrector_seed"] = t.corrector_seed;
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    ordered_json line;
    line["round"] = i + 1;
    line["presented"] = r.presented;
    if (r.kept) {
      line["kept"] = *r.kept;
    } else {
      line["kept"] = nullptr;
    }
    out << line.dump() << '\n';
  }
  ordered_json trailer;
  trailer["type"] = "result";
  trailer["outcome"] = to_string(t.outcome);
  trailer["rounds"] = t.rounds.size();
  trailer["note"] = t.note;
  out << trailer.dump() << '\n';
  return out.str();
}

Transcript transcript_from_jsonl(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_header = false;
  bool saw_result = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      if (j.contains("type") && j["type"] == "header") {
        t.n = j.at("n").get<std::size_t>();
        t.m = j.at("m").get<std::size_t>();
        t.budget = j.at("budget").get<int>();
        t.painter = j.at("painter").get<std::string>();
        t.corrector = j.at("corrector").get<std::string>();
        t.painter_seed = j.at("painter_seed").get<std::uint64_t>();
        t.corrector_seed = j.at("corrector_seed").get<std::uint64_t>();
        saw_header = true;
      } else if (j.contains("type") && j["type"] == "result") {
        const auto outcome = parse_outcome(j.at("outcome").get<std::string>());
        if (!outcome) throw ParameterError("transcript: unknown outcome");
        t.outcome = *outcome;
        t.note = j.value("note", "");
        saw_result = true;
      } else {
        Round r;
        r.presented = j.at("presented").get<std::vector<Vertex>>();
        if (!j.at("kept").is_null()) r.kept = j.at("kept").get<std::vector<Vertex>>();
        t.rounds.push_back(std::move(r));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("transcript: ") + e.what());
  }
  if (!saw_header || !saw_result) throw ParameterError("transcript: missing header or result line");
  return t;
}

}  // namespace paintlab
