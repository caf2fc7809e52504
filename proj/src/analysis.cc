// Copyright 2026 The summgauge Authors.
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

#include "summgauge/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "summgauge/error.h"

namespace summgauge {
namespace {

using nlohmann::json;

int RankOf(const CorpusRanking& ranking, const std::string& system) {
  for (const RankEntry& e : ranking.entries) {
    if (e.system_name == system) return e.rank;
  }
  return 0;
}

std::vector<std::string> SplitDots(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    parts.emplace_back(path.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

std::optional<double> Lookup(const json& row, const std::vector<std::string>& keys,
                             std::size_t first, std::string_view path) {
  const json* node = &row;
  for (std::size_t i = first; i < keys.size(); ++i) {
    const std::string& key = keys[i];
    if (node->is_object()) {
      auto it = node->find(key);
      if (it == node->end()) {
        throw Error(ErrorKind::kMissingField, std::string(path));
      }
      node = &*it;
    } else if (node->is_array()) {
      char* end = nullptr;
      const unsigned long index = std::strtoul(key.c_str(), &end, 10);
      if (key.empty() || *end != '\0' || index >= node->size()) {
        throw Error(ErrorKind::kMissingField, std::string(path));
      }
      node = &(*node)[index];
    } else {
      throw Error(ErrorKind::kMissingField, std::string(path));
    }
  }
  if (node->is_null()) return std::nullopt;
  if (!node->is_number()) {
    throw Error(ErrorKind::kMissingField,
                std::string(path) + " is not numeric");
  }
  return node->get<double>();
}

std::vector<std::string> ParseCsvLine(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  for (std::string& cell : cells) {
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) {
      cell.pop_back();
    }
    cell.erase(0, cell.find_first_not_of(' '));
  }
  return cells;
}

}  // namespace

CorrelationResult Pearson(const std::vector<double>& x,
                          const std::vector<double>& y, std::string series_a,
                          std::string series_b) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "series have " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " samples");
  }
  if (x.size() < 3) {
    throw Error(ErrorKind::kLengthMismatch,
                "need at least 3 paired samples, got " +
                    std::to_string(x.size()));
  }
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; });
  };
  if (constant(x) || constant(y)) {
    throw Error(ErrorKind::kZeroVariance,
                (constant(x) ? series_a : series_b) + " is constant");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    throw Error(ErrorKind::kZeroVariance, "series has zero variance");
  }
  CorrelationResult result;
  result.series_a = std::move(series_a);
  result.series_b = std::move(series_b);
  result.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  result.n = x.size();
  return result;
}

std::optional<double> SystemMetricValue(const SystemAggregate& a,
                                        std::string_view metric) {
  if (metric == "rouge1_recall") return a.rouge1.recall;
  if (metric == "rouge1_precision") return a.rouge1.precision;
  if (metric == "rouge1_f1") return a.rouge1.f1;
  if (metric == "rouge2_recall") return a.rouge2.recall;
  if (metric == "rouge2_precision") return a.rouge2.precision;
  if (metric == "rouge2_f1") return a.rouge2.f1;
  if (metric == "f1_vs_oracle") return a.f1_vs_oracle;
  if (metric == "sys_redundancy") return a.sys_redundancy;
  if (metric == "idd") return a.idd;
  if (metric == "iddv") return a.iddv;
  constexpr std::string_view kAbs = "sys_abstractness_";
  if (metric.substr(0, kAbs.size()) == kAbs) {
    const std::string order(metric.substr(kAbs.size()));
    char* end = nullptr;
    const long n = std::strtol(order.c_str(), &end, 10);
    if (!order.empty() && *end == '\0') {
      auto it = a.sys_abstractness.find(static_cast<int>(n));
      if (it != a.sys_abstractness.end()) return it->second;
    }
  }
  throw Error(ErrorKind::kMissingField,
              "unknown system metric '" + std::string(metric) + "'");
}

RankTable BuildRankTable(const std::vector<MetricReport>& reports,
                         std::string_view metric) {
  RankTable table;
  table.metric = std::string(metric);
  std::map<std::string, int> appearances;
  for (const MetricReport& report : reports) {
    CorpusRanking ranking;
    ranking.corpus_name = report.corpus_name;
    for (const SystemSection& s : report.systems) {
      if (s.is_oracle) continue;
      const auto value = SystemMetricValue(s.aggregate, metric);
      if (!value.has_value() || !std::isfinite(*value)) continue;
      ranking.entries.push_back({s.system_name, *value, 0});
    }
    std::sort(ranking.entries.begin(), ranking.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                if (a.value != b.value) return a.value > b.value;
                return a.system_name < b.system_name;
              });
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
      RankEntry& e = ranking.entries[i];
      e.rank = (i > 0 && e.value == ranking.entries[i - 1].value)
                   ? ranking.entries[i - 1].rank
                   : static_cast<int>(i) + 1;
      if (e.rank == 1) ranking.top_systems.push_back(e.system_name);
      ++appearances[e.system_name];
    }
    if (!ranking.entries.empty()) table.corpora.push_back(std::move(ranking));
  }
  if (table.corpora.empty()) {
    throw Error(ErrorKind::kNoOverlap,
                "no corpus has a system with metric '" + table.metric + "'");
  }
  const bool shared = std::any_of(appearances.begin(), appearances.end(),
                                  [](const auto& kv) { return kv.second > 1; });
  if (table.corpora.size() > 1 && !shared) {
    throw Error(ErrorKind::kNoOverlap,
                "no system is ranked on more than one corpus");
  }
  const auto& first_top = table.corpora.front().top_systems;
  for (std::size_t c = 1; c < table.corpora.size(); ++c) {
    if (table.corpora[c].top_systems != first_top) ++table.top_changes;
  }
  // A pair is discordant when two corpora order it strictly oppositely.
  for (std::size_t c1 = 0; c1 < table.corpora.size() && !table.unstable; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < table.corpora.size(); ++c2) {
      const CorpusRanking& a = table.corpora[c1];
      const CorpusRanking& b = table.corpora[c2];
      for (const RankEntry& e1 : a.entries) {
        for (const RankEntry& e2 : a.entries) {
          const int b1 = RankOf(b, e1.system_name);
          const int b2 = RankOf(b, e2.system_name);
          if (b1 == 0 || b2 == 0) continue;
          if (e1.rank < e2.rank && b1 > b2) table.unstable = true;
        }
      }
    }
  }
  if (table.top_changes > 0) table.unstable = true;
  return table;
}

double OracleGap(const MetricReport& report) {
  const SystemSection* oracle = nullptr;
  std::optional<double> best;
  for (const SystemSection& s : report.systems) {
    if (s.is_oracle) {
      if (oracle == nullptr) oracle = &s;
      continue;
    }
    const auto r1 = s.aggregate.rouge1.recall;
    if (r1.has_value() && (!best.has_value() || *r1 > *best)) best = r1;
  }
  if (oracle == nullptr || !oracle->aggregate.rouge1.recall.has_value()) {
    throw Error(ErrorKind::kMissingOracle,
                "report for '" + report.corpus_name + "' has no oracle section");
  }
  const double oracle_r1 = *oracle->aggregate.rouge1.recall;
  if (!best.has_value()) best = oracle_r1;
  if (oracle_r1 <= 0.0) {
    throw Error(ErrorKind::kMissingOracle,
                "oracle ROUGE-1 recall is zero for '" + report.corpus_name + "'");
  }
  return 100.0 * *best / oracle_r1;
}

std::map<std::string, std::optional<double>> TopicSeries(
    const json& report, std::string_view path) {
  const std::vector<std::string> keys = SplitDots(path);
  if (keys.size() < 2) {
    throw Error(ErrorKind::kMissingField,
                "expected corpus.<field> or system:<name>.<field>, got '" +
                    std::string(path) + "'");
  }
  const json* topics = nullptr;
  std::size_t first = 1;
  if (keys[0] == "corpus") {
    auto corpus = report.find("corpus");
    if (corpus == report.end() || !corpus->is_object()) {
      throw Error(ErrorKind::kMissingField, "report has no corpus section");
    }
    topics = &corpus->at("topics");
  } else if (keys[0].rfind("system:", 0) == 0) {
    // System names may contain dots; match the longest known name.
    const std::string rest(path.substr(7));
    const json* best = nullptr;
    std::size_t best_len = 0;
    auto systems = report.find("systems");
    if (systems == report.end() || !systems->is_array()) {
      throw Error(ErrorKind::kMissingField, "report has no systems array");
    }
    for (const json& s : *systems) {
      const std::string name = s.value("system_name", "");
      if (rest.size() > name.size() && rest.compare(0, name.size(), name) == 0 &&
          rest[name.size()] == '.' && name.size() >= best_len) {
        best = &s;
        best_len = name.size();
      }
    }
    if (best == nullptr) {
      throw Error(ErrorKind::kMissingField,
                  "no system section matches '" + std::string(path) + "'");
    }
    topics = &best->at("topics");
    first = SplitDots(std::string_view(path).substr(0, 7 + best_len)).size();
  } else {
    throw Error(ErrorKind::kMissingField,
                "series path must start with corpus. or system:<name>.");
  }
  std::map<std::string, std::optional<double>> out;
  for (const json& row : *topics) {
    out[row.at("topic_id").get<std::string>()] = Lookup(row, keys, first, path);
  }
  return out;
}

CorrelationResult CorrelateSeries(
    const std::map<std::string, std::optional<double>>& a,
    const std::map<std::string, std::optional<double>>& b, std::string name_a,
    std::string name_b) {
  std::vector<double> x, y;
  for (const auto& [topic, va] : a) {
    auto it = b.find(topic);
    if (it == b.end() || !va.has_value() || !it->second.has_value()) continue;
    if (!std::isfinite(*va) || !std::isfinite(*it->second)) continue;
    x.push_back(*va);
    y.push_back(*it->second);
  }
  return Pearson(x, y, std::move(name_a), std::move(name_b));
}

CorrelationResult CorrelateTable(const std::string& csv_text,
                                 const std::string& x, const std::string& y) {
  std::istringstream in(csv_text);
  std::string line;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = ParseCsvLine(line);
  }
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorKind::kMissingField, "no column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t cx = column(x), cy = column(y);
  std::vector<double> xs, ys;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = ParseCsvLine(line);
    if (cx >= cells.size() || cy >= cells.size()) continue;
    if (cells[cx].empty() || cells[cy].empty()) continue;
    auto parse = [&](const std::string& cell, const std::string& name) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (*end != '\0') {
        throw Error(ErrorKind::kMissingField,
                    "line " + std::to_string(line_no) + " column '" + name +
                        "' is not numeric: " + cell);
      }
      return v;
    };
    xs.push_back(parse(cells[cx], x));
    ys.push_back(parse(cells[cy], y));
  }
  return Pearson(xs, ys, x, y);
}

}  // namespace summgauge
