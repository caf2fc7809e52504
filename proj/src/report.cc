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

#include "summgauge/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "summgauge/error.h"

namespace summgauge {
namespace {

using nlohmann::json;

json Opt(const std::optional<double>& value) {
  if (!value.has_value() || !std::isfinite(*value)) return nullptr;
  return *value;
}

json LayoutJson(const LayoutVector& layout) {
  json out = json::array();
  for (const auto& v : layout) out.push_back(Opt(v));
  return out;
}

json OrderMapJson(const std::map<int, std::optional<double>>& values) {
  json out = json::object();
  for (const auto& [n, v] : values) out[std::to_string(n)] = Opt(v);
  return out;
}

json MatrixJson(const std::vector<std::vector<std::optional<double>>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(LayoutJson(row));
  return out;
}

json RougeJson(const RougeScore& s) {
  return {{"recall", Opt(s.recall)},
          {"precision", Opt(s.precision)},
          {"f1", Opt(s.f1)}};
}

json RougeAggJson(const RougeAggregate& s) {
  return {{"recall", Opt(s.recall)},
          {"precision", Opt(s.precision)},
          {"f1", Opt(s.f1)}};
}

[[noreturn]] void Missing(const std::string& path) {
  throw Error(ErrorKind::kMissingField, path);
}

const json& Field(const json& j, const std::string& key,
                  const std::string& path) {
  if (!j.is_object()) Missing(path);
  auto it = j.find(key);
  if (it == j.end()) Missing(path + "." + key);
  return *it;
}

std::optional<double> GetOpt(const json& j, const std::string& key,
                             const std::string& path) {
  const json& v = Field(j, key, path);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) Missing(path + "." + key);
  return v.get<double>();
}

double GetDouble(const json& j, const std::string& key,
                 const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_number()) Missing(path + "." + key);
  return v.get<double>();
}

template <typename T>
T GetInt(const json& j, const std::string& key, const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_number_integer()) Missing(path + "." + key);
  return v.get<T>();
}

bool GetBool(const json& j, const std::string& key, const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_boolean()) Missing(path + "." + key);
  return v.get<bool>();
}

std::string GetString(const json& j, const std::string& key,
                      const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_string()) Missing(path + "." + key);
  return v.get<std::string>();
}

LayoutVector GetLayout(const json& j, const std::string& key,
                       const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_array()) Missing(path + "." + key);
  LayoutVector out;
  for (const json& item : v) {
    if (item.is_null()) {
      out.push_back(std::nullopt);
    } else if (item.is_number()) {
      out.push_back(item.get<double>());
    } else {
      Missing(path + "." + key);
    }
  }
  return out;
}

std::map<int, std::optional<double>> GetOrderMap(const json& j,
                                                 const std::string& key,
                                                 const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_object()) Missing(path + "." + key);
  std::map<int, std::optional<double>> out;
  for (const auto& [name, item] : v.items()) {
    out[std::stoi(name)] = GetOpt(v, name, path + "." + key);
  }
  return out;
}

std::vector<std::string> GetStrings(const json& j, const std::string& key,
                                    const std::string& path) {
  const json& v = Field(j, key, path);
  if (!v.is_array()) Missing(path + "." + key);
  std::vector<std::string> out;
  for (const json& item : v) {
    if (!item.is_string()) Missing(path + "." + key);
    out.push_back(item.get<std::string>());
  }
  return out;
}

RougeScore GetRouge(const json& j, const std::string& key, int n,
                    const std::string& path) {
  const json& v = Field(j, key, path);
  const std::string p = path + "." + key;
  RougeScore s;
  s.n = n;
  s.recall = GetOpt(v, "recall", p).value_or(0.0);
  s.precision = GetOpt(v, "precision", p).value_or(0.0);
  s.f1 = GetOpt(v, "f1", p).value_or(0.0);
  return s;
}

RougeAggregate GetRougeAgg(const json& j, const std::string& key,
                           const std::string& path) {
  const json& v = Field(j, key, path);
  const std::string p = path + "." + key;
  return {GetOpt(v, "recall", p), GetOpt(v, "precision", p),
          GetOpt(v, "f1", p)};
}

std::string FormatFloat(double v) {
  std::string s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void WriteEscaped(const std::string& s, std::string& out) {
  // nlohmann's dump of a string yields standard JSON escaping.
  out += json(s).dump();
}

void WriteCanonical(const json& j, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      std::vector<std::string> keys;
      for (const auto& [k, v] : j.items()) keys.push_back(k);
      std::sort(keys.begin(), keys.end());
      out += "{\n";
      for (std::size_t i = 0; i < keys.size(); ++i) {
        out += indent;
        WriteEscaped(keys[i], out);
        out += ": ";
        WriteCanonical(j.at(keys[i]), depth + 1, out);
        out += i + 1 < keys.size() ? ",\n" : "\n";
      }
      out += close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += indent;
        WriteCanonical(j[i], depth + 1, out);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? FormatFloat(v) : "null";
      return;
    }
    case json::value_t::string:
      WriteEscaped(j.get<std::string>(), out);
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string_view StopwordPolicyName(StopwordPolicy p) {
  return p == StopwordPolicy::kKeep ? "keep" : "drop";
}

StopwordPolicy ParseStopwordPolicy(const std::string& s,
                                   const std::string& path) {
  if (s == "keep") return StopwordPolicy::kKeep;
  if (s == "drop") return StopwordPolicy::kDrop;
  Missing(path);
}

LayoutVector AggregateLayout(const std::vector<const LayoutVector*>& layouts,
                             int segments) {
  LayoutVector out;
  for (int s = 0; s < segments; ++s) {
    std::vector<std::optional<double>> column;
    for (const LayoutVector* layout : layouts) {
      if (static_cast<std::size_t>(s) < layout->size()) {
        column.push_back((*layout)[s]);
      }
    }
    out.push_back(MeanOfPresent(column));
  }
  return out;
}

template <typename Row, typename Get>
std::optional<double> MeanOver(const std::vector<Row>& rows, Get get) {
  std::vector<std::optional<double>> values;
  values.reserve(rows.size());
  for (const Row& row : rows) values.push_back(get(row));
  return MeanOfPresent(values);
}

template <typename Row, typename Get>
std::map<int, std::optional<double>> MeanByOrder(const std::vector<Row>& rows,
                                                 const std::vector<int>& orders,
                                                 Get get) {
  std::map<int, std::optional<double>> out;
  for (int n : orders) {
    out[n] = MeanOver(rows, [&](const Row& row) -> std::optional<double> {
      const auto& m = get(row);
      auto it = m.find(n);
      return it == m.end() ? std::nullopt : it->second;
    });
  }
  return out;
}

json CorpusTopicJson(const TopicCorpusMetrics& t) {
  return {{"topic_id", t.topic_id},
          {"abstractness", OrderMapJson(t.abstractness)},
          {"ids", Opt(t.ids)},
          {"redundancy", Opt(t.redundancy)},
          {"pyramid", Opt(t.pyramid)},
          {"inv_pyramid", Opt(t.inv_pyramid)},
          {"layout", LayoutJson(t.layout)},
          {"compression", Opt(t.compression)},
          {"pairwise_relevance", MatrixJson(t.pairwise_relevance)},
          {"notes", t.notes}};
}

TopicCorpusMetrics CorpusTopicFromJson(const json& j, const std::string& p) {
  TopicCorpusMetrics t;
  t.topic_id = GetString(j, "topic_id", p);
  t.abstractness = GetOrderMap(j, "abstractness", p);
  t.ids = GetOpt(j, "ids", p);
  t.redundancy = GetOpt(j, "redundancy", p);
  t.pyramid = GetOpt(j, "pyramid", p);
  t.inv_pyramid = GetOpt(j, "inv_pyramid", p);
  t.layout = GetLayout(j, "layout", p);
  t.compression = GetOpt(j, "compression", p);
  const json& pr = Field(j, "pairwise_relevance", p);
  if (!pr.is_array()) Missing(p + ".pairwise_relevance");
  for (std::size_t i = 0; i < pr.size(); ++i) {
    json wrapper = {{"row", pr[i]}};
    t.pairwise_relevance.push_back(
        GetLayout(wrapper, "row", p + ".pairwise_relevance"));
  }
  t.notes = GetStrings(j, "notes", p);
  return t;
}

json CorpusAggregateJson(const CorpusAggregate& a) {
  return {{"abstractness", OrderMapJson(a.abstractness)},
          {"ids", Opt(a.ids)},
          {"redundancy", Opt(a.redundancy)},
          {"pyramid", Opt(a.pyramid)},
          {"inv_pyramid", Opt(a.inv_pyramid)},
          {"compression", Opt(a.compression)},
          {"layout", LayoutJson(a.layout)}};
}

CorpusAggregate CorpusAggregateFromJson(const json& j, const std::string& p) {
  CorpusAggregate a;
  a.abstractness = GetOrderMap(j, "abstractness", p);
  a.ids = GetOpt(j, "ids", p);
  a.redundancy = GetOpt(j, "redundancy", p);
  a.pyramid = GetOpt(j, "pyramid", p);
  a.inv_pyramid = GetOpt(j, "inv_pyramid", p);
  a.compression = GetOpt(j, "compression", p);
  a.layout = GetLayout(j, "layout", p);
  return a;
}

json SystemTopicJson(const TopicSystemMetrics& t) {
  return {{"topic_id", t.topic_id},
          {"rouge1", RougeJson(t.rouge1)},
          {"rouge2", RougeJson(t.rouge2)},
          {"f1_vs_oracle", Opt(t.f1_vs_oracle)},
          {"sys_abstractness", OrderMapJson(t.sys_abstractness)},
          {"sys_redundancy", Opt(t.sys_redundancy)},
          {"idd", Opt(t.idd)},
          {"iddv", Opt(t.iddv)},
          {"layout", LayoutJson(t.layout)},
          {"layout_shuffled", LayoutJson(t.layout_shuffled)},
          {"notes", t.notes}};
}

TopicSystemMetrics SystemTopicFromJson(const json& j, const std::string& p) {
  TopicSystemMetrics t;
  t.topic_id = GetString(j, "topic_id", p);
  t.rouge1 = GetRouge(j, "rouge1", 1, p);
  t.rouge2 = GetRouge(j, "rouge2", 2, p);
  t.f1_vs_oracle = GetOpt(j, "f1_vs_oracle", p);
  t.sys_abstractness = GetOrderMap(j, "sys_abstractness", p);
  t.sys_redundancy = GetOpt(j, "sys_redundancy", p);
  t.idd = GetOpt(j, "idd", p);
  t.iddv = GetOpt(j, "iddv", p);
  t.layout = GetLayout(j, "layout", p);
  t.layout_shuffled = GetLayout(j, "layout_shuffled", p);
  t.notes = GetStrings(j, "notes", p);
  return t;
}

json SystemAggregateJson(const SystemAggregate& a) {
  return {{"rouge1", RougeAggJson(a.rouge1)},
          {"rouge2", RougeAggJson(a.rouge2)},
          {"f1_vs_oracle", Opt(a.f1_vs_oracle)},
          {"sys_abstractness", OrderMapJson(a.sys_abstractness)},
          {"sys_redundancy", Opt(a.sys_redundancy)},
          {"idd", Opt(a.idd)},
          {"iddv", Opt(a.iddv)},
          {"layout", LayoutJson(a.layout)},
          {"layout_shuffled", LayoutJson(a.layout_shuffled)}};
}

SystemAggregate SystemAggregateFromJson(const json& j, const std::string& p) {
  SystemAggregate a;
  a.rouge1 = GetRougeAgg(j, "rouge1", p);
  a.rouge2 = GetRougeAgg(j, "rouge2", p);
  a.f1_vs_oracle = GetOpt(j, "f1_vs_oracle", p);
  a.sys_abstractness = GetOrderMap(j, "sys_abstractness", p);
  a.sys_redundancy = GetOpt(j, "sys_redundancy", p);
  a.idd = GetOpt(j, "idd", p);
  a.iddv = GetOpt(j, "iddv", p);
  a.layout = GetLayout(j, "layout", p);
  a.layout_shuffled = GetLayout(j, "layout_shuffled", p);
  return a;
}

std::string CsvValue(const std::optional<double>& v) {
  if (!v.has_value() || !std::isfinite(*v)) return "";
  return FormatFloat(*v);
}

std::string CsvLayout(const LayoutVector& layout) {
  std::string out;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i > 0) out += ';';
    out += CsvValue(layout[i]);
  }
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::optional<double> AtOrder(const std::map<int, std::optional<double>>& m,
                              int n) {
  auto it = m.find(n);
  return it == m.end() ? std::nullopt : it->second;
}

std::string HtmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Cell(const std::optional<double>& v) {
  return v.has_value() && std::isfinite(*v) ? FormatFloat(*v) : "&ndash;";
}

struct Series {
  std::string label;
  LayoutVector values;
};

// Grouped vertical bars; one group per segment, one bar per series.
std::string LayoutChart(const std::vector<Series>& series, int segments) {
  static constexpr const char* kColors[] = {"#4e79a7", "#f28e2b", "#59a14f",
                                            "#e15759", "#76b7b2", "#edc948",
                                            "#b07aa1", "#ff9da7"};
  double max_value = 0.0;
  for (const Series& s : series) {
    for (const auto& v : s.values) {
      if (v.has_value() && std::isfinite(*v)) max_value = std::max(max_value, *v);
    }
  }
  if (max_value <= 0.0) max_value = 1.0;
  const int width = 640, height = 260, left = 50, bottom = 30, top = 10;
  const double plot_h = height - bottom - top;
  const double group_w = static_cast<double>(width - left) / std::max(segments, 1);
  const double bar_w =
      group_w * 0.8 / static_cast<double>(std::max<std::size_t>(series.size(), 1));
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "role=\"img\">\n",
      width, height + 20 * static_cast<int>(series.size()));
  svg += fmt::format(
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#333\"/>\n", left,
      height - bottom, width, height - bottom);
  svg += fmt::format("<text x=\"2\" y=\"{}\" font-size=\"11\">{:.3f}</text>\n",
                     top + 10, max_value);
  for (int seg = 0; seg < segments; ++seg) {
    const double gx = left + seg * group_w + group_w * 0.1;
    for (std::size_t si = 0; si < series.size(); ++si) {
      const auto& values = series[si].values;
      if (static_cast<std::size_t>(seg) >= values.size()) continue;
      const auto& v = values[seg];
      if (!v.has_value() || !std::isfinite(*v)) continue;
      const double h = std::max(0.0, *v) / max_value * plot_h;
      svg += fmt::format(
          "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" "
          "fill=\"{}\"><title>{}: {}</title></rect>\n",
          gx + si * bar_w, height - bottom - h, bar_w, h, kColors[si % 8],
          HtmlEscape(series[si].label), FormatFloat(*v));
    }
    svg += fmt::format(
        "<text x=\"{:.1f}\" y=\"{}\" font-size=\"11\" "
        "text-anchor=\"middle\">segment {}</text>\n",
        left + seg * group_w + group_w / 2, height - bottom + 16, seg + 1);
  }
  for (std::size_t si = 0; si < series.size(); ++si) {
    const int y = height + 20 * static_cast<int>(si);
    svg += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>"
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
        left, y, kColors[si % 8], left + 18, y + 11,
        HtmlEscape(series[si].label));
  }
  return svg + "</svg>\n";
}

// Horizontal bars for one scalar metric across systems.
std::string MetricBars(const std::string& title,
                       const std::vector<std::pair<std::string,
                                                   std::optional<double>>>& rows) {
  double max_value = 0.0;
  for (const auto& [name, v] : rows) {
    if (v.has_value() && std::isfinite(*v)) max_value = std::max(max_value, std::abs(*v));
  }
  if (max_value <= 0.0) max_value = 1.0;
  const int label_w = 160, bar_max = 360, row_h = 22;
  std::string svg = fmt::format(
      "<h3>{}</h3>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" "
      "height=\"{}\" role=\"img\">\n",
      HtmlEscape(title), label_w + bar_max + 90,
      row_h * static_cast<int>(rows.size()) + 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int y = static_cast<int>(i) * row_h + 2;
    const auto& [name, v] = rows[i];
    svg += fmt::format("<text x=\"0\" y=\"{}\" font-size=\"12\">{}</text>\n",
                       y + 14, HtmlEscape(name));
    if (v.has_value() && std::isfinite(*v)) {
      const double w = std::abs(*v) / max_value * bar_max;
      svg += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{:.1f}\" height=\"16\" "
          "fill=\"{}\"/><text x=\"{:.1f}\" y=\"{}\" "
          "font-size=\"11\">{}</text>\n",
          label_w, y, w, *v < 0 ? "#e15759" : "#4e79a7", label_w + w + 4,
          y + 13, FormatFloat(*v));
    } else {
      svg += fmt::format(
          "<text x=\"{}\" y=\"{}\" font-size=\"11\">n/a</text>\n", label_w,
          y + 13);
    }
  }
  return svg + "</svg>\n";
}

// Pairwise relevance heatmap; darker cells mean higher relevance.
std::string Heatmap(const TopicCorpusMetrics& t) {
  const auto& m = t.pairwise_relevance;
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.has_value() || !std::isfinite(*v)) continue;
      if (!any) lo = hi = *v;
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
      any = true;
    }
  }
  if (!any) return "";
  const int cell = 36, margin = 40;
  const int n = static_cast<int>(m.size());
  std::string svg = fmt::format(
      "<h3>Inter-document relevance, topic {}</h3>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "role=\"img\">\n",
      HtmlEscape(t.topic_id), margin + n * cell + 4, margin + n * cell + 4);
  for (int j = 0; j < n; ++j) {
    svg += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">"
        "D{}</text>\n<text x=\"4\" y=\"{}\" font-size=\"11\">D{}</text>\n",
        margin + j * cell + cell / 2, margin - 8, j + 1,
        margin + j * cell + cell / 2 + 4, j + 1);
    for (int i = 0; i < static_cast<int>(m[j].size()); ++i) {
      const auto& v = m[j][i];
      std::string fill = "#eeeeee";
      std::string title = "n/a";
      if (v.has_value() && std::isfinite(*v)) {
        const double frac = hi > lo ? (*v - lo) / (hi - lo) : 1.0;
        const int shade = static_cast<int>(std::lround(230 - 180 * frac));
        fill = fmt::format("rgb({},{},255)", shade, shade);
        title = FormatFloat(*v);
      }
      svg += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" "
          "stroke=\"#fff\"><title>D{} vs D{}: {}</title></rect>\n",
          margin + i * cell, margin + j * cell, cell, cell, fill, j + 1, i + 1,
          title);
    }
  }
  return svg + "</svg>\n";
}

}  // namespace

std::optional<double> MeanOfPresent(
    const std::vector<std::optional<double>>& values) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& v : values) {
    if (v.has_value() && std::isfinite(*v)) {
      sum += *v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

CorpusAggregate AggregateCorpus(const std::vector<TopicCorpusMetrics>& topics,
                                const ReportConfig& config) {
  using T = TopicCorpusMetrics;
  CorpusAggregate a;
  a.abstractness = MeanByOrder(topics, config.text.ngram_orders,
                               [](const T& t) -> const auto& { return t.abstractness; });
  a.ids = MeanOver(topics, [](const T& t) { return t.ids; });
  a.redundancy = MeanOver(topics, [](const T& t) { return t.redundancy; });
  a.pyramid = MeanOver(topics, [](const T& t) { return t.pyramid; });
  a.inv_pyramid = MeanOver(topics, [](const T& t) { return t.inv_pyramid; });
  a.compression = MeanOver(topics, [](const T& t) { return t.compression; });
  std::vector<const LayoutVector*> layouts;
  for (const T& t : topics) layouts.push_back(&t.layout);
  a.layout = AggregateLayout(layouts, config.corpus.segments);
  return a;
}

SystemAggregate AggregateSystem(const std::vector<TopicSystemMetrics>& topics,
                                const ReportConfig& config) {
  using T = TopicSystemMetrics;
  SystemAggregate a;
  auto rouge = [&](auto get) {
    RougeAggregate r;
    r.recall = MeanOver(topics, [&](const T& t) -> std::optional<double> {
      return get(t).recall;
    });
    r.precision = MeanOver(topics, [&](const T& t) -> std::optional<double> {
      return get(t).precision;
    });
    r.f1 = MeanOver(topics, [&](const T& t) -> std::optional<double> {
      return get(t).f1;
    });
    return r;
  };
  a.rouge1 = rouge([](const T& t) -> const RougeScore& { return t.rouge1; });
  a.rouge2 = rouge([](const T& t) -> const RougeScore& { return t.rouge2; });
  a.f1_vs_oracle = MeanOver(topics, [](const T& t) { return t.f1_vs_oracle; });
  a.sys_abstractness =
      MeanByOrder(topics, config.text.ngram_orders,
                  [](const T& t) -> const auto& { return t.sys_abstractness; });
  a.sys_redundancy = MeanOver(topics, [](const T& t) { return t.sys_redundancy; });
  a.idd = MeanOver(topics, [](const T& t) { return t.idd; });
  a.iddv = MeanOver(topics, [](const T& t) { return t.iddv; });
  std::vector<const LayoutVector*> layouts, shuffled;
  for (const T& t : topics) {
    layouts.push_back(&t.layout);
    shuffled.push_back(&t.layout_shuffled);
  }
  a.layout = AggregateLayout(layouts, config.system.segments);
  a.layout_shuffled = AggregateLayout(shuffled, config.system.segments);
  return a;
}

json ConfigToJson(const ReportConfig& c) {
  return {
      {"text",
       {{"lowercase", c.text.lowercase},
        {"stem", c.text.stem},
        {"stem_units", c.text.stem_units},
        {"ngram_stopwords", StopwordPolicyName(c.text.ngram_stopwords)},
        {"unit_stopwords", StopwordPolicyName(c.text.unit_stopwords)},
        {"ngram_orders", c.text.ngram_orders},
        {"log_base", c.text.log_base == LogBase::kTwo ? "2" : "e"},
        {"smoothing_alpha", c.text.smoothing_alpha},
        {"stopword_fingerprint", c.stopword_fingerprint},
        {"stopword_count", c.stopword_count}}},
      {"corpus",
       {{"segments", c.corpus.segments},
        {"jaccard_threshold", c.corpus.jaccard_threshold},
        {"per_document_redundancy", c.corpus.per_document_redundancy},
        {"normalized_inverse_pyramid", c.corpus.normalized_inverse_pyramid},
        {"pairwise_relevance", c.corpus.pairwise_relevance}}},
      {"system",
       {{"segments", c.system.segments},
        {"shuffle_seed", c.system.shuffle_seed},
        {"ref_aggregation",
         c.system.ref_aggregation == RefAggregation::kMax ? "max" : "mean"}}},
      {"oracle",
       {{"n", c.oracle.n},
        {"budget_words", c.oracle.budget_words},
        {"fill_budget", c.oracle.fill_budget},
        {"max_sentences", c.oracle.max_sentences},
        {"method", OracleMethodName(c.oracle_method)}}}};
}

ReportConfig ConfigFromJson(const json& j) {
  const std::string p = "config";
  ReportConfig c;
  const json& t = Field(j, "text", p);
  const std::string tp = p + ".text";
  c.text.lowercase = GetBool(t, "lowercase", tp);
  c.text.stem = GetBool(t, "stem", tp);
  c.text.stem_units = GetBool(t, "stem_units", tp);
  c.text.ngram_stopwords = ParseStopwordPolicy(
      GetString(t, "ngram_stopwords", tp), tp + ".ngram_stopwords");
  c.text.unit_stopwords = ParseStopwordPolicy(
      GetString(t, "unit_stopwords", tp), tp + ".unit_stopwords");
  const json& orders = Field(t, "ngram_orders", tp);
  if (!orders.is_array()) Missing(tp + ".ngram_orders");
  c.text.ngram_orders.clear();
  for (const json& o : orders) {
    if (!o.is_number_integer()) Missing(tp + ".ngram_orders");
    c.text.ngram_orders.push_back(o.get<int>());
  }
  const std::string base = GetString(t, "log_base", tp);
  if (base != "e" && base != "2") Missing(tp + ".log_base");
  c.text.log_base = base == "2" ? LogBase::kTwo : LogBase::kNatural;
  c.text.smoothing_alpha = GetDouble(t, "smoothing_alpha", tp);
  c.stopword_fingerprint = GetString(t, "stopword_fingerprint", tp);
  c.stopword_count = GetInt<std::size_t>(t, "stopword_count", tp);

  const json& co = Field(j, "corpus", p);
  const std::string cp = p + ".corpus";
  c.corpus.segments = GetInt<int>(co, "segments", cp);
  c.corpus.jaccard_threshold = GetDouble(co, "jaccard_threshold", cp);
  c.corpus.per_document_redundancy =
      GetBool(co, "per_document_redundancy", cp);
  c.corpus.normalized_inverse_pyramid =
      GetBool(co, "normalized_inverse_pyramid", cp);
  c.corpus.pairwise_relevance = GetBool(co, "pairwise_relevance", cp);

  const json& s = Field(j, "system", p);
  const std::string sp = p + ".system";
  c.system.segments = GetInt<int>(s, "segments", sp);
  c.system.shuffle_seed = GetInt<std::uint64_t>(s, "shuffle_seed", sp);
  const std::string agg = GetString(s, "ref_aggregation", sp);
  if (agg != "mean" && agg != "max") Missing(sp + ".ref_aggregation");
  c.system.ref_aggregation =
      agg == "max" ? RefAggregation::kMax : RefAggregation::kMean;

  const json& o = Field(j, "oracle", p);
  const std::string op = p + ".oracle";
  c.oracle.n = GetInt<int>(o, "n", op);
  c.oracle.budget_words = GetInt<int>(o, "budget_words", op);
  c.oracle.fill_budget = GetBool(o, "fill_budget", op);
  c.oracle.max_sentences = GetInt<int>(o, "max_sentences", op);
  const std::string method = GetString(o, "method", op);
  if (method == "exact") {
    c.oracle_method = OracleMethod::kExact;
  } else if (method == "greedy") {
    c.oracle_method = OracleMethod::kGreedy;
  } else {
    Missing(op + ".method");
  }
  return c;
}

json ReportToJson(const MetricReport& r) {
  json out = {{"schema_version", r.schema_version},
              {"corpus_name", r.corpus_name},
              {"topic_count", r.topic_count},
              {"config", ConfigToJson(r.config)}};
  if (r.corpus.has_value()) {
    json topics = json::array();
    for (const auto& t : r.corpus->topics) topics.push_back(CorpusTopicJson(t));
    out["corpus"] = {{"aggregate", CorpusAggregateJson(r.corpus->aggregate)},
                     {"topics", topics}};
  } else {
    out["corpus"] = nullptr;
  }
  json systems = json::array();
  for (const SystemSection& s : r.systems) {
    json topics = json::array();
    for (const auto& t : s.topics) topics.push_back(SystemTopicJson(t));
    json section = {{"system_name", s.system_name},
                    {"is_oracle", s.is_oracle},
                    {"coverage", s.coverage},
                    {"aggregate", SystemAggregateJson(s.aggregate)},
                    {"topics", topics}};
    if (s.is_oracle) section["oracle_method"] = s.oracle_method;
    if (s.provenance.has_value()) section["provenance"] = *s.provenance;
    systems.push_back(std::move(section));
  }
  out["systems"] = std::move(systems);
  return out;
}

MetricReport ReportFromJson(const json& j) {
  const std::string p = "report";
  if (!j.is_object()) Missing(p);
  MetricReport r;
  r.schema_version = GetString(j, "schema_version", p);
  r.corpus_name = GetString(j, "corpus_name", p);
  r.topic_count = GetInt<std::size_t>(j, "topic_count", p);
  r.config = ConfigFromJson(Field(j, "config", p));
  const json& corpus = Field(j, "corpus", p);
  if (!corpus.is_null()) {
    CorpusSection section;
    section.aggregate =
        CorpusAggregateFromJson(Field(corpus, "aggregate", "corpus"),
                                "corpus.aggregate");
    const json& topics = Field(corpus, "topics", "corpus");
    if (!topics.is_array()) Missing("corpus.topics");
    for (std::size_t i = 0; i < topics.size(); ++i) {
      section.topics.push_back(CorpusTopicFromJson(
          topics[i], "corpus.topics[" + std::to_string(i) + "]"));
    }
    r.corpus = std::move(section);
  }
  const json& systems = Field(j, "systems", p);
  if (!systems.is_array()) Missing("systems");
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const json& s = systems[i];
    const std::string sp = "systems[" + std::to_string(i) + "]";
    SystemSection section;
    section.system_name = GetString(s, "system_name", sp);
    section.is_oracle = GetBool(s, "is_oracle", sp);
    if (section.is_oracle) {
      section.oracle_method = GetString(s, "oracle_method", sp);
    }
    section.coverage = GetDouble(s, "coverage", sp);
    section.aggregate =
        SystemAggregateFromJson(Field(s, "aggregate", sp), sp + ".aggregate");
    const json& topics = Field(s, "topics", sp);
    if (!topics.is_array()) Missing(sp + ".topics");
    for (std::size_t k = 0; k < topics.size(); ++k) {
      section.topics.push_back(SystemTopicFromJson(
          topics[k], sp + ".topics[" + std::to_string(k) + "]"));
    }
    if (auto it = s.find("provenance"); it != s.end()) section.provenance = *it;
    r.systems.push_back(std::move(section));
  }
  return r;
}

std::string CanonicalJson(const json& j) {
  std::string out;
  WriteCanonical(j, 0, out);
  out += '\n';
  return out;
}

std::string EmitJson(const MetricReport& report) {
  return CanonicalJson(ReportToJson(report));
}

MetricReport ParseReport(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kMalformedLine, std::string("report: ") + e.what());
  }
  return ReportFromJson(j);
}

const std::vector<std::string>& CsvColumns() {
  static const std::vector<std::string> kColumns = {
      "corpus",
      "system",
      "is_oracle",
      "coverage",
      "rouge1_recall",
      "rouge1_precision",
      "rouge1_f1",
      "rouge2_recall",
      "rouge2_precision",
      "rouge2_f1",
      "f1_vs_oracle",
      "sys_abstractness_1",
      "sys_abstractness_2",
      "sys_abstractness_3",
      "sys_redundancy",
      "idd",
      "iddv",
      "layout",
      "layout_shuffled",
      "corpus_abstractness_1",
      "corpus_abstractness_2",
      "corpus_abstractness_3",
      "corpus_ids",
      "corpus_redundancy",
      "corpus_pyramid",
      "corpus_inv_pyramid",
      "corpus_compression",
      "corpus_layout"};
  return kColumns;
}

std::string EmitCsv(const std::vector<MetricReport>& reports) {
  std::string out;
  const auto& columns = CsvColumns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const MetricReport& r : reports) {
    std::vector<std::string> corpus_cells(9);
    if (r.corpus.has_value()) {
      const CorpusAggregate& a = r.corpus->aggregate;
      corpus_cells = {CsvValue(AtOrder(a.abstractness, 1)),
                      CsvValue(AtOrder(a.abstractness, 2)),
                      CsvValue(AtOrder(a.abstractness, 3)),
                      CsvValue(a.ids),
                      CsvValue(a.redundancy),
                      CsvValue(a.pyramid),
                      CsvValue(a.inv_pyramid),
                      CsvValue(a.compression),
                      CsvLayout(a.layout)};
    }
    auto emit = [&](const std::vector<std::string>& system_cells) {
      std::vector<std::string> row = {CsvField(r.corpus_name)};
      row.insert(row.end(), system_cells.begin(), system_cells.end());
      row.insert(row.end(), corpus_cells.begin(), corpus_cells.end());
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        out += row[i];
      }
      out += '\n';
    };
    if (r.systems.empty()) {
      emit(std::vector<std::string>(18));
      continue;
    }
    for (const SystemSection& s : r.systems) {
      const SystemAggregate& a = s.aggregate;
      emit({CsvField(s.system_name), s.is_oracle ? "true" : "false",
            FormatFloat(s.coverage), CsvValue(a.rouge1.recall),
            CsvValue(a.rouge1.precision), CsvValue(a.rouge1.f1),
            CsvValue(a.rouge2.recall), CsvValue(a.rouge2.precision),
            CsvValue(a.rouge2.f1), CsvValue(a.f1_vs_oracle),
            CsvValue(AtOrder(a.sys_abstractness, 1)),
            CsvValue(AtOrder(a.sys_abstractness, 2)),
            CsvValue(AtOrder(a.sys_abstractness, 3)),
            CsvValue(a.sys_redundancy), CsvValue(a.idd), CsvValue(a.iddv),
            CsvLayout(a.layout), CsvLayout(a.layout_shuffled)});
    }
  }
  return out;
}

std::string EmitHtml(const MetricReport& r) {
  std::string html =
      "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += fmt::format("<title>summgauge report: {}</title>\n",
                      HtmlEscape(r.corpus_name));
  html +=
      "<style>body{font-family:sans-serif;margin:2em;max-width:960px}"
      "table{border-collapse:collapse;margin:1em 0}"
      "td,th{border:1px solid #ccc;padding:4px 8px;text-align:right}"
      "th{background:#f4f4f4}td:first-child,th:first-child{text-align:left}"
      "</style>\n</head>\n<body>\n";
  html += fmt::format("<h1>Corpus {}</h1>\n<p>{} topics, schema {}</p>\n",
                      HtmlEscape(r.corpus_name), r.topic_count,
                      HtmlEscape(r.schema_version));

  std::vector<Series> layout_series;
  int segments = r.config.system.segments;
  if (r.corpus.has_value()) {
    const CorpusAggregate& a = r.corpus->aggregate;
    html += "<h2>Corpus properties</h2>\n<table>\n<tr><th>metric</th>"
            "<th>value</th></tr>\n";
    for (const auto& [n, v] : a.abstractness) {
      html += fmt::format("<tr><td>abstractness ({}-gram)</td><td>{}</td></tr>\n",
                          n, Cell(v));
    }
    const std::pair<const char*, std::optional<double>> rows[] = {
        {"inter-document similarity", a.ids},
        {"redundancy", a.redundancy},
        {"pyramid score", a.pyramid},
        {"inverse pyramid", a.inv_pyramid},
        {"compression factor", a.compression}};
    for (const auto& [name, v] : rows) {
      html += fmt::format("<tr><td>{}</td><td>{}</td></tr>\n", name, Cell(v));
    }
    html += "</table>\n";
    layout_series.push_back({"references (corpus)", a.layout});
    segments = r.config.corpus.segments;
  }
  for (const SystemSection& s : r.systems) {
    layout_series.push_back({s.system_name, s.aggregate.layout});
    layout_series.push_back(
        {s.system_name + " (shuffled)", s.aggregate.layout_shuffled});
  }
  if (!layout_series.empty()) {
    html += "<h2>Layout bias</h2>\n";
    html += LayoutChart(layout_series, segments);
  }
  if (r.corpus.has_value()) {
    int shown = 0;
    for (const auto& t : r.corpus->topics) {
      if (shown == 3) break;
      const std::string map = Heatmap(t);
      if (map.empty()) continue;
      html += map;
      ++shown;
    }
  }
  if (!r.systems.empty()) {
    html += "<h2>Systems</h2>\n<table>\n<tr><th>system</th><th>coverage</th>"
            "<th>R-1 F1</th><th>R-2 F1</th><th>F1 vs oracle</th>"
            "<th>redundancy</th><th>IDD</th><th>IDDV</th></tr>\n";
    for (const SystemSection& s : r.systems) {
      const SystemAggregate& a = s.aggregate;
      html += fmt::format(
          "<tr><td>{}{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td>"
          "<td>{}</td><td>{}</td><td>{}</td></tr>\n",
          HtmlEscape(s.system_name), s.is_oracle ? " (oracle)" : "",
          FormatFloat(s.coverage), Cell(a.rouge1.f1), Cell(a.rouge2.f1),
          Cell(a.f1_vs_oracle), Cell(a.sys_redundancy), Cell(a.idd),
          Cell(a.iddv));
    }
    html += "</table>\n";
    auto bars = [&](const std::string& title, auto get) {
      std::vector<std::pair<std::string, std::optional<double>>> rows;
      for (const SystemSection& s : r.systems) {
        rows.emplace_back(s.system_name, get(s.aggregate));
      }
      html += MetricBars(title, rows);
    };
    bars("ROUGE-1 F1", [](const SystemAggregate& a) { return a.rouge1.f1; });
    bars("ROUGE-2 F1", [](const SystemAggregate& a) { return a.rouge2.f1; });
    bars("F1 vs oracle", [](const SystemAggregate& a) { return a.f1_vs_oracle; });
  }
  std::string data = CanonicalJson(ReportToJson(r));
  for (std::size_t pos = 0; (pos = data.find("</", pos)) != std::string::npos;
       pos += 3) {
    data.replace(pos, 2, "<\\/");
  }
  html += "<script type=\"application/json\" id=\"report-data\">\n" + data +
          "</script>\n</body>\n</html>\n";
  return html;
}

}  // namespace summgauge
