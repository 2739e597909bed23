#include "fairnet/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace fairnet {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, long long line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) fail(ErrorCode::ParseError, "trailing characters in number", line_no);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorCode::ParseError, "bad numeric field '" + s + "'", line_no);
  }
}

}  // namespace

LoadedPoints read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing CSV header", 1);
  std::vector<std::string> header = split_csv_line(line);

  int d = 0;
  while (d < static_cast<int>(header.size()) && header[d] == "x" + std::to_string(d)) ++d;
  if (d == 0) fail(ErrorCode::ParseError, "header must start with x0,...", 1);
  bool has_weight = false;
  if (static_cast<int>(header.size()) == d + 1 && header[d] == "color") {
    has_weight = false;
  } else if (static_cast<int>(header.size()) == d + 2 && header[d] == "color" &&
             header[d + 1] == "weight") {
    has_weight = true;
  } else {
    fail(ErrorCode::ParseError, "header must be x0,...,x{d-1},color[,weight]", 1);
  }

  std::vector<double> coords;
  std::vector<int> colors;
  std::vector<double> weights;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> name_to_id;

  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != d + 1 + (has_weight ? 1 : 0))
      fail(ErrorCode::ParseError, "wrong field count", line_no);
    for (int t = 0; t < d; ++t) coords.push_back(parse_double(fields[t], line_no));
    const std::string& label = fields[d];
    auto [it, inserted] = name_to_id.emplace(label, static_cast<int>(names.size()));
    if (inserted) names.push_back(label);
    colors.push_back(it->second);
    if (has_weight) {
      double w = parse_double(fields[d + 1], line_no);
      if (!(w > 0.0)) fail(ErrorCode::ParseError, "weights must be positive", line_no);
      weights.push_back(w);
    }
  }

  std::optional<std::vector<double>> w;
  if (has_weight) w = std::move(weights);
  LoadedPoints out{ColoredPointSet(std::move(coords), d, std::move(colors),
                                   std::max<int>(1, static_cast<int>(names.size())), std::move(w)),
                   std::move(names)};
  return out;
}

LoadedPoints load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return read_points_csv(in);
}

void save_points_csv(const std::string& path, const ColoredPointSet& X,
                     const std::vector<std::string>& color_names) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
  char buf[64];
  for (int t = 0; t < X.dim(); ++t) out << (t ? ",x" : "x") << t;
  out << ",color";
  if (X.has_weights()) out << ",weight";
  out << "\n";
  for (int i = 0; i < X.size(); ++i) {
    auto pt = X.point(i);
    for (int t = 0; t < X.dim(); ++t) {
      std::snprintf(buf, sizeof buf, "%.17g", pt[t]);
      out << (t ? "," : "") << buf;
    }
    int c = X.color(i);
    if (c < static_cast<int>(color_names.size()))
      out << "," << color_names[c];
    else
      out << ",c" << c;
    if (X.has_weights()) {
      std::snprintf(buf, sizeof buf, "%.17g", X.weight(i));
      out << "," << buf;
    }
    out << "\n";
  }
}

std::string range_to_json(const Range& r) {
  json j;
  if (const auto* rc = std::get_if<Rect>(&r.shape)) {
    j["type"] = "rect";
    j["lo"] = rc->lo;
    j["hi"] = rc->hi;
  } else if (const auto* hs = std::get_if<Halfspace>(&r.shape)) {
    j["type"] = "halfspace";
    j["normal"] = hs->normal;
    j["offset"] = hs->offset;
  } else if (const auto* b = std::get_if<Ball>(&r.shape)) {
    j["type"] = "ball";
    j["center"] = b->center;
    j["radius"] = b->radius;
  } else {
    const auto& e = std::get<Explicit>(r.shape);
    j["type"] = "explicit";
    j["members"] = e.members;
  }
  return j.dump();
}

RangeFamily read_ranges_jsonl(std::istream& in) {
  RangeFamily fam;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what(), line_no);
    }
    try {
      std::string type = j.at("type").get<std::string>();
      if (type == "rect") {
        fam.ranges.push_back({Rect{j.at("lo").get<std::vector<double>>(),
                                   j.at("hi").get<std::vector<double>>()}});
      } else if (type == "halfspace") {
        fam.ranges.push_back({Halfspace{j.at("normal").get<std::vector<double>>(),
                                        j.at("offset").get<double>()}});
      } else if (type == "ball") {
        fam.ranges.push_back({Ball{j.at("center").get<std::vector<double>>(),
                                   j.at("radius").get<double>()}});
      } else if (type == "explicit") {
        fam.ranges.push_back({Explicit{j.at("members").get<std::vector<int>>()}});
      } else {
        fail(ErrorCode::ParseError, "unknown range type '" + type + "'", line_no);
      }
    } catch (const json::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad range object: ") + e.what(), line_no);
    }
  }
  return fam;
}

RangeFamily load_ranges_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return read_ranges_jsonl(in);
}

void save_ranges_jsonl(const std::string& path, const RangeFamily& fam) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
  for (const Range& r : fam.ranges) out << range_to_json(r) << "\n";
}

std::string RunReport::to_json() const {
  json j;
  j["algo"] = algo;
  j["params"] = json::parse(params_json);
  j["output_indices"] = output_indices;
  j["size"] = size;
  j["f2"] = f2;
  j["finf"] = finf;
  j["valid"] = valid;
  j["runtime_ms"] = runtime_ms;
  j["seed"] = seed;
  return j.dump(2);
}

void save_report(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
  out << report.to_json() << "\n";
}

}  // namespace fairnet
