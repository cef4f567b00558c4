#include "rbl/io.hpp"

#include <fstream>
#include <sstream>

#include "rbl/error.hpp"

namespace rbl {

auto to_json(const Coloring& c) -> Json {
  Json rows = Json::array();
  for (int i = 0; i < c.n(); ++i) {
    auto r = c.row(i);
    rows.push_back(std::vector<ColorId>(r.begin(), r.end()));
  }
  return Json{{"n", c.n()}, {"matrix", std::move(rows)}};
}

auto coloring_from_json(const Json& j) -> Coloring {
  // Construction output wraps the coloring.
  if (j.is_object() && j.contains("coloring") && !j.contains("matrix")) return coloring_from_json(j.at("coloring"));
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix")) {
    throw InputError("coloring JSON needs 'n' and 'matrix'");
  }
  try {
    const int n = j.at("n").get<int>();
    auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(rows.size()) != n) throw InputError("matrix row count differs from n");
    std::vector<ColorId> flat;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n) throw InputError("matrix must be n x n");
      for (long long x : r) {
        if (x < 0 || x > 0xffffffffLL) throw InputError("color ids must be nonnegative 32-bit");
        flat.push_back(static_cast<ColorId>(x));
      }
    }
    return Coloring::from_entries(n, std::move(flat));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed coloring JSON: ") + e.what());
  }
}

auto to_json(const PatternSpec& p) -> Json { return Json{{"s", p.s}, {"t", p.t}, {"q", p.q}}; }

auto to_json(const Subcopy& s) -> Json {
  return Json{{"side_a", s.side_a}, {"side_b", s.side_b}, {"s_side", to_string(s.s_side)}};
}

auto subcopy_from_json(const Json& j) -> Subcopy {
  Subcopy s;
  s.side_a = j.at("side_a").get<std::vector<int>>();
  s.side_b = j.at("side_b").get<std::vector<int>>();
  s.s_side = j.at("s_side").get<std::string>() == "B" ? Side::B : Side::A;
  return s;
}

auto read_json_file(const std::string& path) -> Json {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace rbl
