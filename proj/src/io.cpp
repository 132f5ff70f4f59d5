#include "tul/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tul::io {

namespace {

const Json& field(const Json& j, const std::string& name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

long long as_int(const Json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ParseError("field '" + name + "' must be an integer");
  return v.get<long long>();
}

int positive_int(const Json& v, const std::string& name) {
  const auto x = as_int(v, name);
  if (x < 1 || x > 1'000'000) throw ParseError("field '" + name + "' must be a positive integer");
  return static_cast<int>(x);
}

std::vector<int> int_array(const Json& v, const std::string& name) {
  if (!v.is_array()) throw ParseError("field '" + name + "' must be an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<int>(as_int(v[i], name + "[" + std::to_string(i) + "]")));
  }
  return out;
}

std::vector<int> color_array(const Json& j, const std::string& name, const std::string& where) {
  auto colors = int_array(field(j, name, where), name);
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1) {
      throw ParseError("field '" + name + "[" + std::to_string(i) + "]' must be a color >= 1");
    }
    --colors[i];
  }
  return colors;
}

double parse_ratio(std::string_view text, const std::string& name) {
  auto parse_number = [&](std::string_view t) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || end != t.data() + t.size()) {
      throw ParseError("field '" + name + "': cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
  };
  double value = 0.0;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw ParseError("field '" + name + "': zero denominator");
    value = parse_number(text.substr(0, slash)) / den;
  } else {
    value = parse_number(text);
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("field '" + name + "' must be positive");
  }
  return value;
}

std::vector<int> one_based(const std::vector<int>& zero) {
  std::vector<int> out(zero);
  for (auto& c : out) ++c;
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

ColoredGraph graph_from_json(const Json& j) {
  const int k = positive_int(field(j, "k", "graph"), "k");
  const int colors = positive_int(field(j, "D", "graph"), "D");
  const auto& rows = field(j, "sigma", "graph");
  if (!rows.is_array() || static_cast<int>(rows.size()) != colors) {
    throw ParseError("field 'sigma' must be an array of D = " + std::to_string(colors) + " rows");
  }
  std::vector<Permutation> sigma;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string name = "sigma[" + std::to_string(i) + "]";
    const auto row = int_array(rows[i], name);
    if (static_cast<int>(row.size()) != k) {
      throw ParseError("field '" + name + "' has " + std::to_string(row.size()) +
                       " entries, expected k = " + std::to_string(k));
    }
    try {
      sigma.push_back(Permutation::from_one_based(row));
    } catch (const StructuralError& e) {
      throw ParseError("field '" + name + "' is not a bijection on 1.." + std::to_string(k) + ": " +
                       e.what());
    }
  }
  return ColoredGraph(std::move(sigma));
}

Json to_json(const ColoredGraph& g) {
  Json sigma = Json::array();
  for (const auto& s : g.sigmas()) sigma.push_back(s.one_based());
  return Json{{"k", g.k()}, {"D", g.colors()}, {"sigma", std::move(sigma)}};
}

CycleSpec cycle_spec_from_json(const Json& j) {
  CycleSpec spec;
  spec.k = positive_int(field(j, "k", "cycle spec"), "k");
  spec.m_colors = color_array(j, "m_colors", "cycle spec");
  spec.n_colors = color_array(j, "n_colors", "cycle spec");
  try {
    validate(spec);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("fields 'm_colors'/'n_colors': ") + e.what());
  }
  return spec;
}

Json to_json(const CycleSpec& spec) {
  return Json{{"k", spec.k}, {"m_colors", one_based(spec.m_colors)},
              {"n_colors", one_based(spec.n_colors)}};
}

MelonicRecipe melonic_recipe_from_json(const Json& j) {
  MelonicRecipe recipe;
  recipe.colors = positive_int(field(j, "D", "melonic recipe"), "D");
  const auto& steps = field(j, "steps", "melonic recipe");
  if (!steps.is_array()) throw ParseError("field 'steps' must be an array");
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::string where = "steps[" + std::to_string(s) + "]";
    const int color = positive_int(field(steps[s], "color", where), where + ".color");
    const int white = positive_int(field(steps[s], "white", where), where + ".white");
    recipe.steps.push_back({color - 1, white - 1});
  }
  return recipe;
}

Json to_json(const MelonicRecipe& recipe) {
  Json steps = Json::array();
  for (const auto& s : recipe.steps) steps.push_back(Json{{"color", s.color + 1}, {"white", s.white + 1}});
  return Json{{"D", recipe.colors}, {"steps", std::move(steps)}};
}

TensorSpec tensor_spec_from_json(const Json& j) {
  TensorSpec spec;
  const auto& c = field(j, "c", "tensor spec");
  if (!c.is_array() || c.empty()) throw ParseError("field 'c' must be a nonempty array");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string name = "c[" + std::to_string(i) + "]";
    if (c[i].is_number()) {
      const double v = c[i].get<double>();
      if (!(v > 0.0)) throw ParseError("field '" + name + "' must be positive");
      spec.c.push_back(v);
    } else if (c[i].is_string()) {
      spec.c.push_back(parse_ratio(c[i].get<std::string>(), name));
    } else {
      throw ParseError("field '" + name + "' must be a number or a \"p/q\" string");
    }
  }
  if (j.contains("D") && positive_int(j.at("D"), "D") != spec.colors()) {
    throw ParseError("field 'D' disagrees with the length of 'c'");
  }
  if (j.contains("N")) spec.N = positive_int(j.at("N"), "N");
  if (j.contains("distribution")) {
    const auto& d = j.at("distribution");
    if (!d.is_string()) throw ParseError("field 'distribution' must be a string");
    try {
      spec.distribution = distribution_from_string(d.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("field 'distribution': ") + e.what());
    }
  }
  if (j.contains("seed")) {
    const auto& s = j.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw ParseError("field 'seed' must be a nonnegative integer");
    }
    spec.seed = s.get<std::uint64_t>();
  }
  return spec;
}

TraceTarget target_from_json(const Json& j) {
  if (j.is_object() && j.contains("m_colors")) return cycle_spec_from_json(j);
  return graph_from_json(j);
}

std::vector<double> parse_ratio_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_ratio(item, "c"));
  if (out.empty()) throw ParseError("empty ratio list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw ParseError("cannot parse '" + item + "' as an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

Json to_json(const FaceProfile& f) {
  Json out{{"zero_faces", f.zero_faces}, {"total", f.total}};
  if (!f.pair_faces.empty()) {
    Json pairs = Json::array();
    for (const auto& [key, count] : f.pair_faces) {
      pairs.push_back(Json{{"colors", {key.first + 1, key.second + 1}}, {"faces", count}});
    }
    out["pair_faces"] = std::move(pairs);
  }
  return out;
}

Json to_json(const AsymptoticPrediction& p) {
  return Json{{"schema", kSchemaVersion},
              {"family", std::string(to_string(p.family))},
              {"gamma", p.gamma},
              {"coefficient", p.coefficient}};
}

Json to_json(const CrossCheckReport& r) {
  return Json{{"family", std::string(to_string(r.family))},
              {"pass", r.pass},
              {"gamma_closed", r.gamma_closed},
              {"gamma_enum", r.gamma_enum},
              {"count_closed", r.count_closed},
              {"count_enum", r.count_enum},
              {"coeff_closed", r.coeff_closed},
              {"coeff_enum", r.coeff_enum}};
}

Json minimal_coverings_json(const MinimalCoveringSet& minimal, bool with_members,
                            const std::optional<std::map<int, std::size_t>>& histogram) {
  Json out{{"schema", kSchemaVersion}, {"gamma", minimal.gamma}, {"count", minimal.count()}};
  if (with_members) {
    Json members = Json::array();
    for (const auto& m : minimal.members) {
      members.push_back(Json{{"tau", m.tau.one_based()},
                             {"cycles", m.tau.cycle_notation()},
                             {"zero_faces", m.faces.zero_faces},
                             {"total", m.faces.total}});
    }
    out["members"] = std::move(members);
  }
  if (histogram) {
    Json h = Json::object();
    for (const auto& [l, count] : *histogram) h[std::to_string(l)] = count;
    out["histogram"] = std::move(h);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string coverings_csv(std::span<const Covering> coverings, int colors) {
  std::ostringstream os;
  os << "tau";
  for (int i = 1; i <= colors; ++i) os << ",f_" << i;
  os << ",total\n";
  for (const auto& c : coverings) {
    os << '"' << c.tau.cycle_notation() << '"';
    for (int f : c.faces.zero_faces) os << ',' << f;
    os << ',' << c.faces.total << '\n';
  }
  return os.str();
}

Json to_json(const UniversalityReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"N", r.N},
                        {"samples", r.samples},
                        {"mean", r.mean},
                        {"stderr", r.std_error},
                        {"normalized", r.normalized}});
  }
  return Json{{"schema", kSchemaVersion},
              {"graph", report.graph},
              {"gamma", report.gamma},
              {"predicted", report.predicted},
              {"rows", std::move(rows)}};
}

std::string to_csv(const UniversalityReport& report) {
  std::ostringstream os;
  os << "graph,gamma,predicted,N,samples,mean,stderr,normalized\n";
  for (const auto& r : report.rows) {
    os << '"' << report.graph << '"' << ',' << report.gamma << ',' << format_double(report.predicted)
       << ',' << r.N << ',' << r.samples << ',' << format_double(r.mean) << ','
       << format_double(r.std_error) << ',' << format_double(r.normalized) << '\n';
  }
  return os.str();
}

}  // namespace tul::io
