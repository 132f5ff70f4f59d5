#pragma once

// JSON and CSV formats. Vertex labels and colors are 1-based in every
// external format and 0-based in memory.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "tul/asymptotics.hpp"
#include "tul/constructors.hpp"
#include "tul/enumeration.hpp"
#include "tul/error.hpp"
#include "tul/graph.hpp"
#include "tul/tensor_sim.hpp"

namespace tul::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input; the message names the offending field.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Throws ParseError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// {"k": int, "D": int, "sigma": [[int, ...], ...]} with 1-based images.
ColoredGraph graph_from_json(const Json& j);
Json to_json(const ColoredGraph& g);

/// {"k": int, "m_colors": [int, ...], "n_colors": [int, ...]}
CycleSpec cycle_spec_from_json(const Json& j);
Json to_json(const CycleSpec& spec);

/// {"D": int, "steps": [{"color": int, "white": int}, ...]}
MelonicRecipe melonic_recipe_from_json(const Json& j);
Json to_json(const MelonicRecipe& recipe);

/// {"D"?: int, "c": [number | "p/q", ...], "N"?: int, "distribution"?: str, "seed"?: uint}
TensorSpec tensor_spec_from_json(const Json& j);

/// A cycle spec when "m_colors" is present, otherwise a graph.
TraceTarget target_from_json(const Json& j);

/// Parses "1.0,2,3/2" into positive reals.
std::vector<double> parse_ratio_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const FaceProfile& f);
Json to_json(const AsymptoticPrediction& p);
Json to_json(const CrossCheckReport& r);

/// {schema, gamma, count, members?, histogram?}
Json minimal_coverings_json(const MinimalCoveringSet& minimal, bool with_members,
                            const std::optional<std::map<int, std::size_t>>& histogram);

/// Header tau,f_1..f_D,total with tau in cycle notation.
std::string coverings_csv(std::span<const Covering> coverings, int colors);

/// {schema, graph, gamma, predicted, rows: [{N, samples, mean, stderr, normalized}]}
Json to_json(const UniversalityReport& report);
std::string to_csv(const UniversalityReport& report);

/// Shortest round-trip decimal form, as used in every CSV.
std::string format_double(double x);

}  // namespace tul::io
