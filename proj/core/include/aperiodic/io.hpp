#pragma once

#include "aperiodic/basis.hpp"
#include "aperiodic/configuration.hpp"
#include "aperiodic/point_cloud.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aperiodic {

// Both text formats are line based: blank lines and lines starting with '#'
// are ignored, fields are separated by whitespace, and every rational is
// written as p/q. Errors are ParseError with the line and column.
//
// Point cloud:
//   aperiodic-pointcloud 1
//   basis <rank> <dim>
//   gen <class> <x_1> ... <x_d> [label]      (rank lines)
//   window <lo_1> ... <lo_d> <hi_1> ... <hi_d>
//   point <z_1> ... <z_rank> [color]          (any number)

std::string print_point_cloud(const PointCloud& s);
PointCloud parse_point_cloud(std::string_view text);

/// Declarative description of a configuration, as stored in a config file:
///
///   aperiodic-config 1
///   kind constant|torus|periodic|floor|subgroup|explicit|example
///   rank <m>                      (standard basis of Z^m), or basis/gen lines
///   alphabet <a_1> ... <a_k>      (optional)
///   value <v>                     constant
///   z <z_1> <z_2>, alpha <a>      torus (rank 2)
///   period <z...>, cell <z...> <v>  periodic (repeatable)
///   beta <b>, coeffs <a_1..a_m>, scale <s>   floor
///   generators <i> ...            subgroup
///   window <lo...> <hi...>, point <z...> [v]  explicit
///   name two-lattice|punctured-grid  example
struct ConfigSpec {
    std::string kind;
    ExponentBasis basis = ExponentBasis::standard(1);
    std::optional<std::vector<Rational>> alphabet;

    Rational value;
    std::vector<Rational> z;
    Rational alpha;
    std::vector<GroupPoint> periods;
    std::vector<std::pair<GroupPoint, Rational>> cell;
    Rational beta;
    std::vector<Rational> coeffs;
    Rational scale = 1;
    std::vector<std::size_t> generators;
    std::optional<RationalBox> window;
    std::vector<std::pair<GroupPoint, Rational>> points;
    std::string name;
};

ConfigSpec parse_config_spec(std::string_view text);
std::string print_config_spec(const ConfigSpec& spec);
/// Throws ContractError for inconsistent parameters.
Configuration build_configuration(const ConfigSpec& spec);
/// The explicit-window spec of a point cloud (colors become values).
ConfigSpec explicit_spec(const PointCloud& s);

/// Whole file as a string; throws Error when it cannot be read.
std::string read_text_file(const std::string& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace aperiodic
