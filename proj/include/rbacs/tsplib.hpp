#pragma once

// Reader/writer for TSPLIB node-coordinate files (EUC_2D only) and the
// matching nearest-integer distance function.

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbacs {

struct NodeCoord {
    int id = 0;  // 1-based city index as written in the file
    double x = 0.0;
    double y = 0.0;

    bool operator==(const NodeCoord&) const = default;
};

enum class EdgeWeightType { euc2d };

struct InstanceHeader {
    std::string name;
    int dimension = 0;
    EdgeWeightType edge_weight_type = EdgeWeightType::euc2d;
};

class TsplibError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed line or keyword; the message names the offending line number.
class ParseError : public TsplibError {
    using TsplibError::TsplibError;
};

/// File is well-formed but internally inconsistent (e.g. DIMENSION does not
/// match the coordinate count).
class StructuralError : public TsplibError {
    using TsplibError::TsplibError;
};

/// Recognized file whose edge weight type this reader does not support.
class UnsupportedFormatError : public TsplibError {
    using TsplibError::TsplibError;
};

struct ParsedInstance {
    InstanceHeader header;
    std::vector<NodeCoord> coords;  // sorted by id
};

ParsedInstance parse_tsplib(std::istream& in);
ParsedInstance load_tsplib_file(const std::string& path);

/// TSPLIB EUC_2D edge weight: Euclidean distance rounded to the nearest
/// integer (half rounds up).
int euc2d_distance(const NodeCoord& a, const NodeCoord& b);

void write_tsplib(const InstanceHeader& header, std::span<const NodeCoord> coords, std::ostream& out);

/// Reads the TOUR_SECTION of a TSPLIB tour file; returns 0-based city indices.
std::vector<int> read_tour_file(std::istream& in);
std::vector<int> load_tour_file(const std::string& path);

}  // namespace rbacs
