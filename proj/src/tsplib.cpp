#include "rbacs/tsplib.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rbacs {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits "KEYWORD : value" (any spacing around the colon) into its parts.
bool split_keyword_line(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return !key.empty();
}

[[noreturn]] void fail_parse(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ParsedInstance parse_tsplib(std::istream& in) {
    ParsedInstance out;
    bool saw_dimension = false;
    bool saw_weight_type = false;
    bool done = false;

    std::string line;
    int line_no = 0;
    while (!done && std::getline(in, line)) {
        ++line_no;
        const std::string s = trim(line);
        if (s.empty()) continue;

        if (s == "NODE_COORD_SECTION") {
            if (!saw_dimension) fail_parse(line_no, "NODE_COORD_SECTION before DIMENSION");
            while (std::getline(in, line)) {
                ++line_no;
                const std::string row = trim(line);
                if (row.empty()) continue;
                if (row == "EOF" || row == "-1") {
                    done = true;
                    break;
                }
                std::istringstream iss(row);
                NodeCoord c;
                if (!(iss >> c.id >> c.x >> c.y)) fail_parse(line_no, "expected '<id> <x> <y>', got '" + row + "'");
                out.coords.push_back(c);
            }
            done = true;
        } else if (s == "EOF") {
            done = true;
        } else {
            std::string key, value;
            if (!split_keyword_line(s, key, value)) fail_parse(line_no, "malformed keyword line '" + s + "'");
            if (key == "NAME") {
                out.header.name = value;
            } else if (key == "DIMENSION") {
                int dim = 0;
                const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), dim);
                if (ec != std::errc() || p != value.data() + value.size())
                    fail_parse(line_no, "DIMENSION is not an integer: '" + value + "'");
                out.header.dimension = dim;
                saw_dimension = true;
            } else if (key == "EDGE_WEIGHT_TYPE") {
                if (value != "EUC_2D")
                    throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + value + "' (only EUC_2D)");
                out.header.edge_weight_type = EdgeWeightType::euc2d;
                saw_weight_type = true;
            } else if (key == "TYPE" || key == "COMMENT") {
                // carried by TSPLIB files; nothing to keep
            } else {
                fail_parse(line_no, "unrecognized keyword '" + key + "'");
            }
        }
    }

    if (!saw_dimension) throw StructuralError("missing DIMENSION");
    if (!saw_weight_type) throw StructuralError("missing EDGE_WEIGHT_TYPE");
    if (out.header.dimension < 3)
        throw StructuralError("DIMENSION must be at least 3, got " + std::to_string(out.header.dimension));
    if (static_cast<int>(out.coords.size()) != out.header.dimension)
        throw StructuralError("DIMENSION is " + std::to_string(out.header.dimension) + " but NODE_COORD_SECTION has " +
                              std::to_string(out.coords.size()) + " rows");

    std::sort(out.coords.begin(), out.coords.end(), [](const NodeCoord& a, const NodeCoord& b) { return a.id < b.id; });
    for (int i = 0; i < out.header.dimension; ++i) {
        if (out.coords[static_cast<std::size_t>(i)].id != i + 1)
            throw StructuralError("node ids must cover 1.." + std::to_string(out.header.dimension) + " exactly");
    }
    return out;
}

ParsedInstance load_tsplib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw TsplibError("cannot open file: " + path);
    return parse_tsplib(in);
}

int euc2d_distance(const NodeCoord& a, const NodeCoord& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

namespace {

// Shortest decimal form that parses back to the same double ("37" stays "37").
std::string format_coord(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

}  // namespace

void write_tsplib(const InstanceHeader& header, std::span<const NodeCoord> coords, std::ostream& out) {
    out << "NAME : " << header.name << '\n';
    out << "TYPE : TSP\n";
    out << "DIMENSION : " << header.dimension << '\n';
    out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
    out << "NODE_COORD_SECTION\n";
    for (const NodeCoord& c : coords)
        out << c.id << ' ' << format_coord(c.x) << ' ' << format_coord(c.y) << '\n';
    out << "EOF\n";
}

std::vector<int> read_tour_file(std::istream& in) {
    std::vector<int> tour;
    std::string line;
    bool in_tour = false;
    while (std::getline(in, line)) {
        const std::string s = trim(line);
        if (s.empty()) continue;
        if (!in_tour) {
            if (s == "TOUR_SECTION") in_tour = true;
            continue;
        }
        std::istringstream iss(s);
        int id = 0;
        while (iss >> id) {
            if (id == -1) return tour;
            tour.push_back(id - 1);
        }
        if (s == "EOF") break;
    }
    return tour;
}

std::vector<int> load_tour_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw TsplibError("cannot open file: " + path);
    return read_tour_file(in);
}

}  // namespace rbacs
