#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rbacs {

/// One best-so-far record per iteration. Single-colony ACS runs leave
/// red_best empty and mirror their best into both other columns.
struct TraceRow {
    int iteration = 0;  // 1-based
    std::int64_t black_best = 0;
    std::optional<std::int64_t> red_best;
    std::int64_t global_best = 0;

    bool operator==(const TraceRow&) const = default;
};

struct ConvergenceTrace {
    std::vector<TraceRow> rows;

    bool operator==(const ConvergenceTrace&) const = default;
};

}  // namespace rbacs
