#ifndef SKEW_REPORT_HPP
#define SKEW_REPORT_HPP

#include <cstdint>
#include <iosfwd>

namespace skew {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// One-shot verification harness: runs the full claim grid and prints a
/// pass/fail table. Output contains no timings or machine-dependent
/// counts, so identical options give byte-identical reports for any
/// thread count.
struct ReportOptions {
    enum class Grid { Small, Full };
    Grid grid = Grid::Full;
    int threads = 1;
    bool stretch = false;  // also attempt mu(Q_5(4)) = 7 exactly
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
};

/// Returns the number of failed checks (0 = all pass).
int paper_report(const ReportOptions& opt, std::ostream& out);

}  // namespace skew

#endif
