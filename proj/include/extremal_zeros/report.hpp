#ifndef EXTREMAL_ZEROS_REPORT_HPP
#define EXTREMAL_ZEROS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "extremal_zeros/format.hpp"
#include "extremal_zeros/numeric.hpp"

namespace extremal_zeros {

/// One structured result row.  Rendering is deterministic: fixed column
/// order, round-half-even decimals, no timestamps.
struct OutputRecord {
    std::string family;     // jacobi | gegenbauer | laguerre | identity | inequality | limit
    int n = 0;              // 0 when not meaningful
    std::string params;     // e.g. "alpha=0;beta=1/2" (input spellings)
    std::string quantity;   // e.g. one_minus_xnn
    std::string method;     // bound/check identifier, e.g. THM1_E1, EQ8_K3
    std::optional<Numeric> value;
    std::string direction;  // upper | lower | ""
    bool applicable = true;
    std::optional<Numeric> oracle;
    std::string pass;       // pass | fail | skip
};

inline const char* kCsvHeader = "family,n,params,quantity,method,value,direction,applicable,oracle,pass";

std::string to_csv_line(const OutputRecord& r, int digits);

/// Full CSV document (header + rows), LF line endings, '.' decimal point.
std::string to_csv(const std::vector<OutputRecord>& rows, int digits);

/// Fixed-width human-readable table of the same rows.
std::string to_table(const std::vector<OutputRecord>& rows, int digits);

}  // namespace extremal_zeros

#endif
