#include "extremal_zeros/report.hpp"

#include <algorithm>
#include <sstream>

#include "extremal_zeros/closed_bounds.hpp"

namespace extremal_zeros {

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::OneMinusXnn: return "one_minus_xnn";
        case Quantity::OnePlusX1n: return "one_plus_x1n";
        case Quantity::OneMinusXnnSq: return "one_minus_xnn_sq";
        case Quantity::SmallestLaguerreZero: return "smallest_laguerre_zero";
    }
    return "?";
}

const char* to_string(Direction d) {
    return d == Direction::Upper ? "upper" : "lower";
}

const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Thm1E1: return "THM1_E1";
        case BoundSource::Thm1E2: return "THM1_E2";
        case BoundSource::Thm2E1: return "THM2_E1";
        case BoundSource::Thm2E2: return "THM2_E2";
        case BoundSource::Thm3: return "THM3";
        case BoundSource::Cor1: return "COR1";
        case BoundSource::ThmA: return "THM_A";
        case BoundSource::CorA: return "COR_A";
        case BoundSource::ThmB: return "THM_B";
        case BoundSource::ThmC: return "THM_C";
        case BoundSource::GuptaMuldoon: return "GUPTA_MULDOON";
        case BoundSource::DriverJordaan: return "DRIVER_JORDAAN";
        case BoundSource::K2Bound: return "K2_BOUND";
    }
    return "?";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string value_or_empty(const std::optional<Numeric>& v, int digits) {
    return v ? to_decimal(*v, digits) : std::string();
}

}  // namespace

std::string to_csv_line(const OutputRecord& r, int digits) {
    std::ostringstream os;
    os << csv_quote(r.family) << ',' << r.n << ',' << csv_quote(r.params) << ','
       << csv_quote(r.quantity) << ',' << csv_quote(r.method) << ','
       << value_or_empty(r.value, digits) << ',' << r.direction << ','
       << (r.applicable ? "yes" : "no") << ',' << value_or_empty(r.oracle, digits) << ','
       << r.pass;
    return os.str();
}

std::string to_csv(const std::vector<OutputRecord>& rows, int digits) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += to_csv_line(r, digits);
        out += '\n';
    }
    return out;
}

std::string to_table(const std::vector<OutputRecord>& rows, int digits) {
    const std::vector<std::string> header = {"family", "n",     "params", "quantity",
                                             "method", "value", "dir",    "appl",
                                             "oracle", "pass"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const auto& r : rows) {
        cells.push_back({r.family, std::to_string(r.n), r.params, r.quantity, r.method,
                         value_or_empty(r.value, digits), r.direction,
                         r.applicable ? "yes" : "no", value_or_empty(r.oracle, digits),
                         r.pass});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace extremal_zeros
