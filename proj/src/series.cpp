#include "fgof/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fgof/errors.hpp"

namespace fgof {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_number(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool is_missing(const std::string& field) {
    const std::string t = trim(field);
    return t.empty() || t == "NA" || t == "na" || t == "NaN" || t == "nan" || t == ".";
}

char detect_delimiter(const std::string& line) {
    if (line.find(',') != std::string::npos) return ',';
    if (line.find('\t') != std::string::npos) return '\t';
    if (line.find(';') != std::string::npos) return ';';
    return ' ';
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    if (delim == ' ') {
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) out.push_back(tok);
        return out;
    }
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SeriesFile read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open " + path);

    SeriesFile out;
    std::string line;
    int row = 0;
    char delim = 0;
    bool saw_data = false;

    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            ++out.skipped_count;
            continue;
        }
        if (delim == 0) delim = detect_delimiter(line);

        const std::vector<std::string> fields = split(line, delim);
        if (fields.size() < 2)
            raise(Errc::parse_error, path + ":" + std::to_string(row) + ": expected two columns");

        double label;
        if (!parse_number(fields[0], label)) {
            // one non-numeric leading row passes as a header
            if (!saw_data && out.parsed_count == 0 && out.skipped_count == 0) continue;
            raise(Errc::parse_error,
                  path + ":" + std::to_string(row) + ": bad label '" + trim(fields[0]) + "'");
        }
        saw_data = true;

        if (is_missing(fields[1])) {
            ++out.skipped_count;
            continue;
        }
        double value;
        if (!parse_number(fields[1], value))
            raise(Errc::parse_error,
                  path + ":" + std::to_string(row) + ": bad value '" + trim(fields[1]) + "'");

        if (!out.rows.empty() && label <= out.rows.back().first)
            raise(Errc::parse_error,
                  path + ":" + std::to_string(row) + ": labels must be strictly increasing");
        out.rows.emplace_back(label, value);
        ++out.parsed_count;
    }
    return out;
}

LoadedSeries load_series_detail(const std::string& path, double h) {
    if (h <= 0.0) raise(Errc::domain_error, "bandwidth must be > 0");
    const SeriesFile file = read_series(path);
    if (file.rows.size() < 4)
        raise(Errc::too_few_rows,
              path + ": " + std::to_string(file.rows.size()) + " usable rows, need at least 4");

    const double first = file.rows.front().first;
    const double last = file.rows.back().first;
    const double scale = (1.0 + 2.0 * h) / (last - first);

    std::vector<SamplePoint> pts(file.rows.size());
    for (std::size_t i = 0; i < file.rows.size(); ++i)
        pts[i] = {-h + (file.rows[i].first - first) * scale, file.rows[i].second};

    LoadedSeries out;
    out.sample = Sample::from_points(std::move(pts));
    out.parsed_count = file.parsed_count;
    out.skipped_count = file.skipped_count;
    out.first_label = first;
    out.last_label = last;
    return out;
}

Sample load_series(const std::string& path, double h) {
    return load_series_detail(path, h).sample;
}

}  // namespace fgof
