#include "sensegen/csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace sensegen {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

double parse_double(const std::string& text, int line) {
    if (text.empty()) throw ParseError(line, "empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw ParseError(line, "malformed number '" + text + "'");
    }
    return v;
}

Polarity parse_polarity(const std::string& text, int line) {
    const auto u = upper(text);
    if (u == "ON") return Polarity::On;
    if (u == "OFF") return Polarity::Off;
    throw ParseError(line, "expected ON or OFF, got '" + text + "'");
}

void expect_header(std::istream& in, const std::string& expected) {
    std::string line;
    if (!read_line(in, line)) throw ParseError(1, "missing header");
    if (line != expected) {
        throw ParseError(1, "expected header '" + expected + "', got '" +
                                line + "'");
    }
}

// Howard Hinnant's civil-calendar conversions (public domain algorithms).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
        static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe =
        (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

std::int64_t parse_timestamp(const std::string& text) {
    int y, mo, d, h, mi, s;
    char z = 0, tail = 0;
    if (text.size() != 20 ||
        std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c%c", &y, &mo, &d,
                    &h, &mi, &s, &z, &tail) != 7 ||
        z != 'Z') {
        throw std::invalid_argument("malformed timestamp '" + text +
                                    "' (want YYYY-MM-DDTHH:MM:SSZ)");
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 59 ||
        h < 0 || mi < 0 || s < 0) {
        throw std::invalid_argument("timestamp field out of range in '" +
                                    text + "'");
    }
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_timestamp(std::int64_t seconds) {
    std::int64_t days = seconds / 86400;
    std::int64_t rem = seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, mo, d;
    civil_from_days(days, y, mo, d);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, mo,
                  d, static_cast<int>(rem / 3600),
                  static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60));
    return buf;
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", p);
    return buf;
}

TransitionMatrix parse_matrix_csv(std::istream& in) {
    std::string line;
    if (!read_line(in, line)) throw ParseError(1, "missing header");
    auto header = split_fields(line);
    if (header.size() < 2 || header[0] != "state") {
        throw ParseError(1, "expected header 'state,<s1>,<s2>,...'");
    }

    TransitionMatrix m;
    m.states.assign(header.begin() + 1, header.end());
    const std::size_t n = m.states.size();

    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != n + 1) {
            throw ParseError(lineno, "expected " + std::to_string(n + 1) +
                                         " fields, got " +
                                         std::to_string(fields.size()));
        }
        const std::size_t row = m.rows.size();
        if (row >= n) throw ParseError(lineno, "more rows than header states");
        if (fields[0] != m.states[row]) {
            throw ParseError(lineno, "row label '" + fields[0] +
                                         "' does not match header state '" +
                                         m.states[row] + "'");
        }
        std::vector<double> probs;
        probs.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) {
            probs.push_back(parse_double(fields[j], lineno));
        }
        m.rows.push_back(std::move(probs));
    }
    if (m.rows.size() != n) {
        throw ParseError(lineno, "expected " + std::to_string(n) +
                                     " rows, got " +
                                     std::to_string(m.rows.size()));
    }
    renormalize_rows(m);
    return m;
}

void write_matrix_csv(std::ostream& out, const TransitionMatrix& m) {
    out << "state";
    for (const auto& s : m.states) out << ',' << s;
    out << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        out << m.states[i];
        for (double p : m.rows[i]) out << ',' << format_probability(p);
        out << '\n';
    }
}

std::vector<ActivityRecord> parse_activities_csv(std::istream& in) {
    expect_header(in, "activity,type,sensor,mean_seconds,sd_seconds");
    std::vector<ActivityRecord> records;
    std::string line;
    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw ParseError(lineno, "expected 5 fields, got " +
                                         std::to_string(fields.size()));
        }
        ActivityRecord r;
        r.activity = fields[0];
        if (r.activity.empty()) throw ParseError(lineno, "empty activity");
        r.polarity = parse_polarity(fields[1], lineno);
        r.sensor = fields[2];
        if (r.sensor.empty()) throw ParseError(lineno, "empty sensor name");
        r.duration.mean_s = parse_double(fields[3], lineno);
        r.duration.sd_s = parse_double(fields[4], lineno);
        if (r.duration.mean_s < 0 || r.duration.sd_s < 0) {
            throw ParseError(lineno, "duration stats must be >= 0");
        }
        for (const auto& other : records) {
            if (other.activity == r.activity) {
                throw ParseError(lineno,
                                 "duplicate activity '" + r.activity + "'");
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

void write_activities_csv(std::ostream& out,
                          const std::vector<ActivityRecord>& records) {
    out << "activity,type,sensor,mean_seconds,sd_seconds\n";
    for (const auto& r : records) {
        out << r.activity << ',' << to_string(r.polarity) << ',' << r.sensor
            << ',' << format_probability(r.duration.mean_s) << ','
            << format_probability(r.duration.sd_s) << '\n';
    }
}

EventLog parse_event_log_csv(std::istream& in) {
    expect_header(in, "timestamp,sensor,value");
    EventLog log;
    std::string line;
    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw ParseError(lineno, "expected 3 fields, got " +
                                         std::to_string(fields.size()));
        }
        Event e;
        try {
            e.timestamp = parse_timestamp(fields[0]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(lineno, ex.what());
        }
        if (e.timestamp < 0) {
            throw ParseError(lineno, "timestamp before epoch");
        }
        e.sensor = fields[1];
        if (e.sensor.empty()) throw ParseError(lineno, "empty sensor name");
        if (fields[2] == "1") {
            e.polarity = Polarity::On;
        } else if (fields[2] == "0") {
            e.polarity = Polarity::Off;
        } else {
            e.polarity = parse_polarity(fields[2], lineno);
        }
        if (!log.events.empty() &&
            e.timestamp < log.events.back().timestamp) {
            throw ParseError(lineno, "event log not sorted by timestamp");
        }
        log.events.push_back(std::move(e));
    }
    return log;
}

void write_event_log_csv(std::ostream& out, const EventLog& log) {
    out << "timestamp,sensor,value\n";
    for (const auto& e : log.events) {
        out << format_timestamp(e.timestamp) << ',' << e.sensor << ','
            << (e.polarity == Polarity::On ? '1' : '0') << '\n';
    }
}

AnomalyKind parse_anomaly_kind(const std::string& text) {
    if (text == "activity") return AnomalyKind::Activity;
    if (text == "duration_long") return AnomalyKind::DurationLong;
    if (text == "duration_short") return AnomalyKind::DurationShort;
    if (text == "both") return AnomalyKind::Both;
    throw std::invalid_argument("unknown anomaly kind '" + text + "'");
}

const char* to_string(AnomalyKind kind) {
    switch (kind) {
        case AnomalyKind::Activity: return "activity";
        case AnomalyKind::DurationLong: return "duration_long";
        case AnomalyKind::DurationShort: return "duration_short";
        case AnomalyKind::Both: return "both";
    }
    return "activity";
}

std::vector<AnomalySpec> parse_anomalies_csv(std::istream& in) {
    expect_header(in, "start,end,kind");
    std::vector<AnomalySpec> anomalies;
    std::string line;
    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw ParseError(lineno, "expected 3 fields, got " +
                                         std::to_string(fields.size()));
        }
        AnomalySpec a;
        try {
            a.window_start = parse_timestamp(fields[0]);
            a.window_end = parse_timestamp(fields[1]);
            a.kind = parse_anomaly_kind(fields[2]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(lineno, ex.what());
        }
        if (a.window_start >= a.window_end) {
            throw ParseError(lineno, "anomaly start must precede end");
        }
        anomalies.push_back(a);
    }
    return anomalies;
}

void write_anomalies_csv(std::ostream& out,
                         const std::vector<AnomalySpec>& anomalies) {
    out << "start,end,kind\n";
    for (const auto& a : anomalies) {
        out << format_timestamp(a.window_start) << ','
            << format_timestamp(a.window_end) << ',' << to_string(a.kind)
            << '\n';
    }
}

}  // namespace sensegen
