#include "evident/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "evident/error.hpp"
#include "json_util.hpp"

namespace evident {

using detail::require_field;
using detail::require_number;
using detail::require_string;
using detail::require_string_list;

void validate(Scenario& s) {
    if (!(s.window > 0.0) || !std::isfinite(s.window)) throw Error(ErrorCode::InvalidWindow, "window must be positive");
    if (!(s.step > 0.0) || !std::isfinite(s.step)) throw Error(ErrorCode::InvalidWindow, "step must be positive");
    if (!(s.discount_rate >= 0.0 && s.discount_rate <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "discount_rate must lie in [0, 1]");
    }
    if (!(s.conflict_threshold > 0.0 && s.conflict_threshold <= 1.0)) {
        throw Error(ErrorCode::InvalidThreshold, "conflict_threshold must lie in (0, 1]");
    }
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
        const auto& r = s.reports[i];
        if (r.focus.frame_id() != s.frame.id()) throw Error(ErrorCode::FrameMismatch, "report focus is on another frame");
        if (r.focus.is_empty()) throw Error(ErrorCode::EmptyFocus, "report " + std::to_string(i) + " has an empty focus");
        if (!(r.degree >= 0.0 && r.degree <= 1.0)) {
            throw Error(ErrorCode::DegreeOutOfRange, "report " + std::to_string(i) + " degree must lie in [0, 1]");
        }
        if (!(r.time >= 0.0) || !std::isfinite(r.time)) {
            throw Error(ErrorCode::InvalidParameter, "report " + std::to_string(i) + " time must be non-negative");
        }
        if (i > 0 && r.time < s.reports[i - 1].time) {
            throw Error(ErrorCode::UnsortedReports, "report " + std::to_string(i) + " is earlier than the one before it");
        }
    }
    std::stable_sort(s.reports.begin(), s.reports.end(), [](const SensorReport& a, const SensorReport& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.sensor_id < b.sensor_id;
    });
}

Scenario load_scenario(std::string_view text) {
    const auto doc = detail::parse_json(text);
    if (!doc.is_object()) throw ParseError(0, "scenario must be an object");
    Scenario s{make_frame(require_string_list(require_field(doc, "frame", "scenario"), "scenario.frame")), {}};

    auto optional_number = [&](const char* key, double fallback) {
        auto it = doc.find(key);
        return it == doc.end() ? fallback : require_number(*it, std::string("scenario.") + key);
    };
    s.window = optional_number("window", kDefaultWindow);
    s.step = optional_number("step", kDefaultStep);
    s.discount_rate = optional_number("discount_rate", 1.0);
    s.conflict_threshold = optional_number("conflict_threshold", kDefaultConflictThreshold);

    const auto& reports = require_field(doc, "reports", "scenario");
    if (!reports.is_array()) throw ParseError(0, "scenario.reports must be a list");
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto where = "report[" + std::to_string(i) + "]";
        const auto& r = reports[i];
        SensorReport report{
            require_string(require_field(r, "sensor", where), where + ".sensor"),
            require_number(require_field(r, "t", where), where + ".t"),
            s.frame.proposition(require_string_list(require_field(r, "focus", where), where + ".focus")),
            require_number(require_field(r, "degree", where), where + ".degree"),
        };
        s.reports.push_back(std::move(report));
    }
    validate(s);
    return s;
}

std::vector<MassFunction> evidence_at(const Scenario& s, double t) {
    std::vector<MassFunction> out;
    for (const auto& r : s.reports) {
        if (r.time > t + kTimeSlack) break;
        if (r.time <= t - s.window + kTimeSlack) continue;
        auto m = simple_support(s.frame, r.focus, r.degree);
        if (s.discount_rate < 1.0) {
            const double age = std::max(0.0, t - r.time);
            m = discount(m, std::pow(s.discount_rate, age));
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

TraceRow make_row(const Scenario& s, double t, const Decision& d, std::size_t fused) {
    TraceRow row;
    row.time = t;
    row.cumulative_conflict = d.cumulative_conflict;
    row.status = d.status;
    row.reason = d.reason;
    row.hypothesis = d.hypothesis;
    row.fused_reports = fused;
    for (std::size_t i = 0; i < s.frame.size(); ++i) {
        const auto& name = s.frame.atom(i);
        auto it = std::find_if(d.ranking.begin(), d.ranking.end(), [&](const RankedAtom& r) { return r.atom == name; });
        row.intervals.push_back({name, it->interval});
    }
    return row;
}

}  // namespace

std::vector<TraceRow> run_scenario(const Scenario& s) {
    std::vector<TraceRow> rows;
    if (s.reports.empty()) return rows;
    const double first = s.reports.front().time;
    const double last = s.reports.back().time;
    const auto steps = static_cast<std::size_t>(std::floor((last - first) / s.step + kTimeSlack));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = first + static_cast<double>(k) * s.step;
        const auto evidence = evidence_at(s, t);
        if (evidence.empty()) {
            rows.push_back(make_row(s, t, decide({vacuous(s.frame), 0.0}, s.conflict_threshold), 0));
            continue;
        }
        try {
            const auto report = combine_all(evidence);
            rows.push_back(make_row(s, t, decide(report, s.conflict_threshold), evidence.size()));
        } catch (const TotalConflictError&) {
            rows.push_back(make_row(s, t, decide({vacuous(s.frame), 1.0}, s.conflict_threshold), evidence.size()));
        }
    }
    return rows;
}

std::string format_real(double value) {
    if (value == 0.0) value = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

namespace {

std::vector<std::string> header_of(const TraceRow& row) {
    std::vector<std::string> header{"time"};
    for (const auto& ai : row.intervals) {
        header.push_back(ai.atom + "_bel");
        header.push_back(ai.atom + "_pl");
    }
    header.insert(header.end(), {"conflict", "status", "hypothesis"});
    return header;
}

std::vector<std::string> fields_of(const TraceRow& row) {
    std::vector<std::string> fields{format_real(row.time)};
    for (const auto& ai : row.intervals) {
        fields.push_back(format_real(ai.interval.support));
        fields.push_back(format_real(ai.interval.plausibility));
    }
    Decision d;
    d.status = row.status;
    d.reason = row.reason;
    fields.push_back(format_real(row.cumulative_conflict));
    fields.push_back(status_label(d));
    fields.push_back(row.hypothesis.value_or(""));
    return fields;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += fields[i];
    }
    return out + '\n';
}

}  // namespace

std::string emit_trace(const std::vector<TraceRow>& rows, TraceFormat format) {
    if (rows.empty()) throw Error(ErrorCode::EmptyTrace, "no trace rows to emit");
    std::vector<std::vector<std::string>> table{header_of(rows.front())};
    for (const auto& row : rows) table.push_back(fields_of(row));

    std::string out;
    if (format == TraceFormat::Csv) {
        for (const auto& fields : table) out += join_csv(fields);
        return out;
    }

    std::vector<std::size_t> widths(table.front().size(), 0);
    for (const auto& fields : table) {
        for (std::size_t c = 0; c < fields.size(); ++c) widths[c] = std::max(widths[c], fields[c].size());
    }
    auto render = [&](const std::vector<std::string>& fields) {
        std::string line;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c > 0) line += "  ";
            line += fields[c];
            line.append(widths[c] - fields[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + '\n';
    };
    out += render(table.front());
    std::size_t rule = 0;
    for (std::size_t w : widths) rule += w;
    out += std::string(rule + 2 * (widths.size() - 1), '-') + '\n';
    for (std::size_t r = 1; r < table.size(); ++r) out += render(table[r]);
    return out;
}

MassBundle parse_masses(std::string_view text) {
    const auto doc = detail::parse_json(text);
    MassBundle bundle{make_frame(require_string_list(require_field(doc, "frame", "masses file"), "frame")), {}};
    const auto& list = require_field(doc, "masses", "masses file");
    if (!list.is_array() || list.empty()) throw ParseError(0, "\"masses\" must be a non-empty list");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto where = "masses[" + std::to_string(i) + "]";
        if (!list[i].is_array()) throw ParseError(0, where + " must be a list of focal entries");
        std::vector<std::pair<Proposition, double>> entries;
        for (std::size_t j = 0; j < list[i].size(); ++j) {
            const auto at = where + "[" + std::to_string(j) + "]";
            const auto& entry = list[i][j];
            entries.emplace_back(
                bundle.frame.proposition(require_string_list(require_field(entry, "focus", at), at + ".focus")),
                require_number(require_field(entry, "mass", at), at + ".mass"));
        }
        bundle.masses.push_back(mass_new(bundle.frame, entries));
    }
    return bundle;
}

}  // namespace evident
