#pragma once

/**
 * @file io.hpp
 * @brief Flat serialization of census records and verification reports.
 *
 * Records are flattened to a fixed 13-column row of strings; the csv and
 * jsonl writers share that row, so the two formats always agree column for
 * column. Empty string means "not applicable" and becomes null in json.
 * Writers are deterministic byte for byte, and rows survive a read/write
 * round trip unchanged.
 */

#include "census.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace seifert {

struct RecordRow {
    std::string slopes;     // "b1/a1;b2/a2;..."
    std::string euler;      // exact fraction "p/q"
    std::string b0;         // integer
    std::string homology;   // integral | non-integral | none
    std::string epsilon;    // 1 | -1 | ""
    std::string geometry;   // spherical | nil | sl2r | ""
    std::string chi;        // exact fraction | ""
    std::string verdict;    // admits | no_taut | not_applicable
    std::string regularity; // analytic | C2 | C0 | ""
    std::string witness_m;
    std::string witness_alpha;
    std::string constructed_branch;
    std::string verified; // true | false | ""

    bool operator==(const RecordRow&) const = default;
};

inline const std::array<const char*, 13>& record_columns() {
    static const std::array<const char*, 13> cols = {
        "slopes",     "euler",     "b0",           "homology",      "epsilon",
        "geometry",   "chi",       "verdict",      "regularity",    "witness_m",
        "witness_alpha", "constructed_branch", "verified"};
    return cols;
}

namespace detail {

inline std::array<std::string*, 13> row_fields(RecordRow& r) {
    return {&r.slopes,     &r.euler,        &r.b0,       &r.homology,
            &r.epsilon,    &r.geometry,     &r.chi,      &r.verdict,
            &r.regularity, &r.witness_m,    &r.witness_alpha,
            &r.constructed_branch, &r.verified};
}

inline std::array<const std::string*, 13> row_fields(const RecordRow& r) {
    return {&r.slopes,     &r.euler,        &r.b0,       &r.homology,
            &r.epsilon,    &r.geometry,     &r.chi,      &r.verdict,
            &r.regularity, &r.witness_m,    &r.witness_alpha,
            &r.constructed_branch, &r.verified};
}

// Columns holding integers, emitted as json numbers when they fit.
inline bool integer_column(std::size_t i) {
    return i == 2 || i == 4 || i == 9 || i == 10;
}

inline bool fits_int64(const std::string& s, long long& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

} // namespace detail

inline std::string slope_list_text(const SeifertInvariant& m) {
    std::string s;
    for (std::size_t i = 0; i < m.slopes.size(); ++i) {
        if (i) s += ";";
        s += m.slopes[i].value().str();
    }
    return s;
}

inline std::vector<std::pair<Int, Int>> parse_slope_list(const std::string& text) {
    std::vector<std::pair<Int, Int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(';', pos);
        if (next == std::string::npos) next = text.size();
        std::string part = text.substr(pos, next - pos);
        std::size_t bar = part.find('/');
        if (bar == std::string::npos)
            fail(ErrorKind::ParseError, "slope list entry missing '/': " + part);
        out.emplace_back(Int(part.substr(0, bar)), Int(part.substr(bar + 1)));
        pos = next + 1;
    }
    return out;
}

inline RecordRow to_row(const CensusRecord& rec) {
    RecordRow r;
    r.slopes = slope_list_text(rec.invariant);
    r.euler = rec.homology.euler.str();
    r.b0 = rec.invariant.b0().str();
    switch (rec.homology.tag) {
    case HomologyTag::ZHS: r.homology = "integral"; break;
    case HomologyTag::NonIntegralQHS: r.homology = "non-integral"; break;
    case HomologyTag::NotQHS: r.homology = "none"; break;
    }
    if (rec.homology.tag == HomologyTag::ZHS)
        r.epsilon = std::to_string(rec.homology.epsilon);
    if (rec.geom) {
        switch (rec.geom->tag) {
        case GeometryTag::Spherical: r.geometry = "spherical"; break;
        case GeometryTag::Nil: r.geometry = "nil"; break;
        case GeometryTag::SL2R: r.geometry = "sl2r"; break;
        }
        r.chi = rec.geom->chi.str();
    }
    switch (rec.verdict.tag) {
    case VerdictTag::AdmitsTautAnalytic:
        r.verdict = "admits";
        r.regularity = "analytic";
        break;
    case VerdictTag::NoTautC2:
        r.verdict = "no_taut";
        r.regularity = "C2";
        break;
    case VerdictTag::NoTautC0:
        r.verdict = "no_taut";
        r.regularity = "C0";
        break;
    case VerdictTag::NotApplicable: r.verdict = "not_applicable"; break;
    }
    if (rec.verdict.witness) {
        r.witness_m = rec.verdict.witness->m.str();
        r.witness_alpha = rec.verdict.witness->alpha.str();
    }
    if (rec.constructed) {
        r.constructed_branch = to_string(rec.constructed->branch);
        r.verified = rec.constructed->verified ? "true" : "false";
    }
    return r;
}

// ---- csv ----

inline std::string csv_escape(const std::string& field) {
    bool quote = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!quote) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline void write_csv_header(std::ostream& os) {
    const auto& cols = record_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ',';
        os << cols[i];
    }
    os << '\n';
}

inline void write_csv_row(std::ostream& os, const RecordRow& r) {
    auto fields = detail::row_fields(r);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(*fields[i]);
    }
    os << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<RecordRow>& rows) {
    write_csv_header(os);
    for (const auto& r : rows) write_csv_row(os, r);
}

namespace detail {

// One csv record, quote-aware; multi-line quoted fields are handled.
inline bool read_csv_fields(std::istream& is, std::vector<std::string>& fields) {
    fields.clear();
    int c = is.get();
    if (c == std::char_traits<char>::eof()) return false;
    std::string cur;
    bool in_quotes = false;
    for (;; c = is.get()) {
        if (c == std::char_traits<char>::eof()) {
            fields.push_back(cur);
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (is.peek() == '"') {
                    cur += '"';
                    is.get();
                } else {
                    in_quotes = false;
                }
            } else {
                cur += ch;
            }
            continue;
        }
        if (ch == '"' && cur.empty()) {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch == '\n') {
            fields.push_back(cur);
            return true;
        } else if (ch == '\r') {
            // tolerate crlf input
        } else {
            cur += ch;
        }
    }
}

} // namespace detail

inline std::vector<RecordRow> read_csv(std::istream& is) {
    std::vector<std::string> fields;
    if (!detail::read_csv_fields(is, fields))
        fail(ErrorKind::IoError, "csv input is empty");
    if (fields.size() != record_columns().size())
        fail(ErrorKind::ParseError, "csv header has wrong column count");
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i] != record_columns()[i])
            fail(ErrorKind::ParseError, "unexpected csv column '" + fields[i] + "'");
    std::vector<RecordRow> rows;
    while (detail::read_csv_fields(is, fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing newline
        if (fields.size() != record_columns().size())
            fail(ErrorKind::ParseError, "csv row has wrong column count");
        RecordRow r;
        auto dst = detail::row_fields(r);
        for (std::size_t i = 0; i < dst.size(); ++i) *dst[i] = std::move(fields[i]);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---- jsonl ----

inline nlohmann::ordered_json row_json(const RecordRow& r) {
    nlohmann::ordered_json j;
    auto fields = detail::row_fields(r);
    const auto& cols = record_columns();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string& v = *fields[i];
        if (v.empty()) {
            j[cols[i]] = nullptr;
        } else if (v == "true" && i == 12) {
            j[cols[i]] = true;
        } else if (v == "false" && i == 12) {
            j[cols[i]] = false;
        } else if (long long x; detail::integer_column(i) && detail::fits_int64(v, x)) {
            j[cols[i]] = x;
        } else {
            j[cols[i]] = v;
        }
    }
    return j;
}

inline RecordRow row_from_json(const nlohmann::ordered_json& j) {
    RecordRow r;
    auto dst = detail::row_fields(r);
    const auto& cols = record_columns();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (!j.contains(cols[i]))
            fail(ErrorKind::ParseError, std::string("json row missing key '") + cols[i] + "'");
        const auto& v = j.at(cols[i]);
        if (v.is_null())
            *dst[i] = "";
        else if (v.is_boolean())
            *dst[i] = v.get<bool>() ? "true" : "false";
        else if (v.is_number_integer())
            *dst[i] = std::to_string(v.get<long long>());
        else if (v.is_string())
            *dst[i] = v.get<std::string>();
        else
            fail(ErrorKind::ParseError, std::string("json row key '") + cols[i] +
                                            "' has an unexpected type");
    }
    return r;
}

inline void write_jsonl_row(std::ostream& os, const RecordRow& r) {
    os << row_json(r).dump() << '\n';
}

inline void write_jsonl(std::ostream& os, const std::vector<RecordRow>& rows) {
    for (const auto& r : rows) write_jsonl_row(os, r);
}

inline std::vector<RecordRow> read_jsonl(std::istream& is) {
    std::vector<RecordRow> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorKind::ParseError, std::string("bad jsonl line: ") + e.what());
        }
        rows.push_back(row_from_json(j));
    }
    return rows;
}

// ---- construction traces ----

namespace detail {

inline nlohmann::ordered_json int_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

} // namespace detail

inline nlohmann::ordered_json trace_json(const WitnessTrace& t) {
    nlohmann::ordered_json j;
    j["epsilon"] = t.epsilon;
    j["flipped"] = t.flipped;
    j["step1"] = to_string(t.step1);
    j["branch"] = to_string(t.branch);
    if (t.quantities) {
        nlohmann::ordered_json q;
        q["alpha1"] = t.quantities->alpha1.str();
        q["alpha2"] = t.quantities->alpha2.str();
        q["a"] = detail::int_json(t.quantities->a);
        q["b"] = detail::int_json(t.quantities->b);
        q["N"] = detail::int_json(t.quantities->N);
        q["r"] = t.quantities->r.str();
        q["r_prime"] = t.quantities->r_prime.str();
        q["r_second"] = t.quantities->r_second.str();
        j["quantities"] = std::move(q);
    } else {
        j["quantities"] = nullptr;
    }
    if (t.bezout) {
        nlohmann::ordered_json bz;
        bz["u"] = detail::int_json(t.bezout->u);
        bz["v"] = detail::int_json(t.bezout->v);
        bz["p"] = detail::int_json(t.bezout->p);
        j["bezout"] = std::move(bz);
    } else {
        j["bezout"] = nullptr;
    }
    j["witness_m"] = detail::int_json(t.result.m);
    j["witness_alpha"] = detail::int_json(t.result.alpha);
    j["verified"] = t.verified;
    return j;
}

// ---- verification reports ----

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["claim"] = rep.claim;
    j["bounds"] = rep.bounds;
    j["checked"] = rep.checked;
    j["passed"] = rep.passed();
    j["failures"] = rep.failures;
    j["exceptions"] = rep.exceptions;
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.tallies) t[k] = v;
    j["tallies"] = std::move(t);
    return j;
}

// Long-format table: one row per count, exception, and failure.
inline void write_report_csv(std::ostream& os, const VerificationReport& rep,
                             bool header = true) {
    if (header) os << "claim,bounds,kind,detail,count\n";
    auto line = [&](const char* kind, const std::string& detail, long long count) {
        os << csv_escape(rep.claim) << ',' << csv_escape(rep.bounds) << ',' << kind << ','
           << csv_escape(detail) << ',' << count << '\n';
    };
    line("checked", "", rep.checked);
    line("passed", rep.passed() ? "true" : "false", 1);
    for (const auto& [k, v] : rep.tallies) line("tally", k, v);
    for (const auto& e : rep.exceptions) line("exception", e, 1);
    for (const auto& f : rep.failures) line("failure", f, 1);
}

inline void print_report(std::ostream& os, const VerificationReport& rep) {
    os << rep.claim << " [" << rep.bounds << "]: " << (rep.passed() ? "pass" : "FAIL")
       << " (" << rep.checked << " checked";
    if (!rep.exceptions.empty()) os << ", " << rep.exceptions.size() << " exceptions";
    os << ")\n";
    for (const auto& [k, v] : rep.tallies) os << "  " << k << ": " << v << '\n';
    for (const auto& e : rep.exceptions) os << "  exception: " << e << '\n';
    for (const auto& f : rep.failures) os << "  failure: " << f << '\n';
}

} // namespace seifert
