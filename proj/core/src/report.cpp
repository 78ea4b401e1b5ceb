#include "freefusion/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace freefusion {

namespace {

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

std::string kv_join(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ' ';
        first = false;
        os << k << '=' << v;
    }
    return os.str();
}

std::string to_text(const RunReport& r, bool with_timing) {
    std::ostringstream os;
    os << "freefusion report (schema " << r.schema << ")\n";
    os << "command: " << r.command << "\n";
    if (!r.config.empty()) os << "config: " << kv_join(r.config) << "\n";
    for (const std::string& n : r.notes) os << "note: " << n << "\n";
    for (const CheckResult& c : r.checks) {
        os << "check: " << c.id << "\n";
        os << "  status: " << c.status << (c.overflow ? " (overflow: partial scan)" : "")
           << "\n";
        if (!c.bounds.empty()) os << "  bounds: " << kv_join(c.bounds) << "\n";
        for (const auto& [k, v] : c.data) os << "  " << k << ": " << v << "\n";
        if (c.counterexamples.empty()) {
            os << "  counterexamples: (none)\n";
        } else {
            os << "  counterexamples (" << c.counterexamples.size() << "):\n";
            for (const std::string& x : c.counterexamples) os << "    - " << x << "\n";
        }
        if (with_timing) os << "  seconds: " << format_seconds(c.seconds) << "\n";
    }
    os << "result: " << (r.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_json(const RunReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.status;
        jc["overflow"] = c.overflow;
        nlohmann::ordered_json jb = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.bounds) jb[k] = v;
        jc["bounds"] = jb;
        nlohmann::ordered_json jd = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.data) jd[k] = v;
        jc["data"] = jd;
        jc["counterexamples"] = c.counterexamples;
        if (with_timing) jc["seconds"] = format_seconds(c.seconds);
        j["checks"].push_back(jc);
    }
    j["result"] = r.all_passed() ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

std::string tsv_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '\t' || ch == '\n') out += ' ';
        else out += ch;
    }
    return out;
}

std::string to_tsv(const RunReport& r, bool with_timing) {
    std::ostringstream os;
    os << "command\tcheck\tstatus\toverflow\tbounds\tdata\tcounterexamples";
    if (with_timing) os << "\tseconds";
    os << "\n";
    for (const CheckResult& c : r.checks) {
        std::ostringstream cx;
        for (std::size_t i = 0; i < c.counterexamples.size(); ++i) {
            if (i) cx << "; ";
            cx << c.counterexamples[i];
        }
        std::ostringstream data;
        {
            bool first = true;
            for (const auto& [k, v] : c.data) {
                if (!first) data << "; ";
                first = false;
                data << k << '=' << v;
            }
        }
        os << tsv_escape(r.command) << '\t' << tsv_escape(c.id) << '\t' << c.status << '\t'
           << (c.overflow ? 1 : 0) << '\t' << tsv_escape(kv_join(c.bounds)) << '\t'
           << tsv_escape(data.str()) << '\t' << tsv_escape(cx.str());
        if (with_timing) os << '\t' << format_seconds(c.seconds);
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string serialize_report(const RunReport& report, ReportFormat format, bool with_timing) {
    switch (format) {
    case ReportFormat::Json: return to_json(report, with_timing);
    case ReportFormat::Tsv: return to_tsv(report, with_timing);
    case ReportFormat::Text: break;
    }
    return to_text(report, with_timing);
}

} // namespace freefusion
