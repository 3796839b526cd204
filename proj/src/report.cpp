#include "famval/report.hpp"

#include <cstdio>

namespace famval {

namespace {

std::string format_with(const char* spec, double v) {
    if (v == 0.0) {
        v = 0.0;  // fold -0 into 0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string fmt_num(double v) {
    return format_with("%.10g", v);
}

std::string fmt_num_exact(double v) {
    return format_with("%.17g", v);
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

void RecordWriter::key(std::string_view k) {
    if (!body_.empty()) {
        body_ += ',';
    }
    body_ += '"';
    body_ += json_escape(k);
    body_ += "\":";
}

RecordWriter& RecordWriter::add(std::string_view k, double value) {
    key(k);
    body_ += fmt_num(value);
    return *this;
}

RecordWriter& RecordWriter::add(std::string_view k, std::string_view value) {
    key(k);
    body_ += '"';
    body_ += json_escape(value);
    body_ += '"';
    return *this;
}

RecordWriter& RecordWriter::add(std::string_view k, std::int64_t value) {
    key(k);
    body_ += std::to_string(value);
    return *this;
}

RecordWriter& RecordWriter::add_null(std::string_view k) {
    key(k);
    body_ += "null";
    return *this;
}

std::string RecordWriter::str() const {
    return "{" + body_ + "}";
}

}  // namespace famval
