#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace famval {

/// Fixed 10-significant-digit decimal rendering ("%.10g"); -0 normalizes
/// to 0 so reports are byte-stable.
std::string fmt_num(double v);

/// Full-precision rendering ("%.17g") for values that must round-trip
/// exactly, e.g. scenario files written by `calibrate`.
std::string fmt_num_exact(double v);

/// One flat JSON record, keys kept in insertion order. Emitted as a single
/// line so each record is self-delimiting.
class RecordWriter {
public:
    RecordWriter& add(std::string_view key, double value);
    RecordWriter& add(std::string_view key, std::string_view value);
    RecordWriter& add(std::string_view key, std::int64_t value);
    RecordWriter& add_null(std::string_view key);

    std::string str() const;  // {"k":v,...}

private:
    std::string body_;
    void key(std::string_view k);
};

/// Escapes a string for embedding in JSON output.
std::string json_escape(std::string_view s);

}  // namespace famval
