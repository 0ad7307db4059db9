#ifndef SEXTIC_TEXTIO_HPP
#define SEXTIC_TEXTIO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sextic {

// "%.17g" — every double round-trips and identical inputs give identical
// bytes, which the command-line payload contract relies on.
std::string fmt17(double v);

// Minimal streaming JSON writer with explicit 17-significant-digit number
// formatting and caller-controlled key order.  nlohmann/json is used on the
// consuming side (tests) to parse and validate these payloads; emitting
// through it would surrender control of the number format.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view s);
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value_array(const std::vector<double>& vs);

private:
    void separator();
    std::ostream& out_;
    std::vector<bool> first_in_scope_{};
    bool pending_key_ = false;
};

} // namespace sextic

#endif
