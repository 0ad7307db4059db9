#include "sextic/textio.hpp"

#include <cmath>
#include <cstdio>

namespace sextic {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_in_scope_.empty()) {
        if (!first_in_scope_.back()) out_ << ',';
        first_in_scope_.back() = false;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ << '{';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    first_in_scope_.pop_back();
    out_ << '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ << '[';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    first_in_scope_.pop_back();
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separator();
    out_ << '"' << name << "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    if (std::isfinite(v))
        out_ << fmt17(v);
    else
        out_ << "null"; // JSON has no NaN/Inf literals
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    separator();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
    separator();
    out_ << '"';
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out_ << '\\';
        out_ << ch;
    }
    out_ << '"';
    return *this;
}

JsonWriter& JsonWriter::value_array(const std::vector<double>& vs) {
    begin_array();
    for (double v : vs) value(v);
    return end_array();
}

} // namespace sextic
