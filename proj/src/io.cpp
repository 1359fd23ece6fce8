#include "landau/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace landau::io {

std::string format_g17(double v) {
    if (std::isnan(v))
        throw std::invalid_argument("format_g17: NaN is not serializable");
    if (std::isinf(v))
        throw std::invalid_argument("format_g17: infinity is not serializable");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}

Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Number;
    j.num_ = v;
    return j;
}

Json Json::integer(long long v) {
    Json j;
    j.kind_ = Kind::Integer;
    j.int_ = v;
    return j;
}

Json Json::string(std::string v) {
    Json j;
    j.kind_ = Kind::String;
    j.str_ = std::move(v);
    return j;
}

Json Json::boolean(bool v) {
    Json j;
    j.kind_ = Kind::Boolean;
    j.bool_ = v;
    return j;
}

void Json::push_back(Json v) {
    if (kind_ != Kind::Array)
        throw std::logic_error("Json::push_back on non-array");
    items_.push_back(std::move(v));
}

void Json::set(std::string key, Json v) {
    if (kind_ != Kind::Object)
        throw std::logic_error("Json::set on non-object");
    members_.emplace_back(std::move(key), std::move(v));
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void indent_to(std::string& out, int indent, int depth) {
    if (indent > 0) {
        out += '\n';
        out.append(static_cast<size_t>(indent) * depth, ' ');
    }
}

} // namespace

void Json::dump_to(std::string& out, int indent, int depth) const {
    switch (kind_) {
    case Kind::Number:
        out += format_g17(num_);
        break;
    case Kind::Integer:
        out += std::to_string(int_);
        break;
    case Kind::String:
        append_escaped(out, str_);
        break;
    case Kind::Boolean:
        out += bool_ ? "true" : "false";
        break;
    case Kind::Array: {
        if (items_.empty()) {
            out += "[]";
            break;
        }
        out += '[';
        for (size_t i = 0; i < items_.size(); ++i) {
            if (i)
                out += ',';
            indent_to(out, indent, depth + 1);
            items_[i].dump_to(out, indent, depth + 1);
        }
        indent_to(out, indent, depth);
        out += ']';
        break;
    }
    case Kind::Object: {
        if (members_.empty()) {
            out += "{}";
            break;
        }
        out += '{';
        for (size_t i = 0; i < members_.size(); ++i) {
            if (i)
                out += ',';
            indent_to(out, indent, depth + 1);
            append_escaped(out, members_[i].first);
            out += indent > 0 ? ": " : ":";
            members_[i].second.dump_to(out, indent, depth + 1);
        }
        indent_to(out, indent, depth);
        out += '}';
        break;
    }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += '\n';
    return out;
}

std::string field_csv(std::span<const FieldSample> samples) {
    std::string out = "X,Y,rho,jx,jy\n";
    for (const FieldSample& s : samples) {
        out += format_g17(s.X);
        out += ',';
        out += format_g17(s.Y);
        out += ',';
        out += format_g17(s.rho);
        out += ',';
        out += format_g17(s.jx);
        out += ',';
        out += format_g17(s.jy);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path.string());
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace landau::io
