#ifndef LANDAU_IO_HPP
#define LANDAU_IO_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "landau/field_grid.hpp"

namespace landau::io {

// Doubles are always serialized with 17 significant digits so that every
// emitted number round-trips and repeated runs are byte-identical.
std::string format_g17(double v);

/**
 * Minimal JSON value with insertion-ordered object keys. Covers exactly what
 * the reports need; writing it by hand keeps number formatting and key order
 * under our control, which the deterministic-output contract requires.
 */
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(long long v);
    static Json string(std::string v);
    static Json boolean(bool v);

    void push_back(Json v);                  // array only
    void set(std::string key, Json v);       // object only

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Object, Array, Number, Integer, String, Boolean };
    Kind kind_ = Kind::Object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> members_;

    void dump_to(std::string& out, int indent, int depth) const;
};

// CSV with header exactly "X,Y,rho,jx,jy", one row per sample in input order.
std::string field_csv(std::span<const FieldSample> samples);

void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace landau::io

#endif
