#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "power.hpp"
#include "tensor.hpp"

namespace tennorm {

/// Thrown on malformed tensor files; message carries the parse position.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tensor file format: a JSON object with an integer array "shape" and a
/// row-major real array "data"; an optional "comment" string is ignored.
inline Tensor read_tensor(std::istream& in, const std::string& origin = "<stream>") {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("shape") || !j.contains("data"))
        throw parse_error(origin + ": expected object with \"shape\" and \"data\" fields");
    std::vector<std::size_t> shape;
    for (const auto& v : j.at("shape")) {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw parse_error(origin + ": shape entries must be positive integers");
        shape.push_back(v.get<std::size_t>());
    }
    std::vector<double> data;
    for (const auto& v : j.at("data")) {
        if (!v.is_number())
            throw parse_error(origin + ": data entries must be numbers");
        data.push_back(v.get<double>());
    }
    try {
        return Tensor(std::move(shape), std::move(data));
    } catch (const std::invalid_argument& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

inline Tensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    return read_tensor(in, path);
}

inline void write_tensor(std::ostream& out, const Tensor& t, const std::string& comment = "") {
    nlohmann::json j;
    if (!comment.empty()) j["comment"] = comment;
    j["shape"] = t.shape();
    j["data"] = std::vector<double>(t.data().begin(), t.data().end());
    out << j.dump(2) << "\n";
}

inline void write_tensor_file(const std::string& path, const Tensor& t,
                              const std::string& comment = "") {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    write_tensor(out, t, comment);
}

/// Trace export: header row naming the columns, then one comma-separated
/// row per iteration in request order.
inline void write_trace(std::ostream& out, const GelfandTrace& trace,
                        const std::vector<TensorNormKind>& norms) {
    out << "m";
    for (auto k : norms) out << ",r_" << norm_kind_name(k);
    out << ",L\n";
    out << std::setprecision(15);
    for (const auto& row : trace.rows) {
        out << row.m;
        for (auto k : norms) out << "," << row.r_values.at(k);
        out << "," << row.log_scale << "\n";
    }
}

}  // namespace tennorm
