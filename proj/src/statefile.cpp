#include "distkit/statefile.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace distkit {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string serialize_state(const BipartiteState& s) {
    nlohmann::ordered_json root;
    root["version"] = 1;
    root["dims"] = {s.dim_a(), s.dim_b()};
    nlohmann::ordered_json matrix = nlohmann::json::array();
    const CMatrix& rho = s.rho();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            row.push_back({rho(i, j).real(), rho(i, j).imag()});
        }
        matrix.push_back(std::move(row));
    }
    root["matrix"] = std::move(matrix);
    return root.dump() + "\n";
}

BipartiteState parse_state(const std::string& text, double tol) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("state file: malformed JSON: ") + e.what());
    }
    try {
        if (!root.is_object()) {
            throw ParameterError("state file: top level must be an object");
        }
        if (!root.contains("version") || !root["version"].is_number_integer() ||
            root["version"].get<int>() != 1) {
            throw ParameterError("state file: unsupported or missing version (expected 1)");
        }
        const auto& dims = root.at("dims");
        if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
            !dims[1].is_number_integer()) {
            throw ParameterError("state file: dims must be a pair of integers");
        }
        const int da = dims[0].get<int>();
        const int db = dims[1].get<int>();
        if (da < 1 || db < 1) {
            throw ParameterError("state file: dims must be positive");
        }
        const std::size_t d = static_cast<std::size_t>(da) * static_cast<std::size_t>(db);
        if (d > 4096) {
            throw ParameterError("state file: composite dimension " + std::to_string(d) +
                                 " is unreasonably large");
        }
        const auto& matrix = root.at("matrix");
        if (!matrix.is_array() || matrix.size() != d) {
            throw ParameterError("state file: matrix must have " + std::to_string(d) + " rows");
        }
        CMatrix rho(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < d; ++i) {
            const auto& row = matrix[i];
            if (!row.is_array() || row.size() != d) {
                throw ParameterError("state file: row " + std::to_string(i) + " must have " +
                                     std::to_string(d) + " entries");
            }
            for (std::size_t j = 0; j < d; ++j) {
                const auto& entry = row[j];
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                    !entry[1].is_number()) {
                    throw ParameterError("state file: entries must be [re, im] number pairs");
                }
                const double re = entry[0].get<double>();
                const double im = entry[1].get<double>();
                if (!std::isfinite(re) || !std::isfinite(im)) {
                    throw ParameterError("state file: non-finite entry at (" + std::to_string(i) +
                                         ", " + std::to_string(j) + ")");
                }
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {re, im};
            }
        }
        return BipartiteState(da, db, std::move(rho), tol);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("state file: ") + e.what());
    }
}

void write_state_file(const std::filesystem::path& path, const BipartiteState& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << serialize_state(s);
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

BipartiteState read_state_file(const std::filesystem::path& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path.string());
    }
    return parse_state(buffer.str(), tol);
}

} // namespace distkit
