#include "coslab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coslab/error.hpp"

namespace coslab {

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
        throw invalid_input("matrix_from_json: expected {dim, re, im}");
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim < 1) throw invalid_input("matrix_from_json: dim must be >= 1");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(dim) ||
        im.size() != static_cast<std::size_t>(dim))
        throw invalid_input("matrix_from_json: re/im must be dim x dim arrays");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& rrow = re.at(i);
        const auto& irow = im.at(i);
        if (rrow.size() != static_cast<std::size_t>(dim) ||
            irow.size() != static_cast<std::size_t>(dim))
            throw invalid_input("matrix_from_json: re/im must be dim x dim arrays");
        for (Eigen::Index k = 0; k < dim; ++k) {
            const double x = rrow.at(k).get<double>();
            const double y = irow.at(k).get<double>();
            if (!std::isfinite(x) || !std::isfinite(y))
                throw invalid_input("matrix_from_json: entries must be finite");
            m(i, k) = Complex(x, y);
        }
    }
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            rrow.push_back(m(i, k).real());
            irow.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return nlohmann::json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

FamilyDescriptor descriptor_from_json(const nlohmann::json& j) {
    FamilyDescriptor d;
    if (j.contains("kind")) {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "cosine")
            d.kind = FamilyKind::cosine;
        else if (kind == "semigroup")
            d.kind = FamilyKind::semigroup;
        else
            throw invalid_input("descriptor_from_json: kind must be cosine or semigroup");
    }
    if (j.contains("taylor_terms")) {
        d.options.taylor_terms = j.at("taylor_terms").get<int>();
        if (d.options.taylor_terms < 1)
            throw invalid_input("descriptor_from_json: taylor_terms must be >= 1");
    }
    if (j.contains("scaling_threshold")) {
        d.options.scaling_threshold = j.at("scaling_threshold").get<double>();
        if (!(d.options.scaling_threshold > 0.0))
            throw invalid_input("descriptor_from_json: scaling_threshold must be > 0");
    }
    return d;
}

nlohmann::json complex_to_json(Complex z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const ResolventReport& report) {
    return nlohmann::json{{"lambda", complex_to_json(report.lambda)},
                          {"s", report.s},
                          {"s_matrix", matrix_to_json(report.s_matrix)},
                          {"resolvent", matrix_to_json(report.resolvent)},
                          {"identity_residual", report.identity_residual},
                          {"bound_slack", report.bound_slack}};
}

nlohmann::json to_json(const LawVerdict& verdict) {
    return nlohmann::json{{"law", law_name(verdict.law)},
                          {"measured", verdict.measured},
                          {"threshold", verdict.threshold},
                          {"conclusion", verdict.conclusion}};
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return std::string(buf);
}

void write_csv(const std::string& path, const nlohmann::json& config, const CsvTable& table) {
    std::ostringstream out;
    out << "# config " << config.dump() << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ",";
        out << table.header[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw invalid_input("write_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
    write_text(path, out.str());
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw invalid_input("write_text: cannot open " + path);
    f << content;
    if (!f) throw invalid_input("write_text: write failed for " + path);
}

void write_report(const std::string& path, const nlohmann::json& config, nlohmann::json body) {
    body["config"] = config;
    write_text(path, body.dump(2) + "\n");
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw invalid_input("load_json: cannot open " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("load_json: parse error: ") + e.what());
    }
    return j;
}

}  // namespace coslab
