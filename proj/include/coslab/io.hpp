#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coslab/family.hpp"
#include "coslab/laws.hpp"
#include "coslab/matrix.hpp"
#include "coslab/resolvent.hpp"

namespace coslab {

/// Matrix wire format: {"dim": n, "re": [[...]], "im": [[...]]} with row-major
/// real and imaginary parts. Readers reject non-square or non-finite data.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::string& path);

/// Family descriptor: {"kind": "cosine"|"semigroup", "taylor_terms": n,
/// "scaling_threshold": x}; missing fields take the defaults.
struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::cosine;
    EvalOptions options;
};
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
nlohmann::json to_json(const ResolventReport& report);
nlohmann::json to_json(const LawVerdict& verdict);

/// %.15g, the fixed report format for floating-point fields.
std::string format_double(double x);

/// Cells are preformatted strings; numeric columns go through format_double
/// and booleans through 0/1 so that reruns are byte-identical.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Writes "# config {json}", the header row, then the data rows.
void write_csv(const std::string& path, const nlohmann::json& config, const CsvTable& table);

void write_text(const std::string& path, const std::string& content);

/// JSON report with the producing config embedded under "config".
void write_report(const std::string& path, const nlohmann::json& config, nlohmann::json body);

nlohmann::json load_json(const std::string& path);

}  // namespace coslab
