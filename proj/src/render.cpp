#include "riordan/render.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ValidationError("unknown output format '" + name + "' (expected table, csv or json)");
}

json series_json(const RatSeries& f) {
    json coeffs = json::array();
    for (int n = 0; n <= f.order(); ++n) coeffs.push_back(f.coeff(n).str());
    return json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

json matrix_json(const TriMatrix& m) {
    json rows = json::array();
    for (int n = 0; n < m.dim(); ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(m.at(n, k).str());
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

json pair_json(const RiordanPair& p) {
    return json{{"g", series_json(p.g())}, {"phi", series_json(p.phi())}};
}

namespace {
json monomial_json(const Monomial& m) {
    json factors = json::array();
    for (const auto& [v, e] : m.factors()) factors.push_back(json::array({v, e}));
    return factors;
}
} // namespace

json graded_poly_json(const GradedPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.poly().terms())
        terms.push_back(json{{"coeff", c.str()}, {"monomial", monomial_json(m)}});
    return json{{"family", family_name(p.family())}, {"terms", std::move(terms)}};
}

json tensor_poly_json(const TensorPoly& t) {
    json terms = json::array();
    for (const auto& [m, c] : t.terms())
        terms.push_back(json{{"coeff", c.str()},
                             {"left", monomial_json(m.first)},
                             {"right", monomial_json(m.second)}});
    return json{{"left_family", family_name(t.left_family())},
                {"right_family", family_name(t.right_family())},
                {"terms", std::move(terms)}};
}

namespace {
std::string joined_coeffs(const RatSeries& f, char sep) {
    std::string out;
    for (int n = 0; n <= f.order(); ++n) {
        if (n > 0) out += sep;
        out += f.coeff(n).str();
    }
    return out;
}

std::string joined_matrix(const TriMatrix& m, char sep) {
    std::string out;
    for (int n = 0; n < m.dim(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k > 0) out += sep;
            out += m.at(n, k).str();
        }
        out += '\n';
    }
    return out;
}
} // namespace

std::string series_table(const RatSeries& f) { return joined_coeffs(f, ' ') + "\n"; }
std::string series_csv(const RatSeries& f) { return joined_coeffs(f, ',') + "\n"; }
std::string matrix_table(const TriMatrix& m) { return joined_matrix(m, ' '); }
std::string matrix_csv(const TriMatrix& m) { return joined_matrix(m, ','); }

std::string render_series(const RatSeries& f, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table: return series_table(f);
    case OutputFormat::Csv: return series_csv(f);
    case OutputFormat::Json: return series_json(f).dump() + "\n";
    }
    return {};
}

std::string render_matrix(const TriMatrix& m, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table: return matrix_table(m);
    case OutputFormat::Csv: return matrix_csv(m);
    case OutputFormat::Json: return matrix_json(m).dump() + "\n";
    }
    return {};
}

std::string render_pair(const RiordanPair& p, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table:
        return "g:   " + joined_coeffs(p.g(), ' ') + "\nphi: " + joined_coeffs(p.phi(), ' ') + "\n";
    case OutputFormat::Csv:
        return joined_coeffs(p.g(), ',') + "\n" + joined_coeffs(p.phi(), ',') + "\n";
    case OutputFormat::Json:
        return pair_json(p).dump() + "\n";
    }
    return {};
}

std::string render_graded_poly(const GradedPoly& p, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table:
    case OutputFormat::Csv: return p.str() + "\n";
    case OutputFormat::Json: return graded_poly_json(p).dump() + "\n";
    }
    return {};
}

std::string render_tensor_poly(const TensorPoly& t, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Table:
    case OutputFormat::Csv: return t.str() + "\n";
    case OutputFormat::Json: return tensor_poly_json(t).dump() + "\n";
    }
    return {};
}

} // namespace riordan
