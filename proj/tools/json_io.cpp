#include "json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace symdisc::io {

json complex_to_json(const Complex& c) {
    return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("complex number must be [re, im]");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json tuple_to_json(const std::vector<Complex>& v) {
    json out = json::array();
    for (const Complex& c : v) out.push_back(complex_to_json(c));
    return out;
}

std::vector<Complex> tuple_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a non-empty array");
    std::vector<Complex> out;
    for (const json& e : j) out.push_back(complex_from_json(e));
    return out;
}

json matrix_to_json(const spectral::Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

spectral::Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nested array");
    const std::size_t n = j.size();
    spectral::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) {
            throw std::invalid_argument("matrix must be square");
        }
        for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json verdict_to_json(const geometry::MembershipVerdict& v) {
    return json{{"region", geometry::region_name(v.region)},
                {"max_root_modulus", v.max_root_modulus},
                {"witness_roots", tuple_to_json(v.witness_roots.entries)}};
}

json map_to_json(const maps::BlaschkeProduct& b) {
    return json{{"type", "blaschke"},
                {"zeros", tuple_to_json(b.zeros)},
                {"factor", complex_to_json(b.factor)}};
}

maps::BlaschkeProduct blaschke_from_json(const json& j) {
    if (j.value("type", "") != "blaschke") {
        throw std::invalid_argument("expected {\"type\": \"blaschke\", ...}");
    }
    maps::BlaschkeProduct b;
    if (j.contains("zeros") && !j["zeros"].empty()) b.zeros = tuple_from_json(j["zeros"]);
    if (j.contains("factor")) b.factor = complex_from_json(j["factor"]);
    maps::validate(b);
    return b;
}

maps::LiftedMap lifted_map_from_json(const json& j, int n) {
    std::string type = j.value("type", "");
    if (type == "blaschke") return maps::LiftedMap{blaschke_from_json(j), n};
    if (type == "polynomial") {
        maps::PolySymbol p;
        p.coeffs = tuple_from_json(j.at("coeffs"));
        if (maps::certified_sup_norm(p) > 1.0 + 1e-12) {
            throw std::invalid_argument("polynomial symbol is not bounded by 1 on the disc");
        }
        return maps::LiftedMap{p, n};
    }
    throw std::invalid_argument("map type must be \"blaschke\" or \"polynomial\"");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace symdisc::io
