#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liecoh/theorems.hpp"

// JSON forms of algebras, modules, cocycles and verdicts. Rationals are
// reduced "p/q" strings; objects serialize with keys in alphabetical order.
namespace liecoh::io {

using json = nlohmann::json;

inline json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw InvalidInput("expected a rational as \"p/q\" string, got " + j.dump());
}

inline json vector_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row_vector(i)));
    return rows;
}

inline json subspace_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis) a.push_back(vector_json(v));
    return a;
}

inline json algebra_json(const LieAlgebra& l) {
    json brackets = json::array();
    for (const auto& b : l.brackets()) {
        json terms = json::array();
        for (std::size_t k = 0; k < l.dim(); ++k)
            if (b.value[k] != 0) terms.push_back({{"c", rational_json(b.value[k])}, {"k", k}});
        brackets.push_back({{"i", b.i}, {"j", b.j}, {"terms", terms}});
    }
    return {{"basis", l.basis_names()}, {"brackets", brackets}, {"dim", l.dim()}, {"name", l.name()}};
}

template <class T>
T field(const json& j, const char* key, const char* what) {
    require(j.is_object() && j.contains(key), std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

inline LieAlgebra algebra_from_json(const json& j) {
    auto dim = field<std::size_t>(j, "dim", "algebra");
    auto name = j.contains("name") ? field<std::string>(j, "name", "algebra") : std::string("L");
    std::vector<std::string> basis;
    if (j.contains("basis")) {
        basis = field<std::vector<std::string>>(j, "basis", "algebra");
        require(basis.size() == dim, "algebra: basis has " + std::to_string(basis.size()) + " labels, dim is " +
                                         std::to_string(dim));
    } else {
        for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
    }
    std::vector<Bracket> brackets;
    if (j.contains("brackets")) {
        const auto& arr = j.at("brackets");
        require(arr.is_array(), "algebra: 'brackets' must be an array");
        for (const auto& b : arr) {
            auto i = field<std::size_t>(b, "i", "bracket");
            auto jj = field<std::size_t>(b, "j", "bracket");
            require(i < jj && jj < dim, "bracket: need 0 <= i < j < dim, got (" + std::to_string(i) + ", " +
                                            std::to_string(jj) + ")");
            Vector v(dim);
            require(b.contains("terms") && b.at("terms").is_array(), "bracket: missing 'terms' array");
            for (const auto& t : b.at("terms")) {
                auto k = field<std::size_t>(t, "k", "term");
                require(k < dim, "term: index k out of range");
                require(t.contains("c"), "term: missing field 'c'");
                v[k] += rational_from(t.at("c"));
            }
            brackets.push_back({i, jj, std::move(v)});
        }
    }
    return LieAlgebra(std::move(name), std::move(basis), brackets);
}

inline json module_json(const Representation& v) {
    json action = json::array();
    for (const auto& m : v.action) action.push_back(matrix_json(m));
    return {{"action", action}, {"dim", v.dim}};
}

inline Representation module_from_json(const json& j, const LieAlgebra& l) {
    auto dim = field<std::size_t>(j, "dim", "module");
    require(j.contains("action") && j.at("action").is_array(), "module: missing 'action' array");
    const auto& action = j.at("action");
    require(action.size() == l.dim(), "module: expected " + std::to_string(l.dim()) + " action matrices, got " +
                                          std::to_string(action.size()));
    Representation v{l, dim, {}};
    for (const auto& mj : action) {
        require(mj.is_array() && mj.size() == dim, "module: action matrix must have dim rows");
        Matrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            require(mj[r].is_array() && mj[r].size() == dim, "module: action matrix must have dim columns");
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = rational_from(mj[r][c]);
        }
        v.action.push_back(std::move(m));
    }
    return v;
}

inline json cocycle_json(const Cochain& w) {
    CochainSpace space(w.algebra_dim, w.module_dim, w.degree);
    json values = json::array();
    for (std::size_t t = 0; t < space.tuples.size(); ++t) values.push_back(vector_json(w.value(t)));
    return {{"degree", w.degree}, {"tuples", space.tuples}, {"values", values}};
}

inline Cochain cocycle_from_json(const json& j, std::size_t algebra_dim, std::size_t module_dim) {
    auto degree = field<std::size_t>(j, "degree", "cocycle");
    CochainSpace space(algebra_dim, module_dim, degree);
    auto tuples = field<std::vector<Tuple>>(j, "tuples", "cocycle");
    require(tuples == space.tuples, "cocycle: tuples are not the canonical lexicographic list");
    require(j.contains("values") && j.at("values").is_array() && j.at("values").size() == tuples.size(),
            "cocycle: need one value per tuple");
    Vector coords(space.dim());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& vals = j.at("values")[t];
        require(vals.is_array() && vals.size() == module_dim, "cocycle: value has the wrong length");
        for (std::size_t k = 0; k < module_dim; ++k) coords[t * module_dim + k] = rational_from(vals[k]);
    }
    return {degree, algebra_dim, module_dim, std::move(coords)};
}

inline json witness_json(const WitnessCertificate& w) {
    return {{"cocycle", cocycle_json(w.cocycle)},
            {"h2_dim", w.h2_dim},
            {"module", module_json(w.module)},
            {"provenance", to_string(w.provenance)}};
}

inline json verdict_json(const Verdict& v) {
    json out;
    out["case"] = to_string(v.kind);
    out["decomposition"] = v.decomposition ? json{{"line", subspace_json(v.decomposition->line)},
                                                  {"semisimple", subspace_json(v.decomposition->semisimple)}}
                                           : json(nullptr);
    out["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline LieAlgebra read_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

inline Representation read_module(const std::string& path, const LieAlgebra& l) {
    return module_from_json(read_json_file(path), l);
}

} // namespace liecoh::io
