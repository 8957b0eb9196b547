#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/representation.hpp"

namespace liecoh::catalog {

namespace detail {

inline Vector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms) {
    Vector v(n);
    for (auto [k, c] : terms) v[k] += c;
    return v;
}

inline Matrix mat(std::size_t n, std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(n, n);
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (int x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

} // namespace detail

// [x, y] = y.
inline LieAlgebra aff1() {
    using detail::vec;
    return LieAlgebra("aff1", {"x", "y"}, {{0, 1, vec(2, {{1, 1}})}});
}

// [x, y] = z.
inline LieAlgebra heisenberg3() {
    using detail::vec;
    return LieAlgebra("heisenberg3", {"x", "y", "z"}, {{0, 1, vec(3, {{2, 1}})}});
}

// Filiform: [x, y] = z, [x, z] = w.
inline LieAlgebra n4() {
    using detail::vec;
    return LieAlgebra("n4", {"x", "y", "z", "w"}, {{0, 1, vec(4, {{2, 1}})}, {0, 2, vec(4, {{3, 1}})}});
}

// Basis (e, h, f): [e, h] = -2e, [e, f] = h, [h, f] = -2f.
inline LieAlgebra sl2() {
    using detail::vec;
    return LieAlgebra("sl2", {"e", "h", "f"},
                      {{0, 1, vec(3, {{0, -2}})}, {0, 2, vec(3, {{1, 1}})}, {1, 2, vec(3, {{2, -2}})}});
}

// [e0, e1] = e2 and cyclic.
inline LieAlgebra so3() {
    using detail::vec;
    return LieAlgebra("so3", {"e0", "e1", "e2"},
                      {{0, 1, vec(3, {{2, 1}})}, {1, 2, vec(3, {{0, 1}})}, {0, 2, vec(3, {{1, -1}})}});
}

inline LieAlgebra sl2_plus_line() { return direct_sum(sl2(), LieAlgebra::abelian(1), "sl2_plus_line"); }
inline LieAlgebra sl2_plus_sl2() { return direct_sum(sl2(), sl2(), "sl2_plus_sl2"); }
inline LieAlgebra sl2_plus_abelian2() { return direct_sum(sl2(), LieAlgebra::abelian(2), "sl2_plus_abelian2"); }
inline LieAlgebra aff1_plus_line() { return direct_sum(aff1(), LieAlgebra::abelian(1), "aff1_plus_line"); }

// sl2 acting on K^2 = span{v1, v2} by the natural representation.
inline LieAlgebra sl2_semidirect_natural() {
    using detail::vec;
    const std::size_t n = 5;
    return LieAlgebra("sl2_semidirect_natural", {"e", "h", "f", "v1", "v2"},
                      {{0, 1, vec(n, {{0, -2}})},
                       {0, 2, vec(n, {{1, 1}})},
                       {1, 2, vec(n, {{2, -2}})},
                       {0, 4, vec(n, {{3, 1}})},
                       {1, 3, vec(n, {{3, 1}})},
                       {1, 4, vec(n, {{4, -1}})},
                       {2, 3, vec(n, {{4, 1}})}});
}

// [x, y] = y, [x, z] = -z: solvable, not nilpotent.
inline LieAlgebra solvable3() {
    using detail::vec;
    return LieAlgebra("solvable3", {"x", "y", "z"}, {{0, 1, vec(3, {{1, 1}})}, {0, 2, vec(3, {{2, -1}})}});
}

// Natural 2-dimensional module of sl2 in the (e, h, f) basis.
inline Representation sl2_natural() {
    using detail::mat;
    return {sl2(), 2, {mat(2, {{0, 1}, {0, 0}}), mat(2, {{1, 0}, {0, -1}}), mat(2, {{0, 0}, {1, 0}})}};
}

struct Entry {
    std::string name;
    LieAlgebra algebra;
    // Extra named modules known for this algebra (beyond trivial/adjoint).
    std::vector<std::pair<std::string, Representation>> modules;
};

namespace detail {

inline std::map<std::string, std::function<Entry()>> builders() {
    std::map<std::string, std::function<Entry()>> b;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto name = "abelian" + std::to_string(n);
        b[name] = [n, name] { return Entry{name, LieAlgebra::abelian(n), {}}; };
    }
    b["aff1"] = [] { return Entry{"aff1", aff1(), {}}; };
    b["heisenberg3"] = [] { return Entry{"heisenberg3", heisenberg3(), {}}; };
    b["n4"] = [] { return Entry{"n4", n4(), {}}; };
    b["sl2"] = [] { return Entry{"sl2", sl2(), {{"natural", sl2_natural()}}}; };
    b["so3"] = [] { return Entry{"so3", so3(), {}}; };
    b["sl2_plus_line"] = [] {
        auto l = sl2_plus_line();
        auto nat = sl2_natural();
        return Entry{"sl2_plus_line", l, {{"natural_x_trivial", outer_tensor(nat, trivial(LieAlgebra::abelian(1), 1), l)}}};
    };
    b["sl2_plus_sl2"] = [] {
        auto l = sl2_plus_sl2();
        auto nat = sl2_natural();
        auto k = trivial(sl2(), 1);
        return Entry{"sl2_plus_sl2",
                     l,
                     {{"natural_x_trivial", outer_tensor(nat, k, l)},
                      {"trivial_x_natural", outer_tensor(k, nat, l)},
                      {"natural_x_natural", outer_tensor(nat, nat, l)}}};
    };
    b["sl2_plus_abelian2"] = [] { return Entry{"sl2_plus_abelian2", sl2_plus_abelian2(), {}}; };
    b["aff1_plus_line"] = [] { return Entry{"aff1_plus_line", aff1_plus_line(), {}}; };
    b["sl2_semidirect_natural"] = [] { return Entry{"sl2_semidirect_natural", sl2_semidirect_natural(), {}}; };
    b["solvable3"] = [] { return Entry{"solvable3", solvable3(), {}}; };
    return b;
}

} // namespace detail

inline std::vector<std::string> list() {
    std::vector<std::string> names;
    for (const auto& [name, _] : detail::builders()) names.push_back(name);
    return names;
}

inline Entry get(const std::string& name) {
    auto b = detail::builders();
    auto it = b.find(name);
    require(it != b.end(), "unknown catalog entry '" + name + "'");
    Entry e = it->second();
    e.algebra = e.algebra.renamed(name);
    for (auto& [_, m] : e.modules) m.algebra = e.algebra;
    return e;
}

} // namespace liecoh::catalog
