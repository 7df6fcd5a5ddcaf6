#pragma once

#include <json.hpp>

#include "quongram/quongram.hpp"

namespace quongram::io {

using json = nlohmann::ordered_json;

inline json int_json(const Int& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline json poly_json(const symring::Poly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (auto& [v, e] : m.factors()) exps.push_back({v.row, v.col, e});
        terms.push_back({{"coeff", int_json(c)}, {"exps", exps}});
    }
    return terms;
}

inline json boxproduct_json(const symring::BoxProduct& bp) {
    json out = json::array();
    for (auto& [f, m] : bp.factors) out.push_back({{"support", f.support}, {"exponent", m}});
    return out;
}

inline json rat_json(const symring::RatEntry& e) {
    return {{"num", poly_json(e.num)}, {"den", boxproduct_json(e.den)}};
}

inline json factored_det_json(const detkit::FactoredDet& fd) {
    json out = json::array();
    for (auto& [f, e] : fd.factors) out.push_back({{"support", f.support}, {"exponent", e}});
    return out;
}

inline json dense_json(const fock::DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(rat_json(m.entries[i][j]));
        rows.push_back(row);
    }
    json basis = json::array();
    for (auto& w : m.basis.words()) basis.push_back(fock::word_str(w));
    return {{"weight", m.basis.weight().str()}, {"basis", basis}, {"entries", rows}};
}

inline json ga_json(const symring::SymbolicCtx&, const fock::GAMatrix<symring::SymbolicCtx>& m) {
    json diags = json::object();
    for (auto& [g, d] : m.diagonals()) {
        json vec = json::array();
        for (auto& e : d) vec.push_back(rat_json(e));
        diags[g.str()] = vec;
    }
    json basis = json::array();
    for (auto& w : m.basis().words()) basis.push_back(fock::word_str(w));
    return {{"weight", m.basis().weight().str()}, {"basis", basis}, {"diagonals", diags}};
}

inline json zagier_json(const invkit::ZagierCertificate& c) {
    json wit = json::object();
    for (auto& [g, num] : c.witness) wit[g.str()] = num.str();
    json out = {{"n", c.n},
                {"mode", symring::mode_name(c.mode)},
                {"denominator", boxproduct_json(c.denominator)},
                {"extended_holds", c.extended_holds},
                {"witnesses", wit}};
    if (c.extended_failing) out["extended_failing"] = c.extended_failing->str();
    if (c.original_holds) {
        out["original_holds"] = *c.original_holds;
        if (!*c.original_holds) {
            out["original_failing"] = c.original_failing->str();
            out["offending_factor"] = c.offending_factor.str();
        }
    }
    return out;
}

}  // namespace quongram::io
