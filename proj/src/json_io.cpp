#include "sopq/json_io.hpp"

namespace sopq {

Json matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
    if (!j.is_array()) throw DimensionError("matrix JSON must be an array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw DimensionError("matrix JSON rows must be arrays");
        cols = static_cast<Eigen::Index>(j[0].size());
    }
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
            throw DimensionError("matrix JSON is ragged");
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (!j[i][c].is_number()) throw DimensionError("matrix JSON entry is not a number");
            m(i, c) = j[i][c].get<double>();
        }
    }
    return m;
}

Json vector_to_json(const Eigen::VectorXd& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Eigen::VectorXd vector_from_json(const Json& j) {
    if (!j.is_array()) throw DimensionError("vector JSON must be an array");
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!j[i].is_number()) throw DimensionError("vector JSON entry is not a number");
        v(i) = j[i].get<double>();
    }
    return v;
}

Json to_json(const Signature& sig) { return Json::array({sig.p, sig.q}); }

Signature signature_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw DimensionError("signature JSON must be [p, q] with integer entries");
    return Signature(j[0].get<int>(), j[1].get<int>());
}

Json to_json(const GroupElement& a) {
    return Json{{"schema", "1"},
                {"sig", to_json(a.sig())},
                {"rows", matrix_to_json(a.entries())}};
}

GroupElement group_element_from_json(const Json& j, double tol) {
    if (!j.is_object() || !j.contains("sig") || !j.contains("rows"))
        throw DimensionError("group element JSON needs \"sig\" and \"rows\"");
    return GroupElement::make(signature_from_json(j["sig"]), matrix_from_json(j["rows"]), tol);
}

Json to_json(const QuasiSpherePoint& pt) {
    return Json{{"schema", "1"},
                {"sig", to_json(pt.sig())},
                {"sign", pt.sign()},
                {"coords", vector_to_json(pt.coords())}};
}

QuasiSpherePoint point_from_json(const Json& j, double tol) {
    if (!j.is_object() || !j.contains("sig") || !j.contains("sign") || !j.contains("coords"))
        throw DimensionError("point JSON needs \"sig\", \"sign\" and \"coords\"");
    return QuasiSpherePoint::make(signature_from_json(j["sig"]), j["sign"].get<int>(),
                                  vector_from_json(j["coords"]), tol);
}

Json to_json(const MembershipReport& r) {
    return Json{{"schema", "1"},
                {"in_O", r.in_O},
                {"in_SO", r.in_SO},
                {"form_residual", r.form_residual},
                {"det_residual", r.det_residual}};
}

Json to_json(const ColumnReport& r) {
    return Json{{"schema", "1"},
                {"orthogonal_pairs_ok", r.orthogonal_pairs_ok},
                {"plus_count", r.plus_count},
                {"minus_count", r.minus_count},
                {"worst_pair_inner", r.worst_pair_inner},
                {"worst_magnitude_defect", r.worst_magnitude_defect}};
}

Json to_json(const CompletionResult& r) {
    return Json{{"schema", "1"},
                {"element", to_json(r.element)},
                {"column_residual", r.column_residual},
                {"swaps_applied", r.swaps_applied},
                {"negated_column", r.negated_column}};
}

Json to_json(const PolarResult& r) {
    return Json{{"schema", "1"},
                {"compact", to_json(r.compact_factor)},
                {"symmetric", matrix_to_json(r.symmetric_factor)},
                {"log_p", matrix_to_json(r.log_symmetric.entries())},
                {"residual", r.reconstruction_residual}};
}

Json to_json(const FgAbelianGroup& g) {
    Json factors = Json::array();
    for (const Int& f : g.invariant_factors()) factors.push_back(f.str());
    return Json{{"schema", "1"},
                {"group", g.render()},
                {"invariant_factors", std::move(factors)},
                {"rank", g.rank()}};
}

Json to_json(const HomotopySetOrGroup& h) {
    if (h.kind == HomotopySetOrGroup::Kind::set_cardinality)
        return Json{{"kind", "set"}, {"cardinality", h.cardinality}};
    return Json{{"kind", "group"}, {"group", h.group.render()}};
}

Json to_json(const TraceStep& st) {
    return Json{{"rule", st.rule},
                {"seq", st.seq},
                {"from", st.from},
                {"conclusion", st.conclusion}};
}

Json to_json(const Derivation& d) {
    Json steps = Json::array();
    for (const auto& st : d.trace) steps.push_back(to_json(st));
    Json out = to_json(d.group);
    out["trace"] = std::move(steps);
    return out;
}

Json to_json(const CoverReport& r) {
    Json out{{"schema", "1"},
             {"samples", r.samples},
             {"seed", r.seed},
             {"tol", r.tol},
             {"pass", r.pass},
             {"failures",
              Json{{"form", r.form_failures},
                   {"det", r.det_failures},
                   {"member", r.member_failures},
                   {"component", r.component_failures},
                   {"multiplicativity", r.mult_failures},
                   {"kernel", r.kernel_failures}}},
             {"worst",
              Json{{"form_residual", r.worst_form_residual},
                   {"det_residual", r.worst_det_residual},
                   {"member_residual", r.worst_member_residual},
                   {"mult_residual", r.worst_mult_residual}}}};
    if (r.counterexample) {
        Eigen::MatrixXd c = *r.counterexample;
        out["counterexample"] = matrix_to_json(c);
    }
    return out;
}

}  // namespace sopq
