#include "qk3/report.hpp"

namespace qk3 {

Json to_json(const ProjPoint& p) { return p.to_string(); }

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (const auto& s : m.entry_strings()) out.push_back(s);
    return out;
}

Json to_json(const GaloisReport& r) {
    Json points = Json::array();
    for (const auto& gp : r.points)
        points.push_back({{"point", to_json(gp.point)},
                          {"generator", to_json(gp.generator.matrix)},
                          {"multiplier", gp.generator.multiplier.to_string()}});
    Json out{{"surface", r.surface.to_string()},
             {"normal_form", to_string(r.normal_form)},
             {"completeness", to_string(r.completeness)},
             {"count", r.points.size()},
             {"points", points},
             {"detail", r.detail}};
    if (r.normal_form == NormalForm::form3) out["constants"] = fermat_constants();
    return out;
}

Json to_json(const CurveSection& s) {
    Json basis = Json::array();
    for (const auto& v : s.ambient) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        basis.push_back(row);
    }
    return {{"kind", to_string(s.kind)},
            {"basis", basis},
            {"restriction", s.form.to_string()},
            {"smooth", s.smooth},
            {"genus", s.genus ? Json(*s.genus) : Json(nullptr)},
            {"point_count", s.point_count}};
}

Json to_json(const FixedLocus& f) {
    Json sections = Json::array();
    for (std::size_t k = 0; k < f.sections.size(); ++k) {
        Json s = to_json(f.sections[k]);
        s["eigenvalue"] = f.eigenvalues[k].to_string();
        sections.push_back(std::move(s));
    }
    Json curves = Json::array();
    for (const auto& c : f.curves) curves.push_back({{"genus", c.genus}, {"smooth", c.smooth}});
    return {{"sections", sections}, {"curves", curves}, {"n", f.isolated_points}, {"k", f.rational_curves()}};
}

Json to_json(const FixedLocusReport& r) {
    Json out = to_json(static_cast<const FixedLocus&>(r));
    out["a"] = r.a_count;
    out["sigma_squared"] = r.sigma_squared ? to_json(*r.sigma_squared) : Json(nullptr);
    return out;
}

Json to_json(const AutomorphismType& t) {
    Json curves = Json::array();
    for (const auto& c : t.curves) curves.push_back({{"genus", c.genus}, {"smooth", c.smooth}});
    return {{"character", to_string(t.kind)},
            {"character_value", t.character.to_string()},
            {"curves", curves},
            {"n", t.n},
            {"a", t.a},
            {"type_tuple", t.tuple},
            {"table_source", t.table_source}};
}

Json to_json(const ReducedGram& r) {
    const auto e = r.form.entries();
    Json u = Json::array();
    for (const auto& row : r.transform) u.push_back({row[0].get_str(), row[1].get_str()});
    return {{"gram", {e[0].get_str(), e[1].get_str(), e[2].get_str()}}, {"transform", u}};
}

Json fermat_constants() {
    return {{"picard_number", 20},
            {"transcendental_gram", {{8, 0}, {0, 8}}},
            {"source", "quoted constant, not computed"}};
}

}  // namespace qk3
