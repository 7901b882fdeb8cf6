#include "icegt/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "icegt/enum6v.hpp"

namespace icegt {

Json family_to_json(const PathFamily& f) {
    Json paths = Json::array();
    for (const auto& p : f.paths) {
        Json steps = Json::array();
        for (char c : p) steps.push_back(std::string(1, c));
        paths.push_back(std::move(steps));
    }
    return Json{{"k", f.k.values()}, {"model", model_name(f.model)}, {"paths", std::move(paths)}};
}

PathFamily family_from_json(const Json& j) {
    PathFamily f;
    f.k = BoundarySpec(j.at("k").get<std::vector<int>>());
    f.model = parse_model(j.at("model").get<std::string>());
    for (const auto& p : j.at("paths")) {
        std::string s;
        for (const auto& step : p) {
            auto c = step.get<std::string>();
            if (c.size() != 1) throw std::invalid_argument("step must be a single character");
            s += c;
        }
        f.paths.push_back(std::move(s));
    }
    return f;
}

Json monomial_to_json(const WeightMonomial& m) { return Json{{"sixths", m.sixths}, {"qexp", m.qexp}}; }

Json record_6v(const Domain& d, const EdgeOrientation& o, const PathFamily& f) {
    Json j = family_to_json(f);
    j["ic"] = ic(d, o);
    j["inv"] = inv(d, o);
    j["omega"] = monomial_to_json(omega(d, o));
    return j;
}

Json pattern_to_json(const GTPattern& p) { return Json{{"rows", p.rows}, {"barred", false}}; }

Json triangle_to_json(const BarredTriangle& t) { return Json{{"rows", t.rows}, {"barred", true}}; }

GTPattern pattern_from_json(const Json& j) {
    if (j.value("barred", false)) throw std::invalid_argument("expected an unbarred pattern");
    return GTPattern{j.at("rows").get<Rows>()};
}

BarredTriangle triangle_from_json(const Json& j) {
    if (!j.value("barred", false)) throw std::invalid_argument("expected a barred triangle");
    return BarredTriangle{j.at("rows").get<Rows>()};
}

Rows parse_rows(const std::string& s) {
    Rows rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) {
            try {
                r.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse pattern entry '" + item + "'");
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace icegt
