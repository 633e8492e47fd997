#include "tdl/io.hpp"

#include <cstdio>
#include <sstream>

namespace tdl {

nlohmann::ordered_json cyclo_to_json(const Cyclo& value) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : value.coefficients()) coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    const auto z = value.to_complex();
    return {{"order", value.order()}, {"coeffs", coeffs}, {"approx", {z.real(), z.imag()}}};
}

Cyclo cyclo_from_json(const nlohmann::ordered_json& j) {
    const auto order = j.at("order").get<unsigned>();
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) {
        mpq_class q(c.get<std::string>());
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Cyclo::from_coefficients(order, coeffs);
}

nlohmann::ordered_json matrix_to_json(const CycloMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int a = 0; a < m.size(); ++a) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int b = 0; b < m.size(); ++b) row.push_back(cyclo_to_json(m(a, b)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CycloMatrix matrix_from_json(const nlohmann::ordered_json& j) {
    const int n = static_cast<int>(j.size());
    CycloMatrix m(n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(j[a].size()) != n) throw std::invalid_argument("matrix JSON is not square");
        for (int b = 0; b < n; ++b) m(a, b) = cyclo_from_json(j[a][b]);
    }
    return m;
}

namespace {

nlohmann::ordered_json params_json(const CocycleParams& p) {
    return {{"q", p.spec.q}, {"p", p.spec.p}, {"n", p.spec.n}, {"u", p.u}};
}

CocycleParams params_from(const nlohmann::ordered_json& j) {
    CocycleParams p{{j.at("q").get<int>(), j.at("p").get<int>(), j.at("n").get<int>()}, j.at("u").get<int>()};
    p.validate();
    return p;
}

}  // namespace

nlohmann::ordered_json modular_data_to_json(const ModularData& md) {
    nlohmann::ordered_json T = nlohmann::ordered_json::array();
    for (const auto& t : md.T) T.push_back(cyclo_to_json(t));
    return {{"params", params_json(md.params)},
            {"labels", md.labels},
            {"dims", md.dims},
            {"D", md.D},
            {"c_mod_8", md.c_mod_8},
            {"dual", md.dual},
            {"T", T},
            {"S", matrix_to_json(md.S)}};
}

ModularData modular_data_from_json(const nlohmann::ordered_json& j) {
    ModularData md;
    md.params = params_from(j.at("params"));
    md.labels = j.at("labels").get<std::vector<std::string>>();
    md.dims = j.at("dims").get<std::vector<int>>();
    md.D = j.at("D").get<int>();
    md.c_mod_8 = j.at("c_mod_8").get<int>();
    md.dual = j.at("dual").get<std::vector<int>>();
    for (const auto& t : j.at("T")) md.T.push_back(cyclo_from_json(t));
    md.S = matrix_from_json(j.at("S"));
    return md;
}

nlohmann::ordered_json w_matrix_to_json(const CocycleParams& params, const std::vector<std::string>& labels, const WMatrix& w) {
    return {{"params", params_json(params)},
            {"labels", labels},
            {"W", matrix_to_json(w.W)},
            {"W_tilde", matrix_to_json(w.Wtilde)}};
}

WMatrix w_matrix_from_json(const nlohmann::ordered_json& j) {
    return {matrix_from_json(j.at("W")), matrix_from_json(j.at("W_tilde"))};
}

std::string matrix_to_csv(const CycloMatrix& m, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    char buf[64];
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) {
            const auto z = m(a, b).to_complex();
            out << '"' << labels[a] << "\",\"" << labels[b] << "\",";
            std::snprintf(buf, sizeof buf, "%.12g,%.12g", z.real(), z.imag());
            out << buf << '\n';
        }
    return out.str();
}

}  // namespace tdl
