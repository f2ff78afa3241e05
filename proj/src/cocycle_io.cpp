#include <qpc/cocycle_io.hpp>

#include <fstream>
#include <stdexcept>

namespace qpc {

using nlohmann::json;

json cocycle_to_json(const FourierCocycle& C) {
    json coeffs = json::array();
    for (const auto& [n, a] : C.coefficients()) {  // std::map: lexicographic order
        json re = json::array(), im = json::array();
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            json rrow = json::array(), irow = json::array();
            for (Eigen::Index jcol = 0; jcol < a.cols(); ++jcol) {
                rrow.push_back(a(i, jcol).real());
                irow.push_back(a(i, jcol).imag());
            }
            re.push_back(std::move(rrow));
            im.push_back(std::move(irow));
        }
        coeffs.push_back(json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}});
    }
    return json{{"d", C.base_dim()}, {"m", C.fiber_dim()}, {"r", C.strip()}, {"coeffs", std::move(coeffs)}};
}

FourierCocycle cocycle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("m") || !j.contains("r") || !j.contains("coeffs"))
        throw std::invalid_argument("cocycle_from_json: need fields d, m, r, coeffs");
    const int d = j.at("d").get<int>();
    const int m = j.at("m").get<int>();
    const double r = j.at("r").get<double>();
    FourierCocycle C(d, m, r);
    for (const auto& entry : j.at("coeffs")) {
        FreqVec n = entry.at("n").get<FreqVec>();
        if (static_cast<int>(n.size()) != d) throw std::invalid_argument("cocycle_from_json: frequency dim mismatch");
        const auto& re = entry.at("re");
        const auto& im = entry.at("im");
        if (re.size() != static_cast<size_t>(m) || im.size() != static_cast<size_t>(m))
            throw std::invalid_argument("cocycle_from_json: coefficient shape mismatch");
        ComplexMatrix a(m, m);
        for (int i = 0; i < m; ++i) {
            if (re[i].size() != static_cast<size_t>(m) || im[i].size() != static_cast<size_t>(m))
                throw std::invalid_argument("cocycle_from_json: coefficient shape mismatch");
            for (int c = 0; c < m; ++c)
                a(i, c) = {re[i][c].get<double>(), im[i][c].get<double>()};
        }
        C.add_coefficient(n, a);
    }
    return C;
}

void write_cocycle_file(const FourierCocycle& C, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_cocycle_file: cannot open " + path);
    out << cocycle_to_json(C).dump(2) << "\n";
    if (!out) throw std::runtime_error("write_cocycle_file: write failed for " + path);
}

FourierCocycle read_cocycle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_cocycle_file: cannot open " + path);
    json j;
    in >> j;
    return cocycle_from_json(j);
}

}  // namespace qpc
