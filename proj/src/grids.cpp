#include <fstream>

#include "extremal_zeros/verification.hpp"

#include "json.hpp"

namespace extremal_zeros {

namespace {

Scalar scalar_from_json(const nlohmann::json& v, const char* field) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar::from_rational(Rational(v.get<long long>()));
    if (v.is_number_float()) return Scalar::from_double(v.get<double>());
    throw DomainError(std::string("grid file: field '") + field +
                      "' must be a string or number");
}

std::vector<Scalar> scalars(std::initializer_list<const char*> texts) {
    std::vector<Scalar> out;
    for (const char* t : texts) out.push_back(parse_scalar(t));
    return out;
}

void add_jacobi(GridSpec& g, const std::vector<int>& degrees, const std::vector<Scalar>& alphas,
                const std::vector<Scalar>& betas) {
    for (int n : degrees)
        for (const auto& a : alphas)
            for (const auto& b : betas)
                g.instances.push_back(GridInstance{Family::Jacobi, n, a, b});
}

void add_gegenbauer(GridSpec& g, const std::vector<int>& degrees,
                    const std::vector<Scalar>& lambdas) {
    for (int n : degrees)
        for (const auto& l : lambdas)
            g.instances.push_back(GridInstance{Family::Gegenbauer, n, l, Scalar{}});
}

void add_laguerre(GridSpec& g, const std::vector<int>& degrees,
                  const std::vector<Scalar>& alphas) {
    for (int n : degrees)
        for (const auto& a : alphas)
            g.instances.push_back(GridInstance{Family::Laguerre, n, a, Scalar{}});
}

std::vector<int> range(int lo, int hi, int step) {
    std::vector<int> out;
    for (int n = lo; n <= hi; n += step) out.push_back(n);
    return out;
}

const std::vector<Scalar>& default_jacobi_params() {
    static const std::vector<Scalar> v =
        scalars({"-9/10", "-1/2", "0", "1/2", "1", "5/2", "5", "10"});
    return v;
}

const std::vector<Scalar>& default_lambdas() {
    static const std::vector<Scalar> v =
        scalars({"-49/100", "-1/4", "0", "1/2", "1", "2", "5", "10"});
    return v;
}

}  // namespace

bool is_builtin_grid(const std::string& name) {
    return name == "default" || name == "jacobi" || name == "gegenbauer" ||
           name == "laguerre" || name == "empty";
}

GridSpec builtin_grid(const std::string& name) {
    GridSpec g;
    if (name == "default") {
        add_jacobi(g, range(4, 40, 4), default_jacobi_params(), default_jacobi_params());
        add_gegenbauer(g, range(4, 40, 4), default_lambdas());
        add_laguerre(g, range(2, 20, 2), scalars({"-1/2", "0", "1", "5"}));
        g.with_checks = true;
    } else if (name == "jacobi") {
        add_jacobi(g, range(4, 40, 4), default_jacobi_params(), default_jacobi_params());
        g.with_checks = false;
    } else if (name == "gegenbauer") {
        add_gegenbauer(g, range(4, 40, 1), default_lambdas());
        g.with_checks = false;
    } else if (name == "laguerre") {
        add_laguerre(g, range(2, 20, 1), scalars({"-1/2", "0", "1", "5"}));
        g.with_checks = false;
    } else if (name == "empty") {
        g.with_checks = false;
    } else {
        throw DomainError("unknown grid '" + name + "'");
    }
    return g;
}

GridSpec load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open grid file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("grid file '" + path + "': " + e.what());
    }
    GridSpec g;
    g.k_max = j.value("k_max", 3);
    if (g.k_max < 1 || g.k_max > 12)
        throw DomainError("grid file: k_max must be in 1..12");
    g.with_checks = j.value("with_checks", true);
    g.identity_samples = j.value("identity_samples", 100);
    for (const auto& e : j.value("jacobi", nlohmann::json::array())) {
        GridInstance gi;
        gi.family = Family::Jacobi;
        gi.n = e.at("n").get<int>();
        gi.p1 = scalar_from_json(e.at("alpha"), "alpha");
        gi.p2 = scalar_from_json(e.at("beta"), "beta");
        g.instances.push_back(gi);
    }
    for (const auto& e : j.value("gegenbauer", nlohmann::json::array())) {
        GridInstance gi;
        gi.family = Family::Gegenbauer;
        gi.n = e.at("n").get<int>();
        gi.p1 = scalar_from_json(e.at("lambda"), "lambda");
        g.instances.push_back(gi);
    }
    for (const auto& e : j.value("laguerre", nlohmann::json::array())) {
        GridInstance gi;
        gi.family = Family::Laguerre;
        gi.n = e.at("n").get<int>();
        gi.p1 = scalar_from_json(e.at("alpha"), "alpha");
        g.instances.push_back(gi);
    }
    return g;
}

}  // namespace extremal_zeros
