#include "pd/io.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pd {

namespace {

// one term: sign or separator, coefficient when it carries information,
// beta power, then the variable factors
void append_term(std::ostringstream& os, bool first, const Coefficient& c,
                 int beta_pow, const std::string& factors) {
    Coefficient a = c < 0 ? Coefficient(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (a != 1 || (beta_pow == 0 && factors.empty())) {
        os << a;
        printed = true;
    }
    if (beta_pow > 0) {
        if (printed) os << " * ";
        os << "b";
        if (beta_pow > 1) os << "^" << beta_pow;
        printed = true;
    }
    if (!factors.empty()) {
        if (printed) os << " * ";
        os << factors;
    }
}

std::string edge_factors(const std::vector<Edge>& vars) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if (i) os << " * ";
        os << "x[" << vars[i].first << "," << vars[i].second << "]";
        if (j - i > 1) os << "^" << j - i;
        i = j;
    }
    return os.str();
}

std::string exp_factors(const char* name, const std::vector<int>& exp,
                        bool continued = false) {
    std::ostringstream os;
    bool first = !continued;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << " * ";
        os << name << "[" << i + 1 << "]";
        if (exp[i] > 1) os << "^" << exp[i];
        first = false;
    }
    return os.str();
}

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

std::string to_string(const BetaPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : p) {
        append_term(os, first, c, mo.beta_pow, edge_factors(mo.vars));
        first = false;
    }
    return os.str();
}

std::string to_string(const TPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : p) {
        append_term(os, first, c, mo.beta_pow, exp_factors("t", mo.t_exp));
        first = false;
    }
    return os.str();
}

std::string to_string(const XYBetaPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : p) {
        std::string factors = exp_factors("x", mo.x_exp) +
                              exp_factors("y", mo.y_exp, !mo.x_exp.empty());
        append_term(os, first, c, mo.beta_pow, factors);
        first = false;
    }
    return os.str();
}

Json json_of(const BetaPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mo, c] : p) {
        Json t;
        t["coeff"] = c.str();
        t["beta"] = mo.beta_pow;
        Json vars = Json::array();
        for (const Edge& e : mo.vars) vars.push_back({e.first, e.second});
        t["vars"] = std::move(vars);
        terms.push_back(std::move(t));
    }
    return terms;
}

Json json_of(const TPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mo, c] : p) {
        Json t;
        t["coeff"] = c.str();
        t["beta"] = mo.beta_pow;
        t["t"] = mo.t_exp;
        terms.push_back(std::move(t));
    }
    return terms;
}

Json json_of(const XYBetaPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mo, c] : p) {
        Json t;
        t["coeff"] = c.str();
        t["beta"] = mo.beta_pow;
        t["x"] = mo.x_exp;
        t["y"] = mo.y_exp;
        terms.push_back(std::move(t));
    }
    return terms;
}

BetaPolynomial beta_polynomial_from_json(const Json& j) {
    BetaPolynomial p;
    for (const Json& t : j) {
        Monomial mo;
        mo.beta_pow = t.at("beta").get<int>();
        for (const Json& e : t.at("vars"))
            mo.vars.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::sort(mo.vars.begin(), mo.vars.end());
        Coefficient c(t.at("coeff").get<std::string>());
        if (c != 0 && (p[mo] += c) == 0) p.erase(mo);
    }
    return p;
}

TPolynomial t_polynomial_from_json(const Json& j) {
    TPolynomial p;
    for (const Json& t : j) {
        TMonomial mo;
        mo.beta_pow = t.at("beta").get<int>();
        mo.t_exp = trimmed(t.at("t").get<std::vector<int>>());
        Coefficient c(t.at("coeff").get<std::string>());
        if (c != 0 && (p[mo] += c) == 0) p.erase(mo);
    }
    return p;
}

XYBetaPolynomial xy_polynomial_from_json(const Json& j) {
    XYBetaPolynomial p;
    for (const Json& t : j) {
        XYMonomial mo;
        mo.beta_pow = t.at("beta").get<int>();
        mo.x_exp = trimmed(t.at("x").get<std::vector<int>>());
        mo.y_exp = trimmed(t.at("y").get<std::vector<int>>());
        Coefficient c(t.at("coeff").get<std::string>());
        if (c != 0 && (p[mo] += c) == 0) p.erase(mo);
    }
    return p;
}

}  // namespace pd
