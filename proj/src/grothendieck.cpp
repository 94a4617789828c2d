#include "pd/grothendieck.hpp"

#include "pd/pipedream.hpp"
#include "pd/rootpoly.hpp"
#include "pd/simplicial.hpp"
#include "pd/treebuild.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pd {

namespace {

int xy_degree(const XYMonomial& m) {
    int d = 0;
    for (int e : m.x_exp) d += e;
    for (int e : m.y_exp) d += e;
    return d;
}

void add_term(XYBetaPolynomial& p, XYMonomial mo, const Coefficient& c) {
    auto it = p.find(mo);
    if (it == p.end()) {
        if (c != 0) p.emplace(std::move(mo), c);
    } else if ((it->second += c) == 0) {
        p.erase(it);
    }
}

Coefficient binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Coefficient r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) here
    }
    return r;
}

Rational power(const Rational& base, int e) {
    Rational v = 1;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

Assignment ones_zeros(const Permutation& w) {
    std::size_t k = w.size() > 1 ? static_cast<std::size_t>(w.size() - 1) : 0;
    Assignment a;
    a.x.assign(k, Rational(1));
    a.y.assign(k, Rational(0));
    return a;
}

std::string describe(const Permutation& w) { return "pi = " + w.to_string(); }

}  // namespace

bool operator<(const XYMonomial& a, const XYMonomial& b) {
    if (a.beta_pow != b.beta_pow) return a.beta_pow < b.beta_pow;
    int da = xy_degree(a), db = xy_degree(b);
    if (da != db) return da < db;
    if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
    return a.y_exp < b.y_exp;
}

XYBetaPolynomial grothendieck(const Permutation& w, int max_n) {
    XYBetaPolynomial out;
    for (const auto& [dream, codim] : enumerate_all_pipe_dreams(w, max_n)) {
        // expand the cross weights (x_r - y_c) one factor at a time
        std::vector<std::pair<XYMonomial, Coefficient>> terms;
        terms.push_back({XYMonomial{{}, {}, codim}, 1});
        for (const auto& [r, c] : dream.crosses) {
            std::vector<std::pair<XYMonomial, Coefficient>> next;
            next.reserve(terms.size() * 2);
            for (const auto& [mo, coef] : terms) {
                XYMonomial mx = mo;
                if (static_cast<int>(mx.x_exp.size()) < r) mx.x_exp.resize(r, 0);
                ++mx.x_exp[r - 1];
                next.push_back({std::move(mx), coef});
                XYMonomial my = mo;
                if (static_cast<int>(my.y_exp.size()) < c) my.y_exp.resize(c, 0);
                ++my.y_exp[c - 1];
                next.push_back({std::move(my), -coef});
            }
            terms = std::move(next);
        }
        for (auto& [mo, coef] : terms) add_term(out, std::move(mo), coef);
    }
    return out;
}

std::vector<Rational> specialize(const XYBetaPolynomial& p, const Assignment& a) {
    auto value_of = [](const std::vector<Rational>& vals,
                       const std::vector<int>& exp, const char* which) {
        Rational v = 1;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (i >= vals.size())
                throw std::invalid_argument(std::string("assignment misses ") +
                                            which + "_" + std::to_string(i + 1));
            v *= power(vals[i], exp[i]);
        }
        return v;
    };
    std::vector<Rational> coeffs(1, Rational(0));
    for (const auto& [mo, c] : p) {
        Rational v = Rational(c) * value_of(a.x, mo.x_exp, "x") *
                     value_of(a.y, mo.y_exp, "y");
        int bp = mo.beta_pow;
        if (a.beta) {
            v *= power(*a.beta, bp);
            bp = 0;
        }
        if (static_cast<int>(coeffs.size()) <= bp) coeffs.resize(bp + 1, Rational(0));
        coeffs[bp] += v;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::vector<Rational> substitute_beta_minus_one(const std::vector<Rational>& p) {
    std::vector<Rational> out(p.size(), Rational(0));
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (p[s] == 0) continue;
        for (std::size_t k = 0; k <= s; ++k) {
            Coefficient c = binomial(static_cast<long long>(s),
                                     static_cast<long long>(k));
            if ((s - k) % 2 == 1) c = -c;
            out[k] += p[s] * Rational(c);
        }
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

bool verify_volume(const Permutation& w, std::string* why) {
    long long vol = normalized_volume(w);
    Assignment a = ones_zeros(w);
    a.beta = Rational(0);
    Rational spec = specialize(grothendieck(w), a)[0];
    long long dreams = static_cast<long long>(enumerate_reduced(w).size());
    if (spec == vol && vol == dreams) return true;
    if (why) {
        std::ostringstream os;
        os << describe(w) << ": volume " << vol << ", specialization " << spec
           << ", reduced dreams " << dreams;
        *why = os.str();
    }
    return false;
}

bool verify_ehrhart(const Permutation& w, std::string* why) {
    LabeledTree t = tree(w);
    int d = t.m - 1;  // dim P(T): the tree edge vectors are independent
    if (d > 5)
        throw std::invalid_argument("ehrhart verification capped at dimension 5");
    std::vector<Rational> series =
        substitute_beta_minus_one(specialize(grothendieck(w), ones_zeros(w)));
    for (long long tt = 0; tt <= d + 1; ++tt) {
        Rational expect = 0;
        for (std::size_t s = 0; s < series.size() && static_cast<long long>(s) <= tt;
             ++s)
            expect += series[s] * Rational(binomial(d + tt - static_cast<long long>(s), d));
        long long actual = ehrhart_count(t, tt);
        if (expect != actual) {
            if (why) {
                std::ostringstream os;
                os << describe(w) << ": dilation " << tt << " has " << actual
                   << " lattice points, series says " << expect;
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

bool verify_h_identity(const Permutation& w, std::string* why) {
    std::vector<long long> h = h_vector(pipe_dream_complex(w));
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    std::vector<Rational> series =
        substitute_beta_minus_one(specialize(grothendieck(w), ones_zeros(w)));
    bool ok = h.size() == series.size();
    for (std::size_t i = 0; ok && i < h.size(); ++i) ok = series[i] == h[i];
    if (ok) return true;
    if (why) {
        std::ostringstream os;
        os << describe(w) << ": h-vector (";
        for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
        os << ") vs specialization (";
        for (std::size_t i = 0; i < series.size(); ++i)
            os << (i ? "," : "") << series[i];
        os << ")";
        *why = os.str();
    }
    return false;
}

bool verify_thm_t(const Permutation& w, int orders, unsigned seed,
                  std::string* why) {
    LabeledTree t = tree(w);
    std::vector<int> g = column_counts(w);

    // right side: terms of G_{w^-1} surviving y = 0, as exponents of t
    using Key = std::pair<std::vector<int>, int>;
    std::map<Key, Coefficient> rhs;
    for (const auto& [mo, c] : grothendieck(w.inverse())) {
        if (!mo.y_exp.empty()) continue;  // vanishes at y = 0
        std::vector<int> e(std::max(g.size(), mo.x_exp.size()), 0);
        for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i];
        for (std::size_t i = 0; i < mo.x_exp.size(); ++i) e[i] -= mo.x_exp[i];
        while (!e.empty() && e.back() == 0) e.pop_back();
        rhs[{std::move(e), mo.beta_pow}] += c;
    }

    for (int k = 0; k < orders; ++k) {
        TPolynomial image = tilde_t_substitute(
            reduced_form(t, Strategy::random_any, seed + static_cast<unsigned>(k)),
            t);
        std::map<Key, Coefficient> lhs;
        for (const auto& [tm, c] : image) lhs[{tm.t_exp, tm.beta_pow}] += c;
        if (lhs != rhs) {
            if (why) {
                std::ostringstream os;
                os << describe(w) << ": tilde image with seed "
                   << seed + static_cast<unsigned>(k)
                   << " differs from the Grothendieck side";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

bool verify_thm_gen(const Permutation& w, int samples, unsigned seed,
                    std::string* why) {
    LabeledTree t = tree(w);
    BetaPolynomial form = crf(t);
    std::map<Edge, Cell> boxes = phi(w);
    for (const auto& [mo, c] : form) {
        (void)c;
        for (const Edge& e : mo.vars)
            if (!boxes.count(e))
                throw std::runtime_error(
                    "reduced form uses a variable with no region box label");
    }
    XYBetaPolynomial groth = grothendieck(w);
    std::size_t nv = w.size() > 1 ? static_cast<std::size_t>(w.size() - 1) : 1;

    std::mt19937 rng(seed);
    auto draw = [&rng]() { return Rational(static_cast<int>(rng() % 41) - 20); };
    for (int s = 0; s < samples; ++s) {
        Assignment a;
        a.x.resize(nv);
        a.y.resize(nv);
        bool clear = false;
        while (!clear) {
            for (auto& v : a.x) v = draw();
            for (auto& v : a.y) v = draw();
            clear = true;
            for (const auto& vx : a.x)
                for (const auto& vy : a.y) clear = clear && vx != vy;
        }
        Rational beta = Rational(static_cast<int>(rng() % 19) - 9);

        Rational lhs = 0;
        for (const auto& [mo, c] : form) {
            Rational term = Rational(c) * power(beta, mo.beta_pow);
            for (const Edge& e : mo.vars) {
                const Cell& b = boxes.at(e);
                term /= a.x[b.first - 1] - a.y[b.second - 1];
            }
            lhs += term;
        }

        Assignment bound = a;
        bound.beta = beta;
        Rational rhs = specialize(groth, bound)[0];
        for (const auto& [e, b] : boxes) {
            (void)e;
            rhs /= a.x[b.first - 1] - a.y[b.second - 1];
        }

        if (lhs != rhs) {
            if (why) {
                std::ostringstream os;
                os << describe(w) << ": sample " << s
                   << " evaluates the reduced form to " << lhs
                   << " but the Grothendieck side to " << rhs;
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace pd
