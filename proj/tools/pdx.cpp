// Single binary exposing the library: diagrams, pipe dreams, complexes,
// trees, triangulations, reduced forms, Grothendieck polynomials, volumes,
// Ehrhart counts and the verification suites.  Text by default, --json for
// machine consumption; results on stdout, diagnostics on stderr.

#include "CLI11.hpp"

#include "pd/grothendieck.hpp"
#include "pd/io.hpp"
#include "pd/pipedream.hpp"
#include "pd/rootpoly.hpp"
#include "pd/simplicial.hpp"
#include "pd/subdivision.hpp"
#include "pd/treebuild.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using pd::Json;

pd::LabeledTree tree_from_text(const std::string& text) {
    std::set<pd::Edge> edges;
    int m = 1;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 >= item.size())
            throw std::invalid_argument("edges look like 1-2,2-3: got " + item);
        int a = std::stoi(item.substr(0, dash));
        int b = std::stoi(item.substr(dash + 1));
        edges.insert({a, b});
        m = std::max({m, a, b});
    }
    return pd::make_tree(m, std::move(edges));
}

Json edges_json(const std::set<pd::Edge>& edges) {
    Json a = Json::array();
    for (const auto& [x, y] : edges) a.push_back({x, y});
    return a;
}

std::string edges_text(const std::set<pd::Edge>& edges) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : edges) {
        if (!first) os << " ";
        os << "(" << a << "," << b << ")";
        first = false;
    }
    return first ? std::string("(none)") : os.str();
}

std::string cells_text(const std::set<pd::Cell>& cells) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : cells) {
        if (!first) os << " ";
        os << "(" << r << "," << c << ")";
        first = false;
    }
    return first ? std::string("(none)") : os.str();
}

Json cells_json(const std::set<pd::Cell>& cells) {
    Json a = Json::array();
    for (const auto& [r, c] : cells) a.push_back({r, c});
    return a;
}

std::string rational_text(const pd::Rational& v) { return v.str(); }

// "2 + b" style rendering of a beta-coefficient vector
std::string beta_coeffs_text(const std::vector<pd::Rational>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        pd::Rational a = c[k] < 0 ? pd::Rational(-c[k]) : c[k];
        if (first) {
            if (c[k] < 0) os << "-";
        } else {
            os << (c[k] < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << " * ";
            os << "b";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return first ? std::string("0") : os.str();
}

pd::Assignment parse_spec(const std::string& text, int n) {
    std::size_t k = n > 1 ? static_cast<std::size_t>(n - 1) : 1;
    std::optional<long long> xv, yv, bv;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq + 1 >= item.size())
            throw std::invalid_argument("spec entries look like x=1: got " + item);
        std::string name = item.substr(0, eq);
        long long value = std::stoll(item.substr(eq + 1));
        if (name == "x")
            xv = value;
        else if (name == "y")
            yv = value;
        else if (name == "b")
            bv = value;
        else
            throw std::invalid_argument("unknown spec variable: " + name);
    }
    if (!xv || !yv) throw std::invalid_argument("spec must bind x and y");
    pd::Assignment a;
    a.x.assign(k, pd::Rational(*xv));
    a.y.assign(k, pd::Rational(*yv));
    if (bv) a.beta = pd::Rational(*bv);
    return a;
}

// map M lands bijectively on the canonical simplices, the ladder walk agrees
// with the subword search, and the box relabelling is a simplicial
// isomorphism onto the vertex figure
bool check_bijection(const pd::Permutation& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = "pi = " + w.to_string() + ": " + msg;
        return false;
    };
    auto tri = pd::canonical_triangulation(pd::tree(w));
    std::set<std::set<pd::Edge>> simplices;
    for (const auto& s : tri.simplices) simplices.insert(s.edges);
    std::set<std::set<pd::Edge>> images;
    for (const auto& [dream, t] : pd::map_M(w)) {
        (void)dream;
        if (!simplices.count(t.edges))
            return fail("a dream maps outside the canonical triangulation");
        if (!images.insert(t.edges).second)
            return fail("two dreams map to the same simplex");
    }
    if (images.size() != simplices.size())
        return fail("the dream images miss some canonical simplex");
    if (pd::enumerate_reduced(w) != pd::enumerate_reduced_by_subwords(w))
        return fail("ladder closure and subword search disagree");
    std::map<pd::Cell, pd::Cell> box_to_edge;
    for (const auto& [edge, box] : pd::phi(w)) box_to_edge[box] = edge;
    if (!pd::is_isomorphic_under(pd::region_complex(w),
                                 pd::vertex_figure_complex(w), box_to_edge))
        return fail("the box relabelling is not a simplicial isomorphism");
    return true;
}

// ten random reduction orders all reach the canonical t-image
bool check_unique(const pd::Permutation& w, std::string* why) {
    pd::LabeledTree t = pd::tree(w);
    pd::TPolynomial ref = pd::t_substitute(pd::crf(t));
    for (unsigned k = 0; k < 10; ++k) {
        if (pd::t_substitute(pd::reduced_form(t, pd::Strategy::random_any,
                                              1 + k)) != ref) {
            if (why)
                *why = "pi = " + w.to_string() + ": the t-image with seed " +
                       std::to_string(1 + k) + " differs from the canonical one";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pipe dream trees, root polytope subdivisions and Grothendieck "
        "polynomials"};
    app.require_subcommand(1);

    bool json = false;
    int max_n = 6;
    int max_m = 8;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--max-n", max_n, "board cap for all-pipe-dream sums");
    app.add_option("--max-m", max_m, "vertex cap for lattice point counts");

    int exit_code = 0;

    std::string perm_text;
    std::string tree_text;
    std::string order = "canonical";
    unsigned seed = 1;
    bool all_dreams = false, ascii = false;
    bool core_only = false, fvector = false;
    bool sub_t = false, sub_tilde = false;
    std::string spec_text;
    long long tmax = 0;
    bool v_all = false, v_vol = false, v_ehrhart = false, v_thm_t = false,
         v_thm_gen = false, v_bijection = false, v_unique = false;

    auto* c_diagram = app.add_subcommand("diagram", "Rothe diagram");
    c_diagram->add_option("perm", perm_text, "one-line notation, e.g. 1,5,3,4,2")
        ->required();
    c_diagram->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::Diagram d = pd::rothe_diagram(w);
        if (json) {
            Json j;
            j["schema"] = "pd/diagram/1";
            j["n"] = w.size();
            j["boxes"] = cells_json(d);
            std::cout << j.dump() << "\n";
        } else {
            for (int r = 1; r <= w.size(); ++r) {
                std::string line;
                for (int c = 1; c <= w.size(); ++c)
                    line += d.count({r, c}) ? '#' : '.';
                std::cout << line << "\n";
            }
        }
    });

    auto* c_dreams = app.add_subcommand("pipedreams", "pipe dreams of a permutation");
    c_dreams->add_option("perm", perm_text, "one-line notation")->required();
    c_dreams->add_flag("--all", all_dreams, "include nonreduced dreams");
    c_dreams->add_flag("--ascii", ascii, "render boards");
    c_dreams->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        std::vector<pd::PipeDreamWithCodim> dreams;
        if (all_dreams) {
            dreams = pd::enumerate_all_pipe_dreams(w, max_n);
        } else {
            for (const auto& d : pd::enumerate_reduced(w))
                dreams.push_back({d, 0});
        }
        if (json) {
            Json j;
            j["schema"] = "pd/pipedreams/1";
            j["n"] = w.size();
            j["all"] = all_dreams;
            j["count"] = dreams.size();
            Json arr = Json::array();
            for (const auto& [d, codim] : dreams) {
                Json e;
                e["crosses"] = cells_json(d.crosses);
                e["codim"] = codim;
                arr.push_back(std::move(e));
            }
            j["dreams"] = std::move(arr);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& [d, codim] : dreams) {
                if (ascii) {
                    std::cout << pd::ascii_render(d);
                    if (all_dreams) std::cout << "codim=" << codim << "\n";
                    std::cout << "\n";
                } else {
                    std::cout << cells_text(d.crosses);
                    if (all_dreams) std::cout << " codim=" << codim;
                    std::cout << "\n";
                }
            }
        }
    });

    auto* c_complex = app.add_subcommand("complex", "pipe dream complex");
    c_complex->add_option("perm", perm_text, "one-line notation")->required();
    c_complex->add_flag("--core", core_only, "strip the cone vertices");
    c_complex->add_flag("--fvector", fvector, "also print the f-vector");
    c_complex->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::SimplicialComplex k = pd::pipe_dream_complex(w);
        if (core_only) k = pd::core(k);
        std::vector<long long> f = pd::f_vector(k);
        if (json) {
            Json j;
            j["schema"] = "pd/complex/1";
            j["n"] = w.size();
            j["core"] = core_only;
            Json verts = Json::array();
            for (const auto& [r, c] : k.vertices()) verts.push_back({r, c});
            j["vertices"] = std::move(verts);
            Json facets = Json::array();
            for (const auto& facet : k.facet_labels()) {
                Json fa = Json::array();
                for (const auto& [r, c] : facet) fa.push_back({r, c});
                facets.push_back(std::move(fa));
            }
            j["facets"] = std::move(facets);
            j["fvector"] = f;
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& facet : k.facet_labels()) {
                std::ostringstream os;
                bool first = true;
                for (const auto& [r, c] : facet) {
                    if (!first) os << " ";
                    os << "(" << r << "," << c << ")";
                    first = false;
                }
                std::cout << (first ? "(empty)" : os.str()) << "\n";
            }
            if (fvector) {
                std::cout << "f:";
                for (long long v : f) std::cout << " " << v;
                std::cout << "\n";
            }
        }
    });

    auto* c_tree = app.add_subcommand("tree", "tree of the permutation");
    c_tree->add_option("perm", perm_text, "one-line notation")->required();
    c_tree->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::LabeledTree t = pd::tree(w);
        if (json) {
            Json j;
            j["schema"] = "pd/tree/1";
            j["m"] = t.m;
            j["edges"] = edges_json(t.edges);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << edges_text(t.edges) << "\n";
        }
    });

    auto* c_tri = app.add_subcommand("triangulate",
                                     "canonical triangulation of the root polytope");
    c_tri->add_option("perm", perm_text, "one-line notation")->required();
    c_tri->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::Triangulation tri = pd::canonical_triangulation(pd::tree(w));
        if (json) {
            Json j;
            j["schema"] = "pd/triangulate/1";
            j["m"] = tri.m;
            j["count"] = tri.simplices.size();
            Json arr = Json::array();
            for (const auto& s : tri.simplices) arr.push_back(edges_json(s.edges));
            j["simplices"] = std::move(arr);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& s : tri.simplices)
                std::cout << edges_text(s.edges) << "\n";
        }
    });

    auto* c_reduce = app.add_subcommand("reduce", "reduced form of a tree monomial");
    c_reduce->add_option("--tree", tree_text, "edges, e.g. 1-2,2-3,2-5")
        ->required();
    c_reduce->add_option("--order", order, "reduction order")
        ->check(CLI::IsMember({"canonical", "random"}));
    c_reduce->add_option("--seed", seed, "seed for --order random");
    auto* opt_t = c_reduce->add_flag("--t", sub_t, "substitute x[i,j] -> t[i]");
    c_reduce->add_flag("--tilde", sub_tilde, "substitute by source rank")
        ->excludes(opt_t);
    c_reduce->callback([&] {
        pd::LabeledTree t = tree_from_text(tree_text);
        pd::BetaPolynomial p =
            order == "canonical"
                ? pd::crf(t)
                : pd::reduced_form(t, pd::Strategy::random_any, seed);
        std::string substitution = sub_t ? "t" : sub_tilde ? "tilde" : "none";
        if (json) {
            Json j;
            j["schema"] = "pd/reduce/1";
            j["m"] = t.m;
            j["edges"] = edges_json(t.edges);
            j["order"] = order;
            j["seed"] = seed;
            j["substitution"] = substitution;
            j["terms"] = sub_t ? pd::json_of(pd::t_substitute(p))
                        : sub_tilde ? pd::json_of(pd::tilde_t_substitute(p, t))
                                    : pd::json_of(p);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (sub_t ? pd::to_string(pd::t_substitute(p))
                         : sub_tilde ? pd::to_string(pd::tilde_t_substitute(p, t))
                                     : pd::to_string(p))
                      << "\n";
        }
    });

    auto* c_groth = app.add_subcommand("groth", "beta-Grothendieck polynomial");
    c_groth->add_option("perm", perm_text, "one-line notation")->required();
    c_groth->add_option("--spec", spec_text,
                        "evaluate, e.g. x=1,y=0,b=0 (b optional)");
    c_groth->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::XYBetaPolynomial g = pd::grothendieck(w, max_n);
        if (spec_text.empty()) {
            if (json) {
                Json j;
                j["schema"] = "pd/groth/1";
                j["n"] = w.size();
                j["terms"] = pd::json_of(g);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << pd::to_string(g) << "\n";
            }
            return;
        }
        pd::Assignment a = parse_spec(spec_text, w.size());
        std::vector<pd::Rational> coeffs = pd::specialize(g, a);
        if (json) {
            Json j;
            j["schema"] = "pd/groth/1";
            j["n"] = w.size();
            j["spec"] = spec_text;
            if (a.beta) {
                j["value"] = rational_text(coeffs[0]);
            } else {
                Json arr = Json::array();
                for (const auto& v : coeffs) arr.push_back(rational_text(v));
                j["beta_coeffs"] = std::move(arr);
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (a.beta ? rational_text(coeffs[0])
                                 : beta_coeffs_text(coeffs))
                      << "\n";
        }
    });

    auto* c_volume = app.add_subcommand("volume",
                                        "normalized volume of the root polytope");
    c_volume->add_option("perm", perm_text, "one-line notation")->required();
    c_volume->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        long long vol = pd::normalized_volume(w);
        if (json) {
            Json j;
            j["schema"] = "pd/volume/1";
            j["volume"] = vol;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << vol << "\n";
        }
    });

    auto* c_ehrhart = app.add_subcommand("ehrhart", "lattice points of dilates");
    c_ehrhart->add_option("perm", perm_text, "one-line notation")->required();
    c_ehrhart->add_option("--tmax", tmax, "largest dilation factor")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_ehrhart->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        pd::LabeledTree t = pd::tree(w);
        std::vector<long long> counts;
        for (long long tt = 0; tt <= tmax; ++tt)
            counts.push_back(pd::ehrhart_count(t, tt, max_m));
        if (json) {
            Json j;
            j["schema"] = "pd/ehrhart/1";
            j["m"] = t.m;
            j["tmax"] = tmax;
            j["counts"] = counts;
            std::cout << j.dump() << "\n";
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < counts.size(); ++i)
                os << (i ? " " : "") << counts[i];
            std::cout << os.str() << "\n";
        }
    });

    auto* c_verify = app.add_subcommand("verify", "check the identities");
    c_verify->add_option("perm", perm_text, "one-line notation")->required();
    c_verify->add_flag("--all", v_all, "every check below");
    c_verify->add_flag("--vol", v_vol, "volume vs specialization");
    c_verify->add_flag("--ehrhart", v_ehrhart, "lattice counts and h-vector");
    c_verify->add_flag("--thm-t", v_thm_t, "tilde images vs inverse side");
    c_verify->add_flag("--thm-gen", v_thm_gen, "pointwise rational identity");
    c_verify->add_flag("--bijection", v_bijection, "dreams onto simplices");
    c_verify->add_flag("--unique", v_unique, "t-image order independence");
    c_verify->callback([&] {
        pd::Permutation w = pd::parse_permutation(perm_text);
        if (!(v_vol || v_ehrhart || v_thm_t || v_thm_gen || v_bijection ||
              v_unique))
            v_all = true;
        if (v_all)
            v_vol = v_ehrhart = v_thm_t = v_thm_gen = v_bijection = v_unique =
                true;
        std::vector<std::pair<std::string, bool>> selected{
            {"vol", v_vol},           {"ehrhart", v_ehrhart},
            {"thm-t", v_thm_t},       {"thm-gen", v_thm_gen},
            {"bijection", v_bijection}, {"unique", v_unique}};
        Json results = Json::object();
        Json failures = Json::object();
        std::vector<std::string> lines;
        for (const auto& [name, wanted] : selected) {
            if (!wanted) continue;
            std::string why;
            bool ok = true;
            if (name == "vol") ok = pd::verify_volume(w, &why);
            if (name == "ehrhart")
                ok = pd::verify_ehrhart(w, &why) && pd::verify_h_identity(w, &why);
            if (name == "thm-t") ok = pd::verify_thm_t(w, 10, 1, &why);
            if (name == "thm-gen") ok = pd::verify_thm_gen(w, 10, 1, &why);
            if (name == "bijection") ok = check_bijection(w, &why);
            if (name == "unique") ok = check_unique(w, &why);
            results[name] = ok;
            if (!ok) {
                failures[name] = why;
                exit_code = 1;
                lines.push_back(name + ": FAIL " + why);
            } else {
                lines.push_back(name + ": pass");
            }
        }
        if (json) {
            Json j;
            j["schema"] = "pd/verify/1";
            j["perm"] = w.to_string();
            j["results"] = std::move(results);
            j["failures"] = std::move(failures);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& line : lines) std::cout << line << "\n";
        }
    });

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
