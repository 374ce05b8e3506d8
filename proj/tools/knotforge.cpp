#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotforge/construct.hpp"
#include "knotforge/surgery.hpp"
#include "knotforge/tangle.hpp"

using namespace knotforge;

namespace {

int eval_limit(int flag_limit) {
    if (flag_limit > 0) return flag_limit;
    if (const char* env = std::getenv("KNOTFORGE_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultSkeinLimit;
}

Diagram load_pd(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw BadInput("cannot open PD file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return Diagram::parse_pd(ss.str());
}

RealizedLink realize_dispatch(const ConwayPoly& nabla, int n) {
    if (n <= 0) throw BadInput("--components must be positive");
    if (n == 1) return realize_knot(nabla);
    if (n == 2) return realize_link2(nabla);
    return realize_link_n(nabla, n);
}

void print_realized(const RealizedLink& r, bool json) {
    if (json) {
        std::cout << r.to_json() << "\n";
        return;
    }
    std::cout << "nabla: " << r.nabla.to_string() << "\n"
              << "delta: " << conway_to_alexander(r.nabla).to_string() << "\n"
              << "components: " << r.n << "\n"
              << "d: " << r.d << "\n"
              << "t_strong: " << r.t_strong << "\n"
              << "t_strong_reverse: " << r.t_strong_reverse << "\n"
              << "volume_bound: " << r.volume_bound << "\n"
              << "fibered_necessary: " << (r.fibered_necessary ? "yes" : "no") << "\n"
              << "pd:\n"
              << r.diagram.to_pd();
}

struct EvalReport {
    ConwayPoly nabla;
    IntLaurent delta;
    std::string det_check;
};

EvalReport eval_diagram(const Diagram& d, int limit) {
    EvalReport rep;
    rep.nabla = conway_skein(d, limit);
    rep.delta = conway_to_alexander(rep.nabla);
    rep.det_check = "skipped";
    if (d.validate().n == d.component_count() && d.component_count() >= 1 && d.free_loops() == 0) {
        try {
            IntLaurent det = alexander_det(d);
            rep.det_check = equal_up_to_units(det, rep.delta) ? "ok" : "MISMATCH";
        } catch (const std::exception&) {
        }
    }
    return rep;
}

void print_eval(const EvalReport& rep, bool json) {
    if (json) {
        nlohmann::json j;
        j["nabla"] = rep.nabla.to_string();
        j["delta"] = rep.delta.is_zero() ? "0" : rep.delta.to_string();
        j["determinant_check"] = rep.det_check;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "nabla: " << rep.nabla.to_string() << "\n"
              << "delta: " << (rep.delta.is_zero() ? "0" : rep.delta.to_string()) << "\n"
              << "determinant_check: " << rep.det_check << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotforge: Alexander/Conway polynomial realization toolkit"};
    app.require_subcommand(1);

    std::string nabla_text, delta_text, pd_path, conway_text, monte_text;
    int components = 1, limit_flag = 0, count = 4;
    bool json = false;

    auto* realize = app.add_subcommand("realize", "realize a polynomial as a link diagram");
    realize->add_option("--nabla", nabla_text, "Conway polynomial in z");
    realize->add_option("--delta", delta_text, "Alexander polynomial in t (symmetric)");
    realize->add_option("--components", components, "number of link components");
    realize->add_flag("--json", json, "JSON output");

    auto* eval = app.add_subcommand("eval", "evaluate nabla/delta of a diagram or notation");
    eval->add_option("--pd", pd_path, "PD code file");
    eval->add_option("--conway", conway_text, "Conway tangle notation");
    eval->add_option("--limit", limit_flag, "evaluator crossing limit");
    eval->add_flag("--json", json, "JSON output");

    auto* parse = app.add_subcommand("parse", "parse Conway notation and echo it canonically");
    parse->add_option("--conway", conway_text, "Conway tangle notation")->required();
    parse->add_flag("--json", json, "JSON output");

    auto* normalize = app.add_subcommand("normalize", "canonicalize a Montesinos form");
    normalize->add_option("form", monte_text, "Montesinos form M(q1/p1,...;e)")->required();

    auto* surgery = app.add_subcommand("surgery", "tangle surgery arithmetic");
    int sk = 1, sn = 0, qmax = 5;
    auto* triples = surgery->add_subcommand("triples", "the (p,q,r) solution for (k,n)");
    triples->add_option("--k", sk, "clasp parameter k")->required();
    triples->add_option("--n", sn, "family index n")->required();
    auto* largevol = surgery->add_subcommand("large-volume", "triples with pq+pr+qr = -1");
    largevol->add_option("--qmax", qmax, "largest q")->required();
    surgery->require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "twist number and volume bound of a diagram");
    bound->add_option("--pd", pd_path, "PD code file")->required();
    bound->add_flag("--json", json, "JSON output");

    auto* family = app.add_subcommand("family", "polynomial-preserving family as JSONL");
    family->add_option("--nabla", nabla_text, "Conway polynomial in z")->required();
    family->add_option("--components", components, "number of link components");
    family->add_option("--count", count, "members beyond the base realization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*realize) {
            if (nabla_text.empty() == delta_text.empty())
                throw BadInput("realize needs exactly one of --nabla / --delta");
            ConwayPoly nabla = nabla_text.empty()
                                   ? alexander_to_conway(IntLaurent::parse(delta_text))
                                   : ConwayPoly::parse(nabla_text);
            print_realized(realize_dispatch(nabla, components), json);
        } else if (*eval) {
            if (pd_path.empty() == conway_text.empty())
                throw BadInput("eval needs exactly one of --pd / --conway");
            Diagram d =
                pd_path.empty() ? tangle_to_diagram(parse_conway(conway_text)) : load_pd(pd_path);
            print_eval(eval_diagram(d, eval_limit(limit_flag)), json);
        } else if (*parse) {
            TangleExpr t = parse_conway(conway_text);
            if (json) {
                nlohmann::json j;
                j["conway"] = print_conway(t);
                j["pd"] = tangle_to_diagram(t).to_pd();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << print_conway(t) << "\n";
            }
        } else if (*normalize) {
            std::cout << montesinos_to_string(montesinos_canonical(parse_montesinos(monte_text)))
                      << "\n";
        } else if (*surgery) {
            if (*triples) {
                SurgeryTriple t = surgery_triples(sk, sn);
                std::cout << t.p << " " << t.q << " " << t.r << "\n";
            } else {
                for (const SurgeryTriple& t : large_volume_triples(qmax))
                    std::cout << t.p << " " << t.q << " " << t.r << "\n";
            }
        } else if (*bound) {
            Diagram d = load_pd(pd_path);
            TwistCounts tc = d.twist_classes();
            if (json) {
                nlohmann::json j;
                j["t_strong"] = tc.t_strong;
                j["t_strong_reverse"] = tc.t_strong_reverse;
                j["volume_bound"] = d.volume_bound();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "t_strong: " << tc.t_strong << "\n"
                          << "t_strong_reverse: " << tc.t_strong_reverse << "\n"
                          << "volume_bound: " << d.volume_bound() << "\n";
            }
        } else if (*family) {
            RealizedLink base = realize_dispatch(ConwayPoly::parse(nabla_text), components);
            std::cout << enumerate_family(base, count).to_jsonl();
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Impossible& e) {
        std::cerr << "impossible: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimit& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
