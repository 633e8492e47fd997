// Command-line front end. Exit codes: 0 ok, 1 usage or other error,
// 2 invalid (q,p,n) or u, 3 inconsistent coloring, 4 verification failure.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdl/io.hpp"
#include "tdl/quandle.hpp"
#include "tdl/search.hpp"

namespace {

using namespace tdl;
using json = nlohmann::ordered_json;

constexpr int kInvalidSpec = 2;
constexpr int kBadColoring = 3;
constexpr int kVerifyFailed = 4;

struct RunConfig {
    int q = 11;
    int p = 5;
    int n = 4;
    std::vector<int> u{1};
    std::string braid;
    int strands = 0;
    std::vector<std::string> colors;
    std::string out;
    std::string format = "text";
    bool st_only = false;
    bool all = false;
    std::string surgery = "5/1";
    std::string mirror = "b5";

    GroupSpec spec() const { return {q, p, n}; }
};

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string approx(const Cyclo& c) {
    const auto z = c.to_complex();
    std::ostringstream s;
    s << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return s.str();
}

std::vector<int> u_values(const RunConfig& cfg) {
    if (cfg.all) {
        std::vector<int> all(cfg.p);
        for (int u = 0; u < cfg.p; ++u) all[u] = u;
        return all;
    }
    return cfg.u;
}

TwistedDouble theory_for(const RunConfig& cfg, int u) { return TwistedDouble({cfg.spec(), u}); }

int cmd_anyons(const RunConfig& cfg) {
    std::ostringstream text;
    json rows = json::array();
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        if (cfg.format == "text") text << "# u = " << u << "\nlabel\td\ttheta\n";
        for (int o = 0; o < th.size(); ++o) {
            const auto& obj = th.object(o);
            const Cyclo t = th.twist(o);
            if (cfg.format == "json") {
                rows.push_back({{"u", u}, {"label", obj.label}, {"d", obj.dim()}, {"theta", cyclo_to_json(t)}});
            } else if (cfg.format == "csv") {
                const auto z = t.to_complex();
                text << u << ",\"" << obj.label << "\"," << obj.dim() << "," << std::setprecision(12) << z.real()
                     << "," << z.imag() << "\n";
            } else {
                text << obj.label << "\t" << obj.dim() << "\t" << t.to_string() << "\n";
            }
        }
    }
    if (cfg.format == "json") emit(cfg, rows.dump(1));
    else emit(cfg, (cfg.format == "csv" ? std::string("u,label,d,theta_re,theta_im\n") : std::string()) + text.str());
    return 0;
}

int cmd_modular(const RunConfig& cfg) {
    json out = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        const ModularData md = modular_data(th);
        const FusionRules fr = fusion_rules(md);
        const ModularityReport rep = check_modularity(md, fr);
        all_ok = all_ok && rep.ok();
        text << "u = " << u << ": modularity " << (rep.ok() ? "PASS" : "FAIL") << ", c = " << rep.c_mod_8
             << " mod 8, self-dual labels " << rep.fixed_points << "\n";
        for (const auto& f : rep.failures) text << "  " << f << "\n";
        if (cfg.format == "json") {
            json j = modular_data_to_json(md);
            j["modularity_ok"] = rep.ok();
            out.push_back(std::move(j));
        } else if (cfg.format == "csv") {
            text << matrix_to_csv(md.S, md.labels);
        }
    }
    if (cfg.format == "json") emit(cfg, out.size() == 1 ? out[0].dump(1) : out.dump(1));
    else emit(cfg, text.str());
    if (cfg.format == "json" && !cfg.out.empty()) std::cerr << text.str();
    if (!all_ok) throw VerifyFailure("modularity checks failed");
    return 0;
}

int cmd_wmatrix(const RunConfig& cfg) {
    json out = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        const ModularData md = modular_data(th);
        const WMatrix w = w_matrix(th);
        const WIdentityReport ids = w_identities(md, w);
        int ba_total = 0, ba_bad = 0;
        const bool default_family = cfg.q == 11 && cfg.p == 5;
        if (default_family) {
            for (int b = 0; b < th.size(); ++b) {
                if (th.object(b).kind != ChargeKind::CyclicB) continue;
                for (int a = 0; a < th.size(); ++a) {
                    if (th.object(a).kind != ChargeKind::CyclicA) continue;
                    ++ba_total;
                    if (!(w.W(b, a) == ba_closed_form(th, b, a))) ++ba_bad;
                }
            }
        }
        const bool ok = ids.ok() && ba_bad == 0;
        all_ok = all_ok && ok;
        text << "u = " << u << ": W symmetric " << (ids.asymmetric.empty() ? "yes" : "NO") << ", identity (1) failures "
             << ids.identity1.size() << ", identity (2) failures " << ids.identity2.size();
        if (default_family) text << ", BA closed form " << ba_total - ba_bad << "/" << ba_total;
        text << "\n";
        if (cfg.format == "json") out.push_back(w_matrix_to_json(md.params, md.labels, w));
        else if (cfg.format == "csv") text << matrix_to_csv(w.W, md.labels);
    }
    if (cfg.format == "json") {
        emit(cfg, out.size() == 1 ? out[0].dump(1) : out.dump(1));
        std::cerr << text.str();
    } else {
        emit(cfg, text.str());
    }
    if (!all_ok) throw VerifyFailure("W-matrix checks failed");
    return 0;
}

int cmd_invariant(const RunConfig& cfg) {
    if (cfg.strands <= 0) throw CLI::ValidationError("--strands", "required and positive");
    const BraidWord word = parse_braid(cfg.braid, cfg.strands);
    std::ostringstream text;
    json out = json::array();
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        std::vector<int> colors;
        if (cfg.colors.size() == 1) colors.assign(cfg.strands, th.find(cfg.colors[0]));
        else
            for (const auto& c : cfg.colors) colors.push_back(th.find(c));
        const ColoredBraid cb{word, colors};
        validate_coloring(th, cb);
        const Cyclo framed = framed_invariant(th, cb);
        const Cyclo zero = zero_framed_invariant(th, cb);
        const auto cs = closure_structure(word);
        if (cfg.format == "json") {
            out.push_back({{"u", u},
                           {"braid", format_braid(word)},
                           {"writhe", cs.writhe},
                           {"components", cs.components.size()},
                           {"framed", cyclo_to_json(framed)},
                           {"zero_framed", cyclo_to_json(zero)}});
        } else {
            text << "u = " << u << "  braid " << format_braid(word) << "  components " << cs.components.size()
                 << "  writhe " << cs.writhe << "\n";
            text << "  framed      " << framed.to_string() << "  ~ " << approx(framed) << "\n";
            text << "  zero-framed " << zero.to_string() << "  ~ " << approx(zero) << "\n";
        }
    }
    emit(cfg, cfg.format == "json" ? (out.size() == 1 ? out[0].dump(1) : out.dump(1)) : text.str());
    return 0;
}

int cmd_quandle(const RunConfig& cfg) {
    if (cfg.strands <= 0) throw CLI::ValidationError("--strands", "required and positive");
    const BraidWord word = parse_braid(cfg.braid, cfg.strands);
    std::ostringstream text;
    bool all_ok = true;
    text << "braid " << format_braid(word) << "  writhe " << word.writhe() << "\n";
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        for (int k = 1; k < cfg.p; ++k) {
            for (int s = 0; s < cfg.p; ++s) {
                const SingleColorReport rep = single_color_check(th, word, k, s);
                all_ok = all_ok && rep.holds;
                text << "u=" << u << " B_{" << k << "," << s << "}  count " << rep.count << "  "
                     << (rep.holds ? "engine = theta^writhe * count" : "MISMATCH") << "\n";
            }
        }
    }
    emit(cfg, text.str());
    if (!all_ok) throw VerifyFailure("quandle check failed");
    return 0;
}

std::string label_set(const std::vector<int>& ids, const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + labels[ids[i]];
    return s + "}";
}

std::string class_string(const std::vector<std::vector<int>>& classes, const std::vector<int>& us) {
    std::string s;
    for (const auto& c : classes) {
        s += "{";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(us[c[i]]);
        s += "} ";
    }
    return s;
}

int cmd_distinguish(const RunConfig& cfg) {
    std::vector<int> us = u_values(cfg);
    if (!cfg.all && us.size() == 1 && cfg.st_only) us = [&] {
        std::vector<int> v(cfg.p);
        for (int u = 0; u < cfg.p; ++u) v[u] = u;
        return v;
    }();
    std::vector<InvariantData> st, stw;
    std::vector<ModularData> mds;
    std::vector<WMatrix> ws;
    for (int u : us) {
        const TwistedDouble th = theory_for(cfg, u);
        mds.push_back(modular_data(th));
        st.push_back(InvariantData::from(mds.back()));
        if (!cfg.st_only) {
            ws.push_back(w_matrix(th));
            stw.push_back(InvariantData::from(mds.back(), &ws.back()));
        }
    }
    std::ostringstream text;
    if (us.size() == 2) {
        const SearchResult a = equivalence_search(st[0], st[1]);
        text << "(S,T)   u=" << us[0] << " vs u=" << us[1] << ": " << (a.equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT")
             << "\n";
        if (!cfg.st_only) {
            const SearchResult b = equivalence_search(stw[0], stw[1]);
            text << "(S,T,W) u=" << us[0] << " vs u=" << us[1] << ": "
                 << (b.equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT") << "\n";
            if (!b.equivalent) {
                text << "  search: " << b.reason << "\n";
                const auto& labels = mds[0].labels;
                auto idx = [&](const std::string& l) {
                    const auto it = std::find(labels.begin(), labels.end(), l);
                    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
                };
                const int anchor = idx("B_{1,0}");
                const int target = idx("A_{1,4}");
                std::vector<Obstruction> obs;
                if (anchor >= 0 && target >= 0) obs.push_back(t_versus_w(stw[0], stw[1], anchor, target));
                if (obs.empty() || !obs[0].disjoint()) {
                    auto all = t_versus_w_all(stw[0], stw[1]);
                    if (!all.empty()) obs.insert(obs.begin(), all.front());
                }
                for (const auto& ob : obs) {
                    text << "  obstruction with " << labels[ob.anchor] << " fixed by T: T allows " << labels[ob.target]
                         << " -> " << label_set(ob.t_allowed, labels) << ", W requires "
                         << label_set(ob.w_required, labels) << (ob.disjoint() ? "  (disjoint)" : "") << "\n";
                }
            }
        }
    } else {
        text << "(S,T)   classes over u: " << class_string(equivalence_classes(st), us) << "\n";
        if (!cfg.st_only) text << "(S,T,W) classes over u: " << class_string(equivalence_classes(stw), us) << "\n";
    }
    emit(cfg, text.str());
    return 0;
}

int cmd_lens(const RunConfig& cfg) {
    const auto slash = cfg.surgery.find('/');
    if (slash == std::string::npos) throw CLI::ValidationError("--surgery", "expected P/Q");
    const int P = std::stoi(cfg.surgery.substr(0, slash));
    const int Q = std::stoi(cfg.surgery.substr(slash + 1));
    std::ostringstream text;
    json out = json::array();
    for (int u : u_values(cfg)) {
        const TwistedDouble th = theory_for(cfg, u);
        const ModularData md = modular_data(th);
        const auto cf = negative_continued_fraction(P, Q);
        const Cyclo z = lens_space_invariant(md, P, Q);
        std::string cf_text;
        for (int a : cf) cf_text += (cf_text.empty() ? "" : ",") + std::to_string(a);
        if (cfg.format == "json") {
            out.push_back({{"u", u}, {"p", P}, {"q", Q}, {"continued_fraction", cf}, {"Z", cyclo_to_json(z)}});
        } else {
            text << "u = " << u << "  L(" << P << "," << Q << ")  a = [" << cf_text << "] (a_1..a_n, p/q = a_n - 1/(...))\n"
                 << "  Z = " << z.to_string() << "  ~ " << approx(z) << "\n";
        }
    }
    emit(cfg, cfg.format == "json" ? (out.size() == 1 ? out[0].dump(1) : out.dump(1)) : text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the twisted doubles D^omega(Z_q x| Z_p)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--q", cfg.q, "order of the normal cyclic subgroup")->capture_default_str();
    app.add_option("--p", cfg.p, "order of the acting cyclic group")->capture_default_str();
    app.add_option("--n", cfg.n, "multiplier with b a b^-1 = a^n")->capture_default_str();
    app.add_option("--u", cfg.u, "cocycle labels (one or more)")->capture_default_str();
    app.add_flag("--all", cfg.all, "use every u in [0,p)");
    app.add_option("--out", cfg.out, "write output here instead of stdout");
    app.add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* anyons = app.add_subcommand("anyons", "labels, dimensions and twists");
    auto* modular = app.add_subcommand("modular", "S and T with the modularity checks");
    auto* wmatrix = app.add_subcommand("wmatrix", "Whitehead W-matrix with its identities");
    auto* invariant = app.add_subcommand("invariant", "framed and zero-framed invariant of a colored braid closure");
    auto* quandle = app.add_subcommand("quandle", "single-color invariants against quandle coloring counts");
    auto* distinguish = app.add_subcommand("distinguish", "permutation-equivalence search across u");
    auto* lens = app.add_subcommand("lens", "lens space invariant");
    for (auto* sub : {invariant, quandle}) {
        sub->add_option("--braid", cfg.braid, "e.g. \"s2^-2 s1 s2^-1 s1\" or \"[-2,-2,1,-2,1]\"")->required();
        sub->add_option("--strands", cfg.strands, "number of strands")->required();
    }
    invariant->add_option("--colors", cfg.colors, "one label per strand, or one label for all")->required();
    distinguish->add_flag("--st-only", cfg.st_only, "compare (S,T) only");
    lens->add_option("--surgery", cfg.surgery, "P/Q for L(P,Q)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        cfg.spec().validate();
        for (int u : u_values(cfg)) CocycleParams{cfg.spec(), u}.validate();
        if (anyons->parsed()) return cmd_anyons(cfg);
        if (modular->parsed()) return cmd_modular(cfg);
        if (wmatrix->parsed()) return cmd_wmatrix(cfg);
        if (invariant->parsed()) return cmd_invariant(cfg);
        if (quandle->parsed()) return cmd_quandle(cfg);
        if (distinguish->parsed()) return cmd_distinguish(cfg);
        if (lens->parsed()) return cmd_lens(cfg);
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kInvalidSpec;
    } catch (const ColoringError& e) {
        std::cerr << "inconsistent coloring: " << e.what() << "\n";
        return kBadColoring;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
