#include "CLI11.hpp"
#include "json.hpp"

#include "degcone/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace degcone;

namespace {

struct Common {
    std::string type = "A";
    int rank = 2;
    std::string out;
    std::string format = "text";
    unsigned long seed = 20260824;
    int jobs = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_type = true) {
    if (with_type) {
        sub->add_option("--type", c.type, "Cartan type letter (A, B, C, D, G)");
        sub->add_option("--rank", c.rank, "rank of the root system");
    }
    sub->add_option("--out", c.out, "write the report to this file instead of stdout");
    sub->add_option("--format", c.format, "output format: json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--seed", c.seed, "seed for specialized-mode evaluation points");
    sub->add_option("--jobs", c.jobs, "worker threads (accepted for compatibility)");
}

RootSystem make_rs(const Common& c) {
    if (c.type.size() != 1) throw CLI::ValidationError("--type must be a single letter");
    return RootSystem(CartanType::parse(c.type[0], c.rank));
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
    return v;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
    auto v = parse_longs(s);
    if ((long)v.size() != rs.n) throw CLI::ValidationError("--weight needs " + std::to_string(rs.n) + " entries");
    return Weight(v.begin(), v.end());
}

DegreeFunction parse_degree(const RootSystem& rs, const std::string& s) {
    auto v = parse_longs(s);
    if ((long)v.size() != rs.num_positive_roots())
        throw CLI::ValidationError("--degree needs " + std::to_string(rs.num_positive_roots()) +
                                   " entries in canonical root order");
    return v;
}

std::string dname(const std::string& label) {
    if (label.rfind("a_", 0) == 0) return "d" + label.substr(1);
    return "d_" + label;
}

std::string form_str(const RootSystem& rs, const LinearForm& f) {
    std::string lhs, rhs;
    auto term = [](std::string& side, long c, const std::string& l) {
        if (!side.empty()) side += " + ";
        if (c != 1) side += std::to_string(c);
        side += l;
    };
    for (long k = 0; k < rs.num_positive_roots(); ++k) {
        if (f.a[k] > 0) term(lhs, f.a[k], dname(rs.labels[k]));
        if (f.a[k] < 0) term(rhs, -f.a[k], dname(rs.labels[k]));
    }
    if (rhs.empty()) rhs = "0";
    return lhs + " > " + rhs;
}

json cone_json(const RootSystem& rs, const StrictCone& c) {
    json rows = json::array();
    for (auto& f : c.forms)
        rows.push_back({{"inequality", form_str(rs, f)}, {"coefficients", f.a}});
    return rows;
}

void render_text(const json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void render_csv(const json& j, std::ostream& os) {
    auto cell = [](const json& v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            q += "\"";
            return q;
        }
        return s;
    };
    if (j.is_object() && j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() &&
        j["rows"][0].is_object()) {
        bool first = true;
        for (auto& [k, v] : j["rows"][0].items()) {
            (void)v;
            os << (first ? "" : ",") << k;
            first = false;
        }
        os << "\n";
        for (auto& row : j["rows"]) {
            first = true;
            for (auto& [k, v] : row.items()) {
                (void)k;
                os << (first ? "" : ",") << cell(v);
                first = false;
            }
            os << "\n";
        }
        return;
    }
    // fallback: flat key,value pairs
    if (j.is_object())
        for (auto& [k, v] : j.items()) os << k << "," << cell(v) << "\n";
    else
        os << cell(j) << "\n";
}

void emit(const json& j, const Common& c) {
    std::ostringstream os;
    if (c.format == "json")
        os << j.dump(2) << "\n";
    else if (c.format == "csv")
        render_csv(j, os);
    else
        render_text(j, os);
    if (c.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open output file " + c.out);
        f << os.str();
    }
}

verify::Suite::ConeEntry quantum_entry(const RootSystem& rs, const std::string& word,
                                       const std::string& mode, unsigned long seed) {
    verify::Suite::ConeEntry e;
    e.co = convex_order(rs, ReducedWord::parse(word.empty() ? default_word_string(rs) : word));
    if (mode == "specialized")
        e.res = quantum_cone_specialized(rs, e.co, seed);
    else
        e.res = quantum_cone_exact(rs, e.co);
    return e;
}

json ls_relations_for_word(const RootSystem& rs, const std::string& word) {
    QEngine<ExactQ> eng(rs, ExactQ{});
    auto co = convex_order(rs, ReducedWord::parse(word.empty() ? default_word_string(rs) : word));
    json rows = json::array();
    auto roots = eng.pbw_root_vectors(co);
    long N = rs.num_positive_roots();
    for (long i = 0; i < N; ++i)
        for (long j = i + 1; j < N; ++j) {
            auto rel = ls_relation(eng, co, roots, i, j);
            json terms = json::array();
            for (auto& [s, c] : rel.terms) {
                std::string mono;
                for (long t = 0; t < N; ++t)
                    if (s[t] > 0) {
                        mono += "F(" + rs.labels[rs.root_index(co.betas[t])] + ")";
                        if (s[t] > 1) mono += "^" + std::to_string(s[t]);
                    }
                terms.push_back({{"monomial", mono}, {"coefficient", c.str()}, {"support", s}});
            }
            if (terms.empty()) continue;
            rows.push_back({{"i", i},
                            {"j", j},
                            {"beta_i", rs.labels[rs.root_index(co.betas[i])]},
                            {"beta_j", rs.labels[rs.root_index(co.betas[j])]},
                            {"q_power", rel.qpow},
                            {"terms", terms}});
        }
    return json{{"word", co.word.str()}, {"rows", rows}};
}

json weight_json(const Weight& w) { return json(std::vector<long>(w.begin(), w.end())); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with degree cones and monomial bases"};
    app.require_subcommand(1);
    int exit_code = 0;

    // roots
    {
        auto c = std::make_shared<Common>();
        auto* sub = app.add_subcommand("roots", "list the positive roots in canonical order");
        add_common(sub, *c);
        sub->callback([c] {
            RootSystem rs = make_rs(*c);
            json rows = json::array();
            for (long g = 0; g < rs.num_positive_roots(); ++g)
                rows.push_back({{"index", g},
                                {"label", rs.labels[g]},
                                {"root", rs.positive_roots[g]},
                                {"height", rs.height(rs.positive_roots[g])}});
            emit({{"type", c->type}, {"rank", c->rank}, {"count", rows.size()}, {"rows", rows}}, *c);
        });
    }
    // words
    {
        auto c = std::make_shared<Common>();
        auto limit = std::make_shared<long>(20);
        auto* sub = app.add_subcommand("words", "enumerate reduced words of the longest element");
        add_common(sub, *c);
        sub->add_option("--limit", *limit, "maximum number of words to list (0 for all)");
        sub->callback([c, limit] {
            RootSystem rs = make_rs(*c);
            json rows = json::array();
            for (auto& w : all_reduced_words(rs, *limit)) rows.push_back({{"word", w.str()}});
            emit({{"type", c->type}, {"rank", c->rank}, {"count", rows.size()}, {"rows", rows}}, *c);
        });
    }
    // cone-classical
    {
        auto c = std::make_shared<Common>();
        auto* sub = app.add_subcommand("cone-classical", "inequalities of the classical degree cone");
        add_common(sub, *c);
        sub->callback([c] {
            RootSystem rs = make_rs(*c);
            auto cone = classical_cone(rs);
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"ambient", rs.labels},
                  {"rows", cone_json(rs, cone)}},
                 *c);
        });
    }
    // cone-quantum
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("exact");
        auto* sub = app.add_subcommand("cone-quantum", "inequalities of the quantum degree cone of a word");
        add_common(sub, *c);
        sub->add_option("--word", *word, "reduced word as a digit string (default: built-in word)");
        sub->add_option("--mode", *mode, "exact or specialized")
            ->check(CLI::IsMember({"exact", "specialized"}));
        sub->callback([c, word, mode] {
            RootSystem rs = make_rs(*c);
            auto e = quantum_entry(rs, *word, *mode, c->seed);
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"word", e.co.word.str()},
                  {"mode", *mode},
                  {"ambient", rs.labels},
                  {"rows", cone_json(rs, e.res.cone)}},
                 *c);
        });
    }
    // ls-relations
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("ls-relations", "nontrivial straightening relations with exact coefficients");
        add_common(sub, *c);
        sub->add_option("--word", *word, "reduced word as a digit string (default: built-in word)");
        sub->callback([c, word] {
            RootSystem rs = make_rs(*c);
            json j = ls_relations_for_word(rs, *word);
            j["type"] = c->type;
            j["rank"] = c->rank;
            emit(j, *c);
        });
    }
    // cone-empty
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto word2 = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("exact");
        auto* sub = app.add_subcommand("cone-empty", "feasibility of one quantum cone, or of the joint cone of two words");
        add_common(sub, *c);
        sub->add_option("--word", *word, "reduced word");
        sub->add_option("--word2", *word2, "second reduced word for a joint emptiness check");
        sub->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "specialized"}));
        sub->callback([c, word, word2, mode] {
            RootSystem rs = make_rs(*c);
            auto e1 = quantum_entry(rs, *word, *mode, c->seed);
            FeasibilityResult fr;
            if (word2->empty()) {
                fr = is_empty(e1.res.cone);
            } else {
                auto e2 = quantum_entry(rs, *word2, *mode, c->seed);
                fr = is_empty_joint(e1.res.cone, e2.res.cone);
            }
            json j = {{"type", c->type}, {"rank", c->rank}, {"word", e1.co.word.str()}};
            if (!word2->empty()) j["word2"] = *word2;
            j["empty"] = fr.empty;
            if (fr.empty) {
                json cert = json::array();
                for (auto& r : fr.certificate) cert.push_back(r.get_str());
                j["certificate"] = cert;
            } else {
                json wit = json::array();
                for (auto& r : fr.witness) wit.push_back(r.get_str());
                j["witness"] = wit;
            }
            emit(j, *c);
        });
    }
    // cone-equal
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto word2 = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("exact");
        auto* sub = app.add_subcommand("cone-equal", "semantic equality of the quantum cones of two words");
        add_common(sub, *c);
        sub->add_option("--word", *word, "first reduced word")->required();
        sub->add_option("--word2", *word2, "second reduced word")->required();
        sub->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "specialized"}));
        sub->callback([c, word, word2, mode] {
            RootSystem rs = make_rs(*c);
            auto e1 = quantum_entry(rs, *word, *mode, c->seed);
            auto e2 = quantum_entry(rs, *word2, *mode, c->seed);
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"word", *word},
                  {"word2", *word2},
                  {"equal", cone_equal(e1.res.cone, e2.res.cone)}},
                 *c);
        });
    }
    // interior-point
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("exact");
        auto* sub = app.add_subcommand("interior-point", "inductive interior lattice point of a quantum cone");
        add_common(sub, *c);
        sub->add_option("--word", *word, "reduced word");
        sub->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "specialized"}));
        sub->callback([c, word, mode] {
            RootSystem rs = make_rs(*c);
            auto e = quantum_entry(rs, *word, *mode, c->seed);
            auto d = to_canonical_order(rs, e.co,
                                        interior_lattice_point(rs.num_positive_roots(), e.res.relations));
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"word", e.co.word.str()},
                  {"labels", rs.labels},
                  {"degree", d},
                  {"in_cone", contains(e.res.cone, d)}},
                 *c);
        });
    }
    // minimal-points
    {
        auto c = std::make_shared<Common>();
        auto word = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("exact");
        auto max_sum = std::make_shared<long>(64);
        auto* sub = app.add_subcommand("minimal-points", "strictly positive lattice points of minimal coordinate sum");
        add_common(sub, *c);
        sub->add_option("--word", *word, "reduced word");
        sub->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "specialized"}));
        sub->add_option("--max-sum", *max_sum, "give up beyond this coordinate sum");
        sub->callback([c, word, mode, max_sum] {
            RootSystem rs = make_rs(*c);
            auto e = quantum_entry(rs, *word, *mode, c->seed);
            auto mp = minimal_lattice_points(e.res.cone, *max_sum);
            json rows = json::array();
            for (auto& p : mp.points) rows.push_back({{"point", p}});
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"word", e.co.word.str()},
                  {"labels", rs.labels},
                  {"bound_reached", mp.bound_reached},
                  {"sum", mp.sum},
                  {"rows", rows}},
                 *c);
        });
    }
    // irrep
    {
        auto c = std::make_shared<Common>();
        auto wstr = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("irrep", "dimensions of a simple highest weight module");
        add_common(sub, *c);
        sub->add_option("--weight", *wstr, "dominant weight in fundamental-weight coordinates")->required();
        sub->callback([c, wstr] {
            RootSystem rs = make_rs(*c);
            Weight lam = parse_weight(rs, *wstr);
            Irrep rep(rs, lam);
            json rows = json::array();
            for (auto& [nu, d] : rep.weight_dims()) rows.push_back({{"content", nu}, {"dim", d}});
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"weight", weight_json(lam)},
                  {"dimension", rep.dimension().get_str()},
                  {"weight_spaces", rows.size()},
                  {"rows", rows}},
                 *c);
        });
    }
    // monomial-check
    {
        auto c = std::make_shared<Common>();
        auto wstr = std::make_shared<std::string>();
        auto dstr = std::make_shared<std::string>();
        auto word = std::make_shared<std::string>();
        auto fundamentals = std::make_shared<bool>(false);
        auto points = std::make_shared<bool>(false);
        auto* sub = app.add_subcommand("monomial-check", "monomiality of the degree-graded defining ideal");
        add_common(sub, *c);
        sub->add_option("--degree", *dstr, "degree values in canonical root order")->required();
        sub->add_option("--weight", *wstr, "dominant weight to check");
        sub->add_option("--word", *word, "reduced word fixing the monomial ordering");
        sub->add_flag("--fundamentals", *fundamentals, "check every fundamental weight");
        sub->add_flag("--points", *points, "list the surviving exponents");
        sub->callback([c, wstr, dstr, word, fundamentals, points, &exit_code] {
            RootSystem rs = make_rs(*c);
            auto d = parse_degree(rs, *dstr);
            std::vector<Weight> lams;
            if (*fundamentals)
                for (int i = 0; i < rs.n; ++i) {
                    Weight w(rs.n, 0);
                    w[i] = 1;
                    lams.push_back(w);
                }
            if (!wstr->empty()) lams.push_back(parse_weight(rs, *wstr));
            if (lams.empty()) throw CLI::ValidationError("need --weight or --fundamentals");
            std::optional<ConvexOrder> co;
            if (!word->empty()) co = convex_order(rs, ReducedWord::parse(*word));
            json rows = json::array();
            bool all = true;
            for (auto& lam : lams) {
                auto rep = is_monomial_ideal(rs, lam, d, co ? &*co : nullptr);
                all = all && rep.monomial;
                json row = {{"weight", weight_json(lam)},
                            {"monomial", rep.monomial},
                            {"survivors", rep.survivors.size()},
                            {"lemma_holds", rep.lemma_holds},
                            {"corollary_holds", rep.corollary_holds}};
                if (*points) {
                    json pts = json::array();
                    for (auto& s : rep.survivors) pts.push_back(s);
                    row["exponents"] = pts;
                }
                rows.push_back(std::move(row));
            }
            emit({{"type", c->type},
                  {"rank", c->rank},
                  {"degree", d},
                  {"all_monomial", all},
                  {"rows", rows}},
                 *c);
            if (!all) exit_code = 1;
        });
    }
    // minkowski-check
    {
        auto c = std::make_shared<Common>();
        auto wstr = std::make_shared<std::string>();
        auto dstr = std::make_shared<std::string>();
        auto bound = std::make_shared<long>(300);
        auto* sub = app.add_subcommand("minkowski-check", "compare Minkowski sums of fundamental monomial sets with dimensions");
        add_common(sub, *c);
        sub->add_option("--degree", *dstr, "degree values in canonical root order")->required();
        sub->add_option("--weight", *wstr, "dominant weight")->required();
        sub->add_option("--direct-bound", *bound, "run the direct monomiality check up to this dimension");
        sub->callback([c, wstr, dstr, bound, &exit_code] {
            RootSystem rs = make_rs(*c);
            auto d = parse_degree(rs, *dstr);
            Weight lam = parse_weight(rs, *wstr);
            auto res = minkowski_global_check(rs, d, lam, *bound);
            json j = {{"type", c->type},
                      {"rank", c->rank},
                      {"degree", d},
                      {"weight", weight_json(lam)},
                      {"minkowski_count", res.minkowski_count.get_str()},
                      {"dimension", res.dim.get_str()},
                      {"counts_match", res.counts_match}};
            if (res.direct) j["direct_monomial"] = *res.direct;
            emit(j, *c);
            if (!res.counts_match) exit_code = 1;
        });
    }
    // fflv
    {
        auto c = std::make_shared<Common>();
        auto wstr = std::make_shared<std::string>();
        auto points = std::make_shared<bool>(false);
        auto* sub = app.add_subcommand("fflv", "lattice points of the Dyck-path polytope of a weight");
        add_common(sub, *c);
        sub->add_option("--weight", *wstr, "dominant weight")->required();
        sub->add_flag("--points", *points, "list the lattice points");
        sub->callback([c, wstr, points] {
            RootSystem rs = make_rs(*c);
            Weight lam = parse_weight(rs, *wstr);
            auto h = fflv_polytope(rs, lam);
            json j = {{"type", c->type},
                      {"rank", c->rank},
                      {"weight", weight_json(lam)},
                      {"labels", rs.labels},
                      {"count", lattice_count(h)},
                      {"dimension", rs.weyl_dim(lam).get_str()}};
            if (*points) {
                json rows = json::array();
                for (auto& p : lattice_points(h)) rows.push_back({{"point", p}});
                j["rows"] = rows;
            }
            emit(j, *c);
        });
    }
    // sp4
    {
        auto c = std::make_shared<Common>();
        auto m1 = std::make_shared<long>(0);
        auto m2 = std::make_shared<long>(0);
        auto* sub = app.add_subcommand("sp4", "closed-form and enumerated lattice counts of the sp4 box");
        add_common(sub, *c, false);
        sub->add_option("--m1", *m1)->required();
        sub->add_option("--m2", *m2)->required();
        sub->callback([c, m1, m2] {
            auto closed = sp4_count(*m1, *m2);
            auto enumerated = lattice_count(sp4_polytope(*m1, *m2));
            emit({{"m1", *m1},
                  {"m2", *m2},
                  {"closed_form", closed.get_str()},
                  {"enumerated", enumerated},
                  {"agree", closed == enumerated}},
                 *c);
        });
    }
    // counts
    {
        auto c = std::make_shared<Common>();
        auto amax = std::make_shared<long>(12);
        auto bmax = std::make_shared<long>(12);
        auto* sub = app.add_subcommand("counts", "table of the planar count N(a,b) against enumeration");
        add_common(sub, *c, false);
        sub->add_option("--max-a", *amax);
        sub->add_option("--max-b", *bmax);
        sub->callback([c, amax, bmax] {
            json rows = json::array();
            bool all = true;
            for (long a = 0; a <= *amax; ++a)
                for (long b = 0; b <= *bmax; ++b) {
                    long closed = count_N(a, b);
                    long enumerated = (long)lattice_count(p_ab_polytope(a, b));
                    all = all && closed == enumerated;
                    rows.push_back({{"a", a}, {"b", b}, {"closed_form", closed}, {"enumerated", enumerated}});
                }
            emit({{"agree", all}, {"rows", rows}}, *c);
        });
    }
    // hull
    {
        auto c = std::make_shared<Common>();
        auto wstr = std::make_shared<std::string>();
        auto dstr = std::make_shared<std::string>();
        auto points = std::make_shared<bool>(false);
        auto* sub = app.add_subcommand("hull", "lattice points of the convex hull of a monomial set");
        add_common(sub, *c);
        sub->add_option("--degree", *dstr, "degree values in canonical root order")->required();
        sub->add_option("--weight", *wstr, "dominant weight")->required();
        sub->add_flag("--points", *points, "list the hull lattice points");
        sub->callback([c, wstr, dstr, points] {
            RootSystem rs = make_rs(*c);
            auto d = parse_degree(rs, *dstr);
            Weight lam = parse_weight(rs, *wstr);
            auto rep = is_monomial_ideal(rs, lam, d);
            auto hull = hull_lattice_points(rep.survivors);
            json j = {{"type", c->type},
                      {"rank", c->rank},
                      {"degree", d},
                      {"weight", weight_json(lam)},
                      {"monomial", rep.monomial},
                      {"set_size", rep.survivors.size()},
                      {"hull_size", hull.size()},
                      {"saturated", hull == rep.survivors}};
            if (*points) {
                json rows = json::array();
                for (auto& p : hull) rows.push_back({{"point", p}, {"in_set", rep.survivors.count(p) > 0}});
                j["rows"] = rows;
            }
            emit(j, *c);
        });
    }
    // g2-experiment
    {
        auto c = std::make_shared<Common>();
        auto mmax = std::make_shared<long>(2);
        auto* sub = app.add_subcommand("g2-experiment", "G2 box sum experiment (both set-sum and hull readings, not asserted)");
        add_common(sub, *c, false);
        sub->add_option("--max", *mmax, "maximum multiplicity per fundamental weight");
        sub->callback([c, mmax] {
            json rows = json::array();
            for (long m1 = 0; m1 <= *mmax; ++m1)
                for (long m2 = 0; m2 <= *mmax; ++m2) {
                    if (m1 == 0 && m2 == 0) continue;
                    auto r = g2_conjecture_experiment(m1, m2);
                    rows.push_back({{"m1", m1},
                                    {"m2", m2},
                                    {"dimension", r.dim.get_str()},
                                    {"set_sum_count", r.count_setsum},
                                    {"hull_count", r.count_hull}});
                }
            emit({{"rows", rows}}, *c);
        });
    }
    // reproduce-paper
    {
        auto c = std::make_shared<Common>();
        auto sections = std::make_shared<std::vector<std::string>>();
        auto* sub = app.add_subcommand("reproduce-paper", "run the verification suite against the published ground truth");
        add_common(sub, *c, false);
        sub->add_option("--section", *sections, "restrict to these sections (e.g. 4.1, 6.4)");
        sub->callback([c, sections, &exit_code] {
            verify::Suite suite(c->seed);
            auto ids = sections->empty() ? verify::Suite::section_ids() : *sections;
            json rows = json::array();
            bool all = true;
            for (auto& id : ids)
                for (auto& chk : suite.section(id)) {
                    all = all && chk.pass;
                    rows.push_back({{"section", id},
                                    {"check", chk.name},
                                    {"pass", chk.pass},
                                    {"detail", chk.detail}});
                }
            emit({{"seed", c->seed}, {"all_pass", all}, {"rows", rows}}, *c);
            if (!all) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
