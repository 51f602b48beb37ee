#include "qh/cli.hpp"

#include "qh/cyclic.hpp"
#include "qh/flag_reflect.hpp"
#include "qh/monoid.hpp"
#include "qh/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace qh::cli {

namespace {

using nlohmann::json;

// Raised for malformed command input; mapped to exit code 2 like every library error.
struct InputError : Error {
    using Error::Error;
};

// An argument is inline JSON, or a path to a file holding JSON.
json load(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse '" + arg + "' as JSON: " + e.what());
    }
}

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

DimVector dimvec(const json& j, const Quiver& q, const std::string& what) {
    DimVector d = int_list(j, what);
    if (static_cast<int>(d.size()) != q.n) throw DimensionError(what + " needs " + std::to_string(q.n) + " entries");
    return d;
}

Filtration filtration(const json& j, const Quiver& q) {
    if (!j.is_array() || j.empty()) throw InputError("a filtration is a nonempty array of dimension vectors");
    Filtration f;
    for (const auto& v : j) f.push_back(dimvec(v, q, "filtration step"));
    return f;
}

json to_json(const Quiver& q) {
    json arrows = json::array();
    for (auto [s, t] : q.arrows) arrows.push_back({s + 1, t + 1});
    return {{"vertices", q.n}, {"arrows", arrows}};
}

Quiver named_quiver(const std::string& name) {
    if (name == "kronecker") return quiver_kronecker();
    if (name == "jordan") return quiver_jordan();
    if (name == "A2~" || name == "A2t") return quiver_A2_tilde();
    if (name == "D4~" || name == "D4t") return quiver_D4_tilde();
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'C') && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        int k = std::stoi(name.substr(1));
        if (name[0] == 'A' && k >= 1) return quiver_A(k);
        if (name[0] == 'C') return quiver_cyclic(k);
    }
    throw InputError("unknown quiver name '" + name + "'");
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows")) throw InputError("a quiver is {\"vertices\": n, \"arrows\": [[s,t], ...]}");
    int n = as_int(j["vertices"], "vertices");
    if (n < 1) throw InputError("a quiver needs at least one vertex");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        auto st = int_list(a, "arrow");
        if (st.size() != 2 || st[0] < 1 || st[1] < 1 || st[0] > n || st[1] > n) throw InputError("arrows are [s,t] with 1-based vertices");
        arrows.emplace_back(st[0] - 1, st[1] - 1);
    }
    return Quiver(n, arrows);
}

// Builtin name or quiver JSON.
Quiver quiver_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] != '{' && !std::filesystem::is_regular_file(arg)) return named_quiver(arg);
    return quiver_from_json(load(arg));
}

struct IntegerRep {
    Quiver quiver;
    int p = 2;
    DimVector dims;
    std::vector<std::vector<std::vector<long long>>> mats;
    FpRep at(int prime) const { return rep_from_integers(quiver, prime, dims, mats); }
};

IntegerRep rep_arg(const std::string& arg) {
    json j = load(arg);
    if (!j.is_object() || !j.contains("quiver") || !j.contains("mats")) throw InputError("a representation is {\"quiver\": ..., \"p\": p, \"mats\": [...]}");
    IntegerRep r;
    r.quiver = j["quiver"].is_string() ? named_quiver(j["quiver"].get<std::string>()) : quiver_from_json(j["quiver"]);
    r.p = j.contains("p") ? as_int(j["p"], "p") : 2;
    if (!fp::is_prime(r.p)) throw InputError("p must be prime");
    if (!j["mats"].is_array() || j["mats"].size() != r.quiver.arrows.size()) throw InputError("one matrix per arrow is required");
    std::vector<int> dims(static_cast<size_t>(r.quiver.n), -1);
    auto set_dim = [&](int v, int k) {
        int& slot = dims[static_cast<size_t>(v)];
        if (slot >= 0 && slot != k) throw DimensionError("matrix shapes disagree at vertex " + std::to_string(v + 1));
        slot = k;
    };
    for (size_t a = 0; a < r.quiver.arrows.size(); ++a) {
        std::vector<std::vector<long long>> m;
        for (const auto& row : j["mats"][a]) {
            std::vector<long long> vals;
            for (const auto& x : row) {
                if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
                vals.push_back(x.get<long long>());
            }
            m.push_back(vals);
        }
        auto [s, t] = r.quiver.arrows[a];
        if (!m.empty()) {
            set_dim(t, static_cast<int>(m.size()));
            set_dim(s, static_cast<int>(m[0].size()));
        }
        r.mats.push_back(m);
    }
    if (j.contains("dims")) {
        DimVector given = dimvec(j["dims"], r.quiver, "dims");
        for (int v = 0; v < r.quiver.n; ++v) set_dim(v, given[static_cast<size_t>(v)]);
    }
    for (int& d : dims)
        if (d < 0) throw InputError("cannot infer every vertex dimension; add \"dims\"");
    r.dims = dims;
    r.at(r.p);  // validates shapes
    return r;
}

json rep_to_json(const FpRep& m) {
    json mats = json::array();
    for (const auto& a : m.mats) {
        json rows = json::array();
        for (int i = 0; i < a.rows; ++i) {
            json row = json::array();
            for (int k = 0; k < a.cols; ++k) row.push_back(a(i, k));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    return {{"quiver", to_json(m.quiver)}, {"p", m.p}, {"dims", m.dims}, {"mats", mats}};
}

json multiset_json(const RootMultiset& x) {
    json items = json::array();
    for (const auto& [root, k] : x.items) items.push_back({{"root", root}, {"mult", k}});
    return {{"text", x.to_string()}, {"items", items}};
}

json trace_json(const std::vector<TraceStep>& trace) {
    json out = json::array();
    for (const auto& s : trace)
        out.push_back({{"vertex", s.vertex < 0 ? json("dual") : json(s.vertex + 1)}, {"filtration", s.filtration}, {"r_plus", s.r_plus}});
    return out;
}

std::string trace_text(const std::vector<TraceStep>& trace) {
    std::string s;
    for (const auto& t : trace)
        s += "  " + (t.vertex < 0 ? std::string("dual") : "reflect at " + std::to_string(t.vertex + 1)) + ": " + to_string(t.filtration) +
             " r+ " + to_string(t.r_plus) + "\n";
    return s;
}

json factors_json(const std::vector<SchurFactor>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back({{"mult", f.mult}, {"root", f.root}});
    return out;
}

std::vector<int> default_bound_filtration(const Filtration& f) {
    // Dimension of the product of partial flag varieties, one per vertex.
    int dim = 0;
    for (size_t v = 0; v < f.back().size(); ++v)
        for (size_t j = 1; j < f.size(); ++j)
            for (size_t k = j + 1; k < f.size(); ++k) dim += (f[j][v] - f[j - 1][v]) * (f[k][v] - f[k - 1][v]);
    return {dim};
}

struct Options {
    bool json_out = false;
    bool trace = false;
    bool interpolate = false;
    std::vector<int> primes;
    std::string bound;
    int s_value = 0;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& human) {
    if (o.json_out)
        out << j.dump(2) << "\n";
    else
        out << human;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"qhtool: Hall algebras at q = 0, composition monoids and quiver flags"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();
    Options o;
    app.add_flag("--json", o.json_out, "print JSON");
    app.add_flag("--trace", o.trace, "include reflection traces");
    std::string primes_text;
    app.add_option("--primes", primes_text, "primes, comma separated: 2,3,5");
    app.add_option("--bound", o.bound, "degree bound (flagcount) or dimension bound as JSON (roots)");

    // Inputs are taken as raw extras: CLI11 would split a bracketed JSON list into items.
    std::map<CLI::App*, std::pair<size_t, size_t>> arity;
    auto verb = [&](const char* name, const char* help, size_t min_args, size_t max_args) {
        auto* sub = app.add_subcommand(name, help);
        sub->footer("Inputs are inline JSON, JSON files, or builtin quiver names (A<n>, C<n>, kronecker, jordan, A2~, D4~).");
        arity[sub] = {min_args, max_args};
        return sub;
    };
    auto* c_classify = verb("classify", "Dynkin type and delta of a quiver", 1, 1);
    auto* c_roots = verb("roots", "positive roots below a bound (--bound or second argument)", 1, 2);
    auto* c_euler = verb("euler", "Euler form <d,e>", 3, 3);
    auto* c_reflect = verb("reflect", "reflect a quiver, a dimension vector, a filtration or a representation at a vertex", 2, 3);
    c_reflect->add_option("--s", o.s_value, "dim Hom(M, S_a) for filtrations");
    auto* c_rfilt = verb("reflect-filtration", "reflected filtration with r_plus", 3, 3);
    c_rfilt->add_option("--s", o.s_value, "dim Hom(M, S_a)");
    auto* c_hall = verb("hallpoly", "Hall polynomial of S_i[lambda] by S_i^t on C_n: n i lambda t", 4, 4);
    auto* c_qcons = verb("qconstruct", "quotient class Q(X, S^k)", 2, 2);
    auto* c_expand = verb("word-expand", "support and coefficients at q = 0 of a word", 2, 2);
    auto* c_flag = verb("flagcount", "number of flags of a given type", 2, 2);
    c_flag->add_flag("--interpolate", o.interpolate, "fit the counting polynomial over --primes");
    auto* c_nf = verb("normalform", "normal form of a word in Schur roots", 2, 2);
    auto* c_pbw = verb("pbw", "PBW normal forms of a degree against the graded dimension", 2, 2);
    auto* c_verify = verb("verify", "run an acceptance suite: formulas, cyclic, dynkin, extdynkin or all", 1, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    CLI::App* chosen = app.get_subcommands().front();
    for (const auto& tok : CLI::detail::split(primes_text, ',')) {
        if (tok.empty()) continue;
        try {
            o.primes.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            err << "--primes expects comma separated integers\n";
            return 2;
        }
    }
    // With fallthrough the unmatched inputs collect on the top-level app.
    std::vector<std::string> args = app.remaining(false);
    for (const auto& a : args)
        if (a.rfind("--", 0) == 0) {
            err << "unknown option " << a << "\nRun with --help for more information.\n";
            return 2;
        }
    auto [lo, hi] = arity[chosen];
    if (args.size() < lo || args.size() > hi) {
        err << chosen->get_name() << ": expected " << (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi))
            << " inputs, got " << args.size() << "\n"
            << "Run with --help for more information.\n";
        return 2;
    }

    try {
        if (c_classify->parsed()) {
            Quiver q = quiver_arg(args[0]);
            auto c = classify(q);
            json j = {{"kind", to_string(c.kind)}, {"delta", c.delta ? json(*c.delta) : json(nullptr)}};
            emit(out, o, j, to_string(c.kind) + (c.delta ? " delta " + to_string(*c.delta) : "") + "\n");
        } else if (c_roots->parsed()) {
            Quiver q = quiver_arg(args[0]);
            std::string b = args.size() > 1 ? args[1] : o.bound;
            if (b.empty()) throw InputError("roots needs a bound");
            auto roots = positive_roots(q, dimvec(load(b), q, "bound"));
            json list = json::array();
            std::string human;
            for (const auto& r : roots) {
                const char* kind = r.kind == RootKind::Real ? "real" : "imaginary";
                list.push_back({{"d", r.d}, {"kind", kind}});
                human += to_string(r.d) + " " + kind + "\n";
            }
            emit(out, o, {{"roots", list}, {"count", roots.size()}}, human);
        } else if (c_euler->parsed()) {
            Quiver q = quiver_arg(args[0]);
            int v = euler_form(q, dimvec(load(args[1]), q, "d"), dimvec(load(args[2]), q, "e"));
            emit(out, o, {{"euler", v}}, std::to_string(v) + "\n");
        } else if (c_reflect->parsed()) {
            const bool rep_input = args.size() == 3 && load(args[2]).is_object();
            if (rep_input) {
                IntegerRep r = rep_arg(args[2]);
                int a = as_int(load(args[1]), "vertex") - 1;
                if (!(r.quiver == quiver_arg(args[0]))) throw InputError("the representation lives on a different quiver");
                FpRep m = reflect_rep(a, r.at(r.p));
                emit(out, o, {{"rep", rep_to_json(m)}}, "dims " + to_string(m.dims) + "\n" + rep_to_json(m)["mats"].dump() + "\n");
            } else {
                Quiver q = quiver_arg(args[0]);
                int a = as_int(load(args[1]), "vertex") - 1;
                if (a < 0 || a >= q.n) throw InputError("vertex out of range");
                if (args.size() == 2) {
                    Quiver rq = reflect_quiver(q, a);
                    emit(out, o, {{"quiver", to_json(rq)}}, to_json(rq).dump() + "\n");
                } else {
                    json x = load(args[2]);
                    if (x.is_array() && !x.empty() && x[0].is_array()) {
                        auto rf = reflect_filtration(q, a, filtration(x, q), o.s_value);
                        emit(out, o, {{"filtration", rf.f}, {"r_plus", rf.r}, {"is_filtration", rf.is_filtration}},
                             to_string(rf.f) + (rf.is_filtration ? "" : " (not a filtration: no flags)") + "\n");
                    } else {
                        DimVector d = reflect_dimvec(q, a, dimvec(x, q, "dimension vector"));
                        emit(out, o, {{"d", d}}, to_string(d) + "\n");
                    }
                }
            }
        } else if (c_rfilt->parsed()) {
            Quiver q = quiver_arg(args[0]);
            int a = as_int(load(args[1]), "vertex") - 1;
            if (a < 0 || a >= q.n) throw InputError("vertex out of range");
            auto rf = reflect_filtration(q, a, filtration(load(args[2]), q), o.s_value);
            json j = {{"filtration", rf.f}, {"r_plus", rf.r}, {"is_filtration", rf.is_filtration}};
            emit(out, o, j, to_string(rf.f) + " r+ " + to_string(rf.r) + (rf.is_filtration ? "" : " (empty)") + "\n");
        } else if (c_hall->parsed()) {
            int n = as_int(load(args[0]), "n"), i = as_int(load(args[1]), "i");
            Partition lam(int_list(load(args[2]), "lambda"));
            auto res = hall_poly_simple_power(n, i, lam, int_list(load(args[3]), "t"));
            json j = {{"poly", res.poly.to_string()}, {"quotient", res.quotient.to_string()}};
            emit(out, o, j, res.poly.to_string() + "  quotient " + res.quotient.to_string() + "\n");
        } else if (c_qcons->parsed()) {
            CyclicClass x = CyclicClass::parse(args[0]);
            DimVector k = int_list(load(args[1]), "k");
            CyclicClass y = q_construction(x, k);
            emit(out, o, {{"class", y.to_string()}}, y.to_string() + "\n");
        } else if (c_expand->parsed()) {
            Quiver q = quiver_arg(args[0]);
            json w = load(args[1]);
            if (q.n >= 1 && q == quiver_cyclic(q.n - 1)) {
                SemisimpleWord word;
                for (const auto& l : w) word.push_back(dimvec(l, q, "letter"));
                HallElement h = u_word_at0(q.n - 1, word);
                json terms = json::array();
                std::string human;
                for (const auto& [c, v] : h.terms) {
                    terms.push_back({{"class", c.to_string()}, {"coeff", to_string(v)}});
                    human += c.to_string() + "  " + to_string(v) + "\n";
                }
                emit(out, o, {{"result", terms}, {"count", h.terms.size()}}, human);
            } else {
                std::vector<int> word;
                for (int a : int_list(w, "word")) {
                    if (a < 1 || a > q.n) throw InputError("word letters are 1-based vertices");
                    word.push_back(a - 1);
                }
                Filtration f = word_filtration(q.n, word);
                auto support = dynkin_word_expand(q, word);
                json terms = json::array();
                std::string human;
                for (const auto& x : support) {
                    json t = multiset_json(x);
                    t["coeff"] = "1";
                    if (o.trace) t["trace"] = trace_json(flag_count_mod_q(x, f).trace);
                    terms.push_back(t);
                    human += x.to_string() + "  1\n";
                    if (o.trace) human += trace_text(flag_count_mod_q(x, f).trace);
                }
                emit(out, o, {{"result", terms}, {"count", support.size()}, {"filtration", f}}, human);
            }
        } else if (c_flag->parsed()) {
            IntegerRep r = rep_arg(args[0]);
            Filtration f = filtration(load(args[1]), r.quiver);
            if (!is_filtration_of(f, r.dims)) throw PreconditionError("the filtration must run from 0 to dim M");
            json j;
            std::string human;
            if (o.interpolate) {
                std::vector<int> base = o.primes.empty() ? std::vector<int>{2, 3, 5} : o.primes;
                int bound = o.bound.empty() ? default_bound_filtration(f)[0] : std::stoi(o.bound);
                auto primes = interpolation_primes(base, bound);
                QPolynomial poly = fit_counts([&](int p) { return enumerate_flags(r.at(p), f); }, primes, bound);
                j = {{"result", poly.to_string()}, {"poly", poly.to_string()}, {"constant_term", to_string(poly.constant_term())}, {"value_at_1", to_string(poly.eval_at(1))},
                     {"primes", primes}};
                human = "P(q) = " + poly.to_string() + "\nP(0) = " + to_string(poly.constant_term()) + "\nP(1) = " + to_string(poly.eval_at(1)) + "\n";
            } else {
                // A single --primes value overrides the field named in the representation.
                int p = o.primes.empty() ? r.p : o.primes.front();
                if (o.primes.size() > 1) throw InputError("an exact count takes one prime; use --interpolate for several");
                if (!fp::is_prime(p)) throw InputError("p must be prime");
                auto count = enumerate_flags(r.at(p), f);
                j = {{"result", count}, {"count", count}, {"p", p}};
                human = std::to_string(count) + "\n";
            }
            if (o.trace) {
                auto dec = flag_count_mod_q(r.at(r.p), f);
                j["mod_q"] = to_string(dec.outcome);
                j["trace"] = trace_json(dec.trace);
                human += "mod q: " + to_string(dec.outcome) + "\n" + trace_text(dec.trace);
            }
            emit(out, o, j, human);
        } else if (c_nf->parsed()) {
            Quiver q = quiver_arg(args[0]);
            SchurWord w{q, {}};
            for (const auto& f : load(args[1])) {
                if (f.is_array() && f.size() == 2 && f[1].is_array())
                    w.factors.push_back({as_int(f[0], "multiplicity"), dimvec(f[1], q, "root")});
                else
                    w.factors.push_back({1, dimvec(f, q, "root")});
            }
            SchurWord partial = rewrite_partial_normal_form(w);
            NormalForm nf = extdynkin_normal_form(w);
            json tubes = json::array();
            for (size_t t = 0; t < nf.tubes.size(); ++t) tubes.push_back({{"tube", t + 1}, {"class", nf.tubes[t].to_string()}});
            json j = {{"word", w.to_string()}, {"partial", partial.to_string()}, {"normal_form", nf.to_string()}, {"P", factors_json(nf.P)},
                      {"tubes", tubes}, {"lambda", nf.lambda.parts}, {"l", nf.l()}, {"I", factors_json(nf.I)}};
            emit(out, o, j, "partial " + partial.to_string() + "\nnormal  " + nf.to_string() + "\n");
        } else if (c_pbw->parsed()) {
            Quiver q = quiver_arg(args[0]);
            DimVector d = dimvec(load(args[1]), q, "d");
            auto forms = pbw_enumerate(q, d);
            long long graded = graded_dim_c0(q, d);
            json list = json::array();
            std::string human;
            for (const auto& f : forms) {
                list.push_back(f.to_string());
                human += f.to_string() + "\n";
            }
            const bool match = static_cast<long long>(forms.size()) == graded;
            human += std::to_string(forms.size()) + " forms, graded dimension " + std::to_string(graded) + "\n";
            emit(out, o, {{"forms", list}, {"count", forms.size()}, {"graded_dim", graded}, {"match", match}}, human);
            if (!match) return 1;
        } else if (c_verify->parsed()) {
            std::vector<int> ids;
            if (args[0] == "all")
                for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
            else
                ids = suite_criteria(args[0]);
            json results = json::array();
            bool all = true;
            for (int id : ids) {
                auto r = run_criterion(id);
                all = all && r.pass;
                results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail}, {"seconds", r.seconds}});
                if (!o.json_out)
                    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail << std::endl;
            }
            if (o.json_out) out << json{{"suite", args[0]}, {"pass", all}, {"results", results}}.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: malformed number: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace qh::cli
