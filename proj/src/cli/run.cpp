#include "semideal/cli.hpp"

#include "semideal/constructions.hpp"
#include "semideal/content.hpp"
#include "semideal/error.hpp"
#include "semideal/spectrum.hpp"
#include "semideal/uft.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace semideal::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string instance = "gcd";
    bool json = false;
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    std::uint64_t bound = 64;
    std::string config;
    std::vector<std::string> args;
    std::string prime;
    bool expect_fail = false;
};

struct Outcome {
    json result = json::object();
    json witness = nullptr;
    std::string status = "pass";
    std::vector<std::string> text;
    int code = 0;
    bool as_json = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::string& arg(const Options& o, std::size_t k, const char* what) {
    if (k >= o.args.size()) throw UsageError(std::string("missing argument: ") + what);
    return o.args[k];
}

const char* flag(bool b) { return b ? "true" : "false"; }

json witness_json(const LawWitness& w) {
    return {{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"clause", w.clause}};
}

Value eval_text(const std::string& text, const Instance& inst) { return evaluate(parse_expr(text), inst); }

Outcome cmd_eval(const Options& o, const Instance& inst) {
    Outcome r;
    Value v = eval_text(arg(o, 0, "expression"), inst);
    r.result["value"] = to_string(v);
    r.text.push_back(to_string(v));
    return r;
}

Outcome cmd_factor(const Options& o, const Instance& inst) {
    Outcome r;
    Value v = eval_text(arg(o, 0, "expression"), inst);
    const auto* f = std::get_if<FractionalIdeal>(&v);
    if (!f) raise(Errc::Unsupported, inst.name() + " has no unique factorization of ideals");
    ExponentVector e = uft_factor(*f);
    json exps = json::object();
    for (const auto& [label, n] : e.entries()) exps[label.to_string()] = n.get_str();
    r.result["ideal"] = f->to_string();
    r.result["factorization"] = e.to_string();
    r.result["exponents"] = exps;
    r.text.push_back(e.to_string());
    return r;
}

Outcome cmd_classify(const Options& o, const Instance& inst) {
    Outcome r;
    Ideal i = as_ideal(eval_text(arg(o, 0, "expression"), inst));
    bool prime = is_prime(i), maximal = is_maximal(i), subtractive = is_subtractive(i), invertible = is_invertible(i);
    r.result = {{"ideal", i.to_string()}, {"prime", prime}, {"maximal", maximal}, {"subtractive", subtractive},
                {"invertible", invertible}};
    r.text.push_back(std::string("prime=") + flag(prime) + " maximal=" + flag(maximal) +
                     " subtractive=" + flag(subtractive) + " invertible=" + flag(invertible));
    return r;
}

bool predicted(const SuiteEntry& e) {
    Flags f = e.instance.flags();
    if (e.law == "semidomain") return f.is_semidomain;
    return law_is_universal(parse_law(e.law)) || f.is_dedekind == Truth::yes;
}

Outcome cmd_laws(const Options& o, const Instance& inst) {
    Outcome r;
    SuiteConfig config;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw UsageError("cannot read config file " + o.config);
        std::stringstream buf;
        buf << in.rdbuf();
        config = parse_suite_config(buf.str());
    } else {
        SuiteEntry e;
        e.law = arg(o, 0, "law id");
        e.instance = inst;
        e.trials = o.trials;
        e.seed = o.seed;
        e.bound = o.bound;
        e.expect_fail = o.expect_fail;
        config.entries.push_back(e);
    }
    json suites = json::array();
    for (const auto& e : config.entries) {
        LawReport rep = e.law == "semidomain" ? check_semidomain(e.instance, e.bound)
                                              : check_law(e.instance, parse_law(e.law), {e.trials, e.seed});
        bool failed = !rep.passed();
        bool bad = e.expect_fail ? !failed : failed && predicted(e);
        std::string verdict = failed ? "fail" : "pass";
        if (e.expect_fail) verdict += failed ? " (expected)" : " (expected fail, but passed)";
        else if (failed && !predicted(e)) verdict += " (not predicted to hold here)";
        r.text.push_back(rep.law + " on " + rep.instance + ": " + verdict + " after " + std::to_string(rep.trials) +
                         " trials (" + std::to_string(rep.skipped) + " skipped), seed " + std::to_string(rep.seed));
        json s = {{"law", rep.law},         {"instance", rep.instance}, {"trials", rep.trials},
                  {"skipped", rep.skipped}, {"seed", rep.seed},         {"status", failed ? "fail" : "pass"},
                  {"expect_fail", e.expect_fail}, {"ok", !bad},         {"witness", nullptr}};
        if (rep.witness) {
            for (const auto& line : rep.witness->inputs) r.text.push_back("  " + line);
            r.text.push_back("  lhs = " + rep.witness->lhs);
            r.text.push_back("  rhs = " + rep.witness->rhs);
            r.text.push_back("  clause: " + rep.witness->clause);
            s["witness"] = witness_json(*rep.witness);
            if (r.witness.is_null()) r.witness = s["witness"];
        }
        if (bad) r.code = 1;
        suites.push_back(s);
    }
    r.result["suites"] = suites;
    r.status = r.code == 0 ? "pass" : "fail";
    r.as_json = config.json;
    return r;
}

Outcome cmd_twogen(const Options& o, const Instance& inst) {
    Outcome r;
    Ideal i = as_ideal(eval_text(arg(o, 0, "ideal expression"), inst));
    Element a = Element::natural(inst, Int(arg(o, 1, "member a")));
    auto [x, b] = two_generators(i, a);
    r.result = {{"ideal", i.to_string()}, {"a", x.to_string()}, {"b", b.to_string()}};
    r.text.push_back("a = " + x.to_string() + ", b = " + b.to_string());
    if (inst.id() == InstanceId::gcd_supported) {
        Element g = finite_spec_principal_generator(i);
        r.result["principal_generator"] = g.to_string();
        r.text.push_back("principal generator = " + g.to_string());
    }
    return r;
}

Outcome cmd_localize(const Options& o, const Instance& inst) {
    Outcome r;
    if (o.prime.empty()) throw UsageError("localize needs --prime");
    Ideal i = as_ideal(eval_text(arg(o, 0, "ideal expression"), inst));
    PrimeLabel p = PrimeLabel::parse(inst.id(), o.prime);
    Ideal d = localize(inst, p, i);
    r.result = {{"ideal", i.to_string()}, {"prime", p.to_string()}, {"local", d.to_string()},
                {"exponent", d.dvs().exponent->get_str()}};
    r.text.push_back(d.to_string());
    return r;
}

Outcome cmd_sandwich(const Options& o, const Instance& inst) {
    Outcome r;
    Value v = eval_text(arg(o, 0, "expression"), inst);
    const auto* f = std::get_if<FractionalIdeal>(&v);
    if (!f) raise(Errc::Unsupported, inst.name() + " has no fractional ideals");
    auto [c, d] = sandwich(*f);
    r.result = {{"ideal", f->to_string()}, {"c", c.to_string()}, {"d", d.to_string()}};
    r.text.push_back("c = " + c.to_string() + ", d = " + d.to_string());
    return r;
}

Outcome cmd_dm(const Options& o, const Instance& inst) {
    Outcome r;
    Polynomial f = Polynomial::parse(inst, arg(o, 0, "polynomial f"));
    Polynomial g = Polynomial::parse(inst, arg(o, 1, "polynomial g"));
    ContentReport rep = gaussian_check(f, g);
    unsigned n = dm_exponent(f, g);
    r.result = {{"f", f.to_string()},           {"g", g.to_string()},
                {"c_f", rep.cf.to_string()},    {"c_g", rep.cg.to_string()},
                {"c_fg", rep.cfg.to_string()},  {"c_f_c_g", ideal_product(rep.cf, rep.cg).to_string()},
                {"gaussian", rep.gaussian},     {"dm_exponent", n}};
    r.text.push_back("c(f) = " + rep.cf.to_string() + ", c(g) = " + rep.cg.to_string() + ", c(fg) = " +
                     rep.cfg.to_string());
    r.text.push_back(std::string("gaussian=") + flag(rep.gaussian) + " dm_exponent=" + std::to_string(n));
    return r;
}

Outcome cmd_between(const Options& o, const Instance& inst) {
    Outcome r;
    Ideal m = as_ideal(eval_text(arg(o, 0, "maximal ideal"), inst));
    auto a = search_between(m);
    r.result = {{"maximal", m.to_string()}, {"square", ideal_product(m, m).to_string()},
                {"between", a ? json(a->to_string()) : json(nullptr)}};
    r.text.push_back(a ? a->to_string() : "none");
    return r;
}

Outcome cmd_spectrum(const Options& o, const Instance& inst) {
    Outcome r;
    json labels = json::array();
    std::string line;
    for (const auto& l : spectrum(inst, o.bound)) {
        labels.push_back(l.to_string());
        line += (line.empty() ? "" : " ") + l.to_string();
    }
    unsigned dim = krull_dimension(inst);
    r.result = {{"primes", labels}, {"krull_dimension", dim}};
    r.text.push_back(line);
    r.text.push_back("krull dimension " + std::to_string(dim));
    return r;
}

void emit(std::ostream& out, const Options& o, const std::string& command, const Outcome& r) {
    if (o.json || r.as_json) {
        json j = {{"command", command}, {"instance", o.instance}, {"result", r.result},
                  {"witness", r.witness}, {"status", r.status},   {"seed", o.seed}};
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& line : r.text) out << line << "\n";
}

} // namespace

SuiteConfig parse_suite_config(std::string_view text) {
    SuiteConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string t; words >> t;) w.push_back(t);
        if (w.empty()) continue;
        auto bad = [&](const std::string& why) {
            raise(Errc::InvalidArgument, "config line " + std::to_string(lineno) + ": " + why);
        };
        if (w[0] == "output") {
            if (w.size() != 2 || (w[1] != "json" && w[1] != "text")) bad("expected 'output json' or 'output text'");
            config.json = w[1] == "json";
            continue;
        }
        if (w[0] != "law" || w.size() < 2) bad("expected 'law <id> ...'");
        SuiteEntry e;
        e.law = w[1];
        if (e.law != "semidomain") parse_law(e.law);
        bool have_instance = false;
        for (std::size_t k = 2; k < w.size(); k += 2) {
            if (w[k] == "expect") {
                if (k + 1 >= w.size() || w[k + 1] != "fail") bad("expected 'expect fail'");
                e.expect_fail = true;
                continue;
            }
            if (k + 1 >= w.size()) bad("missing value for '" + w[k] + "'");
            const std::string& v = w[k + 1];
            auto number = [&]() -> std::uint64_t {
                if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) bad("'" + v + "' is not a number");
                return std::stoull(v);
            };
            if (w[k] == "instance") {
                e.instance = Instance::parse(v);
                have_instance = true;
            } else if (w[k] == "trials") {
                e.trials = number();
                if (e.trials < 1) bad("trials must be at least 1");
            } else if (w[k] == "seed") {
                e.seed = number();
            } else if (w[k] == "bound") {
                e.bound = number();
            } else {
                bad("unknown key '" + w[k] + "'");
            }
        }
        if (!have_instance) bad("missing 'instance <id>'");
        config.entries.push_back(e);
    }
    return config;
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact ideal arithmetic over six semidomain instances", "semideal"};
    app.require_subcommand(1);
    app.add_option("--instance", o.instance, "n0, gcd, gcd-supported(2,3), dvs, lagrassa or quad5");
    app.add_flag("--json", o.json, "Machine-readable report");
    app.add_option("--seed", o.seed, "Sampling seed");
    app.add_option("--trials", o.trials, "Random trials per law");
    app.add_option("--bound", o.bound, "Enumeration bound");
    app.add_option("--config", o.config, "Law suite file (laws)");

    struct Sub {
        const char* name;
        const char* help;
        Outcome (*run)(const Options&, const Instance&);
    };
    const Sub subs[] = {
        {"eval", "Evaluate an ideal expression", cmd_eval},
        {"factor", "Prime factorization of a (fractional) ideal", cmd_factor},
        {"classify", "prime / maximal / subtractive / invertible", cmd_classify},
        {"laws", "Check a law, or a suite given by --config", cmd_laws},
        {"twogen", "Two generators (a, b) of an ideal from a member a", cmd_twogen},
        {"localize", "Image of an ideal in the localization at --prime", cmd_localize},
        {"sandwich", "(c) <= A <= (1/d)", cmd_sandwich},
        {"dm", "Content and Dedekind-Mertens exponent of two polynomials", cmd_dm},
        {"between", "Ideal strictly between m^2 and m", cmd_between},
        {"spectrum", "Classified primes up to --bound and the Krull dimension", cmd_spectrum},
    };
    std::vector<std::pair<CLI::App*, const Sub*>> registered;
    std::string first, second;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("first", first, "First positional argument");
        sub->add_option("second", second, "Second positional argument");
        if (std::string(s.name) == "localize") sub->add_option("--prime", o.prime, "Prime label, e.g. 3");
        if (std::string(s.name) == "laws") sub->add_flag("--expect-fail", o.expect_fail, "The law should fail");
        registered.emplace_back(sub, &s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    for (const auto& [sub, s] : registered) {
        if (!sub->parsed()) continue;
        if (sub->count("first")) o.args.push_back(first);
        if (sub->count("second")) o.args.push_back(second);
        try {
            Instance inst = Instance::parse(o.instance);
            Outcome r = s->run(o, inst);
            emit(out, o, s->name, r);
            return r.code;
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << "\n";
            return 2;
        } catch (const SyntaxError& e) {
            err << "usage error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            if (e.code() == Errc::InvalidArgument || e.code() == Errc::UnknownLaw) {
                err << "usage error: " << e.what() << "\n";
                return 2;
            }
            if (o.json) {
                Outcome r;
                r.status = "unsupported";
                r.result = {{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
                emit(out, o, s->name, r);
            }
            err << "error: " << e.what() << "\n";
            return 3;
        }
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace semideal::cli
