#include "shimura/cli.hpp"

#include "shimura/errors.hpp"
#include "shimura/interpbc.hpp"
#include "shimura/jack_cache.hpp"
#include "shimura/serialize.hpp"
#include "shimura/superpoly.hpp"
#include "shimura/symmfunc.hpp"
#include "shimura/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>

namespace shimura {

namespace {

struct Options {
    std::optional<int> p, q;
    std::string mu, lambda;
    std::string theta = "1";
    std::optional<int> size;
    int max_size = 4;
    int window = 2;
    std::string mode = "paper";
    std::string format = "text";
    std::string cache;
    std::string property;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HookParams require_hp(const Options& o)
{
    if (!o.p || !o.q) throw UsageError("--p and --q are required");
    return HookParams(*o.p, *o.q);
}

Partition require_partition(const std::string& text, const char* flag)
{
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return parse_partition(text);
}

Scalar parse_theta(const std::string& text)
{
    if (text == "generic" || text == "theta" || text == "θ") return Scalar::theta();
    return Scalar(parse_rational(text));
}

Json expansion_json(const std::vector<std::pair<Partition, Rational>>& ex)
{
    Json arr = Json::array();
    for (const auto& [nu, c] : ex) arr.push_back(Json{{"nu", nu.to_string()}, {"coefficient", rational_to_json(c)}});
    return arr;
}

struct Outcome {
    Json result;
    std::string text;
    int code = 0;
};

Outcome cmd_hooks(const Options& o)
{
    const HookParams hp = require_hp(o);
    if (!o.size) throw UsageError("--size is required");
    Outcome r;
    Json list = Json::array();
    for (const auto& lambda : enumerate_hooks(hp, *o.size, SizeMode::Exact)) {
        list.push_back(lambda.to_string());
        r.text += "(" + lambda.to_string() + ")\n";
    }
    r.result = Json{{"p", hp.p}, {"q", hp.q}, {"size", *o.size}, {"partitions", list}};
    return r;
}

Outcome cmd_jack(const Options& o)
{
    const Partition lambda = require_partition(o.lambda, "--lambda");
    const Scalar theta = parse_theta(o.theta);
    const CoeffMap m = to_monomial_basis(jack_P(lambda, theta));
    Outcome r;
    for (const auto& [nu, c] : m) r.text += "m[" + nu.to_string() + "]: " + c.to_string() + "\n";
    r.result = Json{{"lambda", lambda.to_string()}, {"theta", theta.to_string()}, {"expansion", coeffs_to_json(m, Basis::Monomial)}};
    return r;
}

Outcome cmd_superjack(const Options& o)
{
    const HookParams hp = require_hp(o);
    const Partition lambda = require_partition(o.lambda, "--lambda");
    const Scalar theta = parse_theta(o.theta);
    Outcome r;
    if (theta.is_constant() && theta.constant_value() == 1) {
        const QPoly& f = super_jack_at_one(lambda, hp);
        r.text = f.to_string() + "\n";
        r.result = Json{{"lambda", lambda.to_string()}, {"p", hp.p}, {"q", hp.q}, {"theta", "1"}, {"polynomial", poly_to_json(f)}};
    } else {
        const ThetaPoly f = super_jack(lambda, hp, theta);
        r.text = f.to_string() + "\n";
        r.result = Json{{"lambda", lambda.to_string()}, {"p", hp.p}, {"q", hp.q}, {"theta", theta.to_string()}, {"polynomial", poly_to_json(f)}};
    }
    return r;
}

Json grid_json(const GridPoint& g)
{
    Json c = Json::array();
    for (const auto& x : g.coords) c.push_back(rational_to_json(x));
    return Json{{"space", g.space == Space::A ? "a" : "h"}, {"coordinates", c}};
}

Outcome cmd_grid(const Options& o)
{
    const HookParams hp = require_hp(o);
    const Partition lambda = require_partition(o.lambda, "--lambda");
    if (!is_hook(lambda, hp)) throw UsageError("(" + lambda.to_string() + ") is not a hook partition for the given --p, --q");
    const GridPoint g = grid_point(lambda, hp);
    const auto rho = weyl_vectors(hp);
    Outcome r;
    r.text = "grid = " + g.to_string() + "\nrho = " + rho.rho.to_string() + "\nrho_h = " + rho.rho_h.to_string() + "\n";
    r.result = Json{{"lambda", lambda.to_string()}, {"p", hp.p}, {"q", hp.q}, {"grid", grid_json(g)}, {"rho", grid_json(rho.rho)}, {"rho_h", grid_json(rho.rho_h)}};
    return r;
}

Outcome cmd_interp(const Options& o)
{
    const HookParams hp = require_hp(o);
    const Partition mu = require_partition(o.mu, "--mu");
    if (!is_hook(mu, hp)) throw UsageError("(" + mu.to_string() + ") is not a hook partition for the given --p, --q");
    Outcome r;
    InterpolationResult j = o.mode == "top" ? interpolation_J(mu, hp, InterpMode::Top) : interpolation_J_preferred(mu, hp);
    if (j.degenerate_normalization) r.code = 3;
    const Rational target = normalization_target(mu, hp);
    std::ostringstream t;
    t << "J = " << j.poly.to_string() << '\n'
      << "mode = " << mode_name(j.mode) << '\n'
      << "top_coefficient = " << to_string(j.measured_top_coefficient) << '\n'
      << "normalization = " << to_string(j.normalization_value) << '\n'
      << "target = " << to_string(target) << '\n';
    if (j.degenerate_normalization) t << "note = paper normalization target vanishes; top mode used\n";
    r.text = t.str();
    r.result = Json{
        {"mu", mu.to_string()},
        {"p", hp.p},
        {"q", hp.q},
        {"requested_mode", o.mode},
        {"mode", mode_name(j.mode)},
        {"polynomial", poly_to_json(j.poly)},
        {"top_coefficient", rational_to_json(j.measured_top_coefficient)},
        {"normalization_value", rational_to_json(j.normalization_value)},
        {"normalization_target", rational_to_json(target)},
        {"degenerate_normalization", j.degenerate_normalization},
        {"extended_grid_used", j.extended_grid_used},
        {"expansion", expansion_json(j.expansion)},
    };
    return r;
}

Outcome cmd_kmu(const Options& o)
{
    const Partition mu = require_partition(o.mu, "--mu");
    Outcome r;
    const Rational k = k_mu(mu);
    const Scalar d = d_mu(mu, Scalar(-1));
    r.text = "k = " + to_string(k) + "\nhook_product = " + to_string(hook_product(mu)) + "\nd(-1) = " + d.to_string() + "\n";
    r.result = Json{{"mu", mu.to_string()}, {"k", rational_to_json(k)}, {"hook_product", rational_to_json(hook_product(mu))}, {"d_at_minus_one", scalar_to_json(d)}};
    if (o.p || o.q) {
        const HookParams hp = require_hp(o);
        if (!is_hook(mu, hp)) throw UsageError("(" + mu.to_string() + ") is not a hook partition for the given --p, --q");
        const auto dc = derive_k(mu, hp);
        r.text += "e = " + to_string(dc.e) + "\ntop_coefficient = " + to_string(dc.t) + "\nk_derived = " + to_string(dc.k_tilde) + "\nmode = " + mode_name(dc.mode) + "\n";
        r.result["p"] = hp.p;
        r.result["q"] = hp.q;
        r.result["derived"] = Json{{"e", rational_to_json(dc.e)}, {"top_coefficient", rational_to_json(dc.t)}, {"k_derived", rational_to_json(dc.k_tilde)}, {"mode", mode_name(dc.mode)}};
    }
    return r;
}

Outcome cmd_expand(const Options& o)
{
    const HookParams hp = require_hp(o);
    if (!o.size) throw UsageError("--size is required");
    const auto er = expansion_identity(*o.size, hp);
    Outcome r;
    Json entries = Json::array();
    for (const auto& e : er.entries) {
        r.text += "e[" + e.nu.to_string() + "] = " + to_string(e.coefficient) + " hook=" + to_string(e.hook) + "\n";
        entries.push_back(Json{{"nu", e.nu.to_string()}, {"coefficient", rational_to_json(e.coefficient)}, {"hook", rational_to_json(e.hook)}, {"reciprocal", e.reciprocal}, {"direct", e.direct}});
    }
    r.text += "orientation = " + orientation_name(er.orientation) + "\nexact = " + (er.exact ? "1" : "0") + "\n";
    r.result = Json{{"m", er.m}, {"p", hp.p}, {"q", hp.q}, {"entries", entries}, {"orientation", orientation_name(er.orientation)}, {"exact", er.exact}};
    if (!er.exact) r.code = 1;
    return r;
}

Outcome cmd_verify(const Options& o)
{
    VerifySpec spec;
    spec.property = parse_property(o.property);
    if (o.p || o.q)
        spec.hps = {require_hp(o)};
    else
        spec.hps = standard_hook_params();
    spec.max_size = o.max_size;
    spec.window = o.window;
    const Report rep = verify_properties(spec);
    Outcome r;
    r.result = report_to_json(rep);
    r.text = report_to_text(rep);
    r.code = rep.exit_code();
    return r;
}

Json invocation_json(const std::string& sub, const Options& o)
{
    Json inv{{"subcommand", sub}};
    if (!o.property.empty()) inv["property"] = o.property;
    if (o.p) inv["p"] = *o.p;
    if (o.q) inv["q"] = *o.q;
    if (!o.mu.empty()) inv["mu"] = o.mu;
    if (!o.lambda.empty()) inv["lambda"] = o.lambda;
    if (sub == "jack" || sub == "superjack") inv["theta"] = o.theta;
    if (o.size) inv["size"] = *o.size;
    if (sub == "verify") {
        inv["max_size"] = o.max_size;
        inv["window"] = o.window;
    }
    if (sub == "interp") inv["mode"] = o.mode;
    return inv;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact computations with super Jack and type BC interpolation polynomials", kToolName};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kToolVersion);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--cache", o.cache, "Jack cache file (default: $SHIMURA_CACHE)");

    auto add_hp = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "Number of even coordinates")->check(CLI::PositiveNumber);
        sub->add_option("--q", o.q, "Number of odd coordinates")->check(CLI::PositiveNumber);
    };
    auto* hooks = app.add_subcommand("hooks", "List (p,q)-hook partitions of a given size");
    add_hp(hooks);
    hooks->add_option("--size", o.size)->check(CLI::NonNegativeNumber);

    auto* jack = app.add_subcommand("jack", "Monomial expansion of the Jack function P_lambda");
    jack->add_option("--lambda", o.lambda, "Partition, e.g. 2,1");
    jack->add_option("--theta", o.theta, "Rational value or 'generic'");

    auto* superjack = app.add_subcommand("superjack", "Super Jack polynomial SP_lambda");
    add_hp(superjack);
    superjack->add_option("--lambda", o.lambda);
    superjack->add_option("--theta", o.theta);

    auto* grid = app.add_subcommand("grid", "Evaluation grid point of a hook partition");
    add_hp(grid);
    grid->add_option("--lambda", o.lambda);

    auto* interp = app.add_subcommand("interp", "Interpolation polynomial J_mu");
    add_hp(interp);
    interp->add_option("--mu", o.mu);
    interp->add_option("--mode", o.mode)->check(CLI::IsMember({"paper", "top"}));

    auto* kmu = app.add_subcommand("kmu", "Scalar k_mu and derived constants");
    add_hp(kmu);
    kmu->add_option("--mu", o.mu);

    auto* expand = app.add_subcommand("expand", "Expansion of (sum x^2 - sum y^2)^m / m! in the squared super Jack basis");
    add_hp(expand);
    expand->add_option("--size", o.size)->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run exact property checks");
    verify->add_option("property", o.property, "vanishing|normalization|even-symmetry|expansion|res-eval|all")
        ->required()
        ->check(CLI::IsMember({"vanishing", "normalization", "even-symmetry", "expansion", "res-eval", "all"}));
    add_hp(verify);
    verify->add_option("--max-size", o.max_size)->check(CLI::NonNegativeNumber);
    verify->add_option("--window", o.window)->check(CLI::NonNegativeNumber);

    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--cache", o.cache);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (o.cache.empty())
        if (const char* env = std::getenv("SHIMURA_CACHE")) o.cache = env;

    const std::string sub = app.get_subcommands().front()->get_name();
    Outcome res;
    try {
        if (!o.cache.empty()) jack_cache().load(o.cache);
        if (sub == "hooks") res = cmd_hooks(o);
        else if (sub == "jack") res = cmd_jack(o);
        else if (sub == "superjack") res = cmd_superjack(o);
        else if (sub == "grid") res = cmd_grid(o);
        else if (sub == "interp") res = cmd_interp(o);
        else if (sub == "kmu") res = cmd_kmu(o);
        else if (sub == "expand") res = cmd_expand(o);
        else res = cmd_verify(o);
        if (!o.cache.empty()) jack_cache().save(o.cache);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (o.format == "structured") {
        const Json doc{{"tool", kToolName}, {"version", kToolVersion}, {"invocation", invocation_json(sub, o)}, {"result", res.result}};
        out << doc.dump(2) << '\n';
    } else {
        out << res.text;
    }
    return res.code;
}

} // namespace shimura
