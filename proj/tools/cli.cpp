#include "cli.hpp"

#include <nullag/nullag.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nullag::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, end);
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw UsageError("invalid number for " + what + ": '" + text + "'");
    }
    return v;
}

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

/// Key of an --at binding: qN is shorthand for the N-th jet, anything else
/// must parse to a single atom.
Atom parse_key(const std::string& key) {
    if (key.size() > 1 && key[0] == 'q' &&
        key.find_first_not_of("0123456789", 1) == std::string::npos) {
        return Atom::jet(static_cast<unsigned>(std::stoul(key.substr(1))));
    }
    Expr e = parse_expr(key);
    std::optional<Atom> found;
    e.for_each_atom([&](const Atom& a) { found = a; });
    if (!found || found->is_log() || !(Expr(*found) == e)) {
        throw UsageError("'" + key + "' is not an atom");
    }
    return *found;
}

struct Options {
    std::string format = "canonical";
    std::string expr;
    unsigned k = 1;
    std::string name;
    std::optional<int> order;
    std::string lagrangian;
    std::string init;
    double t0 = 0.0;
    double t1 = 0.0;
    double h = 0.0;
    std::string monitor;
    std::string at;
};

class Runner {
public:
    Runner(const Options& opt, std::istream& in, std::ostream& out)
        : opt_(opt), in_(in), out_(out) {}

    int dispatch(const std::string& cmd) {
        if (cmd == "simplify") {
            return print(input());
        }
        if (cmd == "dt") {
            if (opt_.k == 0) {
                throw UsageError("-k must be positive");
            }
            return print(total_derivative(input(), opt_.k));
        }
        if (cmd == "el") {
            return print(euler_lagrange(input()));
        }
        if (cmd == "jacobi") {
            return print(jacobi(input()));
        }
        if (cmd == "null-check") {
            bool null = is_null(input());
            out_ << (null ? "null" : "not-null") << '\n';
            return null ? kOk : kNegative;
        }
        if (cmd == "gauge") {
            return print(extract_gauge(input()).gauge);
        }
        if (cmd == "order") {
            auto n = jet_order(input());
            out_ << (n ? std::to_string(*n) : std::string("none")) << '\n';
            return kOk;
        }
        if (cmd == "sl2") {
            return sl2();
        }
        if (cmd == "builtin") {
            return builtin_cmd();
        }
        if (cmd == "ode-run") {
            return ode_run();
        }
        if (cmd == "eval") {
            return eval_cmd();
        }
        throw UsageError("unknown command " + cmd);
    }

private:
    RenderMode mode() const {
        if (opt_.format == "latex") {
            return RenderMode::Latex;
        }
        if (opt_.format == "json") {
            return RenderMode::Json;
        }
        return RenderMode::Canonical;
    }

    Expr input() {
        std::string src = opt_.expr;
        if (src.empty()) {
            src.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        }
        if (trim(src).empty()) {
            throw UsageError("no expression given");
        }
        return parse_expr(src);
    }

    int print(const Expr& e) {
        out_ << render(e, mode()) << '\n';
        return kOk;
    }

    int sl2() {
        InvarianceReport r = sl2_residues(input());
        out_ << "translation: " << render(r.residue_translation, mode()) << '\n';
        out_ << "scaling: " << render(r.residue_scaling, mode()) << '\n';
        out_ << "special: " << render(r.residue_special, mode()) << '\n';
        out_ << (r.invariant ? "invariant" : "not-invariant") << '\n';
        return r.invariant ? kOk : kNegative;
    }

    int builtin_cmd() {
        auto family = family_from_name(opt_.name);
        if (!family) {
            throw UsageError("unknown builtin '" + opt_.name + "'");
        }
        HierarchyId id{*family, 0};
        if (*family == Family::Schippers || *family == Family::Krivonos) {
            if (!opt_.order) {
                throw UsageError(opt_.name + " needs an order N");
            }
            id.order = *opt_.order;
        }
        return print(builtin(id));
    }

    int ode_run() {
        ODESystem sys = derive_ode(parse_expr(opt_.lagrangian));
        std::vector<double> init;
        for (const auto& part : split(opt_.init, ',')) {
            init.push_back(parse_double(part, "--init"));
        }
        if (init.size() != sys.order) {
            throw UsageError("--init needs " + std::to_string(sys.order) + " values, got " +
                             std::to_string(init.size()));
        }
        std::optional<Expr> watched;
        if (!opt_.monitor.empty()) {
            watched = parse_expr(opt_.monitor);
        }

        out_ << 't';
        for (unsigned i = 0; i < sys.order; ++i) {
            out_ << ",q" << i;
        }
        if (watched) {
            out_ << ",monitored";
        }
        out_ << '\n';

        auto emit = [&](const Trajectory& traj) {
            std::vector<double> values;
            if (watched && !traj.empty()) {
                for (const auto& [t, v] : monitor(traj, *watched).samples) {
                    values.push_back(v);
                }
            }
            for (std::size_t i = 0; i < traj.size(); ++i) {
                out_ << format_double(traj[i].t);
                for (double x : traj[i].state) {
                    out_ << ',' << format_double(x);
                }
                if (watched) {
                    out_ << ',' << format_double(values[i]);
                }
                out_ << '\n';
            }
        };
        try {
            emit(integrate_rk4(sys, init, opt_.t0, opt_.t1, opt_.h));
        } catch (const IntegrationAborted& e) {
            emit(e.partial());
            throw;
        }
        return kOk;
    }

    int eval_cmd() {
        JetPoint p;
        if (!opt_.at.empty()) {
            for (const auto& binding : split(opt_.at, ',')) {
                auto eq = binding.find('=');
                if (eq == std::string::npos) {
                    throw UsageError("--at expects key=value, got '" + binding + "'");
                }
                p.values[parse_key(trim(binding.substr(0, eq)))] =
                    parse_double(trim(binding.substr(eq + 1)), binding);
            }
        }
        out_ << format_double(eval(input(), p)) << '\n';
        return kOk;
    }

    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Options opt;
    CLI::App app{"Exact jet calculus for higher-order Lagrangians", "nullag"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"canonical", "latex", "json"}));

    auto with_expr = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("expr", opt.expr, "Expression (read from stdin when omitted)");
        return sub;
    };
    with_expr("simplify", "Print the canonical form");
    with_expr("dt", "Total time derivative")
        ->add_option("-k", opt.k, "Number of derivatives");
    with_expr("el", "Euler-Lagrange expression");
    with_expr("jacobi", "Jacobi integral");
    with_expr("null-check", "Decide whether the Lagrangian is null");
    with_expr("gauge", "Gauge function of a null Lagrangian");
    with_expr("order", "Highest jet order present");
    with_expr("sl2", "SL(2,R) residues and verdict");
    CLI::App* ev = with_expr("eval", "Floating-point evaluation");
    ev->add_option("--at", opt.at, "Bindings k=v,... (qN is the N-th derivative)");

    CLI::App* bi = app.add_subcommand("builtin", "Built-in Lagrangian");
    bi->add_option("name", opt.name, "presch, L2, schippers, sigma")->required();
    bi->add_option("n", opt.order, "Order for schippers and sigma");

    CLI::App* ode = app.add_subcommand("ode-run", "Integrate the equation of motion with RK4");
    ode->set_help_flag("--help", "Print this help message and exit");
    ode->add_option("--lagrangian", opt.lagrangian)->required();
    ode->add_option("--init", opt.init, "q0,...,q(m-1) at t0")->required();
    ode->add_option("--t0", opt.t0);
    ode->add_option("--t1", opt.t1)->required();
    ode->add_option("--h", opt.h)->required();
    ode->add_option("--monitor", opt.monitor, "Expression evaluated along the trajectory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Runner runner(opt, in, out);
    try {
        return runner.dispatch(app.get_subcommands().front()->get_name());
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
}

}  // namespace nullag::cli
