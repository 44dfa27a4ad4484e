#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "twotype/error.hpp"

namespace {

void emit(const cli::Report& r, bool as_json) {
    if (r.raw) {
        std::cout << *r.raw;
        return;
    }
    if (as_json) {
        std::cout << r.doc.dump(2) << "\n";
        return;
    }
    for (const auto& l : r.lines) std::cout << l << "\n";
}

void type_options(CLI::App* c, cli::Options& o) {
    c->add_option("--type", o.type, "2-type document name in the workspace");
    c->add_option("--pi1", o.pi1, "pi1: built-in name or workspace group");
    c->add_option("--pi2", o.pi2, "pi2 module: Z<m>-trivial, Z<m>-inv or workspace module")->capture_default_str();
    c->add_option("--k3", o.k3, "index of the K3 class in H^3(pi1, pi2)")->capture_default_str();
    c->add_option("--k3-cochain", o.k3_cochain, "K3 representative: workspace cochain name");
}

void action_options(CLI::App* c, cli::Options& o) {
    type_options(c, o);
    c->add_option("--gamma", o.gamma, "stabiliser group");
    c->add_option("--outer", o.outer, "outer representation pi1 -> Out(gamma), comma separated");
    c->add_option("--a2", o.a2, "A2: pi2 -> Z(gamma) as a JSON list of generator images");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite homotopy 2-types: cohomology, 2-group actions, extensions"};
    app.require_subcommand(1);
    app.fallthrough();
    cli::Options o;
    app.add_flag("--json", o.json, "print the report as JSON");
    app.add_flag("--oracle", o.oracle, "cross-check against brute-force enumeration");
    app.add_option("--workspace", o.workspace, "workspace document (JSON)");

    int (*run)(const cli::Options&, cli::Report&) = nullptr;
    auto on = [&](CLI::App* c, int (*f)(const cli::Options&, cli::Report&)) {
        c->callback([&run, f] { run = f; });
        return c;
    };

    auto* coh = on(app.add_subcommand("cohomology", "H^n(G, M)"), cli::cohomology);
    coh->add_option("--group", o.group, "group")->required();
    coh->add_option("--module", o.module, "module")->required();
    coh->add_option("--degree", o.degree, "degree")->required()->check(CLI::Range(0, 6));

    auto* ver = on(app.add_subcommand("verify-2group", "check a 2-group for coherence"), cli::verify_2group);
    type_options(ver, o);

    auto* cls = app.add_subcommand("classify", "classify cells or group extensions");
    cls->require_subcommand(1);
    action_options(on(cls->add_subcommand("0cells", "pointed actions up to equivalence"), cli::classify_0cells), o);
    for (auto [name, f] : {std::pair{"1cells", cli::classify_1cells}, std::pair{"2cells", cli::classify_2cells}}) {
        auto* c = on(cls->add_subcommand(name, std::string(name) == "1cells" ? "1-cells between two actions"
                                                                             : "2-cells between two 1-cell classes"),
                     f);
        c->add_option("--src", o.src, "source action in the workspace")->required();
        c->add_option("--dst", o.dst, "target action in the workspace")->required();
        c->add_option("--f", o.f, "gamma' -> gamma'' images, comma separated, or id");
        if (std::string(name) == "2cells") {
            c->add_option("--from", o.from, "1-cell class index")->capture_default_str();
            c->add_option("--to", o.to, "1-cell class index")->capture_default_str();
        }
    }
    auto* ex = on(cls->add_subcommand("extensions", "extensions of pi1 by gamma"), cli::classify_extensions);
    ex->add_option("--pi1", o.pi1, "quotient group")->required();
    ex->add_option("--gamma", o.gamma, "kernel group")->required();
    ex->add_option("--outer", o.outer, "outer representation, comma separated");

    auto* ext = on(app.add_subcommand("extend", "non-associative extension of a 0-cell"), cli::extend);
    action_options(ext, o);
    ext->add_option("--class", o.cls, "0-cell class index")->capture_default_str();
    ext->add_option("--src", o.src, "pointed action in the workspace instead of a class");

    auto* seq = on(app.add_subcommand("sequence", "homotopy exact sequence of 0-cells"), cli::sequence);
    type_options(seq, o);
    seq->add_option("--gamma", o.gamma, "stabiliser group")->required();
    seq->add_option("--outer", o.outer, "outer representation, comma separated");

    auto* orb = on(app.add_subcommand("orbifold", "cohomology of a parabolic orbifold"), cli::orbifold);
    orb->add_option("--signature", o.signature, "cone orders, comma separated")->required();
    orb->add_option("--degree", o.degree, "degree")->required();

    on(app.add_subcommand("selftest", "run built-in checks"), cli::selftest);

    auto* can = on(app.add_subcommand("canonicalize", "rewrite a workspace in canonical form"), cli::canonicalize);
    can->add_option("input", o.input, "workspace document")->required();
    can->add_option("-o,--output", o.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cli::Report report;
    try {
        int code = run(o, report);
        emit(report, o.json);
        return code;
    } catch (const tt::Error& e) {
        emit(report, o.json);
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case tt::ErrorKind::ParseError:
        case tt::ErrorKind::TooLarge:
        case tt::ErrorKind::GroupTooLarge:
        case tt::ErrorKind::BadSignature:
        case tt::ErrorKind::BadDegree:
            return 2;
        default:
            return 1;
        }
    }
}
