#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mku/driver.hpp"

/* Exit codes: 0 certified, 2 undecided at the precision ceiling, 3 invalid
 * fixture or invocation, 4 excluded case, 1 everything else. */
int main(int argc, char ** argv) {
    CLI::App app{"one-sided and relative unit construction with certificates"};
    app.require_subcommand(1);

    mku::RunOptions opt;
    std::string cert_path;
    bool text = false;
    bool json = false;

    auto add_output = [&](CLI::App * c) {
        auto * tf = c->add_flag("--text", text, "plain text output");
        auto * jf = c->add_flag("--json", json, "JSON output (default)");
        tf->excludes(jf);
    };
    auto add_precision = [&](CLI::App * c) {
        c->add_option("--precision", opt.precision, "starting working precision in bits");
        c->add_option("--max-precision", opt.max_precision,
                      "precision ceiling for escalation");
    };
    auto add_field = [&](CLI::App * c) {
        c->add_option("--field", opt.field_path, "field fixture file")->required();
    };
    auto add_units = [&](CLI::App * c) {
        c->add_option("--units", opt.unit_subset,
                      "indices into the fixture's unit list (default: first N-1)")
            ->delimiter(',');
    };

    CLI::App * info = app.add_subcommand("info", "field, place, and group summary");
    add_field(info);
    add_precision(info);
    add_output(info);

    CLI::App * special =
        app.add_subcommand("special", "construct and certify a one-sided unit");
    add_field(special);
    special->add_option("--place", opt.place, "distinguished place index (default 0)");
    add_units(special);
    add_precision(special);
    add_output(special);

    CLI::App * relative = app.add_subcommand(
        "relative", "construct and certify a relative unit over a subfield");
    add_field(relative);
    relative->add_option("--subfield", opt.subfield, "subfield label from the fixture")
        ->required();
    relative->add_option("--place", opt.place, "distinguished place index (default 0)");
    add_units(relative);
    add_precision(relative);
    add_output(relative);

    CLI::App * verify =
        app.add_subcommand("verify", "recompute a certificate and compare");
    verify->add_option("certificate", cert_path, "certificate file to re-check")
        ->required();
    verify->add_flag("--text", text, "plain text output");

    CLI::App * selftest =
        app.add_subcommand("selftest", "run the bundled verification corpus");
    add_precision(selftest);
    selftest->add_flag("--text", text, "plain text output");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return 1;
    }

    opt.text = text;
    mku::RunResult r;
    try {
        if (app.got_subcommand(info))
            r = mku::run_info(opt);
        else if (app.got_subcommand(special))
            r = mku::run_special(opt);
        else if (app.got_subcommand(relative))
            r = mku::run_relative(opt);
        else if (app.got_subcommand(verify))
            r = mku::run_verify(cert_path, text);
        else
            r = mku::run_selftest(opt.precision, opt.max_precision, text);
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << r.output;
    return r.exit_code;
}
