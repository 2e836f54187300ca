#include "ddbar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ddbar/builtins.hpp"
#include "ddbar/diamond.hpp"
#include "ddbar/errors.hpp"
#include "ddbar/pipeline.hpp"
#include "ddbar/report_io.hpp"

namespace ddbar {

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

void emit_report(const CohomologyReport& report, bool as_json, std::ostream& out,
                 const std::string& extra_section = "") {
    if (as_json) {
        out << report_to_json(report).dump(2) << "\n";
        return;
    }
    if (!extra_section.empty()) out << extra_section << "\n";
    out << render_table(report);
}

void maybe_export_diamond(const CohomologyReport& report,
                          const std::string& path) {
    if (path.empty()) return;
    write_text_file(path, write_diamond(diamond_from_report(report)));
}

void warn_if_disconnected(const Diamond& d, const std::string& label,
                          std::ostream& err) {
    if (d.betti.at(0) < 1)
        err << "warning: " << label << " has b_0 = 0 (not a connected model)\n";
}

struct Options {
    std::string manifest_path;
    std::string builtin_name;
    std::string action;
    std::string ambient_path, center_path, base_path;
    std::string diamond_out;
    int codim = 0;
    int rank = 0;
    bool json = false;
    bool reps = false;
    bool list = false;
};

int dispatch(const CLI::App& app, const Options& opt, std::ostream& out,
             std::ostream& err) {
    if (app.got_subcommand("cohomology")) {
        Manifest m = read_manifest_file(opt.manifest_path);
        CohomologyReport report = run_cohomology(m, opt.reps);
        maybe_export_diamond(report, opt.diamond_out);
        emit_report(report, opt.json, out);
        return 0;
    }
    if (app.got_subcommand("quotient")) {
        Manifest m = read_manifest_file(opt.manifest_path);
        QuotientResult q = run_quotient(m, opt.action, opt.reps);
        maybe_export_diamond(q.report, opt.diamond_out);
        emit_report(q.report, opt.json, out,
                    render_quotient_section(q.subcomplex, q.group_order,
                                            q.differentials));
        return 0;
    }
    if (app.got_subcommand("builtin")) {
        if (opt.list) {
            for (const auto& e : builtin_catalog())
                out << e.name << "  -  " << e.summary << "\n";
            return 0;
        }
        if (opt.builtin_name.empty()) {
            err << "error[E_USAGE]: builtin needs a name or --list\n";
            return 2;
        }
        const BuiltinEntry* entry = find_builtin(opt.builtin_name);
        if (!entry)
            throw UnknownName("no builtin named '" + opt.builtin_name +
                              "' (try --list)");
        Manifest m = parse_manifest(entry->manifest_text);
        if (entry->action.empty()) {
            m.name = entry->name;
            CohomologyReport report = run_cohomology(m, opt.reps);
            maybe_export_diamond(report, opt.diamond_out);
            emit_report(report, opt.json, out);
        } else {
            QuotientResult q = run_quotient(m, entry->action, opt.reps, entry->name);
            maybe_export_diamond(q.report, opt.diamond_out);
            emit_report(q.report, opt.json, out,
                        render_quotient_section(q.subcomplex, q.group_order,
                                                q.differentials));
        }
        return 0;
    }
    if (app.got_subcommand("blowup")) {
        Diamond ambient = read_diamond_file(opt.ambient_path);
        Diamond center = read_diamond_file(opt.center_path);
        warn_if_disconnected(ambient, "ambient", err);
        warn_if_disconnected(center, "center", err);
        Diamond result = blowup_diamond(ambient, center, opt.codim);
        std::string text = write_diamond(result);
        if (opt.diamond_out.empty())
            out << text;
        else
            write_text_file(opt.diamond_out, text);
        return 0;
    }
    if (app.got_subcommand("projectivize")) {
        Diamond base = read_diamond_file(opt.base_path);
        warn_if_disconnected(base, "base", err);
        Diamond result = projectivize(base, opt.rank);
        std::string text = write_diamond(result);
        if (opt.diamond_out.empty())
            out << text;
        else
            write_text_file(opt.diamond_out, text);
        return 0;
    }
    err << app.help();
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact cohomology engine for complex differential bigraded algebras"};
    app.name("ddbar");
    Options opt;

    auto* cohomology =
        app.add_subcommand("cohomology", "full cohomology report of a manifest");
    cohomology->add_option("manifest", opt.manifest_path, "manifest file")->required();
    cohomology->add_flag("--json", opt.json, "emit JSON instead of a table");
    cohomology->add_flag("--reps", opt.reps, "include representative forms");
    cohomology->add_option("--diamond-out", opt.diamond_out,
                           "also write the diamond file for pipelines");

    auto* quotient = app.add_subcommand(
        "quotient", "invariant subcomplex of a finite action and its cohomology");
    quotient->add_option("manifest", opt.manifest_path, "manifest file")->required();
    quotient->add_option("--action", opt.action, "action name declared in the manifest")
        ->required();
    quotient->add_flag("--json", opt.json, "emit JSON instead of a table");
    quotient->add_flag("--reps", opt.reps, "include representative forms");
    quotient->add_option("--diamond-out", opt.diamond_out,
                         "also write the diamond file for pipelines");

    auto* builtin = app.add_subcommand("builtin", "run a catalog example");
    builtin->add_option("name", opt.builtin_name, "catalog entry");
    builtin->add_flag("--list", opt.list, "list catalog entries");
    builtin->add_flag("--json", opt.json, "emit JSON instead of a table");
    builtin->add_flag("--reps", opt.reps, "include representative forms");
    builtin->add_option("--diamond-out", opt.diamond_out,
                        "also write the diamond file for pipelines");

    auto* blowup = app.add_subcommand("blowup", "blow-up arithmetic on diamond files");
    blowup->add_option("--ambient", opt.ambient_path, "ambient diamond file")->required();
    blowup->add_option("--center", opt.center_path, "center diamond file")->required();
    blowup->add_option("--codim", opt.codim, "codimension of the center")->required();
    blowup->add_option("--out", opt.diamond_out, "write result here instead of stdout");

    auto* proj = app.add_subcommand("projectivize",
                                    "projectivized-bundle arithmetic on diamond files");
    proj->add_option("--base", opt.base_path, "base diamond file")->required();
    proj->add_option("--rank", opt.rank, "bundle rank")->required();
    proj->add_option("--out", opt.diamond_out, "write result here instead of stdout");

    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[E_USAGE]: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(app, opt, out, err);
    } catch (const ParseError& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const EngineError& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error[E_INTERNAL]: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ddbar
