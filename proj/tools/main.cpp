#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "neutro/neutro.hpp"

// Exit codes: 0 success, 1 bad arguments or bad data, 2 I/O failure.
// Results go to the data stream (stdout or -o); diagnostics go to stderr.

namespace {

using neutro::Format;

Format to_format(const std::string& name) {
    return name == "jsonl" ? Format::Jsonl : Format::Csv;
}

int write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body << std::flush;
        if (!std::cout) {
            std::cerr << "error: write to stdout failed\n";
            return 2;
        }
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 2;
    }
    out << body << std::flush;
    if (!out) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return 2;
    }
    return 0;
}

void emit_classification(const std::vector<neutro::Record>& records, Format format,
                         std::ostream& out) {
    using neutro::format_number;
    if (format == Format::Csv) {
        out << "id,mu,omega,nu,kind\n";
        for (const auto& r : records) {
            out << (r.id ? *r.id : "") << ',' << format_number(r.triple.mu()) << ','
                << format_number(r.triple.omega()) << ',' << format_number(r.triple.nu())
                << ',' << neutro::kind_name(neutro::classify(r.triple)) << '\n';
        }
        return;
    }
    for (const auto& r : records) {
        out << '{';
        if (r.id) out << "\"id\":\"" << neutro::json_escape(*r.id) << "\",";
        out << "\"mu\":" << format_number(r.triple.mu())
            << ",\"omega\":" << format_number(r.triple.omega())
            << ",\"nu\":" << format_number(r.triple.nu()) << ",\"kind\":\""
            << neutro::kind_name(neutro::classify(r.triple)) << "\"}\n";
    }
}

int run_records_command(const std::string& input, const std::string& output, Format format,
                        bool clamp, bool classify_only) {
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (input != "-") {
        file_in.open(input, std::ios::binary);
        if (!file_in) {
            std::cerr << "error: cannot open input file '" << input << "'\n";
            return 2;
        }
        in = &file_in;
    }

    neutro::ParseOutcome parsed;
    try {
        parsed = neutro::parse_records(*in, {format, clamp});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    std::ostringstream buffer;
    if (classify_only) {
        emit_classification(parsed.records, format, buffer);
    } else {
        std::vector<neutro::ResultRow> rows;
        rows.reserve(parsed.records.size());
        for (const auto& rec : parsed.records) {
            rows.push_back(neutro::evaluate_record(rec));
        }
        neutro::emit_results(rows, format, buffer);
    }

    const int rc = write_output(output, buffer.str());
    if (rc == 0 && parsed.clamped > 0) {
        std::cerr << "warning: clamped " << parsed.clamped << " value(s) into [0,1]\n";
    }
    return rc;
}

int run_sweep(double omega, int resolution, const std::string& quantity_name,
              const std::string& variant_name, const std::string& table_path,
              const std::string& image_path) {
    const neutro::Variant variant =
        variant_name == "r" ? neutro::Variant::Ruzicka : neutro::Variant::Czekanowski;
    const auto quantity = neutro::parse_quantity(quantity_name, variant);
    if (!quantity) {
        std::cerr << "error: unknown quantity '" << quantity_name << "'\n";
        return 1;
    }

    neutro::Grid grid;
    try {
        grid = neutro::evaluate_grid({omega, resolution, *quantity});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (const int rc = write_output(table_path, neutro::grid_table_csv(grid)); rc != 0) {
        return rc;
    }
    if (!image_path.empty()) {
        if (const int rc = write_output(image_path, neutro::grid_ppm(grid)); rc != 0) {
            return rc;
        }
    }
    return 0;
}

int run_check(std::size_t samples, std::uint64_t seed, double tolerance) {
    const neutro::CheckReport report =
        neutro::run_checks(samples, seed, neutro::Tolerance{tolerance});

    std::cout << "samples    " << report.samples << '\n'
              << "seed       " << report.seed << '\n'
              << "tolerance  " << neutro::format_number(report.tolerance) << '\n';
    for (const auto& inv : report.invariants) {
        if (inv.failures == 0) {
            std::cout << "ok    " << inv.name << '\n';
        } else {
            std::cout << "FAIL  " << inv.name << "  (" << inv.failures << " failures)\n";
        }
    }
    if (!report.failures.empty()) {
        std::cout << "first failures:\n";
        for (const auto& f : report.failures) {
            std::cout << "  " << f.invariant << " at (" << neutro::format_number(f.triple.mu())
                      << ", " << neutro::format_number(f.triple.omega()) << ", "
                      << neutro::format_number(f.triple.nu()) << "): " << f.detail << '\n';
        }
    }
    const std::size_t total = report.total_failures();
    if (total == 0) {
        std::cout << "all invariants hold\n";
    } else {
        std::cout << total << " invariant failure(s)\n";
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neutrosophic entropy and seven-component decomposition toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string format_name = "csv";
    bool clamp = false;

    const auto add_record_options = [&](CLI::App* cmd, bool with_clamp) {
        cmd->add_option("input", input, "Input file, or - for stdin")->capture_default_str();
        cmd->add_option("-o,--output", output, "Output file (default: stdout)");
        cmd->add_option("--format", format_name, "Record format, input and output alike")
            ->check(CLI::IsMember({"csv", "jsonl"}))
            ->capture_default_str();
        if (with_clamp) {
            cmd->add_flag("--clamp", clamp,
                          "Clamp finite out-of-range components into [0,1] with a warning");
        }
    };

    auto* compute = app.add_subcommand(
        "compute", "Evaluate indices, entropies and decompositions for each record");
    add_record_options(compute, true);
    auto* classify =
        app.add_subcommand("classify", "Report the information kind of each record");
    add_record_options(classify, false);

    double omega = 0.0;
    int resolution = 101;
    std::string quantity;
    std::string variant = "c";
    std::string out_table;
    std::string out_image;
    auto* sweep =
        app.add_subcommand("sweep", "Tabulate a quantity over the (mu, nu) unit square");
    sweep->add_option("--omega", omega, "Indeterminacy level of the sweep plane")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sweep->add_option("--resolution", resolution, "Lattice points per axis")
        ->check(CLI::Range(2, std::numeric_limits<int>::max()))
        ->capture_default_str();
    sweep->add_option("--quantity", quantity,
                      "entropy_c, entropy_r, or a component letter t,f,a,u,c,n,s")
        ->required();
    sweep->add_option("--variant", variant, "Variant for bare component letters")
        ->check(CLI::IsMember({"c", "r"}))
        ->capture_default_str();
    sweep->add_option("--out-table", out_table, "CSV table path (default: stdout)");
    sweep->add_option("--out-image", out_image, "PPM image path (no image when omitted)");

    std::size_t samples = 100000;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    auto* check = app.add_subcommand("check", "Run the seeded invariant suite");
    check->add_option("--samples", samples, "Random triples to test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check->add_option("--seed", seed, "Generator seed")->capture_default_str();
    check->add_option("--tolerance", tolerance, "Comparison tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) {
            return run_records_command(input, output, to_format(format_name), clamp, false);
        }
        if (classify->parsed()) {
            return run_records_command(input, output, to_format(format_name), false, true);
        }
        if (sweep->parsed()) {
            return run_sweep(omega, resolution, quantity, variant, out_table, out_image);
        }
        if (check->parsed()) {
            return run_check(samples, seed, tolerance);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
