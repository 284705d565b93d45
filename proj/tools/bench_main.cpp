#include "argcsr/bench.hpp"
#include "argcsr/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

std::vector<argcsr::FormatKind> parse_formats(const std::string& arg) {
    std::vector<argcsr::FormatKind> kinds;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        const std::size_t comma = std::min(arg.find(',', pos), arg.size());
        const std::string token = arg.substr(pos, comma - pos);
        if (!token.empty()) {
            kinds.push_back(argcsr::parse_format(token));
        }
        pos = comma + 1;
    }
    if (kinds.empty()) {
        throw argcsr::ParameterError("no formats requested");
    }
    return kinds;
}

std::vector<std::filesystem::path> matrix_files(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".mtx") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SpMV benchmark over sparse storage formats"};

    std::string matrix_path;
    std::string matrix_dir;
    std::string formats_arg = "csr,ellpack,sliced,argcsr";
    std::string output_path;
    std::string style_arg = "csv";
    argcsr::BenchOptions options;

    app.add_option("--matrix", matrix_path, "Matrix Market file to benchmark");
    app.add_option("--matrix-dir", matrix_dir,
                   "Directory; every .mtx file in it is benchmarked");
    app.add_option("--formats", formats_arg,
                   "Comma-separated subset of csr,ellpack,sliced,argcsr")
        ->capture_default_str();
    app.add_option("--threads-per-group", options.params.threads_per_group,
                   "Chunks per group for argcsr")
        ->capture_default_str();
    app.add_option("--desired-chunk-size", options.params.desired_chunk_size,
                   "Target nonzeros per group divided by threads-per-group")
        ->capture_default_str();
    app.add_option("--slice-size", options.params.slice_size, "Rows per slice for sliced")
        ->capture_default_str();
    app.add_option("--iterations", options.iterations, "Timed iterations per format")
        ->capture_default_str();
    app.add_option("--warmup", options.warmup, "Untimed runs before timing")
        ->capture_default_str();
    app.add_option("--workers", options.workers, "Threads used inside the timed multiply")
        ->capture_default_str();
    app.add_option("--output", output_path, "Report file (default: stdout)");
    app.add_option("--style", style_arg, "Report style: csv or json")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (matrix_path.empty() == matrix_dir.empty()) {
            throw argcsr::ParameterError("exactly one of --matrix and --matrix-dir is required");
        }
        options.formats = parse_formats(formats_arg);
        argcsr::ReportStyle style;
        if (style_arg == "csv") {
            style = argcsr::ReportStyle::csv;
        } else if (style_arg == "json") {
            style = argcsr::ReportStyle::json;
        } else {
            throw argcsr::ParameterError("unknown style '" + style_arg + "'");
        }

        std::vector<std::filesystem::path> files;
        if (!matrix_path.empty()) {
            files.push_back(matrix_path);
        } else {
            files = matrix_files(matrix_dir);
        }

        std::vector<argcsr::BenchRecord> records;
        for (const std::filesystem::path& file : files) {
            const argcsr::CsrMatrix A = argcsr::read_matrix_market_file(file.string());
            std::vector<argcsr::BenchRecord> batch =
                argcsr::run_benchmark(A, file.stem().string(), options);
            records.insert(records.end(), std::make_move_iterator(batch.begin()),
                           std::make_move_iterator(batch.end()));
        }

        if (output_path.empty()) {
            argcsr::emit_report(records, style, std::cout);
            std::cout << '\n';
        } else {
            std::ofstream out(output_path);
            if (!out) {
                throw argcsr::IoError("cannot open '" + output_path + "' for writing");
            }
            argcsr::emit_report(records, style, out);
        }
        argcsr::emit_distribution(records, std::cout);
        return 0;
    } catch (const argcsr::CorrectnessError& e) {
        std::cerr << "correctness failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
