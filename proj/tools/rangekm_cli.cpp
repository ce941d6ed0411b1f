// rangekm: command-line front end for clustering, benchmarking and donor queries.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rangekm/rangekm.hpp"

namespace fs = std::filesystem;
using namespace rangekm;

namespace {

/// A diagnosed user or input error; main() prints it on one line and exits 1.
struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UserError(path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Write to a sibling temp file, then rename over the target.
void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.close();
        if (!out) {
            throw UserError(path.string() + ": cannot write file");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw UserError(path.string() + ": cannot write file");
    }
}

std::string first_line(const std::string& text) {
    return std::string(trim(text.substr(0, text.find('\n'))));
}

std::vector<donor::DonorRecord> load_donor_file(const fs::path& path) {
    std::istringstream in(read_file(path));
    try {
        return donor::load_donors(in);
    } catch (const Error& e) {
        throw UserError(path.string() + ": " + e.what());
    }
}

/// Numeric table or donor file, chosen by exact header match.
NumericDataset load_cluster_input(const fs::path& path) {
    const auto text = read_file(path);
    std::istringstream in(text);
    try {
        if (first_line(text) == donor::donor_header) {
            return donor::encode_donors(donor::load_donors(in)).dataset;
        }
        return load_numeric_csv(in);
    } catch (const Error& e) {
        throw UserError(path.string() + ": " + e.what());
    }
}

ClusteringResult cluster_checked(const NumericDataset& data, const KMeansConfig& config) {
    try {
        return run_kmeans(data, config);
    } catch (const InvalidK& e) {
        throw UserError(std::string("--k: ") + e.what());
    }
}

struct ClusterArgs {
    std::string input;
    std::size_t k = 0;
    std::string init = "improved";
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::size_t max_iters = 300;
    std::string out;
};

int cmd_cluster(const ClusterArgs& a) {
    const auto data = load_cluster_input(a.input);
    KMeansConfig config;
    config.k = a.k;
    config.init_strategy = parse_strategy(a.init);
    config.seed = a.seed;
    config.tolerance = a.tolerance;
    config.max_iterations = a.max_iters;
    const auto result = cluster_checked(data, config);

    const fs::path out_dir(a.out);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw UserError(out_dir.string() + ": cannot create output directory");
    }
    std::ostringstream assignment;
    write_assignment_csv(assignment, result.assignment);
    write_atomic(out_dir / "assignment.csv", assignment.str());
    std::ostringstream centroids;
    write_centroids_csv(centroids, result.centroids, data.column_names());
    write_atomic(out_dir / "centroids.csv", centroids.str());

    std::cout << "iterations: " << result.iterations << '\n'
              << "final_sse: " << format_double(result.final_sse()) << '\n'
              << "elapsed_ms: " << format_fixed(result.elapsed_ms(), 3) << '\n';
    return 0;
}

struct BenchArgs {
    std::string sizes = "1000,5000,10000";
    std::size_t k = 4;
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
    std::string format = "table";
    std::size_t dimension = 2;
    double spread = 10.0;
    double noise = 1.0;
    std::string out;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    for (auto field : split(text)) {
        const auto v = parse_integer<std::size_t>(field);
        if (!v || *v == 0) {
            throw UserError("--sizes: '" + std::string(field) + "' is not a positive integer");
        }
        sizes.push_back(*v);
    }
    return sizes;
}

int cmd_bench(const BenchArgs& a) {
    const auto sizes = parse_sizes(a.sizes);
    const auto format = eval::parse_report_format(a.format);

    std::vector<eval::LabeledDataset> datasets;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < a.k) {
            throw UserError("--sizes: " + std::to_string(sizes[i]) + " is smaller than --k");
        }
        eval::BlobSpec spec;
        spec.cluster_count = a.k;
        spec.points_per_cluster = sizes[i] / a.k;
        spec.dimension = a.dimension;
        spec.center_spread = a.spread;
        spec.noise_stddev = a.noise;
        spec.seed = derive_seed(a.seed, 1000 + i);
        datasets.push_back(eval::generate_blobs(spec, "blobs-" + std::to_string(sizes[i])));
    }

    eval::BenchmarkOptions options;
    options.k = a.k;
    options.repeats = a.repeats;
    options.seed = a.seed;
    const auto text = eval::emit_report(eval::run_benchmark(datasets, options), format);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        write_atomic(a.out, text);
    }
    return 0;
}

struct QueryArgs {
    std::string donor_file;
    std::size_t k = 0;
    std::string group;
    std::string location;
    std::string out;
    std::string message_file;
    std::string outbox;
};

donor::QueryResult run_query(const QueryArgs& a) {
    std::string group;
    try {
        group = donor::normalize_blood_group(a.group);
    } catch (const ValidationError& e) {
        throw UserError(std::string("--group: ") + e.what());
    }
    const auto encoded = donor::encode_donors(load_donor_file(a.donor_file));
    KMeansConfig config;
    config.k = a.k;
    config.init_strategy = InitStrategy::ImprovedRange;
    const auto result = cluster_checked(encoded.dataset, config);
    try {
        return donor::query_donors(encoded, result, group, a.location);
    } catch (const UnknownLocation& e) {
        throw UserError(std::string("--location: ") + e.what());
    }
}

int cmd_query(const QueryArgs& a) {
    const auto result = run_query(a);
    if (!a.out.empty()) {
        std::ostringstream out;
        donor::write_donors(out, result.matched);
        write_atomic(a.out, out.str());
    }
    std::cout << "matches: " << result.matched.size() << '\n';
    for (const auto& d : result.matched) {
        std::cout << d.mail_id << '\n';
    }
    return 0;
}

int cmd_notify(const QueryArgs& a) {
    const auto body = read_file(a.message_file);
    const auto result = run_query(a);
    std::size_t written = 0;
    try {
        written = donor::compose_notifications(result, body, a.outbox);
    } catch (const IoError& e) {
        throw UserError(std::string("--outbox: ") + e.what());
    }
    std::cout << "written: " << written << '\n';
    return 0;
}

struct GenArgs {
    std::string kind = "blobs";
    std::string out;
    std::string labels;
    std::uint64_t seed = 0;
    std::size_t clusters = 4;
    std::size_t per_cluster = 250;
    std::size_t dimension = 2;
    double spread = 10.0;
    double noise = 1.0;
    std::size_t total = 200;
    std::size_t cohort = 7;
    std::string group = "O-";
    std::string location = "Visakhapatnam";
};

int cmd_gen_data(const GenArgs& a) {
    std::ostringstream out;
    if (a.kind == "blobs") {
        eval::BlobSpec spec{a.clusters, a.per_cluster, a.dimension, a.spread, a.noise, a.seed};
        const auto ds = eval::generate_blobs(spec);
        write_numeric_csv(out, ds.data);
        if (!a.labels.empty()) {
            std::ostringstream labels;
            labels << "label\n";
            for (const auto& l : ds.labels) {
                labels << l << '\n';
            }
            write_atomic(a.labels, labels.str());
        }
    } else {
        donor::DonorFixtureSpec spec;
        spec.total = a.total;
        spec.cohort_size = a.cohort;
        spec.cohort_group = a.group;
        spec.cohort_location = a.location;
        spec.seed = a.seed;
        donor::write_donors(out, donor::make_donor_fixture(spec));
    }
    write_atomic(a.out, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rangekm: k-means with range-based initial centroids"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "Cluster a numeric table or donor file");
    cluster->add_option("input", cluster_args.input, "Input file (numeric CSV or donor file)")->required();
    cluster->add_option("--k", cluster_args.k, "Number of clusters")->required()->check(CLI::PositiveNumber);
    cluster->add_option("--init", cluster_args.init, "Initialization strategy")
        ->check(CLI::IsMember({"random", "improved"}))
        ->capture_default_str();
    cluster->add_option("--seed", cluster_args.seed, "Seed for --init random")->capture_default_str();
    cluster->add_option("--tolerance", cluster_args.tolerance, "Convergence tolerance on centroid movement")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cluster->add_option("--max-iters", cluster_args.max_iters, "Iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cluster->add_option("--out", cluster_args.out, "Output directory for assignment.csv and centroids.csv")
        ->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Compare random and improved initialization on synthetic blobs");
    bench->add_option("--sizes", bench_args.sizes, "Comma-separated dataset sizes")->capture_default_str();
    bench->add_option("--k", bench_args.k, "Clusters (also the number of blobs)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--repeats", bench_args.repeats, "Runs per (dataset, strategy)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "Base seed")->capture_default_str();
    bench->add_option("--format", bench_args.format, "Report format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
    bench->add_option("--dimension", bench_args.dimension, "Blob dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--spread", bench_args.spread, "Distance between blob centres per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--noise", bench_args.noise, "Blob standard deviation")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bench->add_option("--out", bench_args.out, "Write the report here instead of stdout");

    QueryArgs query_args;
    auto add_query_options = [&](CLI::App* sub) {
        sub->add_option("donor_file", query_args.donor_file, "Donor file")->required();
        sub->add_option("--k", query_args.k, "Number of clusters")->required()->check(CLI::PositiveNumber);
        sub->add_option("--group", query_args.group, "Blood group, e.g. O-")->required();
        sub->add_option("--location", query_args.location, "Location, exact match")->required();
    };
    auto* query = app.add_subcommand("query", "Find donors of a blood group at a location");
    add_query_options(query);
    query->add_option("--out", query_args.out, "Write matched donors here");

    auto* notify = app.add_subcommand("notify", "Write outbox messages for matched donors");
    add_query_options(notify);
    notify->add_option("--message-file", query_args.message_file, "Message body file")->required();
    notify->add_option("--outbox", query_args.outbox, "Outbox directory")->required();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen-data", "Generate a synthetic blob table or donor file");
    gen->add_option("--kind", gen_args.kind, "blobs or donors")
        ->check(CLI::IsMember({"blobs", "donors"}))
        ->capture_default_str();
    gen->add_option("--out", gen_args.out, "Output file")->required();
    gen->add_option("--labels", gen_args.labels, "Blob labels file (blobs only)");
    gen->add_option("--seed", gen_args.seed, "Seed")->capture_default_str();
    gen->add_option("--clusters", gen_args.clusters, "Blob count")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--per-cluster", gen_args.per_cluster, "Points per blob")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--dimension", gen_args.dimension, "Blob dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--spread", gen_args.spread, "Blob centre spacing")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--noise", gen_args.noise, "Blob standard deviation")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    gen->add_option("--total", gen_args.total, "Donor count")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--cohort", gen_args.cohort, "Planted cohort size")->capture_default_str();
    gen->add_option("--group", gen_args.group, "Cohort blood group")->capture_default_str();
    gen->add_option("--location", gen_args.location, "Cohort location")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (cluster->parsed()) {
            return cmd_cluster(cluster_args);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_args);
        }
        if (query->parsed()) {
            return cmd_query(query_args);
        }
        if (notify->parsed()) {
            return cmd_notify(query_args);
        }
        return cmd_gen_data(gen_args);
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
