#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "interference/errors.hpp"
#include "interference/mixtures.hpp"
#include "interference/model_io.hpp"
#include "interference/parallel.hpp"
#include "interference/risk.hpp"
#include "interference/separation.hpp"

namespace interference::cli {

namespace {

// Shortest round-trip decimal form; keeps output byte-stable across runs.
std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << content;
    if (!out) throw DataError("failed while writing: " + path);
}

// Tabular output: '#'-prefixed metadata lines plus numeric rows. The JSON
// form mirrors the same schema.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const {
        std::ostringstream out;
        for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                out << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
        return out.str();
    }

    std::string to_json() const {
        nlohmann::ordered_json j;
        auto& m = j["meta"];
        for (const auto& [key, value] : meta) m[key] = value;
        j["columns"] = columns;
        j["rows"] = rows;
        return j.dump() + "\n";
    }

    std::string render(const std::string& format) const {
        return format == "json" ? to_json() : to_csv();
    }
};

void emit(const Table& table, const std::string& out_path, const std::string& format,
          std::ostream& out) {
    const std::string text = table.render(format);
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

std::shared_ptr<const Network> load_graph(const std::string& path) {
    return std::make_shared<const Network>(load_network_file(path));
}

ExposureSpec make_spec(const std::string& name, std::size_t n,
                       const std::shared_ptr<const Network>& net) {
    if (name == "no-effect") return ExposureSpec::no_effect(n);
    if (name == "own-treatment") return ExposureSpec::own_treatment(n);
    if (name == "stratified" || name == "arbitrary") {
        if (!net)
            throw UsageError("exposure family '" + name + "' requires --graph");
        return name == "stratified" ? ExposureSpec::stratified(net)
                                    : ExposureSpec::arbitrary_neighborhood(net);
    }
    throw UsageError("unknown exposure family '" + name +
                     "'; expected no-effect, own-treatment, stratified, or arbitrary");
}

struct PairOptions {
    std::string null_name;
    std::string alt_name;
    std::size_t n = 0;
    std::string graph_path;
    std::string design_text = "bernoulli:0.5";
};

struct BuiltPair {
    std::shared_ptr<const Network> net;  // may be null
    std::size_t n;
    MixturePair pair;
    Design design;
};

BuiltPair build_pair(const PairOptions& opt) {
    std::shared_ptr<const Network> net;
    std::size_t n = opt.n;
    if (!opt.graph_path.empty()) {
        net = load_graph(opt.graph_path);
        n = net->n();
    }
    if (n == 0) throw UsageError("pass --n or --graph to fix the unit count");

    const ExposureSpec coarse = make_spec(opt.null_name, n, net);
    const ExposureSpec fine = make_spec(opt.alt_name, n, net);
    RefinementReport report = check_refinement(coarse, fine);
    if (!report.is_refinement) {
        std::ostringstream msg;
        msg << "'" << opt.alt_name << "' does not refine '" << opt.null_name << "'";
        if (report.witness) {
            msg << ": witness unit " << report.witness->unit << ", z="
                << report.witness->z.to_mask() << ", z'=" << report.witness->z_alt.to_mask();
        }
        throw DataError(msg.str());
    }
    Design design = parse_design(opt.design_text, n);
    return BuiltPair{std::move(net), n,
                     general_mixtures(coarse, fine, std::move(report)), std::move(design)};
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
            throw UsageError("bad entry '" + token + "' in --n list");
        values.push_back(value);
    }
    if (values.empty()) throw UsageError("--n list is empty");
    return values;
}

// ---- subcommands ----

struct GenGraphArgs {
    std::string kind = "k-regular";
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_gen_graph(const GenGraphArgs& a, std::ostream&, std::ostream& err) {
    if (a.kind != "k-regular")
        throw UsageError("unknown graph kind '" + a.kind + "'; expected k-regular");
    const Network net = gen_k_regular(a.n, a.k, a.seed);
    std::ostringstream content;
    content << "# gen-graph kind=" << a.kind << " n=" << a.n << " k=" << a.k
            << " seed=" << a.seed << '\n'
            << to_edge_list(net);
    write_text_file(a.out_path, content.str());
    err << "gen-graph: n=" << net.n() << " edges=" << net.edge_count()
        << " d_max=" << net.max_degree() << '\n';
    return 0;
}

struct TvCheckArgs {
    PairOptions pair;
    std::string out_path;
    std::string format = "csv";
};

int run_tv_check(const TvCheckArgs& a, std::ostream& out, std::ostream&) {
    const BuiltPair built = build_pair(a.pair);

    Table table;
    table.meta = {{"command", "tv-check"},
                  {"null", a.pair.null_name},
                  {"alt", a.pair.alt_name},
                  {"n", std::to_string(built.n)},
                  {"design", built.design.to_string()}};
    table.columns = {"z", "probability", "tv"};

    double max_tv = 0.0;
    double expected_tv = 0.0;
    enumerate_design(built.design, [&](const Intervention& z, double prob) {
        const double tv = tv_distance(marginal_dist(built.pair, MixtureSide::Null, z),
                                      marginal_dist(built.pair, MixtureSide::Alt, z));
        max_tv = std::max(max_tv, tv);
        expected_tv += prob * tv;
        table.rows.push_back({static_cast<double>(z.to_mask()), prob, tv});
    });
    const double bound = 1.0 - expected_tv;

    out << "tv-check: null=" << a.pair.null_name << " alt=" << a.pair.alt_name
        << " n=" << built.n << " design=" << built.design.to_string() << '\n';
    out << "max_tv=" << format_double(max_tv) << '\n';
    out << "risk_lower_bound=" << format_double(bound) << '\n';
    if (!a.out_path.empty()) emit(table, a.out_path, a.format, out);
    return 0;
}

struct RiskBoundArgs {
    PairOptions pair;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    int threads = 0;
};

int run_risk_bound(const RiskBoundArgs& a, std::ostream& out, std::ostream&) {
    const BuiltPair built = build_pair(a.pair);
    const double bound = risk_lower_bound(built.pair, built.design);
    out << "risk_lower_bound=" << format_double(bound) << '\n';

    if (a.reps > 0) {
        const int threads = resolve_threads(a.threads);
        out << "# mixture error sums, reps=" << a.reps << " seed=" << a.seed << '\n';
        for (const TestProcedure& proc : baseline_tests(built.design, built.net)) {
            const Estimate estimate =
                mixture_error_sum(proc, built.pair, a.reps, a.seed, threads);
            out << "error_sum[" << proc.label << "]=" << format_double(estimate.point)
                << " se=" << format_double(estimate.se) << '\n';
        }
    }
    return 0;
}

struct LimRunArgs {
    std::string graph_path;
    std::string model_path;
    std::vector<double> beta;  // --beta b1 b2 b3 applied to all units
    double p = 0.5;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::string variant = "main";
    std::string out_path;
    std::string format = "csv";
    int threads = 0;
};

int run_lim_run(const LimRunArgs& a, std::ostream& out, std::ostream&) {
    const auto net = load_graph(a.graph_path);
    const std::size_t n = net->n();

    Model model = [&]() -> Model {
        if (!a.model_path.empty()) return load_model_file(a.model_path, net);
        if (a.beta.size() != 3)
            throw UsageError("pass --model FILE or --beta B1 B2 B3");
        try {
            return LimModel::uniform(net, {a.beta[0], a.beta[1], a.beta[2]});
        } catch (const UsageError& e) {
            throw DataError(e.what());
        }
    }();

    // Truth label: LIM models carry their separation; exposure models from
    // the no-effect / own-treatment families sit inside the null (g = 0).
    // Anything else runs unlabeled.
    const double separation = [&] {
        if (const auto* lim = std::get_if<LimModel>(&model)) return lim_separation(*lim).g;
        const auto family = std::get<ExposureOutcomeModel>(model).spec().family();
        if (family == ExposureFamily::NoEffect || family == ExposureFamily::OwnTreatment)
            return 0.0;
        return -1.0;
    }();
    const ThresholdVariant variant =
        a.variant == "general" ? ThresholdVariant::General : ThresholdVariant::Main;
    if (a.variant != "main" && a.variant != "general")
        throw UsageError("--variant must be main or general");

    const Design design = Design::bernoulli(n, a.p);
    const int threads = resolve_threads(a.threads);

    struct Row {
        double g_hat, tau, reject;
    };
    std::vector<Row> rows(a.reps);
    parallel_for(a.reps, threads, [&](std::size_t r) {
        rng::Stream stream = rng::substream(a.seed, r);
        const Intervention z = sample(design, stream);
        const std::vector<double> y = evaluate_outcomes(model, z);
        const LimTestResult result = run_lim_test(*net, z, y, a.p, variant);
        rows[r] = {result.g_hat, result.tau, result.reject ? 1.0 : 0.0};
    });

    double mean_g = 0.0;
    double reject_rate = 0.0;
    for (const Row& row : rows) {
        mean_g += row.g_hat;
        reject_rate += row.reject;
    }
    if (a.reps > 0) {
        mean_g /= static_cast<double>(a.reps);
        reject_rate /= static_cast<double>(a.reps);
    }

    Table table;
    table.meta = {{"command", "lim-run"},
                  {"graph", a.graph_path},
                  {"n", std::to_string(n)},
                  {"d_max", std::to_string(net->max_degree())},
                  {"p", format_double(a.p)},
                  {"variant", a.variant},
                  {"reps", std::to_string(a.reps)},
                  {"seed", std::to_string(a.seed)},
                  {"mean_g_hat", format_double(mean_g)},
                  {"reject_rate", format_double(reject_rate)}};
    if (separation >= 0.0) {
        table.meta.emplace_back("model_separation", format_double(separation));
        if (separation == 0.0)
            table.meta.emplace_back("type1", format_double(reject_rate));
        else
            table.meta.emplace_back("type2", format_double(1.0 - reject_rate));
    }
    table.columns = {"rep", "g_hat", "tau", "reject"};
    for (std::size_t r = 0; r < rows.size(); ++r)
        table.rows.push_back({static_cast<double>(r), rows[r].g_hat, rows[r].tau,
                              rows[r].reject});
    emit(table, a.out_path, a.format, out);
    return 0;
}

struct LimConsistencyArgs {
    std::size_t k = 4;
    std::string n_list = "1000,10000,100000";
    double delta = 1.0;
    double p = 0.5;
    std::size_t reps = 500;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    int threads = 0;
};

int run_lim_consistency(const LimConsistencyArgs& a, std::ostream& out, std::ostream&) {
    const std::vector<std::size_t> n_list = parse_n_list(a.n_list);
    const auto rows = consistency_curve(
        RegularGraphGen{a.k}, n_list, a.delta,
        [](std::shared_ptr<const Network> net) {
            return LimModel::uniform(std::move(net), {0.0, 0.0, 1.0});
        },
        a.p, a.reps, a.seed, resolve_threads(a.threads));

    Table table;
    table.meta = {{"command", "lim-consistency"}, {"k", std::to_string(a.k)},
                  {"delta", format_double(a.delta)}, {"p", format_double(a.p)},
                  {"reps", std::to_string(a.reps)},  {"seed", std::to_string(a.seed)}};
    table.columns = {"n",  "delta",    "type1", "type1_se", "type2",
                     "type2_se", "overall", "reps",  "seed"};
    for (const CurveRow& row : rows)
        table.rows.push_back({static_cast<double>(row.n), row.delta, row.type1.point,
                              row.type1.se, row.type2.point, row.type2.se, row.overall,
                              static_cast<double>(row.reps), static_cast<double>(row.seed)});
    emit(table, a.out_path, a.format, out);
    return 0;
}

struct MomentsArgs {
    std::size_t degree = 0;
    double p = 0.5;
};

int run_moments(const MomentsArgs& a, std::ostream& out, std::ostream&) {
    const FractionMoments closed = fraction_moments(a.degree, a.p);
    const FractionMoments oracle = fraction_moments_enumerated(a.degree, a.p);
    out << "moment,closed_form,enumerated\n";
    out << "m1," << format_double(closed.m1) << ',' << format_double(oracle.m1) << '\n';
    out << "m2," << format_double(closed.m2) << ',' << format_double(oracle.m2) << '\n';
    out << "m3," << format_double(closed.m3) << ',' << format_double(oracle.m3) << '\n';
    out << "m4," << format_double(closed.m4) << ',' << format_double(oracle.m4) << '\n';
    out << "var," << format_double(closed.var) << ',' << format_double(oracle.var) << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulation lab for specification tests of network interference models"};
    app.name("interference-lab");
    app.require_subcommand(1);

    GenGraphArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen-graph", "Generate a graph edge-list file");
    gen->add_option("--kind", gen_args.kind, "Graph kind (k-regular)");
    gen->add_option("--n", gen_args.n, "Number of units")->required();
    gen->add_option("--k", gen_args.k, "Degree")->required();
    gen->add_option("--seed", gen_args.seed, "Master seed")->required();
    gen->add_option("--out", gen_args.out_path, "Output edge-list path")->required();

    TvCheckArgs tv_args;
    CLI::App* tv = app.add_subcommand(
        "tv-check", "Exact per-intervention TV distance between the adversarial mixtures");
    tv->add_option("--null", tv_args.pair.null_name, "Null exposure family")->required();
    tv->add_option("--alt", tv_args.pair.alt_name, "Alternative exposure family")->required();
    auto* tv_n = tv->add_option("--n", tv_args.pair.n, "Unit count (graph-free families)");
    tv->add_option("--graph", tv_args.pair.graph_path, "Edge-list file")->excludes(tv_n);
    tv->add_option("--design", tv_args.pair.design_text, "Design spec, e.g. bernoulli:0.5");
    tv->add_option("--out", tv_args.out_path, "Write the per-z table here");
    tv->add_option("--format", tv_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    RiskBoundArgs risk_args;
    CLI::App* risk = app.add_subcommand(
        "risk-bound", "Exact Le Cam lower bound, optionally with Monte Carlo error sums");
    risk->add_option("--null", risk_args.pair.null_name, "Null exposure family")->required();
    risk->add_option("--alt", risk_args.pair.alt_name, "Alternative exposure family")->required();
    auto* risk_n = risk->add_option("--n", risk_args.pair.n, "Unit count");
    risk->add_option("--graph", risk_args.pair.graph_path, "Edge-list file")->excludes(risk_n);
    risk->add_option("--design", risk_args.pair.design_text, "Design spec");
    auto* risk_reps =
        risk->add_option("--reps", risk_args.reps, "Monte Carlo replications for error sums");
    risk->add_option("--seed", risk_args.seed, "Master seed")->needs(risk_reps);
    risk_reps->needs(risk->get_option("--seed"));
    risk->add_option("--threads", risk_args.threads, "Worker threads (0 = auto)");

    LimRunArgs lim_args;
    CLI::App* lim = app.add_subcommand("lim-run", "Run the LIM threshold test repeatedly");
    lim->add_option("--graph", lim_args.graph_path, "Edge-list file")->required();
    lim->add_option("--model", lim_args.model_path, "Model JSON file");
    lim->add_option("--beta", lim_args.beta, "Uniform LIM coefficients B1 B2 B3")->expected(3);
    lim->add_option("--p", lim_args.p, "Treatment probability");
    lim->add_option("--reps", lim_args.reps, "Replications")->required();
    lim->add_option("--seed", lim_args.seed, "Master seed")->required();
    lim->add_option("--variant", lim_args.variant, "Threshold variant: main or general");
    lim->add_option("--out", lim_args.out_path, "Output path (default stdout)");
    lim->add_option("--format", lim_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    lim->add_option("--threads", lim_args.threads, "Worker threads (0 = auto)");

    LimConsistencyArgs curve_args;
    CLI::App* curve =
        app.add_subcommand("lim-consistency", "Overall-error curve of the LIM test across n");
    curve->add_option("--k", curve_args.k, "Regular-graph degree");
    curve->add_option("--n", curve_args.n_list, "Comma-separated n list");
    curve->add_option("--delta", curve_args.delta, "Separation value");
    curve->add_option("--p", curve_args.p, "Treatment probability");
    curve->add_option("--reps", curve_args.reps, "Replications per cell");
    curve->add_option("--seed", curve_args.seed, "Master seed")->required();
    curve->add_option("--out", curve_args.out_path, "Output path (default stdout)");
    curve->add_option("--format", curve_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--threads", curve_args.threads, "Worker threads (0 = auto)");

    MomentsArgs moments_args;
    CLI::App* moments =
        app.add_subcommand("moments", "Treated-fraction moments: closed form vs enumeration");
    moments->add_option("--degree", moments_args.degree, "Unit degree")->required();
    moments->add_option("--p", moments_args.p, "Treatment probability");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return run_gen_graph(gen_args, out, err);
        if (tv->parsed()) return run_tv_check(tv_args, out, err);
        if (risk->parsed()) return run_risk_bound(risk_args, out, err);
        if (lim->parsed()) return run_lim_run(lim_args, out, err);
        if (curve->parsed()) return run_lim_consistency(curve_args, out, err);
        if (moments->parsed()) return run_moments(moments_args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace interference::cli
