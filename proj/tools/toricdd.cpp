#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toricdd/ddideal.hpp"
#include "toricdd/format.hpp"
#include "toricdd/lech.hpp"
#include "toricdd/toric.hpp"

namespace {

using namespace toricdd;

constexpr const char* kVersion = "toricdd 1.0.0";

struct IdealInput {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

DDParams parse_dd_spec(const std::string& spec) {
    // dd:M,N,R[,A,B]
    std::string body = spec.substr(3);
    for (auto& c : body)
        if (c == ',') c = ' ';
    std::istringstream in(body);
    DDParams p;
    if (!(in >> p.m >> p.n >> p.r)) throw CLI::ValidationError("--ideal", "expected dd:M,N,R[,A,B]");
    if (!(in >> p.a)) {
        p.a = p.b = 2;
    } else if (!(in >> p.b)) {
        throw CLI::ValidationError("--ideal", "expected dd:M,N,R,A,B");
    }
    p.validate();
    return p;
}

IdealInput load_ideal(const std::string& source, const DDParams* ambient_params) {
    if (source.rfind("dd:", 0) == 0) {
        DDParams p = parse_dd_spec(source);
        RingPtr ring = RingSpec::dd_ring(p.m, p.n, p.r);
        return {ring, dd_ideal(p, ring)};
    }
    std::ifstream file(source);
    if (!file) throw CLI::ValidationError("--ideal", "cannot open file " + source);
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::string text = buffer.str();

    int m = 1, n = 1, r = 1;
    if (ambient_params) {
        m = ambient_params->m;
        n = ambient_params->n;
        r = ambient_params->r;
    }
    for (const auto& v : scan_variables(text)) {
        if (v.kind != VarKind::X)
            throw CLI::ValidationError("--ideal", "ideal files may only use x[l,i,j] variables");
        m = std::max(m, v.i);
        n = std::max(n, v.j);
        r = std::max(r, v.l);
    }
    RingPtr ring = RingSpec::dd_ring(m, n, r);
    return {ring, parse_ideal_lines(text, ring)};
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

int run_gens(const DDParams& p) {
    RingPtr ring = RingSpec::dd_ring(p.m, p.n, p.r);
    for (const auto& g : dd_ideal(p, ring)) std::cout << to_string(g) << "\n";
    return 0;
}

int run_gb(const std::string& source, const std::string& order_name) {
    IdealInput input = load_ideal(source, nullptr);
    if (input.gens.empty()) {
        std::cerr << "ideal file contains no generators\n";
        return 1;
    }
    MonomialOrder order = MonomialOrder::grevlex();
    if (order_name == "lex")
        order = MonomialOrder::lex();
    else if (order_name != "grevlex")
        throw CLI::ValidationError("--order", "supported orders: grevlex, lex");
    GroebnerBasis gb = buchberger(input.gens, order);
    for (const auto& g : gb.basis) std::cout << to_string(g.transport(input.ring)) << "\n";
    return 0;
}

int run_toric_check(const DDParams& p, int var_cap) {
    ToricCheckOptions opts;
    opts.var_cap = var_cap;
    ToricEqualityResult res = toric_equality(p, opts);
    std::cout << "generators map into the parametrization ideal: "
              << (res.contained ? "yes" : "NO") << "\n";
    std::cout << "kernel generators from elimination: " << res.kernel_size << "\n";
    std::cout << "kernel equals the double determinantal ideal: " << (res.equal ? "yes" : "NO")
              << "\n";
    return res.contained && res.equal ? 0 : 1;
}

int run_chart(const DDParams& p, const std::string& pivot_spec) {
    int l, i, j;
    char c1, c2;
    std::istringstream in(pivot_spec);
    if (!(in >> l >> c1 >> i >> c2 >> j) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("--pivot", "expected l,i,j");
    VarId pivot = VarId::x(l, i, j);

    ChartPartition part = chart_partition(p, pivot);
    auto print_set = [](const char* tag, const std::vector<VarId>& vars) {
        std::cout << tag << ":";
        for (const auto& v : vars) std::cout << " " << v.name();
        std::cout << "\n";
    };
    print_set("Y1", part.y1);
    print_set("Y2", part.y2);
    print_set("Y3", part.y3);

    ChartReport rep = verify_chart(p, pivot);
    std::cout << "|Y1| = " << rep.y1_size << " (expected " << (p.m + p.n + p.r - 2) << ")\n";
    if (rep.ok) {
        std::cout << "chart verification: PASS\n";
        return 0;
    }
    std::cout << "chart verification: FAIL\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return 1;
}

int run_degenerate(int m, int n, int b) {
    DDParams p{m, n, 2, 2, b};
    ContainmentResult res = containment_check(p);
    if (res.vacuous) std::cerr << "warning: no minors of size " << b << ", vacuously true\n";
    std::cout << "checked " << res.checked << " minors, containment "
              << (res.ok ? "holds" : "FAILS") << "\n";
    return res.ok ? 0 : 1;
}

HilbertSeriesNumerator numerator_for(const DDParams& p) {
    RingPtr ring = RingSpec::dd_ring(p.m, p.n, p.r);
    GroebnerBasis gb = buchberger(dd_ideal(p, ring));
    return hilbert_numerator(initial_ideal(gb), ring->nvars());
}

int run_dim(const DDParams& p) {
    HilbertSeriesNumerator num = numerator_for(p);
    int affine = krull_dim(num);
    std::cout << "affine " << affine << "\n";
    std::cout << "projective " << (affine - 1) << "\n";
    return 0;
}

int run_degree(const DDParams& p) {
    std::cout << ring_degree(numerator_for(p)) << "\n";
    return 0;
}

int run_length(const std::string& source, const std::string& ambient_spec) {
    std::vector<Polynomial> gens;
    if (!ambient_spec.empty()) {
        DDParams ap = parse_dd_spec(ambient_spec);
        IdealInput input = load_ideal(source, &ap);
        gens = dd_ideal(ap, input.ring);
        for (const auto& g : input.gens) gens.push_back(g);
    } else {
        IdealInput input = load_ideal(source, nullptr);
        gens = input.gens;
    }
    if (gens.empty()) {
        std::cerr << "ideal file contains no generators\n";
        return 1;
    }
    std::cout << colength(gens) << "\n";
    return 0;
}

int run_mult(const std::string& source, const std::string& ambient_spec,
             const std::string& method_name, std::uint64_t seed) {
    std::vector<Polynomial> ambient;
    IdealInput input{nullptr, {}};
    if (!ambient_spec.empty()) {
        DDParams ap = parse_dd_spec(ambient_spec);
        input = load_ideal(source, &ap);
        ambient = dd_ideal(ap, input.ring);
    } else {
        input = load_ideal(source, nullptr);
    }
    if (input.gens.empty()) {
        std::cerr << "ideal file contains no generators\n";
        return 1;
    }
    MultiplicityMethod method = MultiplicityMethod::GenericReduction;
    if (method_name == "fit")
        method = MultiplicityMethod::HsFit;
    else if (method_name != "reduction")
        throw CLI::ValidationError("--method", "supported methods: reduction, fit");
    MultiplicityResult res = hs_multiplicity(input.gens, ambient, method, seed);
    std::cout << res.value << "\n";
    std::cerr << (method == MultiplicityMethod::GenericReduction
                      ? "draws used: " + std::to_string(res.draws_used)
                      : "fit power: " + std::to_string(res.stabilization_exp))
              << "\n";
    return 0;
}

int run_lech(const ExperimentConfig& config, const std::string& out_path,
             const std::string& gnuplot_prefix) {
    std::vector<SampleRecord> records = run_experiment(config);
    std::ofstream file;
    write_csv(records, open_output(out_path, file));
    if (!gnuplot_prefix.empty()) {
        std::ofstream fig1(gnuplot_prefix + "-fig1.dat", std::ios::binary);
        std::ofstream fig2(gnuplot_prefix + "-fig2.dat", std::ios::binary);
        if (!fig1 || !fig2)
            throw CLI::ValidationError("--gnuplot", "cannot open data files at prefix " +
                                                        gnuplot_prefix);
        write_gnuplot(records, fig1, fig2);
    }
    int failures = 0;
    for (const auto& rec : records)
        if (!rec.error.empty()) ++failures;
    if (failures > 0) std::cerr << failures << " sample(s) failed; see the error column\n";
    return 0;
}

int run_table(int kmax, std::uint64_t seed, const std::string& out_path) {
    std::vector<MuPowerRow> rows = mu_power_table(kmax, seed);
    std::ofstream file;
    write_table_csv(rows, open_output(out_path, file));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toricdd: toric double determinantal ideals, their structural checks,\n"
                 "and Lech-inequality experiments over the rationals"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DDParams params;
    std::string ideal_source, ambient_spec, order_name = "grevlex", method_name = "reduction";
    std::string pivot_spec, out_path, gnuplot_prefix;
    std::uint64_t seed = 0;
    int var_cap = 20, kmax = 12, b_size = 3;

    auto add_mnr = [&](CLI::App* cmd, bool with_ab) {
        cmd->add_option("--m", params.m, "rows of each block")->required();
        cmd->add_option("--n", params.n, "columns of each block")->required();
        cmd->add_option("--r", params.r, "number of blocks")->required();
        if (with_ab) {
            cmd->add_option("--a", params.a, "minor size in the horizontal concatenation");
            cmd->add_option("--b", params.b, "minor size in the vertical concatenation");
        }
    };

    CLI::App* gens = app.add_subcommand("gens", "print the ideal generators");
    add_mnr(gens, true);

    CLI::App* gb = app.add_subcommand("gb", "print the reduced Groebner basis");
    gb->add_option("--ideal", ideal_source, "generator file or builtin dd:M,N,R[,A,B]")
        ->required();
    gb->add_option("--order", order_name, "term order (grevlex, lex)");

    CLI::App* toric_check =
        app.add_subcommand("toric-check", "kernel equality for the parametrization");
    add_mnr(toric_check, false);
    toric_check->add_option("--var-cap", var_cap, "largest elimination roster allowed");

    CLI::App* chart = app.add_subcommand("chart", "smoothness chart at a pivot");
    add_mnr(chart, false);
    chart->add_option("--pivot", pivot_spec, "pivot variable as l,i,j")->required();

    CLI::App* degenerate =
        app.add_subcommand("degenerate", "containment of the larger minors (r = 2)");
    degenerate->add_option("--m", params.m)->required();
    degenerate->add_option("--n", params.n)->required();
    degenerate->add_option("--b", b_size, "size of the vertical minors")->required();

    CLI::App* dim = app.add_subcommand("dim", "Krull dimension of the coordinate ring");
    add_mnr(dim, false);
    CLI::App* degree = app.add_subcommand("degree", "degree of the coordinate ring");
    add_mnr(degree, false);

    CLI::App* length = app.add_subcommand("length", "colength of an ideal file");
    length->add_option("--ideal", ideal_source, "generator file")->required();
    length->add_option("--ambient", ambient_spec, "prepend dd:M,N,R relations");

    CLI::App* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity of an ideal file");
    mult->add_option("--ideal", ideal_source, "generator file")->required();
    mult->add_option("--ambient", ambient_spec, "compute over the quotient by dd:M,N,R");
    mult->add_option("--method", method_name, "reduction (default) or fit");
    mult->add_option("--seed", seed, "seed for the generic draws");

    ExperimentConfig config;
    CLI::App* lech = app.add_subcommand("lech", "randomized Lech-ratio sweep over S(2,2,2)");
    lech->add_option("--seed", config.master_seed, "master seed")->required();
    lech->add_option("--count", config.sample_count, "number of samples")->required();
    lech->add_option("--jobs", config.jobs, "parallel sample workers");
    lech->add_option("--out", out_path, "CSV output file (default stdout)");
    lech->add_option("--gnuplot", gnuplot_prefix, "also write PREFIX-fig1.dat / PREFIX-fig2.dat");
    lech->set_config("--config", "", "key=value file with the options above");

    CLI::App* table = app.add_subcommand("table", "exact mu-power table");
    table->add_option("--kmax", kmax, "largest power (1..12 reproduces the reference)");
    table->add_option("--seed", seed, "seed for the k <= 3 cross-checks");
    table->add_option("--out", out_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gens->parsed()) return run_gens(params);
        if (gb->parsed()) return run_gb(ideal_source, order_name);
        if (toric_check->parsed()) return run_toric_check(params, var_cap);
        if (chart->parsed()) return run_chart(params, pivot_spec);
        if (degenerate->parsed()) return run_degenerate(params.m, params.n, b_size);
        if (dim->parsed()) return run_dim(params);
        if (degree->parsed()) return run_degree(params);
        if (length->parsed()) return run_length(ideal_source, ambient_spec);
        if (mult->parsed()) return run_mult(ideal_source, ambient_spec, method_name, seed);
        if (lech->parsed()) return run_lech(config, out_path, gnuplot_prefix);
        if (table->parsed()) return run_table(kmax, seed, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
