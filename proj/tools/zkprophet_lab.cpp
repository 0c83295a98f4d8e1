// zkprophet-lab: correctness suites, kernel benchmarks, and analytical
// reports for the MSM/NTT proving kernels.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zkplab/errors.hpp"
#include "zkplab/harness.hpp"
#include "zkplab/presets.hpp"
#include "zkplab/prover.hpp"

using namespace zkplab;
using nlohmann::json;

namespace {

constexpr const char* kOutDirEnv = "ZKPROPHET_LAB_OUTDIR";

struct OutputOptions {
    std::string format = "json";  // json | csv | md
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--out", out.out_path,
                    "Output file (default: stdout, or $" + std::string(kOutDirEnv) +
                        "/<command>.<ext> when the variable is set)");
}

void emit(const OutputOptions& out, const std::string& command, const std::string& text) {
    std::string path = out.out_path;
    if (path.empty()) {
        if (const char* dir = std::getenv(kOutDirEnv)) {
            const std::string ext = out.format == "md" ? "md" : out.format;
            path = (std::filesystem::path(dir) / (command + "." + ext)).string();
        }
    }
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << text;
    std::cerr << "wrote " << path << "\n";
}

template <typename Report>
std::string render(const Report& r, const std::string& format) {
    if (format == "csv") return to_csv(r);
    if (format == "md") return to_markdown(r);
    return to_json(r).dump(2);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

json msm_stats_json(const MsmStats& s) {
    return json{{"bucket_accum_padds", s.bucket_accum_padds},
                {"bucket_reduce_padds", s.bucket_reduce_padds},
                {"window_reduce_padds", s.window_reduce_padds},
                {"window_reduce_pdbls", s.window_reduce_pdbls}};
}

int run(int argc, char** argv) {
    CLI::App app{"instrumented MSM/NTT proving-kernel laboratory"};
    app.require_subcommand(1);

    // --- bench ---------------------------------------------------------
    BenchConfig bench_cfg;
    double bench_budget_gib = 1.0;
    OutputOptions bench_out;
    auto* bench = app.add_subcommand("bench", "kernel timings, counters, and time shares");
    bench->add_option("--scale-min", bench_cfg.scale_min, "smallest log2 input size");
    bench->add_option("--scale-max", bench_cfg.scale_max, "largest log2 input size");
    bench->add_option("--kernels", bench_cfg.kernels, "kernels to run (msm ntt prove)");
    bench->add_flag("--compare-serial", bench_cfg.compare_serial,
                    "also run the single-thread reference variant");
    bench->add_option("--threads", bench_cfg.threads, "worker threads (0 = default)");
    bench->add_option("--seed", bench_cfg.seed, "input generation seed");
    bench->add_option("--curve", bench_cfg.curve, "curve preset for MSM");
    bench->add_option("--field", bench_cfg.field, "field preset for NTT");
    bench->add_option("--window-bits", bench_cfg.window_bits, "Pippenger window bits (0 = auto)");
    bench->add_option("--precompute", bench_cfg.precompute, "precomputed multiples per point");
    bench->add_option("--radix-log", bench_cfg.radix_log, "stages fused per pass (1-8)");
    bench->add_option("--warmup", bench_cfg.warmup, "warmup repetitions");
    bench->add_option("--reps", bench_cfg.reps, "measured repetitions (median reported)");
    bench->add_option("--memory-budget-gib", bench_budget_gib, "refuse runs above this estimate");
    bench->add_option("--word-bits", bench_cfg.word_bits, "limb width (32 or 64)");
    add_output_options(bench, bench_out);

    // --- optable -------------------------------------------------------
    unsigned optable_word_bits = 32;
    OutputOptions optable_out;
    auto* optable = app.add_subcommand("optable", "per-form PADD/PDBL operation counts");
    optable->add_option("--word-bits", optable_word_bits, "limb width (32 or 64)");
    add_output_options(optable, optable_out);

    // --- tradeoff ------------------------------------------------------
    unsigned to_lambda = 253, to_c = 23, to_scale = 26, to_point_bytes = 96;
    double to_budget_gib = 48.0;
    OutputOptions tradeoff_out;
    auto* tradeoff = app.add_subcommand("tradeoff", "window precomputation cost/memory sweep");
    tradeoff->add_option("--scalar-bits", to_lambda, "scalar width in bits");
    tradeoff->add_option("--window-bits", to_c, "Pippenger window bits");
    tradeoff->add_option("--scale", to_scale, "log2 point count");
    tradeoff->add_option("--budget-gib", to_budget_gib, "memory budget in GiB");
    tradeoff->add_option("--point-bytes", to_point_bytes, "uncompressed affine point size");
    add_output_options(tradeoff, tradeoff_out);

    // --- roofline ------------------------------------------------------
    std::string roof_field = "bls12-377-fq";
    std::uint64_t roof_iters = 20000, roof_seed = 1;
    unsigned roof_word_bits = 32;
    OutputOptions roof_out;
    auto* roofline = app.add_subcommand("roofline", "arithmetic intensity per field operation");
    roofline->add_option("--field", roof_field, "field preset");
    roofline->add_option("--iterations", roof_iters, "timed calls per operation");
    roofline->add_option("--seed", roof_seed, "working-set seed");
    roofline->add_option("--word-bits", roof_word_bits, "limb width (32 or 64)");
    add_output_options(roofline, roof_out);

    // --- msm -----------------------------------------------------------
    std::string msm_curve = "bls12-377-g1", msm_points_path, msm_scalars_path, msm_form = "xyzz";
    std::uint64_t msm_random_n = 0, msm_seed = 1;
    unsigned msm_window_bits = 0, msm_precompute = 1, msm_word_bits = 32;
    int msm_threads = 0;
    OutputOptions msm_out;
    auto* msm_cmd = app.add_subcommand("msm", "multi-scalar multiplication over input files");
    msm_cmd->add_option("--curve", msm_curve, "curve preset");
    msm_cmd->add_option("--points", msm_points_path, "affine points, one hex per line");
    msm_cmd->add_option("--scalars", msm_scalars_path, "scalars, one hex per line");
    msm_cmd->add_option("--random-n", msm_random_n, "generate n random inputs instead of files");
    msm_cmd->add_option("--seed", msm_seed, "seed for --random-n");
    msm_cmd->add_option("--window-bits", msm_window_bits, "window bits (0 = auto)");
    msm_cmd->add_option("--precompute", msm_precompute, "precomputed multiples per point");
    msm_cmd->add_option("--form", msm_form, "accumulation form")
        ->check(CLI::IsMember({"affine", "jacobian", "xyzz"}));
    msm_cmd->add_option("--threads", msm_threads, "worker threads");
    msm_cmd->add_option("--word-bits", msm_word_bits, "limb width (32 or 64)");
    add_output_options(msm_cmd, msm_out);

    // --- ntt -----------------------------------------------------------
    std::string ntt_field = "bls12-377-fr", ntt_in_path, ntt_direction = "fwd";
    bool ntt_coset = false;
    std::uint64_t ntt_random_n = 0, ntt_seed = 1;
    unsigned ntt_radix_log = 8, ntt_word_bits = 32;
    int ntt_threads = 0;
    OutputOptions ntt_out;
    auto* ntt_cmd = app.add_subcommand("ntt", "number-theoretic transform over a vector file");
    ntt_cmd->add_option("--field", ntt_field, "field preset");
    ntt_cmd->add_option("--in", ntt_in_path, "input vector, one hex element per line");
    ntt_cmd->add_option("--random-n", ntt_random_n, "generate a random vector instead");
    ntt_cmd->add_option("--seed", ntt_seed, "seed for --random-n");
    ntt_cmd->add_option("--direction", ntt_direction, "fwd or inv")
        ->check(CLI::IsMember({"fwd", "inv"}));
    ntt_cmd->add_flag("--coset", ntt_coset, "transform on the generator coset");
    ntt_cmd->add_option("--radix-log", ntt_radix_log, "stages fused per pass (1-8)");
    ntt_cmd->add_option("--threads", ntt_threads, "worker threads");
    ntt_cmd->add_option("--word-bits", ntt_word_bits, "limb width (32 or 64)");
    ntt_cmd->add_option("--out", ntt_out.out_path, "output vector file (default stdout)");

    // --- prove ---------------------------------------------------------
    unsigned prove_scale = 6;
    std::uint64_t prove_seed = 1;
    std::uint64_t prove_witness = 0;
    std::string prove_curve = "bls12-377-g1";
    unsigned prove_window_bits = 0, prove_word_bits = 32;
    int prove_threads = 0;
    OutputOptions prove_out;
    auto* prove_cmd = app.add_subcommand("prove", "end-to-end mock prover run");
    prove_cmd->add_option("--scale", prove_scale, "log2 domain size");
    prove_cmd->add_option("--seed", prove_seed, "setup/instance seed");
    prove_cmd->add_option("--witness-size", prove_witness, "witness slots (default 2^scale)");
    prove_cmd->add_option("--curve", prove_curve, "curve preset");
    prove_cmd->add_option("--window-bits", prove_window_bits, "MSM window bits (0 = auto)");
    prove_cmd->add_option("--threads", prove_threads, "worker threads");
    prove_cmd->add_option("--word-bits", prove_word_bits, "limb width (32 or 64)");
    add_output_options(prove_cmd, prove_out);

    // --- verify --------------------------------------------------------
    VerifyOptions verify_opt;
    OutputOptions verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "oracle-equivalence suites");
    verify_cmd->add_option("--seed", verify_opt.seed, "suite seed");
    verify_cmd->add_option("--word-bits", verify_opt.word_bits, "limb width (32 or 64)");
    add_output_options(verify_cmd, verify_out);

    CLI11_PARSE(app, argc, argv);

    if (bench->parsed()) {
        bench_cfg.memory_budget_bytes =
            std::uint64_t(bench_budget_gib * double(std::uint64_t{1} << 30));
        BenchReport rep = run_bench(bench_cfg);
        emit(bench_out, "bench", render(rep, bench_out.format));
        return 0;
    }
    if (optable->parsed()) {
        OptableReport rep = optable_report(optable_word_bits);
        emit(optable_out, "optable", render(rep, optable_out.format));
        return rep.all_match ? 0 : 1;
    }
    if (tradeoff->parsed()) {
        TradeoffReport rep = tradeoff_report(
            to_lambda, to_c, std::uint64_t{1} << to_scale,
            std::uint64_t(to_budget_gib * double(std::uint64_t{1} << 30)), to_point_bytes);
        emit(tradeoff_out, "tradeoff", render(rep, tradeoff_out.format));
        return 0;
    }
    if (roofline->parsed()) {
        auto rep = roofline_report(field_preset(roof_field, roof_word_bits), roof_iters, roof_seed);
        emit(roof_out, "roofline", render(rep, roof_out.format));
        return 0;
    }
    if (msm_cmd->parsed()) {
        const CurveParams& curve = curve_preset(msm_curve, msm_word_bits);
        OpCounters ctr;
        std::vector<CurvePoint> points;
        std::vector<FixedUint> scalars;
        if (msm_random_n > 0) {
            std::mt19937_64 rng(msm_seed);
            CurvePoint g = convert(CurvePoint::affine(curve.gen_x, curve.gen_y),
                                   CoordForm::Jacobian, curve, ctr);
            std::vector<CurvePoint> chain;
            CurvePoint acc = scalar_mul(g, random_uint_below(curve.fr->modulus, rng), curve, ctr);
            if (acc.is_identity()) acc = g;
            for (std::uint64_t i = 0; i < msm_random_n; ++i) {
                chain.push_back(acc);
                acc = padd(acc, g, curve, ctr);
                scalars.push_back(random_uint_below(curve.fr->modulus, rng));
            }
            points = batch_to_affine(chain, curve, ctr);
        } else {
            if (msm_points_path.empty() || msm_scalars_path.empty())
                throw UsageError("msm needs --points and --scalars (or --random-n)");
            for (const std::string& line : read_lines(msm_points_path))
                points.push_back(point_from_hex(line, curve, ctr));
            for (const std::string& line : read_lines(msm_scalars_path))
                scalars.push_back(FixedUint::from_hex(line, curve.fr->word_bits,
                                                      curve.fr->limb_count));
        }
        MsmConfig cfg = MsmConfig::for_curve(curve, points.size());
        if (msm_window_bits > 0) cfg.window_bits = msm_window_bits;
        cfg.threads = msm_threads;
        cfg.form = msm_form == "affine"     ? CoordForm::Affine
                   : msm_form == "jacobian" ? CoordForm::Jacobian
                                            : CoordForm::Xyzz;
        OpCounters run_ctr;
        MsmStats stats;
        CurvePoint result;
        if (msm_precompute > 1) {
            cfg.precompute_factor = msm_precompute;
            auto table = precompute_points(points, cfg, curve, ctr);
            result = msm_precomputed(table, scalars, cfg, curve, run_ctr, &stats);
        } else {
            result = msm(points, scalars, cfg, curve, run_ctr, &stats);
        }
        json j{{"result", point_to_hex(result, curve, ctr)},
               {"n", points.size()},
               {"window_bits", cfg.window_bits},
               {"windows", cfg.window_count()},
               {"form", msm_form},
               {"counters", to_json(run_ctr)},
               {"stats", msm_stats_json(stats)}};
        emit(msm_out, "msm", j.dump(2));
        return 0;
    }
    if (ntt_cmd->parsed()) {
        const FieldParams& field = field_preset(ntt_field, ntt_word_bits);
        OpCounters ctr;
        std::vector<FieldElement> v;
        if (ntt_random_n > 0) {
            std::mt19937_64 rng(ntt_seed);
            for (std::uint64_t i = 0; i < ntt_random_n; ++i)
                v.push_back(random_element(field, rng, ctr));
        } else {
            if (ntt_in_path.empty())
                throw UsageError("ntt needs --in (or --random-n)");
            for (const std::string& line : read_lines(ntt_in_path))
                v.push_back(FieldElement::from_uint(
                    FixedUint::from_hex(line, field.word_bits, field.limb_count), field, ctr));
        }
        NttDomain d = build_domain(v.size(), field, ctr);
        const Direction dir = ntt_direction == "fwd" ? Direction::Forward : Direction::Inverse;
        std::vector<FieldElement> out =
            ntt_coset ? coset_ntt(v, d, dir, ctr, nullptr, ntt_threads)
                      : ntt_staged(v, d, dir, ntt_radix_log, ctr, nullptr, ntt_threads);
        std::string text;
        for (const FieldElement& e : out) text += e.to_hex(ctr) + "\n";
        OutputOptions opts = ntt_out;
        opts.format = "txt";
        emit(opts, "ntt", text);
        return 0;
    }
    if (prove_cmd->parsed()) {
        const CurveParams& curve = curve_preset(prove_curve, prove_word_bits);
        const std::size_t n = std::size_t{1} << prove_scale;
        const std::size_t m = prove_witness > 0 ? prove_witness : n;
        OpCounters ctr;
        NttDomain d = build_domain(n, *curve.fr, ctr);
        auto [pk, td] = mock_setup(n, m, prove_seed, curve, ctr);
        ProverInputs in = random_instance(n, m, prove_seed + 1, *curve.fr, ctr);
        MsmConfig cfg = MsmConfig::for_curve(curve, n);
        if (prove_window_bits > 0) cfg.window_bits = prove_window_bits;
        cfg.threads = prove_threads;
        Proof proof = prove(pk, in, d, cfg, ctr);
        const bool accepted = check_with_trapdoor(proof, td, pk, in, d, ctr);
        const ProofTranscript& tr = proof.transcript;
        json j{{"scale", prove_scale},
               {"witness_size", m},
               {"seed", prove_seed},
               {"accepted", accepted},
               {"a_point", point_to_hex(proof.a_point, curve, ctr)},
               {"c_point", point_to_hex(proof.c_point, curve, ctr)},
               {"transcript",
                json{{"transforms", tr.transforms},
                     {"ntt_seconds", tr.ntt_seconds},
                     {"msm_seconds", tr.msm_seconds},
                     {"ntt_counters", to_json(tr.ntt_counters)},
                     {"msm_counters", to_json(tr.msm_counters)},
                     {"glue_counters", to_json(tr.glue_counters)},
                     {"msm_stats", msm_stats_json(tr.msm_stats)},
                     {"ntt_stats", json{{"transforms", tr.ntt_stats.transforms},
                                        {"butterflies", tr.ntt_stats.butterflies}}}}}};
        emit(prove_out, "prove", j.dump(2));
        return accepted ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
        VerifySummary summary = verify_suite(verify_opt);
        emit(verify_out, "verify", to_json(summary).dump(2));
        return summary.ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const MemoryBudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
