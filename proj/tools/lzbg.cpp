// Command-line front end: factorize files, verify round trips, run benchmark
// sweeps across the algorithm variants, generate corpus inputs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lzbg/codec.hpp"
#include "lzbg/corpus.hpp"
#include "lzbg/factorizer.hpp"

namespace {

using namespace lzbg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

Idx oracle_cap_default() {
    if (const char* env = std::getenv("LZFACT_ORACLE_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= kMaxTextLength) return static_cast<Idx>(v);
        std::cerr << "warning: ignoring bad LZFACT_ORACLE_CAP value\n";
    }
    return kNaiveFactorizeCap;
}

void print_report(const RunReport& r) {
    std::cout << "variant=" << r.variant << " N=" << r.text_length << " factors=" << r.factor_count
              << " s_max=" << r.s_max << " comparisons=" << r.comparison_count
              << " modeled_bytes=" << r.modeled_bytes << " actual_peak_bytes=" << r.actual_peak_bytes
              << " sa_build_seconds=" << r.sa_build_seconds
              << " post_sa_seconds=" << r.post_sa_seconds << "\n";
}

void write_output_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write error on " + path.string());
}

int cmd_factorize(const std::string& input, const std::string& variant_name, std::string output,
                  const std::string& format, Idx oracle_cap) {
    const Text text = Text::load(input);
    RunReport report;
    Factorization f;

    if (const auto v = parse_variant(variant_name)) {
        f = factorize(text, *v, &report);
    } else if (variant_name == "naive") {
        const auto start = std::chrono::steady_clock::now();
        f = factorize_naive(text, oracle_cap);
        report.variant = "naive";
        report.text_length = text.length();
        report.factor_count = f.count();
        report.post_sa_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } else if (variant_name == "lpf-oracle") {
        const auto start = std::chrono::steady_clock::now();
        f = lz_from_lpf(text, lpf_brute_force(text, oracle_cap));
        report.variant = "lpf-oracle";
        report.text_length = text.length();
        report.factor_count = f.count();
        report.post_sa_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } else {
        std::cerr << "unknown variant: " << variant_name << "\n";
        return kExitUsage;
    }

    if (output.empty()) output = input + ".lz";
    if (format == "binary") {
        const auto stream = encode(f, static_cast<std::uint64_t>(text.length()));
        write_output_file(output, std::string_view(reinterpret_cast<const char*>(stream.data()),
                                                   stream.size()));
    } else {
        write_output_file(output, to_text_format(f));
    }
    print_report(report);
    std::cout << "wrote " << output << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, Idx oracle_cap) {
    const Text text = Text::load(input);
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };

    SuffixArrayBundle bundle = build_sa(text);
    std::vector<Factorization> results;
    for (Variant v : kAllVariants)
        results.push_back(factorize_with_sa(text, bundle.sa, v));

    bool agree = true;
    for (const auto& f : results) agree = agree && f == results.front();
    check("variant agreement (6 variants, identical output)", agree);

    bool witnesses = true;
    for (const auto& f : results) witnesses = witnesses && verify_factorization(text, f);
    check("witness validity and text coverage", witnesses);

    bool round_trip = false;
    try {
        round_trip = decode(encode(results.front(), static_cast<std::uint64_t>(text.length()))) == text;
    } catch (const CodecError&) {
        round_trip = false;
    }
    check("round-trip decode", round_trip);

    if (text.length() <= oracle_cap) {
        const Factorization naive = factorize_naive(text, oracle_cap);
        const Factorization via_lpf = lz_from_lpf(text, lpf_brute_force(text, oracle_cap));
        auto lengths = [](const Factorization& f) {
            std::vector<Idx> out;
            for (const auto& factor : f.factors) out.push_back(factor.length);
            return out;
        };
        const bool oracle_ok = lengths(naive) == lengths(results.front()) &&
                               lengths(via_lpf) == lengths(results.front());
        check("oracle agreement (factor length sequences)", oracle_ok);
    } else {
        std::cout << "SKIP  oracle agreement (input exceeds oracle cap " << oracle_cap << ")\n";
    }

    return all_ok ? kExitOk : kExitVerifyFailure;
}

struct BenchRow {
    std::string file;
    RunReport report;
    CorpusStats stats;
};

json row_to_json(const BenchRow& row) {
    return json{{"file", row.file},
                {"variant", row.report.variant},
                {"N", row.report.text_length},
                {"n", row.report.factor_count},
                {"avg_len", row.stats.average_factor_length},
                {"s_max", row.stats.s_max},
                {"comparisons", row.report.comparison_count},
                {"modeled_bytes", row.report.modeled_bytes},
                {"post_sa_seconds_mean", row.report.post_sa_seconds},
                {"alphabet_count", row.stats.alphabet_count},
                {"sa_build_seconds", row.report.sa_build_seconds},
                {"actual_peak_bytes", row.report.actual_peak_bytes},
                {"repeats", row.report.repeats}};
}

std::string row_to_csv(const BenchRow& row) {
    std::ostringstream line;
    line << row.file << ',' << row.report.variant << ',' << row.report.text_length << ','
         << row.report.factor_count << ',' << std::fixed << std::setprecision(2)
         << row.stats.average_factor_length << std::defaultfloat << ','
         << row.stats.s_max << ',' << row.report.comparison_count << ','
         << row.report.modeled_bytes << ',' << row.report.post_sa_seconds << ','
         << row.stats.alphabet_count << ',' << row.report.sa_build_seconds << ','
         << row.report.actual_peak_bytes << ',' << row.report.repeats;
    return line.str();
}

constexpr const char* kCsvHeader =
    "file,variant,N,n,avg_len,s_max,comparisons,modeled_bytes,post_sa_seconds_mean,"
    "alphabet_count,sa_build_seconds,actual_peak_bytes,repeats";

int cmd_bench(const std::vector<std::string>& inputs, const std::string& variants_arg,
              int repeats, const std::string& format, const std::string& output) {
    std::vector<Variant> variants;
    std::stringstream splitter(variants_arg);
    for (std::string name; std::getline(splitter, name, ',');) {
        const auto v = parse_variant(name);
        if (!v) {
            std::cerr << "unknown variant in --variants: " << name << "\n";
            return kExitUsage;
        }
        variants.push_back(*v);
    }

    std::vector<BenchRow> rows;
    for (const std::string& input : inputs) {
        const Text text = Text::load(input);

        const auto sa_start = std::chrono::steady_clock::now();
        const SuffixArrayBundle bundle = build_sa(text);
        const double sa_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - sa_start).count();

        // File-level statistics; the stack scan supplies s_max.
        RunReport stats_report;
        const Factorization stats_f = factorize_with_sa(text, bundle.sa, Variant::bgs, &stats_report);
        const CorpusStats stats = compute_stats(text, stats_f, stats_report);

        for (Variant v : variants) {
            RunReport report;
            double total_post_sa = 0.0;
            for (int r = 0; r < repeats; ++r) {
                const Factorization f = factorize_with_sa(text, bundle.sa, v, &report);
                total_post_sa += report.post_sa_seconds;
                if (f.count() != stats.factor_count) {
                    std::cerr << "internal error: variant " << to_string(v)
                              << " factor count differs on " << input << "\n";
                    return kExitVerifyFailure;
                }
            }
            report.post_sa_seconds = total_post_sa / repeats;
            report.sa_build_seconds = sa_seconds;
            report.repeats = repeats;
            rows.push_back(BenchRow{input, report, stats});
        }
    }

    std::ostringstream body;
    if (format == "json") {
        json out = json::array();
        for (const auto& row : rows) out.push_back(row_to_json(row));
        body << out.dump(2) << "\n";
    } else {
        body << kCsvHeader << "\n";
        for (const auto& row : rows) body << row_to_csv(row) << "\n";
    }
    if (output.empty())
        std::cout << body.str();
    else
        write_output_file(output, body.str());
    return kExitOk;
}

int cmd_gen(const std::string& kind, std::int64_t length, int alphabet, std::uint64_t seed,
            const std::string& output) {
    Text text;
    if (kind == "fibonacci") {
        text = gen_fibonacci(length);
        std::cout << "generated fibonacci word, length " << text.length() << "\n";
    } else if (kind == "random") {
        text = gen_random(length, alphabet, seed);
        std::cout << "generated random text, length " << text.length() << ", alphabet " << alphabet
                  << ", prng " << kRandomGeneratorName << ", seed " << seed << "\n";
    } else {
        std::cerr << "unknown kind: " << kind << "\n";
        return kExitUsage;
    }
    text.save(output);
    std::cout << "wrote " << output << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LZ77 factorization toolkit"};
    app.require_subcommand(1);

    // factorize
    auto* fac = app.add_subcommand("factorize", "factorize a file and write the encoded stream");
    std::string fac_input, fac_output, fac_format = "binary", fac_variant = "ibgt";
    fac->add_option("input", fac_input, "input file")->required();
    fac->add_option("--variant", fac_variant,
                    "bgs|bgl|bgt|ibgs|ibgl|ibgt|naive|lpf-oracle");
    fac->add_option("-o,--output", fac_output, "output path (default: <input>.lz)");
    fac->add_option("--format", fac_format, "binary|text")
        ->check(CLI::IsMember({"binary", "text"}));
    Idx fac_cap = oracle_cap_default();
    fac->add_option("--oracle-cap", fac_cap, "size cap for the naive/lpf-oracle variants");

    // verify
    auto* ver = app.add_subcommand("verify", "cross-check all variants and the round trip");
    std::string ver_input;
    ver->add_option("input", ver_input, "input file")->required();
    Idx ver_cap = oracle_cap_default();
    ver->add_option("--oracle-cap", ver_cap, "size cap for the oracle cross-check");

    // bench
    auto* ben = app.add_subcommand("bench", "benchmark variants over input files");
    std::vector<std::string> ben_inputs;
    std::string ben_variants = "bgs,bgl,bgt,ibgs,ibgl,ibgt";
    std::string ben_format = "csv", ben_output;
    int ben_repeats = 10;
    ben->add_option("inputs", ben_inputs, "input files")->required();
    ben->add_option("--variants", ben_variants, "comma-separated variant list");
    ben->add_option("--repeats", ben_repeats, "timing repeats per row")->check(CLI::PositiveNumber);
    ben->add_option("--format", ben_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    ben->add_option("-o,--output", ben_output, "write the table here instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a corpus file");
    std::string gen_kind, gen_output;
    std::int64_t gen_length = 0;
    int gen_alphabet = 2;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "fibonacci|random")->required();
    gen->add_option("--length", gen_length,
                    "exact length (random) or minimum length (fibonacci)")
        ->required();
    gen->add_option("--alphabet", gen_alphabet, "alphabet size 2..256 (random)");
    gen->add_option("--seed", gen_seed, "prng seed (random)");
    gen->add_option("-o,--output", gen_output, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fac->parsed()) return cmd_factorize(fac_input, fac_variant, fac_output, fac_format, fac_cap);
        if (ver->parsed()) return cmd_verify(ver_input, ver_cap);
        if (ben->parsed()) return cmd_bench(ben_inputs, ben_variants, ben_repeats, ben_format, ben_output);
        if (gen->parsed()) return cmd_gen(gen_kind, gen_length, gen_alphabet, gen_seed, gen_output);
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
