// Times the pruned (OpenMP-parallel) Betti oracle against the naive serial
// reference on generated forest corpora, verifying agreement as it goes.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facetforest/betti_oracle.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/generator.hpp"

using namespace facetforest;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

struct Row {
    std::string label;
    double pruned_ms = 0, serial_ms = 0;
    int count = 0;
};

Row run_corpus(const std::string& label, const std::vector<Complex>& corpus, bool parallel) {
    Row row;
    row.label = label;
    row.count = static_cast<int>(corpus.size());
    OracleOptions pruned;
    pruned.parallel = parallel;
    auto t0 = clock_type::now();
    std::vector<BettiTable> fast;
    fast.reserve(corpus.size());
    for (const Complex& c : corpus) fast.push_back(betti_oracle(c, pruned));
    row.pruned_ms = ms_since(t0);

    t0 = clock_type::now();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        BettiTable ref = betti_oracle_serial(corpus[k]);
        if (ref != fast[k]) {
            std::cerr << "MISMATCH on " << label << " #" << k << ": " << render_ideal(corpus[k]) << "\n";
            std::exit(1);
        }
    }
    row.serial_ms = ms_since(t0);
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: pruned parallel Betti oracle vs naive serial reference"};
    std::uint64_t seed = 2024;
    int count = 40;
    bool no_parallel = false;
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--count", count, "Complexes per size class")->capture_default_str();
    app.add_flag("--no-parallel", no_parallel, "Run the pruned oracle single-threaded too");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    struct Class {
        std::string label;
        GenOptions opts;
    };
    std::vector<Class> classes{
        {"small  (<=5 facets, <=10 vertices)", {5, 10, 4, false}},
        {"medium (<=7 facets, <=13 vertices)", {7, 13, 4, false}},
        {"large  (<=9 facets, <=16 vertices)", {9, 16, 5, false}},
    };

    std::cout << "corpus                                 n   pruned(ms)   serial(ms)   speedup\n";
    for (const Class& cls : classes) {
        std::vector<Complex> corpus;
        for (int k = 0; k < count; ++k) corpus.push_back(random_forest(rng, cls.opts));
        Row row = run_corpus(cls.label, corpus, !no_parallel);
        double speedup = row.pruned_ms > 0 ? row.serial_ms / row.pruned_ms : 0;
        std::printf("%-36s %4d   %10.2f   %10.2f   %6.2fx\n", row.label.c_str(), row.count, row.pruned_ms,
                    row.serial_ms, speedup);
    }
    std::cout << "all tables agreed between the two implementations\n";
    return 0;
}
