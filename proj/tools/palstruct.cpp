// palstruct — compress, index and query palindromic structure from the
// command line.  Exit codes: 0 ok, 1 a verification check failed, 2 usage
// or I/O trouble.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palstruct/codec.hpp"
#include "palstruct/corpus.hpp"
#include "palstruct/errors.hpp"
#include "palstruct/index.hpp"
#include "palstruct/manacher.hpp"
#include "palstruct/reconstruct.hpp"
#include "palstruct/runs.hpp"
#include "palstruct/serial.hpp"

using namespace palstruct;

namespace {

std::vector<uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw error("cannot read '" + path + "'");
    return bytes;
}

std::string read_text(const std::string& path) {
    const auto bytes = read_bytes(path);
    return std::string(bytes.begin(), bytes.end());
}

void write_bytes(const std::string& path, const void* data, size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out.write(static_cast<const char*>(data), std::streamsize(size));
    if (!out) throw error("cannot write '" + path + "'");
}

void write_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
    write_bytes(path, bytes.data(), bytes.size());
}

// array container: "PALS" | u64 n | u32 length per center
std::vector<uint8_t> to_pals_bytes(const pal_array& a) {
    byte_writer w;
    w.tag("PALS");
    w.u64(a.n);
    for (uint32_t len : a.lengths) w.u32(len);
    return std::move(w.out);
}

pal_array from_pals_bytes(const std::vector<uint8_t>& bytes) {
    byte_reader r(bytes);
    r.expect_tag("PALS");
    pal_array a;
    a.n = size_t(r.u64());
    if (a.n > (size_t(1) << 31)) throw corrupt_stream_error("array length out of range");
    const size_t centers = a.n == 0 ? 0 : 2 * a.n - 1;
    a.lengths.reserve(centers);
    for (size_t c = 0; c < centers; ++c) a.lengths.push_back(r.u32());
    if (!r.done()) throw corrupt_stream_error("trailing bytes after the array");
    a.validate();
    return a;
}

std::string pals_to_line(const pal_array& a) {
    std::string out;
    for (size_t c = 0; c < a.centers(); ++c) {
        if (c) out += ' ';
        out += std::to_string(a[c]);
    }
    out += '\n';
    return out;
}

// ARRAYFILE is either the PALS container or whitespace-separated decimals
pal_array load_array_file(const std::string& path) {
    const auto bytes = read_bytes(path);
    if (bytes.size() >= 4 && std::string(bytes.begin(), bytes.begin() + 4) == "PALS")
        return from_pals_bytes(bytes);
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    std::vector<uint32_t> lengths;
    uint64_t v;
    while (in >> v) {
        if (v > UINT32_MAX) throw validation_error("length value out of range");
        lengths.push_back(uint32_t(v));
    }
    if (!in.eof()) throw validation_error("'" + path + "' is neither a PALS file nor numbers");
    if (lengths.size() % 2 == 0)
        throw validation_error("an array over n characters has 2n-1 centers");
    pal_array a{(lengths.size() + 1) / 2, std::move(lengths)};
    a.validate();
    return a;
}

uint64_t env_seed_default() {
    if (const char* env = std::getenv("PALSTRUCT_SEED")) return std::strtoull(env, nullptr, 0);
    return 42;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_bytes(out_path, text.data(), text.size());
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_verify(const std::string& path) {
    const std::string text = read_text(path);
    const pal_array a = manacher(text);
    bool all_ok = true;
    const auto report = [&all_ok](const std::string& name, bool ok, const std::string& why = "") {
        all_ok &= ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !why.empty()) std::cout << ": " << why;
        std::cout << '\n';
    };

    report("scan-vs-quadratic", brute_force_pals(text) == a);
    report("quadratic-parallel", brute_force_pals_parallel(text) == a);

    bool codec_ok = false, container_ok = false;
    std::string codec_why;
    try {
        const compact_stream s = encode_compact(a);
        codec_ok = decode_compact(s) == a;
        container_ok = from_pcpl_bytes(to_pcpl_bytes(s)) == s;
    } catch (const error& e) {
        codec_why = e.what();
    }
    report("codec-round-trip", codec_ok, codec_why);
    report("codec-container", container_ok, codec_why);

    bool periodic_ok = true;
    std::string periodic_why;
    try {
        for (const pal_run& r : detect_runs(text, a)) {
            const uint64_t p = r.period();
            const uint64_t lo = 2 * uint64_t(r.start);
            const uint64_t hi = 2 * (uint64_t(r.start) + r.covered() - 1);
            for (uint64_t c = lo; c <= hi && periodic_ok; ++c) {
                const uint32_t len = a[size_t(c)];
                const bool contained = len > 0 && span_start(size_t(c), len) >= r.start &&
                                       span_end(size_t(c), len) < r.start + r.covered();
                if (is_centric(r, size_t(c))) {
                    if (run_length_at(r, size_t(c), text.size()) != len) {
                        periodic_ok = false;
                        periodic_why = "descriptor length off at center " + std::to_string(c);
                    }
                } else if (contained && c > lo && c < hi) {
                    // non-centric contained palindromes stay short ...
                    if (len >= p) {
                        periodic_ok = false;
                        periodic_why = "long non-centric palindrome at center " + std::to_string(c);
                    }
                }
                // ... so anything at least twice the period is centric
                if (contained && len >= 2 * p && !is_centric(r, size_t(c))) {
                    periodic_ok = false;
                    periodic_why = "long palindrome escapes the stretch at " + std::to_string(c);
                }
            }
        }
    } catch (const error& e) {
        periodic_ok = false;
        periodic_why = e.what();
    }
    report("periodic-descriptors", periodic_ok, periodic_why);

    bool index_ok = false, serial_ok = false;
    std::string index_why;
    try {
        const pal_index ix = pal_index::build(text, a);
        index_ok = ix.decode_all() == a;
        const auto bytes = ix.save();
        serial_ok = pal_index::load(bytes).save() == bytes;
    } catch (const error& e) {
        index_why = e.what();
    }
    report("index-exactness", index_ok, index_why);
    report("index-serialization", serial_ok, index_why);

    bool rec_ok = false;
    std::string rec_why;
    try {
        const std::string r = reconstruct_min(a);
        rec_ok = manacher(r) == a;
        if (rec_ok && !r.empty()) {
            unsigned sigma = 0;
            for (char ch : r) sigma = std::max(sigma, unsigned(ch - 'a') + 1);
            size_t bound = 2;
            for (size_t m = r.size(); m > 1; m /= 2) ++bound;
            if (sigma > bound) {
                rec_ok = false;
                rec_why = "rebuilt alphabet too large";
            }
        }
    } catch (const error& e) {
        rec_why = e.what();
    }
    report("reconstruction", rec_ok, rec_why);

    return all_ok ? 0 : 1;
}

void cmd_stats(const std::string& path) {
    const pal_index ix = pal_index::load(read_bytes(path));
    const index_stats st = ix.stats();
    using json = nlohmann::json;

    std::cout << json{{"n", st.n}, {"centers", st.centers}}.dump() << '\n';
    const std::pair<const char*, uint64_t> parts[] = {
        {"plain-store", st.bits_plain},     {"period-store", st.bits_period},
        {"centric-bits", st.bits_centric},  {"class-marks", st.bits_marks},
        {"stretch-records", st.bits_records}, {"exception-list", st.bits_exceptions},
    };
    for (const auto& [name, bits] : parts)
        std::cout << json{{"component", name}, {"bits", bits}}.dump() << '\n';
    std::cout << json{{"bits_total", st.space_bits},
                      {"bits_per_char", st.n ? double(st.space_bits) / double(st.n) : 0.0},
                      {"stretch_records", st.stretch_records},
                      {"centric_centers", st.centric_centers},
                      {"exceptions", st.exceptions}}
                     .dump()
              << '\n';

    std::map<size_t, uint64_t> histogram;
    for (size_t c = 0; c < st.centers; ++c) {
        size_t hops = 0;
        ix.length_at(uint32_t(c), &hops);
        ++histogram[hops];
    }
    json hops_json = json::object();
    for (const auto& [hops, count] : histogram) hops_json[std::to_string(hops)] = count;
    std::cout << json{{"hop_histogram", hops_json}}.dump() << '\n';
}

void cmd_bench(uint64_t seed) {
    std::cout << "corpus,n,sigma,codec_bits_per_n,index_bits_per_n,max_hops,exceptions_pct,"
                 "manacher_ms,oracle_serial_ms,oracle_parallel_ms,build_ms,query_ns\n";
    const auto row = [](const std::string& corpus, const std::string& text, unsigned sigma) {
        const size_t n = text.size();
        auto t0 = std::chrono::steady_clock::now();
        const pal_array a = manacher(text);
        const double t_man = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const pal_array serial = brute_force_pals(text);
        const double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const pal_array parallel = brute_force_pals_parallel(text);
        const double t_parallel = ms_since(t0);
        if (serial != a || parallel != a) throw error("oracle disagreement on " + corpus);

        const compact_stream cs = encode_compact(a);
        t0 = std::chrono::steady_clock::now();
        const pal_index ix = pal_index::build(text, a);
        const double t_build = ms_since(t0);

        const index_stats st = ix.stats();
        size_t worst = 0;
        t0 = std::chrono::steady_clock::now();
        for (size_t c = 0; c < st.centers; ++c) {
            size_t hops = 0;
            ix.length_at(uint32_t(c), &hops);
            worst = std::max(worst, hops);
        }
        const double t_query = ms_since(t0) * 1e6 / double(st.centers ? st.centers : 1);

        std::ostringstream line;
        line << corpus << ',' << n << ',' << sigma << ','
             << double(cs.bit_length) / double(n ? n : 1) << ','
             << double(st.space_bits) / double(n ? n : 1) << ',' << worst << ','
             << 100.0 * double(st.exceptions) / double(st.centers ? st.centers : 1) << ','
             << t_man << ',' << t_serial << ',' << t_parallel << ',' << t_build << ','
             << t_query;
        std::cout << line.str() << '\n';
    };

    for (const size_t n : {size_t(1) << 14, size_t(1) << 16, size_t(1) << 18}) {
        row("random", gen_random(n, 2, seed), 2);
        row("random", gen_random(n, 26, seed + 1), 26);
    }
    row("periodic", gen_periodic("a", "b", (1u << 13) - 1), 2);
    row("zimin", gen_zimin(14), 14);
    row("fibonacci", gen_fibonacci(size_t(1) << 14, seed), 2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindromic structure toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // pals
    auto* pals = app.add_subcommand("pals", "print or dump the length array of a text file");
    std::string pals_file, pals_out;
    bool pals_binary = false;
    pals->add_option("file", pals_file, "input text (raw bytes)")->required();
    pals->add_flag("--binary", pals_binary, "write the PALS container instead of decimals");
    pals->add_option("--out", pals_out, "write here instead of stdout");
    pals->callback([&] {
        const pal_array a = manacher(read_text(pals_file));
        if (pals_binary) {
            const auto bytes = to_pals_bytes(a);
            if (pals_out.empty())
                std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                                std::streamsize(bytes.size()));
            else
                write_bytes(pals_out, bytes);
        } else {
            emit(pals_to_line(a), pals_out);
        }
    });

    // encode / decode
    auto* enc = app.add_subcommand("encode", "compress a text's length array into a PCPL file");
    std::string enc_in, enc_out;
    enc->add_option("file", enc_in, "input text")->required();
    enc->add_option("out", enc_out, "output PCPL path")->required();
    enc->callback(
        [&] { write_bytes(enc_out, to_pcpl_bytes(encode_compact(manacher(read_text(enc_in))))); });

    auto* dec = app.add_subcommand("decode", "expand a PCPL file back into a PALS array");
    std::string dec_in, dec_out;
    dec->add_option("in", dec_in, "input PCPL path")->required();
    dec->add_option("out", dec_out, "output PALS path")->required();
    dec->callback(
        [&] { write_bytes(dec_out, to_pals_bytes(decode_compact(from_pcpl_bytes(read_bytes(dec_in))))); });

    // build / query
    auto* build = app.add_subcommand("build", "build the queryable index for a text file");
    std::string build_in, build_out;
    build->add_option("file", build_in, "input text")->required();
    build->add_option("out", build_out, "output .palz path")->required();
    build->callback([&] { write_bytes(build_out, pal_index::build(read_text(build_in)).save()); });

    auto* query = app.add_subcommand("query", "look up palindrome lengths in a .palz index");
    std::string query_in;
    int64_t query_center = -1;
    bool query_all = false;
    query->add_option("in", query_in, "index path")->required();
    auto* copt = query->add_option("--center", query_center, "augmented center to look up");
    query->add_flag("--all", query_all, "print every center");
    copt->excludes("--all");
    query->callback([&] {
        const pal_index ix = pal_index::load(read_bytes(query_in));
        if (query_all) {
            std::cout << pals_to_line(ix.decode_all());
            return;
        }
        if (query_center < 0) throw error("pass --center C or --all");
        if (uint64_t(query_center) >= ix.centers())
            throw bounds_error("center " + std::to_string(query_center) +
                               " out of range (index has " + std::to_string(ix.centers()) +
                               " centers)");
        std::cout << ix.length_at(uint32_t(query_center)) << '\n';
    });

    // gen
    auto* gen = app.add_subcommand("gen", "emit a deterministic test text");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::string gen_out;
    gen->add_option("--out", gen_out, "write the text here instead of stdout");

    auto* gz = gen->add_subcommand("zimin", "nested word over fresh letters");
    unsigned gz_k = 3;
    gz->add_option("--k", gz_k, "nesting degree")->required();
    gz->callback([&] { emit(gen_zimin(gz_k), gen_out); });

    auto* gp = gen->add_subcommand("periodic", "(q0 q1)^reps q0");
    std::string gp_q0, gp_q1;
    uint32_t gp_reps = 2;
    gp->add_option("--q0", gp_q0, "nonempty palindromic factor")->required();
    gp->add_option("--q1", gp_q1, "palindromic factor, may be empty");
    gp->add_option("--reps", gp_reps, "repetitions of q0 q1")->required();
    gp->callback([&] { emit(gen_periodic(gp_q0, gp_q1, gp_reps), gen_out); });

    auto* gr = gen->add_subcommand("random", "uniform letters from a seeded xorshift64*");
    uint64_t gr_n = 0, gr_seed = env_seed_default();
    unsigned gr_sigma = 2;
    gr->add_option("--n", gr_n, "length")->required();
    gr->add_option("--sigma", gr_sigma, "alphabet size 1..26")->required();
    gr->add_option("--seed", gr_seed, "generator seed (default 42, or PALSTRUCT_SEED)");
    gr->callback([&] { emit(gen_random(size_t(gr_n), gr_sigma, gr_seed), gen_out); });

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "smallest text matching a length array");
    std::string rec_in;
    rec->add_option("arrayfile", rec_in, "PALS container or whitespace-separated lengths")
        ->required();
    rec->callback([&] {
        const std::string text = reconstruct_min(load_array_file(rec_in));
        unsigned sigma = 0;
        for (char ch : text) sigma = std::max(sigma, unsigned(ch - 'a') + 1);
        std::cout << text << '\n' << sigma << '\n';
    });

    // verify / stats / bench
    auto* ver = app.add_subcommand("verify", "cross-check every component on a text file");
    std::string ver_in;
    ver->add_option("file", ver_in, "input text")->required();
    ver->callback([&] { rc = cmd_verify(ver_in); });

    auto* stats = app.add_subcommand("stats", "print a space report for a .palz index");
    std::string stats_in;
    stats->add_option("in", stats_in, "index path")->required();
    stats->callback([&] { cmd_stats(stats_in); });

    auto* bench = app.add_subcommand("bench", "CSV timings over generated corpora");
    uint64_t bench_seed = env_seed_default();
    bench->add_option("--seed", bench_seed, "generator seed (default 42, or PALSTRUCT_SEED)");
    bench->callback([&] { cmd_bench(bench_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "palstruct: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "palstruct: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
