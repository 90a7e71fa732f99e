/*
 * bwtkit.cpp
 *
 * Command line front end. Subcommands:
 *
 *   build-bwt  build the BWT of a small collection through the
 *              reference construction (quadratic; test corpora only)
 *   lcp        induce the LCP array from a BWT file
 *   merge      merge two BWT files via the document array, optionally
 *              streaming the merged BWT and the LCP of the union
 *   verify     recompute everything with the reference implementation
 *              and diff against the given artifact files
 *   stats      basic numbers about a BWT file
 */

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bwtkit/io.hpp"

namespace {

std::uint8_t parse_terminator(const std::string& s) {
    if (s.size() == 1) return std::uint8_t(s[0]);
    return std::uint8_t(std::stoul(s, nullptr, 0)); // accepts 0x23 or 35
}

bwtkit::io::collection_format parse_format(const std::string& s) {
    if (s == "lines") return bwtkit::io::collection_format::lines;
    if (s == "fasta") return bwtkit::io::collection_format::fasta;
    throw CLI::ValidationError("--format must be 'lines' or 'fasta'");
}

} // namespace

int main(int argc, char** argv) {
    using namespace bwtkit;

    CLI::App app{"bwtkit: LCP construction and BWT merging for string collections"};
    app.require_subcommand(1);

    std::string format = "lines";
    std::string terminator = "#";
    std::string algorithm = "auto";
    unsigned lcp_bytes = 4;
    std::string backend = "auto";
    bool packed_da = true;

    /* build-bwt */
    io::build_bwt_options bopt;
    auto* build = app.add_subcommand("build-bwt", "build the BWT of a collection (reference, O(n^2 log n))");
    build->add_option("input", bopt.input, "collection file")->required();
    build->add_option("output", bopt.output, "output BWT file")->required();
    build->add_option("--format", format, "input format: lines|fasta");
    build->add_option("--terminator", terminator, "terminator byte (default '#')");

    /* lcp */
    io::lcp_options lopt;
    auto* lcp = app.add_subcommand("lcp", "induce the LCP array from a BWT file");
    lcp->add_option("bwt", lopt.bwt_in, "input BWT file")->required();
    lcp->add_option("lcp", lopt.lcp_out, "output LCP file")->required();
    lcp->add_option("--lcp-bytes", lcp_bytes, "bytes per LCP value: 1,2,4,8 (default 4)");
    lcp->add_option("--algorithm", algorithm, "auto|bgos|stack|queue (default auto)");
    lcp->add_option("--backend", backend, "auto|wavelet|packed (default auto)");
    lcp->add_option("--terminator", terminator, "terminator byte (default '#')");

    /* merge */
    io::merge_options mopt;
    auto* merge = app.add_subcommand("merge", "merge two BWTs via the document array");
    merge->add_option("bwt1", mopt.bwt1_in, "first BWT file")->required();
    merge->add_option("bwt2", mopt.bwt2_in, "second BWT file")->required();
    merge->add_option("da", mopt.da_out, "output document array file")->required();
    merge->add_option("--bwt-out", mopt.bwt_out, "stream the merged BWT to this file");
    merge->add_option("--lcp-out", mopt.lcp_out, "compute the LCP of the union while merging");
    merge->add_option("--lcp-bytes", lcp_bytes, "bytes per LCP value (default 4)");
    merge->add_option("--algorithm", algorithm, "auto|bgos|stack|queue (default auto)");
    merge->add_option("--backend", backend, "auto|wavelet|packed (default auto)");
    merge->add_flag("--packed-da,!--no-packed-da", packed_da, "packed bit output (default on)");
    merge->add_option("--terminator", terminator, "terminator byte (default '#')");

    /* verify */
    io::verify_options vopt;
    auto* verify = app.add_subcommand("verify", "diff artifacts against the reference implementation");
    verify->add_option("--input", vopt.input, "collection file")->required();
    verify->add_option("--input2", vopt.input2, "second collection (pair/merge mode)");
    verify->add_option("--format", format, "input format: lines|fasta");
    verify->add_option("--bwt", vopt.bwt_file, "BWT file to check");
    verify->add_option("--lcp", vopt.lcp_file, "LCP file to check");
    verify->add_option("--da", vopt.da_file, "document array file to check");
    verify->add_option("--lcp-bytes", lcp_bytes, "bytes per LCP value (default 4)");
    verify->add_flag("--packed-da,!--no-packed-da", packed_da, "DA file is packed (default on)");
    verify->add_option("--terminator", terminator, "terminator byte (default '#')");

    /* stats */
    io::stats_options sopt;
    auto* stats = app.add_subcommand("stats", "print basic numbers about a BWT file");
    stats->add_option("bwt", sopt.bwt_in, "input BWT file")->required();
    stats->add_option("--terminator", terminator, "terminator byte (default '#')");

    CLI11_PARSE(app, argc, argv);

    try {
        std::uint8_t term = parse_terminator(terminator);
        if (build->parsed()) {
            bopt.format = parse_format(format);
            bopt.terminator = term;
            return io::run_build_bwt(bopt, std::cerr);
        }
        if (lcp->parsed()) {
            lopt.lcp_bytes = lcp_bytes;
            lopt.terminator = term;
            if (algorithm == "bgos" || algorithm == "queue")
                lopt.algorithm = lcp_strategy::bgos;
            else if (algorithm == "stack")
                lopt.algorithm = lcp_strategy::stack;
            else if (algorithm != "auto")
                throw CLI::ValidationError("--algorithm must be auto|bgos|stack|queue");
            if (backend == "wavelet")
                lopt.backend = io::backend_kind::wavelet;
            else if (backend == "packed")
                lopt.backend = io::backend_kind::packed;
            else if (backend != "auto")
                throw CLI::ValidationError("--backend must be auto|wavelet|packed");
            return io::run_lcp(lopt, std::cerr);
        }
        if (merge->parsed()) {
            mopt.lcp_bytes = lcp_bytes;
            mopt.packed_da = packed_da;
            mopt.terminator = term;
            if (algorithm == "queue") {
                mopt.algorithm = container_kind::queue;
            } else if (algorithm == "stack") {
                mopt.algorithm = container_kind::stack;
                mopt.node_algorithm = lcp_strategy::stack;
            } else if (algorithm == "bgos") {
                mopt.algorithm = container_kind::queue;
                mopt.node_algorithm = lcp_strategy::bgos;
            } else if (algorithm != "auto") {
                throw CLI::ValidationError("--algorithm must be auto|bgos|stack|queue");
            }
            if (backend == "wavelet")
                mopt.backend = io::backend_kind::wavelet;
            else if (backend == "packed")
                mopt.backend = io::backend_kind::packed;
            else if (backend != "auto")
                throw CLI::ValidationError("--backend must be auto|wavelet|packed");
            return io::run_merge(mopt, std::cerr);
        }
        if (verify->parsed()) {
            vopt.format = parse_format(format);
            vopt.lcp_bytes = lcp_bytes;
            vopt.packed_da = packed_da;
            vopt.terminator = term;
            return io::run_verify(vopt, std::cerr);
        }
        if (stats->parsed()) {
            sopt.terminator = term;
            return io::run_stats(sopt, std::cout);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "bwtkit: error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
